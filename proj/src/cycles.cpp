#include "linhg/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <climits>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace linhg {

std::string to_string(CycleKind k) { return k == CycleKind::berge ? "berge" : "linear"; }

// ---- family specs -----------------------------------------------------------

FamilySpec FamilySpec::berge_up_to(int k) {
    if (k < 2) throw std::invalid_argument("FamilySpec: Berge family needs k >= 2");
    FamilySpec f;
    for (int l = (k % 2 == 0) ? 2 : 3; l <= k; l += 2)
        f.entries.push_back({CycleKind::berge, l});
    return f;
}

FamilySpec FamilySpec::linear_up_to(int k) {
    if (k < 3) throw std::invalid_argument("FamilySpec: linear family needs k >= 3");
    FamilySpec f;
    for (int l = (k % 2 == 0) ? 4 : 3; l <= k; l += 2)
        f.entries.push_back({CycleKind::linear, l});
    return f;
}

namespace {

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("family spec: bad number '" + s + "'");
    return v;
}

void append_lengths(FamilySpec& f, CycleKind kind, const std::string& csv) {
    std::istringstream ss(csv);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ',')) {
        int l = parse_int(item);
        int min_len = kind == CycleKind::berge ? 2 : 3;
        if (l < min_len)
            throw std::invalid_argument("family spec: " + to_string(kind) + " length " +
                                        std::to_string(l) + " below minimum " +
                                        std::to_string(min_len));
        f.entries.push_back({kind, l});
        any = true;
    }
    if (!any) throw std::invalid_argument("family spec: empty length list");
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& spec) {
    FamilySpec f;
    std::istringstream ss(spec);
    std::string group;
    while (std::getline(ss, group, ';')) {
        // trim
        auto b = group.find_first_not_of(" \t");
        auto e = group.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        group = group.substr(b, e - b + 1);
        if (group == "none") {
            continue;  // explicit empty family
        } else if (group.rfind("berge:", 0) == 0) {
            append_lengths(f, CycleKind::berge, group.substr(6));
        } else if (group.rfind("linear:", 0) == 0) {
            append_lengths(f, CycleKind::linear, group.substr(7));
        } else if (group.rfind("Clin", 0) == 0) {
            auto sub = linear_up_to(parse_int(group.substr(4)));
            f.entries.insert(f.entries.end(), sub.entries.begin(), sub.entries.end());
        } else if (group.rfind("C", 0) == 0) {
            auto sub = berge_up_to(parse_int(group.substr(1)));
            f.entries.insert(f.entries.end(), sub.entries.begin(), sub.entries.end());
        } else {
            throw std::invalid_argument("family spec: unrecognized group '" + group + "'");
        }
    }
    return f;
}

std::string FamilySpec::to_string() const {
    std::vector<int> berge, linear;
    for (const auto& e : entries)
        (e.kind == CycleKind::berge ? berge : linear).push_back(e.length);
    for (auto* v : {&berge, &linear}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    auto csv = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    std::string out;
    if (!berge.empty()) out += "berge:" + csv(berge);
    if (!linear.empty()) out += (out.empty() ? "" : ";") + std::string("linear:") + csv(linear);
    if (out.empty()) out = "none";
    return out;
}

// ---- anchored depth-first search ---------------------------------------------

namespace {

inline int intersect_count(const Triple& a, const Triple& b) {
    int c = 0;
    for (int x : a) c += (x == b[0]) + (x == b[1]) + (x == b[2]);
    return c;
}

// exactly one common vertex and it equals v
inline bool intersect_exactly(const Triple& a, const Triple& b, int v) {
    int c = 0;
    bool has_v = false;
    for (int x : a) {
        bool in_b = (x == b[0]) | (x == b[1]) | (x == b[2]);
        c += in_b;
        has_v |= in_b && x == v;
    }
    return c == 1 && has_v;
}

inline bool contains(const Triple& t, int v) { return t[0] == v || t[1] == v || t[2] == v; }

struct Budget {
    std::atomic<std::uint64_t>& used;
    std::uint64_t limit;
    // small budgets are checked on every tick; large ones in chunks to keep
    // the shared counter off the hot path
    std::uint64_t chunk = limit < 0x1000u ? (limit ? limit : 1) : 0x1000u;
    std::uint64_t local = 0;
    bool hit = false;

    bool tick() {
        if (hit) return false;
        if (++local % chunk == 0) {
            if (used.fetch_add(chunk, std::memory_order_relaxed) + chunk >= limit) {
                hit = true;
                return false;
            }
        }
        return true;
    }
    void flush() { used.fetch_add(local % chunk, std::memory_order_relaxed); }
};

enum class AnchorOutcome { found, absent, aborted };

struct AnchorSearch {
    const TripleSystem& h;
    const std::vector<std::vector<int>>& inc;
    int k;
    bool linear;
    int anchor;
    bool restrict_above;  // all non-anchor edges must have index > anchor
    Budget& budget;

    std::vector<int> vs, es;
    std::vector<char> used_v, used_e;

    AnchorSearch(const TripleSystem& h_, const std::vector<std::vector<int>>& inc_, int k_,
                 bool linear_, int anchor_, bool restrict_above_, Budget& budget_)
        : h(h_), inc(inc_), k(k_), linear(linear_), anchor(anchor_),
          restrict_above(restrict_above_), budget(budget_),
          used_v(static_cast<size_t>(h_.n), 0), used_e(h_.edges.size(), 0) {}

    bool edge_admissible(int e, int i /* becomes h_{i} with shared vertex vs[i-1] */) const {
        if (used_e[static_cast<size_t>(e)]) return false;
        if (restrict_above && e < anchor) return false;
        if (!linear) return true;
        const Triple& t = h.edges[static_cast<size_t>(e)];
        // consecutive predecessor h_{i-1}: intersection exactly {v_i}
        if (!intersect_exactly(t, h.edges[static_cast<size_t>(es[static_cast<size_t>(i) - 2])],
                               vs[static_cast<size_t>(i) - 1]))
            return false;
        // all earlier edges must be disjoint
        for (size_t j = 0; j + 2 < static_cast<size_t>(i); ++j)
            if (intersect_count(t, h.edges[static_cast<size_t>(es[j])]) != 0) return false;
        return true;
    }

    bool closing_admissible(int e) const {
        if (used_e[static_cast<size_t>(e)]) return false;
        if (restrict_above && e < anchor) return false;
        const Triple& t = h.edges[static_cast<size_t>(e)];
        if (!contains(t, vs[0])) return false;
        if (!linear) return true;
        // h_k meets h_{k-1} exactly in v_k and h_1 exactly in v_1;
        // all other edges are disjoint from it
        if (!intersect_exactly(t, h.edges[static_cast<size_t>(es[static_cast<size_t>(k) - 2])],
                               vs[static_cast<size_t>(k) - 1]))
            return false;
        if (!intersect_exactly(t, h.edges[static_cast<size_t>(es[0])], vs[0])) return false;
        for (size_t j = 1; j + 2 < static_cast<size_t>(k); ++j)
            if (intersect_count(t, h.edges[static_cast<size_t>(es[j])]) != 0) return false;
        return true;
    }

    // vs holds v_1..v_i, es holds h_1..h_{i-1}
    bool extend(int i) {
        if (!budget.tick()) return false;
        int last = vs[static_cast<size_t>(i) - 1];
        if (i == k) {
            for (int e : inc[static_cast<size_t>(last)]) {
                if (!budget.tick()) return false;
                if (!closing_admissible(e)) continue;
                es.push_back(e);
                return true;
            }
            return false;
        }
        for (int e : inc[static_cast<size_t>(last)]) {
            if (!budget.tick()) return false;
            if (!edge_admissible(e, i)) continue;
            const Triple& t = h.edges[static_cast<size_t>(e)];
            es.push_back(e);
            used_e[static_cast<size_t>(e)] = 1;
            for (int u : t) {
                if (u == last || used_v[static_cast<size_t>(u)]) continue;
                vs.push_back(u);
                used_v[static_cast<size_t>(u)] = 1;
                if (extend(i + 1)) return true;
                used_v[static_cast<size_t>(u)] = 0;
                vs.pop_back();
                if (budget.hit) { es.pop_back(); used_e[static_cast<size_t>(e)] = 0; return false; }
            }
            used_e[static_cast<size_t>(e)] = 0;
            es.pop_back();
        }
        return false;
    }

    AnchorOutcome run() {
        const Triple& a = h.edges[static_cast<size_t>(anchor)];
        used_e[static_cast<size_t>(anchor)] = 1;
        for (int v1 : a) {
            for (int v2 : a) {
                if (v2 == v1) continue;
                vs.assign({v1, v2});
                es.assign({anchor});
                used_v.assign(used_v.size(), 0);
                used_v[static_cast<size_t>(v1)] = used_v[static_cast<size_t>(v2)] = 1;
                if (extend(2)) return AnchorOutcome::found;
                if (budget.hit) return AnchorOutcome::aborted;
            }
        }
        return AnchorOutcome::absent;
    }
};

struct RawResult {
    SearchStatus status;
    std::vector<int> vs, es;
    std::uint64_t expansions;
};

RawResult drive(const TripleSystem& h, int k, bool linear, int through, const SearchOptions& opts) {
    const int m = h.m();
    auto inc = incidence_lists(h);
    std::atomic<std::uint64_t> used{0};
    std::atomic<int> best_anchor{m};
    std::atomic<bool> exceeded{false};

    const int first = through >= 0 ? through : 0;
    const int last = through >= 0 ? through + 1 : m;
    const bool restrict_above = through < 0;

    std::vector<std::vector<int>> found_vs(static_cast<size_t>(m)), found_es(static_cast<size_t>(m));

#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel && last - first > 1)
    for (int a = first; a < last; ++a) {
        if (a >= best_anchor.load(std::memory_order_relaxed)) continue;
        Budget budget{used, opts.budget};
        AnchorSearch s(h, inc, k, linear, a, restrict_above, budget);
        AnchorOutcome out = s.run();
        budget.flush();
        if (out == AnchorOutcome::found) {
            found_vs[static_cast<size_t>(a)] = s.vs;
            found_es[static_cast<size_t>(a)] = s.es;
            int cur = best_anchor.load(std::memory_order_relaxed);
            while (a < cur && !best_anchor.compare_exchange_weak(cur, a)) {}
        } else if (out == AnchorOutcome::aborted) {
            exceeded.store(true, std::memory_order_relaxed);
        }
    }

    RawResult r;
    r.expansions = used.load();
    int win = best_anchor.load();
    if (win < m) {
        r.status = SearchStatus::found;
        r.vs = std::move(found_vs[static_cast<size_t>(win)]);
        r.es = std::move(found_es[static_cast<size_t>(win)]);
    } else {
        r.status = exceeded.load() ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    return r;
}

}  // namespace

BergeSearchResult find_berge_cycle(const TripleSystem& h, int k, const SearchOptions& opts) {
    if (k < 2) throw std::invalid_argument("find_berge_cycle: k must be >= 2");
    RawResult raw = drive(h, k, /*linear=*/false, /*through=*/-1, opts);
    BergeSearchResult res{raw.status, std::nullopt, raw.expansions};
    if (raw.status == SearchStatus::found)
        res.witness = BergeCycleWitness{k, std::move(raw.vs), std::move(raw.es)};
    return res;
}

LinearSearchResult find_linear_cycle(const TripleSystem& h, int k, const SearchOptions& opts) {
    if (k < 3) throw std::invalid_argument("find_linear_cycle: k must be >= 3");
    RawResult raw = drive(h, k, /*linear=*/true, /*through=*/-1, opts);
    LinearSearchResult res{raw.status, std::nullopt, raw.expansions};
    if (raw.status == SearchStatus::found)
        res.witness = LinearCycleWitness{k, std::move(raw.vs), std::move(raw.es)};
    return res;
}

BergeSearchResult find_berge_cycle_through(const TripleSystem& h, int k, int through,
                                           const SearchOptions& opts) {
    if (k < 2) throw std::invalid_argument("find_berge_cycle_through: k must be >= 2");
    if (through < 0 || through >= h.m())
        throw std::invalid_argument("find_berge_cycle_through: edge index out of range");
    RawResult raw = drive(h, k, false, through, opts);
    BergeSearchResult res{raw.status, std::nullopt, raw.expansions};
    if (raw.status == SearchStatus::found)
        res.witness = BergeCycleWitness{k, std::move(raw.vs), std::move(raw.es)};
    return res;
}

LinearSearchResult find_linear_cycle_through(const TripleSystem& h, int k, int through,
                                             const SearchOptions& opts) {
    if (k < 3) throw std::invalid_argument("find_linear_cycle_through: k must be >= 3");
    if (through < 0 || through >= h.m())
        throw std::invalid_argument("find_linear_cycle_through: edge index out of range");
    RawResult raw = drive(h, k, true, through, opts);
    LinearSearchResult res{raw.status, std::nullopt, raw.expansions};
    if (raw.status == SearchStatus::found)
        res.witness = LinearCycleWitness{k, std::move(raw.vs), std::move(raw.es)};
    return res;
}

namespace serial {

BergeSearchResult find_berge_cycle(const TripleSystem& h, int k, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.parallel = false;
    return linhg::find_berge_cycle(h, k, o);
}

LinearSearchResult find_linear_cycle(const TripleSystem& h, int k, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.parallel = false;
    return linhg::find_linear_cycle(h, k, o);
}

}  // namespace serial

// ---- witness verification -----------------------------------------------------

namespace {

bool verify_common(const TripleSystem& h, int k, const std::vector<int>& vs,
                   const std::vector<int>& es, int min_k) {
    if (k < min_k) return false;
    if (vs.size() != static_cast<size_t>(k) || es.size() != static_cast<size_t>(k)) return false;
    for (int v : vs)
        if (v < 0 || v >= h.n) return false;
    for (int e : es)
        if (e < 0 || e >= h.m())
            throw std::invalid_argument("verify_witness: edge index out of range");
    auto dup = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    };
    if (dup(vs) || dup(es)) return false;
    for (int i = 0; i < k; ++i) {
        const Triple& t = h.edges[static_cast<size_t>(es[static_cast<size_t>(i)])];
        if (!contains(t, vs[static_cast<size_t>(i)]) ||
            !contains(t, vs[static_cast<size_t>((i + 1) % k)]))
            return false;
    }
    return true;
}

}  // namespace

bool verify_witness(const TripleSystem& h, const BergeCycleWitness& w) {
    return verify_common(h, w.k, w.vertices, w.edge_indices, 2);
}

bool verify_witness(const TripleSystem& h, const LinearCycleWitness& w) {
    if (!verify_common(h, w.k, w.vertices, w.edge_indices, 3)) return false;
    const int k = w.k;
    for (int i = 0; i < k; ++i) {
        const Triple& a = h.edges[static_cast<size_t>(w.edge_indices[static_cast<size_t>(i)])];
        for (int j = i + 1; j < k; ++j) {
            const Triple& b = h.edges[static_cast<size_t>(w.edge_indices[static_cast<size_t>(j)])];
            int gap = j - i;
            bool consecutive = gap == 1 || gap == k - 1;
            if (consecutive) {
                // shared basic vertex: v_{j+1} for neighbors, v_1 for the wrap
                int shared = gap == 1 ? w.vertices[static_cast<size_t>(j)] : w.vertices[0];
                if (!intersect_exactly(a, b, shared)) return false;
            } else if (intersect_count(a, b) != 0) {
                return false;
            }
        }
    }
    return true;
}

// ---- family check ----------------------------------------------------------------

FamilyReport is_family_free(const TripleSystem& h, const FamilySpec& fam,
                            const SearchOptions& opts) {
    std::vector<size_t> order(fam.entries.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return fam.entries[a].length < fam.entries[b].length;
    });
    FamilyReport rep;
    for (size_t idx : order) {
        const auto& e = fam.entries[idx];
        if (e.kind == CycleKind::berge) {
            auto r = find_berge_cycle(h, e.length, opts);
            if (r.status == SearchStatus::found) {
                rep.free = false;
                rep.entry = idx;
                rep.witness = CycleWitness{*r.witness};
                return rep;
            }
            if (r.status == SearchStatus::budget_exceeded) rep.budget_exceeded = true;
        } else {
            auto r = find_linear_cycle(h, e.length, opts);
            if (r.status == SearchStatus::found) {
                rep.free = false;
                rep.entry = idx;
                rep.witness = CycleWitness{*r.witness};
                return rep;
            }
            if (r.status == SearchStatus::budget_exceeded) rep.budget_exceeded = true;
        }
    }
    return rep;
}

// ---- girth ------------------------------------------------------------------------

std::optional<int> girth(int n, const std::vector<Pair>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    int best = INT_MAX;
    std::vector<int> dist(static_cast<size_t>(n)), parent(static_cast<size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[static_cast<size_t>(root)] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[static_cast<size_t>(u)] >= best) break;
            for (int w : adj[static_cast<size_t>(u)]) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<size_t>(u)]) {
                    best = std::min(best, dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

std::optional<int> girth(const ShadowGraph& g) { return girth(g.n, g.edges); }

std::optional<int> girth(const BipartiteGraph& g) {
    std::vector<Pair> edges;
    edges.reserve(g.edges.size());
    for (const auto& [i, j] : g.edges) edges.emplace_back(i, g.n_left + j);
    return girth(g.n_left + g.n_right, edges);
}

// ---- witness serialization ----------------------------------------------------------

namespace {

std::string serialize_raw(const char* kind, int k, const std::vector<int>& vs,
                          const std::vector<int>& es) {
    std::ostringstream out;
    out << "cycle " << kind << ' ' << k << "\nv:";
    for (int v : vs) out << ' ' << v;
    out << "\nh:";
    for (int e : es) out << ' ' << e;
    out << '\n';
    return out.str();
}

}  // namespace

std::string serialize_witness(const BergeCycleWitness& w) {
    return serialize_raw("berge", w.k, w.vertices, w.edge_indices);
}

std::string serialize_witness(const LinearCycleWitness& w) {
    return serialize_raw("linear", w.k, w.vertices, w.edge_indices);
}

std::string serialize_witness(const CycleWitness& w) {
    return std::visit([](const auto& x) { return serialize_witness(x); }, w);
}

CycleWitness parse_witness(std::istream& in) {
    std::string word, kind;
    int k = 0;
    if (!(in >> word >> kind >> k) || word != "cycle")
        throw std::invalid_argument("witness: expected 'cycle <kind> <k>' header");
    auto read_list = [&](const char* tag) {
        std::string t;
        if (!(in >> t) || t != tag)
            throw std::invalid_argument(std::string("witness: expected '") + tag + "' list");
        std::vector<int> out;
        out.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            int x;
            if (!(in >> x)) throw std::invalid_argument("witness: truncated list");
            out.push_back(x);
        }
        return out;
    };
    auto vs = read_list("v:");
    auto es = read_list("h:");
    if (kind == "berge") return BergeCycleWitness{k, std::move(vs), std::move(es)};
    if (kind == "linear") return LinearCycleWitness{k, std::move(vs), std::move(es)};
    throw std::invalid_argument("witness: unknown kind '" + kind + "'");
}

CycleWitness parse_witness(const std::string& text) {
    std::istringstream in(text);
    return parse_witness(in);
}

}  // namespace linhg

#include "linhg/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linhg {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
}

// Skips '#' comments and blank lines, returns the next data line.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::vector<long long> parse_ints(const std::string& line, size_t expect, const char* what) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.fail() && !ss.eof())
        throw std::invalid_argument(std::string(what) + ": malformed line '" + line + "'");
    if (out.size() != expect)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expect) +
                                    " integers in line '" + line + "'");
    return out;
}

}  // namespace

TripleSystem TripleSystem::from_edges(int n, std::vector<Triple> raw) {
    if (n < 0) throw std::invalid_argument("TripleSystem: negative vertex count");
    for (auto& t : raw) {
        std::sort(t.begin(), t.end());
        for (int v : t) check_vertex(v, n, "TripleSystem");
        if (t[0] == t[1] || t[1] == t[2])
            throw std::invalid_argument("TripleSystem: repeated vertex in triple");
    }
    std::sort(raw.begin(), raw.end());
    if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
        throw std::invalid_argument("TripleSystem: duplicate triple");
    return TripleSystem{n, std::move(raw)};
}

BipartiteGraph BipartiteGraph::from_edges(int n_left, int n_right, std::vector<Pair> raw) {
    if (n_left < 0 || n_right < 0)
        throw std::invalid_argument("BipartiteGraph: negative part size");
    for (auto& [i, j] : raw) {
        check_vertex(i, n_left, "BipartiteGraph left");
        check_vertex(j, n_right, "BipartiteGraph right");
    }
    std::sort(raw.begin(), raw.end());
    if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
        throw std::invalid_argument("BipartiteGraph: duplicate edge");
    return BipartiteGraph{n_left, n_right, std::move(raw)};
}

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return Rational{num, den};
}

// ---- I/O -------------------------------------------------------------------

TripleSystem load_triple_system(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        throw std::invalid_argument("triple system: empty input");
    auto head = parse_ints(line, 2, "triple system header");
    long long n = head[0], m = head[1];
    if (n < 0 || m < 0)
        throw std::invalid_argument("triple system: negative header value");
    std::vector<Triple> raw;
    raw.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw std::invalid_argument("triple system: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        auto e = parse_ints(line, 3, "triple system edge");
        raw.push_back({static_cast<int>(e[0]), static_cast<int>(e[1]), static_cast<int>(e[2])});
    }
    return TripleSystem::from_edges(static_cast<int>(n), std::move(raw));
}

TripleSystem load_triple_system(const std::string& text) {
    std::istringstream in(text);
    return load_triple_system(in);
}

void save_triple_system(const TripleSystem& h, std::ostream& out) {
    out << h.n << ' ' << h.m() << '\n';
    for (const auto& t : h.edges) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

std::string save_triple_system(const TripleSystem& h) {
    std::ostringstream out;
    save_triple_system(h, out);
    return out.str();
}

BipartiteGraph load_bipartite_graph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        throw std::invalid_argument("bipartite graph: empty input");
    auto head = parse_ints(line, 3, "bipartite graph header");
    long long nl = head[0], nr = head[1], m = head[2];
    if (nl < 0 || nr < 0 || m < 0)
        throw std::invalid_argument("bipartite graph: negative header value");
    std::vector<Pair> raw;
    raw.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw std::invalid_argument("bipartite graph: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        auto e = parse_ints(line, 2, "bipartite graph edge");
        raw.emplace_back(static_cast<int>(e[0]), static_cast<int>(e[1]));
    }
    return BipartiteGraph::from_edges(static_cast<int>(nl), static_cast<int>(nr), std::move(raw));
}

BipartiteGraph load_bipartite_graph(const std::string& text) {
    std::istringstream in(text);
    return load_bipartite_graph(in);
}

void save_bipartite_graph(const BipartiteGraph& g, std::ostream& out) {
    out << g.n_left << ' ' << g.n_right << ' ' << g.m() << '\n';
    for (const auto& [i, j] : g.edges) out << i << ' ' << j << '\n';
}

std::string save_bipartite_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    save_bipartite_graph(g, out);
    return out.str();
}

// ---- structural operations --------------------------------------------------

std::optional<Pair> linearity_violation(const TripleSystem& h) {
    // Two triples share >= 2 vertices iff they share a pair. Map each pair
    // to the first edge covering it; a second covering edge is a violation.
    std::vector<std::pair<Pair, int>> cover;
    cover.reserve(h.edges.size() * 3);
    for (int i = 0; i < h.m(); ++i) {
        const auto& t = h.edges[i];
        cover.push_back({{t[0], t[1]}, i});
        cover.push_back({{t[0], t[2]}, i});
        cover.push_back({{t[1], t[2]}, i});
    }
    std::sort(cover.begin(), cover.end());
    std::optional<Pair> best;
    for (size_t i = 1; i < cover.size(); ++i) {
        if (cover[i].first == cover[i - 1].first) {
            Pair cand{cover[i - 1].second, cover[i].second};
            if (!best || cand < *best) best = cand;
        }
    }
    return best;
}

bool is_linear(const TripleSystem& h) { return !linearity_violation(h).has_value(); }

ShadowGraph shadow(const TripleSystem& h) {
    struct Entry { Pair p; int owner; };
    std::vector<Entry> entries;
    entries.reserve(h.edges.size() * 3);
    for (int i = 0; i < h.m(); ++i) {
        const auto& t = h.edges[i];
        entries.push_back({{t[0], t[1]}, i});
        entries.push_back({{t[0], t[2]}, i});
        entries.push_back({{t[1], t[2]}, i});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.p < b.p || (a.p == b.p && a.owner < b.owner); });
    ShadowGraph g;
    g.n = h.n;
    std::vector<int> owner;
    bool linear = true;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (!g.edges.empty() && g.edges.back() == entries[i].p) {
            linear = false;
            continue;
        }
        g.edges.push_back(entries[i].p);
        owner.push_back(entries[i].owner);
    }
    if (linear) g.owner = std::move(owner);
    return g;
}

DegreeProfile degrees(const TripleSystem& h) {
    DegreeProfile p;
    p.degree.assign(static_cast<size_t>(h.n), 0);
    for (const auto& t : h.edges)
        for (int v : t) ++p.degree[static_cast<size_t>(v)];
    p.d_max = p.degree.empty() ? 0 : *std::max_element(p.degree.begin(), p.degree.end());
    if (h.n > 0) p.d_avg = make_rational(3LL * h.m(), h.n);
    return p;
}

std::vector<std::vector<int>> incidence_lists(const TripleSystem& h) {
    std::vector<std::vector<int>> inc(static_cast<size_t>(h.n));
    for (int i = 0; i < h.m(); ++i)
        for (int v : h.edges[i]) inc[static_cast<size_t>(v)].push_back(i);
    return inc;
}

std::vector<int> neighborhood1(const TripleSystem& h, int v) {
    check_vertex(v, h.n, "neighborhood1");
    std::vector<char> mark(static_cast<size_t>(h.n), 0);
    for (const auto& t : h.edges) {
        if (t[0] == v || t[1] == v || t[2] == v)
            for (int u : t) mark[static_cast<size_t>(u)] = 1;
    }
    mark[static_cast<size_t>(v)] = 0;
    std::vector<int> out;
    for (int u = 0; u < h.n; ++u)
        if (mark[static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

std::vector<int> neighborhood2(const TripleSystem& h, int v) {
    check_vertex(v, h.n, "neighborhood2");
    std::vector<char> in_n1(static_cast<size_t>(h.n), 0);
    for (int u : neighborhood1(h, v)) in_n1[static_cast<size_t>(u)] = 1;
    std::vector<char> mark(static_cast<size_t>(h.n), 0);
    for (const auto& t : h.edges) {
        bool meets = in_n1[static_cast<size_t>(t[0])] || in_n1[static_cast<size_t>(t[1])] ||
                     in_n1[static_cast<size_t>(t[2])];
        if (!meets) continue;
        for (int u : t)
            if (u != v && !in_n1[static_cast<size_t>(u)]) mark[static_cast<size_t>(u)] = 1;
    }
    std::vector<int> out;
    for (int u = 0; u < h.n; ++u)
        if (mark[static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

TripleSystem peel_min_degree(const TripleSystem& h, long long frac_num, long long frac_den) {
    if (frac_num < 0 || frac_den <= 0)
        throw std::invalid_argument("peel_min_degree: bad fraction");
    std::vector<char> active(static_cast<size_t>(h.n), 1);
    std::vector<char> alive(h.edges.size(), 1);
    std::vector<int> deg(static_cast<size_t>(h.n), 0);
    auto inc = incidence_lists(h);
    for (const auto& t : h.edges)
        for (int v : t) ++deg[static_cast<size_t>(v)];
    long long n_active = h.n;
    long long m_cur = h.m();
    for (;;) {
        // average degree over active vertices is 3*m_cur / n_active;
        // peel v iff deg(v) < (frac_num/frac_den) * avg
        int victim = -1;
        for (int v = 0; v < h.n; ++v) {
            if (!active[static_cast<size_t>(v)]) continue;
            if (static_cast<long long>(deg[static_cast<size_t>(v)]) * frac_den * n_active <
                3LL * m_cur * frac_num) {
                victim = v;
                break;
            }
        }
        if (victim < 0) break;
        active[static_cast<size_t>(victim)] = 0;
        --n_active;
        for (int e : inc[static_cast<size_t>(victim)]) {
            if (!alive[static_cast<size_t>(e)]) continue;
            alive[static_cast<size_t>(e)] = 0;
            --m_cur;
            for (int u : h.edges[static_cast<size_t>(e)]) --deg[static_cast<size_t>(u)];
        }
        if (n_active == 0) break;
    }
    std::vector<Triple> kept;
    kept.reserve(static_cast<size_t>(m_cur));
    for (size_t i = 0; i < h.edges.size(); ++i)
        if (alive[i]) kept.push_back(h.edges[i]);
    return TripleSystem{h.n, std::move(kept)};
}

TripleSystem subsystem_excluding(const TripleSystem& h, const std::vector<int>& drop) {
    std::vector<char> gone(h.edges.size(), 0);
    for (int e : drop) {
        if (e < 0 || e >= h.m())
            throw std::invalid_argument("subsystem_excluding: edge index out of range");
        gone[static_cast<size_t>(e)] = 1;
    }
    std::vector<Triple> kept;
    kept.reserve(h.edges.size() - drop.size());
    for (size_t i = 0; i < h.edges.size(); ++i)
        if (!gone[i]) kept.push_back(h.edges[i]);
    return TripleSystem{h.n, std::move(kept)};
}

}  // namespace linhg

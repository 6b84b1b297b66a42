#include "linhg/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>

namespace linhg {

namespace {

std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

// A freshly added edge is checked with the anchor pinned on it: any cycle
// created by the addition must pass through the new edge, so this is a
// complete incremental test.
bool addition_ok(const TripleSystem& sys, int new_idx, const FamilySpec& family,
                 const SearchOptions& detect) {
    for (const auto& entry : family.entries) {
        if (entry.kind == CycleKind::berge) {
            auto r = find_berge_cycle_through(sys, entry.length, new_idx, detect);
            if (r.status == SearchStatus::budget_exceeded)
                throw std::runtime_error("search: cycle detection budget exceeded");
            if (r.status == SearchStatus::found) return false;
        } else {
            auto r = find_linear_cycle_through(sys, entry.length, new_idx, detect);
            if (r.status == SearchStatus::budget_exceeded)
                throw std::runtime_error("search: cycle detection budget exceeded");
            if (r.status == SearchStatus::found) return false;
        }
    }
    return true;
}

struct BranchResult {
    int size = -1;
    std::vector<int> chosen;  // candidate indices, increasing
    long long nodes = 0;
};

struct Searcher {
    int n;
    const std::vector<Triple>& cand;
    const FamilySpec& family;
    const SearchOptions& detect;
    std::atomic<int>& shared_best;

    std::vector<char> pair_used;
    std::vector<Triple> edges;
    std::vector<int> chosen;
    BranchResult best;

    Searcher(int nn, const std::vector<Triple>& cc, const FamilySpec& ff,
             const SearchOptions& dd, std::atomic<int>& sb)
        : n(nn), cand(cc), family(ff), detect(dd), shared_best(sb) {
        pair_used.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    }

    char& pu(int a, int b) { return pair_used[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)]; }

    bool pairs_free(const Triple& t) {
        return !pu(t[0], t[1]) && !pu(t[0], t[2]) && !pu(t[1], t[2]);
    }

    void set_pairs(const Triple& t, char val) {
        pu(t[0], t[1]) = val;
        pu(t[0], t[2]) = val;
        pu(t[1], t[2]) = val;
    }

    void record() {
        int sz = static_cast<int>(chosen.size());
        if (sz > best.size || (sz == best.size && chosen < best.chosen)) {
            best.size = sz;
            best.chosen = chosen;
        }
        int prev = shared_best.load(std::memory_order_relaxed);
        while (sz > prev &&
               !shared_best.compare_exchange_weak(prev, sz, std::memory_order_relaxed)) {
        }
    }

    void extend(int from) {
        record();
        int remaining = static_cast<int>(cand.size()) - from;
        for (int i = from; i < static_cast<int>(cand.size()); ++i, --remaining) {
            // prune only when the branch cannot reach the incumbent, so every
            // maximum system is still visited regardless of thread timing
            if (static_cast<int>(chosen.size()) + remaining <
                shared_best.load(std::memory_order_relaxed))
                return;
            const Triple& t = cand[static_cast<size_t>(i)];
            if (!pairs_free(t)) continue;
            edges.push_back(t);
            TripleSystem sys{n, edges};
            if (addition_ok(sys, static_cast<int>(edges.size()) - 1, family, detect)) {
                ++best.nodes;
                set_pairs(t, 1);
                chosen.push_back(i);
                extend(i + 1);
                chosen.pop_back();
                set_pairs(t, 0);
            }
            edges.pop_back();
        }
    }
};

ExtremalResult extremal_impl(int n, const FamilySpec& family, const ExtremalOptions& opts) {
    if (n < 0) throw std::invalid_argument("exact_extremal: negative n");
    if (n > opts.n_limit)
        throw std::invalid_argument("exact_extremal: n=" + std::to_string(n) +
                                    " exceeds limit " + std::to_string(opts.n_limit));
    ExtremalResult result;
    result.n = n;
    result.family = family;
    result.witness = TripleSystem{n, {}};
    std::vector<Triple> cand = all_triples(n);
    if (cand.empty()) return result;

    std::atomic<int> shared_best{0};
    int branches = static_cast<int>(cand.size());
    std::vector<BranchResult> per_branch(static_cast<size_t>(branches));

#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel && branches > 1)
    for (int b = 0; b < branches; ++b) {
        Searcher s(n, cand, family, opts.detect, shared_best);
        const Triple& t = cand[static_cast<size_t>(b)];
        s.edges.push_back(t);
        TripleSystem sys{n, s.edges};
        if (addition_ok(sys, 0, family, opts.detect)) {
            ++s.best.nodes;
            s.set_pairs(t, 1);
            s.chosen.push_back(b);
            s.extend(b + 1);
        }
        per_branch[static_cast<size_t>(b)] = std::move(s.best);
    }

    BranchResult winner;
    winner.size = 0;
    for (const auto& br : per_branch) {
        winner.nodes += br.nodes;
        if (br.size > winner.size ||
            (br.size == winner.size && br.size > 0 &&
             (winner.chosen.empty() || br.chosen < winner.chosen)))
            winner = BranchResult{br.size, br.chosen, winner.nodes};
    }
    result.max_edges = winner.size;
    result.nodes_explored = winner.nodes;
    std::vector<Triple> edges;
    for (int i : winner.chosen) edges.push_back(cand[static_cast<size_t>(i)]);
    result.witness = TripleSystem::from_edges(n, std::move(edges));
    return result;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) {
    // rejection sampling for a bias-free, implementation-independent draw
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    return r % k;
}

}  // namespace

ExtremalResult exact_extremal(int n, const FamilySpec& family, const ExtremalOptions& opts) {
    return extremal_impl(n, family, opts);
}

namespace serial {
ExtremalResult exact_extremal(int n, const FamilySpec& family, const ExtremalOptions& opts) {
    ExtremalOptions o = opts;
    o.parallel = false;
    o.detect.parallel = false;
    return linhg::exact_extremal(n, family, o);
}
}  // namespace serial

TripleSystem random_linear_system(int n, int target_m, const FamilySpec& avoid,
                                  std::uint64_t seed, const SearchOptions& detect) {
    if (n < 0) throw std::invalid_argument("random_linear_system: negative n");
    if (target_m < 0) throw std::invalid_argument("random_linear_system: negative target_m");
    TripleSystem sys{n, {}};
    if (n < 3 || target_m == 0) return sys;

    std::mt19937_64 rng(seed);
    std::vector<char> pair_used(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    auto pu = [&](int a, int b) -> char& {
        return pair_used[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)];
    };
    long long attempts = 50LL * target_m;
    while (sys.m() < target_m && attempts > 0) {
        --attempts;
        int a = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
        int b = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
        int c = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
        if (a == b || a == c || b == c) continue;
        Triple t{a, b, c};
        std::sort(t.begin(), t.end());
        if (pu(t[0], t[1]) || pu(t[0], t[2]) || pu(t[1], t[2])) continue;
        sys.edges.push_back(t);
        if (addition_ok(sys, sys.m() - 1, avoid, detect)) {
            pu(t[0], t[1]) = pu(t[0], t[2]) = pu(t[1], t[2]) = 1;
        } else {
            sys.edges.pop_back();
        }
    }
    std::sort(sys.edges.begin(), sys.edges.end());
    return sys;
}

}  // namespace linhg

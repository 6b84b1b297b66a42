// End-to-end acceptance checks. Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any of them fail.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "linhg/construct.hpp"
#include "linhg/cycles.hpp"
#include "linhg/diagnostics.hpp"
#include "linhg/search.hpp"
#include "oracles.hpp"

using namespace linhg;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

bool criterion1() {
    Timer t;
    bool ok = true;
    auto fam = FamilySpec::parse("berge:2,3,5");
    for (int s = 1; s <= 6 && ok; ++s) {
        auto h = construct_c5free(s);
        ok = h.n == 3 * s * s && h.m() == s * s * s && is_linear(h) &&
             is_family_free(h, fam).free;
    }
    ok = ok && t.seconds() < 10.0;
    std::printf("criterion 1 (construction exactness, s=1..6): %s (%.1fs)\n",
                ok ? "PASS" : "FAIL", t.seconds());
    return ok;
}

bool criterion2() {
    Timer t;
    bool ok = true;
    auto host = gen_projective_incidence(2);
    for (int q = 1; q <= 3 && ok; ++q) {
        auto h = construct_from_bipartite(host, q);
        ok = h.m() == 21 * q && is_linear(h);
        for (int len : {3, 5, 7})
            ok = ok && find_linear_cycle(h, len).status == SearchStatus::absent;
        if (q == 1)
            for (int len : {3, 5, 7}) ok = ok && !oracles::has_linear_cycle(h, len);
    }
    ok = ok && t.seconds() < 60.0;
    std::printf("criterion 2 (Heawood lift, q=1..3, no linear C3/C5/C7): %s (%.1fs)\n",
                ok ? "PASS" : "FAIL", t.seconds());
    return ok;
}

bool criterion3() {
    Timer t;
    bool ok = true;
    for (double n : {1e3, 1e6}) {
        double got = lower_bound_value(n, 1.0, 2.0) * 3.0 * std::sqrt(3.0);
        double want = std::pow(n, 1.5);
        ok = ok && std::abs(got - want) / want < 1e-12;
    }
    for (int k : {2, 3, 4, 6})
        for (double n : {1e3, 1e6}) {
            double a = corollary_bound(n, k);
            double b = lower_bound_value(n, 1.0, 1.0 + 1.0 / (k - 1));
            ok = ok && std::abs(a - b) / b < 1e-9;
        }
    std::printf("criterion 3 (bound-formula identities): %s (%.1fs)\n", ok ? "PASS" : "FAIL",
                t.seconds());
    return ok;
}

bool criterion4() {
    Timer t;
    bool ok = true;
    auto fam = FamilySpec::parse("berge:4");
    for (int n = 4; n <= 7 && ok; ++n) {
        auto r = exact_extremal(n, fam);
        double bound = n * std::sqrt(n + 9.0) / 6.0 + n / 2.0;
        ok = r.max_edges <= bound && is_family_free(r.witness, fam).free &&
             is_linear(r.witness) && r.witness.m() == r.max_edges;
    }
    ok = ok && t.seconds() < 300.0;
    std::printf("criterion 4 (C4-free extremal upper bound, n=4..7): %s (%.1fs)\n", ok ? "PASS" : "FAIL",
                t.seconds());
    return ok;
}

bool criterion5() {
    Timer t;
    bool ok = true;
    auto avoid5 = FamilySpec::parse("berge:5");
    auto avoid4 = FamilySpec::parse("berge:4");
    auto c5_claims = claims_for_context(ClaimContext::c5);
    auto c4_claims = claims_for_context(ClaimContext::c4);
    for (std::uint64_t seed = 0; seed < 500 && ok; ++seed) {
        int n = 8 + static_cast<int>(seed % 23);  // up to 30
        auto h = random_linear_system(n, n, avoid5, 1000 + seed);
        for (auto id : c5_claims)
            if (check_claim(h, id).status != ClaimStatus::pass) ok = false;
    }
    for (std::uint64_t seed = 0; seed < 500 && ok; ++seed) {
        int n = 8 + static_cast<int>(seed % 18);  // up to 25
        auto h = random_linear_system(n, n, avoid4, 2000 + seed);
        for (auto id : c4_claims)
            if (check_claim(h, id).status != ClaimStatus::pass) ok = false;
    }
    ok = ok && t.seconds() < 600.0;
    std::printf("criterion 5 (claim property suite, 500+500 random systems): %s (%.1fs)\n",
                ok ? "PASS" : "FAIL", t.seconds());
    return ok;
}

bool criterion6() {
    Timer t;
    bool ok = true;
    long long systems = 0;
    for (int n = 1; n <= 6 && ok; ++n) {
        for (const auto& h : oracles::all_linear_systems(n)) {
            ++systems;
            for (int k = 2; k <= 5 && ok; ++k) {
                bool got = find_berge_cycle(h, k).status == SearchStatus::found;
                if (got != oracles::has_berge_cycle(h, k)) ok = false;
                if (k >= 3) {
                    bool lg = find_linear_cycle(h, k).status == SearchStatus::found;
                    if (lg != oracles::has_linear_cycle(h, k)) ok = false;
                }
            }
            if (!ok) break;
        }
    }
    std::printf("criterion 6 (detector completeness, %lld linear systems, k<=5): %s (%.1fs)\n",
                systems, ok ? "PASS" : "FAIL", t.seconds());
    return ok;
}

// every labeled graph on 8 vertices, walked by Gray code so each step
// toggles one edge; smaller vertex counts are covered by isolated vertices
bool walks_exhaustive8() {
    constexpr int N = 8, E = N * (N - 1) / 2;
    int eu[E], ev[E];
    {
        int b = 0;
        for (int u = 0; u < N; ++u)
            for (int v = u + 1; v < N; ++v, ++b) {
                eu[b] = u;
                ev[b] = v;
            }
    }
    std::uint32_t rows[N] = {0};
    std::vector<Pair> edges;
    edges.reserve(E);

    auto check = [&]() -> bool {
        // DP enumeration of ordered walks: f_{i+1}(v) = sum_{w~v} f_i(w)
        long long f1[N], f2[N];
        for (int v = 0; v < N; ++v) f1[v] = __builtin_popcount(rows[v]);
        for (int v = 0; v < N; ++v) {
            long long s = 0;
            for (std::uint32_t m = rows[v]; m;) {
                int w = __builtin_ctz(m);
                m &= m - 1;
                s += f1[w];
            }
            f2[v] = s;
        }
        long long ordered = 0;
        for (int v = 0; v < N; ++v) {
            for (std::uint32_t m = rows[v]; m;) {
                int w = __builtin_ctz(m);
                m &= m - 1;
                ordered += f2[w];
            }
        }
        edges.clear();
        for (int u = 0; u < N; ++u)
            for (std::uint32_t m = rows[u] & ~((1u << (u + 1)) - 1); m;) {
                int v = __builtin_ctz(m);
                m &= m - 1;
                edges.emplace_back(u, v);
            }
        return count_walks3(N, edges) * 2 == ordered;
    };

    if (!check()) return false;
    for (std::uint32_t i = 1; i != (1u << E); ++i) {
        int b = __builtin_ctz(i);
        rows[eu[b]] ^= 1u << ev[b];
        rows[ev[b]] ^= 1u << eu[b];
        if (!check()) return false;
    }
    return true;
}

bool criterion7() {
    Timer t;
    bool ok = true;

    // corpus: constructions, lifts, and seeded random systems
    std::vector<TripleSystem> corpus;
    for (int s = 1; s <= 4; ++s) corpus.push_back(construct_c5free(s));
    auto host = gen_projective_incidence(2);
    for (int q = 1; q <= 3; ++q) corpus.push_back(construct_from_bipartite(host, q));
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        corpus.push_back(random_linear_system(10 + static_cast<int>(seed % 15), 12,
                                              FamilySpec{}, 5000 + seed));

    for (const auto& h : corpus) {
        long long sum = 0;
        for (int e = 0; e < h.m(); ++e) sum += count_3links_at(h, e);
        if (2 * count_3links(h) != sum) ok = false;
        if (is_linear(h) &&
            shadow(h).edges.size() != 3u * static_cast<unsigned>(h.m()))
            ok = false;
    }

    ok = ok && walks_exhaustive8();

    std::printf("criterion 7 (counting identities incl. all 8-vertex graphs): %s (%.1fs)\n",
                ok ? "PASS" : "FAIL", t.seconds());
    return ok;
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion1();
    all &= criterion2();
    all &= criterion3();
    all &= criterion4();
    all &= criterion5();
    all &= criterion6();
    all &= criterion7();
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}

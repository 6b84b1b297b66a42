#include "linhg/construct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace linhg {

BlockLayout lift_layout(const BipartiteGraph& g, int q) {
    if (q < 1) throw std::invalid_argument("lift: q must be >= 1");
    if (g.edges.empty()) throw std::invalid_argument("lift: host graph has no edges");
    return BlockLayout{q, g.n_left, g.n_right, g.m()};
}

TripleSystem construct_from_bipartite(const BipartiteGraph& g, int q) {
    BlockLayout lay = lift_layout(g, q);
    std::vector<Triple> edges;
    edges.reserve(static_cast<size_t>(g.m()) * static_cast<size_t>(q));
    for (int t = 0; t < q; ++t) {
        for (int e = 0; e < g.m(); ++e) {
            const auto& [i, j] = g.edges[static_cast<size_t>(e)];
            edges.push_back({lay.left_vertex(t, i), lay.right_vertex(t, j), lay.b_vertex(e)});
        }
    }
    return TripleSystem::from_edges(lay.total(), std::move(edges));
}

TripleSystem construct_c5free(int s) {
    if (s < 1) throw std::invalid_argument("construct_c5free: s must be >= 1");
    return construct_from_bipartite(gen_complete_bipartite(s, s), s);
}

BipartiteGraph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite: parts must be >= 1");
    std::vector<Pair> edges;
    edges.reserve(static_cast<size_t>(a) * static_cast<size_t>(b));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, j);
    return BipartiteGraph{a, b, std::move(edges)};
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Homogeneous coordinates over F_p, normalized so the first nonzero entry is 1,
// listed in lexicographic order.
std::vector<std::array<int, 3>> projective_points(int p) {
    std::vector<std::array<int, 3>> pts;
    pts.reserve(static_cast<size_t>(p) * p + p + 1);
    pts.push_back({0, 0, 1});
    for (int z = 0; z < p; ++z) pts.push_back({0, 1, z});
    for (int y = 0; y < p; ++y)
        for (int z = 0; z < p; ++z) pts.push_back({1, y, z});
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

BipartiteGraph gen_projective_incidence(int p, int max_p) {
    if (!is_prime(p)) throw std::invalid_argument("projective incidence: p must be prime");
    if (p > max_p)
        throw std::invalid_argument("projective incidence: p exceeds configured maximum " +
                                    std::to_string(max_p));
    auto pts = projective_points(p);
    const int n = static_cast<int>(pts.size());  // p^2+p+1 points, same count of lines
    std::vector<Pair> edges;
    edges.reserve(static_cast<size_t>(n) * static_cast<size_t>(p + 1));
    for (int pi = 0; pi < n; ++pi) {
        for (int li = 0; li < n; ++li) {
            long long dot = 0;
            for (int c = 0; c < 3; ++c) dot += static_cast<long long>(pts[static_cast<size_t>(pi)][static_cast<size_t>(c)]) * pts[static_cast<size_t>(li)][static_cast<size_t>(c)];
            if (dot % p == 0) edges.emplace_back(pi, li);
        }
    }
    return BipartiteGraph{n, n, std::move(edges)};
}

double lower_bound_value(double n, double c, double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("lower_bound_value: alpha must be > 1");
    if (!(c > 0.0)) throw std::invalid_argument("lower_bound_value: c must be > 0");
    if (n <= 0.0) return 0.0;
    double coeff = alpha * c / (4.0 * alpha - 2.0) *
                   std::pow((alpha - 1.0) / (c * (2.0 * alpha - 1.0)), 1.0 - 1.0 / alpha);
    return coeff * std::pow(n, 2.0 - 1.0 / alpha);
}

double corollary_bound(double n, int k) {
    if (k < 2) throw std::invalid_argument("corollary_bound: k must be >= 2");
    if (n <= 0.0) return 0.0;
    double kk = k;
    return kk / 2.0 * std::pow(n / (kk + 1.0), 1.0 + 1.0 / kk);
}

ConstructionPlan plan_parameters(long long n, double c, double alpha) {
    if (n < 1) throw std::invalid_argument("plan_parameters: n must be >= 1");
    if (!(alpha > 1.0)) throw std::invalid_argument("plan_parameters: alpha must be > 1");
    if (!(c > 0.0)) throw std::invalid_argument("plan_parameters: c must be > 0");
    double z_real = std::pow(std::pow(2.0, alpha) * (alpha - 1.0) / (c * (2.0 * alpha - 1.0)),
                             1.0 / alpha) *
                    std::pow(static_cast<double>(n), 1.0 / alpha);
    long long z = std::max<long long>(2, std::llround(z_real));
    double host_edges = c * std::pow(static_cast<double>(z) / 2.0, alpha);
    long long q = static_cast<long long>(std::floor((static_cast<double>(n) - host_edges) /
                                                    static_cast<double>(z)));
    if (q < 1)
        throw std::invalid_argument("plan_parameters: vertex budget too small for one layer; "
                                    "increase n");
    ConstructionPlan plan;
    double k_real = 1.0 + 1.0 / (alpha - 1.0);
    if (std::abs(k_real - std::llround(k_real)) < 1e-9)
        plan.k = static_cast<int>(std::llround(k_real));
    plan.c = c;
    plan.alpha = alpha;
    plan.n = n;
    plan.z = z;
    plan.q = q;
    plan.predicted_bound = lower_bound_value(static_cast<double>(n), c, alpha);
    return plan;
}

}  // namespace linhg

#ifndef LINHG_CONSTRUCT_HPP
#define LINHG_CONSTRUCT_HPP

#include <optional>

#include "linhg/core.hpp"

namespace linhg {

/// Vertex layout of a lifted system: blocks L_1..L_q, then R_1..R_q, then B,
/// each block internally by index. B has one vertex per host edge.
struct BlockLayout {
    int q = 0;
    int z1 = 0;        // |L_t|
    int z2 = 0;        // |R_t|
    int host_edges = 0;  // |B|

    int left_vertex(int t, int i) const { return t * z1 + i; }           // t in [0,q)
    int right_vertex(int t, int j) const { return q * z1 + t * z2 + j; }
    int b_vertex(int edge_index) const { return q * (z1 + z2) + edge_index; }
    int total() const { return q * (z1 + z2) + host_edges; }
};

/// Parameter choice for the girth-graph lift at a given vertex budget.
struct ConstructionPlan {
    std::optional<int> k;   // odd-cycle family parameter, when alpha matches 1+1/(k-1)
    double c = 0;
    double alpha = 0;
    long long n = 0;
    long long z = 0;        // host graph order
    long long q = 0;        // number of layers
    double predicted_bound = 0;
};

/// The C5-free linear system on n = 3s^2 vertices with s^3 edges:
/// the lift of the complete bipartite host K_{s,s} with q = s layers.
TripleSystem construct_c5free(int s);

/// Lift of a bipartite host G with q layers: one hyperedge
/// {l^t_i, r^t_j, v_{ij}} per host edge (i,j) and layer t. The output is
/// always linear; when girth(G) >= 2k it is free of all linear cycles of
/// odd length <= 2k+1.
TripleSystem construct_from_bipartite(const BipartiteGraph& g, int q);
BlockLayout lift_layout(const BipartiteGraph& g, int q);

BipartiteGraph gen_complete_bipartite(int a, int b);

/// Point-line incidence graph of the projective plane PG(2,p), p prime:
/// parts of size p^2+p+1, (p+1)(p^2+p+1) edges, girth 6.
BipartiteGraph gen_projective_incidence(int p, int max_p = 97);

/// (alpha*c/(4alpha-2)) * ((alpha-1)/(c(2alpha-1)))^(1-1/alpha) * n^(2-1/alpha)
double lower_bound_value(double n, double c, double alpha);

/// (k/2) * (n/(k+1))^(1+1/k)
double corollary_bound(double n, int k);

/// Optimal-order host size z and layer count q for a vertex budget n,
/// assuming hosts with c*(z/2)^alpha edges. Throws when the budget is too
/// small for even one layer.
ConstructionPlan plan_parameters(long long n, double c, double alpha);

}  // namespace linhg

#endif

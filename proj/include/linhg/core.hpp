#ifndef LINHG_CORE_HPP
#define LINHG_CORE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linhg {

using Triple = std::array<int, 3>;
using Pair = std::pair<int, int>;

/// 3-uniform hypergraph in canonical form: every triple is strictly
/// increasing and the edge list is strictly lexicographically increasing.
/// Vertices are dense integers 0..n-1; isolated vertices are permitted.
struct TripleSystem {
    int n = 0;
    std::vector<Triple> edges;

    int m() const { return static_cast<int>(edges.size()); }

    bool operator==(const TripleSystem&) const = default;

    /// Canonicalizes (sorts triples internally and the list itself) and
    /// validates. Throws std::invalid_argument on out-of-range vertices,
    /// repeated vertices inside a triple, or duplicate triples.
    static TripleSystem from_edges(int n, std::vector<Triple> raw);
};

/// Bipartite host graph with classes of size n_left and n_right.
/// Edges are (left, right) index pairs, sorted and unique.
struct BipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<Pair> edges;

    int m() const { return static_cast<int>(edges.size()); }

    bool operator==(const BipartiteGraph&) const = default;

    static BipartiteGraph from_edges(int n_left, int n_right, std::vector<Pair> raw);
};

/// 2-shadow of a triple system: all vertex pairs covered by some hyperedge.
/// When the source system is linear, `owner[i]` is the index of the unique
/// hyperedge containing `edges[i]`; otherwise owner is absent.
struct ShadowGraph {
    int n = 0;
    std::vector<Pair> edges;
    std::optional<std::vector<int>> owner;
};

/// Exact rational, kept reduced with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
};

Rational make_rational(long long num, long long den);

struct DegreeProfile {
    std::vector<int> degree;
    std::optional<Rational> d_avg;  // absent when n == 0
    int d_max = 0;
};

// ---- file I/O -------------------------------------------------------------
//
// Triple-system file: '#' comment lines, then "n m", then m lines "a b c"
// (any order within a line). Bipartite-graph file: "n_left n_right m",
// then m lines "i j". Writers emit canonical order.

TripleSystem load_triple_system(std::istream& in);
TripleSystem load_triple_system(const std::string& text);
void save_triple_system(const TripleSystem& h, std::ostream& out);
std::string save_triple_system(const TripleSystem& h);

BipartiteGraph load_bipartite_graph(std::istream& in);
BipartiteGraph load_bipartite_graph(const std::string& text);
void save_bipartite_graph(const BipartiteGraph& g, std::ostream& out);
std::string save_bipartite_graph(const BipartiteGraph& g);

// ---- structural operations ------------------------------------------------

/// Lexicographically first pair of edge indices sharing >= 2 vertices,
/// or absent when the system is linear.
std::optional<Pair> linearity_violation(const TripleSystem& h);
bool is_linear(const TripleSystem& h);

ShadowGraph shadow(const TripleSystem& h);

DegreeProfile degrees(const TripleSystem& h);

/// Sorted list of edge indices incident to each vertex.
std::vector<std::vector<int>> incidence_lists(const TripleSystem& h);

/// First neighborhood: co-edge vertices of v, excluding v itself.
std::vector<int> neighborhood1(const TripleSystem& h, int v);

/// Second neighborhood: vertices outside N1(v) and {v} lying in a
/// hyperedge that meets N1(v).
std::vector<int> neighborhood2(const TripleSystem& h, int v);

/// Repeatedly removes the lowest-indexed vertex whose degree is below
/// `frac_num/frac_den` times the current average degree, together with its
/// incident hyperedges. Removed vertices stay as isolated vertices, so n is
/// unchanged; the running average is taken over the vertices not yet peeled.
TripleSystem peel_min_degree(const TripleSystem& h, long long frac_num = 1,
                             long long frac_den = 3);

/// Copy of h without the edges whose indices appear in `drop`
/// (sorted, unique, in range).
TripleSystem subsystem_excluding(const TripleSystem& h, const std::vector<int>& drop);

}  // namespace linhg

#endif

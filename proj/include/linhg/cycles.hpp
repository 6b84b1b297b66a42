#ifndef LINHG_CYCLES_HPP
#define LINHG_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linhg/core.hpp"

namespace linhg {

enum class CycleKind { berge, linear };

std::string to_string(CycleKind k);

/// Certificate for a Berge cycle: distinct vertices v1..vk and distinct
/// edge indices h1..hk with v_i, v_{i+1} in edge(h_i) (cyclically).
struct BergeCycleWitness {
    int k = 0;
    std::vector<int> vertices;
    std::vector<int> edge_indices;
};

/// Certificate for a linear cycle: additionally edge(h_i) and edge(h_{i+1})
/// intersect exactly in the shared basic vertex, and non-consecutive edges
/// are disjoint.
struct LinearCycleWitness {
    int k = 0;
    std::vector<int> vertices;
    std::vector<int> edge_indices;
};

/// A list of forbidden cycle kinds and lengths.
struct FamilySpec {
    struct Entry {
        CycleKind kind;
        int length;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    bool operator==(const FamilySpec&) const = default;

    /// All Berge cycles C_l with l of the same parity as k, 2 <= l <= k.
    static FamilySpec berge_up_to(int k);
    /// All linear cycles with l of the same parity as k, 3 <= l <= k.
    static FamilySpec linear_up_to(int k);

    /// Grammar: groups separated by ';', each "berge:l1,l2,.." or
    /// "linear:l1,l2,.." or the macros "C<k>" / "Clin<k>".
    static FamilySpec parse(const std::string& spec);
    std::string to_string() const;
};

enum class SearchStatus { found, absent, budget_exceeded };

struct SearchOptions {
    std::uint64_t budget = 100'000'000;  // node expansions before giving up
    bool parallel = true;
};

struct BergeSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<BergeCycleWitness> witness;
    std::uint64_t expansions = 0;
};

struct LinearSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<LinearCycleWitness> witness;
    std::uint64_t expansions = 0;
};

/// Depth-first search over alternating vertex/edge sequences, anchored at
/// each candidate start edge in ascending index order; the witness returned
/// is the first found at the smallest anchor. Throws on k < 2.
BergeSearchResult find_berge_cycle(const TripleSystem& h, int k, const SearchOptions& opts = {});

/// Same strategy with the linear-cycle intersection constraints checked
/// incrementally. Throws on k < 3.
LinearSearchResult find_linear_cycle(const TripleSystem& h, int k, const SearchOptions& opts = {});

/// Restricted searches: only cycles using edge index `through` are found
/// (the anchor is fixed, other edges are unconstrained).
BergeSearchResult find_berge_cycle_through(const TripleSystem& h, int k, int through,
                                           const SearchOptions& opts = {});
LinearSearchResult find_linear_cycle_through(const TripleSystem& h, int k, int through,
                                             const SearchOptions& opts = {});

namespace serial {
/// Single-threaded reference drivers; identical results to the parallel ones.
BergeSearchResult find_berge_cycle(const TripleSystem& h, int k, const SearchOptions& opts = {});
LinearSearchResult find_linear_cycle(const TripleSystem& h, int k, const SearchOptions& opts = {});
}  // namespace serial

bool verify_witness(const TripleSystem& h, const BergeCycleWitness& w);
bool verify_witness(const TripleSystem& h, const LinearCycleWitness& w);

using CycleWitness = std::variant<BergeCycleWitness, LinearCycleWitness>;

struct FamilyReport {
    bool free = true;
    bool budget_exceeded = false;
    std::size_t entry = 0;  // index into the spec when a witness was found
    std::optional<CycleWitness> witness;
};

/// Runs the finders over the family entries in increasing length order and
/// short-circuits on the first witness.
FamilyReport is_family_free(const TripleSystem& h, const FamilySpec& fam,
                            const SearchOptions& opts = {});

/// Exact girth by breadth-first search from every vertex; absent = acyclic.
std::optional<int> girth(int n, const std::vector<Pair>& edges);
std::optional<int> girth(const ShadowGraph& g);
std::optional<int> girth(const BipartiteGraph& g);

// Witness text format:
//   cycle <berge|linear> <k>
//   v: v1 ... vk
//   h: h1 ... hk
std::string serialize_witness(const BergeCycleWitness& w);
std::string serialize_witness(const LinearCycleWitness& w);
std::string serialize_witness(const CycleWitness& w);
CycleWitness parse_witness(std::istream& in);
CycleWitness parse_witness(const std::string& text);

}  // namespace linhg

#endif

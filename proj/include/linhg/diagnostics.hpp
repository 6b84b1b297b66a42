#ifndef LINHG_DIAGNOSTICS_HPP
#define LINHG_DIAGNOSTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linhg/core.hpp"
#include "linhg/cycles.hpp"

namespace linhg {

/// Three hyperedges h1,h2,h3 with h1 and h3 disjoint and h2 meeting both;
/// h1 and h3 are the terminal hyperedges.
struct ThreeLink {
    int h1 = -1;
    int h2 = -1;
    int h3 = -1;
};

/// Total number of 3-links, counted once via the unique middle edge.
long long count_3links(const TripleSystem& h);

/// Number of 3-links in which edge `e` is a terminal hyperedge.
long long count_3links_at(const TripleSystem& h, int e);

/// Edge indices of the garbage subhypergraph H'_abc for edge e = abc:
/// the hyperedges disjoint from {a,b,c} that interact with the first
/// neighborhoods of a, b, c in one of three ways (see implementation).
/// Requires a linear system.
std::vector<int> garbage_subhypergraph(const TripleSystem& h, int e);

/// Unordered walks of length 3: sum over edges uv of d(u)*d(v).
long long count_walks3(const ShadowGraph& g);
long long count_walks3(int n, const std::vector<Pair>& edges);

/// Walks of length 3 on four distinct vertices.
long long count_paths3(const ShadowGraph& g);

/// 3-edge shadow paths whose edges lie in three distinct hyperedges.
/// Requires a linear system (the shadow owner map must exist).
long long count_rainbow_paths3(const TripleSystem& h);

enum class ClaimId {
    N1_BOUND,          // #{h : |h cap N1(v)| >= 2} <= 6 d(v)
    N2_BOUND,          // |N2(v)| >= sum_{x in N1(v)} d(x) - 18 d(v)
    GARBAGE_BOUND,     // |E(H'_abc)| <= 25 d_max
    PLINK_BOUND,       // p_abc(H) <= 2n + 273 d_max
    PABC_BIJECTION,    // p_abc(H_abc) = sum_x |E^x_2|
    ATMOST2,           // each vertex in <= 2 of N2^{H_a}(a), N2^{H_b}(b), N2^{H_c}(c)
    BLAKLEY_ROY,       // walks3(shadow) >= n (d_shadow)^3 / 2
    NONRAINBOW_BOUND,  // non-rainbow 3-paths <= sum_v 8 C(d(v),2)
    RAINBOW_3LINK,     // rainbow 3-paths >= 4 p(H)
    C4_DEGSUM,         // sum_{x in N1(v)} 2 d(x) <= n + 12 d(v)
    C4_LOCAL3,         // #{h containing x : |h cap N1(v)| >= 2} <= 3
    C4_SX_OVERLAP,     // S_x, S_y disjoint unless xyv in E, then overlap <= 2
    G2_STRUCTURE,      // G_2 at v is triangle-free with |E| <= |V|
};

std::string to_string(ClaimId id);
ClaimId parse_claim_id(const std::string& name);

enum class ClaimContext { c5, c4 };

/// Claim sets run by `verify-claims`, in output order.
std::vector<ClaimId> claims_for_context(ClaimContext ctx);

enum class ClaimStatus { pass, fail, not_applicable };

/// Audit result: the inequality lhs <= rhs at its worst instance.
/// pass iff slack = rhs - lhs is >= 0 at every instance. Equality claims
/// report lhs = |difference| against rhs = 0.
struct ClaimReport {
    ClaimId id{};
    ClaimStatus status = ClaimStatus::pass;
    bool has_instance = false;
    long long lhs = 0;
    long long rhs = 0;
    long long slack = 0;
    std::string witness = "-";
    std::string reason;  // violated hypothesis, for not_applicable

    std::string to_line() const;
};

struct ClaimOptions {
    bool parallel = true;
    bool skip_hypothesis_check = false;
    SearchOptions detect;  // used by the hypothesis pre-checks
};

/// Evaluates one claim over every instance in scope and reports the worst
/// slack. The claim's hypothesis (linearity, and C5- or C4-freeness where
/// the claim needs it) is checked first; a violated hypothesis yields a
/// not_applicable report naming the violation.
ClaimReport check_claim(const TripleSystem& h, ClaimId id, const ClaimOptions& opts = {});

namespace serial {
ClaimReport check_claim(const TripleSystem& h, ClaimId id, const ClaimOptions& opts = {});
}

}  // namespace linhg

#endif

#pragma once

// Built-in model complexes and the K_p = D_{p,1} # -D_{p-1,1} pipeline.
// The Whitehead double D is never modeled directly: every computation
// routes through T(2,3), which is epsilon-equivalent to D, and the reports
// annotate paper-sourced facts as such.

#include <string>
#include <vector>

#include "kfc/complex.hpp"
#include "kfc/hat.hpp"

namespace kfc {

CfkComplex unknot();

/// The rank-three staircase of the (2,3)-torus knot.
CfkComplex t23();

/// A five-generator box-plus-point model with tau = 0, epsilon = 0;
/// included purely as an epsilon = 0 fixture.
CfkComplex figureEight();

struct StaircaseSpec {
    // Alternating step lengths (h1, v1, ..., hn, vn), all >= 1.
    std::vector<int> steps;
};

/// Staircase complex: generators c0..c_{2n} descending from (0, sum v_k)
/// with d c_{2i-1} = U^{h_i} c_{2i-2} + c_{2i}.
CfkComplex staircase(const StaircaseSpec& spec);

/// Hardcoded reduced cable complex: generators with (M, A) from the grading
/// table and the five higher-differential families. Built directly, with no
/// use of the bordered machinery; this is the oracle the box-tensor route is
/// checked against.
HatComplex prop32Data(int p);

struct ConcordanceTriple {
    int tau = 0;
    int a1 = 0;
    int a2 = 0;
};

/// Invariants of J # -K under the hypothesis a1(J) = a1(K), a2(J) > a2(K):
/// tau subtracts, a1 and a2 come from J. Throws DomainError when the
/// hypothesis fails.
ConcordanceTriple combineConnectedSum(const ConcordanceTriple& j, const ConcordanceTriple& k);

struct KpReport {
    int p = 0;
    int tau = 0;
    int a1 = 0;
    int a2 = 0;
    int g4_lower = 0;
    int g4_upper = 1;               // paper fact
    int gc_lower = 0;
    bool topologically_slice = true;  // paper fact
};

/// Computes the invariants of K_p from the cable complexes: hatCable(p) and
/// hatCable(p-1) (the T(2,3) stand-in when p-1 = 1), combined by the
/// connected-sum rule.
KpReport kpPipeline(int p);

std::string renderKpReport(const KpReport& r);

}  // namespace kfc

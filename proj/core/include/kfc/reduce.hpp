#pragma once

// Edge reduction: iterated cancellation of filtration-preserving arrows,
// a filtered chain homotopy equivalence. Canceling an eligible arrow
// x_i -> x_j deletes both generators; for every pair of arrows x_k -> x_j
// (shift a) and x_i -> x_l (shift b) the arrow x_k -> x_l is toggled with
// shift a+b (U-powers compose additively in the CFK case). The
// lexicographically least eligible (source, target) id pair is canceled at
// each step, so the output is deterministic.

#include "kfc/complex.hpp"
#include "kfc/hat.hpp"

namespace kfc {

struct ReduceStats {
    int steps = 0;
};

/// Eligible arrows: u_power 0 and vertical length 0.
CfkComplex edgeReduce(const CfkComplex& c, ReduceStats* stats = nullptr);

/// Eligible arrows: shift 0.
HatComplex edgeReduce(const HatComplex& h, ReduceStats* stats = nullptr);

bool isReduced(const CfkComplex& c);
bool isReduced(const HatComplex& h);

}  // namespace kfc

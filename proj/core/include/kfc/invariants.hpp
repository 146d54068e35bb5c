#pragma once

// Concordance invariants of a CFK complex, all defined through induced maps
// on homology of region complexes:
//
//   tau  = min { s | H(C{i=0, j<=s}) -> H(C{i=0}) is nontrivial }
//   eps  = +1 / -1 / 0 by triviality of F: column -> hook(tau) and
//          G: maxHook(tau) -> column
//   a1   = min { s | H_s : column -> truncatedHook(tau, s) is trivial }
//   a2   = min { s | H_{a1,s} : column -> hookWithTail(tau, a1, s) is
//          nontrivial }, possibly undefined
//
// and the derived bounds gamma >= |tau - a1 - a2|, g4 >= |tau|,
// gc >= max(|tau|, gamma bound).

#include <optional>
#include <string>
#include <vector>

#include "kfc/complex.hpp"

namespace kfc {

struct InvariantReport {
    int tau = 0;
    int epsilon = 0;
    std::optional<int> a1;      // present only when epsilon != 0
    std::optional<int> a2;      // nullopt with a2_undefined set = "undefined"
    bool a2_undefined = false;
    int breadth = 0;
    int gamma_lower = 0;
    int g4_lower = 0;
    int gc_lower = 0;
    std::vector<std::string> notes;
};

/// Largest j with nonzero homology of the (0,j) summand of the associated
/// graded complex; equals the Seifert genus for knot complexes.
int breadth(const CfkComplex& c);

int tau(const CfkComplex& c);

/// Returns -1, 0 or +1. Throws DomainError on non-knot-like input.
int epsilon(const CfkComplex& c);

/// Requires epsilon(c) == +1.
int a1(const CfkComplex& c);

/// Requires epsilon(c) == +1; nullopt means the scan exhausted its cap with
/// every map trivial ("undefined").
std::optional<int> a2(const CfkComplex& c);

/// |tau - a1 - a2| when epsilon = +1 and a2 is defined; computed on the dual
/// when epsilon = -1; 0 otherwise.
int gammaLowerBound(const CfkComplex& c);

/// epsilon(c1 (x) dual(c2)) == 0.
bool epsilonEquivalent(const CfkComplex& c1, const CfkComplex& c2);

InvariantReport report(const CfkComplex& c);

/// Stable machine format:
/// "tau=_ epsilon=_ a1=_ a2=_ breadth=_ gamma_lb=_ g4_lb=_ gc_lb=_".
std::string reportLine(const InvariantReport& r);

/// Aligned key-value block, one field per line, notes at the end.
std::string reportTable(const InvariantReport& r);

}  // namespace kfc

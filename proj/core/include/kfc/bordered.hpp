#pragma once

// Bordered structures over the torus algebra and their box tensor product.
//
// The torus algebra has idempotents i0, i1 and Reeb chord elements
// rho1, rho2, rho3 with rho1*rho2 = rho12, rho2*rho3 = rho23,
// rho1*rho23 = rho12*rho3 = rho123; all other products vanish. A type D
// structure is a directed graph whose arrows carry chord labels; a type A
// structure carries operation families m_{k+1}(x, rho_{I_1}, ..., rho_{I_k})
// with Alexander filtration shifts. Pairing a bounded type D structure with
// the built-in cable type A structure produces the hat-flavor complex of the
// cable knot, with relative-only gradings until reduction.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kfc/hat.hpp"
#include "kfc/laurent.hpp"

namespace kfc {

enum class Idem { I0, I1 };

enum class Rho { R1, R2, R3, R12, R23, R123 };

Idem leftIdem(Rho r);
Idem rightIdem(Rho r);
std::optional<Rho> mulRho(Rho a, Rho b);
std::string rhoName(Rho r);  // "rho1", "rho12", ...

struct TypeDGenerator {
    std::string id;
    Idem idem = Idem::I0;
};

struct TypeDArrow {
    std::string source;
    std::string target;
    Rho label = Rho::R1;
};

/// A type D structure; boundedness (an acyclic arrow graph) is required for
/// the box tensor product and verified on construction.
class TypeD {
public:
    TypeD(std::string name, std::vector<TypeDGenerator> generators,
          std::vector<TypeDArrow> arrows);

    const std::string& name() const { return name_; }
    const std::vector<TypeDGenerator>& generators() const { return generators_; }
    const std::vector<TypeDArrow>& arrows() const { return arrows_; }
    std::optional<std::size_t> indexOf(std::string_view id) const;

    /// Longest directed path length in the arrow graph.
    int longestPath() const;

private:
    std::string name_;
    std::vector<TypeDGenerator> generators_;
    std::vector<TypeDArrow> arrows_;
};

/// CFD of the 0-framed complement of the right-handed trefoil: u1, u2, u3
/// in idempotent i0; v1, v2, mu1, mu2 in i1; seven arrows.
TypeD cfdTrefoil0();

/// Type D file format: "gen <id> idem=<0|1>" and
/// "delta <src> -> <tgt> D<index>" lines (index in {1,2,3,12,23,123}).
TypeD parseTypeD(std::string_view text);
std::string serialize(const TypeD& d);

struct AOutput {
    std::size_t gen = 0;  // output generator index
    int shift = 0;        // Alexander filtration drop
};

/// The type A structure of the (p,1)-torus-knot pattern in the solid torus:
/// generators a, b1, ..., b_{2p-2} with a in idempotent i0 and the b_i in
/// i1. The infinite A-infinity operation families are matched symbolically,
/// so arbitrarily long chord sequences can be looked up on demand.
class TypeA {
public:
    explicit TypeA(int p);

    int p() const { return p_; }
    const std::vector<TypeDGenerator>& generators() const { return generators_; }
    std::optional<std::size_t> indexOf(std::string_view id) const;

    /// m_{k+1}(x, rho_{I_1}, ..., rho_{I_k}); the empty sequence is m_1.
    std::optional<AOutput> lookup(std::size_t x, std::span<const Rho> chords) const;

private:
    int p_;
    std::vector<TypeDGenerator> generators_;
};

TypeA cfaCable(int p);

/// Box tensor product: generators are idempotent-matched pairs "x y", one
/// differential term per delta path of D with a matching A operation.
/// Output carries relative-only gradings. Throws DomainError on an
/// unbounded D.
HatComplex boxTensor(const TypeA& a, const TypeD& d);

/// The reduced hat complex of the (p,1)-cable of the right-handed trefoil,
/// with absolute gradings assigned to the survivors by name and validated.
/// Throws DomainError("cable oracle mismatch ...") if the reduction survivor
/// set differs from the expected generator set.
HatComplex hatCable(int p);

/// The grading argument: among generators x with A(x) < tau, the row-tau
/// translate U^{A(x)-tau} x has Maslov M(x) + 2 tau - 2 A(x); exactly one
/// candidate may match M(x0) + 1, and its unique outgoing arrow's shift is
/// a2 while a1 = tau - A(x).
std::pair<int, int> deduceA1A2FromHat(const HatComplex& h, int tau);

/// Graded Euler characteristic: sum of (-1)^M t^A over generators.
LaurentPoly eulerCharacteristic(const HatComplex& h);

}  // namespace kfc

#pragma once

// Z+Z-filtered chain complexes over F2[U,U^-1] with a bigraded basis.
//
// A generator x carries a Maslov grading M(x) and an Alexander grading A(x);
// an arrow (x -> U^n y) is one F2 term of the differential. In the (i,j)
// plane x sits at (0, A(x)) and U^n x at (-n, A(x)-n). The differential
// drops Maslov by one and never moves up in either filtration:
//
//     hlen = n >= 0,   vlen = A(x) - A(y) + n >= 0,   M(y) - 2n = M(x) - 1.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kfc {

struct Generator {
    std::string id;
    int maslov = 0;
    int alexander = 0;

    bool operator==(const Generator&) const = default;
};

struct Arrow {
    std::string source;
    std::string target;
    int u_power = 0;  // the term U^n * target, n >= 0 in stored complexes

    bool operator==(const Arrow&) const = default;
};

struct Violation {
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
    std::string str() const;
};

/// Thrown when an operation requires a valid complex and gets an invalid one.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, ValidationReport report)
        : std::runtime_error(std::move(what)), report(std::move(report)) {}
    ValidationReport report;
};

/// Domain errors from invariant computations (non-knot-like input, undefined
/// quantities and the like).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CfkComplex {
public:
    CfkComplex() = default;
    CfkComplex(std::string name, std::vector<Generator> generators, std::vector<Arrow> arrows);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// Index of the first generator with this id, if any.
    std::optional<std::size_t> indexOf(std::string_view id) const;

    bool operator==(const CfkComplex&) const;

private:
    std::string name_;
    std::vector<Generator> generators_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Checks every structural and grading invariant; a valid complex yields an
/// empty report. Violations are report entries, never exceptions.
ValidationReport validate(const CfkComplex& c);

/// Throws ValidationError if validate(c) is non-empty.
void requireValid(const CfkComplex& c, const char* op);

/// Tensor product over F2[U,U^-1]: generators are pairs "x|y" with gradings
/// added, arrows by the Leibniz rule. Inputs must be valid.
CfkComplex tensor(const CfkComplex& a, const CfkComplex& b);

/// Dual complex: x* has negated gradings, arrows are reversed with the same
/// U-power. Input must be valid.
CfkComplex dual(const CfkComplex& c);

/// Isomorphism-insensitive signature: the sorted multiset of generator
/// bigradings plus the sorted multiset of arrow signatures
/// (M_src, A_src, M_tgt, A_tgt, u_power).
std::string canonicalSignature(const CfkComplex& c);

/// Horizontal and vertical lengths of an arrow (requires both endpoints).
int arrowHLen(const Arrow& a);
int arrowVLen(const CfkComplex& c, const Arrow& a);

}  // namespace kfc

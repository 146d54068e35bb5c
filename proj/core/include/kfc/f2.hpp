#pragma once

// Dense F2 linear algebra on word-packed bit vectors, sized for chain
// complexes with a few thousand basis elements. Everything is exact.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kfc {

/// A vector over F2 with a fixed dimension.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    BitVec& operator^=(const BitVec& other);
    bool operator==(const BitVec& other) const = default;

    bool isZero() const;
    /// Index of the lowest set bit, or nullopt for the zero vector.
    std::optional<std::size_t> firstSet() const;
    std::size_t popcount() const;
    std::vector<std::size_t> setBits() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A mutually reduced basis: each vector's lowest set bit is its pivot and
/// no other basis vector is supported on that pivot at insertion time.
class F2Span {
public:
    explicit F2Span(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<BitVec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivot_; }

    /// Reduces v against the basis; the residue has no set bit at any pivot.
    BitVec reduce(BitVec v) const;

    /// Inserts v if independent of the span. Returns true if the span grew.
    bool insert(BitVec v);

    bool contains(const BitVec& v) const { return reduce(v).isZero(); }

private:
    std::size_t dim_;
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivot_;
};

/// A finite chain complex over F2 with an integer grading on the basis.
/// boundary[j] is the differential of basis element j. Each column must be
/// homogeneous (supported in degree[j] - 1); homology() relies on this.
struct F2Chain {
    std::vector<int> degree;
    std::vector<BitVec> boundary;

    std::size_t size() const { return degree.size(); }
    bool boundarySquaresToZero() const;
};

/// Homology of an F2Chain with chosen cycle representatives (independent
/// modulo boundaries, one pivot each).
class Homology {
public:
    explicit Homology(const F2Chain& chain);

    std::size_t dimension() const { return reps_.size(); }
    const std::vector<BitVec>& representatives() const { return reps_; }
    int degreeOf(std::size_t classIdx) const { return repDegree_[classIdx]; }

    /// Coordinates of a cycle's class in the representative basis.
    /// Throws std::logic_error if z is not a cycle of this complex.
    BitVec classOf(const BitVec& z) const;

private:
    std::vector<BitVec> reps_;
    std::vector<int> repDegree_;
    std::vector<BitVec> boundaryBasis_;            // reduced, pivot = firstSet
    std::vector<std::optional<std::size_t>> pivotKind_;  // per element: slot
    // pivotKind_ encoding: index into boundaryBasis_ (< boundaryBasis_.size())
    // or boundaryBasis_.size() + repIdx.
};

/// Matrix of a chain map on homology: rows = target classes, cols = source
/// classes.
struct HomologyMap {
    std::size_t rows = 0, cols = 0;
    std::vector<BitVec> columns;
    bool isZero() const;
};

/// Induced map on homology of the element-level map f (f[j] = image of
/// source element j, or nullopt for zero). Throws std::logic_error if f is
/// not a chain map.
HomologyMap inducedOnHomology(const F2Chain& src, const Homology& srcH,
                              const F2Chain& dst, const Homology& dstH,
                              const std::vector<std::optional<std::size_t>>& f);

}  // namespace kfc

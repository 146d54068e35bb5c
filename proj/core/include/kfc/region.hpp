#pragma once

// Planar regions S in the (i,j)-plane and the finite F2 complexes C{S} they
// cut out of a CFK complex. An element of C{S} is a translate U^n x sitting
// at (-n, A(x)-n) with Maslov M(x)-2n; n may be negative, realizing
// U^{-1}-translates. An arrow of the complex survives into C{S} exactly when
// the translated target also lies in S.

#include <optional>
#include <string>
#include <vector>

#include "kfc/complex.hpp"
#include "kfc/f2.hpp"

namespace kfc {

struct LatticePoint {
    int i = 0;
    int j = 0;
    bool operator==(const LatticePoint&) const = default;
};

/// A region is a finite union of axis-aligned lattice segments, possibly
/// unbounded on one side. All the subquotient shapes used by the invariants
/// (columns, hooks, truncated hooks, tails, points) are of this form.
class Region {
public:
    struct Segment {
        bool vertical = true;            // vertical: fixed i, j ranges; horizontal: fixed j
        int fixed = 0;                   // the fixed coordinate
        std::optional<int> lo, hi;       // inclusive range of the free coordinate
        bool containsFree(int v) const {
            return (!lo || v >= *lo) && (!hi || v <= *hi);
        }
    };

    // C{i=0}
    static Region column();
    // C{i=0, j<=s}
    static Region cappedColumn(int s);
    // C{min(i, j-tau)=0}
    static Region hook(int tau);
    // C{min(i, j-tau)=0, i<=s}
    static Region truncatedHook(int tau, int s);
    // C{min(i, j-tau)=0, i<=a1} u {i=a1, tau-s <= j < tau}
    static Region hookWithTail(int tau, int a1, int s);
    // C{max(i, j-tau)=0}
    static Region maxHook(int tau);
    // C{(i,j)}
    static Region point(int i, int j);

    const std::string& name() const { return name_; }
    const std::vector<Segment>& segments() const { return segments_; }

    bool contains(LatticePoint p) const;

    /// U-powers n such that generator g's translate lands in the region.
    /// Finite for every shape above (at most one n per segment).
    std::vector<int> translatesOf(const Generator& g) const;

private:
    Region(std::string name, std::vector<Segment> segments)
        : name_(std::move(name)), segments_(std::move(segments)) {}
    std::string name_;
    std::vector<Segment> segments_;
};

/// An element of C{S}: the translate U^n of a generator.
struct RegionElement {
    std::size_t gen = 0;  // index into the source complex
    int n = 0;
    bool operator==(const RegionElement&) const = default;
};

class RegionComplex {
public:
    RegionComplex(const CfkComplex& source, const Region& region);

    const std::vector<RegionElement>& elements() const { return elements_; }
    const F2Chain& chain() const { return chain_; }
    std::size_t size() const { return elements_.size(); }

    LatticePoint pointOf(std::size_t e) const;
    int maslovOf(std::size_t e) const { return chain_.degree[e]; }
    std::string labelOf(std::size_t e) const;
    std::optional<std::size_t> find(const RegionElement& e) const;

    const CfkComplex& source() const { return *source_; }

private:
    const CfkComplex* source_;
    std::vector<RegionElement> elements_;
    F2Chain chain_;
};

RegionComplex extractRegion(const CfkComplex& c, const Region& r);

struct HomologyClass {
    BitVec representative;  // cycle over the element basis
    int maslov = 0;
};

struct HomologySummary {
    std::size_t dimension = 0;
    std::vector<HomologyClass> classes;
};

HomologySummary homology(const RegionComplex& rc);

enum class MapKind {
    QuotientThenInclude,  // quotient onto the common part, then include
    Include,              // plain inclusion: every source element is common
};

struct InducedMap {
    HomologyMap onHomology;
    bool trivial() const { return onHomology.isZero(); }
};

/// Induced map on homology of the element-level map that is the identity on
/// common (generator, n) pairs and zero elsewhere. Throws std::logic_error
/// if that map fails to be a chain map (a malformed region pairing).
InducedMap inducedMap(const RegionComplex& src, const RegionComplex& dst, MapKind kind);

}  // namespace kfc

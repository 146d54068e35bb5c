#pragma once

// Independent brute-force oracles for the invariant machinery. Nothing here
// touches the library's bitset elimination, span bookkeeping or region
// segment decomposition: regions are membership predicates evaluated over a
// brute-force translate window, homology questions are answered with plain
// integer-matrix rank computations, and map triviality reduces to a subspace
// containment test (f(ker d_src) inside im d_dst).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kfc/complex.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;  // row-major over F2, entries 0/1

inline int rank(Matrix m) {
    int r = 0;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i)
            if (static_cast<int>(i) != r && m[i][c])
                for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + m[r][k]) % 2;
        ++r;
    }
    return r;
}

/// Basis of the null space of m (viewed as a linear map on column vectors).
inline Matrix kernelBasis(Matrix m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<int> pivotOfCol(cols, -1);
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i)
            if (static_cast<int>(i) != r && m[i][c])
                for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + m[r][k]) % 2;
        pivotOfCol[c] = r;
        ++r;
    }
    Matrix basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (pivotOfCol[freeCol] != -1) continue;
        std::vector<int> v(cols, 0);
        v[freeCol] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivotOfCol[c] != -1 && m[pivotOfCol[c]][freeCol]) v[c] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Element {
    std::string gen;
    int n = 0;
    bool operator<(const Element& o) const {
        return gen < o.gen || (gen == o.gen && n < o.n);
    }
    bool operator==(const Element& o) const = default;
};

using RegionPredicate = std::function<bool(int i, int j)>;

struct RegionComplex {
    std::vector<Element> elements;
    Matrix d;  // d[i][j] = coefficient of element i in the boundary of element j
};

/// Enumerates translates with |n| <= window and keeps those inside the
/// region; the differential keeps an arrow exactly when the translated
/// target is also an element.
inline RegionComplex buildRegion(const kfc::CfkComplex& c, const RegionPredicate& inS,
                                 int window) {
    RegionComplex rc;
    std::map<Element, std::size_t> index;
    for (const auto& g : c.generators())
        for (int n = -window; n <= window; ++n)
            if (inS(-n, g.alexander - n)) {
                index[{g.id, n}] = rc.elements.size();
                rc.elements.push_back({g.id, n});
            }
    std::size_t m = rc.elements.size();
    rc.d.assign(m, std::vector<int>(m, 0));
    for (std::size_t j = 0; j < m; ++j)
        for (const auto& a : c.arrows()) {
            if (a.source != rc.elements[j].gen) continue;
            Element target{a.target, rc.elements[j].n + a.u_power};
            auto it = index.find(target);
            if (it != index.end()) rc.d[it->second][j] ^= 1;
        }
    return rc;
}

inline int homologyDim(const RegionComplex& rc) {
    int n = static_cast<int>(rc.elements.size());
    int r = rank(rc.d);
    return (n - r) - r;  // dim ker - dim im
}

/// The induced map on homology (identity on common elements, zero elsewhere)
/// is trivial iff f maps every cycle of the source to a boundary of the
/// target.
inline bool mapTrivial(const RegionComplex& src, const RegionComplex& dst) {
    std::map<Element, std::size_t> dstIndex;
    for (std::size_t i = 0; i < dst.elements.size(); ++i) dstIndex[dst.elements[i]] = i;

    Matrix cycles = kernelBasis(src.d);  // rows are cycles in src coordinates
    // Rows of the image: columns of dst.d transposed.
    Matrix imageRows;
    for (std::size_t j = 0; j < dst.elements.size(); ++j) {
        std::vector<int> row(dst.elements.size(), 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < dst.elements.size(); ++i) {
            row[i] = dst.d[i][j];
            nonzero |= row[i] != 0;
        }
        if (nonzero) imageRows.push_back(std::move(row));
    }
    int imageRank = rank(imageRows);
    for (const auto& z : cycles) {
        std::vector<int> fz(dst.elements.size(), 0);
        for (std::size_t j = 0; j < z.size(); ++j)
            if (z[j]) {
                auto it = dstIndex.find(src.elements[j]);
                if (it != dstIndex.end()) fz[it->second] ^= 1;
            }
        Matrix augmented = imageRows;
        augmented.push_back(fz);
        if (rank(augmented) != imageRank) return false;  // f(z) escapes the boundaries
    }
    return true;
}

// Region predicates straight from the set definitions.
inline RegionPredicate column() {
    return [](int i, int) { return i == 0; };
}
inline RegionPredicate cappedColumn(int s) {
    return [s](int i, int j) { return i == 0 && j <= s; };
}
inline RegionPredicate hook(int tau) {
    return [tau](int i, int j) { return std::min(i, j - tau) == 0; };
}
inline RegionPredicate truncatedHook(int tau, int s) {
    return [tau, s](int i, int j) { return std::min(i, j - tau) == 0 && i <= s; };
}
inline RegionPredicate hookWithTail(int tau, int a1, int s) {
    return [tau, a1, s](int i, int j) {
        return (std::min(i, j - tau) == 0 && i <= a1) || (i == a1 && tau - s <= j && j < tau);
    };
}
inline RegionPredicate maxHook(int tau) {
    return [tau](int i, int j) { return std::max(i, j - tau) == 0; };
}
inline RegionPredicate point(int i0, int j0) {
    return [i0, j0](int i, int j) { return i == i0 && j == j0; };
}

struct AlexRange {
    int min = 0, max = 0;
};

inline AlexRange alexRange(const kfc::CfkComplex& c) {
    AlexRange r{c.generators().front().alexander, c.generators().front().alexander};
    for (const auto& g : c.generators()) {
        r.min = std::min(r.min, g.alexander);
        r.max = std::max(r.max, g.alexander);
    }
    return r;
}

inline int windowFor(const kfc::CfkComplex& c) {
    AlexRange r = alexRange(c);
    return (r.max - r.min) + std::max(std::abs(r.max), std::abs(r.min)) + 4;
}

inline int tau(const kfc::CfkComplex& c) {
    int w = windowFor(c);
    RegionComplex col = buildRegion(c, column(), w);
    if (homologyDim(col) != 1) throw std::runtime_error("oracle::tau: not knot-like");
    AlexRange r = alexRange(c);
    for (int s = r.min; s <= r.max; ++s)
        if (!mapTrivial(buildRegion(c, cappedColumn(s), w), col)) return s;
    throw std::runtime_error("oracle::tau: scan exhausted");
}

inline int epsilon(const kfc::CfkComplex& c) {
    int w = windowFor(c);
    int t = oracle::tau(c);
    RegionComplex col = buildRegion(c, column(), w);
    bool fTrivial = mapTrivial(col, buildRegion(c, hook(t), w));
    bool gTrivial = mapTrivial(buildRegion(c, maxHook(t), w), col);
    if (fTrivial && gTrivial) throw std::runtime_error("oracle::epsilon: both trivial");
    return fTrivial ? 1 : (gTrivial ? -1 : 0);
}

inline int a1(const kfc::CfkComplex& c) {
    int w = windowFor(c);
    int t = oracle::tau(c);
    RegionComplex col = buildRegion(c, column(), w);
    AlexRange r = alexRange(c);
    for (int s = 0; s <= (r.max - r.min) + 1; ++s)
        if (mapTrivial(col, buildRegion(c, truncatedHook(t, s), w))) return s;
    throw std::runtime_error("oracle::a1: scan exhausted");
}

inline std::optional<int> a2(const kfc::CfkComplex& c) {
    int w = windowFor(c);
    int t = oracle::tau(c);
    int v1 = oracle::a1(c);
    RegionComplex col = buildRegion(c, column(), w);
    AlexRange r = alexRange(c);
    for (int s = 1; s <= (r.max - r.min) + 1; ++s)
        if (!mapTrivial(col, buildRegion(c, hookWithTail(t, v1, s), w))) return s;
    return std::nullopt;
}

/// Breadth straight from the definition, with no reduction involved.
inline int breadth(const kfc::CfkComplex& c) {
    AlexRange r = alexRange(c);
    int best = r.min - 1;
    for (int j = r.min; j <= r.max; ++j)
        if (homologyDim(buildRegion(c, point(0, j), 1)) != 0) best = j;
    if (best < r.min) throw std::runtime_error("oracle::breadth: no nonzero column homology");
    return best;
}

}  // namespace oracle

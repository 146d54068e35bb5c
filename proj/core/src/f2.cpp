#include "kfc/f2.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace kfc {

BitVec& BitVec::operator^=(const BitVec& other) {
    if (size_ != other.size_) throw std::logic_error("BitVec size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVec::isZero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::optional<std::size_t> BitVec::firstSet() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
    return std::nullopt;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<std::size_t> BitVec::setBits() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back((w << 6) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVec F2Span::reduce(BitVec v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (v.test(pivot_[k])) v ^= basis_[k];
    return v;
}

bool F2Span::insert(BitVec v) {
    v = reduce(std::move(v));
    auto p = v.firstSet();
    if (!p) return false;
    pivot_.push_back(*p);
    basis_.push_back(std::move(v));
    return true;
}

bool F2Chain::boundarySquaresToZero() const {
    for (const auto& col : boundary) {
        BitVec acc(size());
        for (auto i : col.setBits()) acc ^= boundary[i];
        if (!acc.isZero()) return false;
    }
    return true;
}

Homology::Homology(const F2Chain& chain) {
    const std::size_t n = chain.size();
    if (chain.boundary.size() != n) throw std::logic_error("F2Chain: ragged boundary");
    pivotKind_.assign(n, std::nullopt);

    F2Span boundarySpan(n);
    for (std::size_t j = 0; j < n; ++j)
        if (!chain.boundary[j].isZero()) boundarySpan.insert(chain.boundary[j]);
    boundaryBasis_ = boundarySpan.basis();
    for (std::size_t k = 0; k < boundaryBasis_.size(); ++k)
        pivotKind_[boundarySpan.pivots()[k]] = k;

    // Kernel per degree via column elimination with combination tracking.
    std::map<int, std::vector<std::size_t>> byDegree;
    for (std::size_t j = 0; j < n; ++j) byDegree[chain.degree[j]].push_back(j);

    F2Span workSpan = boundarySpan;
    for (const auto& [deg, elems] : byDegree) {
        std::vector<std::pair<BitVec, BitVec>> cols;  // (reduced column, combo)
        for (auto j : elems) {
            BitVec col = chain.boundary[j];
            BitVec combo(n);
            combo.set(j);
            for (const auto& [rc, cb] : cols) {
                auto p = rc.firstSet();
                if (p && col.test(*p)) {
                    col ^= rc;
                    combo ^= cb;
                }
            }
            if (col.isZero()) {
                // combo is a cycle in degree `deg`
                BitVec residue = workSpan.reduce(combo);
                auto p = residue.firstSet();
                if (p) {
                    pivotKind_[*p] = boundaryBasis_.size() + reps_.size();
                    reps_.push_back(residue);
                    repDegree_.push_back(deg);
                    workSpan.insert(std::move(residue));
                }
            } else {
                cols.emplace_back(std::move(col), std::move(combo));
            }
        }
    }
}

BitVec Homology::classOf(const BitVec& z) const {
    BitVec r = z;
    BitVec coords(reps_.size());
    while (auto p = r.firstSet()) {
        auto slot = pivotKind_[*p];
        if (!slot) throw std::logic_error("classOf: vector is not a cycle");
        if (*slot < boundaryBasis_.size()) {
            r ^= boundaryBasis_[*slot];
        } else {
            std::size_t repIdx = *slot - boundaryBasis_.size();
            coords.flip(repIdx);
            r ^= reps_[repIdx];
        }
    }
    return coords;
}

bool HomologyMap::isZero() const {
    for (const auto& c : columns)
        if (!c.isZero()) return false;
    return true;
}

HomologyMap inducedOnHomology(const F2Chain& src, const Homology& srcH,
                              const F2Chain& dst, const Homology& dstH,
                              const std::vector<std::optional<std::size_t>>& f) {
    if (f.size() != src.size()) throw std::logic_error("inducedOnHomology: map size mismatch");
    auto apply = [&](const BitVec& v) {
        BitVec out(dst.size());
        for (auto j : v.setBits())
            if (f[j]) out.flip(*f[j]);
        return out;
    };
    // Chain-map check: f(d_src e_j) == d_dst(f e_j) for every source element.
    for (std::size_t j = 0; j < src.size(); ++j) {
        BitVec lhs = apply(src.boundary[j]);
        BitVec rhs(dst.size());
        if (f[j]) rhs = dst.boundary[*f[j]];
        if (!(lhs == rhs)) throw std::logic_error("inducedOnHomology: element map is not a chain map");
    }
    HomologyMap m;
    m.rows = dstH.dimension();
    m.cols = srcH.dimension();
    for (std::size_t k = 0; k < srcH.dimension(); ++k)
        m.columns.push_back(dstH.classOf(apply(srcH.representatives()[k])));
    return m;
}

}  // namespace kfc

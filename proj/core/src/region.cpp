#include "kfc/region.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kfc {

Region Region::column() {
    return Region("column", {{true, 0, std::nullopt, std::nullopt}});
}

Region Region::cappedColumn(int s) {
    return Region("cappedColumn(" + std::to_string(s) + ")", {{true, 0, std::nullopt, s}});
}

Region Region::hook(int tau) {
    // {i=0, j>=tau} u {j=tau, i>=0}
    return Region("hook(" + std::to_string(tau) + ")",
                  {{true, 0, tau, std::nullopt}, {false, tau, 0, std::nullopt}});
}

Region Region::truncatedHook(int tau, int s) {
    return Region("truncatedHook(" + std::to_string(tau) + "," + std::to_string(s) + ")",
                  {{true, 0, tau, std::nullopt}, {false, tau, 0, s}});
}

Region Region::hookWithTail(int tau, int a1, int s) {
    // hook corner at (a1, tau) plus the tail {i=a1, tau-s <= j <= tau-1}
    return Region("hookWithTail(" + std::to_string(tau) + "," + std::to_string(a1) + "," +
                      std::to_string(s) + ")",
                  {{true, 0, tau, std::nullopt},
                   {false, tau, 0, a1},
                   {true, a1, tau - s, tau - 1}});
}

Region Region::maxHook(int tau) {
    // {i=0, j<=tau} u {j=tau, i<=0}
    return Region("maxHook(" + std::to_string(tau) + ")",
                  {{true, 0, std::nullopt, tau}, {false, tau, std::nullopt, 0}});
}

Region Region::point(int i, int j) {
    return Region("point(" + std::to_string(i) + "," + std::to_string(j) + ")",
                  {{true, i, j, j}});
}

bool Region::contains(LatticePoint p) const {
    for (const auto& seg : segments_) {
        if (seg.vertical) {
            if (p.i == seg.fixed && seg.containsFree(p.j)) return true;
        } else {
            if (p.j == seg.fixed && seg.containsFree(p.i)) return true;
        }
    }
    return false;
}

std::vector<int> Region::translatesOf(const Generator& g) const {
    // U^n g sits at (-n, A-n): each segment pins one coordinate, so it
    // admits at most one n.
    std::vector<int> out;
    for (const auto& seg : segments_) {
        int n = seg.vertical ? -seg.fixed : g.alexander - seg.fixed;
        int free = seg.vertical ? g.alexander - n : -n;
        if (seg.containsFree(free) && std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RegionComplex::RegionComplex(const CfkComplex& source, const Region& region) : source_(&source) {
    for (std::size_t gi = 0; gi < source.generators().size(); ++gi)
        for (int n : region.translatesOf(source.generators()[gi]))
            elements_.push_back({gi, n});

    std::map<std::pair<std::size_t, int>, std::size_t> index;
    for (std::size_t e = 0; e < elements_.size(); ++e)
        index[{elements_[e].gen, elements_[e].n}] = e;

    chain_.degree.resize(elements_.size());
    for (std::size_t e = 0; e < elements_.size(); ++e)
        chain_.degree[e] =
            source.generators()[elements_[e].gen].maslov - 2 * elements_[e].n;
    chain_.boundary.assign(elements_.size(), BitVec(elements_.size()));

    // d(U^n x) = sum over arrows x -> U^u y of the element (y, n+u); keep
    // the term only when its lattice point is in the region.
    std::multimap<std::string, const Arrow*> bySource;
    for (const auto& a : source.arrows()) bySource.emplace(a.source, &a);
    for (std::size_t e = 0; e < elements_.size(); ++e) {
        const auto& g = source.generators()[elements_[e].gen];
        auto [lo, hi] = bySource.equal_range(g.id);
        for (auto it = lo; it != hi; ++it) {
            const Arrow& a = *it->second;
            auto tgt = source.indexOf(a.target);
            int m = elements_[e].n + a.u_power;
            auto found = index.find({*tgt, m});
            if (found != index.end()) chain_.boundary[e].flip(found->second);
        }
    }
    if (!chain_.boundarySquaresToZero())
        throw std::logic_error("extractRegion: induced differential does not square to zero");
}

LatticePoint RegionComplex::pointOf(std::size_t e) const {
    const auto& el = elements_[e];
    int alex = source_->generators()[el.gen].alexander;
    return {-el.n, alex - el.n};
}

std::string RegionComplex::labelOf(std::size_t e) const {
    const auto& el = elements_[e];
    const std::string& id = source_->generators()[el.gen].id;
    if (el.n == 0) return id;
    std::ostringstream os;
    os << "U^" << el.n << "." << id;
    return os.str();
}

std::optional<std::size_t> RegionComplex::find(const RegionElement& e) const {
    for (std::size_t k = 0; k < elements_.size(); ++k)
        if (elements_[k] == e) return k;
    return std::nullopt;
}

RegionComplex extractRegion(const CfkComplex& c, const Region& r) {
    requireValid(c, "extractRegion");
    return RegionComplex(c, r);
}

HomologySummary homology(const RegionComplex& rc) {
    Homology h(rc.chain());
    HomologySummary out;
    out.dimension = h.dimension();
    for (std::size_t k = 0; k < h.dimension(); ++k)
        out.classes.push_back({h.representatives()[k], h.degreeOf(k)});
    return out;
}

InducedMap inducedMap(const RegionComplex& src, const RegionComplex& dst, MapKind kind) {
    std::vector<std::optional<std::size_t>> f(src.size());
    for (std::size_t e = 0; e < src.size(); ++e) f[e] = dst.find(src.elements()[e]);
    if (kind == MapKind::Include)
        for (std::size_t e = 0; e < src.size(); ++e)
            if (!f[e])
                throw std::logic_error("inducedMap: inclusion expected but element " +
                                       src.labelOf(e) + " is missing from the target");
    Homology srcH(src.chain());
    Homology dstH(dst.chain());
    return InducedMap{inducedOnHomology(src.chain(), srcH, dst.chain(), dstH, f)};
}

}  // namespace kfc

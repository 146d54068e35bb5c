#include "kfc/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "kfc/reduce.hpp"
#include "kfc/region.hpp"

namespace kfc {
namespace {

struct AlexRange {
    int min = 0, max = 0;
};

AlexRange alexRange(const CfkComplex& c) {
    AlexRange r{c.generators().front().alexander, c.generators().front().alexander};
    for (const auto& g : c.generators()) {
        r.min = std::min(r.min, g.alexander);
        r.max = std::max(r.max, g.alexander);
    }
    return r;
}

void requireKnotLike(const CfkComplex& c, const RegionComplex& column, const char* op) {
    HomologySummary h = homology(column);
    if (h.dimension != 1)
        throw DomainError(std::string(op) + ": column homology has dimension " +
                          std::to_string(h.dimension) +
                          ", not a knot-like complex ('" + c.name() + "')");
}

int tauImpl(const CfkComplex& c) {
    if (c.generators().empty()) throw DomainError("tau: empty complex");
    RegionComplex column(c, Region::column());
    requireKnotLike(c, column, "tau");
    AlexRange r = alexRange(c);
    for (int s = r.min; s <= r.max; ++s) {
        RegionComplex capped(c, Region::cappedColumn(s));
        if (!inducedMap(capped, column, MapKind::Include).trivial()) return s;
    }
    throw DomainError("tau: inclusion scan exhausted without a nontrivial map");
}

int epsilonImpl(const CfkComplex& c, int t) {
    RegionComplex column(c, Region::column());
    bool fTrivial = inducedMap(column, RegionComplex(c, Region::hook(t)),
                               MapKind::QuotientThenInclude)
                        .trivial();
    bool gTrivial = inducedMap(RegionComplex(c, Region::maxHook(t)), column,
                               MapKind::QuotientThenInclude)
                        .trivial();
    if (fTrivial && gTrivial)
        throw DomainError("epsilon: F and G are both trivial; corrupted input ('" + c.name() +
                          "')");
    if (fTrivial) return 1;
    if (gTrivial) return -1;
    return 0;
}

int a1Impl(const CfkComplex& c, int t) {
    RegionComplex column(c, Region::column());
    AlexRange r = alexRange(c);
    int cap = (r.max - r.min) + 1;
    for (int s = 0; s <= cap; ++s) {
        RegionComplex region(c, Region::truncatedHook(t, s));
        if (inducedMap(column, region, MapKind::QuotientThenInclude).trivial()) return s;
    }
    throw std::logic_error("a1: scan cap exceeded, contradicts epsilon = +1");
}

std::optional<int> a2Impl(const CfkComplex& c, int t, int a1val) {
    RegionComplex column(c, Region::column());
    AlexRange r = alexRange(c);
    int cap = (r.max - r.min) + 1;
    for (int s = 1; s <= cap; ++s) {
        RegionComplex region(c, Region::hookWithTail(t, a1val, s));
        if (!inducedMap(column, region, MapKind::QuotientThenInclude).trivial()) return s;
    }
    return std::nullopt;  // undefined
}

}  // namespace

int breadth(const CfkComplex& c) {
    requireValid(c, "breadth");
    if (c.generators().empty()) throw DomainError("breadth: empty complex");
    CfkComplex reduced = edgeReduce(c);
    // In reduced form C(0,j) has zero differential, so its homology is
    // nonzero exactly when a generator sits at Alexander grading j.
    if (reduced.generators().empty())
        throw DomainError("breadth: acyclic complex, no nonzero summand homology");
    int best = reduced.generators().front().alexander;
    for (const auto& g : reduced.generators()) best = std::max(best, g.alexander);
    return best;
}

int tau(const CfkComplex& c) {
    requireValid(c, "tau");
    return tauImpl(c);
}

int epsilon(const CfkComplex& c) {
    requireValid(c, "epsilon");
    return epsilonImpl(c, tauImpl(c));
}

int a1(const CfkComplex& c) {
    requireValid(c, "a1");
    int t = tauImpl(c);
    if (epsilonImpl(c, t) != 1) throw DomainError("a1 defined only for epsilon = +1");
    return a1Impl(c, t);
}

std::optional<int> a2(const CfkComplex& c) {
    requireValid(c, "a2");
    int t = tauImpl(c);
    if (epsilonImpl(c, t) != 1) throw DomainError("a2 defined only for epsilon = +1");
    return a2Impl(c, t, a1Impl(c, t));
}

int gammaLowerBound(const CfkComplex& c) {
    requireValid(c, "gammaLowerBound");
    int t = tauImpl(c);
    int eps = epsilonImpl(c, t);
    if (eps == 0) return 0;
    const CfkComplex* work = &c;
    CfkComplex dualized;
    int tw = t;
    if (eps == -1) {
        // gamma is mirror-invariant; a1/a2 live on the dual when eps = -1.
        dualized = dual(c);
        work = &dualized;
        tw = tauImpl(dualized);
    }
    int v1 = a1Impl(*work, tw);
    auto v2 = a2Impl(*work, tw, v1);
    if (!v2) return 0;
    return std::abs(tw - v1 - *v2);
}

bool epsilonEquivalent(const CfkComplex& c1, const CfkComplex& c2) {
    return epsilon(tensor(c1, dual(c2))) == 0;
}

InvariantReport report(const CfkComplex& c) {
    requireValid(c, "report");
    InvariantReport r;
    r.tau = tauImpl(c);
    r.epsilon = epsilonImpl(c, r.tau);
    r.breadth = breadth(c);
    if (r.epsilon == 1) {
        r.a1 = a1Impl(c, r.tau);
        auto v2 = a2Impl(c, r.tau, *r.a1);
        if (v2) {
            r.a2 = v2;
            r.gamma_lower = std::abs(r.tau - *r.a1 - *r.a2);
        } else {
            r.a2_undefined = true;
            r.gamma_lower = 0;
            r.notes.push_back("a2 undefined; gamma bound unavailable");
        }
    } else if (r.epsilon == -1) {
        CfkComplex d = dual(c);
        int td = tauImpl(d);
        r.a1 = a1Impl(d, td);
        auto v2 = a2Impl(d, td, *r.a1);
        if (v2) {
            r.a2 = v2;
            r.gamma_lower = std::abs(td - *r.a1 - *r.a2);
        } else {
            r.a2_undefined = true;
            r.gamma_lower = 0;
            r.notes.push_back("a2 undefined on the dual; gamma bound unavailable");
        }
        r.notes.push_back("epsilon = -1: a1/a2/gamma computed on the dual complex");
    } else {
        r.gamma_lower = 0;
        r.notes.push_back("epsilon = 0: gamma bound unavailable");
    }
    r.g4_lower = std::abs(r.tau);
    r.gc_lower = std::max(r.g4_lower, r.gamma_lower);
    return r;
}

std::string reportLine(const InvariantReport& r) {
    std::ostringstream os;
    os << "tau=" << r.tau << " epsilon=" << r.epsilon;
    os << " a1=" << (r.a1 ? std::to_string(*r.a1) : "-");
    os << " a2=" << (r.a2 ? std::to_string(*r.a2) : (r.a2_undefined ? "undef" : "-"));
    os << " breadth=" << r.breadth << " gamma_lb=" << r.gamma_lower << " g4_lb=" << r.g4_lower
       << " gc_lb=" << r.gc_lower;
    return os.str();
}

std::string reportTable(const InvariantReport& r) {
    std::ostringstream os;
    os << "tau       = " << r.tau << "\n";
    os << "epsilon   = " << r.epsilon << "\n";
    os << "a1        = " << (r.a1 ? std::to_string(*r.a1) : "-") << "\n";
    os << "a2        = " << (r.a2 ? std::to_string(*r.a2) : (r.a2_undefined ? "undef" : "-"))
       << "\n";
    os << "breadth   = " << r.breadth << "\n";
    os << "gamma_lb  = " << r.gamma_lower << "\n";
    os << "g4_lb     = " << r.g4_lower << "\n";
    os << "gc_lb     = " << r.gc_lower << "\n";
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    return os.str();
}

}  // namespace kfc

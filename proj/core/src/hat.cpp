#include "kfc/hat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "kfc/f2.hpp"

namespace kfc {

HatComplex::HatComplex(std::string name, std::vector<HatGenerator> generators,
                       std::vector<HatArrow> arrows)
    : name_(std::move(name)), generators_(std::move(generators)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        index_.emplace(generators_[i].id, i);
}

std::optional<std::size_t> HatComplex::indexOf(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool HatComplex::hasAbsoluteGradings() const {
    for (const auto& g : generators_)
        if (!g.maslov || !g.alexander) return false;
    return true;
}

bool HatComplex::operator==(const HatComplex& other) const {
    return name_ == other.name_ && generators_ == other.generators_ && arrows_ == other.arrows_;
}

ValidationReport validate(const HatComplex& h) {
    ValidationReport report;
    auto complain = [&](std::string msg) { report.violations.push_back({std::move(msg)}); };

    std::set<std::string> seen;
    for (const auto& g : h.generators())
        if (!seen.insert(g.id).second) complain("duplicate generator id '" + g.id + "'");

    bool structurallySound = report.valid();
    std::set<std::tuple<std::string, std::string, int>> arrowKeys;
    for (const auto& a : h.arrows()) {
        std::ostringstream tag;
        tag << "arrow " << a.source << " -> " << a.target << " [" << a.shift << "]";
        if (!arrowKeys.insert({a.source, a.target, a.shift}).second) {
            complain("duplicate " + tag.str());
            structurallySound = false;
        }
        auto s = h.indexOf(a.source), t = h.indexOf(a.target);
        if (!s || !t) {
            complain(tag.str() + ": dangling endpoint '" + (!s ? a.source : a.target) + "'");
            structurallySound = false;
            continue;
        }
        if (a.shift < 0) {
            complain(tag.str() + ": negative shift");
            structurallySound = false;
            continue;
        }
        const auto& src = h.generators()[*s];
        const auto& tgt = h.generators()[*t];
        if (src.alexander && tgt.alexander && *tgt.alexander != *src.alexander - a.shift)
            complain(tag.str() + ": Alexander drop violated (A(" + tgt.id + ")=" +
                     std::to_string(*tgt.alexander) + ", expected " +
                     std::to_string(*src.alexander - a.shift) + ")");
        if (src.maslov && tgt.maslov && *tgt.maslov != *src.maslov - 1)
            complain(tag.str() + ": Maslov drop violated");
    }

    if (!structurallySound) return report;

    // Relative consistency: arrows impose dA = shift and dM = 1; a potential
    // assignment must exist per weakly connected component, anchored at any
    // absolute gradings present.
    {
        const std::size_t n = h.generators().size();
        std::vector<std::optional<int>> relA(n), relM(n);
        // BFS over arrows in both directions with explicit (dA, dM) deltas.
        std::vector<std::vector<std::tuple<std::size_t, int, int>>> edges(n);
        for (const auto& a : h.arrows()) {
            auto s = *h.indexOf(a.source), t = *h.indexOf(a.target);
            edges[s].push_back({t, -a.shift, -1});
            edges[t].push_back({s, a.shift, 1});
        }
        for (std::size_t start = 0; start < n; ++start) {
            if (relA[start]) continue;
            relA[start] = h.generators()[start].alexander.value_or(0);
            relM[start] = h.generators()[start].maslov.value_or(0);
            std::deque<std::size_t> queue{start};
            std::vector<std::size_t> component{start};
            while (!queue.empty()) {
                auto u = queue.front();
                queue.pop_front();
                for (auto [v, dA, dM] : edges[u]) {
                    int a = *relA[u] + dA;
                    int m = *relM[u] + dM;
                    if (!relA[v]) {
                        relA[v] = a;
                        relM[v] = m;
                        component.push_back(v);
                        queue.push_back(v);
                    } else if (*relA[v] != a || *relM[v] != m) {
                        complain("relative grading inconsistency at generator '" +
                                 h.generators()[v].id + "'");
                    }
                }
            }
            // Anchor check: all absolute gradings in the component must agree
            // with the potentials (up to the component-wide offset fixed by
            // the first anchor).
            std::optional<int> offA, offM;
            for (auto v : component) {
                const auto& g = h.generators()[v];
                if (g.alexander) {
                    int off = *g.alexander - *relA[v];
                    if (!offA)
                        offA = off;
                    else if (*offA != off)
                        complain("absolute Alexander grading of '" + g.id +
                                 "' conflicts with arrow shifts");
                }
                if (g.maslov) {
                    int off = *g.maslov - *relM[v];
                    if (!offM)
                        offM = off;
                    else if (*offM != off)
                        complain("absolute Maslov grading of '" + g.id +
                                 "' conflicts with arrow path lengths");
                }
            }
        }
    }

    // d^2 = 0 over F2, keyed by (source, target, total shift).
    {
        std::map<std::tuple<std::string, std::string, int>, int> paths;
        std::multimap<std::string, const HatArrow*> bySource;
        for (const auto& a : h.arrows()) bySource.emplace(a.source, &a);
        for (const auto& a : h.arrows()) {
            auto [lo, hi] = bySource.equal_range(a.target);
            for (auto it = lo; it != hi; ++it)
                paths[{a.source, it->second->target, a.shift + it->second->shift}]++;
        }
        for (const auto& [key, count] : paths)
            if (count % 2 != 0)
                complain("d^2 != 0: odd number of paths " + std::get<0>(key) + " ~> " +
                         std::get<1>(key) + " with total shift " +
                         std::to_string(std::get<2>(key)));
    }
    return report;
}

void requireValid(const HatComplex& h, const char* op) {
    ValidationReport r = validate(h);
    if (!r.valid())
        throw ValidationError(std::string(op) + ": input complex '" + h.name() + "' is invalid:\n" + r.str(), r);
}

std::string canonicalSignature(const HatComplex& h) {
    auto gradeStr = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("?");
    };
    std::vector<std::string> gens;
    for (const auto& g : h.generators())
        gens.push_back("g " + gradeStr(g.maslov) + " " + gradeStr(g.alexander));
    std::sort(gens.begin(), gens.end());
    std::vector<std::string> arrows;
    for (const auto& a : h.arrows()) {
        const auto& s = h.generators()[*h.indexOf(a.source)];
        const auto& t = h.generators()[*h.indexOf(a.target)];
        arrows.push_back("a " + gradeStr(s.maslov) + " " + gradeStr(s.alexander) + " " +
                         gradeStr(t.maslov) + " " + gradeStr(t.alexander) + " " +
                         std::to_string(a.shift));
    }
    std::sort(arrows.begin(), arrows.end());
    std::ostringstream os;
    for (const auto& s : gens) os << s << "\n";
    for (const auto& s : arrows) os << s << "\n";
    return os.str();
}

namespace {

F2Chain hatChain(const HatComplex& h) {
    F2Chain chain;
    const auto& gens = h.generators();
    chain.degree.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) chain.degree[i] = gens[i].maslov.value_or(0);
    chain.boundary.assign(gens.size(), BitVec(gens.size()));
    for (const auto& a : h.arrows())
        chain.boundary[*h.indexOf(a.source)].flip(*h.indexOf(a.target));
    return chain;
}

}  // namespace

int hatTau(const HatComplex& h) {
    requireValid(h, "hatTau");
    if (!h.hasAbsoluteGradings()) throw DomainError("hatTau: absolute gradings required");
    if (h.generators().empty()) throw DomainError("hatTau: empty complex");

    F2Chain full = hatChain(h);
    Homology fullH(full);
    if (fullH.dimension() != 1)
        throw DomainError("hatTau: total homology dimension " +
                          std::to_string(fullH.dimension()) + ", not a knot-like complex");

    int minA = *h.generators()[0].alexander, maxA = minA;
    for (const auto& g : h.generators()) {
        minA = std::min(minA, *g.alexander);
        maxA = std::max(maxA, *g.alexander);
    }
    for (int s = minA; s <= maxA; ++s) {
        // Subcomplex of generators with A <= s (arrows only drop A).
        std::vector<std::size_t> keep;
        std::vector<std::optional<std::size_t>> into(h.generators().size());
        for (std::size_t i = 0; i < h.generators().size(); ++i)
            if (*h.generators()[i].alexander <= s) {
                into[i] = keep.size();
                keep.push_back(i);
            }
        F2Chain sub;
        sub.degree.resize(keep.size());
        sub.boundary.assign(keep.size(), BitVec(keep.size()));
        for (std::size_t k = 0; k < keep.size(); ++k) sub.degree[k] = full.degree[keep[k]];
        for (const auto& a : h.arrows()) {
            auto si = into[*h.indexOf(a.source)], ti = into[*h.indexOf(a.target)];
            if (si && ti) sub.boundary[*si].flip(*ti);
        }
        Homology subH(sub);
        std::vector<std::optional<std::size_t>> inclusion(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) inclusion[k] = keep[k];
        HomologyMap m = inducedOnHomology(sub, subH, full, fullH, inclusion);
        if (!m.isZero()) return s;
    }
    throw DomainError("hatTau: inclusion scan exhausted without a nontrivial map");
}

}  // namespace kfc

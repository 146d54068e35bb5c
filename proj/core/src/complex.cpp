#include "kfc/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace kfc {

std::string ValidationReport::str() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.message << "\n";
    return os.str();
}

CfkComplex::CfkComplex(std::string name, std::vector<Generator> generators,
                       std::vector<Arrow> arrows)
    : name_(std::move(name)), generators_(std::move(generators)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        index_.emplace(generators_[i].id, i);  // duplicates keep the first; validate() reports them
}

std::optional<std::size_t> CfkComplex::indexOf(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool CfkComplex::operator==(const CfkComplex& other) const {
    return name_ == other.name_ && generators_ == other.generators_ && arrows_ == other.arrows_;
}

int arrowHLen(const Arrow& a) { return a.u_power; }

int arrowVLen(const CfkComplex& c, const Arrow& a) {
    auto s = c.indexOf(a.source), t = c.indexOf(a.target);
    if (!s || !t) throw std::logic_error("arrowVLen: dangling arrow");
    return c.generators()[*s].alexander - c.generators()[*t].alexander + a.u_power;
}

ValidationReport validate(const CfkComplex& c) {
    ValidationReport report;
    auto complain = [&](std::string msg) { report.violations.push_back({std::move(msg)}); };

    std::set<std::string> seen;
    for (const auto& g : c.generators())
        if (!seen.insert(g.id).second)
            complain("duplicate generator id '" + g.id + "'");

    bool structurallySound = report.valid();
    std::set<std::tuple<std::string, std::string, int>> arrowKeys;
    for (const auto& a : c.arrows()) {
        std::ostringstream tag;
        tag << "arrow " << a.source << " -> " << a.target << " U^" << a.u_power;
        if (!arrowKeys.insert({a.source, a.target, a.u_power}).second) {
            complain("duplicate " + tag.str());
            structurallySound = false;
        }
        auto s = c.indexOf(a.source), t = c.indexOf(a.target);
        if (!s || !t) {
            complain(tag.str() + ": dangling endpoint '" + (!s ? a.source : a.target) + "'");
            structurallySound = false;
            continue;
        }
        if (a.u_power < 0) {
            complain(tag.str() + ": negative U-power");
            structurallySound = false;
            continue;
        }
        const Generator& src = c.generators()[*s];
        const Generator& tgt = c.generators()[*t];
        if (tgt.maslov - 2 * a.u_power != src.maslov - 1)
            complain(tag.str() + ": Maslov drop violated (M(" + tgt.id + ")-2n=" +
                     std::to_string(tgt.maslov - 2 * a.u_power) + ", M(" + src.id + ")-1=" +
                     std::to_string(src.maslov - 1) + ")");
        int vlen = src.alexander - tgt.alexander + a.u_power;
        if (vlen < 0)
            complain(tag.str() + ": negative vertical length " + std::to_string(vlen));
    }

    if (structurallySound) {
        // d^2 = 0: for every (source, final target, total U-power) the number
        // of two-step paths is even.
        std::map<std::tuple<std::string, std::string, int>, int> paths;
        std::multimap<std::string, const Arrow*> bySource;
        for (const auto& a : c.arrows()) bySource.emplace(a.source, &a);
        for (const auto& a : c.arrows()) {
            auto [lo, hi] = bySource.equal_range(a.target);
            for (auto it = lo; it != hi; ++it)
                paths[{a.source, it->second->target, a.u_power + it->second->u_power}]++;
        }
        for (const auto& [key, count] : paths) {
            if (count % 2 != 0) {
                const auto& [src, tgt, n] = key;
                complain("d^2 != 0: odd number of paths " + src + " ~> " + tgt + " with total U^" +
                         std::to_string(n));
            }
        }
    }
    return report;
}

void requireValid(const CfkComplex& c, const char* op) {
    ValidationReport r = validate(c);
    if (!r.valid())
        throw ValidationError(std::string(op) + ": input complex '" + c.name() + "' is invalid:\n" + r.str(), r);
}

CfkComplex tensor(const CfkComplex& a, const CfkComplex& b) {
    requireValid(a, "tensor");
    requireValid(b, "tensor");
    std::vector<Generator> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    auto pairId = [](const std::string& x, const std::string& y) { return x + "|" + y; };
    for (const auto& x : a.generators())
        for (const auto& y : b.generators())
            gens.push_back({pairId(x.id, y.id), x.maslov + y.maslov, x.alexander + y.alexander});
    std::vector<Arrow> arrows;
    for (const auto& ar : a.arrows())
        for (const auto& y : b.generators())
            arrows.push_back({pairId(ar.source, y.id), pairId(ar.target, y.id), ar.u_power});
    for (const auto& x : a.generators())
        for (const auto& br : b.arrows())
            arrows.push_back({pairId(x.id, br.source), pairId(x.id, br.target), br.u_power});
    return CfkComplex(a.name() + "_x_" + b.name(), std::move(gens), std::move(arrows));
}

CfkComplex dual(const CfkComplex& c) {
    requireValid(c, "dual");
    std::vector<Generator> gens;
    gens.reserve(c.generators().size());
    for (const auto& g : c.generators()) gens.push_back({g.id + "*", -g.maslov, -g.alexander});
    std::vector<Arrow> arrows;
    for (const auto& a : c.arrows()) arrows.push_back({a.target + "*", a.source + "*", a.u_power});
    return CfkComplex(c.name() + "_dual", std::move(gens), std::move(arrows));
}

std::string canonicalSignature(const CfkComplex& c) {
    std::vector<std::pair<int, int>> gens;
    for (const auto& g : c.generators()) gens.emplace_back(g.maslov, g.alexander);
    std::sort(gens.begin(), gens.end());
    std::vector<std::tuple<int, int, int, int, int>> arrows;
    for (const auto& a : c.arrows()) {
        const auto& s = c.generators()[*c.indexOf(a.source)];
        const auto& t = c.generators()[*c.indexOf(a.target)];
        arrows.emplace_back(s.maslov, s.alexander, t.maslov, t.alexander, a.u_power);
    }
    std::sort(arrows.begin(), arrows.end());
    std::ostringstream os;
    for (auto [m, al] : gens) os << "g " << m << " " << al << "\n";
    for (auto [ms, as, mt, at, n] : arrows)
        os << "a " << ms << " " << as << " " << mt << " " << at << " " << n << "\n";
    return os.str();
}

}  // namespace kfc

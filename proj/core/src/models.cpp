#include "kfc/models.hpp"

#include <cstdlib>
#include <sstream>

#include "kfc/bordered.hpp"
#include "kfc/invariants.hpp"

namespace kfc {

CfkComplex unknot() { return CfkComplex("unknot", {{"x", 0, 0}}, {}); }

CfkComplex t23() {
    return CfkComplex("t23", {{"a", 0, 1}, {"b", -1, 0}, {"c", -2, -1}},
                      {{"b", "a", 1}, {"b", "c", 0}});
}

CfkComplex figureEight() {
    return CfkComplex("fig8",
                      {{"x1", 0, 0}, {"x2", -1, -1}, {"x3", 1, 1}, {"x4", 0, 0}, {"z", 0, 0}},
                      {{"x1", "x2", 0}, {"x1", "x3", 1}, {"x2", "x4", 1}, {"x3", "x4", 0}});
}

CfkComplex staircase(const StaircaseSpec& spec) {
    const auto& steps = spec.steps;
    if (steps.empty() || steps.size() % 2 != 0)
        throw DomainError("staircase: steps must be a nonempty (h1, v1, ..., hn, vn) list");
    for (int s : steps)
        if (s < 1) throw DomainError("staircase: all step lengths must be >= 1");

    int n = static_cast<int>(steps.size()) / 2;
    std::vector<Generator> gens;
    int alex = 0;
    for (int i = 0; i < n; ++i) alex += steps[2 * i + 1];  // sum of vertical steps
    int maslov = 0;
    gens.push_back({"c0", maslov, alex});
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i) {
        int h = steps[2 * (i - 1)];
        int v = steps[2 * (i - 1) + 1];
        alex -= h;
        maslov += -2 * h + 1;
        gens.push_back({"c" + std::to_string(2 * i - 1), maslov, alex});
        alex -= v;
        maslov -= 1;
        gens.push_back({"c" + std::to_string(2 * i), maslov, alex});
        arrows.push_back({"c" + std::to_string(2 * i - 1), "c" + std::to_string(2 * i - 2), h});
        arrows.push_back({"c" + std::to_string(2 * i - 1), "c" + std::to_string(2 * i), 0});
    }
    std::ostringstream name;
    name << "staircase";
    for (int s : steps) name << "_" << s;
    return CfkComplex(name.str(), std::move(gens), std::move(arrows));
}

HatComplex prop32Data(int p) {
    if (p < 2) throw DomainError("prop32Data: p must be at least 2");
    auto b = [](int k) { return "b" + std::to_string(k); };
    std::vector<HatGenerator> gens;
    auto add = [&](const std::string& id, int m, int a) { gens.push_back({id, m, a}); };

    add("au1", 0, p);
    add(b(1) + "v1", -1, p - 1);
    add(b(1) + "mu1", -2, -1);
    for (int j = 1; j <= p - 2; ++j) add(b(j) + "v2", -2 * j - 1, -j);
    for (int j = 1; j <= p - 2; ++j) add(b(j + 1) + "mu1", -2 * j - 2, -j - 1);
    add(b(p - 1) + "v2", -2 * p + 1, -p + 1);
    add(b(p) + "v2", -2 * p, -p);
    for (int j = 2; j <= p - 1; ++j) add(b(j) + "v1", -1, -j + p);
    for (int j = 2; j <= p - 1; ++j) add(b(2 * p - 1 - j) + "v1", -2, 0);
    for (int j = 1; j <= p - 1; ++j) add(b(j) + "mu2", 0, -j + p);
    for (int j = 1; j <= p - 1; ++j) add(b(2 * p - 1 - j) + "mu2", -1, 0);

    std::vector<HatArrow> arrows;
    arrows.push_back({b(1) + "v1", b(1) + "mu1", p});
    for (int j = 2; j <= p - 1; ++j)
        arrows.push_back({b(j) + "v1", b(2 * p - j - 1) + "v1", p - j});
    for (int j = 1; j <= p - 2; ++j)
        arrows.push_back({b(j) + "v2", b(j + 1) + "mu1", 1});
    arrows.push_back({b(p - 1) + "v2", b(p) + "v2", 1});
    for (int j = 1; j <= p - 1; ++j)
        arrows.push_back({b(j) + "mu2", b(2 * p - j - 1) + "mu2", p - j});

    HatComplex out("prop32_p" + std::to_string(p), std::move(gens), std::move(arrows));
    requireValid(out, "prop32Data");
    return out;
}

ConcordanceTriple combineConnectedSum(const ConcordanceTriple& j, const ConcordanceTriple& k) {
    if (j.a1 != k.a1 || j.a2 <= k.a2)
        throw DomainError("combineConnectedSum: combination rule inapplicable (requires "
                          "a1(J) = a1(K) and a2(J) > a2(K))");
    return {j.tau - k.tau, j.a1, j.a2};
}

KpReport kpPipeline(int p) {
    if (p < 2) throw DomainError("kpPipeline: p must be at least 2");
    auto tripleFromCable = [](int q) {
        HatComplex h = hatCable(q);
        int t = hatTau(h);
        auto [v1, v2] = deduceA1A2FromHat(h, t);
        return ConcordanceTriple{t, v1, v2};
    };
    ConcordanceTriple big = tripleFromCable(p);
    ConcordanceTriple small;
    if (p - 1 >= 2) {
        small = tripleFromCable(p - 1);
    } else {
        // D_{1,1} = D; the T(2,3) stand-in computed through the invariants.
        CfkComplex c = t23();
        small = {tau(c), a1(c), a2(c).value()};
    }
    ConcordanceTriple combined = combineConnectedSum(big, small);

    KpReport r;
    r.p = p;
    r.tau = combined.tau;
    r.a1 = combined.a1;
    r.a2 = combined.a2;
    r.g4_lower = std::abs(combined.tau);
    r.g4_upper = 1;
    r.gc_lower = std::abs(combined.tau - combined.a1 - combined.a2);
    r.topologically_slice = true;
    return r;
}

std::string renderKpReport(const KpReport& r) {
    std::ostringstream os;
    os << "K_" << r.p << " = D_{" << r.p << ",1} # -D_{" << r.p - 1 << ",1}\n";
    os << "tau   = " << r.tau << "\n";
    os << "a1    = " << r.a1 << "\n";
    os << "a2    = " << r.a2 << "\n";
    os << "g4    >= " << r.g4_lower << "\n";
    os << "g4    <= " << r.g4_upper << "   [paper fact]\n";
    os << "gc    >= " << r.gc_lower << "\n";
    os << "topologically slice: " << (r.topologically_slice ? "yes" : "no") << "   [paper fact]\n";
    return os.str();
}

}  // namespace kfc

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance here is exact; the checks are integer and string equality.

#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_util.hpp"
#include "kfc/bordered.hpp"
#include "kfc/invariants.hpp"
#include "kfc/io.hpp"
#include "kfc/models.hpp"
#include "kfc/reduce.hpp"

using namespace kfc;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

template <typename A, typename B>
void requireEq(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) {
        std::ostringstream os;
        os << what << " (got " << a << ", expected " << b << ")";
        throw Failure(os.str());
    }
}

std::vector<CfkComplex> baseModels() {
    return {unknot(), t23(), dual(t23()), figureEight(), staircase({{2, 1, 1, 2}})};
}

std::vector<CfkComplex> modelsAndPairwiseTensors() {
    auto base = baseModels();
    std::vector<CfkComplex> all = base;
    for (const auto& a : base)
        for (const auto& b : base) all.push_back(tensor(a, b));
    return all;
}

CfkComplex withAcyclicNoise(const CfkComplex& c) {
    std::vector<Generator> gens = c.generators();
    std::vector<Arrow> arrows = c.arrows();
    gens.push_back({"noise_p", 1, 0});
    gens.push_back({"noise_q", 0, 0});
    arrows.push_back({"noise_p", "noise_q", 0});
    gens.push_back({"noise_r", -2, -1});
    gens.push_back({"noise_s", -3, -1});
    arrows.push_back({"noise_r", "noise_s", 0});
    return CfkComplex(c.name() + "+noise", std::move(gens), std::move(arrows));
}

// ---- criteria ----

void criterion1() {
    for (int p = 2; p <= 6; ++p) {
        HatComplex computed = hatCable(p);
        HatComplex expected = prop32Data(p);
        requireEq(computed.generators().size(), static_cast<std::size_t>(6 * p - 5),
                  "rank at p=" + std::to_string(p));
        require(canonicalSignature(computed) == canonicalSignature(expected),
                "canonical signature mismatch at p=" + std::to_string(p));
        std::set<std::string> names1, names2;
        std::multiset<std::pair<int, int>> gr1, gr2;
        for (const auto& g : computed.generators()) {
            names1.insert(g.id);
            gr1.insert({*g.maslov, *g.alexander});
        }
        for (const auto& g : expected.generators()) {
            names2.insert(g.id);
            gr2.insert({*g.maslov, *g.alexander});
        }
        require(names1 == names2, "generator names at p=" + std::to_string(p));
        require(gr1 == gr2, "(M, A) multiset at p=" + std::to_string(p));
        std::set<std::tuple<std::string, std::string, int>> d1, d2;
        for (const auto& a : computed.arrows()) d1.insert({a.source, a.target, a.shift});
        for (const auto& a : expected.arrows()) d2.insert({a.source, a.target, a.shift});
        require(d1 == d2, "higher differentials at p=" + std::to_string(p));
    }
}

void criterion2() {
    for (int p = 2; p <= 4; ++p) {
        HatComplex box = boxTensor(cfaCable(p), cfdTrefoil0());
        requireEq(box.generators().size(), static_cast<std::size_t>(8 * p - 5),
                  "generator count at p=" + std::to_string(p));
        // the sixteen displayed families, term by term
        auto b = [](int k) { return "b" + std::to_string(k); };
        std::set<std::tuple<std::string, std::string, int>> expected;
        expected.insert({"au2", "au3", p});
        expected.insert({"au2", b(1) + "mu1", 1});
        expected.insert({"au2", b(2 * p - 2) + "v1", 0});
        expected.insert({"au3", b(2 * p - 2) + "mu1", 0});
        for (int j = 1; j <= p - 1; ++j)
            expected.insert({b(j) + "v1", b(2 * p - j - 1) + "v1", p - j});
        for (int j = 1; j <= p - 2; ++j) {
            expected.insert({b(j) + "v2", b(2 * p - j - 1) + "v2", p - j});
            expected.insert({b(j) + "v2", b(j + 1) + "mu1", 1});
        }
        expected.insert({b(p - 1) + "v2", b(p) + "v2", 1});
        for (int j = 1; j <= p - 1; ++j)
            expected.insert({b(j) + "mu1", b(2 * p - j - 1) + "mu1", p - j});
        for (int j = 1; j <= p - 1; ++j)
            expected.insert({b(j) + "mu2", b(2 * p - j - 1) + "mu2", p - j});
        for (int j = p + 1; j <= 2 * p - 2; ++j)
            expected.insert({b(j) + "v2", b(j - 1) + "mu1", 0});
        std::set<std::tuple<std::string, std::string, int>> actual;
        for (const auto& a : box.arrows()) actual.insert({a.source, a.target, a.shift});
        require(actual == expected, "differential list at p=" + std::to_string(p));
    }
}

void criterion3() {
    for (int p = 2; p <= 6; ++p) {
        auto [v1, v2] = deduceA1A2FromHat(hatCable(p), p);
        requireEq(v1, 1, "a1 at p=" + std::to_string(p));
        requireEq(v2, p, "a2 at p=" + std::to_string(p));
    }
}

void criterion4() {
    for (int p = 2; p <= 6; ++p) {
        KpReport r = kpPipeline(p);
        requireEq(r.tau, 1, "tau at p=" + std::to_string(p));
        requireEq(r.a1, 1, "a1 at p=" + std::to_string(p));
        requireEq(r.a2, p, "a2 at p=" + std::to_string(p));
        requireEq(r.gc_lower, p, "gc bound at p=" + std::to_string(p));
        requireEq(r.g4_lower, 1, "g4 bound at p=" + std::to_string(p));
    }
}

void criterion5() {
    for (int p = 2; p <= 8; ++p) {
        LaurentPoly expected;
        expected.addTerm(p, 1);
        expected.addTerm(0, -1);
        expected.addTerm(-p, 1);
        require(eulerCharacteristic(hatCable(p)) == expected,
                "Euler characteristic at p=" + std::to_string(p) + ": got " +
                    eulerCharacteristic(hatCable(p)).str());
    }
}

void criterion6() {
    auto base = baseModels();
    auto all = modelsAndPairwiseTensors();

    // closure: tensors and duals stay valid
    for (const auto& a : base) {
        require(validate(dual(a)).valid(), "dual of " + a.name() + " invalid");
        for (const auto& b : base)
            require(validate(tensor(a, b)).valid(),
                    "tensor " + a.name() + " x " + b.name() + " invalid");
    }
    // tau additivity
    for (const auto& a : base)
        for (const auto& b : base)
            requireEq(tau(tensor(a, b)), tau(a) + tau(b),
                      "tau additivity for " + a.name() + " x " + b.name());
    // sign flips and trichotomy, on models and tensors
    for (const auto& c : all) {
        requireEq(tau(dual(c)), -tau(c), "tau sign flip for " + c.name());
        int e = epsilon(c);
        requireEq(epsilon(dual(c)), -e, "epsilon sign flip for " + c.name());
        require(e == -1 || e == 0 || e == 1, "epsilon trichotomy for " + c.name());
        require(epsilonEquivalent(c, c), "self epsilon-equivalence for " + c.name());
    }
    // reduction invariance of the invariant stack
    for (const auto& c : all) {
        InvariantReport before = report(c);
        CfkComplex red = edgeReduce(withAcyclicNoise(c));
        require(isReduced(red), "reduction incomplete for " + c.name());
        InvariantReport after = report(red);
        require(before.tau == after.tau && before.epsilon == after.epsilon &&
                    before.a1 == after.a1 && before.a2 == after.a2 &&
                    before.breadth == after.breadth,
                "reduction changed invariants of " + c.name());
    }
    // Lemma 2.2 basis structure on every epsilon = +1 model
    for (const auto& c : all) {
        if (epsilon(c) != 1) continue;
        CfkComplex red = edgeReduce(c);
        int t = tau(red);
        int v1 = a1(red);
        auto v2 = a2(red);
        require(v2.has_value(), "a2 undefined on " + c.name());
        bool found = false;
        for (const auto& h : red.arrows()) {
            if (arrowVLen(red, h) != 0 || h.u_power != v1) continue;
            if (red.generators()[*red.indexOf(h.target)].alexander != t) continue;
            for (const auto& v : red.arrows())
                if (v.source == h.source && v.u_power == 0 && arrowVLen(red, v) == *v2)
                    found = true;
        }
        require(found, "Lemma 2.2 basis structure not visible on " + c.name());
    }
}

void criterion7() {
    for (const auto& c : modelsAndPairwiseTensors())
        require(gammaLowerBound(c) <= breadth(c),
                "gamma bound exceeds breadth on " + c.name());
    requireEq(gammaLowerBound(t23()), 1, "gamma bound of the t23 fixture");
}

void criterion8() {
    auto inv = cli::run("invariants " + cli::dataDir() + "/t23.cfk");
    require(inv.exit_code == 0, "invariants exit code");
    requireEq(inv.out,
              std::string("tau=1 epsilon=1 a1=1 a2=1 breadth=1 gamma_lb=1 g4_lb=1 gc_lb=1\n"),
              "invariants t23.cfk golden");

    auto table = cli::run("table --p 3");
    require(table.exit_code == 0, "table exit code");
    require(table.out.find("au1        (0, 3)    0") != std::string::npos,
            "table au1 row");
    requireEq(cli::run("table --p 3").out, table.out, "table determinism");

    auto kp = cli::run("kp --p 3");
    require(kp.exit_code == 0, "kp exit code");
    require(kp.out.find("gc    >= 3") != std::string::npos, "kp gc line");
    require(kp.out.find("[paper fact]") != std::string::npos, "kp paper-fact annotation");
    requireEq(cli::run("kp --p 3").out, kp.out, "kp determinism");

    // round-trip identity on all models
    for (const auto& c : baseModels()) {
        CfkComplex back = parseCfk(serialize(c));
        require(serialize(back) == serialize(c), "round trip for " + c.name());
    }
    for (int p = 2; p <= 4; ++p) {
        HatComplex h = hatCable(p);
        require(serialize(parseHat(serialize(h))) == serialize(h),
                "round trip for cable p=" + std::to_string(p));
        HatComplex pr = prop32Data(p);
        require(serialize(parseHat(serialize(pr))) == serialize(pr),
                "round trip for prop32 p=" + std::to_string(p));
    }
}

}  // namespace

int main() {
    struct Criterion {
        int num;
        std::string name;
        std::function<void()> body;
    };
    std::vector<Criterion> criteria = {
        {1, "cable oracle equivalence: hatCable(p) == prop32Data(p), p=2..6", criterion1},
        {2, "raw box tensor fidelity: generators and differential list, p=2..4", criterion2},
        {3, "Lemma 3.4 reproduction: deduceA1A2FromHat = (1, p), p=2..6", criterion3},
        {4, "Theorem 1.3 reproduction: kpPipeline bounds, p=2..6", criterion4},
        {5, "Euler characteristic oracle: t^p - 1 + t^-p, p=2..8", criterion5},
        {6, "invariant property suite on models and pairwise tensors", criterion6},
        {7, "gamma bound consistency: gamma_lb <= breadth, gamma_lb(t23) = 1", criterion7},
        {8, "CLI golden outputs and serialization round trips", criterion8},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        try {
            c.body();
            std::cout << "[PASS] criterion " << c.num << ": " << c.name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << c.num << ": " << c.name << " -- " << e.what()
                      << "\n";
        }
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}

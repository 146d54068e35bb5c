#include "kfc/bordered.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "kfc/f2.hpp"
#include "kfc/io.hpp"
#include "kfc/reduce.hpp"

namespace kfc {

Idem leftIdem(Rho r) {
    switch (r) {
        case Rho::R1:
        case Rho::R3:
        case Rho::R12:
        case Rho::R123:
            return Idem::I0;
        case Rho::R2:
        case Rho::R23:
            return Idem::I1;
    }
    throw std::logic_error("leftIdem: bad chord");
}

Idem rightIdem(Rho r) {
    switch (r) {
        case Rho::R1:
        case Rho::R3:
        case Rho::R23:
        case Rho::R123:
            return Idem::I1;
        case Rho::R2:
        case Rho::R12:
            return Idem::I0;
    }
    throw std::logic_error("rightIdem: bad chord");
}

std::optional<Rho> mulRho(Rho a, Rho b) {
    if (a == Rho::R1 && b == Rho::R2) return Rho::R12;
    if (a == Rho::R2 && b == Rho::R3) return Rho::R23;
    if (a == Rho::R1 && b == Rho::R23) return Rho::R123;
    if (a == Rho::R12 && b == Rho::R3) return Rho::R123;
    return std::nullopt;
}

std::string rhoName(Rho r) {
    switch (r) {
        case Rho::R1: return "rho1";
        case Rho::R2: return "rho2";
        case Rho::R3: return "rho3";
        case Rho::R12: return "rho12";
        case Rho::R23: return "rho23";
        case Rho::R123: return "rho123";
    }
    return "?";
}

namespace {

std::string dLabelName(Rho r) {
    switch (r) {
        case Rho::R1: return "D1";
        case Rho::R2: return "D2";
        case Rho::R3: return "D3";
        case Rho::R12: return "D12";
        case Rho::R23: return "D23";
        case Rho::R123: return "D123";
    }
    return "?";
}

std::optional<Rho> dLabelFromName(const std::string& s) {
    if (s == "D1") return Rho::R1;
    if (s == "D2") return Rho::R2;
    if (s == "D3") return Rho::R3;
    if (s == "D12") return Rho::R12;
    if (s == "D23") return Rho::R23;
    if (s == "D123") return Rho::R123;
    return std::nullopt;
}

}  // namespace

TypeD::TypeD(std::string name, std::vector<TypeDGenerator> generators,
             std::vector<TypeDArrow> arrows)
    : name_(std::move(name)), generators_(std::move(generators)), arrows_(std::move(arrows)) {
    for (const auto& a : arrows_) {
        auto s = indexOf(a.source), t = indexOf(a.target);
        if (!s || !t)
            throw DomainError("type D structure '" + name_ + "': dangling arrow " + a.source +
                              " -> " + a.target);
        if (generators_[*s].idem != leftIdem(a.label) ||
            generators_[*t].idem != rightIdem(a.label))
            throw DomainError("type D structure '" + name_ + "': arrow " + a.source + " -> " +
                              a.target + " (" + dLabelName(a.label) +
                              ") is idempotent-incompatible");
    }
    // Boundedness: the delta graph must be acyclic.
    std::vector<int> state(generators_.size(), 0);
    std::function<void(std::size_t)> visit = [&](std::size_t u) {
        state[u] = 1;
        for (const auto& a : arrows_) {
            if (*indexOf(a.source) != u) continue;
            auto v = *indexOf(a.target);
            if (state[v] == 1)
                throw DomainError("type D structure '" + name_ +
                                  "' is unbounded: delta graph has a cycle");
            if (state[v] == 0) visit(v);
        }
        state[u] = 2;
    };
    for (std::size_t u = 0; u < generators_.size(); ++u)
        if (state[u] == 0) visit(u);
}

std::optional<std::size_t> TypeD::indexOf(std::string_view id) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].id == id) return i;
    return std::nullopt;
}

int TypeD::longestPath() const {
    std::vector<std::optional<int>> memo(generators_.size());
    std::function<int(std::size_t)> depth = [&](std::size_t u) -> int {
        if (memo[u]) return *memo[u];
        int best = 0;
        for (const auto& a : arrows_)
            if (*indexOf(a.source) == u) best = std::max(best, 1 + depth(*indexOf(a.target)));
        memo[u] = best;
        return best;
    };
    int best = 0;
    for (std::size_t u = 0; u < generators_.size(); ++u) best = std::max(best, depth(u));
    return best;
}

TypeD cfdTrefoil0() {
    return TypeD("cfd_trefoil0",
                 {{"u1", Idem::I0},
                  {"u2", Idem::I0},
                  {"u3", Idem::I0},
                  {"v1", Idem::I1},
                  {"v2", Idem::I1},
                  {"mu1", Idem::I1},
                  {"mu2", Idem::I1}},
                 {{"v2", "u3", Rho::R2},
                  {"u2", "v2", Rho::R3},
                  {"u2", "v1", Rho::R1},
                  {"u1", "v1", Rho::R123},
                  {"u3", "mu1", Rho::R1},
                  {"mu2", "mu1", Rho::R23},
                  {"u1", "mu2", Rho::R3}});
}

TypeD parseTypeD(std::string_view text) {
    // Reuses the line conventions of the complex formats.
    std::vector<TypeDGenerator> gens;
    std::vector<TypeDArrow> arrows;
    std::string name = "typeD";
    int lineNo = 0;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) { throw ParseError(lineNo, what); };
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(
            pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        ++lineNo;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        std::istringstream is(line);
        std::vector<std::string> t;
        std::string tok;
        while (is >> tok) {
            if (tok[0] == '#') break;
            t.push_back(tok);
        }
        if (t.empty()) continue;
        if (t[0] == "typed" || t[0] == "complex") {
            if (t.size() != 2) fail("expected '" + t[0] + " <name>'");
            name = t[1];
        } else if (t[0] == "gen") {
            if (t.size() != 3 || t[2].rfind("idem=", 0) != 0)
                fail("expected 'gen <id> idem=<0|1>'");
            std::string v = t[2].substr(5);
            if (v != "0" && v != "1") fail("idem must be 0 or 1");
            gens.push_back({t[1], v == "0" ? Idem::I0 : Idem::I1});
        } else if (t[0] == "delta") {
            if (t.size() != 5 || t[2] != "->") fail("expected 'delta <src> -> <tgt> D<index>'");
            auto label = dLabelFromName(t[4]);
            if (!label) fail("unknown delta label '" + t[4] + "'");
            arrows.push_back({t[1], t[3], *label});
        } else {
            fail("unrecognized directive '" + t[0] + "'");
        }
    }
    return TypeD(std::move(name), std::move(gens), std::move(arrows));
}

std::string serialize(const TypeD& d) {
    std::ostringstream os;
    os << "typed " << d.name() << "\n";
    for (const auto& g : d.generators())
        os << "gen " << g.id << " idem=" << (g.idem == Idem::I0 ? "0" : "1") << "\n";
    for (const auto& a : d.arrows())
        os << "delta " << a.source << " -> " << a.target << " " << dLabelName(a.label) << "\n";
    return os.str();
}

TypeA::TypeA(int p) : p_(p) {
    if (p < 2) throw DomainError("cfaCable: p must be at least 2");
    generators_.push_back({"a", Idem::I0});
    for (int i = 1; i <= 2 * p - 2; ++i)
        generators_.push_back({"b" + std::to_string(i), Idem::I1});
}

std::optional<std::size_t> TypeA::indexOf(std::string_view id) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].id == id) return i;
    return std::nullopt;
}

std::optional<AOutput> TypeA::lookup(std::size_t x, std::span<const Rho> ch) const {
    const int p = p_;
    if (x == 0) {
        // m_{3+i}(a, rho3, rho23^i, rho2)            = a [pi+p]
        // m_{4+i+j}(a, rho3, rho23^i, rho2, rho12^j, rho1) = b_{j+1} [pi+j+1]
        // m_{2+j}(a, rho12^j, rho1)                  = b_{2p-j-2} [0]
        if (!ch.empty() && ch.front() == Rho::R3) {
            std::size_t k = 1;
            while (k < ch.size() && ch[k] == Rho::R23) ++k;
            if (k >= ch.size() || ch[k] != Rho::R2) return std::nullopt;
            int i = static_cast<int>(k - 1);
            ++k;
            if (k == ch.size()) return AOutput{0, p * i + p};
            std::size_t j0 = k;
            while (k < ch.size() && ch[k] == Rho::R12) ++k;
            int j = static_cast<int>(k - j0);
            if (k + 1 == ch.size() && ch[k] == Rho::R1 && j <= p - 2)
                return AOutput{static_cast<std::size_t>(j + 1), p * i + j + 1};
            return std::nullopt;
        }
        std::size_t k = 0;
        while (k < ch.size() && ch[k] == Rho::R12) ++k;
        int j = static_cast<int>(k);
        if (k + 1 == ch.size() && ch[k] == Rho::R1 && j <= p - 2)
            return AOutput{static_cast<std::size_t>(2 * p - j - 2), 0};
        return std::nullopt;
    }
    // m_1(b_j)                          = b_{2p-j-1} [p-j],  1 <= j <= p-1
    // m_{3+i}(b_j, rho2, rho12^i, rho1) = b_{j+i+1} [i+1],   1 <= j <= p-2
    // m_{3+i}(b_j, rho2, rho12^i, rho1) = b_{j-i-1} [0],     p+1 <= j <= 2p-2
    const int bj = static_cast<int>(x);
    if (ch.empty()) {
        if (bj <= p - 1) return AOutput{static_cast<std::size_t>(2 * p - bj - 1), p - bj};
        return std::nullopt;
    }
    if (ch.front() != Rho::R2) return std::nullopt;
    std::size_t k = 1;
    while (k < ch.size() && ch[k] == Rho::R12) ++k;
    int i = static_cast<int>(k - 1);
    if (k + 1 != ch.size() || ch[k] != Rho::R1) return std::nullopt;
    if (1 <= bj && bj <= p - 2 && i <= p - bj - 2)
        return AOutput{static_cast<std::size_t>(bj + i + 1), i + 1};
    if (p + 1 <= bj && bj <= 2 * p - 2 && i <= bj - p - 1)
        return AOutput{static_cast<std::size_t>(bj - i - 1), 0};
    return std::nullopt;
}

TypeA cfaCable(int p) { return TypeA(p); }

HatComplex boxTensor(const TypeA& a, const TypeD& d) {
    // Generators: idempotent-matched pairs.
    struct Pair {
        std::size_t x, y;
        std::string id;
    };
    std::vector<Pair> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pairIndex;
    for (std::size_t xi = 0; xi < a.generators().size(); ++xi)
        for (std::size_t yi = 0; yi < d.generators().size(); ++yi)
            if (a.generators()[xi].idem == d.generators()[yi].idem) {
                pairIndex[{xi, yi}] = pairs.size();
                pairs.push_back({xi, yi, a.generators()[xi].id + d.generators()[yi].id});
            }

    // Outgoing delta arrows per node, in declaration order.
    std::vector<std::vector<const TypeDArrow*>> outArrows(d.generators().size());
    for (const auto& ar : d.arrows()) outArrows[*d.indexOf(ar.source)].push_back(&ar);

    std::set<std::tuple<std::size_t, std::size_t, int>> terms;  // F2 cancellation
    auto toggle = [&](std::size_t s, std::size_t t, int shift) {
        auto key = std::make_tuple(s, t, shift);
        auto it = terms.find(key);
        if (it != terms.end())
            terms.erase(it);
        else
            terms.insert(key);
    };

    std::vector<Rho> labels;
    for (const auto& pair : pairs) {
        // Every delta path from pair.y, the empty path included.
        std::function<void(std::size_t)> walk = [&](std::size_t node) {
            if (auto out = a.lookup(pair.x, labels)) {
                // Idempotent bookkeeping for the emitted term.
                if (!labels.empty() &&
                    leftIdem(labels.front()) != a.generators()[pair.x].idem)
                    throw std::logic_error("boxTensor: idempotent bookkeeping violated");
                if (a.generators()[out->gen].idem != d.generators()[node].idem)
                    throw std::logic_error("boxTensor: idempotent bookkeeping violated");
                toggle(pairIndex.at({pair.x, pair.y}), pairIndex.at({out->gen, node}),
                       out->shift);
            }
            for (const TypeDArrow* ar : outArrows[node]) {
                labels.push_back(ar->label);
                walk(*d.indexOf(ar->target));
                labels.pop_back();
            }
        };
        walk(pair.y);
    }

    std::vector<HatGenerator> gens;
    for (const auto& pr : pairs) gens.push_back({pr.id, std::nullopt, std::nullopt});
    std::vector<HatArrow> arrows;
    for (const auto& [s, t, shift] : terms)
        arrows.push_back({pairs[s].id, pairs[t].id, shift});

    HatComplex out("box_" + std::to_string(a.p()) + "_" + d.name(), std::move(gens),
                   std::move(arrows));
    requireValid(out, "boxTensor");
    return out;
}

namespace {

/// Table of (M, A) for the reduced cable complex, keyed by generator name.
std::map<std::string, std::pair<int, int>> cableGradingTable(int p) {
    std::map<std::string, std::pair<int, int>> t;
    auto b = [](int k) { return "b" + std::to_string(k); };
    t["au1"] = {0, p};
    t[b(1) + "v1"] = {-1, p - 1};
    t[b(1) + "mu1"] = {-2, -1};
    for (int j = 1; j <= p - 2; ++j) t[b(j) + "v2"] = {-2 * j - 1, -j};
    for (int j = 1; j <= p - 2; ++j) t[b(j + 1) + "mu1"] = {-2 * j - 2, -j - 1};
    t[b(p - 1) + "v2"] = {-2 * p + 1, -p + 1};
    t[b(p) + "v2"] = {-2 * p, -p};
    for (int j = 2; j <= p - 1; ++j) t[b(j) + "v1"] = {-1, p - j};
    for (int j = 2; j <= p - 1; ++j) t[b(2 * p - 1 - j) + "v1"] = {-2, 0};
    for (int j = 1; j <= p - 1; ++j) t[b(j) + "mu2"] = {0, p - j};
    for (int j = 1; j <= p - 1; ++j) t[b(2 * p - 1 - j) + "mu2"] = {-1, 0};
    if (t.size() != static_cast<std::size_t>(6 * p - 5))
        throw std::logic_error("cableGradingTable: row count mismatch");
    return t;
}

}  // namespace

HatComplex hatCable(int p) {
    if (p < 2) throw DomainError("hatCable: p must be at least 2");
    HatComplex raw = boxTensor(cfaCable(p), cfdTrefoil0());
    HatComplex red = edgeReduce(raw);

    auto table = cableGradingTable(p);
    std::set<std::string> survivors, expected;
    for (const auto& g : red.generators()) survivors.insert(g.id);
    for (const auto& [k, v] : table) expected.insert(k);
    if (survivors != expected) {
        std::ostringstream os;
        os << "cable oracle mismatch at p=" << p << ": reduction survivors {";
        for (const auto& s : survivors) os << " " << s;
        os << " } differ from the expected generator set";
        throw DomainError(os.str());
    }

    std::vector<HatGenerator> gens;
    for (const auto& g : red.generators()) {
        auto [m, al] = table.at(g.id);
        gens.push_back({g.id, m, al});
    }
    HatComplex out("cable_p" + std::to_string(p) + "_hat", std::move(gens), red.arrows());
    requireValid(out, "hatCable");
    return out;
}

std::pair<int, int> deduceA1A2FromHat(const HatComplex& h, int tau) {
    requireValid(h, "deduceA1A2FromHat");
    if (!h.hasAbsoluteGradings())
        throw DomainError("deduceA1A2FromHat: absolute gradings required");
    if (!isReduced(h)) throw DomainError("deduceA1A2FromHat: complex must be reduced");

    F2Chain chain;
    chain.degree.resize(h.generators().size());
    for (std::size_t i = 0; i < h.generators().size(); ++i)
        chain.degree[i] = *h.generators()[i].maslov;
    chain.boundary.assign(h.generators().size(), BitVec(h.generators().size()));
    for (const auto& a : h.arrows())
        chain.boundary[*h.indexOf(a.source)].flip(*h.indexOf(a.target));
    Homology homology(chain);
    if (homology.dimension() != 1)
        throw DomainError("deduceA1A2FromHat: total homology dimension " +
                          std::to_string(homology.dimension()) + ", expected 1");
    if (hatTau(h) != tau)
        throw DomainError("deduceA1A2FromHat: homology class sits at filtration level " +
                          std::to_string(hatTau(h)) + ", not tau=" + std::to_string(tau));
    const int maslov0 = homology.degreeOf(0);

    // Row-tau translate of x has Maslov M(x) + 2 tau - 2 A(x); the horizontal
    // partner of x0 is the unique candidate one Maslov grading above x0.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < h.generators().size(); ++i) {
        const auto& g = h.generators()[i];
        if (*g.alexander < tau && *g.maslov + 2 * tau - 2 * *g.alexander == maslov0 + 1)
            candidates.push_back(i);
    }
    if (candidates.size() != 1)
        throw DomainError("deduceA1A2FromHat: inconclusive, " +
                          std::to_string(candidates.size()) +
                          " grading candidates in the tau row");
    const auto& x1 = h.generators()[candidates.front()];

    std::vector<const HatArrow*> outgoing;
    for (const auto& a : h.arrows())
        if (a.source == x1.id) outgoing.push_back(&a);
    if (outgoing.empty())
        throw DomainError("deduceA1A2FromHat: candidate '" + x1.id +
                          "' has no outgoing vertical arrow; a2 undefined by this method");
    if (outgoing.size() > 1)
        throw DomainError("deduceA1A2FromHat: inconclusive, candidate '" + x1.id +
                          "' has several outgoing arrows");
    return {tau - *x1.alexander, outgoing.front()->shift};
}

LaurentPoly eulerCharacteristic(const HatComplex& h) {
    if (!h.hasAbsoluteGradings())
        throw DomainError("eulerCharacteristic: absolute gradings required");
    LaurentPoly chi;
    for (const auto& g : h.generators())
        chi.addTerm(*g.alexander, (*g.maslov % 2 == 0) ? 1 : -1);
    return chi;
}

}  // namespace kfc

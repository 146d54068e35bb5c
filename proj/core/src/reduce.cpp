#include "kfc/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kfc {
namespace {

// Shared cancellation engine. Generators are referenced by index in id-sorted
// order so that pair<int,int> ordering is the lexicographic id ordering.
// `weight` is the u_power (CFK) or shift (hat); eligibility is supplied by
// the caller since the CFK case also needs the vertical length.
class Reducer {
public:
    Reducer(std::size_t n) : alive_(n, true) {}

    void addArrow(std::size_t src, std::size_t tgt, int weight) {
        toggle(src, tgt, weight);
    }

    void setEligible(std::size_t src, std::size_t tgt, bool eligible) {
        if (eligible)
            eligible_.insert({src, tgt});
        else
            eligible_.erase({src, tgt});
    }

    bool aliveGen(std::size_t g) const { return alive_[g]; }

    const std::map<std::pair<std::size_t, std::size_t>, std::set<int>>& arrows() const {
        return arrows_;
    }

    /// Runs cancellation to a fixed point; isEligible(src, tgt, weight) must
    /// be a pure predicate on the arrow data.
    template <typename Eligible>
    int run(Eligible isEligible) {
        refreshEligible(isEligible);
        int steps = 0;
        while (!eligible_.empty()) {
            auto [i, j] = *eligible_.begin();
            cancel(i, j, isEligible);
            ++steps;
        }
        return steps;
    }

private:
    template <typename Eligible>
    void refreshEligible(Eligible isEligible) {
        eligible_.clear();
        for (const auto& [edge, weights] : arrows_)
            for (int w : weights)
                if (isEligible(edge.first, edge.second, w)) {
                    eligible_.insert(edge);
                    break;
                }
    }

    void toggle(std::size_t src, std::size_t tgt, int weight) {
        auto key = std::make_pair(src, tgt);
        auto& weights = arrows_[key];
        auto it = weights.find(weight);
        if (it != weights.end()) {
            weights.erase(it);
            if (weights.empty()) {
                arrows_.erase(key);
                out_[src].erase(tgt);
                in_[tgt].erase(src);
            }
        } else {
            weights.insert(weight);
            out_[src].insert(tgt);
            in_[tgt].insert(src);
        }
    }

    template <typename Eligible>
    void cancel(std::size_t i, std::size_t j, Eligible isEligible) {
        // Collect incoming-to-j and outgoing-from-i arrows, excluding the
        // canceled endpoints themselves.
        std::vector<std::pair<std::size_t, int>> intoJ, outOfI;
        for (auto k : in_[j])
            if (k != i)
                for (int a : arrows_.at({k, j})) intoJ.push_back({k, a});
        for (auto l : out_[i])
            if (l != j)
                for (int b : arrows_.at({i, l})) outOfI.push_back({l, b});

        // Drop the two generators and every arrow touching them.
        alive_[i] = alive_[j] = false;
        auto dropIncident = [&](std::size_t g) {
            for (auto t : std::set<std::size_t>(out_[g].begin(), out_[g].end()))
                removeEdge(g, t);
            for (auto s : std::set<std::size_t>(in_[g].begin(), in_[g].end()))
                removeEdge(s, g);
        };
        dropIncident(i);
        dropIncident(j);

        // Zig-zag toggles.
        for (auto [k, a] : intoJ)
            for (auto [l, b] : outOfI) {
                if (k == l)
                    throw std::logic_error("edgeReduce: cancellation would create a self-arrow");
                toggle(k, l, a + b);
                updateEligibility(k, l, isEligible);
            }
        // Eligibility entries of dropped edges.
        for (auto it = eligible_.begin(); it != eligible_.end();) {
            if (!alive_[it->first] || !alive_[it->second])
                it = eligible_.erase(it);
            else
                ++it;
        }
    }

    void removeEdge(std::size_t src, std::size_t tgt) {
        arrows_.erase({src, tgt});
        out_[src].erase(tgt);
        in_[tgt].erase(src);
    }

    template <typename Eligible>
    void updateEligibility(std::size_t src, std::size_t tgt, Eligible isEligible) {
        auto it = arrows_.find({src, tgt});
        bool any = false;
        if (it != arrows_.end())
            for (int w : it->second)
                if (isEligible(src, tgt, w)) {
                    any = true;
                    break;
                }
        setEligible(src, tgt, any);
    }

    std::vector<bool> alive_;
    std::map<std::pair<std::size_t, std::size_t>, std::set<int>> arrows_;
    std::map<std::size_t, std::set<std::size_t>> out_, in_;
    std::set<std::pair<std::size_t, std::size_t>> eligible_;
};

// Id-sorted index ordering shared by both reductions.
template <typename Gen>
std::vector<std::size_t> sortedOrder(const std::vector<Gen>& gens) {
    std::vector<std::size_t> order(gens.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return gens[a].id < gens[b].id; });
    return order;
}

}  // namespace

CfkComplex edgeReduce(const CfkComplex& c, ReduceStats* stats) {
    requireValid(c, "edgeReduce");
    const auto& gens = c.generators();
    auto order = sortedOrder(gens);
    std::vector<std::size_t> slotOf(gens.size());
    for (std::size_t k = 0; k < order.size(); ++k) slotOf[order[k]] = k;

    Reducer red(gens.size());
    for (const auto& a : c.arrows())
        red.addArrow(slotOf[*c.indexOf(a.source)], slotOf[*c.indexOf(a.target)], a.u_power);

    auto alexOf = [&](std::size_t slot) { return gens[order[slot]].alexander; };
    int steps = red.run([&](std::size_t src, std::size_t tgt, int u) {
        return u == 0 && alexOf(src) == alexOf(tgt);
    });
    if (stats) stats->steps = steps;

    std::vector<Generator> outGens;
    for (std::size_t k = 0; k < order.size(); ++k)
        if (red.aliveGen(k)) outGens.push_back(gens[order[k]]);
    std::vector<Arrow> outArrows;
    for (const auto& [edge, weights] : red.arrows())
        for (int w : weights)
            outArrows.push_back({gens[order[edge.first]].id, gens[order[edge.second]].id, w});
    return CfkComplex(c.name(), std::move(outGens), std::move(outArrows));
}

HatComplex edgeReduce(const HatComplex& h, ReduceStats* stats) {
    requireValid(h, "edgeReduce");
    const auto& gens = h.generators();
    auto order = sortedOrder(gens);
    std::vector<std::size_t> slotOf(gens.size());
    for (std::size_t k = 0; k < order.size(); ++k) slotOf[order[k]] = k;

    Reducer red(gens.size());
    for (const auto& a : h.arrows())
        red.addArrow(slotOf[*h.indexOf(a.source)], slotOf[*h.indexOf(a.target)], a.shift);

    int steps = red.run([](std::size_t, std::size_t, int s) { return s == 0; });
    if (stats) stats->steps = steps;

    std::vector<HatGenerator> outGens;
    for (std::size_t k = 0; k < order.size(); ++k)
        if (red.aliveGen(k)) outGens.push_back(gens[order[k]]);
    std::vector<HatArrow> outArrows;
    for (const auto& [edge, weights] : red.arrows())
        for (int w : weights)
            outArrows.push_back({gens[order[edge.first]].id, gens[order[edge.second]].id, w});
    return HatComplex(h.name(), std::move(outGens), std::move(outArrows));
}

bool isReduced(const CfkComplex& c) {
    requireValid(c, "isReduced");
    for (const auto& a : c.arrows())
        if (a.u_power == 0 && arrowVLen(c, a) == 0) return false;
    return true;
}

bool isReduced(const HatComplex& h) {
    requireValid(h, "isReduced");
    for (const auto& a : h.arrows())
        if (a.shift == 0) return false;
    return true;
}

}  // namespace kfc

#pragma once

// Z-filtered chain complexes with shift-labeled arrows: the hat-flavor
// complex with its higher differentials. An arrow (x -> y [s]) records a
// drop of s in the Alexander filtration; the differential drops Maslov by
// one. Gradings may be absent ("relative-only") on raw box-tensor output;
// such generators skip the absolute checks but must still be relatively
// consistent along arrow paths.

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kfc/complex.hpp"

namespace kfc {

struct HatGenerator {
    std::string id;
    std::optional<int> maslov;     // nullopt = relative-only
    std::optional<int> alexander;  // nullopt = relative-only

    bool operator==(const HatGenerator&) const = default;
};

struct HatArrow {
    std::string source;
    std::string target;
    int shift = 0;  // Alexander filtration drop, >= 0

    bool operator==(const HatArrow&) const = default;
};

class HatComplex {
public:
    HatComplex() = default;
    HatComplex(std::string name, std::vector<HatGenerator> generators,
               std::vector<HatArrow> arrows);

    const std::string& name() const { return name_; }
    const std::vector<HatGenerator>& generators() const { return generators_; }
    const std::vector<HatArrow>& arrows() const { return arrows_; }

    std::optional<std::size_t> indexOf(std::string_view id) const;

    bool hasAbsoluteGradings() const;

    bool operator==(const HatComplex&) const;

private:
    std::string name_;
    std::vector<HatGenerator> generators_;
    std::vector<HatArrow> arrows_;
    std::unordered_map<std::string, std::size_t> index_;
};

ValidationReport validate(const HatComplex& h);
void requireValid(const HatComplex& h, const char* op);

/// Sorted multiset of generator bigradings ("?" where absent) plus sorted
/// arrow signatures (M_src, A_src, M_tgt, A_tgt, shift).
std::string canonicalSignature(const HatComplex& h);

/// Filtration level of the total homology class: the least s such that the
/// subcomplex of generators with A <= s carries the homology of the whole
/// complex. Requires absolute gradings and one-dimensional total homology.
int hatTau(const HatComplex& h);

}  // namespace kfc

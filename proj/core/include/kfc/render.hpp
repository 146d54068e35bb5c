#pragma once

// Deterministic diagram emitters for complexes in the (i,j)-plane.
// Generators sit at (0, A); CFK arrows run to the translated target
// (-n, A(tgt)-n), hat arrows straight down the column. Output is
// byte-stable across runs for identical inputs.

#include <string>

#include "kfc/complex.hpp"
#include "kfc/hat.hpp"

namespace kfc {

enum class RenderFormat { Text, Svg, Tikz };

struct RenderSpec {
    RenderFormat format = RenderFormat::Text;
    bool show_gradings = false;
    bool show_arrows = true;
    bool region_overlay = false;  // shade the hook region at the computed tau
};

std::string render(const CfkComplex& c, const RenderSpec& spec);
std::string render(const HatComplex& h, const RenderSpec& spec);

}  // namespace kfc

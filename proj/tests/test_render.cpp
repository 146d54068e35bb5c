#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kfc/bordered.hpp"
#include "kfc/models.hpp"
#include "kfc/render.hpp"

using namespace kfc;

namespace {

std::size_t countOccurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("text render of the trefoil staircase: three dots, two arrows") {
    RenderSpec spec;
    std::string doc = render(t23(), spec);
    std::string grid = doc.substr(0, doc.find("generators:"));
    std::size_t dots = 0;
    for (char c : grid)
        if (c == 'o') ++dots;
    CHECK(dots == 3);
    CHECK(countOccurrences(doc, "->") == 2);
    CHECK(doc.find("b -> a U^1") != std::string::npos);
    CHECK(doc.find("b -> c U^0") != std::string::npos);
}

TEST_CASE("svg render of hatCable(3): 13 dots, 6 arrows") {
    RenderSpec spec;
    spec.format = RenderFormat::Svg;
    std::string doc = render(hatCable(3), spec);
    CHECK(countOccurrences(doc, "fill=\"black\"/>") == 13);
    CHECK(countOccurrences(doc, "marker-end") == 6);
}

TEST_CASE("tikz render of the unknot is a single node document") {
    RenderSpec spec;
    spec.format = RenderFormat::Tikz;
    std::string doc = render(unknot(), spec);
    CHECK(countOccurrences(doc, "\\filldraw") == 1);
    CHECK(countOccurrences(doc, "\\draw[->]") == 0);
    CHECK(doc.find("\\begin{tikzpicture}") != std::string::npos);
    CHECK(doc.find("\\end{tikzpicture}") != std::string::npos);
}

TEST_CASE("render output is deterministic") {
    RenderSpec spec;
    spec.format = RenderFormat::Svg;
    spec.show_gradings = true;
    CHECK(render(t23(), spec) == render(t23(), spec));
    spec.format = RenderFormat::Text;
    spec.region_overlay = true;
    CHECK(render(t23(), spec) == render(t23(), spec));
}

TEST_CASE("region overlay marks the hook at tau") {
    RenderSpec spec;
    spec.region_overlay = true;
    std::string doc = render(t23(), spec);
    CHECK(doc.find("region: hook(tau=1)") != std::string::npos);
    // hat complexes use the filtration level of the surviving class
    CHECK(render(hatCable(3), spec).find("region: hook(tau=3)") != std::string::npos);
    spec.format = RenderFormat::Svg;
    CHECK(render(t23(), spec).find("stroke=\"#bbbbbb\"") != std::string::npos);
    spec.format = RenderFormat::Tikz;
    CHECK(render(t23(), spec).find("black!15") != std::string::npos);
}

TEST_CASE("relative-only hat complexes cannot be rendered") {
    RenderSpec spec;
    CHECK_THROWS_AS(render(boxTensor(cfaCable(2), cfdTrefoil0()), spec), DomainError);
}

TEST_CASE("gradings flag adds labels") {
    RenderSpec spec;
    spec.show_gradings = true;
    std::string doc = render(t23(), spec);
    CHECK(doc.find("M=0 A=1") != std::string::npos);
}

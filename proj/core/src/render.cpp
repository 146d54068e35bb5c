#include "kfc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "kfc/invariants.hpp"
#include "kfc/region.hpp"

namespace kfc {
namespace {

struct Dot {
    int i = 0, j = 0;
    std::string id;
    std::string grading;
};

struct Seg {
    int i0 = 0, j0 = 0, i1 = 0, j1 = 0;
    int u_or_shift = 0;
    bool u_style = true;  // U^n label vs [s] label
    std::string source, target;
};

struct Diagram {
    std::string name;
    std::vector<Dot> dots;
    std::vector<Seg> arrows;
    std::vector<std::pair<int, int>> translateMarks;  // hollow endpoints
    std::vector<Region::Segment> overlay;
    int overlayTau = 0;
    bool hasOverlay = false;
};

Diagram diagramOf(const CfkComplex& c, const RenderSpec& spec) {
    Diagram d;
    d.name = c.name();
    std::vector<Generator> gens = c.generators();
    std::sort(gens.begin(), gens.end(),
              [](const Generator& a, const Generator& b) { return a.id < b.id; });
    for (const auto& g : gens) {
        std::ostringstream grad;
        grad << "M=" << g.maslov << " A=" << g.alexander;
        d.dots.push_back({0, g.alexander, g.id, grad.str()});
    }
    if (spec.show_arrows) {
        std::vector<Arrow> arrows = c.arrows();
        std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
            return std::tie(a.source, a.target, a.u_power) <
                   std::tie(b.source, b.target, b.u_power);
        });
        for (const auto& a : arrows) {
            const auto& s = c.generators()[*c.indexOf(a.source)];
            const auto& t = c.generators()[*c.indexOf(a.target)];
            int ti = -a.u_power, tj = t.alexander - a.u_power;
            d.arrows.push_back({0, s.alexander, ti, tj, a.u_power, true, a.source, a.target});
            if (a.u_power != 0) d.translateMarks.push_back({ti, tj});
        }
    }
    if (spec.region_overlay) {
        int t = tau(c);
        d.overlay = Region::hook(t).segments();
        d.overlayTau = t;
        d.hasOverlay = true;
    }
    return d;
}

Diagram diagramOf(const HatComplex& h, const RenderSpec& spec) {
    if (!h.hasAbsoluteGradings())
        throw DomainError("render: hat complex has relative-only gradings");
    Diagram d;
    d.name = h.name();
    std::vector<HatGenerator> gens = h.generators();
    std::sort(gens.begin(), gens.end(),
              [](const HatGenerator& a, const HatGenerator& b) { return a.id < b.id; });
    for (const auto& g : gens) {
        std::ostringstream grad;
        grad << "M=" << *g.maslov << " A=" << *g.alexander;
        d.dots.push_back({0, *g.alexander, g.id, grad.str()});
    }
    if (spec.show_arrows) {
        std::vector<HatArrow> arrows = h.arrows();
        std::sort(arrows.begin(), arrows.end(), [](const HatArrow& a, const HatArrow& b) {
            return std::tie(a.source, a.target, a.shift) < std::tie(b.source, b.target, b.shift);
        });
        for (const auto& a : arrows) {
            const auto& s = h.generators()[*h.indexOf(a.source)];
            const auto& t = h.generators()[*h.indexOf(a.target)];
            d.arrows.push_back(
                {0, *s.alexander, 0, *t.alexander, a.shift, false, a.source, a.target});
        }
    }
    if (spec.region_overlay) {
        int t = hatTau(h);
        d.overlay = Region::hook(t).segments();
        d.overlayTau = t;
        d.hasOverlay = true;
    }
    return d;
}

struct Bounds {
    int imin = 0, imax = 0, jmin = 0, jmax = 0;
};

Bounds boundsOf(const Diagram& d) {
    Bounds b;
    bool first = true;
    auto grow = [&](int i, int j) {
        if (first) {
            b = {i, i, j, j};
            first = false;
        } else {
            b.imin = std::min(b.imin, i);
            b.imax = std::max(b.imax, i);
            b.jmin = std::min(b.jmin, j);
            b.jmax = std::max(b.jmax, j);
        }
    };
    for (const auto& dot : d.dots) grow(dot.i, dot.j);
    for (const auto& a : d.arrows) {
        grow(a.i0, a.j0);
        grow(a.i1, a.j1);
    }
    if (d.hasOverlay) grow(1, d.overlayTau);
    if (first) b = {0, 0, 0, 0};
    return b;
}

std::string arrowLabel(const Seg& a) {
    std::ostringstream os;
    os << "  " << a.source << " -> " << a.target << " ";
    if (a.u_style)
        os << "U^" << a.u_or_shift;
    else
        os << "[" << a.u_or_shift << "]";
    return os.str();
}

std::string renderText(const Diagram& d, const RenderSpec& spec) {
    Bounds b = boundsOf(d);
    std::ostringstream os;
    os << "# " << d.name << "\n";
    // Grid rows from jmax down to jmin, one cell per i.
    std::map<std::pair<int, int>, int> dotCount;
    for (const auto& dot : d.dots) dotCount[{dot.i, dot.j}]++;
    os << "j\\i";
    for (int i = b.imin; i <= b.imax; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%4d", i);
        os << buf;
    }
    os << "\n";
    Region hookRegion = Region::hook(d.overlayTau);
    for (int j = b.jmax; j >= b.jmin; --j) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%3d", j);
        os << buf;
        for (int i = b.imin; i <= b.imax; ++i) {
            auto it = dotCount.find({i, j});
            char cell = '.';
            if (d.hasOverlay && hookRegion.contains({i, j})) cell = ':';
            if (it != dotCount.end()) cell = it->second == 1 ? 'o' : ('0' + it->second % 10);
            os << "   " << cell;
        }
        os << "\n";
    }
    os << "generators:\n";
    for (const auto& dot : d.dots) {
        os << "  " << dot.id << " (" << dot.i << "," << dot.j << ")";
        if (spec.show_gradings) os << " " << dot.grading;
        os << "\n";
    }
    if (spec.show_arrows) {
        os << "arrows:\n";
        for (const auto& a : d.arrows) os << arrowLabel(a) << "\n";
    }
    if (d.hasOverlay) os << "region: hook(tau=" << d.overlayTau << ")\n";
    return os.str();
}

// Deterministic fixed-point coordinates: one decimal place.
std::string fix1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string renderSvg(const Diagram& d, const RenderSpec& spec) {
    Bounds b = boundsOf(d);
    const int scale = 40, margin = 40;
    auto X = [&](double i) { return margin + (i - b.imin) * scale; };
    auto Y = [&](double j) { return margin + (b.jmax - j) * scale; };
    int width = 2 * margin + (b.imax - b.imin) * scale;
    int height = 2 * margin + (b.jmax - b.jmin) * scale;

    // Collision offsets: dots at a shared lattice point fan out along x.
    std::map<std::pair<int, int>, int> seen, total;
    for (const auto& dot : d.dots) total[{dot.i, dot.j}]++;
    auto dotX = [&](const Dot& dot) {
        int k = seen[{dot.i, dot.j}]++;
        int n = total[{dot.i, dot.j}];
        return X(dot.i) + (k - (n - 1) / 2.0) * 9.0;
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<!-- " << d.name << " -->\n";
    os << "<defs><marker id=\"arr\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
          "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
    if (d.hasOverlay) {
        for (const auto& seg : d.overlay) {
            // clip unbounded segments to the drawing bounds
            int lo = seg.lo.value_or(seg.vertical ? b.jmin : b.imin);
            int hi = seg.hi.value_or(seg.vertical ? b.jmax : b.imax);
            double x0 = seg.vertical ? seg.fixed : lo;
            double x1 = seg.vertical ? seg.fixed : hi;
            double y0 = seg.vertical ? lo : seg.fixed;
            double y1 = seg.vertical ? hi : seg.fixed;
            os << "<line x1=\"" << fix1(X(x0)) << "\" y1=\"" << fix1(Y(y0)) << "\" x2=\""
               << fix1(X(x1)) << "\" y2=\"" << fix1(Y(y1))
               << "\" stroke=\"#bbbbbb\" stroke-width=\"8\" opacity=\"0.5\"/>\n";
        }
    }
    std::map<std::string, double> dotXById;
    std::vector<std::pair<const Dot*, double>> placed;
    for (const auto& dot : d.dots) {
        double x = dotX(dot);
        placed.push_back({&dot, x});
        dotXById[dot.id] = x;
    }
    for (const auto& a : d.arrows) {
        double x0 = dotXById.count(a.source) ? dotXById[a.source] : X(a.i0);
        double x1 = (a.i1 == 0 && !a.u_style) || a.u_or_shift == 0
                        ? (dotXById.count(a.target) ? dotXById[a.target] : X(a.i1))
                        : X(a.i1);
        os << "<line x1=\"" << fix1(x0) << "\" y1=\"" << fix1(Y(a.j0)) << "\" x2=\"" << fix1(x1)
           << "\" y2=\"" << fix1(Y(a.j1))
           << "\" stroke=\"black\" stroke-width=\"1.5\" marker-end=\"url(#arr)\"/>\n";
    }
    for (const auto& [i, j] : d.translateMarks)
        os << "<circle cx=\"" << fix1(X(i)) << "\" cy=\"" << fix1(Y(j))
           << "\" r=\"3\" fill=\"none\" stroke=\"black\"/>\n";
    for (const auto& [dot, x] : placed) {
        os << "<circle cx=\"" << fix1(x) << "\" cy=\"" << fix1(Y(dot->j))
           << "\" r=\"4\" fill=\"black\"/>\n";
        os << "<text x=\"" << fix1(x + 6) << "\" y=\"" << fix1(Y(dot->j) - 6)
           << "\" font-size=\"11\">" << dot->id;
        if (spec.show_gradings) os << " (" << dot->grading << ")";
        os << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string renderTikz(const Diagram& d, const RenderSpec& spec) {
    std::map<std::pair<int, int>, int> seen, total;
    for (const auto& dot : d.dots) total[{dot.i, dot.j}]++;
    std::map<std::string, std::pair<double, double>> pos;
    std::ostringstream os;
    os << "% " << d.name << "\n";
    os << "\\begin{tikzpicture}\n";
    if (d.hasOverlay) {
        Bounds b = boundsOf(d);
        for (const auto& seg : d.overlay) {
            int lo = seg.lo.value_or(seg.vertical ? b.jmin : b.imin);
            int hi = seg.hi.value_or(seg.vertical ? b.jmax : b.imax);
            if (seg.vertical)
                os << "\\draw[line width=6pt, black!15] (" << seg.fixed << "," << lo << ") -- ("
                   << seg.fixed << "," << hi << ");\n";
            else
                os << "\\draw[line width=6pt, black!15] (" << lo << "," << seg.fixed << ") -- ("
                   << hi << "," << seg.fixed << ");\n";
        }
    }
    for (const auto& dot : d.dots) {
        int k = seen[{dot.i, dot.j}]++;
        int n = total[{dot.i, dot.j}];
        double x = dot.i + (k - (n - 1) / 2.0) * 0.15;
        pos[dot.id] = {x, static_cast<double>(dot.j)};
        os << "\\filldraw (" << fix1(x) << "," << dot.j << ") circle (2pt) node[above right] {$"
           << dot.id << "$};\n";
        if (spec.show_gradings)
            os << "\\node[below right, font=\\tiny] at (" << fix1(x) << "," << dot.j << ") {("
               << dot.grading << ")};\n";
    }
    for (const auto& a : d.arrows) {
        auto from = pos.count(a.source) ? pos[a.source]
                                        : std::pair<double, double>{a.i0, a.j0};
        std::pair<double, double> to{static_cast<double>(a.i1), static_cast<double>(a.j1)};
        if (a.u_or_shift == 0 || !a.u_style)
            if (pos.count(a.target)) to = pos[a.target];
        os << "\\draw[->] (" << fix1(from.first) << "," << fix1(from.second) << ") -- ("
           << fix1(to.first) << "," << fix1(to.second) << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string emit(const Diagram& d, const RenderSpec& spec) {
    switch (spec.format) {
        case RenderFormat::Text: return renderText(d, spec);
        case RenderFormat::Svg: return renderSvg(d, spec);
        case RenderFormat::Tikz: return renderTikz(d, spec);
    }
    throw std::logic_error("render: bad format");
}

}  // namespace

std::string render(const CfkComplex& c, const RenderSpec& spec) {
    requireValid(c, "render");
    return emit(diagramOf(c, spec), spec);
}

std::string render(const HatComplex& h, const RenderSpec& spec) {
    requireValid(h, "render");
    return emit(diagramOf(h, spec), spec);
}

}  // namespace kfc

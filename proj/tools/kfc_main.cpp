// kfc: knot Floer complex calculator.
//
// Subcommands: validate, invariants, tensor, dual, reduce, cable, table,
// kp, render. Exit codes: 0 success, 1 domain error (validation, parse or
// invariant failures), 2 usage error.

#include <future>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "kfc/bordered.hpp"
#include "kfc/invariants.hpp"
#include "kfc/io.hpp"
#include "kfc/models.hpp"
#include "kfc/reduce.hpp"
#include "kfc/render.hpp"

namespace {

using ComplexFile = std::variant<kfc::CfkComplex, kfc::HatComplex>;

bool looksLikeHat(const std::string& path, const std::string& text) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".hat") return true;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".cfk") return false;
    // Content sniff: hat arrow lines end in "[s]", hat gens may carry "M=?".
    for (std::size_t pos = 0; pos < text.size();) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() : eol + 1;
        if (line.find("M=?") != std::string::npos) return true;
        auto bracket = line.find('[');
        if (line.rfind("d ", 0) == 0 && bracket != std::string::npos) return true;
    }
    return false;
}

ComplexFile loadAny(const std::string& path) {
    std::string text = kfc::readFile(path);
    if (looksLikeHat(path, text)) return kfc::parseHat(text);
    return kfc::parseCfk(text);
}

kfc::CfkComplex loadCfk(const std::string& path) {
    auto loaded = loadAny(path);
    if (!std::holds_alternative<kfc::CfkComplex>(loaded))
        throw kfc::DomainError("'" + path + "' is a hat complex; a CFK file is required here");
    return std::get<kfc::CfkComplex>(std::move(loaded));
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content;
    else
        kfc::writeFile(out, content);
}

std::pair<int, int> parseSweep(const std::string& sweep) {
    auto dots = sweep.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--sweep", "expected a..b");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(sweep.substr(0, dots));
        hi = std::stoi(sweep.substr(dots + 2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--sweep", "expected integer bounds in a..b");
    }
    if (lo < 2 || hi < lo) throw CLI::ValidationError("--sweep", "need 2 <= a <= b");
    return {lo, hi};
}

std::string tableFor(int p) {
    kfc::HatComplex h = kfc::hatCable(p);
    struct Row {
        std::string gen, ma, col, family;
    };
    std::vector<Row> rows;
    auto push = [&](const std::string& id, const std::string& family) {
        const auto& g = h.generators()[*h.indexOf(id)];
        int m = *g.maslov, a = *g.alexander;
        rows.push_back({id, "(" + std::to_string(m) + ", " + std::to_string(a) + ")",
                        std::to_string(m + 2 * p - 2 * a), family});
    };
    auto b = [](int k) { return "b" + std::to_string(k); };
    push("au1", "au1");
    push(b(1) + "v1", "b1v1");
    push(b(1) + "mu1", "b1mu1");
    for (int j = 1; j <= p - 2; ++j) push(b(j) + "v2", "b_jv2 [1<=j<=p-2]");
    for (int j = 1; j <= p - 2; ++j) push(b(j + 1) + "mu1", "b_{j+1}mu1 [1<=j<=p-2]");
    push(b(p - 1) + "v2", "b_{p-1}v2");
    push(b(p) + "v2", "b_pv2");
    for (int j = 2; j <= p - 1; ++j) push(b(j) + "v1", "b_jv1 [2<=j<=p-1]");
    for (int j = 2; j <= p - 1; ++j) push(b(2 * p - 1 - j) + "v1", "b_{2p-1-j}v1 [2<=j<=p-1]");
    for (int j = 1; j <= p - 1; ++j) push(b(j) + "mu2", "b_jmu2 [1<=j<=p-1]");
    for (int j = 1; j <= p - 1; ++j) push(b(2 * p - 1 - j) + "mu2", "b_{2p-1-j}mu2 [1<=j<=p-1]");

    std::size_t w0 = 9, w1 = 8, w2 = 7;
    for (const auto& r : rows) {
        w0 = std::max(w0, r.gen.size());
        w1 = std::max(w1, r.ma.size());
        w2 = std::max(w2, r.col.size());
    }
    std::ostringstream os;
    os << "HFK-hat(T(2,3;" << p << ",1))  rank " << rows.size() << "\n";
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    os << pad("generator", w0) << "  " << pad("(M, A)", w1) << "  " << pad("M+2p-2A", w2)
       << "  family\n";
    for (const auto& r : rows)
        os << pad(r.gen, w0) << "  " << pad(r.ma, w1) << "  " << pad(r.col, w2) << "  "
           << r.family << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot Floer concordance invariant calculator"};
    app.require_subcommand(1);

    std::string file, file2, out;
    int p = 2;
    std::string stage = "reduced";
    std::string format = "text";
    std::string sweep;
    std::string show;
    bool pretty = false;

    auto* cmdValidate = app.add_subcommand("validate", "check a complex file against the invariants");
    cmdValidate->add_option("file", file, "complex file")->required();

    auto* cmdInv = app.add_subcommand("invariants", "compute the concordance invariant report");
    cmdInv->add_option("file", file, "CFK complex file")->required();
    cmdInv->add_flag("--pretty", pretty, "aligned key-value block instead of the one-line format");

    auto* cmdTensor = app.add_subcommand("tensor", "tensor product of two CFK complexes");
    cmdTensor->add_option("file1", file, "first CFK file")->required();
    cmdTensor->add_option("file2", file2, "second CFK file")->required();
    cmdTensor->add_option("-o,--output", out, "output path (default stdout)");

    auto* cmdDual = app.add_subcommand("dual", "dual of a CFK complex");
    cmdDual->add_option("file", file, "CFK file")->required();
    cmdDual->add_option("-o,--output", out, "output path (default stdout)");

    auto* cmdReduce = app.add_subcommand("reduce", "edge-reduce a complex");
    cmdReduce->add_option("file", file, "CFK or hat complex file")->required();
    cmdReduce->add_option("-o,--output", out, "output path (default stdout)");

    auto* cmdCable = app.add_subcommand("cable", "emit the (p,1)-cable hat complex");
    cmdCable->add_option("--p", p, "longitudinal winding, >= 2")
        ->check(CLI::Range(2, 1 << 20));
    cmdCable->add_option("--stage", stage, "raw box tensor or reduced complex")
        ->check(CLI::IsMember({"raw", "reduced"}));
    cmdCable->add_option("-o,--output", out, "output path (default stdout)");
    cmdCable->add_option("--sweep", sweep, "range a..b of p values");

    auto* cmdTable = app.add_subcommand("table", "print the cable grading table");
    cmdTable->add_option("--p", p, "longitudinal winding, >= 2")
        ->required()
        ->check(CLI::Range(2, 1 << 20));

    auto* cmdKp = app.add_subcommand("kp", "invariants of K_p = D_{p,1} # -D_{p-1,1}");
    cmdKp->add_option("--p", p, "cable parameter, >= 2")->check(CLI::Range(2, 1 << 20));
    cmdKp->add_option("--sweep", sweep, "range a..b of p values");

    auto* cmdRender = app.add_subcommand("render", "draw a complex in the (i,j)-plane");
    cmdRender->add_option("file", file, "complex file")->required();
    cmdRender->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "svg", "tikz"}));
    cmdRender->add_option("--show", show, "comma list of: gradings, region");
    cmdRender->add_option("-o,--output", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmdValidate) {
            auto loaded = loadAny(file);
            kfc::ValidationReport report = std::visit(
                [](const auto& c) { return kfc::validate(c); }, loaded);
            if (!report.valid()) {
                std::cerr << report.str();
                return 1;
            }
            std::visit(
                [](const auto& c) {
                    std::cout << "ok " << c.name() << ": " << c.generators().size()
                              << " generators, " << c.arrows().size() << " arrows\n";
                },
                loaded);
        } else if (*cmdInv) {
            kfc::InvariantReport r = kfc::report(loadCfk(file));
            if (pretty)
                std::cout << kfc::reportTable(r);
            else
                std::cout << kfc::reportLine(r) << "\n";
        } else if (*cmdTensor) {
            emit(out, kfc::serialize(kfc::tensor(loadCfk(file), loadCfk(file2))));
        } else if (*cmdDual) {
            emit(out, kfc::serialize(kfc::dual(loadCfk(file))));
        } else if (*cmdReduce) {
            auto loaded = loadAny(file);
            std::string text = std::visit(
                [](const auto& c) { return kfc::serialize(kfc::edgeReduce(c)); }, loaded);
            emit(out, text);
        } else if (*cmdCable) {
            auto cableText = [&](int q) {
                return kfc::serialize(stage == "raw"
                                          ? kfc::boxTensor(kfc::cfaCable(q), kfc::cfdTrefoil0())
                                          : kfc::hatCable(q));
            };
            if (!sweep.empty()) {
                if (!out.empty()) {
                    std::cerr << "--sweep writes to stdout; -o is not supported with it\n";
                    return 2;
                }
                auto [lo, hi] = parseSweep(sweep);
                std::vector<std::future<std::string>> jobs;
                for (int q = lo; q <= hi; ++q)
                    jobs.push_back(std::async(std::launch::async, cableText, q));
                for (auto& j : jobs) std::cout << j.get();
            } else {
                emit(out, cableText(p));
            }
        } else if (*cmdTable) {
            std::cout << tableFor(p);
        } else if (*cmdKp) {
            auto kpText = [](int q) { return kfc::renderKpReport(kfc::kpPipeline(q)); };
            if (!sweep.empty()) {
                auto [lo, hi] = parseSweep(sweep);
                std::vector<std::future<std::string>> jobs;
                for (int q = lo; q <= hi; ++q)
                    jobs.push_back(std::async(std::launch::async, kpText, q));
                for (std::size_t k = 0; k < jobs.size(); ++k) {
                    if (k) std::cout << "\n";
                    std::cout << jobs[k].get();
                }
            } else {
                std::cout << kpText(p);
            }
        } else if (*cmdRender) {
            kfc::RenderSpec spec;
            spec.format = format == "svg"    ? kfc::RenderFormat::Svg
                          : format == "tikz" ? kfc::RenderFormat::Tikz
                                             : kfc::RenderFormat::Text;
            if (show.find("gradings") != std::string::npos) spec.show_gradings = true;
            if (show.find("region") != std::string::npos) spec.region_overlay = true;
            auto loaded = loadAny(file);
            std::string doc = std::visit(
                [&](const auto& c) { return kfc::render(c, spec); }, loaded);
            emit(out, doc);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

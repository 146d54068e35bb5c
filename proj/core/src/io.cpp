#include "kfc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace kfc {
namespace {

std::vector<std::string> splitTokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

int parseInt(const std::string& s, int line, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + s + "'");
    }
    if (pos != s.size())
        throw ParseError(line, std::string("trailing characters after ") + what + " in '" + s + "'");
    return v;
}

// Shared structure of both formats; the arrow payload differs.
struct RawLine {
    int number;
    std::vector<std::string> tokens;
};

std::vector<RawLine> meaningfulLines(std::string_view text) {
    std::vector<RawLine> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++number;
        auto tokens = splitTokens(line);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

std::string parseHeader(const std::vector<RawLine>& lines) {
    if (lines.empty()) throw ParseError(1, "empty input, expected 'complex <name>'");
    const auto& first = lines.front();
    if (first.tokens[0] != "complex" || first.tokens.size() != 2)
        throw ParseError(first.number, "expected 'complex <name>' header");
    return first.tokens[1];
}

}  // namespace

CfkComplex parseCfk(std::string_view text) {
    auto lines = meaningfulLines(text);
    std::string name = parseHeader(lines);
    std::vector<Generator> gens;
    std::vector<Arrow> arrows;
    std::set<std::string> ids;
    std::set<std::tuple<std::string, std::string, int>> arrowKeys;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [n, t] = lines[li];
        if (t[0] == "gen") {
            if (t.size() != 4 || t[2].rfind("M=", 0) != 0 || t[3].rfind("A=", 0) != 0)
                throw ParseError(n, "expected 'gen <id> M=<int> A=<int>'");
            Generator g;
            g.id = t[1];
            g.maslov = parseInt(t[2].substr(2), n, "M");
            g.alexander = parseInt(t[3].substr(2), n, "A");
            if (!ids.insert(g.id).second)
                throw ParseError(n, "duplicate generator id '" + g.id + "'");
            gens.push_back(std::move(g));
        } else if (t[0] == "d") {
            if (t.size() != 5 || t[2] != "->" || t[4].rfind("U^", 0) != 0)
                throw ParseError(n, "expected 'd <src> -> <tgt> U^<n>'");
            Arrow a;
            a.source = t[1];
            a.target = t[3];
            a.u_power = parseInt(t[4].substr(2), n, "U-power");
            if (a.u_power < 0) throw ParseError(n, "U-power must be nonnegative");
            if (!ids.count(a.source))
                throw ParseError(n, "arrow endpoint '" + a.source + "' has no gen line above");
            if (!ids.count(a.target))
                throw ParseError(n, "arrow endpoint '" + a.target + "' has no gen line above");
            if (!arrowKeys.insert({a.source, a.target, a.u_power}).second)
                throw ParseError(n, "duplicate arrow " + a.source + " -> " + a.target + " U^" +
                                        std::to_string(a.u_power));
            arrows.push_back(std::move(a));
        } else if (t[0] == "complex") {
            throw ParseError(n, "only one complex per file");
        } else {
            throw ParseError(n, "unrecognized directive '" + t[0] + "'");
        }
    }
    return CfkComplex(std::move(name), std::move(gens), std::move(arrows));
}

std::string serialize(const CfkComplex& c) {
    std::vector<Generator> gens = c.generators();
    std::sort(gens.begin(), gens.end(),
              [](const Generator& a, const Generator& b) { return a.id < b.id; });
    std::vector<Arrow> arrows = c.arrows();
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
        return std::tie(a.source, a.target, a.u_power) < std::tie(b.source, b.target, b.u_power);
    });
    std::ostringstream os;
    os << "complex " << c.name() << "\n";
    for (const auto& g : gens)
        os << "gen " << g.id << " M=" << g.maslov << " A=" << g.alexander << "\n";
    for (const auto& a : arrows)
        os << "d " << a.source << " -> " << a.target << " U^" << a.u_power << "\n";
    return os.str();
}

HatComplex parseHat(std::string_view text) {
    auto lines = meaningfulLines(text);
    std::string name = parseHeader(lines);
    std::vector<HatGenerator> gens;
    std::vector<HatArrow> arrows;
    std::set<std::string> ids;
    std::set<std::tuple<std::string, std::string, int>> arrowKeys;
    auto parseGrade = [&](const std::string& tok, int n, const char* what) -> std::optional<int> {
        if (tok == "?") return std::nullopt;
        return parseInt(tok, n, what);
    };
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [n, t] = lines[li];
        if (t[0] == "gen") {
            if (t.size() != 4 || t[2].rfind("M=", 0) != 0 || t[3].rfind("A=", 0) != 0)
                throw ParseError(n, "expected 'gen <id> M=<int|?> A=<int|?>'");
            HatGenerator g;
            g.id = t[1];
            g.maslov = parseGrade(t[2].substr(2), n, "M");
            g.alexander = parseGrade(t[3].substr(2), n, "A");
            if (!ids.insert(g.id).second)
                throw ParseError(n, "duplicate generator id '" + g.id + "'");
            gens.push_back(std::move(g));
        } else if (t[0] == "d") {
            if (t.size() != 5 || t[2] != "->" || t[4].size() < 3 || t[4].front() != '[' ||
                t[4].back() != ']')
                throw ParseError(n, "expected 'd <src> -> <tgt> [<s>]'");
            HatArrow a;
            a.source = t[1];
            a.target = t[3];
            a.shift = parseInt(t[4].substr(1, t[4].size() - 2), n, "shift");
            if (a.shift < 0) throw ParseError(n, "shift must be nonnegative");
            if (!ids.count(a.source))
                throw ParseError(n, "arrow endpoint '" + a.source + "' has no gen line above");
            if (!ids.count(a.target))
                throw ParseError(n, "arrow endpoint '" + a.target + "' has no gen line above");
            if (!arrowKeys.insert({a.source, a.target, a.shift}).second)
                throw ParseError(n, "duplicate arrow " + a.source + " -> " + a.target + " [" +
                                        std::to_string(a.shift) + "]");
            arrows.push_back(std::move(a));
        } else if (t[0] == "complex") {
            throw ParseError(n, "only one complex per file");
        } else {
            throw ParseError(n, "unrecognized directive '" + t[0] + "'");
        }
    }
    return HatComplex(std::move(name), std::move(gens), std::move(arrows));
}

std::string serialize(const HatComplex& h) {
    std::vector<HatGenerator> gens = h.generators();
    std::sort(gens.begin(), gens.end(),
              [](const HatGenerator& a, const HatGenerator& b) { return a.id < b.id; });
    std::vector<HatArrow> arrows = h.arrows();
    std::sort(arrows.begin(), arrows.end(), [](const HatArrow& a, const HatArrow& b) {
        return std::tie(a.source, a.target, a.shift) < std::tie(b.source, b.target, b.shift);
    });
    auto grade = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("?");
    };
    std::ostringstream os;
    os << "complex " << h.name() << "\n";
    for (const auto& g : gens)
        os << "gen " << g.id << " M=" << grade(g.maslov) << " A=" << grade(g.alexander) << "\n";
    for (const auto& a : arrows)
        os << "d " << a.source << " -> " << a.target << " [" << a.shift << "]\n";
    return os.str();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeFile(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace kfc

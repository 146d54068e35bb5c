#pragma once

// Line-oriented text formats for complexes. '#' starts a comment, blank
// lines are ignored, one complex per file.
//
//   complex <name>
//   gen <id> M=<int> A=<int>          (hat files also allow M=? A=?)
//   d <src> -> <tgt> U^<n>            (CFK)
//   d <src> -> <tgt> [<s>]            (hat)
//
// Arrows may appear in any order after their endpoints' gen lines.

#include <stdexcept>
#include <string>
#include <string_view>

#include "kfc/complex.hpp"
#include "kfc/hat.hpp"

namespace kfc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

CfkComplex parseCfk(std::string_view text);
std::string serialize(const CfkComplex& c);

HatComplex parseHat(std::string_view text);
std::string serialize(const HatComplex& h);

/// Reads a whole file; throws std::runtime_error on I/O failure.
std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view content);

}  // namespace kfc

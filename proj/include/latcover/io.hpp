#pragma once

// JSON files for simplices and covers.
//
//   simplex: {"dim": n, "vertices": [[...], ...]}
//   cover:   {"dilations": [{"kind": "apex", "apex": i, "modulus": k,
//                            "translation": [...]},
//                           {"kind": "explicit", "modulus": k,
//                            "vertices": [[...], ...]}]}
//
// Integers are JSON numbers or decimal strings; output uses strings beyond
// 2^53 in magnitude.

#include "latcover/coverage.hpp"

#include <string>

namespace latcover::io {

/// `source` names the input in error messages.
LatticeSimplex parse_simplex(const std::string& text, const std::string& source = "<input>");
std::vector<DilationSpec> parse_cover_specs(const std::string& text, const std::string& source = "<input>");
/// Builds every entry against `p`; validation failures become ParseError
/// naming the offending entry.
Cover parse_cover(const std::string& text, const LatticeSimplex& p, const std::string& source = "<input>");

std::string read_file(const std::string& path);
LatticeSimplex read_simplex(const std::string& path);
Cover read_cover(const std::string& path, const LatticeSimplex& p);

std::string simplex_json(const LatticeSimplex& p);
std::string cover_json(const Cover& cover);
void write_file(const std::string& path, const std::string& text);

}  // namespace latcover::io

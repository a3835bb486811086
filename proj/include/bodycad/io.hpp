#pragma once

// On-disk formats.
//
// Framework documents are JSON:
//   {"format": "bodycad/1",
//    "bodies": [{"id": "B1", "name": "base"}, ...],
//    "constraints": [{"id": "c1", "kind": "point-plane-coincidence",
//                     "i": "B1", "j": "B2",
//                     "p_i": ["1", "2", "3/7"], "p_j": [...], "d": [...]}]}
// Numbers are exact: JSON integers or strings such as "3/7" and "0.25".
// Binary floating-point literals are rejected.
//
// Bare graphs are plain text: a header "n=<int>", then one edge per line
// "u v color [label]" with 1-based vertices and color red|black; '#' starts a
// comment.

#include <iosfwd>
#include <string>
#include <string_view>

#include "bodycad/analyzer.hpp"
#include "bodycad/cad.hpp"
#include "bodycad/graph.hpp"

namespace bodycad {

inline constexpr std::string_view kFormatVersion = "bodycad/1";

/// Throws Error(ParseError) with "line L, column C" for syntax errors and a
/// JSON path for schema errors; Error(MalformedConstraint) for geometry that
/// does not fit the kind.
CadFramework parse_framework(std::string_view text);
std::string framework_to_json(const CadFramework& fw);

/// Throws Error(ParseError) naming the offending line.
BiColoredMultigraph parse_bare_graph(std::string_view text);
std::string bare_graph_to_text(const BiColoredMultigraph& h);

/// Machine-readable report; report_from_json(report_to_json(r)) == r.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(std::string_view text);

std::string report_to_text(const AnalysisReport& report);

/// Verdict, certificate trees (1-based) and circuits of a bare graph.
std::string verdict_to_text(const BiColoredMultigraph& h, const SparsityParams& params,
                            const CombinatorialVerdict& verdict);

/// Reads a whole file; throws Error(InvalidArgument) when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace bodycad

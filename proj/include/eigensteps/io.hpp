#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigensteps/frames.hpp"
#include "eigensteps/geometry.hpp"
#include "eigensteps/tableau.hpp"

namespace eigensteps {

using Json = nlohmann::ordered_json;

/// Display scale for tableau values: the internal scale is |f_n|^2 = d;
/// `one` shows unit-norm values (divided by d) and `parseval` shows the
/// Parseval scale (divided by N).
enum class MuDisplay { d, one, parseval };

MuDisplay parse_mu_display(std::string_view text);
std::string_view mu_display_name(MuDisplay mu);
/// Factor the displayed values are multiplied by.
Rational display_factor(MuDisplay mu, const Params& p);

/// {"N", "d", "rows": [["p/q", ...], ...]} with rows i = 1..d. A scale other
/// than `d` is recorded in a "mu_display" field so the reader can undo it.
Json tableau_to_json(const Tableau& t, MuDisplay mu = MuDisplay::d);
/// Accepts rational strings and JSON integers. Throws ParseError.
Tableau tableau_from_json(const Json& j);

Json report_to_json(const ValidationReport& r);

Json hrep_to_json(const HRep& h);
HRep hrep_from_json(const Json& j);

Json vertices_to_json(const std::vector<Vertex>& vertices, MuDisplay mu = MuDisplay::d);

Json float_tableau_to_json(const FloatTableau& t, MuDisplay mu = MuDisplay::d);
FloatTableau float_tableau_from_json(const Json& j);

/// Parses JSON text, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

/// d rows of N reals, no header.
FrameMatrix read_frame_csv(std::istream& in, char delimiter = ',');
/// Writes with 17 significant digits so the values read back exactly.
void write_frame_csv(std::ostream& out, const FrameMatrix& f, char delimiter = ',');

/// Plain-text rendering, one row per line from i = 1.
std::string format_tableau(const Tableau& t, MuDisplay mu = MuDisplay::d);
std::string format_float_tableau(const FloatTableau& t, MuDisplay mu = MuDisplay::d);

}  // namespace eigensteps

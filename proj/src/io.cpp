#include "eigensteps/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace eigensteps {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("missing array '") + key + "'");
  }
  return j.at(key);
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError("expected a rational string or an integer, got " + v.dump());
}

Params params_from_json(const Json& j) {
  try {
    return Params::make(field<int>(j, "N"), field<int>(j, "d"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Cell cell_from_json(const Json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    throw ParseError("expected an [i, n] pair, got " + v.dump());
  }
  return {v[0].get<int>(), v[1].get<int>()};
}

Json cells_to_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back({c.i, c.n});
  return out;
}

std::vector<std::vector<std::string>> tableau_cells(const Tableau& t, MuDisplay mu) {
  const Rational factor = display_factor(mu, t.params());
  std::vector<std::vector<std::string>> rows;
  for (int i = 1; i <= t.d(); ++i) {
    auto& row = rows.emplace_back();
    for (int n = 0; n <= t.N(); ++n) row.push_back(to_string(t(i, n) * factor));
  }
  return rows;
}

std::string align(const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& row : rows) {
    for (const auto& s : row) width = std::max(width, s.size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::string(width - row[k].size(), ' ') + row[k];
    }
    out += '\n';
  }
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

MuDisplay parse_mu_display(std::string_view text) {
  if (text == "d") return MuDisplay::d;
  if (text == "one") return MuDisplay::one;
  if (text == "parseval") return MuDisplay::parseval;
  throw ParseError("unknown mu display '" + std::string(text) + "' (expected d, one or parseval)");
}

std::string_view mu_display_name(MuDisplay mu) {
  switch (mu) {
    case MuDisplay::d:
      return "d";
    case MuDisplay::one:
      return "one";
    case MuDisplay::parseval:
      return "parseval";
  }
  return "d";
}

Rational display_factor(MuDisplay mu, const Params& p) {
  switch (mu) {
    case MuDisplay::d:
      return 1;
    case MuDisplay::one:
      if (p.d == 0) throw DomainError("unit-norm display needs d >= 1");
      return Rational(1, p.d);
    case MuDisplay::parseval:
      if (p.N == 0) throw DomainError("Parseval display needs N >= 1");
      return Rational(1, p.N);
  }
  return 1;
}

Json tableau_to_json(const Tableau& t, MuDisplay mu) {
  Json j;
  j["N"] = t.N();
  j["d"] = t.d();
  if (mu != MuDisplay::d) j["mu_display"] = mu_display_name(mu);
  j["rows"] = tableau_cells(t, mu);
  return j;
}

Tableau tableau_from_json(const Json& j) {
  const Params p = params_from_json(j);
  const Json& rows = array_field(j, "rows");
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("tableau rows must be arrays");
    auto& out = values.emplace_back();
    for (const auto& v : row) out.push_back(rational_from_json(v));
  }
  Tableau t;
  try {
    t = Tableau::from_rows(p, values);
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
  if (j.contains("mu_display")) {
    const Rational factor = display_factor(parse_mu_display(field<std::string>(j, "mu_display")), p);
    for (int i = 1; i <= p.d; ++i) {
      for (int n = 0; n <= p.N; ++n) t(i, n) /= factor;
    }
  }
  return t;
}

Json report_to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back({{"id", v.id.str()}, {"amount", to_string(v.value)}});
  j["slacks"] = Json::array();
  for (const auto& v : r.slacks) j["slacks"].push_back({{"id", v.id.str()}, {"slack", to_string(v.value)}});
  return j;
}

Json hrep_to_json(const HRep& h) {
  Json j;
  j["params"] = {{"N", h.params.N}, {"d", h.params.d}};
  j["variant"] = variant_name(h.variant);
  j["free_vars"] = cells_to_json(h.free_vars);
  j["eliminated"] = cells_to_json(h.eliminated);
  j["equalities_eliminated"] = h.equalities_eliminated;
  j["inequalities"] = Json::array();
  for (const auto& half : h.inequalities) {
    Json coeffs = Json::array();
    for (const auto& c : half.coeffs) coeffs.push_back(to_string(c));
    j["inequalities"].push_back({{"id", half.id.str()}, {"coeffs", coeffs}, {"rhs", to_string(half.rhs)}});
  }
  return j;
}

HRep hrep_from_json(const Json& j) {
  HRep h;
  if (!j.is_object() || !j.contains("params")) throw ParseError("missing field 'params'");
  h.params = params_from_json(j.at("params"));
  h.variant = parse_variant(field<std::string>(j, "variant"));
  for (const auto& c : array_field(j, "free_vars")) h.free_vars.push_back(cell_from_json(c));
  if (j.contains("eliminated")) {
    for (const auto& c : array_field(j, "eliminated")) h.eliminated.push_back(cell_from_json(c));
  }
  if (j.contains("equalities_eliminated")) h.equalities_eliminated = field<std::string>(j, "equalities_eliminated");
  for (const auto& row : array_field(j, "inequalities")) {
    HalfSpace half;
    half.id = ConditionId::parse(field<std::string>(row, "id"));
    for (const auto& c : array_field(row, "coeffs")) half.coeffs.push_back(rational_from_json(c));
    if (!row.contains("rhs")) throw ParseError("inequality without 'rhs'");
    half.rhs = rational_from_json(row.at("rhs"));
    if (half.coeffs.size() != h.free_vars.size()) {
      throw ParseError("inequality " + half.id.str() + " has " + std::to_string(half.coeffs.size()) +
                       " coefficients for " + std::to_string(h.free_vars.size()) + " free variables");
    }
    h.inequalities.push_back(std::move(half));
  }
  return h;
}

Json vertices_to_json(const std::vector<Vertex>& vertices, MuDisplay mu) {
  Json out = Json::array();
  for (const auto& v : vertices) {
    Json tight = Json::array();
    for (const auto& id : v.tight_conditions) tight.push_back(id.str());
    out.push_back({{"tableau", tableau_to_json(v.tableau, mu)}, {"tight", tight}});
  }
  return out;
}

Json float_tableau_to_json(const FloatTableau& t, MuDisplay mu) {
  const double factor = to_double(display_factor(mu, t.params()));
  Json j;
  j["N"] = t.params().N;
  j["d"] = t.params().d;
  if (mu != MuDisplay::d) j["mu_display"] = mu_display_name(mu);
  j["tol"] = t.tol;
  j["rows"] = Json::array();
  for (int i = 1; i <= t.params().d; ++i) {
    Json row = Json::array();
    for (int n = 0; n <= t.params().N; ++n) row.push_back(t.values(i, n) * factor);
    j["rows"].push_back(row);
  }
  return j;
}

FloatTableau float_tableau_from_json(const Json& j) {
  const Params p = params_from_json(j);
  std::vector<std::vector<double>> values;
  for (const auto& row : array_field(j, "rows")) {
    if (!row.is_array()) throw ParseError("tableau rows must be arrays");
    auto& out = values.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError("expected a number, got " + v.dump());
      out.push_back(v.get<double>());
    }
  }
  FloatTableau t;
  try {
    t.values = BasicTableau<double>::from_rows(p, values);
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
  t.tol = field<double>(j, "tol");
  if (j.contains("mu_display")) {
    const double factor = to_double(display_factor(parse_mu_display(field<std::string>(j, "mu_display")), p));
    for (int i = 1; i <= p.d; ++i) {
      for (int n = 0; n <= p.N; ++n) t.values(i, n) /= factor;
    }
  }
  return t;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

FrameMatrix read_frame_csv(std::istream& in, char delimiter) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto& row = rows.emplace_back();
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, delimiter)) {
      const auto first = cell.find_first_not_of(" \t");
      const auto last = cell.find_last_not_of(" \t");
      if (first == std::string::npos) throw ParseError("empty field in frame CSV row " + std::to_string(rows.size()));
      const std::string_view text(cell.data() + first, last - first + 1);
      double value = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("not a number in frame CSV: '" + std::string(text) + "'");
      }
      row.push_back(value);
    }
  }
  if (rows.empty()) throw ParseError("frame CSV has no rows");
  const std::size_t cols = rows.front().size();
  FrameMatrix f(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ParseError("frame CSV row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " fields, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      f(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return f;
}

void write_frame_csv(std::ostream& out, const FrameMatrix& f, char delimiter) {
  for (Eigen::Index r = 0; r < f.rows(); ++r) {
    for (Eigen::Index c = 0; c < f.cols(); ++c) {
      if (c > 0) out << delimiter;
      out << format_double(f(r, c));
    }
    out << '\n';
  }
}

std::string format_tableau(const Tableau& t, MuDisplay mu) { return align(tableau_cells(t, mu)); }

std::string format_float_tableau(const FloatTableau& t, MuDisplay mu) {
  const double factor = to_double(display_factor(mu, t.params()));
  std::vector<std::vector<std::string>> rows;
  for (int i = 1; i <= t.params().d; ++i) {
    auto& row = rows.emplace_back();
    for (int n = 0; n <= t.params().N; ++n) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10g", t.values(i, n) * factor);
      row.emplace_back(buf);
    }
  }
  return align(rows);
}

}  // namespace eigensteps

#include "eigensteps/tableau.hpp"

#include <array>
#include <charconv>

namespace eigensteps {

Params Params::make(int N, int d) {
  if (d < 0 || N < 0 || d > N) {
    throw DomainError("parameters must satisfy 0 <= d <= N, got N=" + std::to_string(N) + ", d=" + std::to_string(d));
  }
  return Params{N, d};
}

namespace {

constexpr std::array<std::pair<ConditionKind, std::string_view>, 9> kKindNames{{
    {ConditionKind::first_column, "first-column"},
    {ConditionKind::last_column, "last-column"},
    {ConditionKind::column_sum, "column-sum"},
    {ConditionKind::horizontal, "horizontal"},
    {ConditionKind::diagonal, "diagonal"},
    {ConditionKind::zero_triangle, "zero-triangle"},
    {ConditionKind::n_triangle, "N-triangle"},
    {ConditionKind::lower_bound, "lower-bound"},
    {ConditionKind::upper_bound, "upper-bound"},
}};

std::optional<int> parse_index(std::string_view field, std::string_view whole) {
  if (field.empty()) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("malformed condition id '" + std::string(whole) + "'");
  }
  return value;
}

ConditionId cell_condition(ConditionKind kind, int i, int n) { return ConditionId{kind, i, n}; }

}  // namespace

std::string_view kind_name(ConditionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

bool ConditionId::is_inequality() const {
  switch (kind) {
    case ConditionKind::horizontal:
    case ConditionKind::diagonal:
    case ConditionKind::lower_bound:
    case ConditionKind::upper_bound:
      return true;
    default:
      return false;
  }
}

std::string ConditionId::str() const {
  std::string out(kind_name(kind));
  out += ':';
  if (i) out += std::to_string(*i);
  out += ':';
  if (n) out += std::to_string(*n);
  return out;
}

ConditionId ConditionId::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) throw ParseError("malformed condition id '" + std::string(text) + "'");
  const auto name = text.substr(0, first);
  for (const auto& [k, kname] : kKindNames) {
    if (kname == name) {
      return ConditionId{k, parse_index(text.substr(first + 1, second - first - 1), text),
                         parse_index(text.substr(second + 1), text)};
    }
  }
  throw ParseError("unknown condition kind in '" + std::string(text) + "'");
}

ConditionId horizontal(int i, int n) { return cell_condition(ConditionKind::horizontal, i, n); }
ConditionId diagonal(int i, int n) { return cell_condition(ConditionKind::diagonal, i, n); }
ConditionId lower_bound(const Params& p) { return cell_condition(ConditionKind::lower_bound, p.d, p.d); }
ConditionId upper_bound(const Params& p) { return cell_condition(ConditionKind::upper_bound, 1, p.N - p.d); }

bool in_zero_triangle(const Params&, int i, int n) { return i > n; }
bool in_n_triangle(const Params& p, int i, int n) { return i < n + p.d - p.N + 1; }
bool is_free_entry(const Params& p, int i, int n) { return i <= n && n <= p.N - p.d + i - 1; }

Rational LinearForm::evaluate(const Tableau& t) const {
  Rational value = constant;
  for (const auto& term : terms) value += term.coeff * t[term.cell];
  return value;
}

LinearForm condition_form(const Params& p, const ConditionId& id) {
  const auto need = [&](bool ok) {
    if (!ok) throw DomainError("condition " + id.str() + " is not defined for N=" + std::to_string(p.N) + ", d=" +
                               std::to_string(p.d));
  };
  const auto in_range = [&](int i, int n) { return i >= 1 && i <= p.d && n >= 0 && n <= p.N; };
  LinearForm form;
  switch (id.kind) {
    case ConditionKind::column_sum: {
      need(id.n.has_value() && *id.n >= 0 && *id.n <= p.N);
      for (int i = 1; i <= p.d; ++i) form.terms.push_back({{i, *id.n}, 1});
      form.constant = -Rational(p.d * *id.n);
      return form;
    }
    case ConditionKind::lower_bound:
      need(p.d >= 1 && p.d <= p.N);
      form.terms.push_back({{p.d, p.d}, 1});
      return form;
    case ConditionKind::upper_bound:
      need(p.d >= 1 && p.d <= p.N);
      form.terms.push_back({{1, p.N - p.d}, -1});
      form.constant = p.N;
      return form;
    default:
      break;
  }
  need(id.i.has_value() && id.n.has_value());
  const int i = *id.i;
  const int n = *id.n;
  switch (id.kind) {
    case ConditionKind::first_column:
    case ConditionKind::zero_triangle:
      need(in_range(i, n));
      form.terms.push_back({{i, n}, 1});
      break;
    case ConditionKind::last_column:
    case ConditionKind::n_triangle:
      need(in_range(i, n));
      form.terms.push_back({{i, n}, 1});
      form.constant = -Rational(p.N);
      break;
    case ConditionKind::horizontal:
      need(in_range(i, n) && in_range(i, n + 1));
      form.terms.push_back({{i, n + 1}, 1});
      form.terms.push_back({{i, n}, -1});
      break;
    case ConditionKind::diagonal:
      need(in_range(i, n) && in_range(i - 1, n - 1));
      form.terms.push_back({{i - 1, n - 1}, 1});
      form.terms.push_back({{i, n}, -1});
      break;
    default:
      break;
  }
  return form;
}

std::vector<ConditionId> condition_list(const Params& p, ConditionSystem system) {
  const int N = p.N;
  const int d = p.d;
  std::vector<ConditionId> out;
  if (system == ConditionSystem::full) {
    for (int i = 1; i <= d; ++i) out.push_back(cell_condition(ConditionKind::first_column, i, 0));
    for (int i = 1; i <= d; ++i) out.push_back(cell_condition(ConditionKind::last_column, i, N));
    if (d > 0) {
      for (int n = 0; n <= N; ++n) out.push_back(ConditionId{ConditionKind::column_sum, std::nullopt, n});
    }
    for (int i = 1; i <= d; ++i) {
      for (int n = 0; n <= N; ++n) {
        if (n < N) out.push_back(horizontal(i, n));
        if (i > 1 && n > 0) out.push_back(diagonal(i, n));
      }
    }
    return out;
  }

  for (int i = 1; i <= d; ++i) {
    for (int n = 0; n <= N; ++n) {
      if (in_zero_triangle(p, i, n)) {
        out.push_back(cell_condition(ConditionKind::zero_triangle, i, n));
      } else if (in_n_triangle(p, i, n)) {
        out.push_back(cell_condition(ConditionKind::n_triangle, i, n));
      }
    }
  }
  if (d > 0) {
    for (int n = 1; n < N; ++n) out.push_back(ConditionId{ConditionKind::column_sum, std::nullopt, n});
  }
  for (int i = 1; i <= d; ++i) {
    for (int n = i; n <= N; ++n) {
      if (n < N - d + i - 1) out.push_back(horizontal(i, n));
      if (i > 1 && n < N - d + i) out.push_back(diagonal(i, n));
    }
  }
  if (d >= 1 && d <= N - 1) {
    out.push_back(lower_bound(p));
    out.push_back(upper_bound(p));
  }
  return out;
}

std::vector<ConditionId> inequality_list(const Params& p, ConditionSystem system) {
  std::vector<ConditionId> out;
  for (auto& id : condition_list(p, system)) {
    if (id.is_inequality()) out.push_back(std::move(id));
  }
  return out;
}

ValidationReport validate(const Tableau& t, ConditionSystem system) {
  ValidationReport report;
  for (const auto& id : condition_list(t.params(), system)) {
    const Rational value = condition_form(t.params(), id).evaluate(t);
    if (id.is_inequality()) {
      report.slacks.push_back({id, value});
      if (value < 0) report.violations.push_back({id, -value});
    } else if (value != 0) {
      report.violations.push_back({id, abs(value)});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

ValidationReport validate_full(const Tableau& t) { return validate(t, ConditionSystem::full); }
ValidationReport validate_reduced(const Tableau& t) { return validate(t, ConditionSystem::reduced); }

bool in_affine_hull(const Tableau& t) {
  for (const auto& id : condition_list(t.params(), ConditionSystem::reduced)) {
    if (id.is_inequality()) continue;
    if (condition_form(t.params(), id).evaluate(t) != 0) return false;
  }
  return true;
}

Tableau special_point(const Params& p) {
  Tableau t(p);
  for (int i = 1; i <= p.d; ++i) {
    for (int n = 0; n <= p.N; ++n) {
      if (in_zero_triangle(p, i, n)) {
        t(i, n) = 0;
      } else if (in_n_triangle(p, i, n)) {
        t(i, n) = p.N;
      } else {
        t(i, n) = p.d + n - 2 * i + 1;
      }
    }
  }
  return t;
}

}  // namespace eigensteps

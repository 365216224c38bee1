#include "eigensteps/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "eigensteps/affine_maps.hpp"
#include "eigensteps/frames.hpp"
#include "eigensteps/geometry.hpp"
#include "eigensteps/io.hpp"
#include "eigensteps/oracle.hpp"
#include "eigensteps/svg.hpp"

namespace eigensteps {

namespace {

struct Options {
  std::optional<int> N;
  std::optional<int> d;
  bool json = false;
  std::string in;
  std::string out;
  std::optional<double> tol;
  char delimiter = ',';
  std::string mu = "d";
  std::string system = "full";
  std::string variant = "full-reduced";
  std::string target;
  bool oracle = false;
  std::size_t limit = 10000;
  std::uint64_t seed = 0;
  std::size_t count = 100;
};

/// Marks a negative answer (invalid tableau, failed check) that has already
/// been printed; maps to exit code 1.
struct Negative {};

class Command {
 public:
  Command(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  MuDisplay mu() const { return parse_mu_display(opt_.mu); }

  Params params() const {
    if (!opt_.N || !opt_.d) throw CLI::ValidationError("--N and --d are required for this subcommand");
    return Params::make(*opt_.N, *opt_.d);
  }

  std::string read_input() const {
    if (opt_.in.empty() || opt_.in == "-") {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      return buf.str();
    }
    std::ifstream file(opt_.in);
    if (!file) throw DomainError("cannot open '" + opt_.in + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  Tableau read_tableau() const {
    Tableau t = tableau_from_json(parse_json(read_input()));
    if ((opt_.N && *opt_.N != t.N()) || (opt_.d && *opt_.d != t.d())) {
      throw DomainError("tableau is for (N=" + std::to_string(t.N()) + ", d=" + std::to_string(t.d()) +
                        ") but --N/--d ask for (" + (opt_.N ? std::to_string(*opt_.N) : "?") + ", " +
                        (opt_.d ? std::to_string(*opt_.d) : "?") + ")");
    }
    return t;
  }

  FrameMatrix read_frame() const {
    std::istringstream in(read_input());
    return read_frame_csv(in, opt_.delimiter);
  }

  double tol(double fallback) const { return opt_.tol.value_or(fallback); }

  /// Output goes to --out when given.
  void emit(const std::string& text) {
    if (opt_.out.empty() || opt_.out == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(opt_.out);
    if (!file) throw DomainError("cannot write '" + opt_.out + "'");
    file << text;
  }

  void emit_json(const Json& j) { emit(j.dump(2) + "\n"); }

  void emit_tableau(const Tableau& t) {
    if (opt_.json) {
      emit_json(tableau_to_json(t, mu()));
    } else {
      emit(format_tableau(t, mu()));
    }
  }

  void emit_frame(const FrameMatrix& f) {
    std::ostringstream buf;
    write_frame_csv(buf, f, opt_.delimiter);
    emit(buf.str());
  }

  /// A yes/no answer; a "no" exits with status 1.
  void verdict(bool ok, const std::string& label, Json details = Json::object()) {
    if (opt_.json) {
      Json j;
      j[label] = ok;
      for (auto& [k, v] : details.items()) j[k] = v;
      emit_json(j);
    } else {
      emit(paint(ok ? "true" : "false", ok) + "\n");
      for (auto& [k, v] : details.items()) emit(k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n");
    }
    if (!ok) throw Negative{};
  }

  std::string paint(const std::string& text, bool good) const {
    if (!color_) return text;
    return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
  }

  void set_color(bool on) { color_ = on; }

  const Options& opt() const { return opt_; }
  std::ostream& err() { return err_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  bool color_ = false;
};

std::string half_space_text(const HalfSpace& half, const HRep& h) {
  std::string lhs;
  for (std::size_t k = 0; k < half.coeffs.size(); ++k) {
    const Rational& c = half.coeffs[k];
    if (c == 0) continue;
    const std::string name = "lambda[" + std::to_string(h.free_vars[k].i) + "," + std::to_string(h.free_vars[k].n) + "]";
    if (lhs.empty()) {
      lhs += c < 0 ? "-" : "";
    } else {
      lhs += c < 0 ? " - " : " + ";
    }
    if (abs(c) != 1) lhs += to_string(abs(c)) + "*";
    lhs += name;
  }
  if (lhs.empty()) lhs = "0";
  return half.id.str() + ": " + lhs + " <= " + to_string(half.rhs);
}

void cmd_validate(Command& c) {
  const Tableau t = c.read_tableau();
  if (c.opt().system != "full" && c.opt().system != "reduced") {
    throw CLI::ValidationError("--system must be full or reduced");
  }
  const auto report = validate(t, c.opt().system == "full" ? ConditionSystem::full : ConditionSystem::reduced);
  if (c.opt().json) {
    c.emit_json(report_to_json(report));
  } else {
    c.emit(c.paint(report.valid ? "valid" : "invalid", report.valid) + "\n");
    for (const auto& v : report.violations) c.emit("  violated " + v.id.str() + " by " + to_string(v.value) + "\n");
  }
  if (!report.valid) throw Negative{};
}

void cmd_dim(Command& c) {
  const Params p = c.params();
  const int formula = dimension(p);
  Json j{{"N", p.N}, {"d", p.d}, {"dimension", formula}};
  bool agree = true;
  if (c.opt().oracle) {
    const auto cert = dimension_certificate(p);
    agree = cert.dimension == formula;
    j["oracle"] = {{"dimension", cert.dimension},
                   {"ambient", cert.ambient},
                   {"equality_rank", cert.equality_rank},
                   {"implicit_equalities", cert.implicit_equalities.size()}};
    if (cert.counted) j["oracle"]["counted"] = *cert.counted;
  }
  if (c.opt().json) {
    c.emit_json(j);
  } else {
    c.emit(std::to_string(formula) + "\n");
    if (c.opt().oracle) {
      c.emit("oracle: " + std::to_string(j["oracle"]["dimension"].get<int>()) + " (" + c.paint(agree ? "agrees" : "differs", agree) +
             ")\n");
    }
  }
  if (!agree) throw Negative{};
}

void cmd_facets(Command& c) {
  const Params p = c.params();
  const int formula = facet_count(p);
  Json j{{"N", p.N}, {"d", p.d}, {"facets", formula}};
  bool agree = true;
  if (c.opt().oracle) {
    if (p.d < 2 || p.d > p.N - 2) throw DomainError("the facet oracle needs 2 <= d <= N-2");
    const auto kept = irredundant_inequalities(h_representation(p, HRepVariant::full_reduced));
    agree = static_cast<int>(kept.size()) == formula;
    Json ids = Json::array();
    for (const auto& id : kept) ids.push_back(id.str());
    j["oracle"] = {{"facets", kept.size()}, {"irredundant", ids}};
  }
  if (c.opt().json) {
    c.emit_json(j);
  } else {
    c.emit(std::to_string(formula) + "\n");
    if (c.opt().oracle) {
      c.emit("oracle: " + std::to_string(j["oracle"]["facets"].get<int>()) + " (" + c.paint(agree ? "agrees" : "differs", agree) +
             ")\n");
    }
  }
  if (!agree) throw Negative{};
}

void cmd_hrep(Command& c) {
  const HRep h = h_representation(c.params(), parse_variant(c.opt().variant));
  if (c.opt().json) {
    c.emit_json(hrep_to_json(h));
    return;
  }
  std::string text = "free:";
  for (const auto& cell : h.free_vars) text += " lambda[" + std::to_string(cell.i) + "," + std::to_string(cell.n) + "]";
  text += "\neliminated: " + (h.equalities_eliminated.empty() ? std::string("none") : h.equalities_eliminated) + "\n";
  for (const auto& half : h.inequalities) text += half_space_text(half, h) + "\n";
  c.emit(text);
}

void cmd_witness(Command& c) {
  const Params p = c.params();
  if (c.opt().target.empty()) throw CLI::ValidationError("--target is required");
  const Witness w = find_witness(p, ConditionId::parse(c.opt().target));
  if (c.opt().json) {
    c.emit_json({{"target", c.opt().target}, {"strategy", w.strategy}, {"tableau", tableau_to_json(w.point, c.mu())}});
  } else {
    c.emit("strategy: " + w.strategy + "\n" + format_tableau(w.point, c.mu()));
  }
}

void cmd_vertices(Command& c) {
  const auto vertices = enumerate_vertices(c.params(), c.opt().limit);
  if (c.opt().json) {
    c.emit_json(vertices_to_json(vertices, c.mu()));
    return;
  }
  std::string text = std::to_string(vertices.size()) + " vertices\n";
  for (const auto& v : vertices) {
    text += "\n" + format_tableau(v.tableau, c.mu()) + "tight:";
    for (const auto& id : v.tight_conditions) text += " " + id.str();
    text += "\n";
  }
  c.emit(text);
}

void cmd_sample(Command& c) {
  const auto samples = sample_interior(c.params(), c.opt().seed, c.opt().count);
  if (c.opt().json) {
    Json j = Json::array();
    for (const auto& t : samples) j.push_back(tableau_to_json(t, c.mu()));
    c.emit_json(j);
    return;
  }
  std::string text;
  for (std::size_t k = 0; k < samples.size(); ++k) text += (k > 0 ? "\n" : "") + format_tableau(samples[k], c.mu());
  c.emit(text);
}

void cmd_identities(Command& c) {
  const Params p = c.params();
  const auto samples = sample_interior(p, c.opt().seed, c.opt().count);
  const Tableau centre = special_point(p);
  const bool maps = check_identities(p, samples);
  const bool phi_fixed = phi(centre) == centre;
  const bool psi_special = psi(centre) == special_point(p.complement());
  c.verdict(maps && phi_fixed && psi_special, "identities",
            {{"samples", samples.size()},
             {"compositions", maps},
             {"phi_fixes_special_point", phi_fixed},
             {"psi_maps_special_point", psi_special}});
}

void cmd_frame_eigensteps(Command& c) {
  const FrameMatrix f = c.read_frame();
  const FloatTableau t = eigensteps_of_frame(f, c.tol(1e-9));
  if (c.opt().json) {
    c.emit_json(float_tableau_to_json(t, c.mu()));
  } else {
    c.emit(format_float_tableau(t, c.mu()));
  }
}

void cmd_verify(Command& c, bool phi_side) {
  const FrameMatrix f = c.read_frame();
  const double tol = c.tol(1e-8);
  const bool ok = phi_side ? verify_phi_correspondence(f, tol) : verify_psi_correspondence(f, tol);
  const double error = phi_side ? phi_correspondence_error(f) : psi_correspondence_error(f, tol);
  c.verdict(ok, phi_side ? "phi_correspondence" : "psi_correspondence", {{"max_error", error}, {"tol", tol}});
}

using Handler = std::function<void(Command&)>;

struct Spec {
  const char* name;
  const char* help;
  Handler handler;
  // option groups
  bool params = false;
  bool input = false;
  bool tol = false;
  bool delimiter = false;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Eigenstep polytopes of equal norm tight frames"};
  app.name("eigensteps");
  app.require_subcommand(1);

  const std::vector<Spec> specs{
      {"validate", "Check a tableau against the full or reduced system", cmd_validate, true, true},
      {"special", "Print the special interior point",
       [](Command& c) { c.emit_tableau(special_point(c.params())); }, true},
      {"dim", "Dimension of the polytope", cmd_dim, true},
      {"facets", "Number of facets", cmd_facets, true},
      {"hrep", "H-representation over the free coordinates", cmd_hrep, true},
      {"witness", "Point violating exactly one facet inequality", cmd_witness, true},
      {"vertices", "Enumerate vertices", cmd_vertices, true},
      {"sample", "Exact interior samples", cmd_sample, true},
      {"phi", "Apply the rotation-complement involution", [](Command& c) { c.emit_tableau(phi(c.read_tableau())); },
       true, true},
      {"psi", "Map to the complementary polytope", [](Command& c) { c.emit_tableau(psi(c.read_tableau())); }, true,
       true},
      {"identities", "Check the map identities on samples", cmd_identities, true},
      {"frame-eigensteps", "Eigensteps of a frame", cmd_frame_eigensteps, false, true, true, true},
      {"frame-tight-check", "Check that a frame is equal norm tight",
       [](Command& c) { c.verdict(is_equal_norm_tight(c.read_frame(), c.tol(1e-9)), "equal_norm_tight"); }, false,
       true, true, true},
      {"reverse", "Reverse the order of the frame vectors",
       [](Command& c) { c.emit_frame(reverse_frame(c.read_frame())); }, false, true, false, true},
      {"naimark", "Naimark complement of an equal norm tight frame",
       [](Command& c) { c.emit_frame(naimark_complement(c.read_frame(), c.tol(1e-9))); }, false, true, true, true},
      {"harmonic", "Real harmonic equal norm tight frame",
       [](Command& c) { c.emit_frame(harmonic_frame(c.params())); }, true, false, false, true},
      {"verify-phi", "Check the reversal correspondence numerically", [](Command& c) { cmd_verify(c, true); }, false,
       true, true, true},
      {"verify-psi", "Check the Naimark correspondence numerically", [](Command& c) { cmd_verify(c, false); }, false,
       true, true, true},
      {"plot2d", "SVG of a two-dimensional polytope", [](Command& c) { c.emit(plot2d_svg(c.params())); }, true},
  };

  std::map<CLI::App*, const Spec*> lookup;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    lookup[sub] = &spec;
    sub->add_flag("--json", opt.json, "Machine-readable JSON output");
    sub->add_option("--out", opt.out, "Write output to a file");
    sub->add_option("--mu-display", opt.mu, "Display scale: d, one or parseval")
        ->check(CLI::IsMember({"d", "one", "parseval"}));
    if (spec.params || spec.input) {
      sub->add_option("--N", opt.N, "Number of frame vectors");
      sub->add_option("--d", opt.d, "Dimension of the space");
    }
    if (spec.input) sub->add_option("--in", opt.in, "Input file (default stdin)");
    if (spec.tol) sub->add_option("--tol", opt.tol, "Comparison tolerance")->check(CLI::PositiveNumber);
    if (spec.delimiter) sub->add_option("--delimiter", opt.delimiter, "CSV field delimiter");
  }
  app.get_subcommand("validate")
      ->add_option("--system", opt.system, "full or reduced")
      ->check(CLI::IsMember({"full", "reduced"}));
  app.get_subcommand("dim")->add_flag("--oracle", opt.oracle, "Also run the LP oracle");
  app.get_subcommand("facets")->add_flag("--oracle", opt.oracle, "Also run the LP redundancy scan");
  app.get_subcommand("hrep")
      ->add_option("--variant", opt.variant, "full-reduced or non-redundant")
      ->check(CLI::IsMember({"full-reduced", "non-redundant"}));
  app.get_subcommand("witness")->add_option("--target", opt.target, "Condition id, e.g. horizontal:2:2")->required();
  app.get_subcommand("vertices")->add_option("--limit", opt.limit, "Maximum number of vertices");
  for (const char* name : {"sample", "identities"}) {
    app.get_subcommand(name)->add_option("--seed", opt.seed, "Random seed");
    app.get_subcommand(name)->add_option("--count", opt.count, "Number of samples");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const char* color_env = std::getenv("EIGENSTEPS_COLOR");
  const std::string color = color_env ? color_env : "auto";
  if (color != "auto" && color != "never") {
    err << "EIGENSTEPS_COLOR must be auto or never\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Command command(opt, out, err);
  command.set_color(color == "auto" && &out == &std::cout && opt.out.empty() && isatty(STDOUT_FILENO));
  try {
    lookup.at(chosen)->handler(command);
  } catch (const Negative&) {
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace eigensteps

#include "phasegraph/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "phasegraph/clifford.hpp"
#include "phasegraph/graph.hpp"
#include "phasegraph/io.hpp"
#include "phasegraph/oracle.hpp"
#include "phasegraph/stabilizer.hpp"

namespace phasegraph {
namespace {

constexpr int kVerifyFailure = 2;

struct Options {
  std::string field_path;
  int n = 0;
  std::string format = "text";
  std::string out_path;

  std::string input;
  std::string gates_path;
  std::string lambda = "0";
  std::string keep;
  bool graphs_only = false;
  bool orbits = false;
  bool coefficients = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FieldPtr field_from_flags(const Options& o) {
  if (!o.field_path.empty()) return load_field(o.field_path);
  if (o.n > 0) return Field::builtin(o.n);
  return nullptr;
}

std::string base_dir(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  return parent.empty() ? "." : parent.string();
}

// A curve document ("phi") or a graph document ("edges"); graphs need a field from the flags.
Curve load_curve_input(const Options& o) {
  if (o.input.empty()) throw UsageError("missing input file");
  const nlohmann::json j = read_json_file(o.input);
  if (j.contains("edges")) {
    const FieldPtr field = field_from_flags(o);
    if (!field) throw UsageError("graph input needs --n or --field");
    return graph_to_curve(field, graph_from_json(j));
  }
  return curve_from_json(j, field_from_flags(o), base_dir(o.input));
}

std::string format_complex(std::complex<double> v) {
  auto clean = [](double x) { return std::abs(x) < 1e-15 ? 0.0 : x; };
  std::ostringstream os;
  os << std::setprecision(12) << clean(v.real()) << (clean(v.imag()) < 0 ? "-" : "+") << std::abs(clean(v.imag())) << "i";
  return os.str();
}

nlohmann::json matrix_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m.value(r, c).real(), m.value(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const ExactMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << format_complex(m.value(r, c));
    os << "\n";
  }
  return os.str();
}

nlohmann::json bit_matrix_json(const BitMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c));
    rows.push_back(row);
  }
  return rows;
}

std::vector<int> parse_keep(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad --keep entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--keep needs at least one qubit");
  return out;
}

int cmd_field(const Options& o, std::ostream& out) {
  FieldPtr field = field_from_flags(o);
  if (!field) throw UsageError("field needs --n or --field");
  const Field& f = *field;
  bool primitive = true;
  for (std::uint32_t k = 1; k < f.order(); ++k) {
    if (f.pow(f.primitive(), k) == kOne) primitive = false;
  }
  bool self_dual = true;
  for (int i = 0; i < f.degree(); ++i) {
    for (int j = 0; j < f.degree(); ++j) {
      if (f.trace(f.mul(f.theta(i), f.theta(j))) != (i == j)) self_dual = false;
    }
  }
  bool round_trip = true;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    Element sum;
    for (int i = 0; i < f.degree(); ++i) {
      if (f.coord(Element{a}, i)) sum += f.theta(i);
    }
    if (sum != Element{a}) round_trip = false;
  }
  const std::vector<std::pair<std::string, bool>> checks = {
      {"irreducible", is_irreducible(f.polynomial(), f.degree())},
      {"primitive", primitive},
      {"self_dual", self_dual},
      {"round_trip", round_trip}};
  bool ok = true;
  for (const auto& [name, pass] : checks) ok = ok && pass;
  if (o.format == "json") {
    nlohmann::json j = field_to_json(f);
    for (const auto& [name, pass] : checks) j["checks"][name] = pass ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    std::string poly;
    for (int k = f.degree(); k >= 0; --k) {
      if (!(f.polynomial() >> k & 1u)) continue;
      poly += (poly.empty() ? "" : " + ") + (k == 0 ? std::string("1") : k == 1 ? std::string("x") : "x^" + std::to_string(k));
    }
    out << "GF(2^" << f.degree() << ")  poly: " << poly << "\n";
    out << "basis:";
    for (Element t : f.basis()) out << " " << f.to_string(t);
    out << "\n";
    for (const auto& [name, pass] : checks) out << name << ": " << (pass ? "pass" : "fail") << "\n";
  }
  return ok ? 0 : kVerifyFailure;
}

int cmd_g2c(const Options& o, std::ostream& out) {
  const FieldPtr field = field_from_flags(o);
  if (!field) throw UsageError("g2c needs --n or --field");
  if (o.input.empty()) throw UsageError("missing graph file");
  const Curve c = graph_to_curve(field, graph_from_json(read_json_file(o.input)));
  if (o.format == "json") {
    out << curve_to_json(c).dump() << "\n";
  } else {
    out << c.to_string() << "\n";
  }
  return 0;
}

int cmd_c2g(const Options& o, std::ostream& out) {
  const Curve c = load_curve_input(o);
  const AdjacencyMatrix g = curve_to_graph(c);
  if (o.format == "dot") {
    out << to_dot(g);
  } else if (o.format == "json") {
    out << graph_to_json(g).dump() << "\n";
  } else {
    out << graph_to_json(g).dump() << "\n";
    out << "decorated Gamma:\n" << decorated_matrix(c).gamma.to_string();
  }
  return 0;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const Curve c = load_curve_input(o);
  if (o.gates_path.empty()) throw UsageError("apply needs a gate file");
  const std::vector<GateOp> ops = parse_gates(*c.field(), read_text_file(o.gates_path));
  nlohmann::json steps = nlohmann::json::array();
  Curve cur = c;
  std::size_t step = 0;
  try {
    for (; step < ops.size(); ++step) {
      cur = apply_sequence(cur, {ops[step]});
      steps.push_back({{"gate", to_string(*c.field(), ops[step])}, {"curve", cur.to_string()}});
    }
  } catch (const DegenerateCurveError& e) {
    throw InputError("step " + std::to_string(step + 1) + " (" + to_string(*c.field(), ops[step]) +
                     "): z-rotation degenerates curve; image " + e.image().to_string());
  }
  const DecoratedAdjacency gamma = decorated_matrix(cur);
  if (o.format == "json") {
    out << nlohmann::json{{"curve", curve_to_json(cur)}, {"text", cur.to_string()}, {"gamma", bit_matrix_json(gamma.gamma)}, {"steps", steps}}.dump(2)
        << "\n";
  } else {
    out << cur.to_string() << "\n" << gamma.gamma.to_string();
  }
  return 0;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("missing input file");
  const nlohmann::json j = read_json_file(o.input);
  FactorizationPartition p;
  if (j.contains("edges")) {
    p = factorization_partition(graph_from_json(j));
  } else {
    p = factorization_partition(curve_from_json(j, field_from_flags(o), base_dir(o.input)));
  }
  if (o.format == "json") {
    out << nlohmann::json{{"partition", p.parts}}.dump() << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const FieldPtr field = field_from_flags(o);
  if (!field) throw UsageError("enumerate needs --n or --field");
  const bool graphs_only = o.graphs_only || o.orbits;
  std::vector<Curve> curves;
  for_each_curve(field, [&](const Curve& c) {
    if (!graphs_only || is_graph_curve(c)) curves.push_back(c);
    return true;
  });
  if (!o.orbits) {
    if (o.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : curves) arr.push_back(c.to_string());
      out << arr.dump(2) << "\n";
    } else {
      for (const auto& c : curves) out << c.to_string() << "\n";
      out << "# " << curves.size() << " curves\n";
    }
    return 0;
  }
  const std::vector<OrbitClass> classes = lc_orbit_classes(field->degree());
  std::map<std::uint64_t, std::size_t> class_of;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (std::uint64_t m : classes[k].canonical_masks) class_of[m] = k;
  }
  std::vector<std::vector<const Curve*>> grouped(classes.size());
  for (const auto& c : curves) grouped[class_of.at(canonical_mask(curve_to_graph(c)))].push_back(&c);
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      nlohmann::json members = nlohmann::json::array();
      for (const Curve* c : grouped[k]) members.push_back(c->to_string());
      arr.push_back({{"representative", graph_to_json(classes[k].representative)},
                     {"partition", factorization_partition(classes[k].representative).parts},
                     {"curves", members}});
    }
    out << arr.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < classes.size(); ++k) {
      out << "class " << k + 1 << ": " << grouped[k].size() << " curves, partition "
          << factorization_partition(classes[k].representative).to_string() << ", representative "
          << graph_to_json(classes[k].representative)["edges"].dump() << "\n";
      for (const Curve* c : grouped[k]) out << "  " << c->to_string() << "\n";
    }
  }
  return 0;
}

int cmd_state(const Options& o, std::ostream& out) {
  const Curve c = load_curve_input(o);
  const Field& f = *c.field();
  if (o.coefficients) {
    const StabCoefficients coeffs = c_coefficients(c);
    nlohmann::json table = nlohmann::json::object();
    for (std::uint32_t a = 0; a < f.size(); ++a) table[f.to_string(Element{a})] = "i^" + std::to_string(coeffs.exponent(Element{a}));
    out << table.dump(o.format == "json" ? -1 : 2) << "\n";
    return 0;
  }
  const ExactMatrix v = graph_state_vector(c, f.parse(o.lambda));
  if (o.format == "json") {
    nlohmann::json amps = nlohmann::json::array();
    for (std::size_t r = 0; r < v.rows(); ++r) amps.push_back({v.value(r, 0).real(), v.value(r, 0).imag()});
    out << nlohmann::json{{"n", c.n()}, {"amplitudes", amps}}.dump() << "\n";
  } else {
    for (std::size_t r = 0; r < v.rows(); ++r) {
      std::string label;
      for (int q = c.n() - 1; q >= 0; --q) label += (r >> q & 1u) ? '1' : '0';
      out << "|" << label << "> " << format_complex(v.value(r, 0)) << "\n";
    }
  }
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Curve c = load_curve_input(o);
  const ExactMatrix rho = reduced_density(c, parse_keep(o.keep));
  if (o.format == "json") {
    out << matrix_json(rho).dump() << "\n";
  } else {
    out << matrix_text(rho);
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CheckReport> reports;
  auto tag = [&](std::vector<CheckReport> rs, const std::string& prefix) {
    for (auto& r : rs) {
      r.check = prefix + ": " + r.check;
      reports.push_back(r);
    }
  };
  if (!o.input.empty()) {
    Curve c = load_curve_input(o);
    tag(verify_curve_stabilizer(c), c.to_string());
    if (!o.gates_path.empty()) {
      for (const GateOp& op : parse_gates(*c.field(), read_text_file(o.gates_path))) {
        reports.push_back(verify_gate(c, op));
        try {
          c = apply_gate(c, op);
        } catch (const DegenerateCurveError&) {
          break;
        }
      }
    }
  } else {
    for (int n = 2; n <= 5; ++n) {
      const FieldPtr shipped = load_field(builtin_field_path(n));
      reports.push_back({"field gf" + std::to_string(n), shipped->same_as(*Field::builtin(n)), builtin_field_path(n)});
      std::vector<std::pair<std::string, AdjacencyMatrix>> graphs = {{"chain", chain(n)}, {"star", star(n)}};
      if (n >= 3) graphs.emplace_back("ring", ring(n));
      for (const auto& [name, g] : graphs) {
        tag(verify_curve_stabilizer(graph_to_curve(shipped, g)), name + "(" + std::to_string(n) + ")");
      }
    }
  }
  out << to_json(reports).dump(2) << "\n";
  return all_pass(reports) ? 0 : kVerifyFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Stabilizer states as additive curves over GF(2^n)", "phasegraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field_path, "Field spec JSON file");
  app.add_option("--n", o.n, "Use the built-in field spec for n qubits")->check(CLI::Range(1, 8));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--out", o.out_path, "Write output to this file");

  auto* field = app.add_subcommand("field", "Print and verify a field spec");
  auto* g2c = app.add_subcommand("g2c", "Graph JSON to curve");
  g2c->add_option("graph", o.input)->required();
  auto* c2g = app.add_subcommand("c2g", "Curve JSON to graph");
  c2g->add_option("curve", o.input)->required();
  auto* apply = app.add_subcommand("apply", "Apply a gate file to a curve");
  apply->add_option("curve", o.input)->required();
  apply->add_option("gates", o.gates_path)->required();
  auto* factorize = app.add_subcommand("factorize", "Factorization partition of a curve or graph");
  factorize->add_option("input", o.input)->required();
  auto* enumerate = app.add_subcommand("enumerate", "List all regular commutative curves");
  enumerate->add_flag("--graphs-only", o.graphs_only, "Only graph curves");
  enumerate->add_flag("--orbits", o.orbits, "Group graph curves by local-complementation orbit");
  auto* state = app.add_subcommand("state", "Graph-state vector P_f|lambda>");
  state->add_option("curve", o.input)->required();
  state->add_option("--lambda", o.lambda, "Computational basis label");
  state->add_flag("--coefficients", o.coefficients, "Print the c_lambda table instead");
  auto* reduce = app.add_subcommand("reduce", "Reduced density matrix");
  reduce->add_option("curve", o.input)->required();
  reduce->add_option("--keep", o.keep, "Comma-separated 1-based qubits to keep")->required();
  auto* verify = app.add_subcommand("verify", "Run the dense-matrix oracle");
  verify->add_option("input", o.input);
  verify->add_option("--gates", o.gates_path, "Also verify each gate of this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    const int code = app.exit(e, cli_out, err);
    out << cli_out.str();
    return code == 0 ? 0 : 1;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (*field) code = cmd_field(o, buffer);
    else if (*g2c) code = cmd_g2c(o, buffer);
    else if (*c2g) code = cmd_c2g(o, buffer);
    else if (*apply) code = cmd_apply(o, buffer);
    else if (*factorize) code = cmd_factorize(o, buffer);
    else if (*enumerate) code = cmd_enumerate(o, buffer);
    else if (*state) code = cmd_state(o, buffer);
    else if (*reduce) code = cmd_reduce(o, buffer);
    else if (*verify) code = cmd_verify(o, buffer);
  } catch (const std::exception& e) {
    err << "phasegraph: " << e.what() << "\n";
    return 1;
  }
  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "phasegraph: cannot write " << o.out_path << "\n";
      return 1;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace phasegraph

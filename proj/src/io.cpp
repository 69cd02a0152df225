#include "phasegraph/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace phasegraph {
namespace {

// sigma-power index of a polynomial-basis bit pattern, by walking powers of x.
int power_index(int n, std::uint32_t poly, std::uint32_t bits) {
  std::uint32_t x = 1;
  const std::uint32_t order = (1u << n) - 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    if (x == bits) return static_cast<int>(k);
    x <<= 1;
    if (x & (1u << n)) x ^= poly;
  }
  throw InputError("basis element is zero or outside the field");
}

int parse_power(int n, std::uint32_t poly, const std::string& text) {
  if (text == "1") return 0;
  if (text == "s") return 1;
  if (text.rfind("s^", 0) == 0) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(text.substr(2), &used);
      if (used == text.size() - 2) return k;
    } catch (const std::exception&) {
    }
  }
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    try {
      return power_index(n, poly, static_cast<std::uint32_t>(std::stoul(text.substr(2), nullptr, 16)));
    } catch (const std::logic_error&) {
    }
  }
  throw InputError("bad basis element '" + text + "'");
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json read_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

nlohmann::json field_to_json(const Field& field) {
  nlohmann::json poly = nlohmann::json::array();
  for (int k = 0; k <= field.degree(); ++k) poly.push_back((field.polynomial() >> k) & 1u);
  nlohmann::json basis = nlohmann::json::array();
  for (Element t : field.basis()) basis.push_back(field.to_string(t));
  return {{"n", field.degree()}, {"poly", poly}, {"basis", basis}};
}

FieldPtr field_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > Field::kMaxDegree) throw InputError("field degree out of range");
    const auto& poly_bits = j.at("poly");
    if (!poly_bits.is_array() || static_cast<int>(poly_bits.size()) != n + 1) {
      throw InputError("poly must list n+1 coefficients, low degree first");
    }
    std::uint32_t poly = 0;
    for (std::size_t k = 0; k < poly_bits.size(); ++k) {
      const int b = poly_bits[k].get<int>();
      if (b != 0 && b != 1) throw InputError("poly coefficients must be 0 or 1");
      poly |= static_cast<std::uint32_t>(b) << k;
    }
    if (!j.contains("basis")) return Field::build(n, poly);
    if (!is_irreducible(poly, n)) throw FieldError("reducible polynomial");
    std::vector<int> powers;
    for (const auto& e : j.at("basis")) powers.push_back(parse_power(n, poly, e.get<std::string>()));
    return Field::build(n, poly, powers);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed field spec: ") + e.what());
  }
}

FieldPtr load_field(const std::string& path) { return field_from_json(read_json_file(path)); }

std::string builtin_field_path(int n) { return std::string(PHASEGRAPH_DATA_DIR) + "/fields/gf" + std::to_string(n) + ".json"; }

FieldPtr resolve_field_ref(const nlohmann::json& ref, const std::string& base_dir) {
  if (ref.is_number_integer()) return Field::builtin(ref.get<int>());
  if (ref.is_string()) {
    std::filesystem::path p(ref.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return load_field(p.string());
  }
  if (ref.is_object()) return field_from_json(ref);
  throw InputError("field reference must be an integer, a path, or an object");
}

nlohmann::json curve_to_json(const Curve& c) {
  const Field& f = *c.field();
  nlohmann::json phi = nlohmann::json::array();
  for (Element e : c.phi()) phi.push_back(f.to_string(e));
  nlohmann::json field_ref;
  bool builtin = false;
  try {
    builtin = Field::builtin(f.degree())->same_as(f);
  } catch (const FieldError&) {
  }
  if (builtin) {
    field_ref = f.degree();
  } else {
    field_ref = field_to_json(f);
  }
  return {{"field", field_ref}, {"phi", phi}};
}

Curve curve_from_json(const nlohmann::json& j, FieldPtr fallback, const std::string& base_dir) {
  try {
    FieldPtr field = j.contains("field") ? resolve_field_ref(j.at("field"), base_dir) : std::move(fallback);
    if (!field) throw InputError("curve has no field; pass --n or --field");
    const auto& phi_json = j.at("phi");
    if (!phi_json.is_array()) throw InputError("phi must be an array");
    std::vector<Element> phi;
    for (const auto& e : phi_json) phi.push_back(field->parse(e.get<std::string>()));
    return Curve(field, phi);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed curve: ") + e.what());
  }
}

nlohmann::json graph_to_json(const AdjacencyMatrix& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.n()}, {"edges", edges}};
}

AdjacencyMatrix graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw InputError("graph needs n >= 1");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edges are [i, j] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return AdjacencyMatrix::from_edges(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph: ") + e.what());
  }
}

}  // namespace phasegraph

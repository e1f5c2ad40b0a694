#include "versorlab/json_io.hpp"

#include <cmath>

#include "versorlab/error.hpp"

namespace versorlab {

using nlohmann::json;

double clean(double x, double eps) { return std::abs(x) <= eps ? 0.0 : x; }

namespace {

json coords_json(const Multivector& v) {
  json row = json::array();
  for (double c : v.vector_coords()) row.push_back(clean(c));
  return row;
}

Signature signature_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw Error(ErrorCode::kParseError, "\"sig\" must be [p, q]");
  }
  return Signature(j[0].get<int>(), j[1].get<int>());
}

}  // namespace

json to_json(const Multivector& mv, double eps) {
  json coeffs = json::object();
  for (BladeMask m = 0; m < mv.blade_count(); ++m) {
    if (std::abs(mv[m]) > eps) coeffs[blade_name(m)] = mv[m];
  }
  return {{"sig", {mv.signature().p(), mv.signature().q()}}, {"coeffs", coeffs}};
}

Multivector multivector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sig") || !j.contains("coeffs") ||
      !j["coeffs"].is_object()) {
    throw Error(ErrorCode::kParseError, "multivector JSON needs \"sig\" and \"coeffs\"");
  }
  const Signature sig = signature_from_json(j["sig"]);
  Multivector mv(sig);
  for (const auto& [name, value] : j["coeffs"].items()) {
    if (!value.is_number()) {
      throw Error(ErrorCode::kParseError, "coefficient of " + name + " is not a number");
    }
    mv.set(parse_blade_name(name, sig), value.get<double>());
  }
  return mv;
}

RootSystemInput root_system_input_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sig") || !j.contains("simple_roots") ||
      !j["simple_roots"].is_array()) {
    throw Error(ErrorCode::kParseError,
                "root-system JSON needs \"sig\" and \"simple_roots\"");
  }
  RootSystemInput in;
  in.sig = signature_from_json(j["sig"]);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorCode::kParseError, "\"name\" must be a string");
    in.name = j["name"].get<std::string>();
  }
  for (const auto& row : j["simple_roots"]) {
    if (!row.is_array()) throw Error(ErrorCode::kParseError, "simple root must be an array");
    std::vector<double> coords;
    for (const auto& c : row) {
      if (!c.is_number()) throw Error(ErrorCode::kParseError, "root coordinate is not a number");
      coords.push_back(c.get<double>());
    }
    if (coords.size() != static_cast<std::size_t>(in.sig.dimension())) {
      throw Error(ErrorCode::kParseError, "simple root has " + std::to_string(coords.size()) +
                                              " coordinates, signature needs " +
                                              std::to_string(in.sig.dimension()));
    }
    in.simple_roots.push_back(Multivector::vector(in.sig, coords));
  }
  return in;
}

json to_json(const RootSystem& rs, double eps) {
  json out;
  if (rs.name) out["name"] = *rs.name;
  out["sig"] = {rs.sig.p(), rs.sig.q()};
  json simple = json::array();
  for (const auto& s : rs.simple_roots) simple.push_back(coords_json(s));
  out["simple_roots"] = simple;
  json roots = json::array();
  for (const auto& r : rs.roots) roots.push_back(coords_json(r));
  out["roots"] = roots;
  if (!rs.simple_roots.empty()) {
    const CartanMatrix a = cartan_matrix(rs);
    json cartan = json::array();
    for (std::size_t i = 0; i < a.n; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < a.n; ++k) row.push_back(clean(a(i, k), eps));
      cartan.push_back(row);
    }
    out["cartan"] = cartan;
    json edges = json::array();
    for (const auto& edge : diagram(rs)) edges.push_back({edge.i + 1, edge.j + 1, edge.m});
    out["diagram"] = edges;
  }
  return out;
}

json group_table_json(const VersorGroup& g, const std::vector<ConjugacyClass>& classes) {
  const auto pairing = inverse_pairing(g, classes);
  json out;
  out["kind"] = std::string(to_string(g.kind()));
  out["order"] = g.order();
  json list = json::array();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    json members = json::array();
    for (const auto& m : classes[c].members) members.push_back(to_json(m.mv()));
    list.push_back({{"size", classes[c].size()},
                    {"order", element_order(g, classes[c].representative.mv())},
                    {"representative", to_json(classes[c].representative.mv())},
                    {"inverse_class", pairing[c]},
                    {"members", members}});
  }
  out["classes"] = list;
  return out;
}

json group_table_json(const QuotientGroup& q) {
  json out;
  out["kind"] = std::string(to_string(q.kind));
  out["order"] = q.order();
  json list = json::array();
  for (const auto& c : q.classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(to_json(m.mv()));
    list.push_back({{"size", c.size()},
                    {"order", projective_order(c.representative)},
                    {"representative", to_json(c.representative.mv())},
                    {"members", members}});
  }
  out["classes"] = list;
  return out;
}

json to_json(const InducedRootSystem4D& induced, const SymmetryReport& symmetries) {
  json out;
  out["source"] = induced.source_group.source().name.value_or("");
  out["group_order"] = induced.source_group.order();
  out["label"] = induced.identification;
  out["root_count"] = induced.base.size();
  json base = to_json(induced.base);
  out["roots"] = base["roots"];
  out["simple_roots"] = base["simple_roots"];
  out["cartan"] = base["cartan"];
  out["automorphisms"] = {
      {"pass", symmetries.left_closed && symmetries.right_closed},
      {"exhaustive", symmetries.exhaustive},
      {"pairs_tested", symmetries.pairs_tested},
      {"nominal_pairs", symmetries.nominal_pairs},
      {"distinct_permutations", symmetries.distinct_permutations},
  };
  return out;
}

json to_json(const std::vector<McKayRow>& rows) {
  json list = json::array();
  for (const auto& r : rows) {
    list.push_back({{"three_d", r.three_d},
                    {"four_d", r.four_d},
                    {"lie", r.lie},
                    {"affine", r.affine},
                    {"phi_count", r.phi_count},
                    {"sum_dims", r.sum_dims},
                    {"coxeter_h", r.coxeter_h},
                    {"irrep_dims", r.irreps.dims},
                    {"spin_order", r.spin_order},
                    {"induced_roots", r.induced_roots}});
  }
  return list;
}

json to_json(const cga::ModularComparison& cmp) {
  return {{"input", {cmp.input.x1, cmp.input.x2}},
          {"word", cmp.word},
          {"versor_result", {clean(cmp.versor_result.x1), clean(cmp.versor_result.x2)}},
          {"oracle_result", {clean(cmp.oracle_result.x1), clean(cmp.oracle_result.x2)}},
          {"max_deviation", cmp.max_deviation}};
}

}  // namespace versorlab

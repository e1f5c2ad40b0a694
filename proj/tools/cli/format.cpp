#include "cli/format.hpp"

#include <fmt/format.h>

#include "versorlab/json_io.hpp"

namespace versorlab::cli {

namespace {

std::string number(double x) { return fmt::format("{:.10g}", clean(x)); }

std::string join_numbers(const std::vector<double>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += number(xs[i]);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += fmt::format("{}", xs[i]);
  }
  return out;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string cartan_markdown(const CartanMatrix& a) {
  std::string out = "|   |";
  for (std::size_t j = 0; j < a.n; ++j) out += fmt::format(" {} |", j + 1);
  out += "\n|---|";
  for (std::size_t j = 0; j < a.n; ++j) out += "---|";
  out += "\n";
  for (std::size_t i = 0; i < a.n; ++i) {
    out += fmt::format("| {} |", i + 1);
    for (std::size_t j = 0; j < a.n; ++j) out += " " + number(a(i, j)) + " |";
    out += "\n";
  }
  return out;
}

}  // namespace

std::string render_roots(const RootSystem& rs, Format format) {
  switch (format) {
    case Format::kJson:
      return json_text(to_json(rs));
    case Format::kCsv: {
      std::string out = "index";
      for (int i = 0; i < rs.sig.dimension(); ++i) out += fmt::format(",x{}", i + 1);
      out += "\n";
      for (std::size_t k = 0; k < rs.roots.size(); ++k) {
        out += fmt::format("{},{}\n", k, join_numbers(rs.roots[k].vector_coords(), ","));
      }
      return out;
    }
    case Format::kMarkdown: {
      std::string out = fmt::format("## Root system {} ({} roots)\n\n",
                                    rs.name.value_or("(custom)"), rs.size());
      out += "| # | root |\n|---|---|\n";
      for (std::size_t k = 0; k < rs.roots.size(); ++k) {
        out += fmt::format("| {} | {} |\n", k, to_string(rs.roots[k]));
      }
      if (!rs.simple_roots.empty()) {
        out += "\n### Cartan matrix\n\n" + cartan_markdown(cartan_matrix(rs));
        out += "\n### Diagram edges\n\n| i | j | m |\n|---|---|---|\n";
        for (const auto& e : diagram(rs)) {
          out += fmt::format("| {} | {} | {} |\n", e.i + 1, e.j + 1, e.m);
        }
      }
      return out;
    }
  }
  return {};
}

std::string render_group(const VersorGroup& g, Format format) {
  switch (format) {
    case Format::kJson: {
      nlohmann::json elements = nlohmann::json::array();
      for (const auto& e : g.elements()) elements.push_back(to_json(e.mv()));
      std::vector<std::size_t> sizes;
      for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
      return json_text({{"kind", std::string(to_string(g.kind()))},
                        {"source", g.source().name.value_or("")},
                        {"order", g.order()},
                        {"class_sizes", sizes},
                        {"elements", elements}});
    }
    case Format::kCsv: {
      std::string out = "index,parity,order,element\n";
      for (std::size_t k = 0; k < g.order(); ++k) {
        const auto& e = g.elements()[k];
        out += fmt::format("{},{},{},{}\n", k,
                           e.parity() == Parity::kEven ? "even" : "odd",
                           element_order(g, e.mv()), csv_quote(to_string(e.mv())));
      }
      return out;
    }
    case Format::kMarkdown: {
      std::string out = fmt::format("## {}({}) of order {}\n\n| # | order | element |\n|---|---|---|\n",
                                    g.kind() == GroupKind::kPin ? "Pin" : "Spin",
                                    g.source().name.value_or(""), g.order());
      for (std::size_t k = 0; k < g.order(); ++k) {
        const auto& e = g.elements()[k];
        out += fmt::format("| {} | {} | {} |\n", k, element_order(g, e.mv()), to_string(e.mv()));
      }
      return out;
    }
  }
  return {};
}

std::string render_group(const QuotientGroup& q, Format format) {
  switch (format) {
    case Format::kJson: {
      nlohmann::json elements = nlohmann::json::array();
      for (const auto& e : q.elements) elements.push_back(to_json(e.mv()));
      std::vector<std::size_t> sizes;
      for (const auto& c : q.classes) sizes.push_back(c.size());
      return json_text({{"kind", std::string(to_string(q.kind))},
                        {"order", q.order()},
                        {"covering_order", q.covering_order},
                        {"class_sizes", sizes},
                        {"elements", elements}});
    }
    case Format::kCsv: {
      std::string out = "index,order,element\n";
      for (std::size_t k = 0; k < q.order(); ++k) {
        out += fmt::format("{},{},{}\n", k, projective_order(q.elements[k]),
                           csv_quote("+-(" + to_string(q.elements[k].mv()) + ")"));
      }
      return out;
    }
    case Format::kMarkdown: {
      std::string out = fmt::format(
          "## {} group of order {} (each element given by two versors +-)\n\n"
          "| # | order | element |\n|---|---|---|\n",
          q.kind == QuotientKind::kRotation ? "Rotation" : "Reflection", q.order());
      for (std::size_t k = 0; k < q.order(); ++k) {
        out += fmt::format("| {} | {} | +-({}) |\n", k, projective_order(q.elements[k]),
                           to_string(q.elements[k].mv()));
      }
      return out;
    }
  }
  return {};
}

std::string render_classes(const VersorGroup& g, Format format) {
  const auto classes = conjugacy_classes(g);
  if (format == Format::kJson) return json_text(group_table_json(g, classes));
  const auto pairing = inverse_pairing(g, classes);
  if (format == Format::kCsv) {
    std::string out = "class,size,order,inverse_class,member\n";
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const std::size_t order = element_order(g, classes[c].representative.mv());
      for (const auto& m : classes[c].members) {
        out += fmt::format("{},{},{},{},{}\n", c, classes[c].size(), order, pairing[c],
                           csv_quote(to_string(m.mv())));
      }
    }
    return out;
  }
  std::string out = fmt::format(
      "## Conjugacy classes of {}({}), order {}, {} classes\n\n"
      "| Class | Size | Order | Inverse class | Group elements |\n|---|---|---|---|---|\n",
      g.kind() == GroupKind::kPin ? "Pin" : "Spin", g.source().name.value_or(""),
      g.order(), classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<std::string> members;
    for (const auto& m : classes[c].members) members.push_back(to_string(m.mv()));
    out += fmt::format("| {} | {} | {} | {} | {} |\n", c, classes[c].size(),
                       element_order(g, classes[c].representative.mv()), pairing[c],
                       join(members, ", "));
  }
  return out;
}

std::string render_classes(const QuotientGroup& q, Format format) {
  if (format == Format::kJson) return json_text(group_table_json(q));
  if (format == Format::kCsv) {
    std::string out = "class,size,order,member\n";
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
      const std::size_t order = projective_order(q.classes[c].representative);
      for (const auto& m : q.classes[c].members) {
        out += fmt::format("{},{},{},{}\n", c, q.classes[c].size(), order,
                           csv_quote("+-(" + to_string(m.mv()) + ")"));
      }
    }
    return out;
  }
  std::string out = fmt::format(
      "## Conjugacy classes of the {} group, order {}, {} classes\n\n"
      "| Class | Size | Order | Distinct transformations given by two versors each (+-) |\n"
      "|---|---|---|---|\n",
      q.kind == QuotientKind::kRotation ? "rotation" : "reflection", q.order(),
      q.classes.size());
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    std::vector<std::string> members;
    for (const auto& m : q.classes[c].members) members.push_back("+-(" + to_string(m.mv()) + ")");
    out += fmt::format("| {} | {} | {} | {} |\n", c, q.classes[c].size(),
                       projective_order(q.classes[c].representative), join(members, ", "));
  }
  return out;
}

std::string render_induction(const InducedRootSystem4D& induced,
                             const SymmetryReport& symmetries, Format format) {
  switch (format) {
    case Format::kJson:
      return json_text(to_json(induced, symmetries));
    case Format::kCsv: {
      std::string out = "index,a0,a1,a2,a3\n";
      for (std::size_t k = 0; k < induced.base.size(); ++k) {
        out += fmt::format("{},{}\n", k, join_numbers(induced.base.roots[k].vector_coords(), ","));
      }
      return out;
    }
    case Format::kMarkdown: {
      std::string out = fmt::format(
          "## Induction from {}\n\n| 3D system | spinor group order | induced 4D system | roots |\n"
          "|---|---|---|---|\n| {} | {} | {} | {} |\n\n",
          induced.source_group.source().name.value_or(""),
          induced.source_group.source().name.value_or(""), induced.source_group.order(),
          induced.identification, induced.base.size());
      out += "### Cartan matrix of extracted simple roots\n\n" +
             cartan_markdown(cartan_matrix(induced.base));
      out += fmt::format(
          "\n### Left-right spinor action\n\n{} pairs tested ({}), {} distinct permutations, "
          "all preserve the roots: {}\n",
          symmetries.pairs_tested, symmetries.exhaustive ? "exhaustive" : "sampled",
          symmetries.distinct_permutations,
          symmetries.left_closed && symmetries.right_closed ? "yes" : "no");
      return out;
    }
  }
  return {};
}

std::string render_mckay(const std::vector<McKayRow>& rows, Format format) {
  switch (format) {
    case Format::kJson:
      return json_text(to_json(rows));
    case Format::kCsv: {
      std::string out = "three_d,four_d,affine,phi_count,sum_dims,coxeter_h,irrep_dims\n";
      for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{},{}\n", r.three_d, r.four_d, r.affine,
                           r.phi_count, r.sum_dims, r.coxeter_h,
                           csv_quote(join(r.irreps.dims, " ")));
      }
      return out;
    }
    case Format::kMarkdown: {
      std::string out =
          "| 3D group | 4D group | affine Lie algebra | abs(Phi) | sum d_i | h | irrep dimensions |\n"
          "|---|---|---|---|---|---|---|\n";
      for (const auto& r : rows) {
        out += fmt::format("| {} | {} | {} | {} | {} | {} | {} |\n", r.three_d, r.four_d,
                           r.affine, r.phi_count, r.sum_dims, r.coxeter_h,
                           join(r.irreps.dims, ", "));
      }
      return out;
    }
  }
  return {};
}

std::string render_modular(const cga::ModularComparison& cmp, Format format) {
  switch (format) {
    case Format::kJson:
      return json_text(to_json(cmp));
    case Format::kCsv:
      return fmt::format("word,x1,x2,versor_x1,versor_x2,oracle_x1,oracle_x2,max_deviation\n"
                         "{},{},{},{},{},{},{},{}\n",
                         cmp.word, number(cmp.input.x1), number(cmp.input.x2),
                         number(cmp.versor_result.x1), number(cmp.versor_result.x2),
                         number(cmp.oracle_result.x1), number(cmp.oracle_result.x2),
                         fmt::format("{:.3g}", cmp.max_deviation));
    case Format::kMarkdown:
      return fmt::format(
          "| word | input | versor result | Mobius result | max deviation |\n"
          "|---|---|---|---|---|\n| {} | ({}, {}) | ({}, {}) | ({}, {}) | {:.3g} |\n",
          cmp.word.empty() ? "I" : cmp.word, number(cmp.input.x1), number(cmp.input.x2),
          number(cmp.versor_result.x1), number(cmp.versor_result.x2),
          number(cmp.oracle_result.x1), number(cmp.oracle_result.x2), cmp.max_deviation);
  }
  return {};
}

std::string render_checks(const std::vector<CheckResult>& checks, Format format) {
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  switch (format) {
    case Format::kJson: {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      return json_text({{"passed", passed}, {"failed", checks.size() - passed}, {"checks", list}});
    }
    case Format::kCsv: {
      std::string out = "name,pass,detail\n";
      for (const auto& c : checks) {
        out += fmt::format("{},{},{}\n", c.name, c.pass ? "true" : "false", csv_quote(c.detail));
      }
      return out;
    }
    case Format::kMarkdown: {
      std::string out = fmt::format("{} passed, {} failed\n\n| check | result | detail |\n|---|---|---|\n",
                                    passed, checks.size() - passed);
      for (const auto& c : checks) {
        out += fmt::format("| {} | {} | {} |\n", c.name, c.pass ? "pass" : "FAIL", c.detail);
      }
      return out;
    }
  }
  return {};
}

}  // namespace versorlab::cli

#include "versorlab/versor_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "versorlab/error.hpp"

namespace versorlab {

std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::kPin ? "pin" : "spin";
}

std::string_view to_string(QuotientKind kind) {
  return kind == QuotientKind::kReflection ? "reflection" : "rotation";
}

namespace {

template <typename T, typename Key>
void sort_by_key(std::vector<T>& items, Key key_of) {
  std::vector<std::pair<BladeKey, std::size_t>> keyed;
  keyed.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) keyed.emplace_back(key_of(items[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<T> out;
  out.reserve(items.size());
  for (const auto& [key, i] : keyed) out.push_back(std::move(items[i]));
  items = std::move(out);
}

void require_closed(const RootSystem& rs, const Precision& precision) {
  const AxiomReport report = check_axioms(rs, precision);
  if (!report.ok()) {
    throw Error(ErrorCode::kAxiomViolation,
                "input is not a closed root system: " + report.detail);
  }
}

const Versor& canonical_sign(const Versor& a, const Versor& negated, double grid) {
  return BladeKey(a.mv(), grid) < BladeKey(negated.mv(), grid) ? negated : a;
}

}  // namespace

VersorGroup::VersorGroup(GroupKind kind, std::vector<Versor> elements,
                         RootSystem source, double grid)
    : kind_(kind),
      elements_(std::move(elements)),
      source_(std::move(source)),
      index_(grid) {
  sort_by_key(elements_, [grid](const Versor& v) { return BladeKey(v.mv(), grid); });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.insert(elements_[i].mv(), i);
  }
}

std::vector<Versor> close_under_products(const std::vector<Versor>& generators,
                                         const GroupClosureOptions& options) {
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no generators");
  }
  std::vector<Versor> elements{Versor::identity(generators.front().signature())};
  KeyIndex index(options.precision.grid);
  index.insert(elements.front().mv(), 0);
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      Versor product = elements[next] * g;
      if (index.insert(product.mv(), elements.size())) {
        elements.push_back(std::move(product));
        if (elements.size() > options.max_elements) {
          throw Error(ErrorCode::kClosureCapExceeded,
                      "group closure exceeded " +
                          std::to_string(options.max_elements) + " elements");
        }
      }
    }
  }
  return elements;
}

VersorGroup generate_pin(const RootSystem& rs, const GroupClosureOptions& options) {
  require_closed(rs, options.precision);
  std::vector<Versor> generators;
  generators.reserve(rs.roots.size());
  for (const auto& r : rs.roots) {
    generators.push_back(Versor::from_multivector(r, options.precision.eps));
  }
  return VersorGroup(GroupKind::kPin, close_under_products(generators, options), rs,
                     options.precision.grid);
}

VersorGroup generate_spin(const RootSystem& rs, const GroupClosureOptions& options) {
  require_closed(rs, options.precision);
  std::vector<Versor> roots;
  for (const auto& r : rs.roots) {
    roots.push_back(Versor::from_multivector(r, options.precision.eps));
  }
  std::vector<Versor> generators;
  KeyIndex seen(options.precision.grid);
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      Versor ab = a * b;
      if (seen.insert(ab.mv(), generators.size())) generators.push_back(std::move(ab));
    }
  }
  return VersorGroup(GroupKind::kSpin, close_under_products(generators, options), rs,
                     options.precision.grid);
}

std::vector<ConjugacyClass> conjugacy_classes(const VersorGroup& g) {
  const auto& elems = g.elements();
  std::vector<bool> assigned(elems.size(), false);
  std::vector<ConjugacyClass> classes;
  std::vector<Versor> inverses;
  inverses.reserve(elems.size());
  for (const auto& e : elems) inverses.push_back(e.inverse());

  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      const Versor conj = inverses[k] * elems[i] * elems[k];
      const std::ptrdiff_t at = g.index_of(conj.mv());
      if (at < 0) {
        throw Error(ErrorCode::kNotInGroup,
                    "conjugate " + to_string(conj.mv()) + " left the group");
      }
      const auto u = static_cast<std::size_t>(at);
      if (!assigned[u]) {
        assigned[u] = true;
        orbit.push_back(u);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjugacyClass c{elems[orbit.front()], {}};
    for (std::size_t u : orbit) c.members.push_back(elems[u]);
    classes.push_back(std::move(c));
  }
  const double grid = g.grid();
  std::stable_sort(classes.begin(), classes.end(),
                   [grid](const ConjugacyClass& a, const ConjugacyClass& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return BladeKey(a.representative.mv(), grid) <
                            BladeKey(b.representative.mv(), grid);
                   });
  return classes;
}

std::vector<std::size_t> inverse_pairing(const VersorGroup& g,
                                         const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> class_of(g.order(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& m : classes[c].members) {
      class_of[static_cast<std::size_t>(g.index_of(m.mv()))] = c;
    }
  }
  std::vector<std::size_t> pairing;
  pairing.reserve(classes.size());
  for (const auto& c : classes) {
    const std::ptrdiff_t at = g.index_of(c.representative.inverse().mv());
    if (at < 0) throw Error(ErrorCode::kNotInGroup, "inverse outside group");
    pairing.push_back(class_of[static_cast<std::size_t>(at)]);
  }
  return pairing;
}

QuotientGroup quotient_by_sign(const VersorGroup& g) {
  const Multivector minus_one = Multivector::scalar(g.signature(), -1.0);
  if (!g.contains(minus_one)) {
    throw Error(ErrorCode::kNotInGroup, "-1 is not an element; cannot mod out sign");
  }
  const double grid = g.grid();
  QuotientGroup q{g.kind() == GroupKind::kPin ? QuotientKind::kReflection
                                              : QuotientKind::kRotation,
                  g.order(), {}, {}};
  KeyIndex reps(grid);
  for (const auto& e : g.elements()) {
    const Versor& rep = canonical_sign(e, e.negated(), grid);
    if (reps.insert(rep.mv(), q.elements.size())) q.elements.push_back(rep);
  }
  sort_by_key(q.elements, [grid](const Versor& v) { return BladeKey(v.mv(), grid); });
  KeyIndex rep_index(grid);
  for (std::size_t i = 0; i < q.elements.size(); ++i) rep_index.insert(q.elements[i].mv(), i);

  std::vector<bool> assigned(q.elements.size(), false);
  for (std::size_t i = 0; i < q.elements.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> orbit;
    for (const auto& h : g.elements()) {
      const Versor conj = h.inverse() * q.elements[i] * h;
      const Versor& rep = canonical_sign(conj, conj.negated(), grid);
      const auto u = static_cast<std::size_t>(rep_index.find(rep.mv()));
      if (!assigned[u]) {
        assigned[u] = true;
        orbit.push_back(u);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    QuotientClass c{q.elements[orbit.front()], {}};
    for (std::size_t u : orbit) c.members.push_back(q.elements[u]);
    q.classes.push_back(std::move(c));
  }
  std::stable_sort(q.classes.begin(), q.classes.end(),
                   [grid](const QuotientClass& a, const QuotientClass& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return BladeKey(a.representative.mv(), grid) <
                            BladeKey(b.representative.mv(), grid);
                   });
  return q;
}

std::size_t element_order(const VersorGroup& g, const Multivector& v) {
  const std::ptrdiff_t at = g.index_of(v);
  if (at < 0) {
    throw Error(ErrorCode::kNotInGroup, to_string(v) + " is not a group element");
  }
  const Versor& x = g.elements()[static_cast<std::size_t>(at)];
  const Multivector one = Multivector::scalar(g.signature(), 1.0);
  Versor power = x;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    if (BladeKey(power.mv(), g.grid()) == BladeKey(one, g.grid())) return k;
    power = power * x;
  }
  throw Error(ErrorCode::kNotInGroup, "element order exceeds group order");
}

std::vector<ExpForm> exp_decomposition(const VersorGroup& g) {
  if (g.signature() != Signature(3, 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "exponential decomposition needs a spin group in Cl(3,0)");
  }
  std::vector<ExpForm> out;
  out.reserve(g.order());
  for (const auto& e : g.elements()) {
    if (e.parity() != Parity::kEven) {
      throw Error(ErrorCode::kInvalidArgument, "odd element " + to_string(e.mv()));
    }
    ExpForm form{e, false, 1, std::nullopt, 0.0};
    const double s = e.mv().scalar_part();
    const Multivector b = grade_project(e.mv(), 2);
    const double bn = coefficient_norm(b);
    if (bn <= kEpsilon) {
      form.is_scalar = true;
      form.sign = s < 0 ? -1 : 1;
    } else if (std::abs(s) <= kEpsilon) {
      // Half-turn: orient B so its first nonzero coefficient is positive.
      Multivector unit_b = b / bn;
      form.sign = 1;
      for (BladeMask m = 0; m < unit_b.blade_count(); ++m) {
        if (std::abs(unit_b[m]) > kEpsilon) {
          if (unit_b[m] < 0) {
            form.sign = -1;
            unit_b = -unit_b;
          }
          break;
        }
      }
      form.bivector = unit_b;
      form.theta = std::numbers::pi / 2;
    } else {
      form.sign = s < 0 ? -1 : 1;
      form.bivector = b * (form.sign / bn);
      form.theta = std::atan2(bn, std::abs(s));
    }
    out.push_back(std::move(form));
  }
  return out;
}

std::size_t coxeter_number(const RootSystem& rs, const Precision& precision) {
  if (rs.simple_roots.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "root system has no simple roots");
  }
  const Versor w = Versor::from_vectors(rs.simple_roots, precision.eps);
  const int dim = rs.sig.dimension();
  std::vector<Multivector> basis;
  for (int i = 0; i < dim; ++i) basis.push_back(Multivector::basis_vector(rs.sig, i));
  std::vector<Multivector> current = basis;
  constexpr std::size_t kMaxOrder = 100000;
  for (std::size_t k = 1; k <= kMaxOrder; ++k) {
    bool fixed = true;
    for (int i = 0; i < dim; ++i) {
      auto& v = current[static_cast<std::size_t>(i)];
      v = sandwich(v, w, precision.eps);
      if (!approx_equal(v, basis[static_cast<std::size_t>(i)], precision.eps * 1e3)) {
        fixed = false;
      }
    }
    if (fixed) return k;
  }
  throw Error(ErrorCode::kClosureCapExceeded, "Coxeter element has no finite order");
}

}  // namespace versorlab

namespace versorlab {

std::size_t projective_order(const Versor& v, std::size_t cap, double eps) {
  Versor power = v;
  for (std::size_t k = 1; k <= cap; ++k) {
    const Multivector& p = power.mv();
    if (is_homogeneous_grade(p, 0, eps) && std::abs(std::abs(p.scalar_part()) - 1.0) <= eps) {
      return k;
    }
    power = power * v;
  }
  throw Error(ErrorCode::kNotInGroup, "element has no finite order up to sign");
}

}  // namespace versorlab

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "cli/cli.hpp"
#include "versorlab/catalog.hpp"
#include "versorlab/cga2d.hpp"
#include "versorlab/error.hpp"
#include "versorlab/induction.hpp"
#include "versorlab/mckay.hpp"
#include "versorlab/versor_group.hpp"

namespace versorlab::cli {

namespace {

constexpr int kSamples = 250;

class Suite {
 public:
  explicit Suite(std::vector<CheckResult>& out) : out_(out) {}

  // The body returns an empty string on success or a failure description.
  void check(std::string name, const std::function<std::string()>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
      if (r.pass) r.detail = "ok";
    } catch (const Error& e) {
      r.detail = fmt::format("{}: {}", error_code_name(e.code()), e.what());
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

std::string expect_eq(std::size_t got, std::size_t want, std::string_view what) {
  if (got == want) return {};
  return fmt::format("{}: got {}, expected {}", what, got, want);
}

Multivector random_vector(std::mt19937_64& rng, Signature sig) {
  std::normal_distribution<double> gauss;
  std::vector<double> c(static_cast<std::size_t>(sig.dimension()));
  for (auto& x : c) x = gauss(rng);
  return Multivector::vector(sig, c);
}

Multivector random_multivector(std::mt19937_64& rng, Signature sig) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multivector m(sig);
  for (BladeMask b = 0; b < sig.blade_count(); ++b) m.set(b, u(rng));
  return m;
}

Multivector unit_bivector(std::mt19937_64& rng) {
  const Signature sig{3, 0};
  std::normal_distribution<double> gauss;
  const double a = gauss(rng), b = gauss(rng), c = gauss(rng);
  const double len = std::sqrt(a * a + b * b + c * c);
  return Multivector::blade(sig, 0b011, a / len) + Multivector::blade(sig, 0b110, b / len) +
         Multivector::blade(sig, 0b101, c / len);
}

void kernel_checks(Suite& suite, std::uint64_t seed, const Precision& p) {
  const Signature cl3{3, 0};
  suite.check("clifford_core.associativity", [&] {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kSamples; ++i) {
      const auto a = random_multivector(rng, cl3), b = random_multivector(rng, cl3),
                 c = random_multivector(rng, cl3);
      if (!approx_equal((a * b) * c, a * (b * c), p.eps * 10)) return std::string("mismatch");
    }
    return std::string{};
  });
  suite.check("clifford_core.reverse_anti_automorphism", [&] {
    std::mt19937_64 rng(seed + 1);
    for (int i = 0; i < kSamples; ++i) {
      const auto a = random_multivector(rng, cl3), b = random_multivector(rng, cl3);
      if (!approx_equal(reverse(a * b), reverse(b) * reverse(a), p.eps * 10))
        return std::string("mismatch");
    }
    return std::string{};
  });
  suite.check("clifford_core.reflection_formulas_agree", [&] {
    std::mt19937_64 rng(seed + 2);
    for (int i = 0; i < kSamples; ++i) {
      const auto v = random_vector(rng, cl3), a = random_vector(rng, cl3);
      if (!approx_equal(reflect(v, a), reflect_by_product(v, a), p.eps * 10))
        return std::string("mismatch");
    }
    return std::string{};
  });
  suite.check("clifford_core.sandwich_isometry", [&] {
    std::mt19937_64 rng(seed + 3);
    for (int i = 0; i < kSamples; ++i) {
      const Multivector vs[3] = {random_vector(rng, cl3), random_vector(rng, cl3),
                                 random_vector(rng, cl3)};
      const Versor a = Versor::from_vectors(vs);
      const auto u = random_vector(rng, cl3), w = random_vector(rng, cl3);
      if (std::abs(dot(sandwich(u, a), sandwich(w, a)) - dot(u, w)) > p.eps * 100)
        return std::string("inner product changed");
    }
    return std::string{};
  });
  suite.check("clifford_core.exp_additivity", [&] {
    std::mt19937_64 rng(seed + 4);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < kSamples; ++i) {
      const auto b = unit_bivector(rng);
      const double s = angle(rng), t = angle(rng);
      if (!approx_equal(exp_bivector(b, s).mv() * exp_bivector(b, t).mv(),
                        exp_bivector(b, s + t).mv(), p.eps * 10))
        return std::string("mismatch");
    }
    return std::string{};
  });
}

void root_checks(Suite& suite) {
  const std::pair<const char*, std::size_t> sizes[] = {
      {"A1", 2}, {"A1^3", 6}, {"A3", 12}, {"B3", 18}, {"H3", 30}, {"A1^4", 8},
      {"D4", 24}, {"F4", 48}, {"H4", 120}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
  for (const auto& [name, n] : sizes) {
    suite.check(fmt::format("root_systems.size.{}", name), [&] {
      const RootSystem rs = catalog(name);
      if (auto msg = expect_eq(rs.size(), n, "root count"); !msg.empty()) return msg;
      const AxiomReport rep = check_axioms(rs);
      return rep.ok() ? std::string{} : rep.detail;
    });
  }
  suite.check("root_systems.cartan_integral", [] {
    for (const char* name : {"A3", "B3", "F4", "G2", "E8"}) {
      const CartanMatrix a = cartan_matrix(catalog(name));
      for (double x : a.entries)
        if (std::abs(x - std::round(x)) > 1e-9) return fmt::format("{} has entry {}", name, x);
    }
    return std::string{};
  });
  suite.check("root_systems.axiom_failure_detected", [] {
    const Signature sig{3, 0};
    const auto e1 = Multivector::basis_vector(sig, 0), e2 = Multivector::basis_vector(sig, 1);
    const RootSystem bad = make_root_system(sig, {e1, -e1, e2});
    return check_axioms(bad).ok() ? std::string("{e1,-e1,e2} accepted") : std::string{};
  });
  suite.check("root_systems.coxeter_numbers", [] {
    const std::pair<const char*, std::size_t> hs[] = {
        {"A3", 4}, {"B3", 6}, {"H3", 10}, {"D4", 6}, {"F4", 12}, {"H4", 30}, {"E6", 12},
        {"E7", 18}, {"E8", 30}};
    for (const auto& [name, h] : hs)
      if (auto msg = expect_eq(coxeter_number(catalog(name)), h, name); !msg.empty()) return msg;
    return std::string{};
  });
}

void group_checks(Suite& suite) {
  const RootSystem a3 = catalog("A3");
  suite.check("versor_groups.orders_A3", [&] {
    const VersorGroup spin = generate_spin(a3), pin = generate_pin(a3);
    std::string msg = expect_eq(spin.order(), 24, "Spin(A3)");
    if (msg.empty()) msg = expect_eq(pin.order(), 48, "Pin(A3)");
    if (msg.empty()) msg = expect_eq(quotient_by_sign(spin).order(), 12, "chiral");
    if (msg.empty()) msg = expect_eq(quotient_by_sign(pin).order(), 24, "full");
    return msg;
  });
  const auto sizes_of = [](const auto& classes) {
    std::vector<std::size_t> s;
    for (const auto& c : classes) s.push_back(c.size());
    return s;
  };
  suite.check("versor_groups.class_sizes_A3", [&] {
    const VersorGroup spin = generate_spin(a3), pin = generate_pin(a3);
    using V = std::vector<std::size_t>;
    if (sizes_of(conjugacy_classes(spin)) != V{1, 1, 4, 4, 4, 4, 6}) return std::string("spin");
    if (sizes_of(conjugacy_classes(pin)) != V{1, 1, 6, 6, 6, 8, 8, 12}) return std::string("pin");
    if (sizes_of(quotient_by_sign(spin).classes) != V{1, 3, 4, 4}) return std::string("chiral");
    if (sizes_of(quotient_by_sign(pin).classes) != V{1, 3, 6, 6, 8}) return std::string("full");
    return std::string{};
  });
  suite.check("versor_groups.class_equation", [] {
    for (const char* name : {"A1^3", "B3", "H3"}) {
      const VersorGroup g = generate_spin(catalog(name));
      std::size_t total = 0;
      for (const auto& c : conjugacy_classes(g)) {
        if (g.order() % c.size() != 0) return fmt::format("{}: class size {}", name, c.size());
        total += c.size();
      }
      if (total != g.order()) return fmt::format("{}: classes cover {}", name, total);
    }
    return std::string{};
  });
  suite.check("versor_groups.exp_structure_A3", [&] {
    std::size_t thirds = 0, halves = 0;
    for (const auto& f : exp_decomposition(generate_spin(a3))) {
      if (f.is_scalar) continue;
      if (std::abs(f.theta - std::numbers::pi / 3) < 1e-9) ++thirds;
      if (std::abs(f.theta - std::numbers::pi / 2) < 1e-9) ++halves;
    }
    std::string msg = expect_eq(thirds, 16, "pi/3 elements");
    return msg.empty() ? expect_eq(halves, 6, "pi/2 elements") : msg;
  });
  suite.check("versor_groups.inversion_membership", [&] {
    const Multivector i3 = Multivector::blade(Signature{3, 0}, 0b111);
    if (generate_pin(a3).contains(i3)) return std::string("I in Pin(A3)");
    if (!generate_pin(catalog("B3")).contains(i3)) return std::string("I not in Pin(B3)");
    return std::string{};
  });
}

void induction_checks(Suite& suite, std::uint64_t seed) {
  const std::tuple<const char*, const char*, std::size_t> rows[] = {
      {"A1^3", "A1^4", 8}, {"A3", "D4", 24}, {"B3", "F4", 48}, {"H3", "H4", 120}};
  for (const auto& [src, label, n] : rows) {
    suite.check(fmt::format("induction.{}", src), [&] {
      const VersorGroup g = generate_spin(catalog(src));
      const InducedRootSystem4D induced = induce_4d(g);
      if (induced.identification != label)
        return fmt::format("identified as {}", induced.identification);
      if (auto msg = expect_eq(induced.base.size(), n, "induced roots"); !msg.empty()) return msg;
      SymmetrySweepOptions sweep;
      sweep.seed = seed;
      if (g.order() * g.order() > 10000) sweep.sampled_pairs = 2000;
      const SymmetryReport rep = spinorial_automorphisms(induced, sweep);
      return rep.left_closed && rep.right_closed ? std::string{} : std::string("one-sided");
    });
  }
  suite.check("induction.witness_2T", [] {
    const VersorGroup g = generate_spin(catalog("A3"));
    for (const auto& a : g.elements())
      for (const auto& b : g.elements()) reflection_closure_witness(g, a, b);
    return std::string{};
  });
}

void mckay_checks(Suite& suite) {
  suite.check("mckay.table", [] {
    for (const auto& row : mckay_table()) {
      if (row.phi_count != static_cast<std::size_t>(row.sum_dims) ||
          row.phi_count != row.coxeter_h)
        return fmt::format("{} row disagrees", row.three_d);
    }
    return std::string{};
  });
  suite.check("mckay.irreps_2T", [] {
    const IrrepDims d = irrep_dimensions(generate_spin(catalog("A3")));
    return d.dims == std::vector<int>{1, 1, 1, 2, 2, 2, 3} ? std::string{}
                                                           : std::string("unexpected dims");
  });
}

void cga_checks(Suite& suite, std::uint64_t seed, const Precision& p) {
  suite.check("cga2d.modular_relations", [] {
    const Multivector minus_one = Multivector::scalar(cga::kSignature, -1.0);
    const auto s = cga::modular_S().versor.mv(), t = cga::modular_T().versor.mv();
    if (!approx_equal(s * s, minus_one)) return std::string("S^2 != -1");
    const auto st = s * t;
    if (!approx_equal(st * st * st, minus_one)) return std::string("(ST)^3 != -1");
    return std::string{};
  });
  suite.check("cga2d.translator", [&] {
    std::mt19937_64 rng(seed + 10);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < kSamples; ++i) {
      const double x1 = u(rng), x2 = u(rng), a1 = u(rng), a2 = u(rng);
      const auto y = cga::extract(cga::apply(cga::translator(a1, a2), cga::embed(x1, x2)));
      if (std::abs(y.x1 - x1 - a1) > 1e-9 * (1 + std::abs(x1 + a1)) ||
          std::abs(y.x2 - x2 - a2) > 1e-9 * (1 + std::abs(x2 + a2)))
        return fmt::format("({}, {}) + ({}, {})", x1, x2, a1, a2);
    }
    return std::string{};
  });
  suite.check("cga2d.random_words", [&] {
    std::mt19937_64 rng(seed + 11);
    std::uniform_int_distribution<int> len(0, 12), letter(0, 2);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.2, 3.0);
    for (int i = 0; i < kSamples; ++i) {
      std::string w;
      for (int k = len(rng); k > 0; --k) w += "STt"[letter(rng)];
      const auto cmp = cga::compare_with_oracle(cga::ModularWord::parse(w), {re(rng), im(rng)},
                                                p.eps);
      if (cmp.max_deviation > 1e-6) return fmt::format("{} deviates by {}", w, cmp.max_deviation);
      if (cmp.versor_result.x2 <= 0) return fmt::format("{} left the upper half-plane", w);
    }
    return std::string{};
  });
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const Settings& settings) {
  std::vector<CheckResult> results;
  Suite suite(results);
  kernel_checks(suite, settings.seed, settings.precision);
  root_checks(suite);
  group_checks(suite);
  induction_checks(suite, settings.seed);
  mckay_checks(suite);
  cga_checks(suite, settings.seed, settings.precision);
  return results;
}

}  // namespace versorlab::cli

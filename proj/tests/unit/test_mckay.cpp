#include <doctest.h>

#include "support/checks.hpp"
#include "versorlab/catalog.hpp"
#include "versorlab/mckay.hpp"

using namespace versorlab;
using vltest::error_of;
using Dims = std::vector<int>;

TEST_CASE("irrep dimensions of the binary polyhedral groups") {
  const IrrepDims t = irrep_dimensions(generate_spin(catalog("A3")));
  CHECK(t.dims == Dims{1, 1, 1, 2, 2, 2, 3});
  CHECK(t.quotient_dims == Dims{1, 1, 1, 3});
  CHECK(t.spinorial_dims == Dims{2, 2, 2});
  CHECK(t.sum() == 12);
  CHECK(t.sum_of_squares() == 24);

  CHECK(irrep_dimensions(generate_spin(catalog("A1^3"))).dims == Dims{1, 1, 1, 1, 2});
  CHECK(irrep_dimensions(generate_spin(catalog("B3"))).dims == Dims{1, 1, 2, 2, 2, 3, 3, 4});
  const IrrepDims i = irrep_dimensions(generate_spin(catalog("H3")));
  CHECK(i.dims == Dims{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(i.quotient_dims == Dims{1, 3, 3, 4, 5});
  CHECK(i.sum_of_squares() == 120);
}

TEST_CASE("irreps of abelian groups") {
  // Spin(A2) is cyclic of order 6.
  const VersorGroup c = generate_spin(catalog("A2"));
  CHECK(c.order() == 6);
  CHECK(irrep_dimensions(c).dims == Dims{1, 1, 1, 1, 1, 1});

  const Signature sig{3, 0};
  const VersorGroup z2(GroupKind::kPin,
                       close_under_products({Versor::from_multivector(Multivector::basis_vector(sig, 0))}),
                       catalog("A1^3"));
  const IrrepDims d = irrep_dimensions(z2);
  CHECK(d.dims == Dims{1, 1});
  CHECK(d.spinorial_dims.empty());
}

TEST_CASE("abelianization orders") {
  CHECK(abelianization_order(generate_spin(catalog("A1^3"))) == 4);
  CHECK(abelianization_order(generate_spin(catalog("A3"))) == 3);
  CHECK(abelianization_order(generate_spin(catalog("B3"))) == 2);
  CHECK(abelianization_order(generate_spin(catalog("H3"))) == 1);
}

TEST_CASE("candidate search") {
  CHECK(irrep_dimension_candidates(24, 7, 3) == std::vector<Dims>{{1, 1, 1, 2, 2, 2, 3}});
  CHECK(irrep_dimension_candidates(8, 5, 4) == std::vector<Dims>{{1, 1, 1, 1, 2}});
  // Class and linear counts alone do not pin down the icosahedral case.
  CHECK(irrep_dimension_candidates(120, 9, 1).size() > 1);
  CHECK(irrep_dimension_candidates(10, 3, 3).empty());
  for (const auto& c : irrep_dimension_candidates(120, 9, 1)) {
    long s = 0;
    for (int d : c) s += d * d;
    CHECK(s == 120);
  }
}

TEST_CASE("McKay table rows agree") {
  const auto rows = mckay_table();
  REQUIRE(rows.size() == 4);
  const std::tuple<const char*, const char*, std::size_t, std::size_t> expected[] = {
      {"A1^3", "A1^4", 6, 8}, {"A3", "D4", 12, 24}, {"B3", "F4", 18, 48}, {"H3", "H4", 30, 120}};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& [three, four, n, order] = expected[k];
    CAPTURE(three);
    CHECK(rows[k].three_d == three);
    CHECK(rows[k].four_d == four);
    CHECK(rows[k].phi_count == n);
    CHECK(rows[k].sum_dims == static_cast<int>(n));
    CHECK(rows[k].coxeter_h == n);
    CHECK(rows[k].spin_order == order);
    CHECK(rows[k].induced_roots == order);
  }
  CHECK(rows[1].lie == "E6");
  CHECK(rows[2].lie == "E7");
  CHECK(rows[3].lie == "E8");
}

TEST_CASE("Coxeter number of E6 is 12") {
  CHECK(coxeter_number(catalog("E6")) == 12);
  CHECK(coxeter_number(catalog("D4")) == 6);
}

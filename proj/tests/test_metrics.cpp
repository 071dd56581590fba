#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "evosieve/errors.hpp"
#include "evosieve/genesis.hpp"
#include "evosieve/metrics.hpp"

using namespace evosieve;

namespace {

Basis bad2d() {
  return Basis::from_columns({LatticeVector::from_ints({95, 460}),
                              LatticeVector::from_ints({47, 215})});
}

Basis gaussian_diag() {
  // [[1+i, 0], [0, 2]] as columns; det = 2+2i, |det|^2 = 8
  return Basis::from_columns(
      {LatticeVector({RingScalar::gaussian(1, 1), RingScalar::gaussian(0, 0)}),
       LatticeVector(
           {RingScalar::gaussian(0, 0), RingScalar::gaussian(2, 0)})});
}

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

}  // namespace

TEST_CASE("gaussian heuristic, integral") {
  // d=2, det=1195: sigma = sqrt(2/(2 pi e)) * sqrt(1195)
  double expected = std::sqrt(2.0 / kTwoPiE) * std::sqrt(1195.0);
  CHECK(gaussian_heuristic(bad2d()) == doctest::Approx(expected).epsilon(1e-12));
  // convention flag is a no-op over the integers
  CHECK(gaussian_heuristic(bad2d(), DimConvention::RingDim) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("gaussian heuristic survives huge determinants") {
  std::vector<LatticeVector> cols;
  mpz_class big("1" + std::string(30, '0'));  // 10^30
  for (int j = 0; j < 5; ++j) {
    std::vector<RingScalar> e(5, RingScalar::integer(0));
    e[j] = RingScalar::integer(big);
    cols.push_back(LatticeVector(std::move(e)));
  }
  Basis b = Basis::from_columns(std::move(cols));
  // det = 10^150, sigma = sqrt(5/(2 pi e)) * 10^30
  double expected = std::sqrt(5.0 / kTwoPiE) * 1e30;
  CHECK(gaussian_heuristic(b) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("gaussian heuristic conventions over Z[i]") {
  Basis g = gaussian_diag();
  // RealDim: n = 4, det of the real lattice = |det|^2 = 8
  double real_expected = std::sqrt(4.0 / kTwoPiE) * std::pow(8.0, 0.25);
  CHECK(gaussian_heuristic(g, DimConvention::RealDim) ==
        doctest::Approx(real_expected).epsilon(1e-12));
  // RingDim: n = 2, |det| = sqrt(8)
  double ring_expected = std::sqrt(2.0 / kTwoPiE) * std::pow(8.0, 0.25);
  CHECK(gaussian_heuristic(g, DimConvention::RingDim) ==
        doctest::Approx(ring_expected).epsilon(1e-12));
  // RealDim convention agrees with the embedded integer lattice
  CHECK(gaussian_heuristic(g, DimConvention::RealDim) ==
        doctest::Approx(gaussian_heuristic(g.real_embedding())).epsilon(1e-12));
}

TEST_CASE("hadamard ratio") {
  Basis id = Basis::from_columns({LatticeVector::from_ints({1, 0}),
                                  LatticeVector::from_ints({0, 1})});
  CHECK(hadamard_ratio(id) == doctest::Approx(1.0));

  // (|det| / (||b1|| ||b2||))^(1/2) with |det| = 1195
  double expected =
      std::sqrt(1195.0 / (std::sqrt(220625.0) * std::sqrt(48434.0)));
  CHECK(hadamard_ratio(bad2d()) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(hadamard_ratio(bad2d()) == doctest::Approx(0.1075160).epsilon(1e-5));

  Basis good = Basis::from_columns({LatticeVector::from_ints({1, 30}),
                                    LatticeVector::from_ints({40, 5})});
  double good_expected =
      std::sqrt(1195.0 / (std::sqrt(901.0) * std::sqrt(1625.0)));
  CHECK(hadamard_ratio(good) == doctest::Approx(good_expected).epsilon(1e-12));
  CHECK(hadamard_ratio(good) > 0.99);

  // orthogonal gaussian basis sits at the top of the scale
  CHECK(hadamard_ratio(gaussian_diag()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("approx factor and fitness") {
  double sigma = gaussian_heuristic(bad2d());
  CHECK(approx_factor(mpz_class(1625), sigma) ==
        doctest::Approx(std::sqrt(1625.0) / sigma).epsilon(1e-12));
  CHECK_THROWS_AS(approx_factor(mpz_class(1), 0.0), std::domain_error);

  LatticeVector shorter = LatticeVector::from_ints({1, 30});
  LatticeVector longer = LatticeVector::from_ints({40, 5});
  CHECK(fitness(shorter) > fitness(longer));
  CHECK(fitness(shorter) == doctest::Approx(1.0 / std::sqrt(901.0)));
  CHECK_THROWS_AS(fitness(LatticeVector::zero(Ring::Integer, 2)),
                  std::domain_error);
}

TEST_CASE("membership over the integers") {
  Basis b = bad2d();
  auto coords = membership(b, LatticeVector::from_ints({40, 5}));
  REQUIRE(coords);
  CHECK((*coords)[0].re == -7);
  CHECK((*coords)[1].re == 15);

  CHECK_FALSE(membership(b, LatticeVector::from_ints({1, 1})));
  auto zero = membership(b, LatticeVector::zero(Ring::Integer, 2));
  REQUIRE(zero);
  CHECK((*zero)[0].re == 0);
  CHECK((*zero)[1].re == 0);

  CHECK_THROWS_AS(membership(b, LatticeVector::from_ints({1, 2, 3})),
                  DimensionMismatchError);
}

TEST_CASE("membership over the gaussian integers") {
  Basis g = gaussian_diag();
  // (3+i)(1+i) = 2+4i
  LatticeVector v(
      {RingScalar::gaussian(2, 4), RingScalar::gaussian(0, 0)});
  auto coords = membership(g, v);
  REQUIRE(coords);
  CHECK((*coords)[0] == RingScalar::gaussian(3, 1));
  CHECK((*coords)[1] == RingScalar::gaussian(0, 0));

  // 1 = (1+i) * (1-i)/2 is not a ring multiple
  LatticeVector w(
      {RingScalar::gaussian(1, 0), RingScalar::gaussian(0, 0)});
  CHECK_FALSE(membership(g, w));
}

TEST_CASE("solver reuse across queries") {
  GeneratorSpec spec;
  spec.dim = 6;
  spec.seed = 2;
  Basis b = random_integral_basis(spec);
  ExactSolver solver(b);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<RingScalar> c;
    for (int j = 0; j < 6; ++j)
      c.push_back(RingScalar::integer(
          static_cast<long>(rng.uniform_below(11)) - 5));
    LatticeVector expect = LatticeVector::zero(Ring::Integer, 6);
    for (int j = 0; j < 6; ++j)
      expect = sub_scaled(expect, -c[j], b.column(j));
    auto coords = solver.solve(expect);
    REQUIRE(coords);
    for (int j = 0; j < 6; ++j) CHECK((*coords)[j] == c[j]);
  }
}

TEST_CASE("quality report") {
  QualityReport q = quality_report(bad2d(), mpz_class(901));
  CHECK(q.sigma == doctest::Approx(gaussian_heuristic(bad2d())));
  CHECK(q.best_len == doctest::Approx(std::sqrt(901.0)));
  CHECK(q.alpha == doctest::Approx(q.best_len / q.sigma));
  CHECK(q.hadamard == doctest::Approx(hadamard_ratio(bad2d())));
}

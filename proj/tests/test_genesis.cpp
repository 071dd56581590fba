#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "evosieve/errors.hpp"
#include "evosieve/genesis.hpp"
#include "evosieve/metrics.hpp"

using namespace evosieve;

namespace {

KnapsackInstance demo_knapsack() {
  KnapsackInstance inst;
  inst.weights = {2, 5, 11, 23};
  inst.target = 13;
  return inst;
}

}  // namespace

TEST_CASE("knapsack basis has the subset-sum shape") {
  Basis b = knapsack_basis(demo_knapsack());
  REQUIRE(b.dim() == 5);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(b.column(j)[i].re == (i == j ? 2 : 0));
  }
  CHECK(b.column(0)[4].re == 2);
  CHECK(b.column(1)[4].re == 5);
  CHECK(b.column(2)[4].re == 11);
  CHECK(b.column(3)[4].re == 23);
  for (std::size_t i = 0; i < 4; ++i) CHECK(b.column(4)[i].re == 1);
  CHECK(b.column(4)[4].re == 13);
}

TEST_CASE("knapsack decode recovers the planted solution") {
  KnapsackInstance inst = demo_knapsack();
  Basis b = knapsack_basis(inst);
  // x = (1,0,1,0): 2 + 11 = 13; t = col0 + col2 - col4
  LatticeVector t = LatticeVector::from_ints({1, -1, 1, -1, 0});
  REQUIRE(membership(b, t));

  auto x = knapsack_decode(t, inst);
  REQUIRE(x);
  CHECK(*x == std::vector<int>{1, 0, 1, 0});
  auto xn = knapsack_decode(negate(t), inst);
  REQUIRE(xn);
  CHECK(*xn == std::vector<int>{1, 0, 1, 0});

  // non-candidates are rejected
  CHECK_FALSE(knapsack_decode(LatticeVector::from_ints({1, -1, 1, -1, 2}), inst));
  CHECK_FALSE(knapsack_decode(LatticeVector::from_ints({2, 0, 1, -1, 0}), inst));
  // right shape, wrong sum: (1,1,1,1,0) would need 2+5+11+23 == 13
  CHECK_FALSE(knapsack_decode(LatticeVector::from_ints({1, 1, 1, 1, 0}), inst));
}

TEST_CASE("knapsack validation") {
  KnapsackInstance inst;
  inst.weights = {2, 0, 5};
  inst.target = 7;
  CHECK_THROWS_AS(knapsack_basis(inst), ConfigError);
  inst.weights = {2, 5};
  inst.target = 8;  // > 7
  CHECK_THROWS_AS(knapsack_basis(inst), ConfigError);
  inst.target = 0;
  CHECK_THROWS_AS(knapsack_basis(inst), ConfigError);
  inst.weights.clear();
  inst.target = 1;
  CHECK_THROWS_AS(knapsack_basis(inst), ConfigError);
}

TEST_CASE("random integral generator") {
  GeneratorSpec spec;
  spec.dim = 8;
  spec.seed = 7;
  Basis a = random_integral_basis(spec);
  Basis b = random_integral_basis(spec);
  REQUIRE(a.dim() == 8);
  CHECK(a.ring() == Ring::Integer);
  for (std::size_t j = 0; j < 8; ++j) CHECK(a.column(j) == b.column(j));

  spec.seed = 8;
  Basis c = random_integral_basis(spec);
  bool differs = false;
  for (std::size_t j = 0; j < 8; ++j)
    if (!(a.column(j) == c.column(j))) differs = true;
  CHECK(differs);

  // default bound d^3
  mpz_class bound = 8 * 8 * 8;
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(a.column(j)[i].re <= bound);
      CHECK(a.column(j)[i].re >= -bound);
    }
}

TEST_CASE("random module generator") {
  GeneratorSpec spec;
  spec.dim = 6;
  spec.ring = Ring::Gaussian;
  spec.seed = 3;
  Basis a = random_module_basis(spec);
  REQUIRE(a.dim() == 6);
  CHECK(a.ring() == Ring::Gaussian);
  CHECK(a.det_abs_sq() > 0);
  Basis b = random_module_basis(spec);
  for (std::size_t j = 0; j < 6; ++j) CHECK(a.column(j) == b.column(j));

  // mixing leaves the raw columns: entries exceed the raw bound somewhere
  spec.mix_count = 0;
  Basis raw = random_module_basis(spec);
  mpz_class bound = 6 * 6 * 6;
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(raw.column(j)[i].re <= bound);
      CHECK(raw.column(j)[i].im <= bound);
    }
}

TEST_CASE("text format roundtrip") {
  std::string text = "[[95 460][47 215]]";
  Basis b = parse_basis_file(text, Ring::Integer);
  REQUIRE(b.dim() == 2);
  // each file row is one column
  CHECK(b.column(0)[0].re == 95);
  CHECK(b.column(0)[1].re == 460);
  CHECK(b.column(1)[0].re == 47);
  CHECK(b.column(1)[1].re == 215);
  CHECK(write_basis_file(b) == "[[95 460][47 215]]\n");

  Basis again = parse_basis_file(write_basis_file(b), Ring::Integer);
  for (std::size_t j = 0; j < 2; ++j) CHECK(b.column(j) == again.column(j));
}

TEST_CASE("gaussian text formats") {
  Basis b = parse_basis_file("[[1+i 2-i][0+0i 3+0i]]", Ring::Gaussian);
  CHECK(b.column(0)[0] == RingScalar::gaussian(1, 1));
  CHECK(b.column(0)[1] == RingScalar::gaussian(2, -1));
  CHECK(b.column(1)[1] == RingScalar::gaussian(3, 0));

  // "a b" pair form parses to the same matrix
  Basis pairs = parse_basis_file("[[1 1 2 -1][0 0 3 0]]", Ring::Gaussian);
  for (std::size_t j = 0; j < 2; ++j) CHECK(b.column(j) == pairs.column(j));

  // canonical writer round-trips
  Basis again = parse_basis_file(write_basis_file(b), Ring::Gaussian);
  for (std::size_t j = 0; j < 2; ++j) CHECK(b.column(j) == again.column(j));
  CHECK(write_basis_file(b) == "[[1+1i 2-1i][0+0i 3+0i]]\n");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_basis_file("[[1 2][3]]", Ring::Integer), ParseError);
  CHECK_THROWS_AS(parse_basis_file("[[1]]x", Ring::Integer), ParseError);
  CHECK_THROWS_AS(parse_basis_file("[]", Ring::Integer), ParseError);
  CHECK_THROWS_AS(parse_basis_file("", Ring::Integer), ParseError);
  CHECK_THROWS_AS(parse_basis_file("[[1 2]", Ring::Integer), ParseError);
  CHECK_THROWS_AS(parse_basis_file("[[--3]]", Ring::Integer), ParseError);
  CHECK_THROWS_AS(parse_basis_file("[[1 2 3][4 5 6]]", Ring::Gaussian),
                  ParseError);  // odd pair count
  CHECK_THROWS_AS(parse_basis_file("[[1 2][2 4]]", Ring::Integer),
                  SingularBasisError);
}

TEST_CASE("json format") {
  Basis b = parse_basis_file("[[95 460][47 215]]", Ring::Integer);
  std::string j = write_basis_json(b);
  Basis back = parse_basis_json(j);
  CHECK(back.ring() == Ring::Integer);
  for (std::size_t c = 0; c < 2; ++c) CHECK(b.column(c) == back.column(c));

  // numeric entries are accepted too
  Basis num = parse_basis_json(
      R"({"ring":"int","dim":2,"columns":[[95,460],[47,215]]})");
  for (std::size_t c = 0; c < 2; ++c) CHECK(b.column(c) == num.column(c));

  // huge entries survive as strings
  std::string big(60, '9');
  Basis huge = parse_basis_json(R"({"ring":"int","dim":2,"columns":[[")" + big +
                                R"(","0"],["0","1"]]})");
  CHECK(huge.column(0)[0].re == mpz_class(big));

  Basis g = parse_basis_file("[[1+i 2-i][0+0i 3+0i]]", Ring::Gaussian);
  Basis gback = parse_basis_json(write_basis_json(g));
  CHECK(gback.ring() == Ring::Gaussian);
  for (std::size_t c = 0; c < 2; ++c) CHECK(g.column(c) == gback.column(c));

  CHECK_THROWS_AS(parse_basis_json("{"), ParseError);
  CHECK_THROWS_AS(parse_basis_json(R"({"ring":"byzantine","dim":1,"columns":[["1"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_basis_json(R"({"ring":"int","dim":3,"columns":[["1"]]})"),
                  ParseError);
}

TEST_CASE("load sniffs json vs text") {
  Basis t = load_basis_text(" [[2 0][0 3]]", Ring::Integer);
  CHECK(t.dim() == 2);
  Basis j = load_basis_text(R"( {"ring":"int","dim":1,"columns":[["4"]]})",
                            Ring::Integer);
  CHECK(j.column(0)[0].re == 4);
}

TEST_CASE("scalar token parsing") {
  CHECK(parse_scalar_token("-12", Ring::Integer).re == -12);
  CHECK(parse_scalar_token("3-4i", Ring::Gaussian) ==
        RingScalar::gaussian(3, -4));
  CHECK(parse_scalar_token("7", Ring::Gaussian) == RingScalar::gaussian(7, 0));
  CHECK(parse_scalar_token("1+i", Ring::Gaussian) ==
        RingScalar::gaussian(1, 1));
  CHECK_THROWS_AS(parse_scalar_token("3i+4", Ring::Gaussian), ParseError);
  CHECK_THROWS_AS(parse_scalar_token("1+2i", Ring::Integer), ParseError);
}

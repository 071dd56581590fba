#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "evosieve/errors.hpp"
#include "evosieve/genesis.hpp"
#include "evosieve/metrics.hpp"
#include "evosieve/reduction.hpp"

#include "oracles.hpp"

using namespace evosieve;

namespace {

Basis bad2d() {
  return Basis::from_columns({LatticeVector::from_ints({95, 460}),
                              LatticeVector::from_ints({47, 215})});
}

// both bases generate the same lattice: mutual exact membership
bool same_lattice(const Basis& a, const Basis& b) {
  if (a.det_abs_sq() != b.det_abs_sq()) return false;
  ExactSolver sa(a), sb(b);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (!sb.solve(a.column(j))) return false;
    if (!sa.solve(b.column(j))) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> to_i64(const Basis& b) {
  std::vector<std::vector<std::int64_t>> cols(b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < b.dim(); ++i)
      cols[j].push_back(b.column(j)[i].re.get_si());
  return cols;
}

}  // namespace

TEST_CASE("gauss 2d reduction finds the good basis") {
  auto [u, v] = gauss_reduce_2d(LatticeVector::from_ints({95, 460}),
                                LatticeVector::from_ints({47, 215}));
  CHECK(u.norm_sq() == 901);
  CHECK(v.norm_sq() == 1625);

  // degenerate pair
  CHECK_THROWS_AS(gauss_reduce_2d(LatticeVector::from_ints({2, 4}),
                                  LatticeVector::from_ints({1, 2})),
                  DegenerateBasisError);
}

TEST_CASE("gauss 2d on gaussian-integer vectors") {
  LatticeVector a({RingScalar::gaussian(5, 3), RingScalar::gaussian(2, -1)});
  LatticeVector b({RingScalar::gaussian(17, 8), RingScalar::gaussian(5, -5)});
  auto [u, v] = gauss_reduce_2d(a, b);
  CHECK(u.norm_sq() <= v.norm_sq());
  // mu of the pair is reduced: |Re|, |Im| <= 1/2
  ProjectionCoefficient mu;
  {
    RingScalar s = inner_product(u, v);
    mu.re = mpq_class(s.re) / mpq_class(u.norm_sq());
    mu.im = mpq_class(s.im) / mpq_class(u.norm_sq());
  }
  CHECK(abs(mu.re) <= mpq_class(1, 2));
  CHECK(abs(mu.im) <= mpq_class(1, 2));
}

TEST_CASE("lll reduces the 2d walkthrough basis") {
  Basis out = lll(bad2d(), {});
  std::vector<mpz_class> norms{out.column(0).norm_sq(),
                               out.column(1).norm_sq()};
  if (norms[0] > norms[1]) std::swap(norms[0], norms[1]);
  CHECK(norms[0] == 901);
  CHECK(norms[1] == 1625);
  CHECK(same_lattice(bad2d(), out));
}

TEST_CASE("lll leaves the identity alone") {
  Basis id = Basis::from_columns({LatticeVector::from_ints({1, 0, 0}),
                                  LatticeVector::from_ints({0, 1, 0}),
                                  LatticeVector::from_ints({0, 0, 1})});
  Basis out = lll(id, {});
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(out.column(j).norm_sq() == 1);
}

TEST_CASE("lll parameter validation") {
  LLLParams p;
  p.delta = mpq_class(1);
  CHECK_THROWS_AS(lll(bad2d(), p), ConfigError);
  p.delta = mpq_class(0);
  CHECK_THROWS_AS(lll(bad2d(), p), ConfigError);
}

TEST_CASE("lll sweep cap raises") {
  GeneratorSpec spec;
  spec.dim = 10;
  spec.seed = 3;
  Basis b = random_integral_basis(spec);
  LLLParams p;
  p.max_sweeps = 1;
  CHECK_THROWS_AS(lll(b, p), ReductionBudgetError);
}

TEST_CASE("lll postconditions on random bases, both engines") {
  const mpq_class deltas[2] = {mpq_class(3, 4), mpq_class(99, 100)};
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorSpec spec;
    spec.dim = 2 + seed % 9;  // 2..10
    spec.seed = seed;
    spec.entry_bound = 1000;
    Basis b = random_integral_basis(spec);
    for (const mpq_class& delta : deltas) {
      for (auto engine : {LLLParams::Engine::Float, LLLParams::Engine::Exact}) {
        if (engine == LLLParams::Engine::Exact && spec.dim > 7) continue;
        LLLParams p;
        p.delta = delta;
        p.engine = engine;
        Basis out = lll(b, p);
        LLLAudit audit = check_lll_postconditions(out, delta);
        INFO("seed ", seed, " dim ", spec.dim, " detail: ", audit.detail);
        CHECK(audit.pass());
        CHECK(out.det_abs_sq() == b.det_abs_sq());
        ++checked;
      }
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("lll first vector against the brute-force oracle") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GeneratorSpec spec;
    spec.dim = 2 + seed % 3;  // 2..4
    spec.seed = seed * 17;
    spec.entry_bound = spec.dim == 4 ? 25 : 60;
    Basis b = random_integral_basis(spec);
    LLLParams p;
    p.delta = mpq_class(99, 100);
    Basis out = lll(b, p);
    mpz_class best = out.column(0).norm_sq();
    for (std::size_t j = 1; j < out.dim(); ++j)
      if (out.column(j).norm_sq() < best) best = out.column(j).norm_sq();

    std::int64_t l1 = oracle::lambda1_sq(to_i64(b), spec.dim == 4 ? 25 : 60);
    REQUIRE(l1 > 0);
    // ||b_1||^2 <= 2^(d-1) * lambda_1^2
    CHECK(best <= mpz_class(l1) * (1 << (spec.dim - 1)));
  }
}

TEST_CASE("lll handles hnf-style unbalanced inputs") {
  GeneratorSpec spec;
  spec.dim = 12;
  spec.seed = 5;
  spec.entry_bound = 1000000;
  Basis b = random_integral_basis(spec);
  Basis h = hnf(b);
  Basis out = lll(h, {});
  LLLAudit audit = check_lll_postconditions(out, mpq_class(3, 4));
  INFO(audit.detail);
  CHECK(audit.pass());
  CHECK(same_lattice(b, out));
}

TEST_CASE("lll over gaussian bases reduces the real embedding") {
  GeneratorSpec spec;
  spec.dim = 3;
  spec.ring = Ring::Gaussian;
  spec.seed = 11;
  spec.entry_bound = 50;
  Basis g = random_module_basis(spec);
  Basis out = lll(g, {});
  CHECK(out.ring() == Ring::Integer);
  CHECK(out.dim() == 6);
  CHECK(same_lattice(g.real_embedding(), out));
  LLLAudit audit = check_lll_postconditions(out, mpq_class(3, 4));
  INFO(audit.detail);
  CHECK(audit.pass());
}

TEST_CASE("audit rejects an unreduced basis") {
  LLLAudit audit = check_lll_postconditions(bad2d(), mpq_class(3, 4));
  CHECK_FALSE(audit.pass());
  CHECK_FALSE(audit.detail.empty());
}

TEST_CASE("gram-schmidt data of the good basis") {
  Basis good = Basis::from_columns({LatticeVector::from_ints({1, 30}),
                                    LatticeVector::from_ints({40, 5})});
  GramSchmidtData gs = gram_schmidt(good);
  CHECK(gs.norms_sq[0].get_d() == doctest::Approx(901.0));
  // mu_{1,0} = 190/901
  CHECK(gs.mu[1][0].get_d() == doctest::Approx(190.0 / 901.0).epsilon(1e-12));
  // prod ||b*_k||^2 = det^2
  mpf_class prod = gs.norms_sq[0] * gs.norms_sq[1];
  CHECK(prod.get_d() == doctest::Approx(1195.0 * 1195.0).epsilon(1e-10));
  // b*_1 orthogonal to b_0
  mpf_class dot = gs.ortho[1][0] * 1 + gs.ortho[1][1] * 30;
  CHECK(dot.get_d() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("hnf canonical form") {
  Basis b = Basis::from_columns({LatticeVector::from_ints({4, 1}),
                                 LatticeVector::from_ints({2, 3})});
  Basis h = hnf(b);
  CHECK(h.column(0)[0].re == 2);
  CHECK(h.column(0)[1].re == 3);
  CHECK(h.column(1)[0].re == 0);
  CHECK(h.column(1)[1].re == 5);
  CHECK(same_lattice(b, h));
}

TEST_CASE("hnf structure and unimodular invariance") {
  for (std::uint64_t seed = 2; seed <= 10; ++seed) {
    GeneratorSpec spec;
    spec.dim = 5;
    spec.seed = seed;
    spec.entry_bound = 40;
    Basis b = random_integral_basis(spec);
    Basis h = hnf(b);
    CHECK(h.det_abs_sq() == b.det_abs_sq());
    mpz_class diag_prod(1);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      CHECK(h.column(i)[i].re > 0);
      diag_prod *= h.column(i)[i].re;
      for (std::size_t j = i + 1; j < h.dim(); ++j)
        CHECK(h.column(j)[i].re == 0);  // upper part is zero
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(h.column(j)[i].re >= 0);
        CHECK(h.column(j)[i].re < h.column(i)[i].re);
      }
    }
    CHECK(diag_prod * diag_prod == h.det_abs_sq());

    // column-op transformed copy has the identical HNF
    std::vector<LatticeVector> cols(b.columns());
    cols[1] = sub_scaled(cols[1], RingScalar::integer(-3), cols[0]);
    cols[3] = sub_scaled(cols[3], RingScalar::integer(7), cols[2]);
    std::swap(cols[0], cols[4]);
    cols[2] = negate(cols[2]);
    Basis t = Basis::with_known_det(cols, b.det_abs_sq());
    Basis h2 = hnf(t);
    for (std::size_t j = 0; j < h.dim(); ++j)
      CHECK(h.column(j) == h2.column(j));
  }
}

TEST_CASE("hnf rejects non-integral rings") {
  Basis g = Basis::from_columns({LatticeVector(
      std::vector<RingScalar>{RingScalar::gaussian(1, 1)})});
  CHECK_THROWS_AS(hnf(g), RingMismatchError);
}

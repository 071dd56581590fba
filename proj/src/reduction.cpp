#include "evosieve/reduction.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace evosieve {

namespace {

using Cols = std::vector<std::vector<mpz_class>>;  // cols[j][i]: col j, row i

Cols to_cols(const Basis& b) {
  Cols cols(b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    cols[j].resize(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) cols[j][i] = b.column(j)[i].re;
  }
  return cols;
}

Basis from_cols(const Cols& cols, const mpz_class& det_abs_sq) {
  std::vector<LatticeVector> vecs;
  vecs.reserve(cols.size());
  for (const std::vector<mpz_class>& c : cols) {
    std::vector<RingScalar> e;
    e.reserve(c.size());
    for (const mpz_class& x : c) e.push_back(RingScalar::integer(x));
    vecs.push_back(LatticeVector(std::move(e)));
  }
  return Basis::with_known_det(std::move(vecs), det_abs_sq);
}

unsigned long pick_precision(const Cols& cols) {
  std::size_t max_bits = 1;
  for (const std::vector<mpz_class>& c : cols)
    for (const mpz_class& x : c)
      max_bits = std::max(max_bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  unsigned long prec =
      static_cast<unsigned long>(max_bits + 2 * cols.size() + 96);
  if (prec < 192) prec = 192;
  return ((prec + 63) / 64) * 64;
}

mpz_class round_mpf_half_away(const mpf_class& x) {
  mpf_class t(0, x.get_prec());
  if (sgn(x) >= 0) {
    t = x + 0.5;
    mpf_floor(t.get_mpf_t(), t.get_mpf_t());
  } else {
    t = x - 0.5;
    mpf_ceil(t.get_mpf_t(), t.get_mpf_t());
  }
  mpz_class r;
  mpz_set_f(r.get_mpz_t(), t.get_mpf_t());
  return r;
}

// ---- floating GSO + incremental LLL ----

struct FloatGso {
  unsigned long prec = 0;
  std::vector<std::vector<mpf_class>> mu;  // mu[k][j], j < k
  std::vector<mpf_class> r;                // ||b*_k||^2
};

// Modified Gram-Schmidt over mpf at fixed precision; also returns b* when
// requested by gram_schmidt().
void full_gso(const Cols& cols, FloatGso& g,
              std::vector<std::vector<mpf_class>>* ortho_out) {
  const std::size_t d = cols.size();
  g.mu.assign(d, {});
  g.r.assign(d, mpf_class(0, g.prec));
  std::vector<std::vector<mpf_class>> ortho(d);
  mpf_class acc(0, g.prec), t(0, g.prec);
  for (std::size_t k = 0; k < d; ++k) {
    ortho[k].assign(d, mpf_class(0, g.prec));
    for (std::size_t i = 0; i < d; ++i)
      mpf_set_z(ortho[k][i].get_mpf_t(), cols[k][i].get_mpz_t());
    g.mu[k].assign(k, mpf_class(0, g.prec));
    for (std::size_t j = 0; j < k; ++j) {
      acc = 0;
      for (std::size_t i = 0; i < d; ++i) {
        t = ortho[k][i] * ortho[j][i];
        acc += t;
      }
      g.mu[k][j] = acc / g.r[j];
      for (std::size_t i = 0; i < d; ++i) {
        t = g.mu[k][j] * ortho[j][i];
        ortho[k][i] -= t;
      }
    }
    acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      t = ortho[k][i] * ortho[k][i];
      acc += t;
    }
    g.r[k] = acc;
    if (sgn(g.r[k]) <= 0)
      throw DegenerateBasisError("Gram-Schmidt norm collapsed to zero");
  }
  if (ortho_out) *ortho_out = std::move(ortho);
}

// One floating LLL run at fixed precision. Returns false when the
// end-of-run self audit disagrees with a fresh recompute (caller escalates).
bool lll_float_once(Cols& cols, const mpq_class& delta, long budget,
                    unsigned long prec, double tau) {
  const std::size_t d = cols.size();
  FloatGso g;
  g.prec = prec;
  full_gso(cols, g, nullptr);

  mpf_class delta_f(0, prec);
  mpf_set_q(delta_f.get_mpf_t(), delta.get_mpq_t());
  mpf_class half(0.5, prec);
  mpf_class c_f(0, prec), t(0, prec), lhs(0, prec), rhs(0, prec);

  long iters = 0;
  std::size_t k = 1;
  while (k < d) {
    if (++iters > budget)
      throw ReductionBudgetError("LLL exceeded its sweep budget");
    // Size-reduce row k to a fixpoint. Exact arithmetic needs one downward
    // pass; with floats and very large entries one rounded subtraction may
    // leave |mu| above 1/2, so repeat until stable.
    for (int pass = 0; pass < 256; ++pass) {
      bool changed = false;
      for (std::size_t j = k; j-- > 0;) {
        if (cmp(abs(g.mu[k][j]), half) <= 0) continue;
        mpz_class c = round_mpf_half_away(g.mu[k][j]);
        if (sgn(c) == 0) continue;
        for (std::size_t i = 0; i < d; ++i) cols[k][i] -= c * cols[j][i];
        mpf_set_z(c_f.get_mpf_t(), c.get_mpz_t());
        for (std::size_t j2 = 0; j2 < j; ++j2) {
          t = c_f * g.mu[j][j2];
          g.mu[k][j2] -= t;
        }
        g.mu[k][j] -= c_f;
        changed = true;
      }
      if (!changed) break;
    }
    // Lovasz: r_k >= (delta - mu_{k,k-1}^2) r_{k-1}
    t = g.mu[k][k - 1] * g.mu[k][k - 1];
    rhs = delta_f - t;
    rhs *= g.r[k - 1];
    lhs = g.r[k];
    if (cmp(lhs, rhs) >= 0) {
      ++k;
      continue;
    }
    std::swap(cols[k - 1], cols[k]);
    // standard mu/r update for swapping columns k-1 and k
    mpf_class nu(g.mu[k][k - 1]);
    mpf_class rnew(0, prec);
    t = nu * nu;
    rnew = t * g.r[k - 1];
    rnew += g.r[k];
    mpf_class mu_new(0, prec);
    mu_new = nu * g.r[k - 1];
    mu_new /= rnew;
    t = g.r[k - 1] * g.r[k];
    g.r[k] = t / rnew;
    g.r[k - 1] = rnew;
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(g.mu[k - 1][j], g.mu[k][j]);
    g.mu[k][k - 1] = mu_new;
    for (std::size_t i = k + 1; i < d; ++i) {
      mpf_class ti(g.mu[i][k]);
      t = nu * ti;
      g.mu[i][k] = g.mu[i][k - 1] - t;
      t = mu_new * g.mu[i][k];
      g.mu[i][k - 1] = ti + t;
    }
    k = (k >= 2) ? k - 1 : 1;
  }

  // Self audit: fresh GSO must agree with the incrementally maintained state
  // and satisfy the postconditions with slack tau.
  FloatGso fresh;
  fresh.prec = prec;
  full_gso(cols, fresh, nullptr);
  mpf_class tol(tau, prec), reltol(0, prec), diff(0, prec);
  mpf_class half_plus(0, prec);
  half_plus = half + tol;
  for (std::size_t kk = 0; kk < d; ++kk) {
    diff = g.r[kk] - fresh.r[kk];
    reltol = tol * fresh.r[kk];
    if (cmp(abs(diff), abs(reltol)) > 0) return false;
    for (std::size_t j = 0; j < kk; ++j) {
      diff = g.mu[kk][j] - fresh.mu[kk][j];
      if (cmp(abs(diff), tol) > 0) return false;
      if (cmp(abs(fresh.mu[kk][j]), half_plus) > 0) return false;
    }
    if (kk > 0) {
      t = fresh.mu[kk][kk - 1] * fresh.mu[kk][kk - 1];
      rhs = delta_f - t;
      rhs *= fresh.r[kk - 1];
      reltol = tol * fresh.r[kk - 1];
      lhs = fresh.r[kk] + reltol;
      if (cmp(lhs, rhs) < 0) return false;
    }
  }
  return true;
}

// ---- exact-rational reference engine (literal recompute) ----

struct ExactGso {
  std::vector<std::vector<mpq_class>> mu;
  std::vector<mpq_class> r;
};

ExactGso exact_gso(const Cols& cols) {
  const std::size_t d = cols.size();
  ExactGso g;
  g.mu.assign(d, {});
  g.r.assign(d, mpq_class(0));
  std::vector<std::vector<mpq_class>> ortho(d);
  for (std::size_t k = 0; k < d; ++k) {
    ortho[k].assign(d, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) ortho[k][i] = mpq_class(cols[k][i]);
    g.mu[k].assign(k, mpq_class(0));
    for (std::size_t j = 0; j < k; ++j) {
      mpq_class num(0);
      for (std::size_t i = 0; i < d; ++i) num += ortho[k][i] * ortho[j][i];
      g.mu[k][j] = num / g.r[j];
      for (std::size_t i = 0; i < d; ++i)
        ortho[k][i] -= g.mu[k][j] * ortho[j][i];
    }
    mpq_class nrm(0);
    for (std::size_t i = 0; i < d; ++i) nrm += ortho[k][i] * ortho[k][i];
    g.r[k] = nrm;
    if (sgn(g.r[k]) == 0)
      throw DegenerateBasisError("exact Gram-Schmidt met a dependent column");
  }
  return g;
}

void lll_exact(Cols& cols, const mpq_class& delta, long budget) {
  const std::size_t d = cols.size();
  ExactGso g = exact_gso(cols);
  long iters = 0;
  std::size_t k = 1;
  mpq_class half(1, 2);
  while (k < d) {
    if (++iters > budget)
      throw ReductionBudgetError("LLL exceeded its sweep budget");
    for (std::size_t j = k; j-- > 0;) {
      if (cmp(abs(g.mu[k][j]), half) <= 0) continue;
      mpz_class c = round_half_away(g.mu[k][j]);
      for (std::size_t i = 0; i < d; ++i) cols[k][i] -= c * cols[j][i];
      g = exact_gso(cols);  // literal recompute after every update
    }
    mpq_class rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.r[k - 1];
    if (g.r[k] >= rhs) {
      ++k;
      continue;
    }
    std::swap(cols[k - 1], cols[k]);
    g = exact_gso(cols);
    k = (k >= 2) ? k - 1 : 1;
  }
}

}  // namespace

GramSchmidtData gram_schmidt(const Basis& b) {
  if (b.ring() != Ring::Integer)
    throw RingMismatchError(
        "gram_schmidt expects an Integer basis; use real_embedding first");
  Cols cols = to_cols(b);
  GramSchmidtData out;
  out.precision_bits = pick_precision(cols);
  FloatGso g;
  g.prec = out.precision_bits;
  full_gso(cols, g, &out.ortho);
  out.mu = std::move(g.mu);
  out.norms_sq = std::move(g.r);
  return out;
}

std::pair<LatticeVector, LatticeVector> gauss_reduce_2d(LatticeVector b1,
                                                        LatticeVector b2) {
  if (b1.ring() != b2.ring() || b1.dim() != b2.dim())
    throw DimensionMismatchError("gauss_reduce_2d: mismatched inputs");
  if (b1.is_zero() || b2.is_zero())
    throw DegenerateBasisError("gauss_reduce_2d: zero input vector");
  if (norm_less(b2, b1)) std::swap(b1, b2);
  while (true) {
    RingScalar s = inner_product(b1, b2);
    const mpz_class& n1 = b1.norm_sq();
    RingScalar k = RingScalar::zero(b1.ring());
    k.re = round_ratio_half_away(s.re, n1);
    if (b1.ring() == Ring::Gaussian) k.im = round_ratio_half_away(s.im, n1);
    if (!k.is_zero()) {
      b2 = sub_scaled(b2, k, b1);
      if (b2.is_zero())
        throw DegenerateBasisError("gauss_reduce_2d: dependent input vectors");
    }
    if (b2.norm_sq() >= b1.norm_sq()) break;
    std::swap(b1, b2);
  }
  return {std::move(b1), std::move(b2)};
}

Basis lll(const Basis& b, const LLLParams& params) {
  if (sgn(params.delta) <= 0 || params.delta >= 1)
    throw ConfigError("LLL delta must lie in (0, 1)");
  const Basis work = (b.ring() == Ring::Gaussian) ? b.real_embedding() : b;
  const std::size_t d = work.dim();
  if (d == 1) return work;
  long budget = params.max_sweeps > 0
                    ? params.max_sweeps
                    : static_cast<long>(64 * d * d);

  Cols cols = to_cols(work);
  bool use_exact = params.engine == LLLParams::Engine::Exact ||
                   (params.engine == LLLParams::Engine::Auto && d <= 8);
  if (!use_exact) {
    unsigned long prec = pick_precision(cols);
    bool ok = false;
    for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
      Cols trial = cols;
      if (lll_float_once(trial, params.delta, budget, prec, kSizeTolerance)) {
        cols = std::move(trial);
        ok = true;
      } else {
        prec *= 2;  // audit disagreed; retry with more headroom
      }
    }
    if (!ok) use_exact = true;  // exact fallback, unconditionally correct
  }
  if (use_exact) lll_exact(cols, params.delta, budget);
  return from_cols(cols, work.det_abs_sq());
}

}  // namespace evosieve

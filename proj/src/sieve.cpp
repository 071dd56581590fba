#include "evosieve/sieve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace evosieve {

namespace {

constexpr int kInitResampleLimit = 32;
constexpr int kFallbackComboLimit = 1024;
constexpr std::size_t kPairBlock = 4096;  // pairs evaluated per parallel batch

// RNG substream domains (first substream label):
//   3: initial-population column draws   (second label: attempt<<32 | slot)
//   4: per-pair mutation draws           (second label: generation<<40 | pair ordinal)
//   5: init fallback combinations        (second label: slot)
constexpr std::uint64_t kDomInit = 3;
constexpr std::uint64_t kDomPair = 4;
constexpr std::uint64_t kDomFallback = 5;

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

ProjectionCoefficient projection_mu(const LatticeVector& u,
                                    const LatticeVector& v) {
  if (u.is_zero())
    throw DegenerateBasisError("projection against the zero vector");
  RingScalar s = inner_product(u, v);
  ProjectionCoefficient mu;
  mu.re = mpq_class(s.re, u.norm_sq());
  mu.re.canonicalize();
  if (u.ring() == Ring::Gaussian) {
    mu.im = mpq_class(s.im, u.norm_sq());
    mu.im.canonicalize();
  }
  return mu;
}

LatticeVector crossover(const LatticeVector& u, const LatticeVector& v) {
  ProjectionCoefficient mu = projection_mu(u, v);
  return sub_scaled(v, round_nearest(mu, u.ring()), u);
}

LatticeVector mutated_crossover(const LatticeVector& u, const LatticeVector& v,
                                double xi) {
  ProjectionCoefficient mu = projection_mu(u, v);
  mpq_class xq(xi);  // exact dyadic value of the double
  mu.re *= xq;
  mu.im *= xq;
  return sub_scaled(v, round_nearest(mu, u.ring()), u);
}

// ---- Population ----

Population Population::from_vectors(std::vector<LatticeVector> vecs) {
  std::sort(vecs.begin(), vecs.end(), norm_less);
  Population p;
  for (LatticeVector& v : vecs) {
    if (v.is_zero()) continue;
    std::string key = v.canonical_key();
    if (p.keys_.insert(std::move(key)).second) p.sorted_.push_back(std::move(v));
  }
  return p;
}

bool Population::insert(LatticeVector v) {
  if (v.is_zero()) return false;
  std::string key = v.canonical_key();
  if (keys_.count(key)) return false;
  auto it = std::upper_bound(sorted_.begin(), sorted_.end(), v, norm_less);
  sorted_.insert(it, std::move(v));
  keys_.insert(std::move(key));
  return true;
}

double Population::mean_norm() const {
  double sum = 0;
  for (const LatticeVector& v : sorted_) sum += v.norm();
  return sorted_.empty() ? 0.0 : sum / static_cast<double>(sorted_.size());
}

Population elite_select(std::vector<LatticeVector> pool, std::size_t n) {
  std::sort(pool.begin(), pool.end(), norm_less);
  if (pool.size() > n) pool.resize(n);
  return Population::from_vectors(std::move(pool));
}

// ---- init ----

namespace {

void validate_config(const SieveConfig& cfg) {
  if (cfg.pop_size < 2) throw ConfigError("pop_size must be at least 2");
  if (!(cfg.rho > 0.0) || cfg.rho > 1.0)
    throw ConfigError("rho must lie in (0, 1]");
  if (cfg.mutation_prob < 0.0 || cfg.mutation_prob >= 1.0)
    throw ConfigError("mutation_prob must lie in [0, 1)");
  if (cfg.budget_exponent < 1.0)
    throw ConfigError("budget_exponent must be >= 1");
  if (cfg.max_generations == 0)
    throw ConfigError("max_generations must be positive");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (cfg.stop.kind == StopRule::Kind::TargetNorm && !(cfg.stop.target_norm > 0))
    throw ConfigError("target norm must be positive");
  if (cfg.stop.kind == StopRule::Kind::Plateau &&
      (!(cfg.stop.plateau_epsilon > 0) || cfg.stop.plateau_streak < 1))
    throw ConfigError("plateau rule needs positive epsilon and streak");
}

LatticeVector combine(const Basis& b, const std::vector<RingScalar>& coeff) {
  std::vector<RingScalar> e(b.dim(), RingScalar::zero(b.ring()));
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (coeff[j].is_zero()) continue;
    for (std::size_t i = 0; i < b.dim(); ++i)
      e[i] = e[i] + coeff[j] * b.column(j)[i];
  }
  return LatticeVector(std::move(e));
}

// Fallback when Bernoulli sampling keeps hitting zeros/duplicates: single
// basis columns first, then small random {0,1} combinations of them.
void fill_fallback(const Basis& b, Population& p, const Rng& root,
                   std::size_t slot) {
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const LatticeVector& c = b.column(j);
    if (!p.contains(c)) {
      p.insert(c);
      return;
    }
  }
  Rng rng = root.substream(kDomFallback, slot);
  for (int trial = 0; trial < kFallbackComboLimit; ++trial) {
    std::size_t weight = 2 + static_cast<std::size_t>(trial / 256);
    if (weight > b.dim()) weight = b.dim();
    std::vector<std::size_t> idx;
    int guard = 0;
    while (idx.size() < weight && guard++ < 128) {
      std::size_t pick = static_cast<std::size_t>(rng.uniform_below(b.dim()));
      if (std::find(idx.begin(), idx.end(), pick) == idx.end())
        idx.push_back(pick);
    }
    if (idx.size() < weight) continue;
    std::vector<RingScalar> coeff(b.dim(), RingScalar::zero(b.ring()));
    for (std::size_t j : idx) coeff[j] = RingScalar::one(b.ring());
    LatticeVector v = combine(b, coeff);
    if (!v.is_zero() && !p.contains(v)) {
      p.insert(std::move(v));
      return;
    }
  }
  throw GenerationError("could not fill the initial population with distinct vectors");
}

}  // namespace

Population init_population(const Basis& b, const SieveConfig& cfg) {
  validate_config(cfg);
  if (cfg.include_basis_columns && cfg.pop_size < b.dim())
    throw ConfigError("pop_size below basis dimension with include_basis_columns");
  Rng root(cfg.seed);
  Population p;
  if (cfg.include_basis_columns)
    for (std::size_t j = 0; j < b.dim(); ++j) p.insert(b.column(j));

  const std::size_t to_sample = cfg.pop_size - p.size();
  for (std::size_t slot = 0; slot < to_sample; ++slot) {
    bool placed = false;
    for (int attempt = 0; attempt < kInitResampleLimit && !placed; ++attempt) {
      Rng rng = root.substream(
          kDomInit, (static_cast<std::uint64_t>(attempt) << 32) | slot);
      std::vector<RingScalar> coeff;
      coeff.reserve(b.dim());
      for (std::size_t j = 0; j < b.dim(); ++j) {
        if (b.ring() == Ring::Integer) {
          coeff.push_back(RingScalar::integer(rng.bernoulli(cfg.rho) ? 1 : 0));
        } else {
          mpz_class re(rng.bernoulli(cfg.rho) ? 1 : 0);
          mpz_class im(rng.bernoulli(cfg.rho) ? 1 : 0);
          coeff.push_back(RingScalar::gaussian(std::move(re), std::move(im)));
        }
      }
      LatticeVector v = combine(b, coeff);
      if (!v.is_zero() && !p.contains(v)) {
        p.insert(std::move(v));
        placed = true;
      }
    }
    if (!placed) fill_fallback(b, p, root, slot);
  }
  return p;
}

// ---- pair evaluation (serial reference + OpenMP-parallel blocks) ----

namespace {

struct PairJob {
  std::size_t ordinal = 0;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct Candidate {
  bool viable = false;
  LatticeVector t;
  std::string key;
};

double draw_xi(const Rng& root, std::size_t gen, std::size_t ordinal,
               double mutation_prob) {
  if (mutation_prob <= 0.0) return 1.0;
  Rng r = root.substream(kDomPair,
                         (static_cast<std::uint64_t>(gen) << 40) | ordinal);
  if (!r.bernoulli(mutation_prob)) return 1.0;
  return r.normal(1.0, 1.0);
}

// Offspring of one pair, rejecting children that are not strictly shorter
// than a parent before the vector is even built.
Candidate eval_pair(const LatticeVector& u, const LatticeVector& v, double xi,
                    bool naive) {
  Candidate c;
  const mpz_class& nu = u.norm_sq();
  const mpz_class& nv = v.norm_sq();
  RingScalar s = inner_product(u, v);
  RingScalar k = RingScalar::zero(u.ring());
  if (naive) {
    k = RingScalar::one(u.ring());  // naive sieve: t = v - u
  } else if (xi == 1.0) {
    k.re = round_ratio_half_away(s.re, nu);
    if (u.ring() == Ring::Gaussian) k.im = round_ratio_half_away(s.im, nu);
  } else {
    mpq_class xq(xi);
    mpz_class den = nu * xq.get_den();
    k.re = round_ratio_half_away(s.re * xq.get_num(), den);
    if (u.ring() == Ring::Gaussian)
      k.im = round_ratio_half_away(s.im * xq.get_num(), den);
  }
  mpz_class tn = sub_scaled_norm_sq(nv, nu, s, k);
  if (tn >= nu && tn >= nv) return c;  // not shorter than either parent
  c.t = sub_scaled(v, k, u);
  if (c.t.is_zero()) return c;
  c.key = c.t.canonical_key();
  c.viable = true;
  return c;
}

void evaluate_block(const std::vector<PairJob>& jobs, const Population& p,
                    std::vector<Candidate>& out, const Rng& root,
                    std::size_t gen, double mutation_prob, bool naive,
                    int threads) {
  out.assign(jobs.size(), Candidate{});
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads)
#endif
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    const PairJob& job = jobs[idx];
    if (job.i == job.j) continue;  // naive diagonal: zero child
    double xi = draw_xi(root, gen, job.ordinal, mutation_prob);
    out[idx] = eval_pair(p[job.i], p[job.j], xi, naive);
  }
#ifndef _OPENMP
  (void)threads;
#endif
}

struct ScanResult {
  std::vector<LatticeVector> accepted;
  std::size_t attempted = 0;
};

// Runs one generation's pair scan. Pairs are processed in a fixed canonical
// order (Alg.-4 order for the genetic engine, row-major ordered pairs for the
// naive one); acceptance, dedup and the budget cutoff are applied on that
// order during a serial merge, so threaded runs replay the serial history
// exactly and speculative evaluations past the cutoff are discarded.
ScanResult scan_pairs(const Population& p, std::size_t gen,
                      const SieveConfig& cfg, const Rng& root,
                      std::size_t budget, bool naive) {
  ScanResult res;
  const std::size_t np = p.size();
  std::unordered_set<std::string> rkeys;
  if (np < 2) return res;

  // cursor over the pair sequence
  std::size_t a = 0;
  std::size_t b2 = naive ? 0 : 1;
  bool exhausted = false;
  std::size_t ordinal = 0;
  auto advance = [&]() {
    if (++b2 == np) {
      ++a;
      b2 = naive ? 0 : a + 1;
      if (naive ? a >= np : a + 1 >= np) exhausted = true;
    }
  };

  if (cfg.threads <= 1) {
    // serial reference path
    while (!exhausted) {
      PairJob job{ordinal, a, b2};
      ++ordinal;
      advance();
      ++res.attempted;
      if (job.i == job.j) continue;
      double xi = draw_xi(root, gen, job.ordinal, cfg.mutation_prob);
      Candidate c = eval_pair(p[job.i], p[job.j], xi, naive);
      if (!c.viable || p.contains_key(c.key) || rkeys.count(c.key)) continue;
      rkeys.insert(std::move(c.key));
      res.accepted.push_back(std::move(c.t));
      if (res.accepted.size() >= budget) break;
    }
    return res;
  }

  std::vector<PairJob> jobs;
  std::vector<Candidate> cands;
  bool stop = false;
  while (!exhausted && !stop) {
    jobs.clear();
    while (jobs.size() < kPairBlock && !exhausted) {
      jobs.push_back(PairJob{ordinal++, a, b2});
      advance();
    }
    evaluate_block(jobs, p, cands, root, gen, cfg.mutation_prob, naive,
                   cfg.threads);
    for (std::size_t idx = 0; idx < jobs.size() && !stop; ++idx) {
      ++res.attempted;
      Candidate& c = cands[idx];
      if (!c.viable || p.contains_key(c.key) || rkeys.count(c.key)) continue;
      rkeys.insert(std::move(c.key));
      res.accepted.push_back(std::move(c.t));
      if (res.accepted.size() >= budget) stop = true;
    }
  }
  return res;
}

Population merge_elite(Population p, std::vector<LatticeVector> r,
                       std::size_t n) {
  std::vector<LatticeVector> pool;
  pool.reserve(p.size() + r.size());
  for (const LatticeVector& v : p.members()) pool.push_back(v);
  for (LatticeVector& v : r) pool.push_back(std::move(v));
  return elite_select(std::move(pool), n);
}

}  // namespace

// ---- engines ----

SieveResult naive_sieve(Population p0, int threads, std::size_t max_iterations,
                        std::size_t pool_capacity) {
  if (p0.size() < 2)
    throw ConfigError("naive sieve needs at least two distinct vectors");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  const std::size_t n_keep = pool_capacity ? pool_capacity : 2 * p0.size();
  SieveConfig scan_cfg;  // only threads matter for the scan
  scan_cfg.pop_size = n_keep;
  scan_cfg.threads = threads;
  scan_cfg.mutation_prob = 0.0;
  Rng root(0);  // the naive engine draws no randomness

  SieveResult res;
  Population p = std::move(p0);
  const std::size_t no_budget = static_cast<std::size_t>(-1);
  for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
    auto t0 = std::chrono::steady_clock::now();
    ScanResult scan = scan_pairs(p, iter, scan_cfg, root, no_budget, true);
    const std::size_t accepted = scan.accepted.size();
    if (accepted > 0) p = merge_elite(std::move(p), std::move(scan.accepted), n_keep);
    GenerationReport rep;
    rep.generation = iter;
    rep.best_norm_sq = p.best().norm_sq();
    rep.best_norm = p.best().norm();
    rep.mean_norm = p.mean_norm();
    rep.accepted_children = accepted;
    rep.crossovers_attempted = scan.attempted;
    rep.elapsed_ms = elapsed_ms_since(t0);
    res.history.push_back(rep);
    if (accepted == 0) {
      res.converged = true;
      break;
    }
  }
  res.best = p.best();
  res.final_population = std::move(p);
  return res;
}

SieveResult genetic_sieve_from(const Basis&, const SieveConfig& cfg,
                               Population p0) {
  validate_config(cfg);
  if (p0.size() < 2)
    throw ConfigError("genetic sieve needs at least two distinct vectors");
  const std::size_t n = cfg.pop_size;
  const std::size_t budget = static_cast<std::size_t>(
      std::ceil(std::pow(static_cast<double>(n), cfg.budget_exponent)));
  Rng root(cfg.seed);

  SieveResult res;
  Population p = std::move(p0);
  std::vector<LatticeVector> r;
  double prev_mean = 0.0;
  int streak = 0;
  for (std::size_t g = 1; g <= cfg.max_generations; ++g) {
    auto t0 = std::chrono::steady_clock::now();
    p = merge_elite(std::move(p), std::move(r), n);
    r.clear();

    GenerationReport rep;
    rep.generation = g;
    rep.best_norm_sq = p.best().norm_sq();
    rep.best_norm = p.best().norm();
    rep.mean_norm = p.mean_norm();

    bool stop = false;
    if (cfg.stop.kind == StopRule::Kind::TargetNorm) {
      stop = rep.best_norm <= cfg.stop.target_norm;
    } else if (g > 1) {
      if (std::abs(rep.mean_norm - prev_mean) < cfg.stop.plateau_epsilon)
        ++streak;
      else
        streak = 0;
      stop = streak >= cfg.stop.plateau_streak;
    }
    prev_mean = rep.mean_norm;
    if (stop) {
      // the next generation's children would be discarded anyway; skip them
      rep.elapsed_ms = elapsed_ms_since(t0);
      res.history.push_back(rep);
      res.converged = true;
      break;
    }

    ScanResult scan = scan_pairs(p, g, cfg, root, budget, false);
    r = std::move(scan.accepted);
    rep.accepted_children = r.size();
    rep.crossovers_attempted = scan.attempted;
    rep.elapsed_ms = elapsed_ms_since(t0);
    res.history.push_back(rep);
  }
  if (!r.empty()) p = merge_elite(std::move(p), std::move(r), n);
  res.best = p.best();
  res.final_population = std::move(p);
  return res;
}

SieveResult genetic_sieve(const Basis& b, const SieveConfig& cfg) {
  return genetic_sieve_from(b, cfg, init_population(b, cfg));
}

}  // namespace evosieve

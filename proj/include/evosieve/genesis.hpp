#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evosieve/basis.hpp"
#include "evosieve/rng.hpp"

namespace evosieve {

struct KnapsackInstance {
  std::vector<mpz_class> weights;  // m_1 ... m_n, positive
  mpz_class target;                // S, with S <= sum of weights
};

struct GeneratorSpec {
  std::size_t dim = 0;
  Ring ring = Ring::Integer;
  std::uint64_t seed = 1;
  mpz_class entry_bound = 0;  // 0: default dim^3
  long mix_count = -1;        // module ring: -1 means default floor(dim/4)
};

// Entries i.i.d. uniform on [-entry_bound, entry_bound]; the whole matrix is
// resampled when singular (at most 16 attempts). Deterministic given seed.
Basis random_integral_basis(const GeneratorSpec& spec);

// Gaussian-integer entries with independent uniform real and imaginary
// parts; afterwards each column receives mix_count additions of columns
// sampled (with replacement) from the other columns of the pre-mixing
// snapshot.
Basis random_module_basis(const GeneratorSpec& spec);

// (n+1) x (n+1) subset-sum lattice: 2I in the top-left block, a final column
// of ones over S, and bottom row (m_1 ... m_n, S).
Basis knapsack_basis(const KnapsackInstance& inst);

// Decode a candidate solution vector: t (or -t) must have its first n
// entries in {-1, +1} and last entry 0; returns x with x_k = 1 where the
// sign-normalized entry is positive, verified against M x = S.
std::optional<std::vector<int>> knapsack_decode(const LatticeVector& t,
                                                const KnapsackInstance& inst);

// One entry in the chosen ring: "-12", or for Gaussian also "3-4i" / "7"
// (imaginary part 0). Used by the basis parser and the CLI's --vector flag.
RingScalar parse_scalar_token(const std::string& tok, Ring ring);

// Bracketed text format: "[[95 460][47 215]]"; each file row becomes one
// basis column. Gaussian entries accepted as "a+bi"/"a-bi" tokens or as
// plain "a b" pairs.
Basis parse_basis_file(const std::string& text, Ring ring);

// Canonical single-line serialization; round-trips through parse_basis_file.
// Gaussian entries are written "a+bi" with explicit sign.
std::string write_basis_file(const Basis& b);

// JSON alternative: {"ring": "int"|"gaussian", "dim": d, "columns": [...]}
// with integer entries as decimal strings (JSON numbers also accepted on
// input) and Gaussian entries as [re, im] pairs.
Basis parse_basis_json(const std::string& text);
std::string write_basis_json(const Basis& b);

// Sniff text vs JSON by the first non-space byte ('{' selects JSON).
Basis load_basis_text(const std::string& text, Ring ring);

}  // namespace evosieve

#pragma once

#include <stdexcept>

namespace evosieve {

struct RingMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix handed to Basis (or HNF/LLL) has determinant zero.
struct SingularBasisError : std::domain_error {
  using std::domain_error::domain_error;
};

// Linearly dependent / zero input where independence is a precondition.
struct DegenerateBasisError : std::domain_error {
  using std::domain_error::domain_error;
};

// Reduction exceeded its sweep budget without converging.
struct ReductionBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Random generation could not produce a valid object within its retry budget.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace evosieve

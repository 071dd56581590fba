#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evosieve/sieve.hpp"

namespace evosieve {

// Fixed-point formatting shared by every reporter so replays are byte-identical.
std::string format_double(double v);

// CSV history: header line plus one row per generation.  When with_timing is
// false the elapsed_ms column is written as 0.000000 so two runs of the same
// seed compare equal regardless of wall clock.
std::string format_history_csv(const std::vector<GenerationReport>& history,
                               bool with_timing);

// Same content as JSON Lines, one object per generation.  best_norm_sq is a
// decimal string: it outgrows 2^53 long before the doubles do.
std::string format_history_jsonl(const std::vector<GenerationReport>& history,
                                 bool with_timing);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace evosieve

#include "evosieve/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace evosieve {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string format_history_csv(const std::vector<GenerationReport>& history,
                               bool with_timing) {
  std::string out =
      "generation,best_norm_sq,best_norm,mean_norm,accepted_children,"
      "crossovers_attempted,elapsed_ms\n";
  for (const GenerationReport& g : history) {
    out += std::to_string(g.generation);
    out += ',';
    out += g.best_norm_sq.get_str();
    out += ',';
    out += format_double(g.best_norm);
    out += ',';
    out += format_double(g.mean_norm);
    out += ',';
    out += std::to_string(g.accepted_children);
    out += ',';
    out += std::to_string(g.crossovers_attempted);
    out += ',';
    out += format_double(with_timing ? g.elapsed_ms : 0.0);
    out += '\n';
  }
  return out;
}

std::string format_history_jsonl(const std::vector<GenerationReport>& history,
                                 bool with_timing) {
  std::string out;
  for (const GenerationReport& g : history) {
    nlohmann::ordered_json rec;
    rec["generation"] = g.generation;
    rec["best_norm_sq"] = g.best_norm_sq.get_str();
    rec["best_norm"] = format_double(g.best_norm);
    rec["mean_norm"] = format_double(g.mean_norm);
    rec["accepted_children"] = g.accepted_children;
    rec["crossovers_attempted"] = g.crossovers_attempted;
    rec["elapsed_ms"] = format_double(with_timing ? g.elapsed_ms : 0.0);
    out += rec.dump();
    out += '\n';
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace evosieve

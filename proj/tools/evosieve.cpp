// evosieve: generate / reduce / sieve / verify / bench for integral and
// Gaussian-integer module lattices.
//
// Exit codes: 0 ok, 2 usage, 3 generation failure, 4 parse failure,
// 5 reduction failure, 6 nonconvergence.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evosieve/errors.hpp"
#include "evosieve/genesis.hpp"
#include "evosieve/metrics.hpp"
#include "evosieve/reduction.hpp"
#include "evosieve/report.hpp"
#include "evosieve/sieve.hpp"

using namespace evosieve;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---- small helpers ----

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << data;
}

std::string digest_hex(const std::string& bytes) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

Ring parse_ring(const std::string& name) {
  if (name == "int" || name == "integer") return Ring::Integer;
  if (name == "gaussian") return Ring::Gaussian;
  throw ConfigError("unknown ring '" + name + "' (use int or gaussian)");
}

// flag values are usage errors when malformed, not input-parse errors
mpz_class flag_int(const std::string& tok, const char* what) {
  try {
    return parse_scalar_token(tok, Ring::Integer).re;
  } catch (const ParseError&) {
    throw ConfigError(std::string(what) + ": malformed integer '" + tok + "'");
  }
}

mpq_class flag_rational(const std::string& tok, const char* what) {
  try {
    return parse_decimal_rational(tok);
  } catch (const ParseError&) {
    throw ConfigError(std::string(what) + ": malformed number '" + tok + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("EVOSIEVE_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0')
    throw ConfigError("EVOSIEVE_SEED must be an unsigned integer");
  return v;
}

struct Loaded {
  Basis basis;
  std::string path;
  std::string digest;
};

Loaded load_basis(const std::string& path, Ring ring) {
  std::string text = read_file(path);
  std::string dig = digest_hex(text);
  try {
    return {load_basis_text(text, ring), path, dig};
  } catch (const SingularBasisError& e) {
    // a singular file is bad input, not a reduction failure
    throw ParseError(path + ": " + e.what());
  }
}

mpz_class shortest_column_norm_sq(const Basis& b) {
  mpz_class best = b.column(0).norm_sq();
  for (std::size_t j = 1; j < b.dim(); ++j)
    if (b.column(j).norm_sq() < best) best = b.column(j).norm_sq();
  return best;
}

// ---- run manifest ----

struct Manifest {
  std::string command;
  std::vector<std::string> argv;  // resolved: replaying these reproduces the run
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  bool timing = true;
};

void emit_manifest(const std::string& path, const Manifest& m) {
  if (path.empty()) return;
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["version"] = kVersion;
  j["command"] = m.command;
  j["argv"] = m.argv;
  if (m.has_seed) j["seed"] = m.seed;
  auto files = nlohmann::ordered_json::array();
  for (const auto& [p, d] : m.inputs)
    files.push_back({{"path", p}, {"digest", d}});
  j["inputs"] = files;
  if (m.timing) {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    j["timestamp"] = buf;
  }
  write_file(path, j.dump(2) + "\n");
}

// ---- quality printing ----

void print_quality(std::ostream& os, const Basis& b, const char* heading) {
  mpz_class best = shortest_column_norm_sq(b);
  QualityReport q = quality_report(b, best, DimConvention::RealDim);
  os << heading << ":\n";
  os << "  dim: " << b.dim() << "  ring: " << ring_name(b.ring()) << "\n";
  os << "  hadamard: " << format_double(q.hadamard) << "\n";
  os << "  sigma: " << format_double(q.sigma) << "\n";
  if (b.ring() == Ring::Gaussian) {
    QualityReport qr = quality_report(b, best, DimConvention::RingDim);
    os << "  sigma_ring: " << format_double(qr.sigma) << "\n";
  }
  os << "  shortest_column_norm_sq: " << best.get_str() << "\n";
  os << "  shortest_column_norm: " << format_double(q.best_len) << "\n";
  os << "  alpha: " << format_double(q.alpha) << "\n";
}

// ---- generate ----

struct GenerateOpts {
  std::string ring = "int";
  std::size_t dim = 0;
  std::uint64_t seed = 1;
  std::string entry_bound = "0";
  long mix_count = -1;
  std::string knapsack;  // comma-separated weights
  std::string target;
  bool preprocess = false;
  std::string delta = "0.9999999";
  std::string out;
  bool json = false;
  std::string manifest;
  bool no_timing = false;
};

int cmd_generate(const GenerateOpts& o) {
  Basis b = [&] {
    if (!o.knapsack.empty()) {
      if (o.target.empty())
        throw ConfigError("--knapsack requires --target");
      KnapsackInstance inst;
      for (const std::string& w : split(o.knapsack, ','))
        inst.weights.push_back(flag_int(w, "--knapsack"));
      inst.target = flag_int(o.target, "--target");
      return knapsack_basis(inst);
    }
    if (o.dim == 0) throw ConfigError("--dim is required (or --knapsack)");
    GeneratorSpec spec;
    spec.dim = o.dim;
    spec.ring = parse_ring(o.ring);
    spec.seed = o.seed;
    spec.entry_bound = flag_int(o.entry_bound, "--entry-bound");
    spec.mix_count = o.mix_count;
    return spec.ring == Ring::Integer ? random_integral_basis(spec)
                                      : random_module_basis(spec);
  }();

  if (o.preprocess) {
    LLLParams params;
    params.delta = flag_rational(o.delta, "--delta");
    if (b.ring() == Ring::Integer) b = hnf(b);
    b = lll(b, params);  // a Gaussian basis comes back as its real embedding
  }

  const bool as_json =
      o.json || (o.out.size() > 5 && o.out.substr(o.out.size() - 5) == ".json");
  std::string text = as_json ? write_basis_json(b) : write_basis_file(b);
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
  // the report goes wherever the basis doesn't
  print_quality(o.out.empty() ? std::cerr : std::cout, b, "generated basis");

  Manifest m;
  m.command = "generate";
  m.timing = !o.no_timing;
  if (o.knapsack.empty()) {
    m.seed = o.seed;
    m.has_seed = true;
    m.argv = {"generate", "--ring", o.ring, "--dim", std::to_string(o.dim),
              "--seed", std::to_string(o.seed), "--entry-bound", o.entry_bound,
              "--mix-count", std::to_string(o.mix_count)};
  } else {
    m.argv = {"generate", "--knapsack", o.knapsack, "--target", o.target};
  }
  if (o.preprocess) {
    m.argv.push_back("--preprocess");
    m.argv.push_back("--delta");
    m.argv.push_back(o.delta);
  }
  if (o.json) m.argv.push_back("--json");
  if (!o.out.empty()) {
    m.argv.push_back("-o");
    m.argv.push_back(o.out);
  }
  emit_manifest(o.manifest, m);
  return 0;
}

// ---- reduce ----

struct ReduceOpts {
  std::string in;
  std::string ring = "int";
  std::string delta = "0.75";
  bool hnf_only = false;
  bool hnf_first = false;
  std::string engine = "auto";
  long max_sweeps = 0;
  std::string out;
  bool json = false;
  std::string manifest;
  bool no_timing = false;
};

int cmd_reduce(const ReduceOpts& o) {
  Loaded in = load_basis(o.in, parse_ring(o.ring));
  print_quality(std::cout, in.basis, "input");

  Basis b = in.basis;
  if (o.hnf_only) {
    b = hnf(b);
  } else {
    if (o.hnf_first) b = hnf(b);
    LLLParams params;
    params.delta = flag_rational(o.delta, "--delta");
    params.max_sweeps = o.max_sweeps;
    if (o.engine == "exact")
      params.engine = LLLParams::Engine::Exact;
    else if (o.engine == "float")
      params.engine = LLLParams::Engine::Float;
    else if (o.engine != "auto")
      throw ConfigError("--engine must be auto, exact or float");
    b = lll(b, params);
  }
  print_quality(std::cout, b, "output");

  const bool as_json =
      o.json || (o.out.size() > 5 && o.out.substr(o.out.size() - 5) == ".json");
  std::string text = as_json ? write_basis_json(b) : write_basis_file(b);
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);

  Manifest m;
  m.command = "reduce";
  m.timing = !o.no_timing;
  m.inputs.emplace_back(in.path, in.digest);
  m.argv = {"reduce", "--in", o.in, "--ring", o.ring, "--engine", o.engine};
  if (o.hnf_only) {
    m.argv.push_back("--hnf-only");
  } else {
    if (o.hnf_first) m.argv.push_back("--hnf");
    m.argv.push_back("--delta");
    m.argv.push_back(o.delta);
    if (o.max_sweeps) {
      m.argv.push_back("--max-sweeps");
      m.argv.push_back(std::to_string(o.max_sweeps));
    }
  }
  if (!o.out.empty()) {
    m.argv.push_back("-o");
    m.argv.push_back(o.out);
  }
  emit_manifest(o.manifest, m);
  return 0;
}

// ---- sieve ----

struct SieveOpts {
  std::string in;
  std::string ring = "int";
  bool demo2d = false;
  bool naive = false;
  bool preprocess = false;
  std::string delta = "0.9999999";
  std::size_t pop = 0;  // 0: 20 * dim
  double rho = 0.01;
  double mutation = 0.0;
  double budget_exponent = 1.5;
  std::uint64_t seed = 1;
  std::size_t max_generations = 64;
  double target_norm = 0.0;  // >0 switches the stop rule
  double plateau_eps = 1.0;
  int plateau_streak = 3;
  int threads = 1;
  bool no_basis_columns = false;
  std::string format = "csv";
  bool no_timing = false;
  std::string out;
  std::string sigma_convention = "real";
  std::string decode_knapsack;
  std::string manifest;
};

KnapsackInstance parse_knapsack_spec(const std::string& s) {
  std::size_t colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size())
    throw ConfigError("--decode-knapsack expects w1,w2,...:S");
  KnapsackInstance inst;
  for (const std::string& w : split(s.substr(0, colon), ','))
    inst.weights.push_back(flag_int(w, "--decode-knapsack"));
  inst.target = flag_int(s.substr(colon + 1), "--decode-knapsack");
  return inst;
}

Basis demo2d_basis() {
  return Basis::from_columns({LatticeVector::from_ints({95, 460}),
                              LatticeVector::from_ints({47, 215})});
}

Population demo2d_population() {
  return Population::from_vectors({LatticeVector::from_ints({46, 185}),
                                   LatticeVector::from_ints({94, 430}),
                                   LatticeVector::from_ints({97, 520}),
                                   LatticeVector::from_ints({475, 2300})});
}

int cmd_sieve(const SieveOpts& o) {
  if (o.demo2d != o.in.empty())
    throw ConfigError("pass exactly one of --in and --demo2d");
  DimConvention conv = o.sigma_convention == "ring" ? DimConvention::RingDim
                       : o.sigma_convention == "real"
                           ? DimConvention::RealDim
                           : throw ConfigError(
                                 "--sigma-convention must be real or ring");

  std::optional<Loaded> in;
  Basis b = [&] {
    if (o.demo2d) return demo2d_basis();
    in = load_basis(o.in, parse_ring(o.ring));
    return in->basis;
  }();
  if (o.preprocess) {
    LLLParams params;
    params.delta = flag_rational(o.delta, "--delta");
    if (b.ring() == Ring::Integer) b = hnf(b);
    b = lll(b, params);
  }

  SieveConfig cfg;
  cfg.pop_size = o.pop != 0 ? o.pop : 20 * b.dim();
  cfg.rho = o.rho;
  cfg.mutation_prob = o.mutation;
  cfg.budget_exponent = o.budget_exponent;
  cfg.seed = o.seed;
  cfg.include_basis_columns = !o.no_basis_columns;
  cfg.max_generations = o.max_generations;
  cfg.threads = o.threads;
  if (o.target_norm > 0.0) {
    cfg.stop.kind = StopRule::Kind::TargetNorm;
    cfg.stop.target_norm = o.target_norm;
  } else {
    cfg.stop.plateau_epsilon = o.plateau_eps;
    cfg.stop.plateau_streak = o.plateau_streak;
  }

  SieveResult res;
  if (o.demo2d) {
    Population p0 = demo2d_population();
    cfg.pop_size = p0.size();
    res = o.naive ? naive_sieve(std::move(p0), o.threads, o.max_generations)
                  : genetic_sieve_from(b, cfg, std::move(p0));
  } else if (o.naive) {
    res = naive_sieve(init_population(b, cfg), o.threads, o.max_generations);
  } else {
    res = genetic_sieve(b, cfg);
  }

  const bool timing = !o.no_timing;
  std::string body;
  if (o.format == "csv")
    body = format_history_csv(res.history, timing);
  else if (o.format == "jsonl")
    body = format_history_jsonl(res.history, timing);
  else
    throw ConfigError("--format must be csv or jsonl");

  // final summary in Table-1 column structure
  const double sigma = gaussian_heuristic(b, conv);
  const double ell = res.best.norm();
  const double alpha = approx_factor(res.best.norm_sq(), sigma);
  double wall = 0.0;
  for (const GenerationReport& g : res.history) wall += g.elapsed_ms;
  if (o.format == "csv") {
    body += "# summary d=" + std::to_string(b.dim()) +
            " ring=" + ring_name(b.ring()) +
            " n=" + std::to_string(cfg.pop_size) +
            " rho=" + format_double(cfg.rho) +
            " sigma=" + format_double(sigma) + " best_norm=" +
            format_double(ell) + " best_norm_sq=" + res.best.norm_sq().get_str() +
            " alpha=" + format_double(alpha) +
            " g=" + std::to_string(res.history.size()) +
            " converged=" + (res.converged ? "1" : "0");
    if (timing) body += " wall_ms=" + format_double(wall);
    body += "\n";
  } else {
    nlohmann::ordered_json s;
    s["summary"] = {{"d", b.dim()},
                    {"ring", ring_name(b.ring())},
                    {"n", cfg.pop_size},
                    {"rho", format_double(cfg.rho)},
                    {"sigma", format_double(sigma)},
                    {"best_norm", format_double(ell)},
                    {"best_norm_sq", res.best.norm_sq().get_str()},
                    {"alpha", format_double(alpha)},
                    {"g", res.history.size()},
                    {"converged", res.converged}};
    if (timing) s["summary"]["wall_ms"] = format_double(wall);
    body += s.dump();
    body += '\n';
  }

  if (o.out.empty())
    std::cout << body;
  else
    write_file(o.out, body);

  int rc = res.converged ? 0 : 6;
  if (!o.decode_knapsack.empty()) {
    KnapsackInstance inst = parse_knapsack_spec(o.decode_knapsack);
    std::optional<std::vector<int>> x;
    for (const LatticeVector& v : res.final_population.members()) {
      x = knapsack_decode(v, inst);
      if (x) break;
    }
    if (!x) {
      std::cerr << "no population vector decodes the knapsack instance\n";
      return 6;
    }
    std::cout << "x=(";
    for (std::size_t i = 0; i < x->size(); ++i)
      std::cout << (i ? "," : "") << (*x)[i];
    std::cout << ")\n";
  }

  Manifest m;
  m.command = "sieve";
  m.timing = timing;
  m.seed = o.seed;
  m.has_seed = true;
  if (in) m.inputs.emplace_back(in->path, in->digest);
  m.argv = {"sieve"};
  if (o.demo2d) {
    m.argv.push_back("--demo2d");
  } else {
    m.argv.insert(m.argv.end(), {"--in", o.in, "--ring", o.ring});
  }
  if (o.naive) m.argv.push_back("--naive");
  if (o.preprocess)
    m.argv.insert(m.argv.end(), {"--preprocess", "--delta", o.delta});
  m.argv.insert(
      m.argv.end(),
      {"--pop", std::to_string(cfg.pop_size), "--rho", format_double(cfg.rho),
       "--mutation", format_double(cfg.mutation_prob), "--budget-exponent",
       format_double(cfg.budget_exponent), "--seed", std::to_string(o.seed),
       "--max-generations", std::to_string(o.max_generations)});
  if (o.target_norm > 0.0) {
    m.argv.insert(m.argv.end(), {"--target-norm", format_double(o.target_norm)});
  } else {
    m.argv.insert(m.argv.end(),
                  {"--plateau-eps", format_double(o.plateau_eps),
                   "--plateau-streak", std::to_string(o.plateau_streak)});
  }
  m.argv.insert(m.argv.end(), {"--threads", std::to_string(o.threads),
                               "--format", o.format, "--sigma-convention",
                               o.sigma_convention});
  if (o.no_basis_columns) m.argv.push_back("--no-basis-columns");
  if (o.no_timing) m.argv.push_back("--no-timing");
  if (!o.decode_knapsack.empty())
    m.argv.insert(m.argv.end(), {"--decode-knapsack", o.decode_knapsack});
  if (!o.out.empty()) m.argv.insert(m.argv.end(), {"-o", o.out});
  emit_manifest(o.manifest, m);
  return rc;
}

// ---- verify ----

struct VerifyOpts {
  std::string in;
  std::string ring = "int";
  std::string vector_csv;
  bool reduced = false;
  std::string delta = "0.75";
  std::string sigma_convention = "real";
};

int cmd_verify(const VerifyOpts& o) {
  if (o.vector_csv.empty() && !o.reduced)
    throw ConfigError("verify needs --vector and/or --reduced");
  Loaded in = load_basis(o.in, parse_ring(o.ring));
  const Basis& b = in.basis;
  bool ok = true;

  if (!o.vector_csv.empty()) {
    std::vector<RingScalar> entries;
    for (const std::string& tok : split(o.vector_csv, ','))
      entries.push_back(parse_scalar_token(tok, b.ring()));
    if (entries.size() != b.dim())
      throw ConfigError("--vector has " + std::to_string(entries.size()) +
                        " entries, basis dimension is " +
                        std::to_string(b.dim()));
    LatticeVector v(std::move(entries));
    std::optional<std::vector<RingScalar>> coords = membership(b, v);
    if (coords) {
      std::cout << "membership: PASS\n";
      std::cout << "coordinates: (";
      for (std::size_t i = 0; i < coords->size(); ++i)
        std::cout << (i ? " " : "") << (*coords)[i].str();
      std::cout << ")\n";
    } else {
      std::cout << "membership: FAIL (not a lattice vector)\n";
      ok = false;
    }
    DimConvention conv = o.sigma_convention == "ring" ? DimConvention::RingDim
                                                      : DimConvention::RealDim;
    double sigma = gaussian_heuristic(b, conv);
    std::cout << "norm_sq: " << v.norm_sq().get_str() << "\n";
    std::cout << "norm: " << format_double(v.norm()) << "\n";
    std::cout << "sigma: " << format_double(sigma) << "\n";
    std::cout << "alpha: " << format_double(approx_factor(v.norm_sq(), sigma))
              << "\n";
  }

  if (o.reduced) {
    LLLAudit audit =
        check_lll_postconditions(b, flag_rational(o.delta, "--delta"));
    std::cout << "size_reduced: " << (audit.size_reduced ? "PASS" : "FAIL")
              << "\n";
    std::cout << "lovasz: " << (audit.lovasz ? "PASS" : "FAIL") << "\n";
    if (!audit.pass()) {
      std::cout << "detail: " << audit.detail << "\n";
      ok = false;
    }
  }
  std::cout << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return ok ? 0 : 1;
}

// ---- bench ----

struct BenchOpts {
  std::string config;
  std::string baseline_csv;
  std::string out;
  int threads = 1;
  bool no_timing = false;
  std::string sigma_convention = "real";
  std::string manifest;
};

struct BenchRow {
  std::size_t dim = 0;
  Ring ring = Ring::Integer;
  std::size_t n = 0;
  double rho = 0.01;
  double mutation = 0.0;
  std::uint64_t seed = 1;
  std::size_t max_generations = 25;
};

std::vector<BenchRow> parse_bench_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bench config: ") + e.what());
  }
  nlohmann::json rows = j.is_array() ? j : j.value("rows", nlohmann::json());
  if (!rows.is_array() || rows.empty())
    throw ConfigError("bench config has no rows");
  std::vector<BenchRow> out;
  for (const nlohmann::json& r : rows) {
    if (!r.is_object() || !r.contains("dim"))
      throw ParseError("bench config row needs at least {\"dim\": ...}");
    BenchRow row;
    row.dim = r["dim"].get<std::size_t>();
    row.ring = parse_ring(r.value("ring", std::string("int")));
    row.n = r.value("n", std::size_t{0});
    if (row.n == 0) row.n = 20 * row.dim;
    row.rho = r.value("rho", 0.01);
    row.mutation = r.value("mutation", 0.0);
    row.seed = r.value("seed", std::uint64_t{1});
    row.max_generations = r.value("max_generations", std::size_t{25});
    out.push_back(row);
  }
  return out;
}

std::map<std::string, std::string> parse_baseline_csv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("d,", 0) == 0) continue;
    std::vector<std::string> f = split(line, ',');
    if (f.size() >= 2) out[f[0]] = f[1];
  }
  return out;
}

int cmd_bench(const BenchOpts& o) {
  std::string cfg_text = read_file(o.config);
  std::vector<BenchRow> rows = parse_bench_config(cfg_text);
  std::map<std::string, std::string> baseline;
  std::string baseline_digest;
  if (!o.baseline_csv.empty()) {
    std::string t = read_file(o.baseline_csv);
    baseline_digest = digest_hex(t);
    baseline = parse_baseline_csv(t);
  }

  std::ofstream file_out;
  if (!o.out.empty()) {
    file_out.open(o.out, std::ios::binary);
    if (!file_out) throw ConfigError("cannot write " + o.out);
  }
  std::ostream& os = o.out.empty() ? std::cout : file_out;
  os << "d,ring,n,rho,sigma,lll_norm,lll_alpha,best_norm,alpha,g,converged,"
        "wall_ms,baseline_norm\n";
  os.flush();

  DimConvention conv = o.sigma_convention == "ring" ? DimConvention::RingDim
                                                    : DimConvention::RealDim;
  bool all_converged = true;
  for (const BenchRow& row : rows) {
    GeneratorSpec spec;
    spec.dim = row.dim;
    spec.ring = row.ring;
    spec.seed = row.seed;
    Basis raw = row.ring == Ring::Integer ? random_integral_basis(spec)
                                          : random_module_basis(spec);
    LLLParams params;
    params.delta = mpq_class(9999999, 10000000);  // 1 - 10^-7
    Basis pre = row.ring == Ring::Integer ? lll(hnf(raw), params)
                                          : lll(raw, params);
    const double sigma = gaussian_heuristic(pre, conv);
    mpz_class lll_best = shortest_column_norm_sq(pre);

    SieveConfig cfg;
    cfg.pop_size = row.n;
    cfg.rho = row.rho;
    cfg.mutation_prob = row.mutation;
    cfg.seed = row.seed;
    cfg.max_generations = row.max_generations;
    cfg.threads = o.threads;
    auto t0 = std::chrono::steady_clock::now();
    SieveResult res = genetic_sieve(pre, cfg);
    double wall =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    all_converged = all_converged && res.converged;

    std::string base;
    auto it = baseline.find(std::to_string(row.dim));
    if (it != baseline.end()) base = it->second;
    os << row.dim << ',' << ring_name(row.ring) << ',' << row.n << ','
       << format_double(row.rho) << ',' << format_double(sigma) << ','
       << format_double(sqrt_mpz_to_double(lll_best)) << ','
       << format_double(approx_factor(lll_best, sigma)) << ','
       << format_double(res.best.norm()) << ','
       << format_double(approx_factor(res.best.norm_sq(), sigma)) << ','
       << res.history.size() << ',' << (res.converged ? 1 : 0) << ','
       << format_double(o.no_timing ? 0.0 : wall) << ',' << base << '\n';
    os.flush();  // partial table survives an interrupt
  }

  Manifest m;
  m.command = "bench";
  m.timing = !o.no_timing;
  m.inputs.emplace_back(o.config, digest_hex(cfg_text));
  if (!o.baseline_csv.empty())
    m.inputs.emplace_back(o.baseline_csv, baseline_digest);
  m.argv = {"bench", "--config", o.config, "--threads",
            std::to_string(o.threads), "--sigma-convention",
            o.sigma_convention};
  if (!o.baseline_csv.empty())
    m.argv.insert(m.argv.end(), {"--baseline-csv", o.baseline_csv});
  if (o.no_timing) m.argv.push_back("--no-timing");
  if (!o.out.empty()) m.argv.insert(m.argv.end(), {"-o", o.out});
  emit_manifest(o.manifest, m);
  return all_converged ? 0 : 6;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice sieving toolkit"};
  app.require_subcommand(1);

  try {
    GenerateOpts g;
    g.seed = default_seed();
    CLI::App* gen = app.add_subcommand("generate", "generate a lattice basis");
    gen->add_option("--ring", g.ring, "int | gaussian");
    gen->add_option("--dim", g.dim, "dimension d");
    gen->add_option("--seed", g.seed, "RNG seed (default: EVOSIEVE_SEED or 1)");
    gen->add_option("--entry-bound", g.entry_bound,
                    "entry magnitude bound (default d^3)");
    gen->add_option("--mix-count", g.mix_count,
                    "module column-mixing rounds (default d/4)");
    gen->add_option("--knapsack", g.knapsack, "comma-separated weights");
    gen->add_option("--target", g.target, "knapsack target sum S");
    gen->add_flag("--preprocess", g.preprocess, "HNF then LLL before writing");
    gen->add_option("--delta", g.delta, "LLL delta for --preprocess");
    gen->add_option("-o,--out", g.out, "output file (default stdout)");
    gen->add_flag("--json", g.json, "write JSON instead of bracket text");
    gen->add_option("--manifest", g.manifest, "write a run manifest here");
    gen->add_flag("--no-timing", g.no_timing, "omit timestamps from manifest");

    ReduceOpts r;
    CLI::App* red = app.add_subcommand("reduce", "HNF / LLL reduction");
    red->add_option("--in", r.in, "input basis file")->required();
    red->add_option("--ring", r.ring, "ring of the input file");
    red->add_option("--delta", r.delta, "LLL delta (default 0.75)");
    red->add_flag("--hnf-only", r.hnf_only, "Hermite normal form only");
    red->add_flag("--hnf", r.hnf_first, "HNF before LLL");
    red->add_option("--engine", r.engine, "auto | exact | float");
    red->add_option("--max-sweeps", r.max_sweeps, "LLL iteration cap");
    red->add_option("-o,--out", r.out, "output file (default stdout)");
    red->add_flag("--json", r.json, "write JSON instead of bracket text");
    red->add_option("--manifest", r.manifest, "write a run manifest here");
    red->add_flag("--no-timing", r.no_timing, "omit timestamps from manifest");

    SieveOpts s;
    s.seed = default_seed();
    CLI::App* sv = app.add_subcommand("sieve", "evolutionary SVP sieve");
    sv->add_option("--in", s.in, "input basis file");
    sv->add_option("--ring", s.ring, "ring of the input file");
    sv->add_flag("--demo2d", s.demo2d, "run the built-in 2-D walkthrough");
    sv->add_flag("--naive", s.naive, "difference sieve instead of genetic");
    sv->add_flag("--preprocess", s.preprocess, "HNF+LLL before sieving");
    sv->add_option("--delta", s.delta, "LLL delta for --preprocess");
    sv->add_option("--pop", s.pop, "population size n (default 20*d)");
    sv->add_option("--rho", s.rho, "init coefficient density");
    sv->add_option("--mutation", s.mutation, "per-pair mutation probability");
    sv->add_option("--budget-exponent", s.budget_exponent,
                   "children per generation < n^this");
    sv->add_option("--seed", s.seed, "RNG seed (default: EVOSIEVE_SEED or 1)");
    sv->add_option("--max-generations", s.max_generations, "generation cap");
    sv->add_option("--target-norm", s.target_norm,
                   "stop once best norm <= this (else plateau rule)");
    sv->add_option("--plateau-eps", s.plateau_eps, "plateau epsilon");
    sv->add_option("--plateau-streak", s.plateau_streak,
                   "consecutive flat generations to stop");
    sv->add_option("--threads", s.threads, "deterministic parallel scan");
    sv->add_flag("--no-basis-columns", s.no_basis_columns,
                 "do not seed the population with basis columns");
    sv->add_option("--format", s.format, "csv | jsonl");
    sv->add_flag("--no-timing", s.no_timing,
                 "zero elapsed_ms for byte-identical replays");
    sv->add_option("-o,--out", s.out, "history output file (default stdout)");
    sv->add_option("--sigma-convention", s.sigma_convention,
                   "real | ring (Gaussian heuristic dimension)");
    sv->add_option("--decode-knapsack", s.decode_knapsack,
                   "w1,w2,...:S — decode the result as a subset sum");
    sv->add_option("--manifest", s.manifest, "write a run manifest here");

    VerifyOpts v;
    CLI::App* vf = app.add_subcommand("verify", "check membership / reduction");
    vf->add_option("--in", v.in, "basis file")->required();
    vf->add_option("--ring", v.ring, "ring of the input file");
    vf->add_option("--vector", v.vector_csv,
                   "comma-separated entries of the claimed vector");
    vf->add_flag("--reduced", v.reduced, "audit LLL postconditions");
    vf->add_option("--delta", v.delta, "delta for --reduced");
    vf->add_option("--sigma-convention", v.sigma_convention, "real | ring");

    BenchOpts b;
    CLI::App* bn = app.add_subcommand("bench", "dimension sweep from a config");
    bn->add_option("--config", b.config, "JSON config with rows")->required();
    bn->add_option("--baseline-csv", b.baseline_csv,
                   "external baseline norms (d,norm)");
    bn->add_option("-o,--out", b.out, "output CSV (default stdout)");
    bn->add_option("--threads", b.threads, "threads per sieve");
    bn->add_flag("--no-timing", b.no_timing, "zero wall_ms in the table");
    bn->add_option("--sigma-convention", b.sigma_convention, "real | ring");
    bn->add_option("--manifest", b.manifest, "write a run manifest here");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int rc = app.exit(e);
      return rc == 0 ? 0 : 2;
    }

    if (gen->parsed()) return cmd_generate(g);
    if (red->parsed()) return cmd_reduce(r);
    if (sv->parsed()) return cmd_sieve(s);
    if (vf->parsed()) return cmd_verify(v);
    if (bn->parsed()) return cmd_bench(b);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ReductionBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const SingularBasisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const DegenerateBasisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "evosieve/genesis.hpp"

#include <cctype>
#include <cstddef>
#include <utility>

#include "json.hpp"

namespace evosieve {

namespace {

constexpr int kSingularRetries = 16;

mpz_class effective_bound(const GeneratorSpec& spec) {
  if (sgn(spec.entry_bound) > 0) return spec.entry_bound;
  mpz_class d(static_cast<unsigned long>(spec.dim));
  return d * d * d;
}

// substream labels: domain 0 = integral entries, 1 = module entries,
// 2 = module mixing; the second label is (attempt << 32) | column.
std::uint64_t column_label(int attempt, std::size_t col) {
  return (static_cast<std::uint64_t>(attempt) << 32) |
         static_cast<std::uint64_t>(col);
}

}  // namespace

Basis random_integral_basis(const GeneratorSpec& spec) {
  if (spec.ring != Ring::Integer)
    throw ConfigError("random_integral_basis expects the Integer ring");
  if (spec.dim == 0) throw ConfigError("dimension must be positive");
  const mpz_class bound = effective_bound(spec);
  Rng root(spec.seed);
  for (int attempt = 0; attempt < kSingularRetries; ++attempt) {
    std::vector<LatticeVector> cols;
    cols.reserve(spec.dim);
    for (std::size_t j = 0; j < spec.dim; ++j) {
      Rng rng = root.substream(0, column_label(attempt, j));
      std::vector<RingScalar> e;
      e.reserve(spec.dim);
      for (std::size_t i = 0; i < spec.dim; ++i)
        e.push_back(RingScalar::integer(rng.uniform_mpz(bound)));
      cols.push_back(LatticeVector(std::move(e)));
    }
    if (sgn(det_abs_sq_bareiss(cols)) != 0) return Basis::from_columns(std::move(cols));
  }
  throw GenerationError("random basis stayed singular after retries");
}

Basis random_module_basis(const GeneratorSpec& spec) {
  if (spec.ring != Ring::Gaussian)
    throw ConfigError("random_module_basis expects the Gaussian ring");
  if (spec.dim == 0) throw ConfigError("dimension must be positive");
  const mpz_class bound = effective_bound(spec);
  const long mixes = spec.mix_count >= 0
                         ? spec.mix_count
                         : static_cast<long>(spec.dim / 4);
  Rng root(spec.seed);
  for (int attempt = 0; attempt < kSingularRetries; ++attempt) {
    std::vector<LatticeVector> raw;
    raw.reserve(spec.dim);
    for (std::size_t j = 0; j < spec.dim; ++j) {
      Rng rng = root.substream(1, column_label(attempt, j));
      std::vector<RingScalar> e;
      e.reserve(spec.dim);
      for (std::size_t i = 0; i < spec.dim; ++i) {
        mpz_class a = rng.uniform_mpz(bound);
        mpz_class bb = rng.uniform_mpz(bound);
        e.push_back(RingScalar::gaussian(std::move(a), std::move(bb)));
      }
      raw.push_back(LatticeVector(std::move(e)));
    }
    // Mixing reads the pre-mixing snapshot, so column order cannot matter.
    std::vector<LatticeVector> cols;
    cols.reserve(spec.dim);
    for (std::size_t j = 0; j < spec.dim; ++j) {
      Rng rng = root.substream(2, column_label(attempt, j));
      std::vector<RingScalar> e(raw[j].entries());
      for (long t = 0; t < mixes && spec.dim > 1; ++t) {
        std::uint64_t pick = rng.uniform_below(spec.dim - 1);
        std::size_t other = static_cast<std::size_t>(pick);
        if (other >= j) ++other;  // exclude the column itself
        for (std::size_t i = 0; i < spec.dim; ++i) e[i] = e[i] + raw[other][i];
      }
      cols.push_back(LatticeVector(std::move(e)));
    }
    if (sgn(det_abs_sq_bareiss(cols)) != 0) return Basis::from_columns(std::move(cols));
  }
  throw GenerationError("random module basis stayed singular after retries");
}

Basis knapsack_basis(const KnapsackInstance& inst) {
  const std::size_t n = inst.weights.size();
  if (n == 0) throw ConfigError("knapsack instance needs at least one weight");
  mpz_class sum(0);
  for (const mpz_class& w : inst.weights) {
    if (sgn(w) <= 0) throw ConfigError("knapsack weights must be positive");
    sum += w;
  }
  if (sgn(inst.target) <= 0 || inst.target > sum)
    throw ConfigError("knapsack target must lie in (0, sum of weights]");
  const std::size_t d = n + 1;
  std::vector<LatticeVector> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<RingScalar> e(d, RingScalar::zero(Ring::Integer));
    e[j] = RingScalar::integer(mpz_class(2));
    e[n] = RingScalar::integer(inst.weights[j]);
    cols.push_back(LatticeVector(std::move(e)));
  }
  std::vector<RingScalar> last(d, RingScalar::one(Ring::Integer));
  last[n] = RingScalar::integer(inst.target);
  cols.push_back(LatticeVector(std::move(last)));
  return Basis::from_columns(std::move(cols));
}

std::optional<std::vector<int>> knapsack_decode(const LatticeVector& t,
                                                const KnapsackInstance& inst) {
  const std::size_t n = inst.weights.size();
  if (t.ring() != Ring::Integer || t.dim() != n + 1) return std::nullopt;
  if (sgn(t[n].re) != 0) return std::nullopt;
  for (int pass = 0; pass < 2; ++pass) {
    const int flip = pass == 0 ? 1 : -1;
    bool shaped = true;
    for (std::size_t k = 0; k < n && shaped; ++k) {
      mpz_class e = flip * t[k].re;
      if (e != 1 && e != -1) shaped = false;
    }
    if (!shaped) {
      // entries must be +-1 in either orientation; same test both passes
      break;
    }
    std::vector<int> x(n, 0);
    mpz_class picked(0);
    for (std::size_t k = 0; k < n; ++k) {
      if (flip * t[k].re > 0) {
        x[k] = 1;
        picked += inst.weights[k];
      }
    }
    if (picked == inst.target) return x;
  }
  return std::nullopt;
}

// ---- text format ----

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "' at byte " +
                       std::to_string(pos));
    ++pos;
  }
  // maximal run over [0-9+-i]; covers integers and "a+bi" tokens
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size()) {
      char c = s[pos];
      if ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == 'i')
        ++pos;
      else
        break;
    }
    if (pos == start)
      throw ParseError("expected a number at byte " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
};

mpz_class parse_int_token(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty integer token");
  std::size_t p = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (p == tok.size()) throw ParseError("malformed integer: " + tok);
  for (std::size_t i = p; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw ParseError("malformed integer: " + tok);
  // mpz_set_str takes '-' but not '+'
  return mpz_class(tok[0] == '+' ? tok.substr(1) : tok, 10);
}

// "a+bi" / "a-bi" with explicit digits for both parts
RingScalar parse_gaussian_token(const std::string& tok) {
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] == '+' || tok[i] == '-') split = i;  // last sign wins
  }
  if (tok.back() != 'i' || split == std::string::npos)
    throw ParseError("malformed Gaussian entry: " + tok);
  mpz_class re = parse_int_token(tok.substr(0, split));
  std::string imag = tok.substr(split, tok.size() - 1 - split);
  if (imag == "+" || imag == "-") imag += "1";  // allow "a+i" style
  mpz_class im = parse_int_token(imag);
  return RingScalar::gaussian(std::move(re), std::move(im));
}

std::vector<RingScalar> parse_row(Lexer& lex, Ring ring) {
  lex.expect('[');
  std::vector<RingScalar> row;
  while (lex.peek() != ']') {
    std::string tok = lex.token();
    if (ring == Ring::Integer) {
      row.push_back(RingScalar::integer(parse_int_token(tok)));
    } else if (tok.find('i') != std::string::npos) {
      row.push_back(parse_gaussian_token(tok));
    } else {
      mpz_class re = parse_int_token(tok);
      if (lex.peek() == ']')
        throw ParseError("Gaussian pair entry missing its imaginary part");
      mpz_class im = parse_int_token(lex.token());
      row.push_back(RingScalar::gaussian(std::move(re), std::move(im)));
    }
  }
  lex.expect(']');
  if (row.empty()) throw ParseError("empty row in basis file");
  return row;
}

}  // namespace

RingScalar parse_scalar_token(const std::string& tok, Ring ring) {
  if (ring == Ring::Integer) return RingScalar::integer(parse_int_token(tok));
  if (tok.find('i') != std::string::npos) return parse_gaussian_token(tok);
  return RingScalar::gaussian(parse_int_token(tok), 0);
}

Basis parse_basis_file(const std::string& text, Ring ring) {
  Lexer lex(text);
  lex.expect('[');
  std::vector<std::vector<RingScalar>> rows;
  while (lex.peek() == '[') rows.push_back(parse_row(lex, ring));
  lex.expect(']');
  if (!lex.done()) throw ParseError("trailing bytes after basis");
  if (rows.empty()) throw ParseError("no rows in basis file");
  const std::size_t d = rows.size();
  for (const std::vector<RingScalar>& r : rows)
    if (r.size() != d)
      throw ParseError("ragged basis: expected " + std::to_string(d) +
                       " entries per row");
  // each file row is one basis column
  std::vector<LatticeVector> cols;
  cols.reserve(d);
  for (std::vector<RingScalar>& r : rows) cols.push_back(LatticeVector(std::move(r)));
  return Basis::from_columns(std::move(cols));
}

std::string write_basis_file(const Basis& b) {
  std::string out = "[";
  for (std::size_t j = 0; j < b.dim(); ++j) {
    out += '[';
    for (std::size_t i = 0; i < b.dim(); ++i) {
      if (i) out += ' ';
      out += b.column(j)[i].str();
    }
    out += ']';
  }
  out += "]\n";
  return out;
}

// ---- JSON format ----

namespace {

mpz_class json_int(const nlohmann::json& v) {
  if (v.is_string()) return mpz_class(v.get<std::string>(), 10);
  if (v.is_number_integer())
    return mpz_class(std::to_string(v.get<long long>()));
  throw ParseError("basis JSON entries must be integers or decimal strings");
}

}  // namespace

Basis parse_basis_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("basis JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ring") || !j.contains("dim") ||
      !j.contains("columns"))
    throw ParseError("basis JSON needs ring, dim and columns fields");
  const std::string ring_str = j["ring"].get<std::string>();
  Ring ring;
  if (ring_str == "int")
    ring = Ring::Integer;
  else if (ring_str == "gaussian")
    ring = Ring::Gaussian;
  else
    throw ParseError("unknown ring: " + ring_str);
  const std::size_t d = j["dim"].get<std::size_t>();
  const nlohmann::json& cols_j = j["columns"];
  if (!cols_j.is_array() || cols_j.size() != d)
    throw ParseError("basis JSON: columns count disagrees with dim");
  std::vector<LatticeVector> cols;
  cols.reserve(d);
  for (const nlohmann::json& col : cols_j) {
    if (!col.is_array() || col.size() != d)
      throw ParseError("basis JSON: column of wrong length");
    std::vector<RingScalar> e;
    e.reserve(d);
    for (const nlohmann::json& entry : col) {
      if (ring == Ring::Integer) {
        e.push_back(RingScalar::integer(json_int(entry)));
      } else {
        if (!entry.is_array() || entry.size() != 2)
          throw ParseError("Gaussian JSON entries are [re, im] pairs");
        e.push_back(RingScalar::gaussian(json_int(entry[0]), json_int(entry[1])));
      }
    }
    cols.push_back(LatticeVector(std::move(e)));
  }
  return Basis::from_columns(std::move(cols));
}

std::string write_basis_json(const Basis& b) {
  nlohmann::json j;
  j["ring"] = ring_name(b.ring());
  j["dim"] = b.dim();
  nlohmann::json cols = nlohmann::json::array();
  for (std::size_t jc = 0; jc < b.dim(); ++jc) {
    nlohmann::json col = nlohmann::json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) {
      const RingScalar& e = b.column(jc)[i];
      if (b.ring() == Ring::Integer)
        col.push_back(e.re.get_str());
      else
        col.push_back(nlohmann::json::array({e.re.get_str(), e.im.get_str()}));
    }
    cols.push_back(std::move(col));
  }
  j["columns"] = std::move(cols);
  return j.dump(2) + "\n";
}

Basis load_basis_text(const std::string& text, Ring ring) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_basis_json(text);
    break;
  }
  return parse_basis_file(text, ring);
}

}  // namespace evosieve

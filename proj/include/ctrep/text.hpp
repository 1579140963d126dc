#pragma once

// Text and JSON forms of elements and matrices.
//
// Element grammar (whitespace ignored):
//   element := [sign] term { sign term }
//   term    := coeff { "*" gen } | gen { "*" gen }
//   coeff   := int [ "/" int ]
//   gen     := ("v" | "z" | "x" | "y") [int]
// Products of generators are taken in the written order, so "v2*v1" parses
// to -v1*v2 and "z1*z1" to 0. Bare x, y, z stand for z1, z2, z3.
//
// Matrix files: a header line `n=<N> ring=<grassmann m|sqfree m|rational>`
// followed by N rows of N entries separated by ';'.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ctrep/error.hpp"
#include "ctrep/mask_algebra.hpp"
#include "ctrep/matrix.hpp"
#include "ctrep/polynomial.hpp"
#include "ctrep/quaternion.hpp"
#include "ctrep/rational.hpp"
#include "ctrep/skew.hpp"
#include "ctrep/truncated_poly.hpp"

namespace ctrep {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The three entry rings understood by the text layer.
struct RingSpec {
  enum class Kind { grassmann, sqfree, rational };
  Kind kind = Kind::rational;
  int m = 0;

  std::string to_string() const {
    switch (kind) {
      case Kind::grassmann:
        return "grassmann " + std::to_string(m);
      case Kind::sqfree:
        return "sqfree " + std::to_string(m);
      case Kind::rational:
        break;
    }
    return "rational";
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline void append_signed(std::string& out, bool first, bool negative, const std::string& body) {
  if (first) {
    out += (negative ? "-" : "") + body;
  } else {
    out += (negative ? " - " : " + ") + body;
  }
}

}  // namespace detail

/// Canonical form: terms by ascending mask, reduced fractions, explicit '*'.
template <class Rule>
std::string to_string(const MaskAlgebra<Rule>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, c] : x.terms()) {
    std::string mono;
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      if (!mono.empty()) mono += "*";
      mono += Rule::kSymbol + std::to_string(std::countr_zero(rest) + 1);
    }
    const Rational mag = c.sign() < 0 ? -c : c;
    std::string body = mono.empty() ? mag.to_string() : (mag.is_one() ? mono : mag.to_string() + "*" + mono);
    detail::append_signed(out, first, c.sign() < 0, body);
    first = false;
  }
  return out;
}

/// `(r0) + (r1)*z + (r2)*z^2`, zero slots omitted.
template <RingElement R>
std::string to_string(const TruncatedPoly<R>& p) {
  std::string out;
  for (int k = 0; k < p.order(); ++k) {
    if (is_zero(p[k])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p[k]) + ")";
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

/// `(r0) + (r1)*w + ...`, zero slots omitted.
template <RingElement R>
std::string to_string(const SkewPoly<R>& f) {
  std::string out;
  for (int k = 0; k < f.order(); ++k) {
    if (is_zero(f[k])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(f[k]) + ")";
    if (k == 1) out += "*w";
    if (k > 1) out += "*w^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

/// Rows on separate lines, entries separated by "; ".
template <RingElement R>
std::string to_string(const Matrix<R>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != 0) out += "; ";
      out += to_string(a(i, j));
    }
    out += "\n";
  }
  return out;
}

/// The matrix-file text: header line plus rows.
template <RingElement R>
std::string to_matrix_file(const Matrix<R>& a, const RingSpec& ring) {
  return "n=" + std::to_string(a.size()) + " ring=" + ring.to_string() + "\n" + to_string(a);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct ParsedGenerator {
  char letter;
  int index;  // 0 when written without an index
  std::size_t position;
};

struct ParsedTerm {
  Rational coeff;
  std::vector<ParsedGenerator> gens;
};

class ElementParser {
 public:
  explicit ElementParser(std::string_view text, std::size_t offset = 0) : s_(text), offset_(offset) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    if (at_end()) fail("empty element");
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      ParsedTerm term = parse_term();
      if (negative) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, offset_ + pos_); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
    return d;
  }

  ParsedGenerator parse_generator() {
    skip_ws();
    if (at_end()) fail("expected a generator");
    const char c = peek();
    if (c != 'v' && c != 'z' && c != 'x' && c != 'y') fail(std::string("unknown generator '") + c + "'");
    ParsedGenerator g{c, 0, offset_ + pos_};
    ++pos_;
    std::string d = digits();
    if (!d.empty()) {
      if (d.size() > 6) throw ParseError("generator index out of range", g.position);
      g.index = std::stoi(d);
    }
    return g;
  }

  ParsedTerm parse_term() {
    if (at_end()) fail("expected a coefficient or generator");
    ParsedTerm term{Rational(1), {}};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_start = pos_;
        std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero divisor", offset_ + den_start);
        term.coeff = Rational::parse(num + "/" + den);
      } else {
        term.coeff = Rational::parse(num);
      }
    } else {
      term.gens.push_back(parse_generator());
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      term.gens.push_back(parse_generator());
    }
    return term;
  }

  std::string_view s_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// Resolves a parsed generator to a 1-based index in the target ring.
inline int resolve_generator(const ParsedGenerator& g, const RingSpec& ring) {
  int index = g.index;
  if (ring.kind == RingSpec::Kind::grassmann) {
    if (g.letter != 'v') throw ParseError(std::string("generator '") + g.letter + "' not in a Grassmann ring", g.position);
    if (index == 0) throw ParseError("generator 'v' needs an index", g.position);
  } else if (ring.kind == RingSpec::Kind::sqfree) {
    if (g.letter == 'v') throw ParseError("generator 'v' not in a square-free ring", g.position);
    if (g.letter == 'x' || g.letter == 'y') {
      if (index != 0) throw ParseError(std::string("indexed '") + g.letter + "' is not supported", g.position);
      index = g.letter == 'x' ? 1 : 2;
    } else if (index == 0) {
      index = 3;
    }
  } else {
    throw ParseError("generators are not allowed in the rational ring", g.position);
  }
  if (index > ring.m) throw ParseError("generator index out of range", g.position);
  return index;
}

template <class Rule>
MaskAlgebra<Rule> build_mask_element(const std::vector<ParsedTerm>& terms, const RingSpec& ring) {
  MaskAlgebra<Rule> sum(ring.m);
  for (const auto& term : terms) {
    MaskAlgebra<Rule> p = MaskAlgebra<Rule>::scalar(ring.m, term.coeff);
    for (const auto& g : term.gens) p = p * MaskAlgebra<Rule>::generator(ring.m, resolve_generator(g, ring));
    sum = sum + p;
  }
  return sum;
}

}  // namespace detail

inline GrassmannElement parse_grassmann(std::string_view text, int m, std::size_t offset = 0) {
  const RingSpec ring{RingSpec::Kind::grassmann, m};
  return detail::build_mask_element<AnticommutingSign>(detail::ElementParser(text, offset).parse(), ring);
}

inline SquareFreePoly parse_sqfree(std::string_view text, int m, std::size_t offset = 0) {
  const RingSpec ring{RingSpec::Kind::sqfree, m};
  return detail::build_mask_element<CommutingSign>(detail::ElementParser(text, offset).parse(), ring);
}

inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
  const RingSpec ring{RingSpec::Kind::rational, 0};
  Rational sum;
  for (const auto& term : detail::ElementParser(text, offset).parse()) {
    if (!term.gens.empty()) detail::resolve_generator(term.gens[0], ring);
    sum += term.coeff;
  }
  return sum;
}

/// Parses `(g) + (h)*w` (any order, `w` alone, `w^k`) into E^(m)[w, sigma]/(w^t)
/// with the grading involution.
inline SkewPoly<GrassmannElement> parse_skew(std::string_view text, int m, int order = 2) {
  auto sigma = grading_involution_descriptor(m);
  SkewPoly<GrassmannElement> f = SkewPoly<GrassmannElement>::constant(GrassmannElement(m), order, sigma);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  skip_ws();
  if (pos == text.size()) throw ParseError("syntax error: empty skew polynomial", 0);
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("syntax error: expected '+' or '-'", pos);
    }
    GrassmannElement coeff = GrassmannElement::scalar(m, Rational(1));
    bool have_coeff = false;
    if (pos < text.size() && text[pos] == '(') {
      const std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("syntax error: unbalanced '('", pos);
      coeff = parse_grassmann(text.substr(pos + 1, close - pos - 1), m, pos + 1);
      pos = close + 1;
      have_coeff = true;
      skip_ws();
    }
    int power = 0;
    bool star = false;
    if (have_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      star = true;
    }
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      power = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("syntax error: expected an exponent", pos);
        power = std::stoi(std::string(text.substr(start, pos - start)));
      }
    } else if (star || !have_coeff) {
      throw ParseError("syntax error: expected 'w' or '('", pos);
    }
    if (negative) coeff = -coeff;
    f = f + SkewPoly<GrassmannElement>::monomial(coeff, power, order, sigma);
    first = false;
    skip_ws();
  }
  return f;
}

/// `a,b,c,d` with rational components.
inline Quaternion parse_quaternion(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(parse_rational(text.substr(start, comma - start), start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw ParseError("quaternion needs four comma-separated components", 0);
  return {parts[0], parts[1], parts[2], parts[3]};
}

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<GrassmannElement>, Matrix<SquareFreePoly>>;

struct MatrixFile {
  RingSpec ring;
  AnyMatrix matrix;
};

inline RingSpec parse_ring_spec(std::string_view kind, std::string_view count) {
  RingSpec ring;
  if (kind == "rational") {
    if (!count.empty()) throw Error("matrix header: the rational ring takes no generator count");
    return ring;
  }
  if (kind == "grassmann") {
    ring.kind = RingSpec::Kind::grassmann;
  } else if (kind == "sqfree") {
    ring.kind = RingSpec::Kind::sqfree;
  } else {
    throw Error("matrix header: unknown ring '" + std::string(kind) + "'");
  }
  try {
    ring.m = std::stoi(std::string(count));
  } catch (const std::exception&) {
    throw Error("matrix header: missing generator count");
  }
  if (ring.m < 1 || ring.m > kMaxGenerators) throw Error("matrix header: generator count out of range");
  return ring;
}

inline MatrixFile parse_matrix_file(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw Error("matrix file is empty");
  std::istringstream header(lines[0]);
  std::string n_token;
  std::string ring_token;
  std::string count_token;
  header >> n_token >> ring_token >> count_token;
  if (n_token.rfind("n=", 0) != 0 || ring_token.rfind("ring=", 0) != 0) {
    throw Error("matrix header must read 'n=<N> ring=<grassmann m|sqfree m|rational>'");
  }
  std::size_t n = 0;
  try {
    n = static_cast<std::size_t>(std::stoul(n_token.substr(2)));
  } catch (const std::exception&) {
    throw Error("matrix header: bad dimension");
  }
  if (n == 0) throw Error("matrix header: dimension must be positive");
  const RingSpec ring = parse_ring_spec(ring_token.substr(5), count_token);
  if (lines.size() != n + 1) throw Error("matrix file: expected " + std::to_string(n) + " rows");

  auto split = [&](const std::string& line, std::size_t row) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t semi = line.find(';', start);
      cells.push_back(line.substr(start, semi - start));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (cells.size() != n) throw Error("matrix file: row " + std::to_string(row + 1) + " needs " + std::to_string(n) + " entries");
    return cells;
  };

  auto build = [&](auto parse_entry) {
    using R = decltype(parse_entry(std::string()));
    std::vector<std::vector<R>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<R> row;
      for (const auto& cell : split(lines[i + 1], i)) {
        try {
          row.push_back(parse_entry(cell));
        } catch (const Error& e) {
          throw Error("matrix file row " + std::to_string(i + 1) + ": " + e.what());
        }
      }
      rows.push_back(std::move(row));
    }
    return Matrix<R>::from_rows(rows);
  };

  switch (ring.kind) {
    case RingSpec::Kind::grassmann:
      return {ring, build([&](const std::string& s) { return parse_grassmann(s, ring.m); })};
    case RingSpec::Kind::sqfree:
      return {ring, build([&](const std::string& s) { return parse_sqfree(s, ring.m); })};
    case RingSpec::Kind::rational:
      break;
  }
  return {ring, build([](const std::string& s) { return parse_rational(s); })};
}

// ---------------------------------------------------------------------------
// JSON

template <class Rule>
nlohmann::json to_json_value(const MaskAlgebra<Rule>& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mask, c] : x.terms()) {
    nlohmann::json idx = nlohmann::json::array();
    for (Mask rest = mask; rest != 0; rest &= rest - 1) idx.push_back(std::countr_zero(rest) + 1);
    terms.push_back({{"monomial", idx}, {"coeff", c.to_string()}});
  }
  return terms;
}

inline nlohmann::json to_json_value(const Rational& x) {
  nlohmann::json terms = nlohmann::json::array();
  if (!x.is_zero()) terms.push_back({{"monomial", nlohmann::json::array()}, {"coeff", x.to_string()}});
  return terms;
}

template <RingElement R>
nlohmann::json to_json_value(const TruncatedPoly<R>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = 0; k < p.order(); ++k) {
    if (!is_zero(p[k])) out.push_back({{"degree", k}, {"terms", to_json_value(p[k])}});
  }
  return out;
}

inline nlohmann::json to_json_value(const CappedPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.to_string()}});
  return terms;
}

template <RingElement R>
nlohmann::json to_json(const Matrix<R>& a, const std::string& ring) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(to_json_value(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", a.size()}, {"ring", ring}, {"entries", std::move(rows)}};
}

}  // namespace ctrep

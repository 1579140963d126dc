#pragma once

// Q[x_1..x_k] with a total-degree cap. Exceeding the cap is an error, never
// a silent truncation, so the ring stays an honest polynomial ring on every
// computation that succeeds.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ctrep/error.hpp"
#include "ctrep/rational.hpp"
#include "ctrep/ring.hpp"

namespace ctrep {

class CappedPolynomial {
 public:
  using Exponents = std::vector<int>;

  CappedPolynomial(int variables, int degree_cap) : vars_(variables), cap_(degree_cap) {
    if (variables < 1 || variables > 26) throw Error("variable count out of range");
    if (degree_cap < 0) throw Error("degree cap must be nonnegative");
  }

  static CappedPolynomial constant(int variables, int degree_cap, const Rational& c) {
    CappedPolynomial p(variables, degree_cap);
    p.add_term(Exponents(static_cast<std::size_t>(variables), 0), c);
    return p;
  }

  /// Variable i, 0-based.
  static CappedPolynomial variable(int variables, int degree_cap, int i) {
    if (i < 0 || i >= variables) throw Error("variable index out of range");
    CappedPolynomial p(variables, degree_cap);
    Exponents e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
  }

  int variables() const noexcept { return vars_; }
  int degree_cap() const noexcept { return cap_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

  void add_term(Exponents e, const Rational& c) {
    if (static_cast<int>(e.size()) != vars_) throw Error("exponent length mismatch");
    if (std::accumulate(e.begin(), e.end(), 0) > cap_) throw Error("degree cap exceeded");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Substitutes x_i -> x_{perm[i]}.
  CappedPolynomial permute_variables(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != vars_) throw Error("permutation length mismatch");
    CappedPolynomial r(vars_, cap_);
    for (const auto& [e, c] : terms_) {
      Exponents f(e.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i])] += e[i];
      r.add_term(std::move(f), c);
    }
    return r;
  }

  friend CappedPolynomial operator+(const CappedPolynomial& a, const CappedPolynomial& b) {
    a.check_same(b);
    CappedPolynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend CappedPolynomial operator-(const CappedPolynomial& a) {
    CappedPolynomial r(a.vars_, a.cap_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend CappedPolynomial operator-(const CappedPolynomial& a, const CappedPolynomial& b) { return a + (-b); }
  friend CappedPolynomial operator*(const CappedPolynomial& a, const CappedPolynomial& b) {
    a.check_same(b);
    CappedPolynomial r(a.vars_, a.cap_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const CappedPolynomial& a, const CappedPolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  friend CappedPolynomial zero_like(const CappedPolynomial& x) { return CappedPolynomial(x.vars_, x.cap_); }
  friend CappedPolynomial one_like(const CappedPolynomial& x) { return constant(x.vars_, x.cap_, Rational(1)); }
  friend CappedPolynomial embed_scalar(const CappedPolynomial& x, const Rational& c) {
    return constant(x.vars_, x.cap_, c);
  }
  friend CappedPolynomial scale(const CappedPolynomial& x, const Rational& c) {
    CappedPolynomial r(x.vars_, x.cap_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : x.terms_) r.terms_.emplace(e, v * c);
    return r;
  }
  friend bool is_zero(const CappedPolynomial& x) { return x.terms_.empty(); }
  friend bool is_scalar(const CappedPolynomial& x) {
    if (x.terms_.empty()) return true;
    if (x.terms_.size() != 1) return false;
    const auto& e = x.terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
  }
  friend Rational scalar_value(const CappedPolynomial& x) {
    if (!is_scalar(x)) throw Error("element is not a scalar");
    return x.terms_.empty() ? Rational() : x.terms_.begin()->second;
  }

  /// Variables print as a, b, c, ...; terms in descending lexicographic
  /// exponent order.
  friend std::string to_string(const CappedPolynomial& x) {
    if (x.terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = x.terms_.rbegin(); it != x.terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += static_cast<char>('a' + i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      Rational mag = c.sign() < 0 ? -c : c;
      std::string body = mono.empty() ? mag.to_string() : (mag.is_one() ? mono : mag.to_string() + "*" + mono);
      if (first) {
        out += (c.sign() < 0 ? "-" : "") + body;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + body;
      }
      first = false;
    }
    return out;
  }

 private:
  void check_same(const CappedPolynomial& b) const {
    if (vars_ != b.vars_) throw Error("variable count mismatch");
  }

  int vars_;
  int cap_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace ctrep

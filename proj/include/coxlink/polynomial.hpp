#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coxlink/errors.hpp"

namespace coxlink {

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> c) {
    for (long long x : c) coeffs_.emplace_back(x);
    trim();
  }
  explicit IntPolynomial(std::vector<Integer> c) : coeffs_(std::move(c)) { trim(); }

  static IntPolynomial monomial(std::size_t k, Integer c = 1) {
    std::vector<Integer> v(k + 1, 0);
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const {
    if (is_zero()) throw ValidationError("the zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(-t).
  IntPolynomial negated_variable() const {
    auto c = coeffs_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return IntPolynomial(std::move(c));
  }

  /// t^d p(1/t), d = degree.
  IntPolynomial reciprocal() const {
    auto c = coeffs_;
    std::reverse(c.begin(), c.end());
    return IntPolynomial(std::move(c));
  }

  IntPolynomial derivative() const {
    std::vector<Integer> c;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] * static_cast<long long>(k));
    return IntPolynomial(std::move(c));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& x : coeffs_) g = gcd(g, x);
    return g;
  }

  /// Divides out the content, making the leading coefficient positive.
  IntPolynomial primitive() const {
    if (is_zero()) return *this;
    Integer g = content();
    if (leading() < 0) g = -g;
    auto c = coeffs_;
    for (auto& x : c) x /= g;
    return IntPolynomial(std::move(c));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(char var = 't') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0 || mag != 1) os << mag;
      if (k >= 1) os << var;
      if (k >= 2) os << '^' << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of a by b, exact when lc(b) divides every leading
/// coefficient met on the way (always so for monic b).
inline std::pair<IntPolynomial, IntPolynomial> divmod_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ValidationError("division by the zero polynomial");
  std::vector<Integer> rem = a.coefficients();
  const int db = b.degree();
  const Integer& lb = b.leading();
  if (a.degree() < db) return {IntPolynomial(), a};
  std::vector<Integer> quo(a.degree() - db + 1, 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    const Integer& top = rem[k + db];
    if (top == 0) continue;
    if (top % lb != 0) throw ValidationError("polynomial division is not exact over the integers");
    Integer q = top / lb;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficients()[j];
    quo[k] = std::move(q);
  }
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

/// Primitive gcd over Z[t] via pseudo-remainder sequences.
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    // Pseudo-remainder: scale a so the division is exact.
    IntPolynomial r = a;
    if (r.degree() >= b.degree()) {
      const int shift = r.degree() - b.degree() + 1;
      Integer scale = 1;
      for (int k = 0; k < shift; ++k) scale *= b.leading();
      r = IntPolynomial::monomial(0, scale) * r;
      r = divmod_exact(r, b).second;
    }
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

/// Square-free decomposition p = c * prod f_k^k by repeated gcds. Returns
/// (f_k, k) with every f_k primitive, square-free and non-constant.
inline std::vector<std::pair<IntPolynomial, int>> squarefree_factors(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() < 1) return out;
  const IntPolynomial a = p.primitive();
  IntPolynomial g = gcd(a, a.derivative());
  IntPolynomial w = divmod_exact(a, g).first.primitive();
  for (int k = 1; w.degree() >= 1; ++k) {
    IntPolynomial y = gcd(w, g);
    IntPolynomial f = divmod_exact(w, y).first.primitive();
    if (f.degree() >= 1) out.emplace_back(std::move(f), k);
    g = divmod_exact(g, y).first.primitive();
    w = std::move(y);
  }
  return out;
}

inline bool is_reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) throw ValidationError("the zero polynomial has no reciprocal test");
  const IntPolynomial r = p.reciprocal();
  // Leading zeros in p become a lower degree in r; require degrees to match.
  if (r.degree() != p.degree()) return false;
  return r == p || r == -p;
}

/// The d-th cyclotomic polynomial.
inline IntPolynomial cyclotomic(int d) {
  if (d < 1) throw ValidationError("cyclotomic index must be positive");
  static std::map<int, IntPolynomial> cache;
  static std::mutex lock;
  std::lock_guard guard(lock);
  // Divisors of d in increasing order; each one's own divisors precede it.
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0 || cache.count(e)) continue;
    IntPolynomial p = IntPolynomial::monomial(e) - IntPolynomial{1};
    for (int f = 1; f < e; ++f)
      if (e % f == 0) p = divmod_exact(p, cache.at(f)).first;
    cache.emplace(e, std::move(p));
  }
  return cache.at(d);
}

/// Euler's totient.
inline int totient(int d) {
  int result = d;
  for (int q = 2; q * q <= d; ++q)
    if (d % q == 0) {
      while (d % q == 0) d /= q;
      result -= result / q;
    }
  if (d > 1) result -= result / d;
  return result;
}

/// Exact split p = remainder * prod Phi_d^{e_d}: every cyclotomic factor is
/// divided out. Candidates d are those with totient(d) <= deg p.
struct CyclotomicSplit {
  std::map<int, int> multiplicity;  // d -> e_d, only e_d > 0
  IntPolynomial remainder;

  /// Every root of p is a root of unity (remainder is a unit).
  bool all_roots_of_unity() const {
    return remainder.degree() == 0 && abs(remainder.leading()) == 1;
  }
  int multiplicity_of(int d) const {
    auto it = multiplicity.find(d);
    return it == multiplicity.end() ? 0 : it->second;
  }
};

inline CyclotomicSplit split_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) throw ValidationError("cannot split the zero polynomial");
  CyclotomicSplit out;
  IntPolynomial rest = p;
  const int deg = p.degree();
  // totient(d) >= sqrt(d/2), so d <= 2 deg^2 covers every candidate.
  const int bound = std::max(2, 2 * deg * deg + 2);
  for (int d = 1; d <= bound && rest.degree() >= 1; ++d) {
    if (totient(d) > rest.degree()) continue;
    const IntPolynomial phi = cyclotomic(d);
    for (;;) {
      auto [q, r] = divmod_exact(rest, phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++out.multiplicity[d];
    }
  }
  out.remainder = std::move(rest);
  return out;
}

/// Canonical representative of the class {+p(t), -p(t), +p(-t), -p(-t)}:
/// the lexicographically smaller coefficient list of the two monic-signed
/// candidates p and p(-t).
inline IntPolynomial canonical_form(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  IntPolynomial a = p.leading() < 0 ? -p : p;
  IntPolynomial b = p.negated_variable();
  if (b.leading() < 0) b = -b;
  return std::lexicographical_compare(b.coefficients().begin(), b.coefficients().end(),
                                      a.coefficients().begin(), a.coefficients().end())
             ? b
             : a;
}

/// p(t) ~ +-q(+-t).
inline bool equivalent(const IntPolynomial& p, const IntPolynomial& q) {
  return canonical_form(p) == canonical_form(q);
}

}  // namespace coxlink

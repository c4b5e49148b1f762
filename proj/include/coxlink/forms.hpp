#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxlink/chord.hpp"
#include "coxlink/errors.hpp"
#include "coxlink/graph.hpp"
#include "coxlink/matrix.hpp"
#include "coxlink/polynomial.hpp"

namespace coxlink {

/// Adjacency matrix, rows and columns in vertex order.
inline IntMatrix adjacency(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  IntMatrix a(n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

/// Symmetric form with 2 on the diagonal and the linking number of the
/// earlier chord with the later one off the diagonal. Indexed by position.
inline IntMatrix bilinear_form(const ChordSystem& s) {
  const auto n = static_cast<std::size_t>(s.size());
  IntMatrix b(n);
  for (std::size_t p = 0; p < n; ++p) {
    b(p, p) = 2;
    for (std::size_t q = p + 1; q < n; ++q) {
      const int l = ordered_link(s, static_cast<int>(p), static_cast<int>(q));
      b(p, q) = l;
      b(q, p) = l;
    }
  }
  return b;
}

/// Entries strictly above the diagonal; zero elsewhere.
template <class T>
SquareMatrix<T> strict_upper(const SquareMatrix<T>& x) {
  SquareMatrix<T> u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) u(i, j) = x(i, j);
  return u;
}

/// Upper unitriangular Seifert matrix of the fibre surface: ones on the
/// diagonal, ordered linking numbers above it.
inline IntMatrix seifert_matrix(const ChordSystem& s) {
  const auto n = static_cast<std::size_t>(s.size());
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) m(p, q) = ordered_link(s, static_cast<int>(p), static_cast<int>(q));
  return m;
}

inline IntMatrix symmetrize(const IntMatrix& m) { return m + m.transpose(); }

inline bool is_upper_unitriangular(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
  }
  return true;
}

/// Solves U X = B for upper unitriangular U by back-substitution.
inline IntMatrix unitriangular_solve(const IntMatrix& u, const IntMatrix& b) {
  if (!is_upper_unitriangular(u)) throw ValidationError("matrix is not upper unitriangular");
  const std::size_t n = u.size();
  IntMatrix x(n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t i = n; i-- > 0;) {
      Integer acc = b(i, col);
      for (std::size_t j = i + 1; j < n; ++j)
        if (u(i, j) != 0) acc -= u(i, j) * x(j, col);
      x(i, col) = std::move(acc);
    }
  return x;
}

/// Homological monodromy M^{-1} M^t of a fibred link with unitriangular
/// Seifert matrix M.
inline IntMatrix monodromy(const IntMatrix& seifert) {
  if (!is_upper_unitriangular(seifert))
    throw ValidationError("monodromy needs an upper unitriangular Seifert matrix");
  return unitriangular_solve(seifert, seifert.transpose());
}

namespace detail {
inline void check_coxeter_form(const IntMatrix& b) {
  if (!b.is_symmetric()) throw ValidationError("bilinear form must be symmetric");
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b(i, i) != 2) throw ValidationError("bilinear form must have 2 on the diagonal");
}
}  // namespace detail

/// Matrix of the reflection s_i(e_j) = e_j - <e_i, e_j> e_i; column j is the
/// image of e_j.
inline IntMatrix coxeter_generator(const IntMatrix& b, std::size_t i) {
  detail::check_coxeter_form(b);
  if (i >= b.size()) throw ValidationError("generator index out of range");
  IntMatrix s = IntMatrix::identity(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) s(i, j) -= b(i, j);
  return s;
}

/// s_1 s_2 ... s_n.
inline IntMatrix coxeter_element_product(const IntMatrix& b) {
  detail::check_coxeter_form(b);
  IntMatrix c = IntMatrix::identity(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c = c * coxeter_generator(b, i);
  return c;
}

/// -U^{-1} U^t with U = I + B^+.
inline IntMatrix coxeter_element_howlett(const IntMatrix& b) {
  detail::check_coxeter_form(b);
  const IntMatrix u = IntMatrix::identity(b.size()) + strict_upper(b);
  return -unitriangular_solve(u, u.transpose());
}

/// Coxeter element, computed as the product of generators and checked
/// against the triangular formula.
inline IntMatrix coxeter_element(const IntMatrix& b) {
  IntMatrix c = coxeter_element_product(b);
  if (c != coxeter_element_howlett(b))
    throw TheoremViolation("product of generators differs from -U^{-1}U^t");
  return c;
}

/// det(tI - X) by Faddeev-LeVerrier in exact integers.
inline IntPolynomial char_poly(const IntMatrix& x) {
  const std::size_t n = x.size();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = x * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Integer tr = (x * mk).trace();
    if (tr % static_cast<long long>(k) != 0) throw TheoremViolation("Faddeev-LeVerrier division not exact");
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(c));
}

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

inline std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::positive_semidefinite: return "positive_semidefinite";
    case Definiteness::indefinite: return "indefinite";
  }
  return "?";
}

/// Exact sign pattern of a symmetric form by rational symmetric elimination.
/// A zero pivot whose remaining row is nonzero forces indefiniteness (the
/// 2x2 minor [[0, x], [x, *]] is negative); a zero pivot with a zero row
/// splits off a null direction.
inline Definiteness definiteness(const IntMatrix& b) {
  if (!b.is_symmetric()) throw ValidationError("definiteness needs a symmetric matrix");
  RationalMatrix a = to_rational(b);
  const std::size_t n = a.size();
  bool singular = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = a(k, k);
    if (pivot < 0) return Definiteness::indefinite;
    if (pivot == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (a(k, j) != 0) return Definiteness::indefinite;
      singular = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return singular ? Definiteness::positive_semidefinite : Definiteness::positive_definite;
}

}  // namespace coxlink

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxlink/errors.hpp"
#include "coxlink/polynomial.hpp"

namespace coxlink {

using Complex = std::complex<long double>;

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

/// Approximate roots with exact multiplicities. `residual` is the largest
/// relative backward error |p(z)| / sum_k |a_k| |z|^k over the returned roots.
struct ComplexRootSet {
  std::vector<RootCluster> roots;
  long double residual = 0;

  /// Roots listed with repetition.
  std::vector<Complex> values() const {
    std::vector<Complex> out;
    for (const auto& r : roots)
      for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    return out;
  }
  int total_multiplicity() const {
    int m = 0;
    for (const auto& r : roots) m += r.multiplicity;
    return m;
  }
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, long double best_residual)
      : std::runtime_error(what + " (best residual " + std::to_string(static_cast<double>(best_residual)) + ")"),
        best_residual_(best_residual) {}
  long double best_residual() const noexcept { return best_residual_; }

 private:
  long double best_residual_;
};

struct RootOptions {
  long double tol = 1e-10L;
  int max_iterations = 200;
  int polish_steps = 3;
};

namespace detail {

inline std::vector<long double> to_floating(const IntPolynomial& p) {
  std::vector<long double> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(x.convert_to<long double>());
  return c;
}

// Horner for p and p' at z.
inline void horner(const std::vector<long double>& c, Complex z, Complex& p, Complex& dp) {
  p = 0;
  dp = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

inline long double backward_error(const std::vector<long double>& c, Complex z) {
  Complex p = 0;
  long double scale = 0;
  const long double r = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    p = p * z + c[k];
    scale = scale * r + std::abs(c[k]);
  }
  return std::abs(p) / std::max(scale, 1e-300L);
}

// Simultaneous Aberth-Ehrlich iteration on a square-free polynomial.
inline std::vector<Complex> aberth(const IntPolynomial& f, const RootOptions& opt, long double& residual) {
  const auto c = to_floating(f);
  const int n = f.degree();
  if (n == 1) {
    std::vector<Complex> z{Complex(-c[0] / c[1], 0)};
    residual = backward_error(c, z[0]);
    return z;
  }
  // Initial points on a circle whose radius is the geometric mean of the root
  // moduli, |a_0 / a_n|^(1/n), rotated off the real axis.
  long double radius = std::pow(std::abs(c[0] / c[n]), 1.0L / n);
  if (!(radius > 0) || !std::isfinite(static_cast<double>(radius))) radius = 1;
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const long double theta = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius, theta);
  }
  bool converged = false;
  for (int it = 0; it < opt.max_iterations && !converged; ++it) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      Complex p, dp;
      horner(c, z[k], p, dp);
      if (p == Complex(0)) continue;
      const Complex ratio = p / dp;
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      const Complex w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      if (std::abs(w) > opt.tol * std::max(1.0L, std::abs(z[k]))) converged = false;
    }
  }
  for (auto& zk : z)
    for (int s = 0; s < opt.polish_steps; ++s) {
      Complex p, dp;
      horner(c, zk, p, dp);
      if (dp == Complex(0)) break;
      zk -= p / dp;
    }
  residual = 0;
  for (const auto& zk : z) residual = std::max(residual, backward_error(c, zk));
  if (residual > opt.tol)
    throw RootFindingError(converged ? std::string("roots converged but the residual exceeds the tolerance")
                                     : "root finder did not converge in " + std::to_string(opt.max_iterations) +
                                           " iterations",
                           residual);
  return z;
}

}  // namespace detail

/// All complex roots of p. Multiplicities come from an exact square-free
/// decomposition; each square-free factor is solved by Aberth-Ehrlich
/// iteration followed by Newton polishing.
inline ComplexRootSet roots(const IntPolynomial& p, const RootOptions& opt = {}) {
  if (p.degree() < 1) throw ValidationError("roots() needs a polynomial of degree at least 1");
  ComplexRootSet out;
  const auto pc = detail::to_floating(p);
  for (const auto& [f, mult] : squarefree_factors(p)) {
    long double res = 0;
    for (const auto& z : detail::aberth(f, opt, res)) {
      out.roots.push_back({z, mult});
      out.residual = std::max(out.residual, detail::backward_error(pc, z));
    }
  }
  if (out.residual > opt.tol)
    throw RootFindingError("residual against the full polynomial exceeds the tolerance", out.residual);
  // Deterministic presentation: by modulus, then argument.
  std::sort(out.roots.begin(), out.roots.end(), [](const RootCluster& a, const RootCluster& b) {
    const auto ka = std::llround(std::abs(a.value) * 1e9L), kb = std::llround(std::abs(b.value) * 1e9L);
    if (ka != kb) return ka > kb;
    return std::arg(a.value) < std::arg(b.value);
  });
  return out;
}

inline ComplexRootSet roots(const IntPolynomial& p, long double tol) {
  RootOptions opt;
  opt.tol = tol;
  return roots(p, opt);
}

}  // namespace coxlink

#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "coxlink/errors.hpp"
#include "coxlink/forms.hpp"
#include "coxlink/matrix.hpp"
#include "coxlink/polynomial.hpp"
#include "coxlink/roots.hpp"

namespace coxlink {

/// Default tolerances: root finding, and the margin used by the Lehmer gate.
inline constexpr long double kRootTolerance = 1e-10L;
inline constexpr long double kGateTolerance = 1e-6L;

/// Lehmer's polynomial x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1.
inline const IntPolynomial& lehmer_polynomial() {
  static const IntPolynomial p{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  return p;
}

/// |lc| * prod max(1, |root|). Cyclotomic factors are divided out exactly and
/// contribute 1; only the remaining factor goes through the root finder.
inline long double mahler_measure(const IntPolynomial& p, long double tol = kRootTolerance) {
  if (p.degree() < 1) throw ValidationError("mahler_measure() needs a polynomial of degree at least 1");
  const CyclotomicSplit split = split_cyclotomic(p);
  const IntPolynomial& rest = split.remainder;
  long double mu = abs(rest.leading()).convert_to<long double>();
  if (rest.degree() < 1) return mu;
  for (const auto& r : roots(rest, tol).roots)
    mu *= std::pow(std::max(1.0L, std::abs(r.value)), static_cast<long double>(r.multiplicity));
  return mu;
}

/// Measure of Lehmer's polynomial, computed once with the resident root finder.
inline long double lehmer_measure() {
  static const long double mu = mahler_measure(lehmer_polynomial());
  return mu;
}

/// Largest root modulus of a polynomial; roots of unity count as exactly 1.
inline long double max_root_modulus(const IntPolynomial& p, long double tol = kRootTolerance) {
  if (p.degree() < 1) throw ValidationError("max_root_modulus() needs a polynomial of degree at least 1");
  const CyclotomicSplit split = split_cyclotomic(p);
  long double lambda = split.multiplicity.empty() ? 0.0L : 1.0L;
  if (split.remainder.degree() >= 1)
    for (const auto& r : roots(split.remainder, tol).roots) lambda = std::max(lambda, std::abs(r.value));
  return lambda;
}

inline long double spectral_radius(const IntMatrix& x, long double tol = kRootTolerance) {
  return max_root_modulus(char_poly(x), tol);
}

enum class CoxeterClass { spherical, affine, higher };

inline std::string to_string(CoxeterClass c) {
  switch (c) {
    case CoxeterClass::spherical: return "spherical";
    case CoxeterClass::affine: return "affine";
    case CoxeterClass::higher: return "higher";
  }
  return "?";
}

/// Classifies a Coxeter system from the characteristic polynomial of a
/// Coxeter element: spherical when every eigenvalue is a root of unity other
/// than 1, affine when 1 is an eigenvalue and every eigenvalue is a root of
/// unity. Decided by exact cyclotomic division.
inline CoxeterClass classify(const IntPolynomial& qc) {
  const CyclotomicSplit split = split_cyclotomic(qc);
  if (!split.all_roots_of_unity()) return CoxeterClass::higher;
  return split.multiplicity_of(1) > 0 ? CoxeterClass::affine : CoxeterClass::spherical;
}

enum class GateVerdict { trivial, pass, fail };

inline std::string to_string(GateVerdict g) {
  switch (g) {
    case GateVerdict::trivial: return "trivial";
    case GateVerdict::pass: return "pass";
    case GateVerdict::fail: return "fail";
  }
  return "?";
}

struct GateResult {
  GateVerdict verdict = GateVerdict::trivial;
  long double measure = 1;
};

/// Lehmer gate: trivial when every root is a root of unity (exact check),
/// pass when the measure is at least that of Lehmer's polynomial minus tol.
inline GateResult lehmer_gate(const IntPolynomial& p, long double tol = kGateTolerance,
                              long double root_tol = kRootTolerance) {
  const CyclotomicSplit split = split_cyclotomic(p);
  if (split.all_roots_of_unity()) return {GateVerdict::trivial, 1.0L};
  const long double mu = mahler_measure(p, root_tol);
  return {mu >= lehmer_measure() - tol ? GateVerdict::pass : GateVerdict::fail, mu};
}

}  // namespace coxlink

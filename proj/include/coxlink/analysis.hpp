#pragma once

#include <optional>
#include <string>

#include "coxlink/chord.hpp"
#include "coxlink/errors.hpp"
#include "coxlink/forms.hpp"
#include "coxlink/graph.hpp"
#include "coxlink/matrix.hpp"
#include "coxlink/polynomial.hpp"
#include "coxlink/spectra.hpp"

namespace coxlink {

struct AnalysisOptions {
  long double root_tol = kRootTolerance;
  long double gate_tol = kGateTolerance;
  bool require_coxeter = false;
};

/// Everything computed from one chord system. Matrices are indexed by order
/// position. The Coxeter element is that of 2I - A for the ordered incidence
/// graph; `minus_coxeter_check` is empty for systems not of Coxeter type.
struct AnalysisReport {
  std::string name;
  ChordSystem system;
  bool coxeter_type = false;
  IntMatrix adjacency;
  IntMatrix form;
  IntMatrix seifert;
  IntMatrix monodromy;
  IntMatrix coxeter;
  IntPolynomial char_poly;       // det(tI - h*)
  IntPolynomial canonical;       // canonical_form(char_poly)
  IntPolynomial coxeter_poly;    // det(tI - c)
  CoxeterClass classification = CoxeterClass::spherical;
  Definiteness definiteness = Definiteness::positive_definite;
  long double mahler = 1;
  long double spectral_radius = 1;  // of c
  GateResult gate;
  std::optional<bool> minus_coxeter_check;
  long double root_tol = kRootTolerance;
  long double gate_tol = kGateTolerance;
};

/// Runs the full pipeline. Throws TheoremViolation if an identity that must
/// hold fails: the symmetrized Seifert form differs from B, h* != -c for a
/// Coxeter-type system, or a monodromy polynomial fails the Lehmer gate.
inline AnalysisReport analyze(const ChordSystem& s, const AnalysisOptions& opt = {}, std::string name = {}) {
  AnalysisReport r;
  r.name = std::move(name);
  r.system = s;
  r.coxeter_type = is_coxeter_type(s);
  if (opt.require_coxeter && !r.coxeter_type) throw ValidationError("chord system is not of Coxeter type");
  r.root_tol = opt.root_tol;
  r.gate_tol = opt.gate_tol;

  r.adjacency = adjacency(ordered_incidence_graph(s));
  r.form = bilinear_form(s);
  r.seifert = seifert_matrix(s);
  if (symmetrize(r.seifert) != r.form) throw TheoremViolation("M + M^t differs from the bilinear form");
  r.monodromy = monodromy(r.seifert);

  const IntMatrix two_minus_a = IntMatrix::identity(s.size()) + IntMatrix::identity(s.size()) - r.adjacency;
  r.coxeter = coxeter_element(two_minus_a);
  r.coxeter_poly = char_poly(r.coxeter);
  r.classification = classify(r.coxeter_poly);
  r.definiteness = definiteness(two_minus_a);

  r.char_poly = char_poly(r.monodromy);
  r.canonical = canonical_form(r.char_poly);
  r.mahler = mahler_measure(r.char_poly, opt.root_tol);
  r.spectral_radius = max_root_modulus(r.coxeter_poly, opt.root_tol);
  r.gate = lehmer_gate(r.char_poly, opt.gate_tol, opt.root_tol);

  if (r.coxeter_type) {
    if (r.form != two_minus_a) throw TheoremViolation("Coxeter-type system with B != 2I - A");
    r.minus_coxeter_check = r.monodromy == -r.coxeter;
    if (!*r.minus_coxeter_check) throw TheoremViolation("monodromy differs from minus the Coxeter element");
    if (r.gate.verdict == GateVerdict::fail) throw TheoremViolation("Coxeter-link polynomial fails the Lehmer gate");
  }
  return r;
}

}  // namespace coxlink

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxlink/chord.hpp"
#include "coxlink/errors.hpp"
#include "coxlink/orderings.hpp"
#include "coxlink/polynomial.hpp"
#include "coxlink/spectra.hpp"

namespace coxlink {

inline constexpr int kScanCap = 7;

struct ScanRow {
  int chords = 0;
  std::size_t diagrams = 0;
  std::size_t relations = 0;  // Coxeter-type directed diagrams
  std::size_t orbits = 0;
  std::size_t trivial = 0;
  std::size_t pass = 0;
  std::optional<long double> min_measure;  // least measure > 1 at this size
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::optional<long double> min_measure;
  std::optional<ChordSystem> witness;
  IntPolynomial witness_poly;
  bool complete = true;
};

/// Every diagram with up to max_chords chords (up to rotation and
/// reflection), every sink/source orbit of Coxeter-type orderings, and the
/// Lehmer gate on each orbit's monodromy polynomial. A gate failure throws.
inline ScanResult lehmer_scan(int max_chords, long double gate_tol = kGateTolerance,
                              std::size_t budget = kDefaultOrientationBudget, int cap = kScanCap) {
  if (max_chords < 1) throw ValidationError("lehmer scan needs at least one chord");
  if (max_chords > cap)
    throw ValidationError("lehmer scan is capped at " + std::to_string(cap) + " chords");
  ScanResult out;
  std::map<std::vector<Integer>, GateResult> cache;
  for (int n = 1; n <= max_chords; ++n) {
    ScanRow row;
    row.chords = n;
    for (const ChordDiagram& d : matchings::all_up_to_dihedral(n)) {
      ++row.diagrams;
      const OrderingsResult o = coxeter_orderings(d, budget);
      out.complete = out.complete && o.complete;
      row.relations += o.coxeter_type;
      for (const CoxeterOrbit& orbit : o.orbits) {
        ++row.orbits;
        const auto key = canonical_form(orbit.char_poly).coefficients();
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, lehmer_gate(orbit.char_poly, gate_tol)).first;
        const GateResult& g = it->second;
        if (g.verdict == GateVerdict::fail)
          throw TheoremViolation("Lehmer gate fails for " + orbit.char_poly.to_string() + " (measure " +
                                 std::to_string(static_cast<double>(g.measure)) + ")");
        if (g.verdict == GateVerdict::trivial) {
          ++row.trivial;
          continue;
        }
        ++row.pass;
        if (!row.min_measure || g.measure < *row.min_measure - 1e-12L) row.min_measure = g.measure;
        if (!out.min_measure || g.measure < *out.min_measure - 1e-12L) {
          out.min_measure = g.measure;
          out.witness = orbit.representative;
          out.witness_poly = orbit.char_poly;
        }
      }
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace coxlink

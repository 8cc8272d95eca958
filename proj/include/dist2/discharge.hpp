#pragma once

#include <string>
#include <vector>

#include "dist2/configurations.hpp"
#include "dist2/graph.hpp"
#include "dist2/rational.hpp"
#include "dist2/sponsors.hpp"

namespace dist2 {

// One of the two supported charging regimes.  Only the two canonical
// parameter sets exist; obtain them through A() / B().
class Regime {
 public:
  RegimeLabel label;
  Rational mad_bound;  // audited graphs are expected to satisfy mad < mad_bound
  int delta_min;       // smallest maximum degree covered by the case analysis
  long long mu_slope;  // initial charge mu(v) = mu_slope * d(v) - mu_offset
  long long mu_offset;

  Rational initial_charge_of(int degree) const {
    return Rational(mu_slope * degree - mu_offset);
  }

  // every amount the rule set can move in this regime
  const std::vector<Rational>& allowed_amounts() const;

  static const Regime& A();
  static const Regime& B();
  static const Regime& by_label(RegimeLabel label);
  static const Regime& by_name(const std::string& name);  // "A" or "B"

 private:
  Regime(RegimeLabel l, Rational bound, int dmin, long long slope,
         long long offset)
      : label(l),
        mad_bound(bound),
        delta_min(dmin),
        mu_slope(slope),
        mu_offset(offset) {}
};

const char* regime_label_name(RegimeLabel label);  // "A" / "B"

// One logged charge movement.  Rule ids: regime A uses R0, R1i, R1ii, R2,
// R3i, R3ii; regime B uses R0, R1i, R1ii, R2i, R2ii, R3i, R3ii, R3iii, R3iv.
struct Transfer {
  std::string rule;
  int from = -1;
  int to = -1;
  Rational amount;
};

struct ChargeState {
  std::vector<Rational> initial;  // mu(v), before any transfer
  std::vector<Rational> charge;   // charge after all logged transfers
  std::vector<Transfer> transfers;

  Rational total_initial() const;
  Rational total_final() const;
};

// mu(v) per vertex, empty transfer log.
ChargeState initial_charge(const Graph& g, const Regime& regime);

// Runs the regime's full rule set with declared maximum degree D and the
// given sponsorship.  All firings are determined from (g, D, sponsors) in one
// pass before any charge moves, so no rule observes another rule's effect.
//
// Mechanical totality on arbitrary inputs: "D-vertex" predicates test
// degree == D exactly; a 2-path absent from the sponsorship table has no
// sponsor (both endpoints pay the non-sponsor amount); a 1-path endpoint
// signature counts walked chain lengths whether or not the chains end at
// branch vertices.  Each (rule, from, to) fires at most once per witnessing
// path or edge.
ChargeState apply_rules(const Graph& g, const Regime& regime, int D,
                        const SponsorAssignment& sponsors);

struct NegativeVertex {
  int vertex = -1;
  Rational charge;
};

// Outcome of a full audit: exact sums, per-vertex negatives, configurations
// found, plus two disjoint kinds of commentary.  `notes` records hypothesis
// failures of the *input* (declared degree mismatch, sparse bound violated,
// 2-regular components); `contradiction_flags` records events the theory
// rules out outright, so a non-empty list means the implementation is wrong.
struct AuditReport {
  RegimeLabel regime;
  int declared_delta = 0;
  int observed_delta = 0;
  Rational mad;
  bool mad_within_bound = false;
  Rational sum_initial;
  Rational sum_final;
  bool sum_initial_negative = false;
  bool conservation_ok = false;
  std::vector<NegativeVertex> negative_vertices;  // final charge < 0
  std::vector<Configuration> configurations;
  std::vector<std::string> contradiction_flags;
  std::vector<std::string> notes;
  ChargeState state;
};

// Audits g under the regime: initial charges, rule execution with a
// best-effort sponsorship, configuration detection, exact mad, conservation.
// Never throws on structural grounds; anomalies land in notes/flags.
AuditReport audit(const Graph& g, const Regime& regime, int D);

}  // namespace dist2

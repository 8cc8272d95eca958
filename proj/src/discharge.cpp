#include "dist2/discharge.hpp"

#include <algorithm>
#include <stdexcept>

#include "dist2/analysis.hpp"
#include "dist2/paths.hpp"

namespace dist2 {

const Regime& Regime::A() {
  static const Regime r(RegimeLabel::A, Rational(8, 3), 6, 3, 8);
  return r;
}

const Regime& Regime::B() {
  static const Regime r(RegimeLabel::B, Rational(14, 5), 10, 5, 14);
  return r;
}

const Regime& Regime::by_label(RegimeLabel label) {
  return label == RegimeLabel::A ? A() : B();
}

const Regime& Regime::by_name(const std::string& name) {
  if (name == "A" || name == "a") return A();
  if (name == "B" || name == "b") return B();
  throw std::invalid_argument("unknown regime \"" + name + "\" (expected A or B)");
}

const std::vector<Rational>& Regime::allowed_amounts() const {
  static const std::vector<Rational> a = {Rational(1), Rational(3, 2),
                                          Rational(2), Rational(1, 2)};
  static const std::vector<Rational> b = {
      Rational(2), Rational(7, 2), Rational(4),      Rational(1, 2),
      Rational(1), Rational(3),    Rational(3, 2),   Rational(2, 3)};
  return label == RegimeLabel::A ? a : b;
}

const char* regime_label_name(RegimeLabel label) {
  return label == RegimeLabel::A ? "A" : "B";
}

Rational ChargeState::total_initial() const {
  Rational s;
  for (const Rational& c : initial) s = s + c;
  return s;
}

Rational ChargeState::total_final() const {
  Rational s;
  for (const Rational& c : charge) s = s + c;
  return s;
}

ChargeState initial_charge(const Graph& g, const Regime& regime) {
  ChargeState st;
  st.initial.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    st.initial.push_back(regime.initial_charge_of(g.degree(v)));
  st.charge = st.initial;
  return st;
}

namespace {

// 3-vertex whose three incident chains are genuine 1-paths (each far end a
// branch vertex)
bool is_triple_one(const Graph& g, int v) {
  if (g.degree(v) != 3) return false;
  for (const IncidentPath& p : incident_paths(g, v))
    if (p.k != 1 || !p.far_branch) return false;
  return true;
}

}  // namespace

ChargeState apply_rules(const Graph& g, const Regime& regime, int D,
                        const SponsorAssignment& sponsors) {
  ChargeState st = initial_charge(g, regime);
  const bool b = regime.label == RegimeLabel::B;
  const PathDecomposition dec = classify_paths(g);

  auto give = [&st](const char* rule, int from, int to, Rational amount) {
    st.transfers.push_back(Transfer{rule, from, to, amount});
  };

  const Rational r0_amt(b ? 2 : 1);
  const Rational r1_plain(b ? 7 : 3, 2);
  const Rational r1_sponsor(b ? 4 : 2);
  const Rational r1_half(1, 2);

  for (const KPath& p : dec.paths) {
    if (p.k() == 1) {
      // R0 fires from both branch ends of every 1-path
      give("R0", p.u, p.internals[0], r0_amt);
      give("R0", p.v, p.internals[0], r0_amt);
    } else if (p.k() == 2) {
      // R1 fires once per incidence; loops have no sponsor and pay the
      // plain amount from both incidences
      int sponsor = -1;
      if (const TwoPathSponsorEntry* e = sponsors.find_two_path(p.internals[0]))
        sponsor = e->sponsor;
      auto incidence = [&](int from, int near, int far_internal) {
        if (from == sponsor && !p.loop) {
          give("R1ii", from, near, r1_sponsor);
          give("R1ii", from, far_internal, r1_half);
        } else {
          give("R1i", from, near, r1_plain);
        }
      };
      incidence(p.u, p.internals[0], p.internals[1]);
      incidence(p.v, p.internals[1], p.internals[0]);
    }
  }

  // R2: direct adjacency to 3-vertices, windowed by the giver's degree
  for (const auto& [x, y] : g.edges()) {
    auto fire_r2 = [&](int giver, int recv) {
      if (g.degree(recv) != 3) return;
      int d = g.degree(giver);
      if (!b) {
        if (d >= 4) give("R2", giver, recv, Rational(1));
      } else {
        if (d >= 5 && d <= 7) give("R2i", giver, recv, Rational(1));
        if (d >= 8) give("R2ii", giver, recv, Rational(3));
      }
    };
    fire_r2(x, y);
    fire_r2(y, x);
  }

  // R3: along every 1-path, from each end toward the other
  for (const KPath& p : dec.paths) {
    if (p.k() != 1) continue;
    auto fire_r3 = [&](int u, int w) {
      int dw = g.degree(w);
      if (b && dw == 4 && g.degree(u) >= 9) give("R3iv", u, w, Rational(2, 3));
      if (g.degree(u) != D || dw != 3) return;
      if (is_triple_one(g, w)) {
        if (sponsors.sponsors_triple(u, w))
          give("R3i", u, w, Rational(b ? 2 : 1));
        else if (b)
          give("R3ii", u, w, Rational(1));
        return;
      }
      VertexSignature sig = vertex_signature(g, w);
      bool one_one_zero = sig.ks == std::vector<int>{1, 1, 0};
      bool one_zero_zero = sig.ks == std::vector<int>{1, 0, 0};
      if (!b && one_one_zero) give("R3ii", u, w, Rational(1, 2));
      if (b && (one_one_zero || one_zero_zero))
        give("R3iii", u, w, Rational(3, 2));
    };
    fire_r3(p.u, p.v);
    fire_r3(p.v, p.u);
  }

  for (const Transfer& t : st.transfers) {
    st.charge[t.from] = st.charge[t.from] - t.amount;
    st.charge[t.to] = st.charge[t.to] + t.amount;
  }
  return st;
}

AuditReport audit(const Graph& g, const Regime& regime, int D) {
  AuditReport rep;
  rep.regime = regime.label;
  rep.declared_delta = D;
  rep.observed_delta = g.max_degree();

  SponsorAssignment sp = build_sponsorship_lenient(g, D);
  rep.state = apply_rules(g, regime, D, sp);
  rep.sum_initial = rep.state.total_initial();
  rep.sum_final = rep.state.total_final();
  rep.sum_initial_negative = rep.sum_initial < Rational(0);

  // replay the log independently of apply_rules' own bookkeeping
  std::vector<Rational> replay = rep.state.initial;
  bool amounts_ok = true;
  const std::vector<Rational>& allowed = regime.allowed_amounts();
  for (const Transfer& t : rep.state.transfers) {
    replay[t.from] = replay[t.from] - t.amount;
    replay[t.to] = replay[t.to] + t.amount;
    if (std::find(allowed.begin(), allowed.end(), t.amount) == allowed.end())
      amounts_ok = false;
  }
  rep.conservation_ok =
      replay == rep.state.charge && rep.sum_final == rep.sum_initial;

  for (int v = 0; v < g.vertex_count(); ++v)
    if (rep.state.charge[v] < Rational(0))
      rep.negative_vertices.push_back(NegativeVertex{v, rep.state.charge[v]});

  std::vector<char> alive(g.vertex_count(), 1);
  rep.configurations =
      find_configurations(g, regime.label, D, alive, /*check_pre=*/false);

  rep.mad = mad_exact(g);
  rep.mad_within_bound = rep.mad < regime.mad_bound;

  const PathDecomposition dec = classify_paths(g);
  if (rep.observed_delta != D)
    rep.notes.push_back("declared maximum degree " + std::to_string(D) +
                        " differs from observed maximum degree " +
                        std::to_string(rep.observed_delta));
  if (D < regime.delta_min)
    rep.notes.push_back("declared maximum degree " + std::to_string(D) +
                        " is below the regime minimum " +
                        std::to_string(regime.delta_min));
  if (!rep.mad_within_bound)
    rep.notes.push_back("mad " + rep.mad.str() + " is not below the regime bound " +
                        regime.mad_bound.str());
  if (!dec.bare_cycles.empty())
    rep.notes.push_back(std::to_string(dec.bare_cycles.size()) +
                        " two-regular component(s) present; their vertices "
                        "receive no transfers");

  if (!rep.conservation_ok)
    rep.contradiction_flags.push_back(
        "charge conservation violated: transfer log does not reproduce the "
        "final charges or the total changed");
  if (!amounts_ok)
    rep.contradiction_flags.push_back(
        "a transfer amount lies outside the regime's rule constants");
  if (g.vertex_count() > 0 && rep.mad_within_bound && !rep.sum_initial_negative)
    rep.contradiction_flags.push_back(
        "mad is below the bound but the total initial charge " +
        rep.sum_initial.str() + " is non-negative");
  if (rep.configurations.empty() && dec.bare_cycles.empty() &&
      rep.observed_delta == D && D >= regime.delta_min &&
      !rep.negative_vertices.empty())
    rep.contradiction_flags.push_back(
        "vertex " + std::to_string(rep.negative_vertices.front().vertex) +
        " has negative final charge " +
        rep.negative_vertices.front().charge.str() +
        " in a configuration-free graph meeting the degree hypothesis");

  return rep;
}

}  // namespace dist2

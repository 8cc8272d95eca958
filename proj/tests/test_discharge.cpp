#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "dist2/analysis.hpp"
#include "dist2/discharge.hpp"
#include "dist2/generators.hpp"
#include "dist2/graph.hpp"
#include "dist2/sponsors.hpp"
#include "fixtures.hpp"

using namespace dist2;
using fixtures::Builder;

namespace {

bool has_transfer(const ChargeState& st, const std::string& rule, int from, int to,
                  const Rational& amount) {
  for (const Transfer& t : st.transfers)
    if (t.rule == rule && t.from == from && t.to == to && t.amount == amount) return true;
  return false;
}

Rational received(const ChargeState& st, int v) {
  Rational r(0);
  for (const Transfer& t : st.transfers)
    if (t.to == v) r += t.amount;
  return r;
}

}  // namespace

TEST_CASE("regime constants") {
  const Regime& a = Regime::A();
  CHECK(a.mad_bound == Rational(8, 3));
  CHECK(a.delta_min == 6);
  CHECK(a.initial_charge_of(2) == Rational(-2));
  CHECK(a.initial_charge_of(3) == Rational(1));
  CHECK(a.initial_charge_of(6) == Rational(10));

  const Regime& b = Regime::B();
  CHECK(b.mad_bound == Rational(14, 5));
  CHECK(b.delta_min == 10);
  CHECK(b.initial_charge_of(2) == Rational(-4));
  CHECK(b.initial_charge_of(3) == Rational(1));
  CHECK(b.initial_charge_of(10) == Rational(36));

  CHECK(&Regime::by_name("A") == &a);
  CHECK(&Regime::by_name("B") == &b);
  CHECK_THROWS_AS(Regime::by_name("C"), std::invalid_argument);

  auto contains = [](const std::vector<Rational>& v, const Rational& r) {
    return std::find(v.begin(), v.end(), r) != v.end();
  };
  for (Rational r : {Rational(1), Rational(3, 2), Rational(2), Rational(1, 2)})
    CHECK(contains(a.allowed_amounts(), r));
  for (Rational r : {Rational(2), Rational(7, 2), Rational(4), Rational(1, 2), Rational(1),
                     Rational(3), Rational(3, 2), Rational(2, 3)})
    CHECK(contains(b.allowed_amounts(), r));
  CHECK_FALSE(contains(a.allowed_amounts(), Rational(4)));
}

TEST_CASE("initial charge sum is an exact arithmetic identity") {
  // sum mu = slope*2m - offset*n, so mad < bound forces a negative sum
  Graph g = random_sparse(25, Rational(8, 3), 6, 3);
  ChargeState st = initial_charge(g, Regime::A());
  CHECK(st.total_initial() ==
        Rational(3 * 2 * g.edge_count() - 8 * g.vertex_count()));
  CHECK(st.total_initial() < Rational(0));
}

// ---- the hand-checked local balances ----------------------------------

namespace {

// D-vertices u, v joined by a 1-path; returns charge state and internal id
struct OnePathCase {
  Graph g;
  int u, v, mid;
  ChargeState st;
};

OnePathCase one_path_case(const Regime& regime, int D) {
  Builder b;
  int u = b.vertex();
  int v = b.vertex();
  auto mid = b.chain(u, v, 1);
  b.pad(u, D, D - 1);
  b.pad(v, D, D - 1);
  Graph g = b.build();
  ChargeState st = apply_rules(g, regime, D, build_sponsorship(g, D));
  return {g, u, v, mid[0], st};
}

}  // namespace

TEST_CASE("1-path internal vertex ends at exactly zero in both regimes") {
  {
    OnePathCase c = one_path_case(Regime::A(), 6);
    CHECK(c.st.initial[(size_t)c.mid] == Rational(-2));
    CHECK(has_transfer(c.st, "R0", c.u, c.mid, Rational(1)));
    CHECK(has_transfer(c.st, "R0", c.v, c.mid, Rational(1)));
    CHECK(c.st.charge[(size_t)c.mid] == Rational(0));
  }
  {
    OnePathCase c = one_path_case(Regime::B(), 10);
    CHECK(c.st.initial[(size_t)c.mid] == Rational(-4));
    CHECK(has_transfer(c.st, "R0", c.u, c.mid, Rational(2)));
    CHECK(has_transfer(c.st, "R0", c.v, c.mid, Rational(2)));
    CHECK(c.st.charge[(size_t)c.mid] == Rational(0));
  }
}

TEST_CASE("2-path internals end at exactly zero under a hand-picked sponsor") {
  auto run = [](const Regime& regime, int D, const Rational& big, const Rational& plain) {
    Builder b;
    int u = b.vertex();
    int v = b.vertex();
    auto mid = b.chain(u, v, 2);
    b.pad(u, D, D - 1);
    b.pad(v, D, D - 1);
    Graph g = b.build();

    SponsorAssignment sp;
    sp.D = D;
    sp.two_path_roots = {u};
    sp.two_paths.push_back({u, mid[0], mid[1], v, /*sponsor=*/u, 0});
    ChargeState st = apply_rules(g, regime, D, sp);

    // sponsor u pays `big` to its adjacent internal and 1/2 to the far one;
    // non-sponsor v pays `plain` to its adjacent internal
    CHECK(has_transfer(st, "R1ii", u, mid[0], big));
    CHECK(has_transfer(st, "R1ii", u, mid[1], Rational(1, 2)));
    CHECK(has_transfer(st, "R1i", v, mid[1], plain));
    CHECK(st.charge[(size_t)mid[0]] == Rational(0));
    CHECK(st.charge[(size_t)mid[1]] == Rational(0));
  };
  run(Regime::A(), 6, Rational(2), Rational(3, 2));
  run(Regime::B(), 10, Rational(4), Rational(7, 2));
}

TEST_CASE("2-path internals also balance under the elected sponsorship") {
  for (auto [label, D] : {std::pair{RegimeLabel::A, 6}, std::pair{RegimeLabel::B, 10}}) {
    const Regime& regime = Regime::by_label(label);
    Builder b;
    int u = b.vertex();
    int v = b.vertex();
    auto mid = b.chain(u, v, 2);
    b.pad(u, D, D - 1);
    b.pad(v, D, D - 1);
    Graph g = b.build();
    ChargeState st = apply_rules(g, regime, D, build_sponsorship(g, D));
    CHECK(st.charge[(size_t)mid[0]] == Rational(0));
    CHECK(st.charge[(size_t)mid[1]] == Rational(0));
  }
}

TEST_CASE("sponsored (1,1,1)-vertex ends at exactly zero in both regimes") {
  auto build_triple = [](int D) {
    Builder b;
    int x = b.vertex(), y = b.vertex(), z = b.vertex();
    int w = b.vertex();
    b.chain(w, x, 1);
    b.chain(w, y, 1);
    b.chain(w, z, 1);
    b.pad(x, D, D - 1);
    b.pad(y, D, D - 1);
    b.pad(z, D, D - 1);
    return std::tuple{b.build(), x, y, z, w};
  };

  {
    // regime A: mu(w) = 1, pays 3x R0, receives 1 from each of two sponsors
    auto [g, x, y, z, w] = build_triple(6);
    SponsorAssignment sp;
    sp.D = 6;
    sp.triple_roots = {x};
    sp.triples.push_back({w, /*root_side=*/x, /*sponsors=*/y, z, 0});
    ChargeState st = apply_rules(g, Regime::A(), 6, sp);
    CHECK(st.initial[(size_t)w] == Rational(1));
    CHECK(has_transfer(st, "R3i", y, w, Rational(1)));
    CHECK(has_transfer(st, "R3i", z, w, Rational(1)));
    CHECK(received(st, w) == Rational(2));  // the root side pays nothing in A
    CHECK(st.charge[(size_t)w] == Rational(0));
  }
  {
    // regime B: 1 - 3*2 + 2*2 + 1 = 0; the root side pays R3ii instead
    auto [g, x, y, z, w] = build_triple(10);
    SponsorAssignment sp;
    sp.D = 10;
    sp.triple_roots = {x};
    sp.triples.push_back({w, x, y, z, 0});
    ChargeState st = apply_rules(g, Regime::B(), 10, sp);
    CHECK(st.initial[(size_t)w] == Rational(1));
    CHECK(has_transfer(st, "R3i", y, w, Rational(2)));
    CHECK(has_transfer(st, "R3i", z, w, Rational(2)));
    CHECK(has_transfer(st, "R3ii", x, w, Rational(1)));
    CHECK(st.charge[(size_t)w] == Rational(0));
  }
}

TEST_CASE("degree rules: big vertices feed 3-vertices") {
  // regime A: a >=4-vertex gives 1 to each adjacent 3-vertex
  {
    Builder b;
    int u = b.vertex();
    int w = b.vertex();
    b.edge(u, w);
    b.pad(u, 4, 3);  // degree 4
    b.pad(w, 4, 2);  // degree 3
    ChargeState st = apply_rules(b.build(), Regime::A(), 6, SponsorAssignment{});
    CHECK(has_transfer(st, "R2", u, w, Rational(1)));
    CHECK_FALSE(has_transfer(st, "R2", w, u, Rational(1)));
  }
  // regime B: 5..7 gives 1, >=8 gives 3
  {
    Builder b;
    int w = b.vertex();
    int u5 = b.vertex();
    int u9 = b.vertex();
    b.edge(w, u5);
    b.edge(w, u9);
    b.pad(w, 4, 1);   // degree 3
    b.pad(u5, 6, 4);  // degree 5
    b.pad(u9, 9, 8);  // degree 9
    ChargeState st = apply_rules(b.build(), Regime::B(), 10, SponsorAssignment{});
    CHECK(has_transfer(st, "R2i", u5, w, Rational(1)));
    CHECK(has_transfer(st, "R2ii", u9, w, Rational(3)));
  }
}

TEST_CASE("1-path endpoint signatures gate the half and three-half payments") {
  // regime A: a D-vertex pays 1/2 to a far (1,1,0)-vertex, nothing to (1,0,0)
  auto build_far = [](int D, int ones) {
    // u (degree D) -- m -- w, where w has `ones` further 1-legs and the rest
    // direct edges to degree-4 anchors
    Builder b;
    int u = b.vertex();
    int w = b.vertex();
    auto m = b.chain(u, w, 1);
    b.pad(u, D, D - 1);
    for (int i = 0; i < ones; ++i) {
      int far = b.vertex();
      b.chain(w, far, 1);
      b.pad(far, D, D - 1);
    }
    for (int i = ones; i < 2; ++i) {
      int anchor = b.vertex();
      b.edge(w, anchor);
      b.pad(anchor, 4, 2);  // anchor degree 3: too small to pay w anything
    }
    (void)m;
    return std::tuple{b.build(), u, w};
  };
  {
    auto [g, u, w] = build_far(6, 1);  // w is a (1,1,0)-vertex
    ChargeState st = apply_rules(g, Regime::A(), 6, SponsorAssignment{});
    CHECK(has_transfer(st, "R3ii", u, w, Rational(1, 2)));
  }
  {
    auto [g, u, w] = build_far(6, 0);  // w is a (1,0,0)-vertex: no payment in A
    ChargeState st = apply_rules(g, Regime::A(), 6, SponsorAssignment{});
    CHECK(received(st, w) == Rational(0));
  }
  // regime B pays 3/2 in both signatures
  {
    auto [g, u, w] = build_far(10, 1);
    ChargeState st = apply_rules(g, Regime::B(), 10, SponsorAssignment{});
    CHECK(has_transfer(st, "R3iii", u, w, Rational(3, 2)));
  }
  {
    auto [g, u, w] = build_far(10, 0);
    ChargeState st = apply_rules(g, Regime::B(), 10, SponsorAssignment{});
    CHECK(has_transfer(st, "R3iii", u, w, Rational(3, 2)));
  }
}

TEST_CASE("regime B: 9+-vertices pay 2/3 to far 4-vertices across 1-paths") {
  Builder b;
  int u = b.vertex();
  int w = b.vertex();
  b.chain(u, w, 1);
  b.pad(u, 9, 8);  // degree 9
  b.pad(w, 4, 3);  // degree 4 with the path edge
  Graph g = b.build();
  REQUIRE(g.degree(u) == 9);
  REQUIRE(g.degree(w) == 4);
  ChargeState st = apply_rules(g, Regime::B(), 10, SponsorAssignment{});
  CHECK(has_transfer(st, "R3iv", u, w, Rational(2, 3)));
}

TEST_CASE("transfers conserve charge and stay within the amount set") {
  for (auto [label, dt, cap] :
       {std::tuple{RegimeLabel::A, 6, Rational(8, 3)},
        std::tuple{RegimeLabel::B, 10, Rational(14, 5)}}) {
    const Regime& regime = Regime::by_label(label);
    for (unsigned long long seed = 1; seed <= 25; ++seed) {
      Graph g = random_sparse(24 + (int)(seed % 30), cap, dt, seed * 13);
      ChargeState st = apply_rules(g, regime, g.max_degree(),
                                   build_sponsorship_lenient(g, g.max_degree()));
      CHECK(st.total_initial() == st.total_final());
      const auto& amounts = regime.allowed_amounts();
      for (const Transfer& t : st.transfers) {
        bool ok = std::find(amounts.begin(), amounts.end(), t.amount) != amounts.end();
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("apply_rules is deterministic") {
  Graph g = random_sparse(40, Rational(8, 3), 7, 99);
  SponsorAssignment sp = build_sponsorship_lenient(g, g.max_degree());
  ChargeState a = apply_rules(g, Regime::A(), g.max_degree(), sp);
  ChargeState b = apply_rules(g, Regime::A(), g.max_degree(), sp);
  REQUIRE(a.transfers.size() == b.transfers.size());
  for (size_t i = 0; i < a.transfers.size(); ++i) {
    CHECK(a.transfers[i].rule == b.transfers[i].rule);
    CHECK(a.transfers[i].from == b.transfers[i].from);
    CHECK(a.transfers[i].to == b.transfers[i].to);
    CHECK(a.transfers[i].amount == b.transfers[i].amount);
  }
}

TEST_CASE("audit on in-regime instances: conserved, negative sum, no flags") {
  for (auto [label, dt, cap] :
       {std::tuple{RegimeLabel::A, 6, Rational(8, 3)},
        std::tuple{RegimeLabel::B, 11, Rational(14, 5)}}) {
    const Regime& regime = Regime::by_label(label);
    for (unsigned long long seed = 1; seed <= 15; ++seed) {
      Graph g = random_sparse(30 + (int)(seed % 25), cap, dt, seed * 7 + 1);
      AuditReport rep = audit(g, regime, g.max_degree());
      INFO("regime ", regime_label_name(label), " seed ", seed);
      CHECK(rep.conservation_ok);
      CHECK(rep.mad_within_bound);
      CHECK(rep.sum_initial_negative);
      CHECK(rep.sum_initial == rep.sum_final);
      CHECK_FALSE(rep.configurations.empty());
      CHECK(rep.contradiction_flags.empty());
      CHECK(rep.notes.empty());
    }
  }
}

TEST_CASE("audit flags nothing on out-of-regime inputs, but notes them") {
  // Petersen: mad 3 >= 8/3, no configurations; positive total charge
  AuditReport rep = audit(moore_3_2(), Regime::A(), 3);
  CHECK(rep.configurations.empty());
  CHECK_FALSE(rep.mad_within_bound);
  CHECK_FALSE(rep.sum_initial_negative);
  CHECK(rep.conservation_ok);
  CHECK(rep.contradiction_flags.empty());
  CHECK_FALSE(rep.notes.empty());  // max degree below the regime minimum, mad
  CHECK(rep.sum_initial == Rational(10));

  // extremal girth-3 construction: dense, configuration-free, all charges
  // stay nonnegative after the rules
  AuditReport wr = audit(wegner_girth3(8), Regime::A(), 8);
  CHECK(wr.configurations.empty());
  CHECK(wr.contradiction_flags.empty());
  CHECK_FALSE(wr.mad_within_bound);
  CHECK(wr.sum_initial == Rational(26));
  CHECK(wr.negative_vertices.empty());
  CHECK(wr.sum_initial == wr.sum_final);
}

TEST_CASE("audit notes 2-regular components") {
  Builder b;
  auto k6 = b.clique(6);
  (void)k6;
  int c0 = b.vertex(), c1 = b.vertex(), c2 = b.vertex(), c3 = b.vertex(), c4 = b.vertex();
  b.edge(c0, c1);
  b.edge(c1, c2);
  b.edge(c2, c3);
  b.edge(c3, c4);
  b.edge(c4, c0);
  AuditReport rep = audit(b.build(), Regime::A(), 6);
  bool mentions_cycle = false;
  for (const std::string& n : rep.notes)
    if (n.find("two-regular") != std::string::npos) mentions_cycle = true;
  CHECK(mentions_cycle);
}

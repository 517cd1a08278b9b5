#include <string>
#include <vector>

#include "doctest.h"
#include "fuselift/errors.hpp"
#include "fuselift/inverse.hpp"

using namespace fuselift;

namespace {

// The level-two affine ring: L1 * L1 = L0 + L2, L2 an order-two current.
FusionRing level2() {
  FusionRing::Builder b;
  b.labels({"L0", "L1", "L2"}).unit("L0");
  b.dual("L0", "L0").dual("L1", "L1").dual("L2", "L2");
  b.weight("L0", QZ()).weight("L1", QZ::make(3, 16)).weight("L2", QZ::make(1, 2));
  const auto sym = [&](const std::string& x, const std::string& y, const std::string& z) {
    b.rule(x, y, z, 1);
    if (x != y) b.rule(y, x, z, 1);
  };
  sym("L0", "L0", "L0");
  sym("L0", "L1", "L1");
  sym("L0", "L2", "L2");
  sym("L1", "L1", "L0");
  b.rule("L1", "L1", "L2", 1);
  sym("L1", "L2", "L1");
  sym("L2", "L2", "L0");
  return b.build();
}

QuadraticSpace z4_space() {
  GroupPtr g = FinAbGroup::make({4});
  std::vector<QZ> q;
  for (long r = 0; r < 4; ++r) q.push_back(QZ::make(r * r, 8));
  return QuadraticSpace::make(g, q);
}

InverseProblem level2_problem(long lambda1 = 1) {
  QuadraticSpace v = z4_space();
  GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {g->element({2})});
  FusionRing u = level2();
  SimpleCurrentGrading grading{Subgroup::generate(g, {g->element({2})}),
                               {u.index_of("L0"), u.index_of("L2")}};
  return InverseProblem::validate(
      std::move(u), std::move(v), std::move(d), std::move(grading),
      {{"L0", g->element({0})}, {"L1", g->element({lambda1})}});
}

InverseProblem z4ring_problem(std::string key = "V[1]", long lambda1 = 1) {
  QuadraticSpace v = z4_space();
  GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {g->element({2})});
  FusionRing u = group_ring(
      g, [](const GroupElement& e) { return QZ::make(e.coords()[0] * e.coords()[0], 8); });
  SimpleCurrentGrading grading{d, {u.index_of("V[0]"), u.index_of("V[2]")}};
  return InverseProblem::validate(
      std::move(u), std::move(v), std::move(d), std::move(grading),
      {{"V[0]", g->element({0})}, {std::move(key), g->element({lambda1})}});
}

bool same_ring(const FusionRing& a, const FusionRing& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a.label(i) != b.label(i) || a.weight(i) != b.weight(i) || a.dual(i) != b.dual(i))
      return false;
    for (int j = 0; j < a.size(); ++j)
      for (int k = 0; k < a.size(); ++k)
        if (a.mult(i, j, k) != b.mult(i, j, k)) return false;
  }
  return a.unit() == b.unit();
}

}  // namespace

TEST_CASE("validation anchors orbits at the branching keys") {
  InverseProblem ip = level2_problem();
  const GroupPtr g = ip.v_space().group();

  CHECK(ip.d().str() == "{0,2}");
  CHECK(ip.d_perp().str() == "{0,2}");
  REQUIRE(ip.orbits().count() == 2);
  CHECK(ip.orbits().rep[0] == ip.u_ring().index_of("L0"));
  CHECK(ip.orbits().rep[1] == ip.u_ring().index_of("L1"));
  CHECK(ip.orbits().members[0] == std::vector<int>{0, 2});
  CHECK(ip.orbits().members[1] == std::vector<int>{1});
  CHECK(ip.orbits().stab[1].str() == "{0,2}");
  CHECK(ip.orbits().beta_of[ip.u_ring().index_of("L2")] == g->element({2}));
  CHECK(ip.lambda()[0] == g->element({0}));
  CHECK(ip.lambda()[1] == g->element({1}));
}

TEST_CASE("the level-two ring splits into the three-label ring") {
  DerivedRing d = derive_commutant_ring(level2_problem());

  REQUIRE(d.ring.size() == 3);
  CHECK(d.ring.label(0) == "X(0,0)");
  CHECK(d.ring.label(1) == "X(0,2)");
  CHECK(d.ring.label(2) == "X(1,1)");
  CHECK(d.ring.unit() == 0);
  CHECK(d.ring.weight(0) == QZ());
  CHECK(d.ring.weight(1) == QZ::make(1, 2));
  CHECK(d.ring.weight(2) == QZ::make(1, 16));

  // X(1,1) * X(1,1) = X(0,0) + X(0,2), the sigma-like relation
  CHECK(d.ring.mult(2, 2, 0) == 1);
  CHECK(d.ring.mult(2, 2, 1) == 1);
  CHECK(d.ring.mult(2, 2, 2) == 0);
  CHECK(d.ring.mult(1, 1, 0) == 1);
  CHECK(d.ring.mult(1, 2, 2) == 1);
  CHECK(d.ring.validate().ok());

  CHECK(d.coords[2].first == 1);
  CHECK(d.coords[2].second.index() == 1);
  CHECK(d.grading.domain.str() == "{0,2}");
  CHECK(d.grading.assign == std::vector<int>{0, 1});
}

TEST_CASE("base charges are only meaningful modulo the subgroup") {
  // lambda = 1 and lambda = 3 describe the same charge coset 1 + D
  CHECK(same_ring(derive_commutant_ring(level2_problem(1)).ring,
                  derive_commutant_ring(level2_problem(3)).ring));
}

TEST_CASE("a group ring splits into the doubled two-torsion ring") {
  DerivedRing d = derive_commutant_ring(z4ring_problem());

  REQUIRE(d.ring.size() == 4);
  CHECK(d.ring.label(0) == "X(0,0)");
  CHECK(d.ring.label(1) == "X(0,2)");
  CHECK(d.ring.label(2) == "X(1,1)");
  CHECK(d.ring.label(3) == "X(1,3)");
  CHECK(d.ring.weight(1) == QZ::make(1, 2));
  CHECK(d.ring.weight(2) == QZ());
  CHECK(d.ring.weight(3) == QZ());

  // every non-unit label squares to the unit: the two-torsion group ring
  for (int x = 0; x < 4; ++x) CHECK(d.ring.mult(x, x, 0) == 1);
  CHECK(d.ring.mult(1, 2, 3) == 1);
  CHECK(d.ring.mult(2, 3, 1) == 1);
}

TEST_CASE("re-keying an orbit at a translated representative is harmless") {
  // V[3] = U^2 . V[1], so the key (V[3], 3) describes the same branching
  CHECK(same_ring(derive_commutant_ring(z4ring_problem("V[1]", 1)).ring,
                  derive_commutant_ring(z4ring_problem("V[3]", 3)).ring));
}

TEST_CASE("round trips rebuild the original ring up to relabeling") {
  {
    const RoundTrip rt = round_trip(level2_problem());
    const FusionRing u = level2();
    REQUIRE(rt.rebuilt.size() == 3);
    REQUIRE(rt.iso.size() == 3);
    CHECK(rt.iso[rt.rebuilt.unit()] == u.unit());
    for (int x = 0; x < 3; ++x) CHECK(rt.rebuilt.weight(x) == u.weight(rt.iso[x]));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          CHECK(rt.rebuilt.mult(a, b, c) == u.mult(rt.iso[a], rt.iso[b], rt.iso[c]));
  }
  {
    // the two-torsion derived ring regains the order-four current on rebuild
    const RoundTrip rt = round_trip(z4ring_problem());
    REQUIRE(rt.rebuilt.size() == 4);
    bool has_order_four = false;
    for (int x = 0; x < 4; ++x) {
      if (!rt.rebuilt.is_simple_current(x)) continue;
      const int sq = rt.rebuilt.apply_current(x, x);
      if (sq != rt.rebuilt.unit()) has_order_four = true;
    }
    CHECK(has_order_four);
  }
}

TEST_CASE("validation rejects malformed branching data") {
  QuadraticSpace v = z4_space();
  GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {g->element({2})});
  FusionRing u = level2();
  SimpleCurrentGrading grading{d, {u.index_of("L0"), u.index_of("L2")}};
  using Branch = std::vector<std::pair<std::string, GroupElement>>;

  CHECK_THROWS_WITH_AS(
      InverseProblem::validate(u, v, d, grading, Branch{{"L0", g->element({0})}}),
      doctest::Contains("misses the orbit"), DomainError);
  CHECK_THROWS_WITH_AS(
      InverseProblem::validate(u, v, d, grading,
                               Branch{{"L0", g->element({0})},
                                      {"L2", g->element({0})},
                                      {"L1", g->element({1})}}),
      doctest::Contains("twice"), DomainError);
  CHECK_THROWS_WITH_AS(
      InverseProblem::validate(u, v, d, grading,
                               Branch{{"L9", g->element({0})}, {"L1", g->element({1})}}),
      doctest::Contains("unknown label"), DomainError);
  CHECK_THROWS_WITH_AS(
      InverseProblem::validate(u, v, d, grading,
                               Branch{{"L2", g->element({0})}, {"L1", g->element({1})}}),
      doctest::Contains("keyed by the unit"), DomainError);
  CHECK_THROWS_WITH_AS(
      InverseProblem::validate(u, v, d, grading,
                               Branch{{"L0", g->element({1})}, {"L1", g->element({1})}}),
      doctest::Contains("base charge"), ValidationError);
}

TEST_CASE("validation rejects inconsistent gradings") {
  QuadraticSpace v = z4_space();
  GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {g->element({2})});
  FusionRing u = level2();
  using Branch = std::vector<std::pair<std::string, GroupElement>>;
  const Branch branch{{"L0", g->element({0})}, {"L1", g->element({1})}};

  // domain must be the orthogonal complement, computed from d
  CHECK_THROWS_WITH_AS(
      InverseProblem::validate(u, v, d,
                               SimpleCurrentGrading{Subgroup::trivial(g), {u.index_of("L0")}},
                               branch),
      doctest::Contains("orthogonal complement"), DomainError);

  // current weights must match the form on the complement
  {
    GroupPtr c8 = FinAbGroup::make({8});
    std::vector<QZ> q;
    for (long r = 0; r < 8; ++r) q.push_back(QZ::make(r * r, 16));
    QuadraticSpace v8 = QuadraticSpace::make(c8, q);
    Subgroup d8 = Subgroup::generate(c8, {c8->element({2})});
    Subgroup dp8 = v8.perp(d8);
    REQUIRE(dp8.str() == "{0,4}");
    CHECK_THROWS_WITH_AS(
        InverseProblem::validate(
            u, v8, d8, SimpleCurrentGrading{dp8, {u.index_of("L0"), u.index_of("L2")}},
            Branch{{"L0", c8->element({0})}, {"L1", c8->element({1})}}),
        doctest::Contains("expected q("), ValidationError);
  }

  // degenerate spaces are rejected before any orbit analysis
  {
    GroupPtr c2 = FinAbGroup::make({2});
    QuadraticSpace vdeg = QuadraticSpace::make(c2, {QZ(), QZ::make(1, 2)});
    Subgroup dd = Subgroup::trivial(c2);
    CHECK_THROWS_WITH_AS(
        InverseProblem::validate(u, vdeg, dd,
                                 SimpleCurrentGrading{Subgroup::full(c2), {0, 0}},
                                 Branch{{"L0", c2->element({0})}}),
        doctest::Contains("degenerate"), ValidationError);
  }
}

#include <string>
#include <vector>

#include "doctest.h"
#include "fuselift/errors.hpp"
#include "fuselift/extension.hpp"

using namespace fuselift;

namespace {

FusionRing ising_ring(QZ eps_weight = QZ::make(1, 2)) {
  FusionRing::Builder b;
  b.labels({"1", "eps", "sigma"});
  b.unit("1");
  b.dual("1", "1").dual("eps", "eps").dual("sigma", "sigma");
  b.weight("1", QZ()).weight("eps", eps_weight).weight("sigma", QZ::make(1, 16));
  const auto sym = [&](const std::string& x, const std::string& y, const std::string& z) {
    b.rule(x, y, z, 1);
    if (x != y) b.rule(y, x, z, 1);
  };
  sym("1", "1", "1");
  sym("1", "eps", "eps");
  sym("1", "sigma", "sigma");
  sym("eps", "eps", "1");
  sym("eps", "sigma", "sigma");
  sym("sigma", "sigma", "1");
  b.rule("sigma", "sigma", "eps", 1);
  return b.build();
}

QuadraticSpace z4_space() {
  GroupPtr g = FinAbGroup::make({4});
  std::vector<QZ> q;
  for (long r = 0; r < 4; ++r) q.push_back(QZ::make(r * r, 8));
  return QuadraticSpace::make(g, q);
}

ExtensionProblem ising_problem(QZ eps_weight = QZ::make(1, 2)) {
  QuadraticSpace v = z4_space();
  GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {g->element({2})});
  FusionRing w = ising_ring(eps_weight);
  SimpleCurrentGrading grading{d, {w.index_of("1"), w.index_of("eps")}};
  return ExtensionProblem::validate(std::move(w), std::move(v), std::move(d), std::move(grading));
}

template <typename E, typename F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  FAIL("expected exception was not thrown");
  return {};
}

}  // namespace

TEST_CASE("validated problem exposes complement, orbits and stabilizers") {
  ExtensionProblem p = ising_problem();
  const GroupPtr g = p.v_space().group();

  CHECK(p.d().str() == "{0,2}");
  CHECK(p.d_perp().str() == "{0,2}");

  REQUIRE(p.orbits().count() == 2);
  CHECK(p.orbits().rep[0] == p.w_ring().unit());
  CHECK(p.orbits().members[0] == std::vector<int>{0, 1});
  CHECK(p.orbits().members[1] == std::vector<int>{2});
  CHECK(p.orbits().stab[0].order() == 1);
  CHECK(p.orbits().stab[1].str() == "{0,2}");

  CHECK(p.orbits().orbit_of[p.w_ring().index_of("eps")] == 0);
  CHECK(p.orbits().beta_of[p.w_ring().index_of("eps")] == g->element({2}));
  CHECK(p.orbits().beta_of[p.w_ring().index_of("sigma")] == g->element({0}));

  CHECK(p.current_action(g->element({2}), p.w_ring().index_of("sigma")) ==
        p.w_ring().index_of("sigma"));
}

TEST_CASE("character values separate twisted from untwisted charges") {
  ExtensionProblem p = ising_problem();
  const GroupPtr g = p.v_space().group();
  const GroupElement two = g->element({2});

  // b(W^2, sigma) = weight(sigma) - weight(eps) - weight(sigma) = 1/2
  CHECK(p.b_w(two, p.w_ring().index_of("sigma")) == QZ::make(1, 2));
  CHECK(p.b_w(two, p.w_ring().unit()) == QZ());

  CHECK(p.xi_character(0, g->element({0})).is_principal());
  CHECK(p.xi_character(0, g->element({2})).is_principal());
  CHECK(p.xi_character(0, g->element({1})).value(two) == QZ::make(1, 2));
  CHECK(p.xi_character(1, g->element({1})).is_principal());
  CHECK(p.xi_character(1, g->element({0})).value(two) == QZ::make(1, 2));

  CHECK(p.eta_character(g->element({1})).value(two) == QZ::make(1, 2));
  CHECK(p.eta_character(g->element({2})).is_principal());

  CHECK(p.canonical_alpha(1, g->element({3})) == g->element({1}));
  CHECK(p.canonical_alpha(0, g->element({3})) == g->element({3}));
}

TEST_CASE("sector table groups charges by character with uniform block size") {
  ExtensionProblem p = ising_problem();
  const GroupPtr g = p.v_space().group();
  SectorTable table(p);

  REQUIRE(table.blocks().size() == 2);
  CHECK(table.untwisted().chi.is_principal());
  CHECK(table.per_character_count() == 3);

  const auto names = [](const SectorTable::Block& b) {
    std::vector<std::string> out;
    for (const auto& s : b.sectors) out.push_back(s.name);
    return out;
  };
  CHECK(names(table.blocks()[0]) == std::vector<std::string>{"(i0,0)", "(i0,2)", "(i1,1)"});
  CHECK(names(table.blocks()[1]) == std::vector<std::string>{"(i0,1)", "(i0,3)", "(i1,0)"});

  CHECK(table.at(0, g->element({0})).weight == QZ());
  CHECK(table.at(0, g->element({2})).weight == QZ::make(1, 2));
  CHECK(table.at(1, g->element({1})).weight == QZ::make(3, 16));
  CHECK(table.at(0, g->element({1})).weight == QZ::make(1, 8));
  CHECK(table.at(1, g->element({0})).weight == QZ::make(1, 16));

  // lookup canonicalizes modulo the stabilizer
  CHECK(table.at(1, g->element({3})).name == "(i1,1)");

  // summand list of a sector: (W^beta . rep, alpha + beta) over beta
  const Sector& s = table.at(1, g->element({1}));
  REQUIRE(s.decomposition.size() == 2);
  CHECK(s.decomposition[0].first == p.w_ring().index_of("sigma"));
  CHECK(s.decomposition[0].second == g->element({1}));
  CHECK(s.decomposition[1].first == p.w_ring().index_of("sigma"));
  CHECK(s.decomposition[1].second == g->element({3}));

  // the character class of a charge is its full coset of the complement
  for (int i = 0; i < 2; ++i)
    for (long a = 0; a < 4; ++a)
      CHECK(table.at(i, g->element({a})).chi == table.at(i, g->element({a + 2})).chi);
}

TEST_CASE("sector names resolve strictly") {
  ExtensionProblem p = ising_problem();
  SectorTable table(p);

  CHECK(table.by_name("(i1,1)", false).weight == QZ::make(3, 16));
  CHECK(table.by_name("(i0,1)", false).name == "(i0,1)");

  const auto non_canonical = message_of<DomainError>([&] { table.by_name("(i1,3)", false); });
  CHECK(non_canonical.find("(i1,1)") != std::string::npos);
  const auto out_of_range = message_of<DomainError>([&] { table.by_name("(i0,5)", false); });
  CHECK(out_of_range.find("(i0,1)") != std::string::npos);
  const auto twisted = message_of<DomainError>([&] { table.by_name("(i0,1)", true); });
  CHECK(twisted.find("twisted") != std::string::npos);

  CHECK_THROWS_AS(table.by_name("bogus", false), DomainError);
  CHECK_THROWS_AS(table.by_name("(i7,0)", false), DomainError);
  CHECK_THROWS_AS(table.by_name("(i0,x)", false), DomainError);
  CHECK_THROWS_AS(table.by_name("(i0,1,2)", false), DomainError);
}

TEST_CASE("sector fusion transports the graded multiplication") {
  ExtensionProblem p = ising_problem();
  const GroupPtr g = p.v_space().group();
  SectorTable table(p);

  const auto rules = fuse_sectors(p, table.at(1, g->element({1})), table.at(1, g->element({1})));
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].first.name == "(i0,0)");
  CHECK(rules[0].second == 1);
  CHECK(rules[1].first.name == "(i0,2)");
  CHECK(rules[1].second == 1);

  const auto shift = fuse_sectors(p, table.at(0, g->element({2})), table.at(1, g->element({1})));
  REQUIRE(shift.size() == 1);
  CHECK(shift[0].first.name == "(i1,1)");  // 1+2 = 3 ~ 1 modulo the stabilizer

  CHECK_THROWS_AS(fuse_sectors(p, table.at(0, g->element({1})), table.at(1, g->element({1}))),
                  DomainError);
}

TEST_CASE("the extended ring is the level-two affine ring") {
  ExtensionProblem p = ising_problem();
  FusionRing u = build_u_ring(p);

  REQUIRE(u.size() == 3);
  CHECK(u.label(0) == "(i0,0)");
  CHECK(u.label(1) == "(i0,2)");
  CHECK(u.label(2) == "(i1,1)");
  CHECK(u.unit() == 0);
  CHECK(u.weight(1) == QZ::make(1, 2));
  CHECK(u.weight(2) == QZ::make(3, 16));
  CHECK(u.mult(2, 2, 0) == 1);
  CHECK(u.mult(2, 2, 1) == 1);
  CHECK(u.mult(1, 2, 2) == 1);
  CHECK(u.mult(1, 1, 0) == 1);
  CHECK(u.dual(2) == 2);
  CHECK(u.validate().ok());
}

TEST_CASE("simple currents of the extension match the orbit prediction") {
  ExtensionProblem p = ising_problem();
  SectorTable table(p);
  FusionRing u = build_u_ring(p);
  const USimpleCurrents sc = simple_currents_u(p, table, u);

  CHECK(sc.currents == std::vector<std::string>{"(i0,0)", "(i0,2)"});
  REQUIRE(sc.canonical.size() == 2);
  CHECK(sc.canonical[0].second == "(i0,0)");
  CHECK(sc.canonical[1].first == p.v_space().group()->element({2}));
  CHECK(sc.canonical[1].second == "(i0,2)");
}

TEST_CASE("multiplicity transfer recovers each ring's constants from the other") {
  ExtensionProblem p = ising_problem();
  const GroupPtr g = p.v_space().group();
  const int s = p.w_ring().index_of("sigma");
  SectorTable table(p);

  // exhaustive sweep over labels and untwisted charge assignments: pulling a
  // constant across recovers exactly the other ring's ground truth
  const auto charges_of = [&](int x) {
    std::vector<long> out;
    const int i = p.orbits().orbit_of[x];
    const GroupElement beta = p.orbits().beta_of[x];
    for (long a = 0; a < 4; ++a)
      if (p.xi_character(i, g->element({a}) - beta).is_principal()) out.push_back(a);
    return out;
  };
  for (int x1 = 0; x1 < 3; ++x1)
    for (int x2 = 0; x2 < 3; ++x2)
      for (int x3 = 0; x3 < 3; ++x3)
        for (long a1 : charges_of(x1))
          for (long a2 : charges_of(x2))
            for (long a3 : charges_of(x3)) {
              const std::array<int, 3> x{x1, x2, x3};
              const std::array<GroupElement, 3> alpha{g->element({a1}), g->element({a2}),
                                                      g->element({a3})};
              std::array<const Sector*, 3> m{};
              for (int k = 0; k < 3; ++k)
                m[k] = &table.at(p.orbits().orbit_of[x[k]],
                                 alpha[k] - p.orbits().beta_of[x[k]]);
              long n_u = 0;
              for (const auto& [sec, n] : fuse_sectors(p, *m[0], *m[1]))
                if (sec.name == m[2]->name) n_u = n;
              CHECK(transfer_multiplicity(p, TransferDirection::UFromW, x, alpha) == n_u);
              CHECK(transfer_multiplicity(p, TransferDirection::WFromU, x, alpha) ==
                    p.w_ring().mult(x1, x2, x3));
            }

  // charges must place every argument in an untwisted sector
  CHECK_THROWS_AS(transfer_multiplicity(p, TransferDirection::UFromW, {s, s, p.w_ring().unit()},
                                        {g->element({0}), g->element({1}), g->element({1})}),
                  DomainError);
}

TEST_CASE("orbit correspondence pairs translation orbits with label orbits") {
  ExtensionProblem p = ising_problem();
  SectorTable table(p);
  FusionRing u = build_u_ring(p);
  const OrbitCorrespondence oc = orbit_correspondence(p, table, u);

  REQUIRE(oc.u_orbits.size() == 2);
  CHECK(oc.u_orbits[0] == std::vector<int>{0, 1});
  CHECK(oc.u_orbits[1] == std::vector<int>{2});
  CHECK(oc.phi[0] == std::vector<int>{0, 1});
  CHECK(oc.phi[1] == std::vector<int>{2});
  CHECK(oc.u_stab[0].order() == 1);
  CHECK(oc.u_stab[1].str() == "{0,2}");
}

TEST_CASE("half-integral weight totals are reported as superalgebra data") {
  const auto msg = message_of<ValidationError>([&] { ising_problem(QZ()); });
  CHECK(msg.find("superalgebra") != std::string::npos);

  const auto other = message_of<ValidationError>([&] { ising_problem(QZ::make(1, 4)); });
  CHECK(other.find("invalid extension") != std::string::npos);
  CHECK(other.find("superalgebra") == std::string::npos);
}

TEST_CASE("validation rejects malformed gradings") {
  QuadraticSpace v = z4_space();
  GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {g->element({2})});
  FusionRing w = ising_ring();

  CHECK_THROWS_AS(ExtensionProblem::validate(
                      w, v, d, SimpleCurrentGrading{d, {w.index_of("1"), w.index_of("1")}}),
                  DomainError);  // not injective
  CHECK_THROWS_AS(ExtensionProblem::validate(
                      w, v, d, SimpleCurrentGrading{d, {w.index_of("1"), w.index_of("sigma")}}),
                  DomainError);  // not a simple current
  CHECK_THROWS_AS(ExtensionProblem::validate(
                      w, v, d, SimpleCurrentGrading{d, {w.index_of("eps"), w.index_of("1")}}),
                  DomainError);  // 0 must map to the unit
  CHECK_THROWS_AS(
      ExtensionProblem::validate(w, v, d, SimpleCurrentGrading{d, {w.index_of("1")}}),
      DomainError);  // wrong arity
  CHECK_THROWS_AS(ExtensionProblem::validate(
                      w, v, Subgroup::full(g),
                      SimpleCurrentGrading{d, {w.index_of("1"), w.index_of("eps")}}),
                  DomainError);  // domain mismatch
}

TEST_CASE("validation rejects a non-multiplicative grading") {
  GroupPtr c = FinAbGroup::make({8});
  std::vector<QZ> q;
  for (long r = 0; r < 8; ++r) q.push_back(QZ::make(r * r, 16));
  QuadraticSpace v = QuadraticSpace::make(c, q);
  Subgroup d = Subgroup::generate(c, {c->element({2})});

  GroupPtr z4 = FinAbGroup::make({4});
  FusionRing w = group_ring(z4, [&](const GroupElement& e) {
    return QZ() - QZ::make(e.coords()[0] * e.coords()[0], 4);
  });
  // swap the images of 4 and 6: still injective currents, no longer a morphism
  SimpleCurrentGrading bad{d, {0, 1, 3, 2}};
  const auto msg = message_of<ValidationError>([&] { ExtensionProblem::validate(w, v, d, bad); });
  CHECK(msg.find("multiplicative") != std::string::npos);
}

TEST_CASE("validation rejects degenerate spaces and stray stabilizers") {
  {
    GroupPtr c = FinAbGroup::make({2});
    QuadraticSpace v = QuadraticSpace::make(c, {QZ(), QZ()});  // q = 0, totally degenerate
    Subgroup d = Subgroup::trivial(c);
    FusionRing w = ising_ring();
    CHECK_THROWS_WITH_AS(ExtensionProblem::validate(w, v, d, SimpleCurrentGrading{d, {w.unit()}}),
                         doctest::Contains("degenerate"), ValidationError);
  }
  {
    // with the full group grading a fixed label's stabilizer escapes the
    // (trivial) orthogonal complement
    GroupPtr c = FinAbGroup::make({2});
    QuadraticSpace v = QuadraticSpace::make(c, {QZ(), QZ::make(1, 4)});
    Subgroup d = Subgroup::full(c);
    FusionRing w = ising_ring(QZ::make(3, 4));  // weight(eps) + q(1) = 0
    const auto msg = message_of<ValidationError>([&] {
      ExtensionProblem::validate(w, v, d,
                                 SimpleCurrentGrading{d, {w.index_of("1"), w.index_of("eps")}});
    });
    CHECK(msg.find("stabilizer") != std::string::npos);
  }
}

TEST_CASE("grading by the trivial subgroup reproduces a tensor with the group ring") {
  QuadraticSpace v = z4_space();
  GroupPtr g = v.group();
  Subgroup d = Subgroup::trivial(g);
  FusionRing w = ising_ring();
  ExtensionProblem p =
      ExtensionProblem::validate(w, v, d, SimpleCurrentGrading{d, {w.unit()}});

  SectorTable table(p);
  CHECK(table.blocks().size() == 1);
  CHECK(table.per_character_count() == 12);

  FusionRing u = build_u_ring(p);
  FusionRing expected = tensor_ring(ising_ring(), group_ring(g, [&](const GroupElement& e) {
                                      return v.q(e);
                                    }));
  CHECK(ring_isomorphic(u, expected, true).has_value());
}

TEST_CASE("a trivial charge group leaves the ring unchanged") {
  GroupPtr c = FinAbGroup::make({});
  QuadraticSpace v = QuadraticSpace::make(c, {QZ()});
  Subgroup d = Subgroup::full(c);
  FusionRing w = ising_ring();
  ExtensionProblem p =
      ExtensionProblem::validate(w, v, d, SimpleCurrentGrading{d, {w.unit()}});

  SectorTable table(p);
  CHECK(table.blocks().size() == 1);
  CHECK(table.by_name("(i2,0)", true).weight == QZ::make(1, 16));

  FusionRing u = build_u_ring(p);
  REQUIRE(u.size() == 3);
  CHECK(u.label(0) == "(i0,0)");
  CHECK(ring_isomorphic(u, ising_ring(), true).has_value());
}

TEST_CASE("a rank-two diagonal grading classifies the doubled ring") {
  GroupPtr c = FinAbGroup::make({4, 4});
  std::vector<QZ> q;
  for (long i = 0; i < 16; ++i) {
    const GroupElement e = c->element_at(i);
    q.push_back(QZ::make(e.coords()[0] * e.coords()[0] + e.coords()[1] * e.coords()[1], 8));
  }
  QuadraticSpace v = QuadraticSpace::make(c, q);
  Subgroup d = Subgroup::generate(c, {c->element({2, 2})});
  FusionRing w = tensor_ring(ising_ring(), ising_ring());
  SimpleCurrentGrading grading{d, {w.index_of("(1,1)"), w.index_of("(eps,eps)")}};
  ExtensionProblem p = ExtensionProblem::validate(w, v, d, std::move(grading));

  CHECK(p.d_perp().order() == 8);
  REQUIRE(p.orbits().count() == 5);
  CHECK(p.orbits().members[4] == std::vector<int>{w.index_of("(sigma,sigma)")});
  CHECK(p.orbits().stab[4].order() == 2);

  SectorTable table(p);
  CHECK(table.blocks().size() == 2);
  CHECK(table.per_character_count() == 36);
  CHECK(table.by_name("(i4,0,0)", true).weight == QZ::make(1, 8));
  CHECK(table.by_name("(i4,0,1)", false).weight == QZ::make(1, 4));

  FusionRing u = build_u_ring(p);
  CHECK(u.size() == 36);
  const USimpleCurrents sc = simple_currents_u(p, table, u);
  CHECK(sc.currents.size() == 16);
  const OrbitCorrespondence oc = orbit_correspondence(p, table, u);
  for (int i = 0; i < 5; ++i)
    CHECK(oc.u_orbits[i].size() * p.d().order() == oc.phi[i].size() * p.d_perp().order());
}

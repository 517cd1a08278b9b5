#include "fuselift/inverse.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fuselift/errors.hpp"

namespace fuselift {

namespace {

std::string derived_label(int orbit, const GroupElement& delta) {
  return "X(" + std::to_string(orbit) + "," + delta.compact_str() + ")";
}

}  // namespace

InverseProblem::InverseProblem(FusionRing u, QuadraticSpace v, Subgroup d, Subgroup dp,
                               SimpleCurrentGrading g, OrbitData orbits,
                               std::vector<GroupElement> lambda)
    : u_(std::move(u)),
      v_(std::move(v)),
      d_(std::move(d)),
      d_perp_(std::move(dp)),
      grading_u_(std::move(g)),
      orbits_(std::move(orbits)),
      lambda_(std::move(lambda)) {}

InverseProblem InverseProblem::validate(
    FusionRing u, QuadraticSpace v, Subgroup d, SimpleCurrentGrading grading_u,
    std::vector<std::pair<std::string, GroupElement>> branching) {
  if (d.group().get() != v.group().get())
    fail_domain("the subgroup must live in the charge group of the space");

  {
    const ValidationReport rep = u.validate();
    if (!rep.ok())
      fail_validation("extended ring fails its axioms: " + rep.violations.front().identity +
                      ": " + rep.violations.front().witness);
  }
  if (!v.is_nondegenerate())
    fail_validation("degenerate charge space: the pairing has radical " + v.radical().str());

  const Subgroup d_perp = v.perp(d);
  if (!(grading_u.domain == d_perp))
    fail_domain("grading domain must be the orthogonal complement " + d_perp.str());
  const auto& gelems = d_perp.elements();
  if (grading_u.assign.size() != gelems.size())
    fail_domain("grading must assign a label to every complement element");
  {
    std::set<int> seen;
    for (std::size_t i = 0; i < gelems.size(); ++i) {
      const int a = grading_u.assign[i];
      if (a < 0 || a >= u.size()) fail_domain("grading assigns an unknown label");
      if (!seen.insert(a).second)
        fail_domain("grading is not injective at label '" + u.label(a) + "'");
      if (!u.is_simple_current(a))
        fail_domain("grading label '" + u.label(a) + "' is not a simple current");
    }
    if (grading_u.label_for(v.group()->zero()) != u.unit())
      fail_domain("grading must send 0 to the unit");
    for (const auto& g1 : gelems)
      for (const auto& g2 : gelems)
        if (u.apply_current(grading_u.label_for(g1), grading_u.label_for(g2)) !=
            grading_u.label_for(g1 + g2))
          fail_validation("grading is not multiplicative at " + g1.str() + " + " + g2.str());
    for (const auto& g1 : gelems)
      if (u.weight(grading_u.label_for(g1)) != v.q(g1))
        fail_validation("weight of graded current '" + u.label(grading_u.label_for(g1)) +
                        "' is " + u.weight(grading_u.label_for(g1)).str() + ", expected q(" +
                        g1.str() + ") = " + v.q(g1).str());
  }

  // orbit decomposition under gamma . x, unit's orbit first, provisional reps
  OrbitData orbits;
  orbits.orbit_of.assign(u.size(), -1);
  const GroupPtr cg = v.group();
  std::vector<int> scan_order{u.unit()};
  for (int x = 0; x < u.size(); ++x)
    if (x != u.unit()) scan_order.push_back(x);
  for (const int seed : scan_order) {
    if (orbits.orbit_of[seed] >= 0) continue;
    const int oid = orbits.count();
    std::vector<int> members;
    std::vector<GroupElement> stab_elems;
    for (const auto& gamma : gelems) {
      const int img = u.apply_current(grading_u.label_for(gamma), seed);
      if (img == seed) stab_elems.push_back(gamma);
      if (orbits.orbit_of[img] < 0) {
        orbits.orbit_of[img] = oid;
        members.push_back(img);
      }
    }
    std::sort(members.begin(), members.end());
    orbits.members.push_back(std::move(members));
    orbits.rep.push_back(seed);
    Subgroup stab = Subgroup::from_elements(cg, std::move(stab_elems));
    if (!d.contains_subgroup(stab))
      fail_validation("orbit stabilizer " + stab.str() + " of '" + u.label(seed) +
                      "' is not contained in the subgroup; the data is inconsistent");
    orbits.stab.push_back(std::move(stab));
  }

  // branching: exactly one (representative, base charge) per orbit; the
  // unit's orbit is keyed by the unit itself with a charge inside D
  std::vector<int> key_of(static_cast<std::size_t>(orbits.count()), -1);
  std::vector<GroupElement> lambda(static_cast<std::size_t>(orbits.count()), cg->zero());
  for (const auto& [label, charge] : branching) {
    if (!u.has_label(label)) fail_domain("branching names unknown label '" + label + "'");
    if (charge.owner().get() != cg.get())
      fail_domain("branching charge lives in the wrong group");
    const int x = u.index_of(label);
    const int i = orbits.orbit_of[x];
    if (key_of[i] >= 0)
      fail_domain("branching covers the orbit of '" + label + "' twice");
    key_of[i] = x;
    lambda[i] = charge;
  }
  for (int i = 0; i < orbits.count(); ++i)
    if (key_of[i] < 0)
      fail_domain("branching misses the orbit of '" + u.label(orbits.rep[i]) + "'");
  if (key_of[0] != u.unit())
    fail_domain("the unit's orbit must be keyed by the unit, not '" + u.label(key_of[0]) + "'");
  if (!d.contains(lambda[0]))
    fail_validation("the unit's base charge " + lambda[0].str() + " must lie in the subgroup " +
                    d.str());

  // re-anchor representatives at the branching keys; beta_of is the first
  // complement element (in element order) carrying the key to each member
  std::vector<GroupElement> beta_of(static_cast<std::size_t>(u.size()), cg->zero());
  std::vector<bool> seen(static_cast<std::size_t>(u.size()), false);
  for (int i = 0; i < orbits.count(); ++i) {
    orbits.rep[i] = key_of[i];
    for (const auto& gamma : gelems) {
      const int img = u.apply_current(grading_u.label_for(gamma), key_of[i]);
      if (!seen[img]) {
        seen[img] = true;
        beta_of[img] = gamma;
      }
    }
  }
  orbits.beta_of = std::move(beta_of);

  return InverseProblem(std::move(u), std::move(v), std::move(d), std::move(d_perp),
                        std::move(grading_u), std::move(orbits), std::move(lambda));
}

DerivedRing derive_commutant_ring(const InverseProblem& ip) {
  const FusionRing& u = ip.u_ring();
  const QuadraticSpace& v = ip.v_space();
  const GroupPtr cg = v.group();
  const OrbitData& ob = ip.orbits();

  // labels X(i, delta), delta running over lambda_i + D modulo the stabilizer
  std::vector<std::pair<int, GroupElement>> coords;
  for (int i = 0; i < ob.count(); ++i) {
    std::set<long> deltas;
    for (const auto& beta : ip.d().elements())
      deltas.insert(ob.stab[i].coset_rep(ip.lambda()[i] + beta).index());
    for (const long idx : deltas) {
      const GroupElement delta = cg->element_at(idx);
      for (const auto& s : ob.stab[i].elements())
        if (v.q(delta + s) != v.q(delta))
          fail_validation("weight of X(" + std::to_string(i) + "," + delta.compact_str() +
                          ") is not constant on its charge coset");
      coords.emplace_back(i, delta);
    }
  }
  const int n = static_cast<int>(coords.size());
  if (static_cast<long>(n) * cg->order() !=
      ip.d().order() * ip.d().order() * static_cast<long>(u.size()))
    fail_validation("derived ring has " + std::to_string(n) + " labels, expected |D|^2 * " +
                    std::to_string(u.size()) + " / " + std::to_string(cg->order()));

  std::vector<std::string> labels;
  labels.reserve(coords.size());
  for (const auto& [i, delta] : coords) labels.push_back(derived_label(i, delta));

  const auto mult = [&](int a, int b, int c) -> long {
    const GroupElement gamma = coords[a].second + coords[b].second - coords[c].second;
    if (!ip.d_perp().contains(gamma)) return 0;
    const int shifted = u.apply_current(ip.grading_u().label_for(gamma), ob.rep[coords[c].first]);
    return u.mult(ob.rep[coords[a].first], ob.rep[coords[b].first], shifted);
  };

  FusionRing::Builder bld;
  bld.labels(labels);
  const std::string unit_label = derived_label(0, ob.stab[0].coset_rep(cg->zero()));
  bld.unit(unit_label);
  const int unit_pos =
      static_cast<int>(std::find(labels.begin(), labels.end(), unit_label) - labels.begin());
  if (unit_pos == n) fail_validation("derived ring has no unit label X(0,0)");

  for (int a = 0; a < n; ++a) {
    bld.weight(labels[a], u.weight(ob.rep[coords[a].first]) - v.q(coords[a].second));
    int dual = -1;
    for (int b = 0; b < n; ++b)
      if (mult(a, b, unit_pos) == 1) {
        if (dual >= 0)
          fail_validation("dual inference failed: '" + labels[a] + "' pairs with two labels");
        dual = b;
      }
    if (dual < 0)
      fail_validation("dual inference failed: '" + labels[a] + "' pairs with no label");
    bld.dual(labels[a], labels[dual]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (const long m = mult(a, b, c); m > 0) bld.rule(labels[a], labels[b], labels[c], m);

  FusionRing ring = bld.build();
  {
    const ValidationReport rep = ring.validate();
    if (!rep.ok())
      fail_validation("derived ring fails its axioms: " + rep.violations.front().identity + ": " +
                      rep.violations.front().witness);
  }

  // D-grading by the unit-orbit labels, ready for re-extension
  SimpleCurrentGrading grading{ip.d(), {}};
  for (const auto& beta : ip.d().elements())
    grading.assign.push_back(
        ring.index_of(derived_label(0, ob.stab[0].coset_rep(beta))));

  return DerivedRing{std::move(ring), std::move(coords), std::move(grading)};
}

RoundTrip round_trip(const InverseProblem& ip) {
  DerivedRing derived = derive_commutant_ring(ip);
  const ExtensionProblem ep =
      ExtensionProblem::validate(derived.ring, ip.v_space(), ip.d(), derived.grading);
  FusionRing rebuilt = build_u_ring(ep);
  auto iso = ring_isomorphic(rebuilt, ip.u_ring(), /*match_weights=*/true);
  if (!iso)
    fail_validation("round trip failed: the rebuilt ring is not weight-isomorphic to the "
                    "original");
  return RoundTrip{std::move(derived), std::move(rebuilt), std::move(*iso)};
}

}  // namespace fuselift

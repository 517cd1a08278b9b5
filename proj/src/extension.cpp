#include "fuselift/extension.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "fuselift/errors.hpp"

namespace fuselift {

namespace {

// Sector name "(i<orbit>,<alpha>)", e.g. "(i0,2)" or "(i1,1,3)".
std::string sector_name(int orbit, const GroupElement& alpha) {
  return "(i" + std::to_string(orbit) + "," + alpha.compact_str() + ")";
}

Sector make_sector(const ExtensionProblem& p, int orbit, const GroupElement& alpha_any) {
  Sector s{orbit, p.canonical_alpha(orbit, alpha_any), p.xi_character(orbit, alpha_any), QZ(), {}, ""};
  const int rep = p.orbits().rep[orbit];
  s.weight = p.w_ring().weight(rep) + p.v_space().q(s.alpha);
  for (const auto& beta : p.d().elements())
    s.decomposition.emplace_back(p.current_action(beta, rep), s.alpha + beta);
  s.name = sector_name(orbit, s.alpha);
  return s;
}

}  // namespace

// ---- ExtensionProblem ----

ExtensionProblem::ExtensionProblem(FusionRing w, QuadraticSpace v, Subgroup d, Subgroup dp,
                                   SimpleCurrentGrading grading, OrbitData orbits)
    : w_(std::move(w)),
      v_(std::move(v)),
      d_(std::move(d)),
      d_perp_(std::move(dp)),
      grading_(std::move(grading)),
      orbits_(std::move(orbits)) {}

ExtensionProblem ExtensionProblem::validate(FusionRing w, QuadraticSpace v, Subgroup d,
                                            SimpleCurrentGrading grading) {
  if (d.group().get() != v.group().get())
    fail_domain("the grading subgroup must live in the charge group of the space");
  if (!(grading.domain == d)) fail_domain("grading domain differs from the given subgroup");
  if (grading.assign.size() != static_cast<std::size_t>(d.order()))
    fail_domain("grading must assign a label to every subgroup element");

  {
    const ValidationReport rep = w.validate();
    if (!rep.ok())
      fail_validation("graded ring fails its axioms: " + rep.violations.front().identity + ": " +
                      rep.violations.front().witness);
  }

  // grading: injective simple-current family with assign(0) = unit,
  // multiplicative over the subgroup
  const auto& delems = d.elements();
  {
    std::set<int> seen;
    for (std::size_t i = 0; i < delems.size(); ++i) {
      const int a = grading.assign[i];
      if (a < 0 || a >= w.size()) fail_domain("grading assigns an unknown label");
      if (!seen.insert(a).second)
        fail_domain("grading is not injective at label '" + w.label(a) + "'");
      if (!w.is_simple_current(a))
        fail_domain("grading label '" + w.label(a) + "' is not a simple current");
    }
    if (grading.label_for(d.group()->zero()) != w.unit())
      fail_domain("grading must send 0 to the unit");
    for (const auto& b1 : delems)
      for (const auto& b2 : delems)
        if (w.apply_current(grading.label_for(b1), grading.label_for(b2)) !=
            grading.label_for(b1 + b2))
          fail_validation("grading is not multiplicative at " + b1.str() + " + " + b2.str());
  }

  if (!v.is_nondegenerate())
    fail_validation("degenerate charge space: the pairing has radical " + v.radical().str());

  // integrality: weight(W^beta) + q(beta) = 0; an all-1/2 failure pattern is
  // the superalgebra case
  {
    std::vector<std::pair<GroupElement, QZ>> bad;
    for (const auto& beta : delems) {
      const QZ total = w.weight(grading.label_for(beta)) + v.q(beta);
      if (!total.is_zero()) bad.emplace_back(beta, total);
    }
    if (!bad.empty()) {
      const bool all_half = std::all_of(bad.begin(), bad.end(), [](const auto& e) {
        return e.second == QZ::make(1, 2);
      });
      if (all_half)
        fail_validation(
            "superalgebra or invalid extension: total weight of the graded piece at beta = " +
            bad.front().first.str() +
            " is half-integral, so the data defines a superalgebra extension, not an "
            "algebra extension");
      fail_validation("invalid extension: weight(W^beta) + q(beta) = " + bad.front().second.str() +
                      " != 0 at beta = " + bad.front().first.str());
    }
  }

  Subgroup d_perp = v.perp(d);

  // orbit decomposition of the labels under beta . X, unit's orbit first
  OrbitData orbits;
  orbits.orbit_of.assign(w.size(), -1);
  const GroupPtr cg = v.group();
  std::vector<GroupElement> beta_of(static_cast<std::size_t>(w.size()), cg->zero());
  std::vector<int> scan_order{w.unit()};
  for (int x = 0; x < w.size(); ++x)
    if (x != w.unit()) scan_order.push_back(x);
  for (const int rep : scan_order) {
    if (orbits.orbit_of[rep] >= 0) continue;
    const int oid = orbits.count();
    std::vector<int> members;
    std::vector<GroupElement> stab_elems;
    for (const auto& beta : delems) {
      const int img = w.apply_current(grading.label_for(beta), rep);
      if (img == rep) stab_elems.push_back(beta);
      if (orbits.orbit_of[img] < 0) {
        orbits.orbit_of[img] = oid;
        beta_of[img] = beta;  // first hit is the smallest beta: elements are ordered
        members.push_back(img);
      }
    }
    std::sort(members.begin(), members.end());
    orbits.members.push_back(std::move(members));
    orbits.rep.push_back(rep);
    Subgroup stab = Subgroup::from_elements(cg, std::move(stab_elems));
    if (!d_perp.contains_subgroup(stab))
      fail_validation("orbit stabilizer " + stab.str() + " of '" + w.label(rep) +
                      "' is not orthogonal to the grading subgroup; weights and fusion data are "
                      "inconsistent");
    orbits.stab.push_back(std::move(stab));
  }
  orbits.beta_of = std::move(beta_of);

  return ExtensionProblem(std::move(w), std::move(v), std::move(d), std::move(d_perp),
                          std::move(grading), std::move(orbits));
}

int ExtensionProblem::current_action(const GroupElement& beta, int x) const {
  return w_.apply_current(grading_.label_for(beta), x);
}

QZ ExtensionProblem::b_w(const GroupElement& beta, int x) const {
  return w_.weight_pairing(grading_.label_for(beta), x);
}

Character ExtensionProblem::eta_character(const GroupElement& alpha) const {
  return Character::from_function(
      d_, [&](const GroupElement& beta) { return v_.b(beta, alpha); });
}

Character ExtensionProblem::xi_character(int orbit, const GroupElement& alpha) const {
  const int rep = orbits_.rep[orbit];
  return Character::from_function(d_, [&](const GroupElement& beta) {
    return b_w(beta, rep) + v_.b(beta, alpha);
  });
}

GroupElement ExtensionProblem::canonical_alpha(int orbit, const GroupElement& alpha) const {
  return orbits_.stab[orbit].coset_rep(alpha);
}

// ---- SectorTable ----

SectorTable::SectorTable(const ExtensionProblem& p) : p_(p) {
  const GroupPtr cg = p.v_space().group();
  std::map<Character, std::vector<Sector>> by_chi;

  for (int i = 0; i < p.orbits().count(); ++i) {
    // group all charges by their character and check each class is a
    // D-perp coset before reducing modulo the stabilizer
    std::map<Character, std::vector<GroupElement>> classes;
    for (long idx = 0; idx < cg->order(); ++idx) {
      const GroupElement alpha = cg->element_at(idx);
      classes[p.xi_character(i, alpha)].push_back(alpha);
    }
    if (classes.size() != static_cast<std::size_t>(p.d().order()))
      fail_validation("orbit " + std::to_string(i) + " realizes " +
                      std::to_string(classes.size()) + " characters, expected " +
                      std::to_string(p.d().order()));
    for (const auto& [chi, alphas] : classes) {
      if (alphas.size() != static_cast<std::size_t>(p.d_perp().order()))
        fail_validation("character class of orbit " + std::to_string(i) +
                        " is not a coset of the orthogonal complement");
      for (const auto& a : alphas)
        if (!p.d_perp().contains(a - alphas.front()))
          fail_validation("character class of orbit " + std::to_string(i) +
                          " is not a coset of the orthogonal complement");
      std::set<long> canon;
      for (const auto& a : alphas) canon.insert(p.canonical_alpha(i, a).index());
      for (long idx : canon) by_chi[chi].push_back(make_sector(p, i, cg->element_at(idx)));
    }
  }

  for (auto& [chi, sectors] : by_chi) {
    std::sort(sectors.begin(), sectors.end(), [](const Sector& a, const Sector& b) {
      return a.orbit != b.orbit ? a.orbit < b.orbit : a.alpha.index() < b.alpha.index();
    });
    blocks_.push_back({chi, std::move(sectors)});
  }
  // map ordering sorts characters ascending; the principal character is the
  // all-zero vector, which is minimal
  if (blocks_.empty() || !blocks_.front().chi.is_principal())
    fail_validation("no untwisted sector block");

  const long expected =
      cg->order() * p.w_ring().size() / (p.d().order() * p.d().order());
  for (const auto& b : blocks_)
    if (static_cast<long>(b.sectors.size()) != expected)
      fail_validation("sector count per character is " + std::to_string(b.sectors.size()) +
                      ", expected " + std::to_string(expected));
}

const Sector& SectorTable::at(int orbit, const GroupElement& alpha) const {
  const GroupElement canon = p_.canonical_alpha(orbit, alpha);
  for (const auto& b : blocks_)
    for (const auto& s : b.sectors)
      if (s.orbit == orbit && s.alpha == canon) return s;
  fail_domain("no sector " + sector_name(orbit, canon));
}

const Sector& SectorTable::by_name(const std::string& name, bool untwisted_only) const {
  const auto bad = [&](const std::string& why) -> void {
    fail_domain("cannot resolve sector '" + name + "': " + why);
  };
  if (name.size() < 5 || name.front() != '(' || name.back() != ')' || name[1] != 'i')
    bad("expected the form \"(i<orbit>,<charge>)\"");
  const auto comma = name.find(',');
  if (comma == std::string::npos) bad("expected the form \"(i<orbit>,<charge>)\"");
  int orbit = -1;
  try {
    std::size_t used = 0;
    orbit = std::stoi(name.substr(2, comma - 2), &used);
    if (used != comma - 2) bad("malformed orbit index");
  } catch (const std::exception&) {
    bad("malformed orbit index");
  }
  if (orbit < 0 || orbit >= p_.orbits().count())
    bad("orbit index out of range (0.." + std::to_string(p_.orbits().count() - 1) + ")");

  const GroupPtr cg = p_.v_space().group();
  std::vector<long> coords;
  const std::string body = name.substr(comma + 1, name.size() - comma - 2);
  if (!(cg->rank() == 0 && body == "0")) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto next = body.find(',', pos);
      const std::string tok = body.substr(pos, next == std::string::npos ? next : next - pos);
      try {
        std::size_t used = 0;
        coords.push_back(std::stol(tok, &used));
        if (used != tok.size()) bad("malformed charge coordinates");
      } catch (const std::exception&) {
        bad("malformed charge coordinates");
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  if (static_cast<int>(coords.size()) != cg->rank()) bad("charge has the wrong rank");
  for (int j = 0; j < cg->rank(); ++j)
    if (coords[j] < 0 || coords[j] >= cg->invariants()[j])
      bad("charge coordinate " + std::to_string(coords[j]) + " is out of range; did you mean \"" +
          sector_name(orbit, p_.canonical_alpha(orbit, cg->element(coords))) + "\"?");
  const GroupElement alpha = cg->element(coords);
  const GroupElement canon = p_.canonical_alpha(orbit, alpha);
  if (!(canon == alpha))
    bad("not the canonical representative; did you mean \"" + sector_name(orbit, canon) + "\"?");
  const Sector& s = at(orbit, alpha);
  if (untwisted_only && !s.chi.is_principal())
    bad("sector is twisted; only untwisted sectors are accepted here");
  return s;
}

// ---- fusion of sectors ----

std::vector<std::pair<Sector, long>> fuse_sectors(const ExtensionProblem& p, const Sector& m1,
                                                  const Sector& m2) {
  if (!m1.chi.is_principal() || !m2.chi.is_principal())
    fail_domain("fusion of twisted sectors is not supported");
  const OrbitData& ob = p.orbits();
  const GroupElement charge = m1.alpha + m2.alpha;

  std::vector<std::pair<Sector, long>> out;
  for (const auto& [z, n] : p.w_ring().fuse(ob.rep[m1.orbit], ob.rep[m2.orbit])) {
    const int i3 = ob.orbit_of[z];
    Sector s = make_sector(p, i3, charge - ob.beta_of[z]);
    if (!s.chi.is_principal())
      fail_validation("fusion transport left the untwisted sectors at output '" +
                      p.w_ring().label(z) + "'; input data is inconsistent");
    out.emplace_back(std::move(s), n);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.orbit != b.first.orbit ? a.first.orbit < b.first.orbit
                                          : a.first.alpha.index() < b.first.alpha.index();
  });

  // transport bijection: W-side classes (i3, beta3 mod stab) with
  // charge - beta3 untwisted correspond one-to-one to sector-side classes
  // (i3, alpha3 mod stab) with charge - alpha3 in D, via beta3 -> charge - beta3
  std::set<std::pair<int, long>> pset, qset, image;
  for (int i3 = 0; i3 < ob.count(); ++i3) {
    for (const auto& beta : p.d().elements())
      if (p.xi_character(i3, charge - beta).is_principal())
        pset.emplace(i3, ob.stab[i3].coset_rep(beta).index());
    const GroupPtr cg = p.v_space().group();
    for (long idx = 0; idx < cg->order(); ++idx) {
      const GroupElement alpha = cg->element_at(idx);
      if (p.d().contains(charge - alpha) && p.xi_character(i3, alpha).is_principal())
        qset.emplace(i3, p.canonical_alpha(i3, alpha).index());
    }
  }
  for (const auto& [i3, bidx] : pset) {
    const GroupElement alpha = charge - p.v_space().group()->element_at(bidx);
    image.emplace(i3, p.canonical_alpha(i3, alpha).index());
  }
  if (image != qset || image.size() != pset.size())
    fail_validation("fusion transport is not a bijection between graded outputs and sectors");
  return out;
}

// ---- the extended ring ----

FusionRing build_u_ring(const ExtensionProblem& p) {
  const SectorTable table(p);
  const auto& sectors = table.untwisted().sectors;
  const int n = static_cast<int>(sectors.size());

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : sectors) labels.push_back(s.name);
  const auto pos_of = [&](const Sector& s) {
    const auto it = std::find(labels.begin(), labels.end(), s.name);
    if (it == labels.end()) fail_validation("fusion output " + s.name + " is not untwisted");
    return static_cast<int>(it - labels.begin());
  };

  std::vector<std::vector<long>> nmat(static_cast<std::size_t>(n) * n, std::vector<long>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [s, m] : fuse_sectors(p, sectors[a], sectors[b]))
        nmat[static_cast<std::size_t>(a) * n + b][pos_of(s)] += m;

  const std::string unit_name = sector_name(0, p.v_space().group()->zero());
  const int unit_pos = pos_of(table.at(0, p.v_space().group()->zero()));

  FusionRing::Builder bld;
  bld.labels(labels);
  bld.unit(unit_name);
  for (int a = 0; a < n; ++a) {
    bld.weight(labels[a], sectors[a].weight);
    int dual = -1;
    for (int b = 0; b < n; ++b)
      if (nmat[static_cast<std::size_t>(a) * n + b][unit_pos] == 1) {
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
        if (const long m = nmat[static_cast<std::size_t>(a) * n + b][c]; m > 0)
          bld.rule(labels[a], labels[b], labels[c], m);

  FusionRing u = bld.build();
  const ValidationReport rep = u.validate();
  if (!rep.ok())
    fail_validation("extended ring fails its axioms: " + rep.violations.front().identity + ": " +
                    rep.violations.front().witness);
  return u;
}

// ---- simple currents of the extension ----

USimpleCurrents simple_currents_u(const ExtensionProblem& p, const SectorTable& table,
                                  const FusionRing& u_ring) {
  USimpleCurrents out;
  const auto& sectors = table.untwisted().sectors;
  std::set<std::string> predicted;
  for (const auto& s : sectors)
    if (p.w_ring().is_simple_current(p.orbits().rep[s.orbit])) {
      predicted.insert(s.name);
      out.currents.push_back(s.name);
    }

  // cross-check against the ring itself
  std::set<std::string> direct;
  for (int x = 0; x < u_ring.size(); ++x)
    if (u_ring.is_simple_current(x)) direct.insert(u_ring.label(x));
  if (direct != predicted)
    fail_validation("simple currents of the extended ring disagree with the orbit prediction");

  const long expected = p.v_space().group()->order() *
                        static_cast<long>(simple_currents(p.w_ring()).currents.size()) /
                        (p.d().order() * p.d().order());
  if (static_cast<long>(out.currents.size()) != expected)
    fail_validation("extended ring has " + std::to_string(out.currents.size()) +
                    " simple currents, expected " + std::to_string(expected));

  // canonical translation family gamma -> (0, gamma)
  for (const auto& gamma : p.d_perp().elements()) {
    const Sector& ug = table.at(0, gamma);
    if (!predicted.count(ug.name))
      fail_validation("canonical sector " + ug.name + " is not a simple current");
    const int ug_idx = u_ring.index_of(ug.name);
    for (const auto& s : sectors) {
      const Sector& shifted = table.at(s.orbit, s.alpha + gamma);
      if (u_ring.apply_current(ug_idx, u_ring.index_of(s.name)) != u_ring.index_of(shifted.name))
        fail_validation("canonical family does not translate " + s.name + " by " + gamma.str());
    }
    out.canonical.emplace_back(gamma, ug.name);
  }
  return out;
}

// ---- structure-constant transfer ----

long transfer_multiplicity(const ExtensionProblem& p, TransferDirection dir,
                           const std::array<int, 3>& x, const std::array<GroupElement, 3>& alpha) {
  const OrbitData& ob = p.orbits();
  std::array<int, 3> orbit{};
  std::array<const GroupElement*, 3> beta{};
  for (int k = 0; k < 3; ++k) {
    orbit[k] = ob.orbit_of[x[k]];
    beta[k] = &ob.beta_of[x[k]];
    if (!p.xi_character(orbit[k], alpha[k] - *beta[k]).is_principal())
      fail_domain("charge " + alpha[k].str() + " does not place '" + p.w_ring().label(x[k]) +
                  "' in an untwisted sector");
  }
  const GroupElement gamma = alpha[0] + alpha[1] - alpha[2];
  if (dir == TransferDirection::UFromW) {
    if (!p.d().contains(gamma)) return 0;
    return p.w_ring().mult(x[0], x[1], p.current_action(gamma, x[2]));
  }
  if (!p.d_perp().contains(gamma)) return 0;
  const Sector m1 = make_sector(p, orbit[0], alpha[0] - *beta[0]);
  const Sector m2 = make_sector(p, orbit[1], alpha[1] - *beta[1]);
  const GroupElement target_alpha = p.canonical_alpha(orbit[2], alpha[2] - *beta[2] + gamma);
  for (const auto& [s, m] : fuse_sectors(p, m1, m2))
    if (s.orbit == orbit[2] && s.alpha == target_alpha) return m;
  return 0;
}

// ---- orbit correspondence ----

OrbitCorrespondence orbit_correspondence(const ExtensionProblem& p, const SectorTable& table,
                                         const FusionRing& u_ring) {
  const auto& sectors = table.untwisted().sectors;
  const GroupPtr cg = p.v_space().group();

  // sector label index <-> (orbit, alpha)
  const auto label_of_sector = [&](const Sector& s) { return u_ring.index_of(s.name); };

  // canonical family and its action on labels
  std::map<long, int> gamma_label;  // element index in C -> u label
  for (const auto& gamma : p.d_perp().elements())
    gamma_label[gamma.index()] = u_ring.index_of(table.at(0, gamma).name);

  OrbitCorrespondence oc;
  std::vector<int> u_orbit_of(u_ring.size(), -1);
  for (int i = 0; i < p.orbits().count(); ++i) {
    // predicted orbit: all sectors with this orbit index
    std::vector<int> members;
    for (const auto& s : sectors)
      if (s.orbit == i) members.push_back(label_of_sector(s));
    std::sort(members.begin(), members.end());
    // verify it is exactly one orbit under the translation action
    std::set<int> reached{members.front()};
    std::vector<GroupElement> stab_elems;
    for (const auto& gamma : p.d_perp().elements()) {
      const int img = u_ring.apply_current(gamma_label[gamma.index()], members.front());
      if (img == members.front()) stab_elems.push_back(gamma);
      reached.insert(img);
    }
    if (std::vector<int>(reached.begin(), reached.end()) != members)
      fail_validation("translation orbit of " + u_ring.label(members.front()) +
                      " does not match its sector family");
    for (int m : members) u_orbit_of[m] = i;
    oc.u_orbits.push_back(std::move(members));
    oc.u_stab.push_back(Subgroup::from_elements(cg, std::move(stab_elems)));

    // stabilizers on both sides coincide
    if (!(oc.u_stab.back() == p.orbits().stab[i]))
      fail_validation("sector-side stabilizer " + oc.u_stab.back().str() +
                      " differs from the graded-side stabilizer " + p.orbits().stab[i].str());

    // Phi: W-constituents, identical for every member of the orbit
    std::set<int> constituents;
    for (const auto& s : sectors)
      if (s.orbit == i)
        for (const auto& [w, charge] : s.decomposition) constituents.insert(w);
    std::vector<int> phi(constituents.begin(), constituents.end());
    if (phi != p.orbits().members[i])
      fail_validation("sector constituents of orbit " + std::to_string(i) +
                      " do not form the matching label orbit");
    for (const auto& s : sectors)
      if (s.orbit == i) {
        std::set<int> cs;
        for (const auto& [w, charge] : s.decomposition) cs.insert(w);
        if (cs != constituents)
          fail_validation("members of one translation orbit have different constituents");
      }
    oc.phi.push_back(std::move(phi));

    // size ratio |orbit_U| / |Phi| = |D-perp| / |D|
    if (static_cast<long>(oc.u_orbits[i].size()) * p.d().order() !=
        static_cast<long>(oc.phi[i].size()) * p.d_perp().order())
      fail_validation("orbit size ratio violated at orbit " + std::to_string(i));
  }

  // Psi: solve b(W^beta, X) + b(beta, lambda) = 0 and land back in the same orbit
  for (int i = 0; i < p.orbits().count(); ++i) {
    const int rep = p.orbits().rep[i];
    std::vector<GroupElement> solutions;
    for (long idx = 0; idx < cg->order(); ++idx) {
      const GroupElement lambda = cg->element_at(idx);
      bool ok = true;
      for (const auto& beta : p.d().elements())
        if (!(p.b_w(beta, rep) + p.v_space().b(beta, lambda)).is_zero()) {
          ok = false;
          break;
        }
      if (ok) solutions.push_back(lambda);
    }
    if (solutions.empty()) fail_validation("no charge pairs with orbit " + std::to_string(i));
    for (const auto& lam : solutions)
      if (!p.d_perp().contains(lam - solutions.front()))
        fail_validation("charge solutions for orbit " + std::to_string(i) +
                        " are not a coset of the orthogonal complement");
    if (solutions.size() != static_cast<std::size_t>(p.d_perp().order()))
      fail_validation("charge solutions for orbit " + std::to_string(i) +
                      " are not a full coset of the orthogonal complement");
    const Sector& target = table.at(i, solutions.front());
    if (u_orbit_of[u_ring.index_of(target.name)] != i)
      fail_validation("round trip through the charge solution leaves orbit " + std::to_string(i));
  }
  return oc;
}

}  // namespace fuselift

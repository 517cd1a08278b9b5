#include "fuselift/catalog.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "fuselift/errors.hpp"

namespace fuselift {

QuadraticSpace lattice_rank1(long k, long m) {
  if (k < 1 || m < 1) fail_domain("lattice parameters must be positive");
  GroupPtr c = FinAbGroup::make({2 * k * m});
  std::vector<QZ> q;
  q.reserve(static_cast<std::size_t>(2 * k * m));
  for (long r = 0; r < 2 * k * m; ++r) q.push_back(QZ::make(r * r, 4 * k * m));
  return QuadraticSpace::make(std::move(c), std::move(q));
}

FusionRing affine_sl2(long k) {
  if (k < 0) fail_domain("the level must be nonnegative");
  FusionRing::Builder b;
  std::vector<std::string> labels;
  for (long a = 0; a <= k; ++a) labels.push_back("L" + std::to_string(a));
  b.labels(labels);
  b.unit("L0");
  for (long a = 0; a <= k; ++a) {
    b.dual(labels[a], labels[a]);
    b.weight(labels[a], QZ::make(a * (a + 2), 4 * (k + 2)));
    b.true_weight(labels[a], Rational(a * (a + 2), 4 * (k + 2)));
  }
  for (long a = 0; a <= k; ++a)
    for (long bb = 0; bb <= k; ++bb)
      for (long c = 0; c <= k; ++c) {
        const long lo = a > bb ? a - bb : bb - a;
        const long hi = std::min(a + bb, 2 * k - a - bb);
        if (lo <= c && c <= hi && (a + bb + c) % 2 == 0)
          b.rule(labels[a], labels[bb], labels[c], 1);
      }
  return b.build();
}

InverseProblem parafermion_inverse(long k) {
  if (k < 1) fail_domain("the level must be positive");
  FusionRing u = affine_sl2(k);
  QuadraticSpace v = lattice_rank1(k, 1);
  const GroupPtr c = v.group();
  Subgroup d = Subgroup::generate(c, {c->element({2})});
  const Subgroup dp = v.perp(d);  // always {0, k}

  SimpleCurrentGrading grading{dp, {}};
  for (const auto& gamma : dp.elements())
    grading.assign.push_back(
        u.index_of(gamma.is_zero() ? "L0" : "L" + std::to_string(k)));

  std::vector<std::pair<std::string, GroupElement>> branching;
  for (long a = 0; a <= k / 2; ++a)
    branching.emplace_back("L" + std::to_string(a), c->element({a}));

  return InverseProblem::validate(std::move(u), std::move(v), std::move(d), std::move(grading),
                                  std::move(branching));
}

FusionRing parafermion_sl2(long k) { return derive_commutant_ring(parafermion_inverse(k)).ring; }

ExtensionProblem parafermion_extension(long k) {
  const InverseProblem ip = parafermion_inverse(k);
  DerivedRing dr = derive_commutant_ring(ip);
  return ExtensionProblem::validate(std::move(dr.ring), ip.v_space(), ip.d(),
                                    std::move(dr.grading));
}

ExtensionProblem deform(const ExtensionProblem& p, long s) {
  const GroupPtr c = p.v_space().group();
  if (c->rank() != 1) fail_domain("deformation requires a cyclic charge group");
  const long k = p.d().order();
  const long n = c->order();
  if (n % (2 * k) != 0)
    fail_domain("charge group order " + std::to_string(n) + " is not a multiple of 2|D|");
  const long m = n / (2 * k);
  if (!(p.d() == Subgroup::generate(c, {c->element({2 * m})})))
    fail_domain("the graded subgroup is not the index-2m subgroup");
  for (long r = 0; r < n; ++r)
    if (p.v_space().q(c->element({r})) != QZ::make(r * r, 4 * k * m))
      fail_domain("the space does not carry the standard rank-one lattice form");

  const long m2 = m + s * k;
  if (m2 < 1) fail_domain("deformation step " + std::to_string(s) + " empties the lattice");

  QuadraticSpace v2 = lattice_rank1(k, m2);
  const GroupPtr c2 = v2.group();
  Subgroup d2 = Subgroup::generate(c2, {c2->element({2 * m2})});
  SimpleCurrentGrading g2{d2, p.grading().assign};
  return ExtensionProblem::validate(p.w_ring(), std::move(v2), std::move(d2), std::move(g2));
}

}  // namespace fuselift

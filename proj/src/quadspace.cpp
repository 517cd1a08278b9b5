#include "fuselift/quadspace.hpp"

#include <utility>

#include "fuselift/errors.hpp"

namespace fuselift {

QuadraticSpace QuadraticSpace::make(GroupPtr g, std::vector<QZ> q_by_index) {
  if (!g) fail_domain("quadratic space without a group");
  const long n = g->order();
  if (q_by_index.size() != static_cast<std::size_t>(n))
    fail_domain("quadratic form must assign a value to every group element");

  // Homogeneity q(k*x) = k^2 q(x); k = 0 covers q(0) = 0.
  for (long i = 0; i < n; ++i) {
    const GroupElement x = g->element_at(i);
    for (long k = 0; k <= g->exponent(); ++k) {
      const QZ expect = q_by_index[i].scaled(Integer(k) * k);
      if (q_by_index[x.scaled(k).index()] != expect)
        fail_validation("not quadratic: q(" + std::to_string(k) + "*" + x.str() +
                        ") != " + std::to_string(k) + "^2 * q(" + x.str() + ")");
    }
  }

  std::vector<QZ> b(static_cast<std::size_t>(n) * n);
  for (long i = 0; i < n; ++i) {
    const GroupElement x = g->element_at(i);
    for (long j = i; j < n; ++j) {
      const GroupElement y = g->element_at(j);
      const QZ v = q_by_index[(x + y).index()] - q_by_index[i] - q_by_index[j];
      b[i * n + j] = v;
      b[j * n + i] = v;  // symmetric by construction
    }
  }

  // Bi-additivity of the polarization (not implied by homogeneity).
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const long s = (g->element_at(i) + g->element_at(j)).index();
      for (long k = 0; k < n; ++k)
        if (b[s * n + k] != b[i * n + k] + b[j * n + k])
          fail_validation("not quadratic: polarization is not bi-additive at (" +
                          g->element_at(i).str() + "+" + g->element_at(j).str() + ", " +
                          g->element_at(k).str() + ")");
    }

  std::vector<GroupElement> rad;
  for (long i = 0; i < n; ++i) {
    bool in_rad = true;
    for (long j = 0; j < n && in_rad; ++j) in_rad = b[i * n + j].is_zero();
    if (in_rad) rad.push_back(g->element_at(i));
  }
  Subgroup radical = Subgroup::from_elements(g, std::move(rad));
  return QuadraticSpace(std::move(g), std::move(q_by_index), std::move(b), std::move(radical));
}

QuadraticSpace::QuadraticSpace(GroupPtr g, std::vector<QZ> q, std::vector<QZ> b, Subgroup radical)
    : group_(std::move(g)), q_(std::move(q)), b_(std::move(b)), radical_(std::move(radical)) {}

const QZ& QuadraticSpace::q(const GroupElement& x) const {
  if (x.owner().get() != group_.get()) fail_domain("q evaluated on a foreign element");
  return q_[x.index()];
}

const QZ& QuadraticSpace::b(const GroupElement& x, const GroupElement& y) const {
  if (x.owner().get() != group_.get() || y.owner().get() != group_.get())
    fail_domain("b evaluated on a foreign element");
  return b_[x.index() * group_->order() + y.index()];
}

bool QuadraticSpace::is_totally_isotropic(const Subgroup& h) const {
  if (h.group().get() != group_.get()) fail_domain("subgroup of a different group");
  for (const auto& e : h.elements())
    if (!q_[e.index()].is_zero()) return false;
  return true;
}

Subgroup QuadraticSpace::perp(const Subgroup& h) const {
  return orthogonal_complement(
      group_, [this](const GroupElement& x, const GroupElement& y) { return b(x, y); }, h);
}

}  // namespace fuselift

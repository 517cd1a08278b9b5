// Finite quadratic spaces: a Q/Z-valued quadratic form q on a finite abelian
// group together with its polarization b(x,y) = q(x+y) - q(x) - q(y).
#pragma once

#include <vector>

#include "fuselift/abgroup.hpp"
#include "fuselift/exactnum.hpp"

namespace fuselift {

class QuadraticSpace {
 public:
  // q_by_index runs parallel to g->elements(). Rejects forms violating
  // q(n*x) = n^2 q(x) or whose polarization is not bi-additive.
  static QuadraticSpace make(GroupPtr g, std::vector<QZ> q_by_index);

  const GroupPtr& group() const { return group_; }
  const QZ& q(const GroupElement& x) const;
  const QZ& b(const GroupElement& x, const GroupElement& y) const;

  // Radical of b: {x : b(x, y) = 0 for all y}.
  const Subgroup& radical() const { return radical_; }
  bool is_nondegenerate() const { return radical_.order() == 1; }
  // q vanishes identically on h.
  bool is_totally_isotropic(const Subgroup& h) const;
  // Orthogonal complement of h with respect to b.
  Subgroup perp(const Subgroup& h) const;

 private:
  QuadraticSpace(GroupPtr g, std::vector<QZ> q, std::vector<QZ> b, Subgroup radical);
  GroupPtr group_;
  std::vector<QZ> q_;  // by element index
  std::vector<QZ> b_;  // row-major order x order
  Subgroup radical_;
};

}  // namespace fuselift

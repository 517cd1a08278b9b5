// The inverse problem: from an extended ring U, a quadratic space (C, q),
// a subgroup D, a D-perp-graded family of simple currents of U, and one
// branching charge per D-perp-orbit, reconstruct the fusion ring of the
// graded commutant W together with the data needed to extend it back.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuselift/abgroup.hpp"
#include "fuselift/extension.hpp"
#include "fuselift/fusion.hpp"
#include "fuselift/quadspace.hpp"

namespace fuselift {

class InverseProblem {
 public:
  // branching maps one representative label per D-perp-orbit of U-labels to
  // its base charge lambda. Validation: U passes its axioms, (C, q) is
  // non-degenerate, gradingU is an injective D-perp-indexed simple-current
  // family with assign(0) = unit and weight(assign(gamma)) = q(gamma),
  // branching covers each orbit exactly once, the orbit of the unit is keyed
  // by the unit with lambda in D, and every orbit stabilizer lies in D.
  static InverseProblem validate(FusionRing u, QuadraticSpace v, Subgroup d,
                                 SimpleCurrentGrading grading_u,
                                 std::vector<std::pair<std::string, GroupElement>> branching);

  const FusionRing& u_ring() const { return u_; }
  const QuadraticSpace& v_space() const { return v_; }
  const Subgroup& d() const { return d_; }
  const Subgroup& d_perp() const { return d_perp_; }
  const SimpleCurrentGrading& grading_u() const { return grading_u_; }
  // D-perp-orbits of the U-labels; orbit 0 contains the unit.
  const OrbitData& orbits() const { return orbits_; }
  // Base charge lambda(i, 0) for each orbit's branching representative.
  const std::vector<GroupElement>& lambda() const { return lambda_; }

 private:
  InverseProblem(FusionRing u, QuadraticSpace v, Subgroup d, Subgroup dp,
                 SimpleCurrentGrading g, OrbitData orbits, std::vector<GroupElement> lambda);
  FusionRing u_;
  QuadraticSpace v_;
  Subgroup d_;
  Subgroup d_perp_;
  SimpleCurrentGrading grading_u_;
  OrbitData orbits_;  // reps are the branching keys
  std::vector<GroupElement> lambda_;
};

// The reconstructed W-ring. Labels are "X(i,delta)" for each orbit i and
// charge delta in lambda_i + D taken modulo the orbit stabilizer; the label
// count is |D|^2 * #labels(U) / |C|. Weights are weight(rep_i) - q(delta);
// their invariance across the stabilizer coset is checked. The result
// passes full ring validation.
struct DerivedRing {
  FusionRing ring;
  std::vector<std::pair<int, GroupElement>> coords;  // label -> (orbit, delta)
  // D-grading of the derived ring by the unit-orbit labels, ready to extend.
  SimpleCurrentGrading grading;
};
DerivedRing derive_commutant_ring(const InverseProblem& ip);

// derive, re-extend with the derived grading, rebuild the sector ring, and
// match it against the original U by a weight-preserving isomorphism with
// exact structure-constant equality.
struct RoundTrip {
  DerivedRing derived;
  FusionRing rebuilt;
  std::vector<int> iso;  // rebuilt label -> original U label
};
RoundTrip round_trip(const InverseProblem& ip);

}  // namespace fuselift

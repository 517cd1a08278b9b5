// Built-in model families: rank-one lattice quadratic spaces, the level-k
// sl2 affine ring, the associated commutant (parafermion) construction, and
// the lattice deformation that rescales the charge group while keeping the
// graded ring fixed.
#pragma once

#include "fuselift/extension.hpp"
#include "fuselift/fusion.hpp"
#include "fuselift/inverse.hpp"
#include "fuselift/quadspace.hpp"

namespace fuselift {

// (Z_{2km}, q(r) = r^2 / (4km)); k, m >= 1.
QuadraticSpace lattice_rank1(long k, long m);

// Level-k sl2 ring: labels L0..Lk, self-dual, exact weights a(a+2)/(4(k+2)),
// N(La,Lb,Lc) = 1 iff |a-b| <= c <= min(a+b, 2k-a-b) and a+b+c is even.
FusionRing affine_sl2(long k);

// Inverse problem whose solution is the level-k parafermion ring:
// U = affine_sl2(k), (C, q) = lattice_rank1(k, 1), D generated by 2,
// gradingU 0 -> L0, k -> Lk, branching La -> a per orbit representative.
InverseProblem parafermion_inverse(long k);

// The derived parafermion ring itself (k(k+1)/2 labels).
FusionRing parafermion_sl2(long k);

// Forward extension problem for level k: the parafermion ring graded by
// D = <2> inside lattice_rank1(k, 1). Extending it rebuilds affine_sl2(k).
ExtensionProblem parafermion_extension(long k);

// Replace the problem's space lattice_rank1(k, m) by lattice_rank1(k, m+sk),
// rebasing D and the grading onto the new charge group; requires m + sk >= 1.
// Integrality of the grading weights is preserved and the result is
// re-validated.
ExtensionProblem deform(const ExtensionProblem& p, long s);

}  // namespace fuselift

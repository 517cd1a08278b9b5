// Simple-current extension analysis: a fusion ring W graded by a subgroup D
// of a finite quadratic space (C, q), the orbit decomposition of its labels,
// character-indexed sector classification, and fusion transfer between the
// W-ring and the extended ring built on untwisted sectors.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuselift/abgroup.hpp"
#include "fuselift/fusion.hpp"
#include "fuselift/quadspace.hpp"

namespace fuselift {

// Orbit decomposition of the W-labels under beta . X = W^beta (x) X.
// Orbit 0 is the orbit of the unit (the currents W^beta) with the unit as
// its representative; other orbits are ordered by their smallest label index
// and represented by it.
struct OrbitData {
  std::vector<std::vector<int>> members;  // orbit -> sorted label indices
  std::vector<int> rep;                   // orbit -> representative label
  std::vector<Subgroup> stab;             // orbit -> {beta in D : beta . rep = rep}
  std::vector<int> orbit_of;              // label -> orbit
  std::vector<GroupElement> beta_of;      // label -> smallest beta with beta . rep = label
  int count() const { return static_cast<int>(rep.size()); }
};

class SectorTable;

class ExtensionProblem {
 public:
  // Validates everything at once: W passes its axioms, the grading is an
  // injective D-indexed simple-current family with assign(0) = unit, (C, q)
  // is non-degenerate, and weight(assign(beta)) + q(beta) = 0 for every
  // beta in D (half-integral totals are reported as superalgebra data).
  // Also computes D-perp and the orbit decomposition, checking that every
  // stabilizer lies in D-perp.
  static ExtensionProblem validate(FusionRing w, QuadraticSpace v, Subgroup d,
                                   SimpleCurrentGrading grading);

  const FusionRing& w_ring() const { return w_; }
  const QuadraticSpace& v_space() const { return v_; }
  const Subgroup& d() const { return d_; }
  const Subgroup& d_perp() const { return d_perp_; }
  const SimpleCurrentGrading& grading() const { return grading_; }
  const OrbitData& orbits() const { return orbits_; }

  // W^beta (x) X as a label index (beta in D).
  int current_action(const GroupElement& beta, int x) const;
  // b(W^beta, X) = weight(W^beta (x) X) - weight(W^beta) - weight(X).
  QZ b_w(const GroupElement& beta, int x) const;
  // beta -> b(beta, alpha); kernel-of-eta machinery for character sweeps.
  Character eta_character(const GroupElement& alpha) const;
  // beta -> b(W^beta, rep_i) + b(beta, alpha); additivity is asserted.
  Character xi_character(int orbit, const GroupElement& alpha) const;

  // Canonical coset representative of alpha modulo the orbit's stabilizer.
  GroupElement canonical_alpha(int orbit, const GroupElement& alpha) const;

 private:
  ExtensionProblem(FusionRing w, QuadraticSpace v, Subgroup d, Subgroup dp,
                   SimpleCurrentGrading grading, OrbitData orbits);
  FusionRing w_;
  QuadraticSpace v_;
  Subgroup d_;
  Subgroup d_perp_;
  SimpleCurrentGrading grading_;
  OrbitData orbits_;
};

// One irreducible sector of the extension: the D-orbit index i, the charge
// coset representative alpha (canonical mod the stabilizer), its character,
// and the list of summands (W-label, charge) over beta in D.
struct Sector {
  int orbit;
  GroupElement alpha;
  Character chi;
  QZ weight;  // weight(rep_i) + q(alpha); for twisted sectors this is the
              // weight of the canonical summand
  std::vector<std::pair<int, GroupElement>> decomposition;
  std::string name;  // "(i0,2)"
};

// All sectors grouped by character; the principal-character block first,
// the rest in ascending character order. Every block has the same number
// of sectors, equal to |C| * #labels(W) / |D|^2.
class SectorTable {
 public:
  struct Block {
    Character chi;
    std::vector<Sector> sectors;  // ordered by (orbit, alpha index)
  };

  explicit SectorTable(const ExtensionProblem& p);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& untwisted() const { return blocks_.front(); }
  long per_character_count() const { return static_cast<long>(blocks_.front().sectors.size()); }
  // Lookup with canonicalization; the sector must exist in some block.
  const Sector& at(int orbit, const GroupElement& alpha) const;
  // Parse "(i0,2)"; rejects unknown or non-canonical names, suggesting the
  // canonical spelling.
  const Sector& by_name(const std::string& name, bool untwisted_only) const;

 private:
  const ExtensionProblem& p_;
  std::vector<Block> blocks_;
};

// Fusion of two untwisted sectors, computed by expanding the W-fusion of the
// orbit representatives and transporting each output. Entries are ordered by
// (orbit, alpha index); the transport bijection between W-outputs and sector
// outputs is asserted.
std::vector<std::pair<Sector, long>> fuse_sectors(const ExtensionProblem& p, const Sector& m1,
                                                  const Sector& m2);

// Fusion ring on the untwisted sectors (labels in sector-table order).
// The result is fully re-validated.
FusionRing build_u_ring(const ExtensionProblem& p);

// Simple currents of the extended ring: sectors (i, alpha) whose orbit
// representative is a simple current of W, with alpha in the principal
// charge coset. Cross-checked against the built ring, including the
// canonical family U^gamma = (0, gamma) for gamma in D-perp and its
// translation action U^gamma . (i, alpha) = (i, alpha + gamma).
struct USimpleCurrents {
  std::vector<std::string> currents;                            // sector names
  std::vector<std::pair<GroupElement, std::string>> canonical;  // gamma -> (0,gamma)
};
USimpleCurrents simple_currents_u(const ExtensionProblem& p, const SectorTable& table,
                                  const FusionRing& u_ring);

// Structure-constant transfer between the two rings, for three W-labels
// carrying charges alpha_p (each pair must lie in an untwisted sector):
//   UFromW: N_W(X1, X2, W^gamma . X3) with gamma = a1+a2-a3 if gamma in D, else 0.
//   WFromU: N_U(M1, M2, U^gamma . M3) with the same gamma if gamma in D-perp, else 0.
enum class TransferDirection { UFromW, WFromU };
long transfer_multiplicity(const ExtensionProblem& p, TransferDirection dir,
                           const std::array<int, 3>& x, const std::array<GroupElement, 3>& alpha);

// Duality between D-perp-orbits of untwisted sectors (under the canonical
// family acting by fusion on the built ring) and D-orbits of W-labels:
// Phi reads off the W-constituents, Psi solves the pairing condition
// b(W^beta, X) + b(beta, lambda) = 0 for lambda (unique mod D-perp). Both
// are verified to be mutually inverse, orbit-size ratios equal
// |D-perp| / |D|, and stabilizers on the two sides coincide.
struct OrbitCorrespondence {
  // per W-orbit i: the D-perp-orbit of untwisted sector labels (built-ring
  // label indices) and the W-constituent set Phi of that orbit.
  std::vector<std::vector<int>> u_orbits;
  std::vector<std::vector<int>> phi;
  std::vector<Subgroup> u_stab;  // stabilizer of the U-orbit inside D-perp
};
OrbitCorrespondence orbit_correspondence(const ExtensionProblem& p, const SectorTable& table,
                                         const FusionRing& u_ring);

}  // namespace fuselift

// Fusion rings with exact nonnegative-integer structure constants, weights
// mod 1, duality, validation of the ring axioms, simple-current machinery,
// tensor products, and weighted ring isomorphism search.
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fuselift/abgroup.hpp"
#include "fuselift/exactnum.hpp"
#include "fuselift/quadspace.hpp"

namespace fuselift {

struct ValidationReport {
  struct Violation {
    std::string identity;  // e.g. "associativity"
    std::string witness;   // labels and values where it fails
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class FusionRing {
 public:
  class Builder {
   public:
    Builder& labels(std::vector<std::string> ls);
    Builder& unit(std::string l);
    Builder& dual(const std::string& x, const std::string& y);
    Builder& weight(const std::string& x, QZ w);
    Builder& true_weight(const std::string& x, Rational h);
    Builder& rule(const std::string& a, const std::string& b, const std::string& c, long n);
    // Shape checks only (distinct labels, total maps, N >= 0); the ring
    // axioms are checked separately by validate().
    FusionRing build();

   private:
    friend class FusionRing;
    std::vector<std::string> labels_;
    std::optional<std::string> unit_;
    std::unordered_map<std::string, std::string> dual_;
    std::unordered_map<std::string, QZ> weight_;
    std::unordered_map<std::string, Rational> true_weight_;
    std::vector<std::tuple<std::string, std::string, std::string, long>> rules_;
  };

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  bool has_label(const std::string& l) const { return index_.count(l) != 0; }
  int index_of(const std::string& l) const;

  int unit() const { return unit_; }
  int dual(int x) const { return dual_[x]; }
  const QZ& weight(int x) const { return weight_[x]; }
  bool has_true_weights() const { return !true_weight_.empty(); }
  const Rational& true_weight(int x) const;

  long mult(int a, int b, int c) const;  // N(a,b,c)
  // Nonzero outputs of a (x) b, sorted by output label index.
  const std::vector<std::pair<int, long>>& fuse(int a, int b) const;
  std::vector<std::pair<std::string, long>> fuse(const std::string& a,
                                                 const std::string& b) const;
  long row_sum(int a, int b) const;  // sum_c N(a,b,c)

  // Full axiom check: unit law, commutativity, associativity (exhaustive),
  // duality, weight(unit) = 0. Violations are report entries, not exceptions.
  ValidationReport validate() const;

  bool is_simple_current(int a) const;  // all fusion row sums with a equal 1
  // For a simple current a: the unique label of a (x) x.
  int apply_current(int a, int x) const;
  // b(a, x) = weight(a (x) x) - weight(a) - weight(x), for a a simple current.
  QZ weight_pairing(int a, int x) const;

 private:
  friend class Builder;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  int unit_ = 0;
  std::vector<int> dual_;
  std::vector<QZ> weight_;
  std::vector<Rational> true_weight_;  // empty when absent
  std::vector<std::vector<std::pair<int, long>>> rows_;  // [a*size + b]
};

// Simple currents of a ring; when they close under fusion, also the abelian
// group they form and an isomorphism onto the labels.
struct SimpleCurrentInfo {
  std::vector<int> currents;  // sorted label indices
  struct Grading {
    GroupPtr group;                 // invariant-factor model
    std::vector<int> label_of;      // group element index -> ring label
  };
  std::optional<Grading> grading;  // present iff the set closes under fusion
};
SimpleCurrentInfo simple_currents(const FusionRing& r);

// Assignment of a simple current of the ring to every element of a subgroup.
struct SimpleCurrentGrading {
  Subgroup domain;
  std::vector<int> assign;  // parallel to domain.elements(); ring label indices
  int label_for(const GroupElement& beta) const;
};

// Labelwise tensor product; labels are "(x,y)".
FusionRing tensor_ring(const FusionRing& r1, const FusionRing& r2);

// Group ring of the space's group: one label per element, fusion = addition,
// weights = q. Labels are prefix + element text, e.g. "V[2]".
FusionRing group_ring(const QuadraticSpace& v, const std::string& prefix = "V");
FusionRing group_ring(const GroupPtr& g, const std::function<QZ(const GroupElement&)>& weight,
                      const std::string& prefix = "V");

// Bijection label -> label preserving unit, duals, N, and (optionally)
// weights mod 1; nullopt when none exists. result[i] = image of r1 label i.
std::optional<std::vector<int>> ring_isomorphic(const FusionRing& r1, const FusionRing& r2,
                                                bool match_weights);

}  // namespace fuselift

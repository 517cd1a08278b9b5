// Finite abelian groups in invariant-factor coordinates, their subgroups,
// cosets, and Q/Z-valued characters. Groups are immutable and shared;
// elements carry an owner reference and cross-group arithmetic is rejected.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fuselift/exactnum.hpp"

namespace fuselift {

class FinAbGroup;
using GroupPtr = std::shared_ptr<const FinAbGroup>;

class GroupElement {
 public:
  GroupElement(GroupPtr owner, std::vector<long> coords);

  const GroupPtr& owner() const { return owner_; }
  const std::vector<long>& coords() const { return coords_; }
  // Mixed-radix position in 0..order-1; equals the rank of the coordinate
  // vector in lexicographic order.
  long index() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement scaled(long n) const;
  bool is_zero() const;
  long order() const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;

  // "[1,3]"; "[]" for the trivial group's element.
  std::string str() const;
  // "1,3" (used inside sector names); "0" for the trivial group's element.
  std::string compact_str() const;

 private:
  void require_same_owner(const GroupElement& o) const;
  GroupPtr owner_;
  std::vector<long> coords_;
};

// Z_{n1} x ... x Z_{nr}; empty invariant list is the trivial group.
class FinAbGroup : public std::enable_shared_from_this<FinAbGroup> {
 public:
  // Each invariant must be >= 2.
  static GroupPtr make(std::vector<long> invariants);

  const std::vector<long>& invariants() const { return invariants_; }
  int rank() const { return static_cast<int>(invariants_.size()); }
  long order() const { return order_; }
  long exponent() const { return exponent_; }

  GroupElement zero() const;
  // Coordinates are reduced componentwise mod the invariants.
  GroupElement element(std::vector<long> coords) const;
  GroupElement element_at(long index) const;
  std::vector<GroupElement> elements() const;  // index order

  std::string str() const;  // "Z4", "Z2xZ4", "Z1"

 private:
  explicit FinAbGroup(std::vector<long> invariants);
  friend class GroupElement;
  std::vector<long> invariants_;
  std::vector<long> strides_;  // strides_[i] = product of invariants after i
  long order_ = 1;
  long exponent_ = 1;
};

// Subgroup stored as its sorted element list plus a membership bitmap.
class Subgroup {
 public:
  static Subgroup generate(const GroupPtr& g, const std::vector<GroupElement>& gens);
  // Validates closure under + and negation and membership of 0.
  static Subgroup from_elements(const GroupPtr& g, std::vector<GroupElement> elems);
  static Subgroup trivial(const GroupPtr& g);
  static Subgroup full(const GroupPtr& g);

  const GroupPtr& group() const { return group_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  long order() const { return static_cast<long>(elements_.size()); }
  bool contains(const GroupElement& e) const;
  bool contains_subgroup(const Subgroup& h) const;
  bool operator==(const Subgroup& o) const;

  // Canonical coset representative: the smallest-index element of e + this.
  GroupElement coset_rep(const GroupElement& e) const;
  // All cosets, each sorted by index, ordered by their canonical representative.
  std::vector<std::vector<GroupElement>> cosets() const;

  std::string str() const;  // "{[0],[2]}"

 private:
  Subgroup(GroupPtr g, std::vector<GroupElement> elems);
  GroupPtr group_;
  std::vector<GroupElement> elements_;
  std::vector<char> member_;  // indexed by element index
};

// Additive Q/Z-valued character on a subgroup.
class Character {
 public:
  // values run parallel to domain.elements(); additivity is validated.
  Character(Subgroup domain, std::vector<QZ> values);
  // chi(h) = f(h) for h in the domain; additivity validated.
  static Character from_function(const Subgroup& domain,
                                 const std::function<QZ(const GroupElement&)>& f);

  const Subgroup& domain() const { return domain_; }
  const std::vector<QZ>& values() const { return values_; }
  const QZ& value(const GroupElement& e) const;
  bool is_principal() const;

  bool operator==(const Character& o) const { return values_ == o.values_; }
  bool operator!=(const Character& o) const { return !(*this == o); }
  bool operator<(const Character& o) const { return values_ < o.values_; }

  std::string str() const;  // "(0,1/2)" in domain element order

 private:
  Subgroup domain_;
  std::vector<QZ> values_;
};

// {x in G : b(x, h) = 0 for all h in H}; b must be symmetric bi-additive
// (caller-validated; the result is checked to be a subgroup).
Subgroup orthogonal_complement(
    const GroupPtr& g,
    const std::function<QZ(const GroupElement&, const GroupElement&)>& b,
    const Subgroup& h);

}  // namespace fuselift

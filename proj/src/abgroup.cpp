#include "fuselift/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fuselift/errors.hpp"

namespace fuselift {

namespace {
long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}
}  // namespace

// ---- GroupElement ----

GroupElement::GroupElement(GroupPtr owner, std::vector<long> coords)
    : owner_(std::move(owner)), coords_(std::move(coords)) {
  if (!owner_) fail_domain("group element without owner");
  if (coords_.size() != owner_->invariants_.size())
    fail_domain("coordinate count does not match group rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = mod(coords_[i], owner_->invariants_[i]);
}

long GroupElement::index() const {
  long idx = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) idx += coords_[i] * owner_->strides_[i];
  return idx;
}

void GroupElement::require_same_owner(const GroupElement& o) const {
  if (owner_.get() != o.owner_.get())
    fail_domain("operation mixes elements of different groups");
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  require_same_owner(o);
  std::vector<long> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
  return GroupElement(owner_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + (-o); }

GroupElement GroupElement::operator-() const {
  std::vector<long> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return GroupElement(owner_, std::move(c));
}

GroupElement GroupElement::scaled(long n) const {
  std::vector<long> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = mod(n % owner_->invariants_[i], owner_->invariants_[i]) * coords_[i];
  return GroupElement(owner_, std::move(c));
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long c) { return c == 0; });
}

long GroupElement::order() const {
  long n = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    const long inv = owner_->invariants_[i];
    n = std::lcm(n, inv / std::gcd(coords_[i], inv));
  }
  return n;
}

bool GroupElement::operator==(const GroupElement& o) const {
  require_same_owner(o);
  return coords_ == o.coords_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  require_same_owner(o);
  return coords_ < o.coords_;
}

std::string GroupElement::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + "]";
}

std::string GroupElement::compact_str() const {
  if (coords_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

// ---- FinAbGroup ----

FinAbGroup::FinAbGroup(std::vector<long> invariants) : invariants_(std::move(invariants)) {
  strides_.assign(invariants_.size(), 1);
  for (int i = static_cast<int>(invariants_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * invariants_[i + 1];
  for (long n : invariants_) {
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

GroupPtr FinAbGroup::make(std::vector<long> invariants) {
  for (long n : invariants)
    if (n < 2) fail_domain("group invariants must all be >= 2");
  return GroupPtr(new FinAbGroup(std::move(invariants)));
}

GroupElement FinAbGroup::zero() const {
  return GroupElement(shared_from_this(), std::vector<long>(invariants_.size(), 0));
}

GroupElement FinAbGroup::element(std::vector<long> coords) const {
  return GroupElement(shared_from_this(), std::move(coords));
}

GroupElement FinAbGroup::element_at(long index) const {
  if (index < 0 || index >= order_) fail_domain("element index out of range");
  std::vector<long> c(invariants_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = index / strides_[i];
    index %= strides_[i];
  }
  return GroupElement(shared_from_this(), std::move(c));
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (long i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string FinAbGroup::str() const {
  if (invariants_.empty()) return "Z1";
  std::string s;
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (i) s += 'x';
    s += 'Z' + std::to_string(invariants_[i]);
  }
  return s;
}

// ---- Subgroup ----

Subgroup::Subgroup(GroupPtr g, std::vector<GroupElement> elems)
    : group_(std::move(g)), elements_(std::move(elems)), member_(group_->order(), 0) {
  std::sort(elements_.begin(), elements_.end(),
            [](const GroupElement& a, const GroupElement& b) { return a.index() < b.index(); });
  for (const auto& e : elements_) member_[e.index()] = 1;
}

Subgroup Subgroup::generate(const GroupPtr& g, const std::vector<GroupElement>& gens) {
  for (const auto& e : gens)
    if (e.owner().get() != g.get()) fail_domain("generator does not belong to the group");
  std::set<long> seen{g->zero().index()};
  std::vector<GroupElement> frontier{g->zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier)
      for (const auto& gen : gens) {
        GroupElement s = e + gen;
        if (seen.insert(s.index()).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  std::vector<GroupElement> elems;
  elems.reserve(seen.size());
  for (long idx : seen) elems.push_back(g->element_at(idx));
  return Subgroup(g, std::move(elems));
}

Subgroup Subgroup::from_elements(const GroupPtr& g, std::vector<GroupElement> elems) {
  std::set<long> idx;
  for (const auto& e : elems) {
    if (e.owner().get() != g.get()) fail_domain("element does not belong to the group");
    idx.insert(e.index());
  }
  if (!idx.count(0)) fail_domain("subgroup must contain 0");
  for (long a : idx)
    for (long b : idx) {
      const GroupElement s = g->element_at(a) + g->element_at(b);
      if (!idx.count(s.index())) fail_domain("element set is not closed under addition");
    }
  std::vector<GroupElement> out;
  for (long i : idx) out.push_back(g->element_at(i));
  return Subgroup(g, std::move(out));
}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, {g->zero()}); }

Subgroup Subgroup::full(const GroupPtr& g) { return Subgroup(g, g->elements()); }

bool Subgroup::contains(const GroupElement& e) const {
  if (e.owner().get() != group_.get()) fail_domain("membership test across groups");
  return member_[e.index()] != 0;
}

bool Subgroup::contains_subgroup(const Subgroup& h) const {
  if (h.group_.get() != group_.get()) fail_domain("subgroup comparison across groups");
  return std::all_of(h.elements_.begin(), h.elements_.end(),
                     [&](const GroupElement& e) { return member_[e.index()] != 0; });
}

bool Subgroup::operator==(const Subgroup& o) const {
  if (o.group_.get() != group_.get()) fail_domain("subgroup comparison across groups");
  return member_ == o.member_;
}

GroupElement Subgroup::coset_rep(const GroupElement& e) const {
  if (e.owner().get() != group_.get()) fail_domain("coset of an element from another group");
  long best = -1;
  for (const auto& h : elements_) {
    const long idx = (e + h).index();
    if (best < 0 || idx < best) best = idx;
  }
  return group_->element_at(best);
}

std::vector<std::vector<GroupElement>> Subgroup::cosets() const {
  std::vector<char> done(group_->order(), 0);
  std::vector<std::vector<GroupElement>> out;
  for (long i = 0; i < group_->order(); ++i) {
    if (done[i]) continue;
    std::vector<long> idxs;
    const GroupElement rep = group_->element_at(i);
    for (const auto& h : elements_) {
      const long j = (rep + h).index();
      done[j] = 1;
      idxs.push_back(j);
    }
    std::sort(idxs.begin(), idxs.end());
    std::vector<GroupElement> coset;
    for (long j : idxs) coset.push_back(group_->element_at(j));
    out.push_back(std::move(coset));
  }
  return out;
}

std::string Subgroup::str() const {
  // Bare coordinates would be ambiguous once elements have several of them,
  // so only rank-1 groups drop the brackets.
  const bool bare = group_->rank() <= 1;
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += bare ? elements_[i].compact_str() : elements_[i].str();
  }
  return s + "}";
}

// ---- Character ----

Character::Character(Subgroup domain, std::vector<QZ> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(domain_.order()))
    fail_domain("character value count does not match domain order");
  const auto& elems = domain_.elements();
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (value(elems[a] + elems[b]) != values_[a] + values_[b])
        fail_validation("character is not additive at " + elems[a].str() + " + " + elems[b].str());
    }
}

Character Character::from_function(const Subgroup& domain,
                                   const std::function<QZ(const GroupElement&)>& f) {
  std::vector<QZ> vals;
  vals.reserve(domain.order());
  for (const auto& e : domain.elements()) vals.push_back(f(e));
  return Character(domain, std::move(vals));
}

const QZ& Character::value(const GroupElement& e) const {
  if (!domain_.contains(e)) fail_domain("character evaluated outside its domain");
  const auto& elems = domain_.elements();
  const auto it = std::lower_bound(
      elems.begin(), elems.end(), e.index(),
      [](const GroupElement& x, long idx) { return x.index() < idx; });
  return values_[static_cast<std::size_t>(it - elems.begin())];
}

bool Character::is_principal() const {
  return std::all_of(values_.begin(), values_.end(), [](const QZ& v) { return v.is_zero(); });
}

std::string Character::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += values_[i].str();
  }
  return s + ")";
}

// ---- orthogonal complement ----

Subgroup orthogonal_complement(
    const GroupPtr& g,
    const std::function<QZ(const GroupElement&, const GroupElement&)>& b,
    const Subgroup& h) {
  if (h.group().get() != g.get()) fail_domain("subgroup belongs to a different group");
  std::vector<GroupElement> out;
  for (long i = 0; i < g->order(); ++i) {
    const GroupElement x = g->element_at(i);
    bool ortho = true;
    for (const auto& e : h.elements())
      if (!b(x, e).is_zero()) {
        ortho = false;
        break;
      }
    if (ortho) out.push_back(x);
  }
  // from_elements re-checks closure, catching non-bilinear b.
  return Subgroup::from_elements(g, std::move(out));
}

}  // namespace fuselift

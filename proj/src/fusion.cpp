#include "fuselift/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "fuselift/errors.hpp"

namespace fuselift {

namespace {
constexpr std::size_t kMaxViolations = 50;

void add_violation(ValidationReport& rep, const std::string& identity, std::string witness) {
  if (rep.violations.size() < kMaxViolations)
    rep.violations.push_back({identity, std::move(witness)});
}
}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += '\n';
    s += v.identity + ": " + v.witness;
  }
  return s;
}

// ---- Builder ----

FusionRing::Builder& FusionRing::Builder::labels(std::vector<std::string> ls) {
  labels_ = std::move(ls);
  return *this;
}
FusionRing::Builder& FusionRing::Builder::unit(std::string l) {
  unit_ = std::move(l);
  return *this;
}
FusionRing::Builder& FusionRing::Builder::dual(const std::string& x, const std::string& y) {
  dual_[x] = y;
  return *this;
}
FusionRing::Builder& FusionRing::Builder::weight(const std::string& x, QZ w) {
  weight_[x] = w;
  return *this;
}
FusionRing::Builder& FusionRing::Builder::true_weight(const std::string& x, Rational h) {
  true_weight_[x] = h;
  return *this;
}
FusionRing::Builder& FusionRing::Builder::rule(const std::string& a, const std::string& b,
                                               const std::string& c, long n) {
  rules_.emplace_back(a, b, c, n);
  return *this;
}

FusionRing FusionRing::Builder::build() {
  FusionRing r;
  if (labels_.empty()) fail_domain("fusion ring needs at least one label");
  r.labels_ = labels_;
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    const std::string& l = labels_[i];
    if (l.empty()) fail_domain("empty fusion ring label");
    if (!r.index_.emplace(l, i).second) fail_domain("duplicate fusion ring label '" + l + "'");
  }
  if (!unit_) fail_domain("fusion ring needs a unit label");
  r.unit_ = r.index_of(*unit_);

  r.dual_.assign(labels_.size(), -1);
  for (const auto& [x, y] : dual_) r.dual_[r.index_of(x)] = r.index_of(y);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (r.dual_[i] < 0) fail_domain("dual not defined for label '" + labels_[i] + "'");

  r.weight_.assign(labels_.size(), QZ());
  std::vector<char> has_w(labels_.size(), 0);
  for (const auto& [x, w] : weight_) {
    const int i = r.index_of(x);
    r.weight_[i] = w;
    has_w[i] = 1;
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!has_w[i]) fail_domain("weight not defined for label '" + labels_[i] + "'");

  if (!true_weight_.empty()) {
    if (true_weight_.size() != labels_.size())
      fail_domain("exact weights must cover all labels or none");
    r.true_weight_.assign(labels_.size(), Rational());
    for (const auto& [x, h] : true_weight_) {
      const int i = r.index_of(x);
      if (QZ(h) != r.weight_[i])
        fail_domain("exact weight of '" + x + "' disagrees with its weight mod 1");
      r.true_weight_[i] = h;
    }
  }

  const int n = r.size();
  std::map<std::tuple<int, int, int>, long> entries;
  for (const auto& [a, b, c, m] : rules_) {
    if (m < 0) fail_domain("negative structure constant at (" + a + "," + b + "," + c + ")");
    if (m == 0) continue;
    const auto key = std::make_tuple(r.index_of(a), r.index_of(b), r.index_of(c));
    if (!entries.emplace(key, m).second)
      fail_domain("duplicate structure constant at (" + a + "," + b + "," + c + ")");
  }
  r.rows_.assign(static_cast<std::size_t>(n) * n, {});
  for (const auto& [key, m] : entries) {
    const auto [a, b, c] = key;
    r.rows_[static_cast<std::size_t>(a) * n + b].emplace_back(c, m);
  }
  // map ordering already sorts each row by c
  return r;
}

// ---- FusionRing ----

int FusionRing::index_of(const std::string& l) const {
  const auto it = index_.find(l);
  if (it == index_.end()) fail_domain("unknown label '" + l + "'");
  return it->second;
}

const Rational& FusionRing::true_weight(int x) const {
  if (true_weight_.empty()) fail_domain("ring carries no exact weights");
  return true_weight_[x];
}

long FusionRing::mult(int a, int b, int c) const {
  const auto& row = rows_[static_cast<std::size_t>(a) * size() + b];
  const auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const std::pair<int, long>& e, int v) { return e.first < v; });
  return (it != row.end() && it->first == c) ? it->second : 0;
}

const std::vector<std::pair<int, long>>& FusionRing::fuse(int a, int b) const {
  return rows_[static_cast<std::size_t>(a) * size() + b];
}

std::vector<std::pair<std::string, long>> FusionRing::fuse(const std::string& a,
                                                           const std::string& b) const {
  std::vector<std::pair<std::string, long>> out;
  for (const auto& [c, n] : fuse(index_of(a), index_of(b))) out.emplace_back(labels_[c], n);
  return out;
}

long FusionRing::row_sum(int a, int b) const {
  long s = 0;
  for (const auto& [c, n] : fuse(a, b)) s += n;
  return s;
}

ValidationReport FusionRing::validate() const {
  ValidationReport rep;
  const int n = size();

  if (!weight_[unit_].is_zero())
    add_violation(rep, "unit weight",
                  "weight(" + labels_[unit_] + ") = " + weight_[unit_].str() + ", expected 0");

  for (int x = 0; x < n; ++x) {
    const auto check_unit_row = [&](const std::vector<std::pair<int, long>>& row, const char* side) {
      if (row.size() != 1 || row[0].first != x || row[0].second != 1)
        add_violation(rep, "unit law",
                      std::string(side) + " product of unit with " + labels_[x] +
                          " is not exactly 1*" + labels_[x]);
    };
    check_unit_row(fuse(unit_, x), "left");
    check_unit_row(fuse(x, unit_), "right");
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (fuse(a, b) != fuse(b, a))
        add_violation(rep, "commutativity",
                      labels_[a] + "." + labels_[b] + " != " + labels_[b] + "." + labels_[a]);

  for (int x = 0; x < n; ++x) {
    if (dual_[dual_[x]] != x)
      add_violation(rep, "duality", "dual is not an involution at " + labels_[x]);
    for (int y = 0; y < n; ++y) {
      const long expect = (y == dual_[x]) ? 1 : 0;
      const long got = mult(x, y, unit_);
      if (got != expect)
        add_violation(rep, "duality",
                      "N(" + labels_[x] + "," + labels_[y] + "," + labels_[unit_] + ") = " +
                          std::to_string(got) + ", expected " + std::to_string(expect));
    }
  }

  // Associativity: compare coefficient vectors of (x.y).z and x.(y.z).
  std::vector<long> lhs(n), rhs(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& xy = fuse(x, y);
      for (int z = 0; z < n; ++z) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [e, m] : xy)
          for (const auto& [f, k] : fuse(e, z)) lhs[f] += m * k;
        for (const auto& [e, m] : fuse(y, z))
          for (const auto& [f, k] : fuse(x, e)) rhs[f] += m * k;
        if (lhs != rhs) {
          for (int f = 0; f < n; ++f)
            if (lhs[f] != rhs[f]) {
              add_violation(rep, "associativity",
                            "(" + labels_[x] + "." + labels_[y] + ")." + labels_[z] + " vs " +
                                labels_[x] + ".(" + labels_[y] + "." + labels_[z] +
                                ") differ at " + labels_[f] + ": " + std::to_string(lhs[f]) +
                                " vs " + std::to_string(rhs[f]));
              break;
            }
          if (rep.violations.size() >= kMaxViolations) return rep;
        }
      }
    }
  return rep;
}

bool FusionRing::is_simple_current(int a) const {
  for (int x = 0; x < size(); ++x)
    if (row_sum(a, x) != 1) return false;
  return true;
}

int FusionRing::apply_current(int a, int x) const {
  const auto& row = fuse(a, x);
  if (row.size() != 1 || row[0].second != 1)
    fail_domain("label '" + labels_[a] + "' does not act as a simple current on '" + labels_[x] +
                "'");
  return row[0].first;
}

QZ FusionRing::weight_pairing(int a, int x) const {
  return weight_[apply_current(a, x)] - weight_[a] - weight_[x];
}

int SimpleCurrentGrading::label_for(const GroupElement& beta) const {
  if (!domain.contains(beta)) fail_domain("grading evaluated outside its domain");
  const auto& elems = domain.elements();
  const auto it =
      std::lower_bound(elems.begin(), elems.end(), beta.index(),
                       [](const GroupElement& x, long idx) { return x.index() < idx; });
  return assign[static_cast<std::size_t>(it - elems.begin())];
}

// ---- simple currents and their group structure ----

namespace {

// Multiplication table of a finite abelian group given by positions 0..n-1.
struct MulTable {
  std::vector<std::vector<int>> mul;
  int unit;
  int size() const { return static_cast<int>(mul.size()); }
  int order_of(int x) const {
    int n = 1, y = x;
    while (y != unit) {
      y = mul[y][x];
      ++n;
    }
    return n;
  }
};

// Invariant factors n1 >= n2 >= ... via successive maximal-order quotients.
std::vector<long> invariant_factors(const MulTable& t) {
  if (t.size() == 1) return {};
  int best = 0, best_ord = 1;
  for (int x = 0; x < t.size(); ++x) {
    const int o = t.order_of(x);
    if (o > best_ord) {
      best_ord = o;
      best = x;
    }
  }
  // quotient by <best>
  std::vector<int> coset(t.size(), -1);
  std::vector<int> reps;
  for (int x = 0; x < t.size(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    int y = x;
    do {
      coset[y] = id;
      y = t.mul[y][best];
    } while (y != x);
  }
  MulTable q;
  q.unit = coset[t.unit];
  q.mul.assign(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) q.mul[i][j] = coset[t.mul[reps[i]][reps[j]]];
  std::vector<long> factors{static_cast<long>(best_ord)};
  for (long f : invariant_factors(q)) factors.push_back(f);
  return factors;
}

// Find generators realizing the invariant factors; DFS with backtracking.
bool find_basis(const MulTable& t, const std::vector<long>& factors, std::size_t depth,
                std::vector<char>& span, std::vector<int>& gens) {
  if (depth == factors.size()) return true;
  const long want = factors[depth];
  for (int g = 0; g < t.size(); ++g) {
    if (t.order_of(g) != want) continue;
    // <g> must meet the current span only at the unit
    bool clean = true;
    for (int y = t.mul[t.unit][g]; y != t.unit; y = t.mul[y][g])
      if (span[y]) {
        clean = false;
        break;
      }
    if (!clean) continue;
    std::vector<char> next = span;
    std::vector<int> members;
    for (int x = 0; x < t.size(); ++x)
      if (span[x]) members.push_back(x);
    for (int x : members) {
      int y = x;
      for (long k = 1; k < want; ++k) {
        y = t.mul[y][g];
        next[y] = 1;
      }
    }
    gens.push_back(g);
    if (find_basis(t, factors, depth + 1, next, gens)) {
      span = std::move(next);
      return true;
    }
    gens.pop_back();
  }
  return false;
}

}  // namespace

SimpleCurrentInfo simple_currents(const FusionRing& r) {
  SimpleCurrentInfo info;
  for (int x = 0; x < r.size(); ++x)
    if (r.is_simple_current(x)) info.currents.push_back(x);

  // closure under fusion
  std::vector<int> pos(r.size(), -1);
  for (std::size_t i = 0; i < info.currents.size(); ++i) pos[info.currents[i]] = static_cast<int>(i);
  if (pos[r.unit()] < 0) return info;
  MulTable t;
  t.unit = pos[r.unit()];
  t.mul.assign(info.currents.size(), std::vector<int>(info.currents.size()));
  for (std::size_t i = 0; i < info.currents.size(); ++i)
    for (std::size_t j = 0; j < info.currents.size(); ++j) {
      const int out = r.apply_current(info.currents[i], info.currents[j]);
      if (pos[out] < 0) return info;  // not closed: no group structure
      t.mul[i][j] = pos[out];
    }

  const std::vector<long> factors = invariant_factors(t);
  std::vector<char> span(t.size(), 0);
  span[t.unit] = 1;
  std::vector<int> gens;
  if (!find_basis(t, factors, 0, span, gens))
    fail_validation("simple currents close under fusion but admit no abelian basis");

  SimpleCurrentInfo::Grading grading;
  grading.group = FinAbGroup::make(factors);
  grading.label_of.assign(grading.group->order(), -1);
  for (long idx = 0; idx < grading.group->order(); ++idx) {
    const GroupElement e = grading.group->element_at(idx);
    int acc = t.unit;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (long k = 0; k < e.coords()[i]; ++k) acc = t.mul[acc][gens[i]];
    grading.label_of[idx] = info.currents[acc];
  }
  info.grading = std::move(grading);
  return info;
}

// ---- tensor product and group rings ----

FusionRing tensor_ring(const FusionRing& r1, const FusionRing& r2) {
  const int n1 = r1.size(), n2 = r2.size();
  const auto name = [&](int i, int j) {
    return "(" + r1.label(i) + "," + r2.label(j) + ")";
  };
  FusionRing::Builder b;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n1) * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) labels.push_back(name(i, j));
  b.labels(labels).unit(name(r1.unit(), r2.unit()));
  const bool tw = r1.has_true_weights() && r2.has_true_weights();
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      b.dual(name(i, j), name(r1.dual(i), r2.dual(j)));
      b.weight(name(i, j), r1.weight(i) + r2.weight(j));
      if (tw) b.true_weight(name(i, j), r1.true_weight(i) + r2.true_weight(j));
    }
  for (int a1 = 0; a1 < n1; ++a1)
    for (int b1 = 0; b1 < n1; ++b1)
      for (const auto& [c1, m1] : r1.fuse(a1, b1))
        for (int a2 = 0; a2 < n2; ++a2)
          for (int b2 = 0; b2 < n2; ++b2)
            for (const auto& [c2, m2] : r2.fuse(a2, b2))
              b.rule(name(a1, a2), name(b1, b2), name(c1, c2), m1 * m2);
  return b.build();
}

FusionRing group_ring(const GroupPtr& g, const std::function<QZ(const GroupElement&)>& weight,
                      const std::string& prefix) {
  FusionRing::Builder b;
  std::vector<std::string> labels;
  const auto name = [&](const GroupElement& e) { return prefix + e.str(); };
  for (const auto& e : g->elements()) labels.push_back(name(e));
  b.labels(labels).unit(name(g->zero()));
  for (const auto& e : g->elements()) {
    b.dual(name(e), name(-e));
    b.weight(name(e), weight(e));
    for (const auto& f : g->elements()) b.rule(name(e), name(f), name(e + f), 1);
  }
  return b.build();
}

FusionRing group_ring(const QuadraticSpace& v, const std::string& prefix) {
  return group_ring(v.group(), [&](const GroupElement& e) { return v.q(e); }, prefix);
}

// ---- isomorphism search ----

namespace {

std::string signature(const FusionRing& r, int x, bool match_weights) {
  std::string s;
  if (match_weights) s += r.weight(x).str();
  s += '|';
  s += (r.dual(x) == x) ? '1' : '0';
  s += '|';
  s += std::to_string(r.mult(x, x, x));
  s += '|';
  std::vector<long> sums;
  for (int y = 0; y < r.size(); ++y) sums.push_back(r.row_sum(x, y));
  std::sort(sums.begin(), sums.end());
  for (long v : sums) s += std::to_string(v) + ',';
  s += '|';
  std::vector<long> self;
  for (int y = 0; y < r.size(); ++y) self.push_back(r.mult(x, y, y));
  std::sort(self.begin(), self.end());
  for (long v : self) s += std::to_string(v) + ',';
  return s;
}

struct IsoSearch {
  const FusionRing& r1;
  const FusionRing& r2;
  bool match_weights;
  std::vector<std::string> sig1, sig2;
  std::vector<int> perm;        // r1 label -> r2 label or -1
  std::vector<char> used;       // r2 labels already hit
  std::vector<int> order;       // assignment order of r1 labels
  std::vector<int> assigned;    // r1 labels assigned so far

  bool consistent(int x, int y) const {
    if (sig1[x] != sig2[y]) return false;
    if (match_weights && r1.weight(x) != r2.weight(y)) return false;
    const int dx = r1.dual(x);
    if (dx == x && r2.dual(y) != y) return false;
    if (perm[dx] >= 0 && r2.dual(y) != perm[dx]) return false;
    // all structure constants among assigned+x must transport
    for (int a : assigned) {
      for (int b : assigned) {
        if (r1.mult(a, b, x) != r2.mult(perm[a], perm[b], y)) return false;
        if (r1.mult(a, x, b) != r2.mult(perm[a], y, perm[b])) return false;
        if (r1.mult(x, a, b) != r2.mult(y, perm[a], perm[b])) return false;
      }
      if (r1.mult(a, x, x) != r2.mult(perm[a], y, y)) return false;
      if (r1.mult(x, a, x) != r2.mult(y, perm[a], y)) return false;
      if (r1.mult(x, x, a) != r2.mult(y, y, perm[a])) return false;
    }
    if (r1.mult(x, x, x) != r2.mult(y, y, y)) return false;
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const int x = order[depth];
    for (int y = 0; y < r2.size(); ++y) {
      if (used[y]) continue;
      if (!consistent(x, y)) continue;
      perm[x] = y;
      used[y] = 1;
      assigned.push_back(x);
      if (run(depth + 1)) return true;
      assigned.pop_back();
      used[y] = 0;
      perm[x] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> ring_isomorphic(const FusionRing& r1, const FusionRing& r2,
                                                bool match_weights) {
  if (r1.size() != r2.size()) return std::nullopt;
  IsoSearch s{r1, r2, match_weights, {}, {}, {}, {}, {}, {}};
  for (int x = 0; x < r1.size(); ++x) s.sig1.push_back(signature(r1, x, match_weights));
  for (int y = 0; y < r2.size(); ++y) s.sig2.push_back(signature(r2, y, match_weights));
  {
    auto m1 = s.sig1, m2 = s.sig2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return std::nullopt;
  }
  s.perm.assign(r1.size(), -1);
  s.used.assign(r2.size(), 0);
  // unit first, then rarest signatures first
  std::map<std::string, int> freq;
  for (const auto& sg : s.sig1) ++freq[sg];
  for (int x = 0; x < r1.size(); ++x)
    if (x != r1.unit()) s.order.push_back(x);
  std::sort(s.order.begin(), s.order.end(), [&](int a, int bx) {
    const int fa = freq[s.sig1[a]], fb = freq[s.sig1[bx]];
    return fa != fb ? fa < fb : a < bx;
  });
  s.order.insert(s.order.begin(), r1.unit());
  if (!s.consistent(r1.unit(), r2.unit())) return std::nullopt;
  s.perm[r1.unit()] = r2.unit();
  s.used[r2.unit()] = 1;
  s.assigned.push_back(r1.unit());
  if (!s.run(1)) return std::nullopt;
  return s.perm;
}

}  // namespace fuselift

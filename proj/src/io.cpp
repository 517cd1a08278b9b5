#include "fuselift/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <vector>

#include "fuselift/errors.hpp"

namespace fuselift {

namespace {

const Json& get(const Json& j, const std::string& key, const std::string& doc) {
  if (!j.is_object()) fail_parse(doc + " must be an object");
  const auto it = j.find(key);
  if (it == j.end()) fail_parse(doc + " is missing key \"" + key + "\"");
  return *it;
}

std::string get_string(const Json& j, const std::string& what) {
  if (!j.is_string()) fail_parse(what + " must be a string");
  return j.get<std::string>();
}

long get_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail_parse(what + " must be an integer");
  return j.get<long>();
}

GroupElement element_from_json(const Json& j, const GroupPtr& g, const std::string& what) {
  if (!j.is_array()) fail_parse(what + " must be a coordinate array");
  std::vector<long> coords;
  for (const auto& c : j) coords.push_back(get_integer(c, what + " coordinate"));
  if (static_cast<int>(coords.size()) != g->rank())
    fail_parse(what + " has " + std::to_string(coords.size()) + " coordinates, expected " +
               std::to_string(g->rank()));
  return g->element(std::move(coords));
}

Json element_to_json(const GroupElement& e) {
  Json a = Json::array();
  for (const long c : e.coords()) a.push_back(c);
  return a;
}

Subgroup subgroup_from_json(const Json& j, const GroupPtr& g, const std::string& what) {
  if (!j.is_array()) fail_parse(what + " must be an array of generators");
  std::vector<GroupElement> gens;
  for (const auto& gen : j) gens.push_back(element_from_json(gen, g, what + " generator"));
  return Subgroup::generate(g, gens);
}

Json subgroup_to_json(const Subgroup& s) {
  Json a = Json::array();
  for (const auto& e : s.elements()) a.push_back(element_to_json(e));
  return a;
}

}  // namespace

Json ring_to_json(const FusionRing& r) {
  Json j = Json::object();
  Json labels = Json::array();
  for (int x = 0; x < r.size(); ++x) labels.push_back(r.label(x));
  j["labels"] = std::move(labels);
  j["unit"] = r.label(r.unit());
  Json dual = Json::object();
  for (int x = 0; x < r.size(); ++x) dual[r.label(x)] = r.label(r.dual(x));
  j["dual"] = std::move(dual);
  Json weights = Json::object();
  for (int x = 0; x < r.size(); ++x) weights[r.label(x)] = r.weight(x).str();
  j["weights"] = std::move(weights);
  if (r.has_true_weights()) {
    Json tw = Json::object();
    for (int x = 0; x < r.size(); ++x) tw[r.label(x)] = r.true_weight(x).str();
    j["true_weights"] = std::move(tw);
  }
  Json fusion = Json::array();
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      for (const auto& [c, n] : r.fuse(a, b)) {
        Json entry = Json::object();
        entry["a"] = r.label(a);
        entry["b"] = r.label(b);
        entry["c"] = r.label(c);
        entry["n"] = n;
        fusion.push_back(std::move(entry));
      }
  j["fusion"] = std::move(fusion);
  return j;
}

FusionRing ring_from_json(const Json& j) {
  FusionRing::Builder b;
  const Json& labels = get(j, "labels", "ring");
  if (!labels.is_array()) fail_parse("ring labels must be an array");
  std::vector<std::string> ls;
  for (const auto& l : labels) ls.push_back(get_string(l, "ring label"));
  b.labels(std::move(ls));
  b.unit(get_string(get(j, "unit", "ring"), "ring unit"));
  const Json& dual = get(j, "dual", "ring");
  if (!dual.is_object()) fail_parse("ring dual must be an object");
  for (const auto& [x, y] : dual.items()) b.dual(x, get_string(y, "dual of " + x));
  const Json& weights = get(j, "weights", "ring");
  if (!weights.is_object()) fail_parse("ring weights must be an object");
  for (const auto& [x, w] : weights.items())
    b.weight(x, QZ::parse(get_string(w, "weight of " + x)));
  if (j.contains("true_weights")) {
    const Json& tw = j["true_weights"];
    if (!tw.is_object()) fail_parse("ring true_weights must be an object");
    for (const auto& [x, w] : tw.items())
      b.true_weight(x, Rational::parse(get_string(w, "true weight of " + x)));
  }
  const Json& fusion = get(j, "fusion", "ring");
  if (!fusion.is_array()) fail_parse("ring fusion must be an array");
  for (const auto& entry : fusion) {
    const long n = get_integer(get(entry, "n", "fusion entry"), "fusion multiplicity");
    if (n < 0) fail_parse("fusion multiplicity must be nonnegative");
    b.rule(get_string(get(entry, "a", "fusion entry"), "fusion label a"),
           get_string(get(entry, "b", "fusion entry"), "fusion label b"),
           get_string(get(entry, "c", "fusion entry"), "fusion label c"), n);
  }
  return b.build();
}

Json space_to_json(const QuadraticSpace& v) {
  Json j = Json::object();
  Json group = Json::array();
  for (const long inv : v.group()->invariants()) group.push_back(inv);
  j["group"] = std::move(group);
  Json q = Json::object();
  for (long i = 0; i < v.group()->order(); ++i) {
    const GroupElement e = v.group()->element_at(i);
    q[e.str()] = v.q(e).str();
  }
  j["q"] = std::move(q);
  return j;
}

QuadraticSpace space_from_json(const Json& j) {
  const Json& group = get(j, "group", "space");
  if (!group.is_array()) fail_parse("space group must be an array of invariants");
  std::vector<long> invariants;
  for (const auto& inv : group) invariants.push_back(get_integer(inv, "group invariant"));
  GroupPtr g = FinAbGroup::make(std::move(invariants));
  const Json& q = get(j, "q", "space");
  if (!q.is_object()) fail_parse("space q must be an object");
  std::vector<QZ> values;
  values.reserve(static_cast<std::size_t>(g->order()));
  for (long i = 0; i < g->order(); ++i) {
    const GroupElement e = g->element_at(i);
    const auto it = q.find(e.str());
    if (it == q.end()) fail_parse("space q is missing element " + e.str());
    values.push_back(QZ::parse(get_string(*it, "q(" + e.str() + ")")));
  }
  if (q.size() != static_cast<std::size_t>(g->order()))
    fail_parse("space q names elements outside the group");
  return QuadraticSpace::make(std::move(g), std::move(values));
}

Json extension_to_json(const ExtensionProblem& p) {
  Json j = Json::object();
  j["W"] = ring_to_json(p.w_ring());
  j["V"] = space_to_json(p.v_space());
  j["D"] = subgroup_to_json(p.d());
  Json grading = Json::object();
  for (const auto& beta : p.d().elements())
    grading[beta.str()] = p.w_ring().label(p.grading().label_for(beta));
  j["grading"] = std::move(grading);
  return j;
}

ExtensionProblem extension_from_json(const Json& j) {
  FusionRing w = ring_from_json(get(j, "W", "extension problem"));
  QuadraticSpace v = space_from_json(get(j, "V", "extension problem"));
  const GroupPtr g = v.group();
  Subgroup d = subgroup_from_json(get(j, "D", "extension problem"), g, "D");
  const Json& grading = get(j, "grading", "extension problem");
  if (!grading.is_object()) fail_parse("grading must be an object");
  SimpleCurrentGrading sg{d, {}};
  for (const auto& beta : d.elements()) {
    const auto it = grading.find(beta.str());
    if (it == grading.end()) fail_parse("grading is missing element " + beta.str());
    sg.assign.push_back(w.index_of(get_string(*it, "grading at " + beta.str())));
  }
  if (grading.size() != static_cast<std::size_t>(d.order()))
    fail_parse("grading names elements outside the subgroup");
  return ExtensionProblem::validate(std::move(w), std::move(v), std::move(d), std::move(sg));
}

Json inverse_to_json(const InverseProblem& ip) {
  Json j = Json::object();
  j["U"] = ring_to_json(ip.u_ring());
  j["V"] = space_to_json(ip.v_space());
  j["D"] = subgroup_to_json(ip.d());
  Json grading = Json::object();
  for (const auto& gamma : ip.d_perp().elements())
    grading[gamma.str()] = ip.u_ring().label(ip.grading_u().label_for(gamma));
  j["gradingU"] = std::move(grading);
  Json branching = Json::object();
  for (int i = 0; i < ip.orbits().count(); ++i)
    branching[ip.u_ring().label(ip.orbits().rep[i])] = element_to_json(ip.lambda()[i]);
  j["branching"] = std::move(branching);
  return j;
}

InverseProblem inverse_from_json(const Json& j) {
  FusionRing u = ring_from_json(get(j, "U", "inverse problem"));
  QuadraticSpace v = space_from_json(get(j, "V", "inverse problem"));
  const GroupPtr g = v.group();
  Subgroup d = subgroup_from_json(get(j, "D", "inverse problem"), g, "D");
  const Subgroup dp = v.perp(d);
  const Json& grading = get(j, "gradingU", "inverse problem");
  if (!grading.is_object()) fail_parse("gradingU must be an object");
  SimpleCurrentGrading sg{dp, {}};
  for (const auto& gamma : dp.elements()) {
    const auto it = grading.find(gamma.str());
    if (it == grading.end()) fail_parse("gradingU is missing element " + gamma.str());
    sg.assign.push_back(u.index_of(get_string(*it, "gradingU at " + gamma.str())));
  }
  if (grading.size() != static_cast<std::size_t>(dp.order()))
    fail_parse("gradingU names elements outside the orthogonal complement");
  const Json& branching = get(j, "branching", "inverse problem");
  if (!branching.is_object()) fail_parse("branching must be an object");
  std::vector<std::pair<std::string, GroupElement>> branch;
  for (const auto& [label, charge] : branching.items())
    branch.emplace_back(label, element_from_json(charge, g, "branching charge of " + label));
  return InverseProblem::validate(std::move(u), std::move(v), std::move(d), std::move(sg),
                                  std::move(branch));
}

FileKind detect_kind(const Json& j) {
  if (!j.is_object()) fail_parse("document must be an object");
  if (j.contains("W")) return FileKind::Extension;
  if (j.contains("U")) return FileKind::Inverse;
  if (j.contains("labels")) return FileKind::Ring;
  if (j.contains("group")) return FileKind::Space;
  fail_parse("document has none of the recognized top-level keys (W, U, labels, group)");
}

namespace {

std::string summands_text(const ExtensionProblem& p, const Sector& s) {
  std::string out;
  for (const auto& [w, charge] : s.decomposition) {
    if (!out.empty()) out += " + ";
    out += p.w_ring().label(w) + "*V[" + charge.compact_str() + "]";
  }
  return out;
}

Json sector_to_json(const ExtensionProblem& p, const Sector& s) {
  Json j = Json::object();
  j["name"] = s.name;
  j["orbit"] = s.orbit;
  j["alpha"] = element_to_json(s.alpha);
  j["weight"] = s.weight.str();
  Json summands = Json::array();
  for (const auto& [w, charge] : s.decomposition) {
    Json entry = Json::object();
    entry["label"] = p.w_ring().label(w);
    entry["charge"] = element_to_json(charge);
    summands.push_back(std::move(entry));
  }
  j["summands"] = std::move(summands);
  return j;
}

}  // namespace

Json sector_table_to_json(const ExtensionProblem& p, const SectorTable& t, bool twisted) {
  Json blocks = Json::array();
  for (const auto& block : t.blocks()) {
    if (!twisted && !block.chi.is_principal()) continue;
    Json b = Json::object();
    Json chi = Json::object();
    for (const auto& beta : p.d().elements()) chi[beta.str()] = block.chi.value(beta).str();
    b["character"] = std::move(chi);
    b["twisted"] = !block.chi.is_principal();
    Json sectors = Json::array();
    for (const auto& s : block.sectors) sectors.push_back(sector_to_json(p, s));
    b["sectors"] = std::move(sectors);
    blocks.push_back(std::move(b));
  }
  Json j = Json::object();
  j["blocks"] = std::move(blocks);
  return j;
}

std::string sector_table_to_text(const ExtensionProblem& p, const SectorTable& t, bool twisted) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"character", "i", "alpha", "weight", "summands"});
  for (const auto& block : t.blocks()) {
    if (!twisted && !block.chi.is_principal()) continue;
    for (const auto& s : block.sectors)
      rows.push_back({block.chi.str(), std::to_string(s.orbit), s.alpha.compact_str(),
                      s.weight.str(), summands_text(p, s)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& r : rows)
    for (int c = 0; c < 5; ++c) width[c] = std::max(width[c], r[c].size());
  std::string out;
  for (const auto& r : rows) {
    for (int c = 0; c < 5; ++c) {
      out += r[c];
      if (c < 4) out += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail_parse(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_parse("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail_parse("cannot read file '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail_parse("cannot write file '" + path + "'");
  out << content;
  out.flush();
  if (!out) fail_parse("cannot write file '" + path + "'");
}

}  // namespace fuselift

// Regenerates the bundled model files. Usage: fuselift_genmodels [OUTDIR]
// (default "data"). Output is deterministic, so reruns are no-ops in git.
#include <filesystem>
#include <iostream>
#include <string>

#include "fuselift/catalog.hpp"
#include "fuselift/io.hpp"

using namespace fuselift;

namespace {

FusionRing ising_ring() {
  FusionRing::Builder b;
  b.labels({"1", "eps", "sigma"});
  b.unit("1");
  b.dual("1", "1").dual("eps", "eps").dual("sigma", "sigma");
  b.weight("1", QZ()).weight("eps", QZ(Rational(1, 2))).weight("sigma", QZ(Rational(1, 16)));
  b.true_weight("1", Rational(0)).true_weight("eps", Rational(1, 2));
  b.true_weight("sigma", Rational(1, 16));
  auto sym = [&](const std::string& x, const std::string& y, const std::string& z) {
    b.rule(x, y, z, 1);
    if (x != y) b.rule(y, x, z, 1);
  };
  for (const auto& l : {"1", "eps", "sigma"}) {
    sym("1", l, l);
  }
  sym("eps", "eps", "1");
  sym("eps", "sigma", "sigma");
  sym("sigma", "sigma", "1");
  sym("sigma", "sigma", "eps");
  return b.build();
}

ExtensionProblem ising_extension() {
  FusionRing w = ising_ring();
  QuadraticSpace v = lattice_rank1(2, 1);
  const GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {g->element({2})});
  SimpleCurrentGrading grading{d, {w.index_of("1"), w.index_of("eps")}};
  return ExtensionProblem::validate(std::move(w), std::move(v), std::move(d), std::move(grading));
}

ExtensionProblem trivial_extension() {
  FusionRing w = ising_ring();
  QuadraticSpace v = lattice_rank1(2, 1);
  const GroupPtr g = v.group();
  Subgroup d = Subgroup::generate(g, {});
  SimpleCurrentGrading grading{d, {w.index_of("1")}};
  return ExtensionProblem::validate(std::move(w), std::move(v), std::move(d), std::move(grading));
}

ExtensionProblem ising_squared_extension() {
  FusionRing w = tensor_ring(ising_ring(), ising_ring());
  GroupPtr g = FinAbGroup::make({4, 4});
  std::vector<QZ> q;
  for (long i = 0; i < g->order(); ++i) {
    const GroupElement e = g->element_at(i);
    const auto& c = e.coords();
    q.emplace_back(Rational(c[0] * c[0] + c[1] * c[1], 8));
  }
  QuadraticSpace v = QuadraticSpace::make(g, std::move(q));
  Subgroup d = Subgroup::generate(g, {g->element({2, 2})});
  SimpleCurrentGrading grading{d, {w.index_of("(1,1)"), w.index_of("(eps,eps)")}};
  return ExtensionProblem::validate(std::move(w), std::move(v), std::move(d), std::move(grading));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  try {
    std::filesystem::create_directories(dir);
    const auto emit = [&](const std::string& name, const Json& j) {
      const std::string path = dir + "/" + name;
      write_file(path, to_text(j));
      std::cout << "wrote " << path << "\n";
    };
    emit("ising.ring.json", ring_to_json(ising_ring()));
    emit("k1.ext.json", extension_to_json(parafermion_extension(1)));
    emit("k2.ext.json", extension_to_json(ising_extension()));
    emit("k3.ext.json", extension_to_json(parafermion_extension(3)));
    emit("k4.ext.json", extension_to_json(parafermion_extension(4)));
    emit("ising2.ext.json", extension_to_json(ising_squared_extension()));
    emit("trivial.ext.json", extension_to_json(trivial_extension()));
    emit("sl2k2.inv.json", inverse_to_json(parafermion_inverse(2)));
    emit("sl2k3.inv.json", inverse_to_json(parafermion_inverse(3)));
  } catch (const std::exception& e) {
    std::cerr << "genmodels: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

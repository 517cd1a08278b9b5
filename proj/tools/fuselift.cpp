// Command-line front end: validate model files, enumerate extension sectors,
// fuse sectors, build extended rings, recover rings from inverse problems,
// deform lattices, and emit built-in catalog models.
//
// Exit codes: 0 success, 1 domain or validation failure, 2 parse/usage/I-O.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fuselift/catalog.hpp"
#include "fuselift/errors.hpp"
#include "fuselift/io.hpp"

using namespace fuselift;

namespace {

// Paths that do not exist locally fall back to $FUSELIFT_CATALOG_DIR/<path>.
std::string resolve(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* dir = std::getenv("FUSELIFT_CATALOG_DIR")) {
    const fs::path candidate = fs::path(dir) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;
}

Json load(const std::string& path) { return parse_json_text(read_file(resolve(path))); }

void put(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

std::string count_of(int n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

int run_check(const std::vector<std::string>& files) {
  int worst = 0;
  for (const auto& f : files) {
    try {
      const Json j = load(f);
      switch (detect_kind(j)) {
        case FileKind::Ring: {
          const FusionRing r = ring_from_json(j);
          const ValidationReport report = r.validate();
          if (!report.ok()) fail_validation(report.summary());
          std::cout << f << ": ring OK (" << count_of(r.size(), "label") << ")\n";
          break;
        }
        case FileKind::Space: {
          const QuadraticSpace v = space_from_json(j);
          std::cout << f << ": space OK (" << v.group()->str() << ", "
                    << (v.is_nondegenerate() ? "non-degenerate" : "degenerate") << ")\n";
          break;
        }
        case FileKind::Extension: {
          const ExtensionProblem p = extension_from_json(j);
          std::cout << f << ": extension OK (" << count_of(p.w_ring().size(), "label") << " over "
                    << p.v_space().group()->str() << ", |D| = " << p.d().order()
                    << ", D-perp = " << p.d_perp().str() << ")\n";
          break;
        }
        case FileKind::Inverse: {
          const InverseProblem ip = inverse_from_json(j);
          std::cout << f << ": inverse OK (" << count_of(ip.u_ring().size(), "label") << " over "
                    << ip.v_space().group()->str() << ", "
                    << count_of(ip.orbits().count(), "orbit")
                    << ", D-perp = " << ip.d_perp().str() << ")\n";
          break;
        }
      }
    } catch (const ParseError& e) {
      std::cout << f << ": FAIL (" << e.what() << ")\n";
      worst = std::max(worst, 2);
    } catch (const std::exception& e) {
      std::cout << f << ": FAIL (" << e.what() << ")\n";
      worst = std::max(worst, 1);
    }
  }
  return worst;
}

long parse_parameter(const std::string& tok) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    fail_parse("catalog parameter '" + tok + "' is not an integer");
  return value;
}

Json catalog_json(const std::string& name) {
  const auto at = name.find('@');
  if (at == std::string::npos)
    fail_parse("catalog name '" + name + "' must look like sl2@K, lattice@K,M, or parafermion@K");
  const std::string family = name.substr(0, at);
  std::vector<long> args;
  std::string rest = name.substr(at + 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = rest.find(',', start);
    args.push_back(parse_parameter(
        rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const auto want = [&](std::size_t n) {
    if (args.size() != n)
      fail_parse("catalog family '" + family + "' takes " + std::to_string(n) +
                 " parameter(s), got " + std::to_string(args.size()));
  };
  if (family == "sl2") {
    want(1);
    return ring_to_json(affine_sl2(static_cast<int>(args[0])));
  }
  if (family == "parafermion") {
    want(1);
    return ring_to_json(parafermion_sl2(static_cast<int>(args[0])));
  }
  if (family == "lattice") {
    want(2);
    return space_to_json(lattice_rank1(args[0], args[1]));
  }
  fail_parse("unknown catalog family '" + family + "' (expected sl2, lattice, or parafermion)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for simple-current extensions of fusion rings"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string in, out, format = "table", m1, m2, name;
  bool twisted = false;
  bool check_round_trip = false;
  long shift = 0;

  auto* check = app.add_subcommand("check", "validate model files and report violations");
  check->add_option("files", files, "ring, space, extension, or inverse files")->required();

  auto* extend = app.add_subcommand("extend", "enumerate the sectors of an extension problem");
  extend->add_option("file", in, "extension problem file")->required();
  extend->add_flag("--twisted", twisted, "include twisted-character blocks");
  extend->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  extend->add_option("--out", out, "write to a file instead of stdout");

  auto* fuse = app.add_subcommand("fuse", "fuse two untwisted sectors");
  fuse->add_option("file", in, "extension problem file")->required();
  fuse->add_option("m1", m1, "sector name, e.g. '(i0,0)'")->required();
  fuse->add_option("m2", m2, "sector name")->required();

  auto* build = app.add_subcommand("build-ring", "emit the fusion ring of the extension");
  build->add_option("file", in, "extension problem file")->required();
  build->add_option("--out", out, "write to a file instead of stdout");

  auto* derive = app.add_subcommand("derive", "recover the graded ring an inverse problem posits");
  derive->add_option("file", in, "inverse problem file")->required();
  derive->add_flag("--round-trip", check_round_trip,
                   "also re-extend the result and match it against the original ring");
  derive->add_option("--out", out, "write to a file instead of stdout");

  auto* shift_cmd = app.add_subcommand("deform", "shift the lattice of an extension problem");
  shift_cmd->add_option("file", in, "extension problem file")->required();
  shift_cmd->add_option("-s,--shift", shift, "lattice shift step")->required();
  shift_cmd->add_option("--out", out, "write to a file instead of stdout");

  auto* cat = app.add_subcommand("catalog", "emit a built-in model");
  cat->add_option("name", name, "sl2@K, lattice@K,M, or parafermion@K")->required();
  cat->add_option("--out", out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(files);
    if (extend->parsed()) {
      const ExtensionProblem p = extension_from_json(load(in));
      const SectorTable t(p);
      put(format == "json" ? to_text(sector_table_to_json(p, t, twisted))
                           : sector_table_to_text(p, t, twisted),
          out);
    } else if (fuse->parsed()) {
      const ExtensionProblem p = extension_from_json(load(in));
      const SectorTable t(p);
      const auto result = fuse_sectors(p, t.by_name(m1, true), t.by_name(m2, true));
      std::string line;
      for (const auto& [s, n] : result) {
        if (!line.empty()) line += ' ';
        line += s.name + ":" + std::to_string(n);
      }
      std::cout << line << "\n";
    } else if (build->parsed()) {
      put(to_text(ring_to_json(build_u_ring(extension_from_json(load(in))))), out);
    } else if (derive->parsed()) {
      const InverseProblem ip = inverse_from_json(load(in));
      if (check_round_trip) {
        const RoundTrip rt = round_trip(ip);
        std::cerr << "round trip OK: " << rt.rebuilt.size()
                  << " rebuilt sectors match the original ring\n";
        put(to_text(ring_to_json(rt.derived.ring)), out);
      } else {
        put(to_text(ring_to_json(derive_commutant_ring(ip).ring)), out);
      }
    } else if (shift_cmd->parsed()) {
      put(to_text(extension_to_json(deform(extension_from_json(load(in)), shift))), out);
    } else if (cat->parsed()) {
      put(to_text(catalog_json(name)), out);
    }
  } catch (const ParseError& e) {
    std::cerr << "fuselift: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fuselift: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "qbilliard/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "qbilliard/catalog.hpp"
#include "qbilliard/nodal.hpp"
#include "qbilliard/spectral_class.hpp"
#include "qbilliard/verify.hpp"

namespace qbilliard::cli {
namespace {

const std::map<std::string, BilliardKind> kBilliards{
    {"iso", BilliardKind::kRightIsosceles}, {"equi", BilliardKind::kEquilateral}};
const std::map<std::string, SymmetryFamily> kFamilies{{"default", SymmetryFamily::kDefault},
                                                      {"cos", SymmetryFamily::kCosine},
                                                      {"sin", SymmetryFamily::kSine}};

// Raised by subcommands to request exit code 2 after printing their report.
struct VerificationFailed {};

struct StateFlags {
  std::string billiard = "iso";
  std::string family;
  int m = 0;
  int n = 0;

  BilliardKind kind() const { return kBilliards.at(billiard); }
  SymmetryFamily resolved_family() const {
    return family.empty() ? default_family(kind()) : kFamilies.at(family);
  }
  EigenfunctionSpec state() const { return make_state(kind(), resolved_family(), m, n); }
};

void add_kind_flags(CLI::App* cmd, StateFlags& f) {
  cmd->add_option("--billiard", f.billiard, "Billiard: iso or equi")
      ->check(CLI::IsMember({"iso", "equi"}));
  cmd->add_option("--family", f.family,
                  "Symmetry family: default (iso), cos or sin (equi); defaults per billiard")
      ->check(CLI::IsMember({"default", "cos", "sin"}));
}

void add_state_flags(CLI::App* cmd, StateFlags& f) {
  add_kind_flags(cmd, f);
  cmd->add_option("--m", f.m, "Quantum number m (m > n)")->required();
  cmd->add_option("--n", f.n, "Quantum number n (n >= 1)")->required();
}

std::string pair_label(const EigenfunctionSpec& s) {
  return "(" + std::to_string(s.qn.m) + "," + std::to_string(s.qn.n) + ")";
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string scientific(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

void write_grid_csv(std::ostream& os, const FieldGrid& field) {
  os << "x,y,value\n";
  for (int j = 0; j < field.resolution(); ++j) {
    for (int i = 0; i < field.resolution(); ++i) {
      if (!field.inside(i, j)) continue;
      os << format_sig9(field.x_at(i)) << ',' << format_sig9(field.y_at(j)) << ','
         << format_sig9(field.values[field.index(i, j)]) << '\n';
    }
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
  return os;
}

void finish_output(std::ofstream& os, const std::string& path) {
  os.close();
  if (!os) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace

std::string format_sig9(double value) {
  if (value == 0.0 || !std::isfinite(value)) return fixed(value, 0);
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  return fixed(value, std::max(0, 8 - exponent));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form eigenstates, ladder operators and nodal domains of triangle billiards",
               "qbilliard"};
  app.require_subcommand(1);
  std::function<void()> action;

  StateFlags eval_flags;
  double x = 0.0;
  double y = 0.0;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one eigenfunction at a point");
  add_state_flags(eval_cmd, eval_flags);
  eval_cmd->add_option("--x", x, "x coordinate")->required();
  eval_cmd->add_option("--y", y, "y coordinate")->required();
  eval_cmd->callback([&] {
    action = [&] { out << fixed(eval_point(eval_flags.state(), {x, y}), 7) << '\n'; };
  });

  StateFlags classify_flags;
  auto* classify_cmd =
      app.add_subcommand("classify", "Print the equivalence class and its lowest state");
  add_state_flags(classify_cmd, classify_flags);
  classify_cmd->callback([&] {
    action = [&] {
      const EigenfunctionSpec s = classify_flags.state();
      const EquivalenceClass c = class_index(s);
      const EigenfunctionSpec low = lowest_in_class(s.kind, s.family, c.n, c.c);
      out << "class " << c.c << " mod " << c.modulus() << "; lowest " << pair_label(low) << '\n';
    };
  });

  StateFlags grid_flags;
  int grid_res = 256;
  std::string grid_out;
  auto* grid_cmd = app.add_subcommand("grid", "Write the sampled eigenfunction as CSV");
  add_state_flags(grid_cmd, grid_flags);
  grid_cmd->add_option("--res", grid_res, "Samples per axis")->check(CLI::Range(2, 8192));
  grid_cmd->add_option("--out", grid_out, "Output CSV path")->required();
  grid_cmd->callback([&] {
    action = [&] {
      const FieldGrid field = eval_grid(grid_flags.state(), GridSpec{grid_res, 0.0});
      std::ofstream os = open_output(grid_out);
      write_grid_csv(os, field);
      finish_output(os, grid_out);
    };
  });

  StateFlags ladder_flags;
  int ladder_p = 1;
  int ladder_res = 201;
  double ladder_tol = kLadderTolerance;
  auto* ladder_cmd =
      app.add_subcommand("ladder", "Apply the ladder operator p times and check the identity");
  add_state_flags(ladder_cmd, ladder_flags);
  ladder_cmd->add_option("--p", ladder_p, "Ladder power; negative lowers");
  ladder_cmd->add_option("--res", ladder_res, "Raster points per axis")
      ->check(CLI::Range(2, 8192));
  ladder_cmd->add_option("--tolerance", ladder_tol, "Sup-norm tolerance")
      ->check(CLI::NonNegativeNumber);
  ladder_cmd->callback([&] {
    action = [&] {
      const EigenfunctionSpec source = ladder_flags.state();
      const EigenfunctionSpec target = step(source, ladder_p);
      const double deviation = ladder_identity_check(source, ladder_p, ladder_res);
      out << "source " << pair_label(source) << " energy " << format_sig9(source.energy) << '\n'
          << "target " << pair_label(target) << " energy " << format_sig9(target.energy) << '\n'
          << "deviation " << scientific(deviation) << " (tolerance " << scientific(ladder_tol)
          << ")\n";
      if (!(deviation <= ladder_tol)) throw VerificationFailed{};
    };
  });

  StateFlags nodal_flags;
  int nodal_res = 512;
  std::string nodal_out;
  std::string nodal_mode = "sign";
  auto* nodal_cmd =
      app.add_subcommand("nodal", "Count nodal domains and render the pattern as PGM");
  add_state_flags(nodal_cmd, nodal_flags);
  nodal_cmd->add_option("--res", nodal_res, "Pixels per axis")->check(CLI::Range(2, 8192));
  nodal_cmd->add_option("--out", nodal_out, "Output PGM path");
  nodal_cmd->add_option("--mode", nodal_mode, "Render mode: sign or amplitude")
      ->check(CLI::IsMember({"sign", "amplitude"}));
  nodal_cmd->callback([&] {
    action = [&] {
      const EigenfunctionSpec s = nodal_flags.state();
      const FieldGrid field = eval_grid(s, GridSpec{nodal_res, 0.0});
      const NodalReport report = count_domains(sign_grid(field));
      if (!nodal_out.empty()) {
        std::ofstream os = open_output(nodal_out);
        write_pgm(os, nodal_render(field, nodal_mode == "sign" ? RenderMode::kSign
                                                               : RenderMode::kAmplitude));
        finish_output(os, nodal_out);
      }
      out << "nu=" << report.domain_count << '\n';
      if (report.resolution_suspect) {
        err << "warning: RESOLUTION_SUSPECT: a domain has fewer than " << kMinDomainPixels
            << " pixels\n";
      }
    };
  });

  StateFlags tower_flags;
  int tower_n = 0;
  int tower_c = 0;
  int tower_count = 3;
  std::optional<int> tower_res;
  std::string tower_catalog;
  auto* tower_cmd =
      app.add_subcommand("tower", "Generate the lowest members of a class into a JSON catalog");
  add_kind_flags(tower_cmd, tower_flags);
  tower_cmd->add_option("--n", tower_n, "Quantum number n")->required();
  tower_cmd->add_option("--class", tower_c, "Class index c = m mod kn")->required();
  tower_cmd->add_option("--count", tower_count, "Number of members")->check(CLI::Range(1, 10000));
  tower_cmd->add_option("--catalog", tower_catalog, "Catalog JSON path")->required();
  tower_cmd->add_option("--res", tower_res, "Also count nodal domains at this resolution")
      ->check(CLI::Range(2, 8192));
  tower_cmd->callback([&] {
    action = [&] {
      const BilliardKind kind = tower_flags.kind();
      const auto members =
          tower(kind, tower_flags.resolved_family(), tower_n, tower_c, tower_count);
      std::vector<CatalogEntry> entries;
      try {
        entries = load_catalog(tower_catalog);
      } catch (const CatalogFormatError& e) {
        throw std::runtime_error("malformed catalog '" + tower_catalog + "': " + e.what());
      }
      for (const EigenfunctionSpec& s : members) {
        std::optional<NodalReport> nodal;
        if (tower_res) nodal = nodal_report(s, *tower_res);
        upsert(entries, make_entry(s, nodal));
        out << pair_label(s) << " energy " << format_sig9(s.energy);
        if (nodal) out << " nu=" << nodal->domain_count;
        out << '\n';
      }
      save_catalog(tower_catalog, entries);
    };
  });

  StateFlags verify_flags;
  std::string suite = "default";
  double perturb = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the numerical verification suite");
  add_kind_flags(verify_cmd, verify_flags);
  verify_cmd->add_option("--suite", suite, "Suite: default, quick or empty")
      ->check(CLI::IsMember({"default", "quick", "empty"}));
  verify_cmd->add_option("--perturb", perturb,
                         "Displace the triangle vertices by this amount in the boundary check");
  verify_cmd->callback([&] {
    action = [&] {
      SuiteRanges ranges;
      if (suite == "quick") {
        ranges.n_max = 2;
        ranges.m_span = 4;
        ranges.p_max = 2;
      } else if (suite == "empty") {
        ranges.n_max = 0;
      }
      ranges.vertex_perturbation = perturb;
      const BilliardKind kind = verify_flags.kind();
      std::vector<SymmetryFamily> families;
      if (!verify_flags.family.empty()) {
        families.push_back(verify_flags.resolved_family());
      } else if (kind == BilliardKind::kRightIsosceles) {
        families.push_back(SymmetryFamily::kDefault);
      } else {
        families = {SymmetryFamily::kCosine, SymmetryFamily::kSine};
      }
      bool ok = true;
      for (SymmetryFamily family : families) {
        (void)make_state(kind, family, 3, 1);
        const SuiteReport report = run_suite(kind, family, ranges);
        out << format_report(report);
        ok = ok && report.passed();
      }
      if (!ok) throw VerificationFailed{};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInputError;
  }

  try {
    action();
  } catch (const VerificationFailed&) {
    err << "verification failed\n";
    return kExitVerificationFailed;
  } catch (const BilliardError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace qbilliard::cli

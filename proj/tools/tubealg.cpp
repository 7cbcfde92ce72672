#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tubealg/fixtures.hpp"
#include <nlohmann/json.hpp>

#include "tubealg/report.hpp"

using namespace tubealg;

namespace {

struct CommonOpts {
  std::vector<std::string> fixtures;
  std::vector<std::string> files;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTol;
  std::string format = "md";
  int snap_den = 48;
  std::string sector;
  bool dump_structure = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--fixture", o.fixtures, "built-in input category (repeatable)");
  cmd->add_option("file", o.files, "category JSON file (repeatable)");
  cmd->add_option("--seed", o.seed, "RNG seed (env TUBEALG_SEED overrides the default)");
  cmd->add_option("--tol", o.tol, "numerical tolerance");
  cmd->add_option("--format", o.format, "md or json")->check(CLI::IsMember({"md", "json"}));
  cmd->add_option("--snap-denominator", o.snap_den, "max denominator for phase snapping");
  cmd->add_option("--sector", o.sector, "restrict a defect listing to one sector");
  cmd->add_flag("--dump-structure-constants", o.dump_structure,
                "debug dump of the tube structure constants as JSON");
}

struct Input {
  std::string name;
  FusionCategoryData cat;
};

std::vector<Input> load_inputs(const CommonOpts& o) {
  std::vector<Input> in;
  for (const auto& f : o.fixtures) in.push_back({f, fixture(f)});
  for (const auto& f : o.files) in.push_back({f, load_category(f)});
  if (in.empty()) throw Error(ErrorKind::MalformedInput, "no input given (use --fixture or a file)");
  return in;
}

void emit(const TheoryReport& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json();
  else
    std::cout << rep.to_markdown();
}

void dump_structure_constants(const TubeAlgebra& T) {
  std::cout << "{\n  \"basis\": [";
  for (int i = 0; i < T.size(); ++i) std::cout << (i ? ", " : "") << "\"" << T.tube_name(i) << "\"";
  std::cout << "],\n  \"mult\": [\n";
  bool first = true;
  for (int i = 0; i < T.size(); ++i)
    for (int j = 0; j < T.size(); ++j)
      for (const auto& [k, c] : T.alg.mult_table[i * T.size() + j]) {
        if (!first) std::cout << ",\n";
        std::cout << "    {\"i\": " << i << ", \"j\": " << j << ", \"k\": " << k
                  << ", \"re\": " << c.real() << ", \"im\": " << c.imag() << "}";
        first = false;
      }
  std::cout << "\n  ]\n}\n";
}

// Keep only one sector's rows in a defects report.
void filter_defect_report(TheoryReport& rep, const DefectTheory& th, const std::string& sector) {
  (void)th;
  nlohmann::json& p = *rep.payload;
  std::string prefix = sector + ":";
  auto keep = [&](const nlohmann::json& row, const char* key) {
    std::string l = row[key].get<std::string>();
    return l.rfind(prefix, 0) == 0 || l.find("_" + prefix) != std::string::npos;
  };
  for (const char* key : {"blocks", "defect_table"}) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : p[key])
      if (keep(row, "label")) out.push_back(row);
    p[key] = out;
  }
  nlohmann::json walls = nlohmann::json::array();
  for (const auto& row : p["walls"])
    if (keep(row, "label")) walls.push_back(row);
  p["walls"] = walls;
}

RenderOptions render_opts(const CommonOpts& o) {
  RenderOptions r;
  r.snap_denominator = o.snap_den;
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"tube algebra toolkit: emergent anyons, defects, gauging, condensation"};
  app.require_subcommand(1);

  CommonOpts o;
  if (const char* env = std::getenv("TUBEALG_SEED")) o.seed = std::strtoull(env, nullptr, 0);

  auto* c_validate = app.add_subcommand("validate", "validate an input category");
  auto* c_spectrum = app.add_subcommand("spectrum", "tube algebra and its block decomposition");
  auto* c_modular = app.add_subcommand("modular", "modular data of the emergent anyons");
  auto* c_defects = app.add_subcommand("defects", "defect theory of a graded category");
  auto* c_gauge = app.add_subcommand("gauge", "gauge the graded symmetry");
  auto* c_condense = app.add_subcommand("condense", "break the symmetry to the trivial sector");
  auto* c_compare = app.add_subcommand("compare", "match modular data of two inputs");
  for (CLI::App* c : {c_validate, c_spectrum, c_modular, c_defects, c_gauge, c_condense, c_compare})
    add_common(c, o);

  CLI11_PARSE(app, argc, argv);

  auto inputs = load_inputs(o);

  if (c_validate->parsed()) {
    bool all_ok = true;
    for (const auto& in : inputs) {
      ValidationReport rep = validate(in.cat, std::min(o.tol, 1e-9));
      if (rep.valid()) {
        std::cout << in.name << ": valid\n";
      } else {
        all_ok = false;
        std::cout << in.name << ": INVALID\n";
        std::cerr << "{\"input\": \"" << in.name << "\", \"violations\": [";
        for (size_t i = 0; i < rep.violations.size(); ++i) {
          const auto& v = rep.violations[i];
          std::cerr << (i ? ", " : "") << "{\"check\": \"" << v.check << "\", \"where\": \""
                    << v.where << "\", \"residual\": " << v.residual << "}";
        }
        std::cerr << "]}\n";
      }
    }
    return all_ok ? 0 : 1;
  }

  if (c_compare->parsed()) {
    if (inputs.size() != 2)
      throw Error(ErrorKind::MalformedInput, "compare needs exactly two inputs");
    std::vector<ModularData> mds;
    for (const auto& in : inputs) {
      auto T = build_tube_algebra(in.cat);
      auto dec = central_idempotents(*T, o.seed, o.tol);
      mds.push_back(modular_data(*T, dec, o.tol));
    }
    auto perm = match_modular_data(mds[0], mds[1], 1e-7);
    std::cout << "Morita match: " << (perm ? "yes" : "no") << "\n";
    if (perm) {
      std::cout << "permutation:";
      for (size_t i = 0; i < perm->size(); ++i)
        std::cout << " " << mds[0].labels[i] << "->" << mds[1].labels[(*perm)[i]];
      std::cout << "\n";
    }
    return perm ? 0 : 1;
  }

  for (const auto& in : inputs) {
    require_valid(in.cat, std::min(o.tol, 1e-9));
    if (c_spectrum->parsed() || c_modular->parsed()) {
      bool dube = !o.sector.empty();
      if (dube && in.cat.grading &&
          in.cat.group().element_by_name(o.sector) != 0)
        throw Error(ErrorKind::Unsupported,
                    "only the trivial-sector restriction (the dube algebra) is supported");
      auto T = build_tube_algebra(in.cat, dube);
      if (o.dump_structure) {
        dump_structure_constants(*T);
        continue;
      }
      auto dec = central_idempotents(*T, o.seed, o.tol);
      if (c_spectrum->parsed()) {
        emit(spectrum_report(*T, dec, in.name, o.seed, o.tol, render_opts(o)), o.format);
      } else {
        ModularData md = modular_data(*T, dec, o.tol);
        emit(modular_report(*T, dec, md, in.name, o.seed, o.tol, render_opts(o)), o.format);
      }
    } else if (c_defects->parsed()) {
      DefectTheory th = defect_spectrum(in.cat, o.seed, o.tol);
      TheoryReport rep = defects_report(th, in.name, o.seed, o.tol, render_opts(o));
      if (!o.sector.empty()) filter_defect_report(rep, th, o.sector);
      emit(rep, o.format);
    } else if (c_gauge->parsed()) {
      DefectTheory th = defect_spectrum(in.cat, o.seed, o.tol);
      GaugedTheory gt = gauge(th, o.seed, o.tol);
      ModularData md = gauged_modular(gt, o.tol);
      ModularData direct = gauged_modular_direct(gt, o.seed, o.tol);
      emit(gauge_report(gt, md, direct, in.name, o.seed, o.tol, render_opts(o)), o.format);
    } else if (c_condense->parsed()) {
      CondensationReport rep = break_symmetry(in.cat, o.seed, o.tol);
      emit(condense_report(rep, in.name, o.seed, o.tol, render_opts(o)), o.format);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind) << "]: " << e.what() << "\n";
    switch (e.kind) {
      case ErrorKind::ParseError:
      case ErrorKind::SchemaVersionMismatch:
      case ErrorKind::MalformedInput:
      case ErrorKind::UnknownFixture:
      case ErrorKind::UnknownName:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#ifndef TUBEALG_REPORT_HPP
#define TUBEALG_REPORT_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "tubealg/condensation.hpp"

namespace tubealg {

struct RenderOptions {
  int snap_denominator = 48;
  double snap_tol = 1e-9;
};

// Phase/complex formatting: exact-looking e^{i pi p/q} when the phase snaps
// to a rational with small denominator, decimals otherwise.
std::string format_complex(Cplx z, const RenderOptions& opts = {});
std::string format_real(double x);

// Report payloads. Markdown output is rendered from the JSON payload, so the
// two stay consistent by construction.
struct TheoryReport {
  std::string provenance;  // fixture name or input file
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTol;
  std::string kind;        // spectrum | modular | defects | gauge | condense
  nlohmann::json* payload; // owned
  RenderOptions render;

  TheoryReport();
  TheoryReport(const TheoryReport&) = delete;
  TheoryReport& operator=(const TheoryReport&) = delete;
  TheoryReport(TheoryReport&&) noexcept;
  ~TheoryReport();

  std::string to_json() const;
  std::string to_markdown() const;
};

TheoryReport spectrum_report(const TubeAlgebra& T, const BlockDecomposition& dec,
                             const std::string& provenance, std::uint64_t seed, double tol,
                             const RenderOptions& opts = {});
TheoryReport modular_report(const TubeAlgebra& T, const BlockDecomposition& dec,
                            const ModularData& md, const std::string& provenance,
                            std::uint64_t seed, double tol, const RenderOptions& opts = {});
TheoryReport defects_report(const DefectTheory& th, const std::string& provenance,
                            std::uint64_t seed, double tol, const RenderOptions& opts = {});
TheoryReport gauge_report(const GaugedTheory& gt, const ModularData& gauged,
                          const ModularData& direct, const std::string& provenance,
                          std::uint64_t seed, double tol, const RenderOptions& opts = {});
TheoryReport condense_report(const CondensationReport& rep, const std::string& provenance,
                             std::uint64_t seed, double tol, const RenderOptions& opts = {});

}  // namespace tubealg

#endif

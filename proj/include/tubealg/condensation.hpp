#ifndef TUBEALG_CONDENSATION_HPP
#define TUBEALG_CONDENSATION_HPP

#include "tubealg/gauging.hpp"

namespace tubealg {

// Rep(G) condensation by breaking a graded tube algebra down to its trivial
// sector: grading-filtered subidempotents of the double's ICIs identify the
// defects each anyon condenses to, the confined sectors, and the recovered
// domain walls.
struct CondensationReport {
  FusionCategoryData cat;
  std::shared_ptr<const TubeAlgebra> full;
  BlockDecomposition fdec;   // anyons of D(C_G)
  DefectTheory theory;       // recovered defect theory

  std::vector<std::vector<int>> splits;   // anyon -> defect indices it condenses to
  std::vector<std::vector<int>> members;  // defect -> anyons containing it
  std::vector<int> condensed_vacuum;      // anyons with (I_a)_1^1 ~ vacuum (Rep(G) bosons)
  std::vector<int> confined;              // defects in nontrivial sectors
  // Subidempotent pieces (I_a)_g^h keyed by anyon, flattened over (g,h).
  std::vector<std::vector<VectorXcd>> pieces;  // pieces[a][g * |G| + h]

  int piece_index(int g, int h) const { return g * cat.group().size() + h; }
};

CondensationReport break_symmetry(const FusionCategoryData& gcat,
                                  std::uint64_t seed = kDefaultSeed, double tol = kDefaultTol);

std::vector<int> condensed_vacuum_set(const CondensationReport& rep);
std::vector<int> confinement_set(const CondensationReport& rep);

// Identification classes: groups of anyons condensing onto a common defect.
std::vector<std::vector<int>> identification_classes(const CondensationReport& rep);

// Blocks reachable at the end of a vacuum string: t_a^{0 sbar 0 s} != 0, with
// the normalized charge projector of each.
struct VacuumAttachable {
  std::vector<int> blocks;
  std::vector<VectorXcd> projectors;
};
VacuumAttachable vacuum_attachable_sectors(const TubeAlgebra& T, const BlockDecomposition& dec,
                                           double tol = kDefaultTol);

// Condense then gauge: certifies that the composition recovers the modular
// data of the double of the graded category.
struct RoundTrip {
  bool ok = false;
  std::string detail;
};
RoundTrip roundtrip_check(const FusionCategoryData& gcat, std::uint64_t seed = kDefaultSeed,
                          double tol = 1e-7);

}  // namespace tubealg

#endif

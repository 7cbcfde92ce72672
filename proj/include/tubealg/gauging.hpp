#ifndef TUBEALG_GAUGING_HPP
#define TUBEALG_GAUGING_HPP

#include "tubealg/defects.hpp"

namespace tubealg {

struct ProjectiveIrrep {
  int dim = 1;
  std::vector<Cplx> chi;  // characters over the subgroup element list
};

// Irreducible projective representations of a finite group with a given
// U(1) 2-cocycle, computed from the ICIs of the twisted group algebra.
struct ProjectiveIrrepSet {
  std::vector<int> elements;  // subgroup as ambient-group element indices
  std::vector<ProjectiveIrrep> irreps;

  Cplx chi(int irrep, int ambient_element) const;  // 0 if not in the subgroup
};

ProjectiveIrrepSet projective_irreps(const std::vector<int>& subgroup, const FiniteGroup& G,
                                     const MatrixXcd& eta, std::uint64_t seed = kDefaultSeed,
                                     double tol = kDefaultTol);

// Equivariantization of a defect theory: projectors onto projective irreps of
// each stabilizer, summed over orbits via wall transport, give the ICIs of the
// gauged double.
struct GaugedTheory {
  DefectTheory theory;
  std::vector<std::pair<int, int>> labels;  // (orbit representative, irrep index)
  std::vector<ProjectiveIrrepSet> irreps;   // per gauged label (keyed like labels)
  std::vector<VectorXcd> ici;               // in the full tube algebra of C_G
  std::vector<int> block_dim;               // d_mu D_a |G| / |Z_a|
  std::vector<double> qdim;                 // |G| d_mu d_a / |Z_a|
  std::vector<Cplx> theta;                  // chi(g)/chi(1) theta_a

  int count() const { return static_cast<int>(labels.size()); }
  std::string label_name(int i) const;
};

GaugedTheory gauge(const DefectTheory& th, std::uint64_t seed = kDefaultSeed,
                   double tol = kDefaultTol);

// Gauged S and T from the G-crossed data and transported projective
// characters; fusion from Verlinde on the gauged S.
ModularData gauged_modular(const GaugedTheory& gt, double tol = kDefaultTol);

// Direct route: the gauged ICIs treated as a decomposition of the full tube
// algebra of C_G and fed through the ordinary modular pipeline.
ModularData gauged_modular_direct(const GaugedTheory& gt, std::uint64_t seed = kDefaultSeed,
                                  double tol = kDefaultTol);

// Double-coset character-sum fusion for SPT inputs (every sector a single
// invertible defect); exact integers.
std::vector<int> spt_fusion(const GaugedTheory& gt);

}  // namespace tubealg

#endif

#ifndef TUBEALG_DEFECTS_HPP
#define TUBEALG_DEFECTS_HPP

#include <memory>
#include <vector>

#include "tubealg/modular.hpp"

namespace tubealg {

// Emergent symmetry-defect theory of a graded category: per-sector defect
// ICIs of the dube algebra, domain walls O^{a_g}_h, the permutation action
// rho, the projective 2-cocycles eta, and G-crossed modular blocks. All
// elements are stored as coefficient vectors over the full tube algebra of
// the graded category.
struct DefectTheory {
  FusionCategoryData cat;
  std::shared_ptr<const TubeAlgebra> full;
  std::shared_ptr<const TubeAlgebra> dube;
  BlockDecomposition ddec;  // dube decomposition (defects in canonical order)

  std::vector<VectorXcd> ici;                  // lifted defect ICIs (full algebra)
  std::vector<int> sector;                     // g of each defect
  std::vector<double> qdim;
  std::vector<Cplx> theta;                     // defect spins theta_{a_g}
  std::vector<std::vector<VectorXcd>> walls;   // walls[a][h]
  std::vector<std::vector<int>> rho;           // rho[h][a] -> defect index
  std::vector<std::vector<int>> stabilizer;    // Z_a as group element lists
  std::vector<MatrixXcd> eta;                  // eta[a](h,k)

  int count() const { return static_cast<int>(ici.size()); }
  const FiniteGroup& group() const { return cat.group(); }
  int orbit_rep(int a) const;
  std::vector<int> orbit(int a) const;
  Cplx beta_pairing(int a, int h, int k) const {  // eta(h,k)/eta(k,h)
    return eta[a](h, k) / eta[a](k, h);
  }
};

DefectTheory defect_spectrum(const FusionCategoryData& gcat, std::uint64_t seed = kDefaultSeed,
                             double tol = kDefaultTol);

// Recompute a single wall from a fresh seed (the theory's walls are built
// during defect_spectrum; this exposes the raw operation).
VectorXcd domain_wall(const DefectTheory& th, int defect, int h, std::uint64_t seed);

int permutation_action(const DefectTheory& th, int h, int defect, double tol = kDefaultTol);

// eta row of one defect plus the gauge-invariant commutator pairing.
struct EtaDiagnostics {
  MatrixXcd eta;   // over stabilizer elements (full-group indexing; 0 elsewhere)
  MatrixXcd beta;  // beta(h,k) = eta(h,k)/eta(k,h)
  double cocycle_residual = 0;
};
EtaDiagnostics eta_table(const DefectTheory& th, int defect);

// G-crossed S and T. S entries exist between mutually invariant defect pairs
// in commuting sectors; the twist table assigns theta_{O^h_{a_g}} to each
// h-invariant defect.
struct GxModular {
  MatrixXcd S;              // count x count, zero off the admissible pairing
  MatrixXcd twisted_theta;  // twisted_theta(a, h)
};
GxModular gcrossed_modular(const DefectTheory& th);

// dim(g,h) = number of h-invariant g-defects (zero unless gh = hg).
std::vector<std::vector<int>> twisted_sector_dims(const DefectTheory& th);

// Single G-crossed S entry between defects a and b (sectors g and h). Zero
// unless rho_h(a) = a and rho_g(b) = b.
Cplx gx_s_entry(const DefectTheory& th, int a, int b);

}  // namespace tubealg

#endif

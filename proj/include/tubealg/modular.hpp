#ifndef TUBEALG_MODULAR_HPP
#define TUBEALG_MODULAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "tubealg/spectra.hpp"

namespace tubealg {

struct ModularData {
  std::vector<std::string> labels;
  std::vector<double> d;
  std::vector<Cplx> theta;
  MatrixXcd S;                 // physical normalization, S_{0a} = d_a / D_out
  std::vector<int> dual;       // charge conjugation permutation
  std::vector<int> fusion;     // flat [a][b][c] Verlinde integers
  std::vector<double> gamma;   // TEE per sector
  std::vector<Cplx> kappa;     // FS indicator; +-1 for self-dual labels
  double d_out = 0;            // total quantum dimension of the emergent theory

  int size() const { return static_cast<int>(labels.size()); }
  int N(int a, int b, int c) const {
    int n = size();
    return fusion[(a * n + b) * n + c];
  }
};

// S via the trace formula on ICIs (uniform in block dimension) and T via left
// multiplication by the twist element.
MatrixXcd s_matrix(const TubeAlgebra& T, const BlockDecomposition& dec);
std::vector<Cplx> t_matrix(const TubeAlgebra& T, const BlockDecomposition& dec,
                           double tol = kDefaultTol);

std::vector<double> quantum_dimensions(const TubeAlgebra& T, const BlockDecomposition& dec);
std::vector<double> tee(const ModularData& md);

// Verlinde integers from a unitary S; throws NonIntegerFusion above tolerance.
std::vector<int> verlinde_fusion(const MatrixXcd& S, double tol = 1e-6);

// Dual label and Frobenius-Schur indicator of an emergent anyon.
std::pair<int, Cplx> fs_indicator(const TubeAlgebra& T, const BlockDecomposition& dec,
                                  const ModularData& md, int a);

// Abelian R-symbol R^{ab} for nondegenerate blocks a, b.
Cplx r_symbol_abelian(const TubeAlgebra& T, const BlockDecomposition& dec, int a, int b);

// Full modular report for a decomposition.
ModularData modular_data(const TubeAlgebra& T, const BlockDecomposition& dec,
                         double tol = kDefaultTol);

// Bijection pi with theta, d, and S matching within tol, or nullopt.
std::optional<std::vector<int>> match_modular_data(const ModularData& A, const ModularData& B,
                                                   double tol = 1e-7);

struct ModularChecks {
  double s_unitary = 0;
  double st_cubed = 0;     // (ST)^3 - S^2
  double s_fourth = 0;     // S^4 - 1
  double s2_charge_conj = 0;
  double verlinde_integrality = 0;
  double vacuum_row = 0;   // S_{0a} - d_a/D_out
};
ModularChecks modular_consistency(const ModularData& md);

}  // namespace tubealg

#endif

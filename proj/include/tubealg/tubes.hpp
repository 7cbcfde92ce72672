#ifndef TUBEALG_TUBES_HPP
#define TUBEALG_TUBES_HPP

#include <memory>
#include <vector>

#include "tubealg/category.hpp"
#include "tubealg/types.hpp"

namespace tubealg {

// Finite-dimensional *-algebra given by structure constants. Everything is
// built eagerly so instances are immutable after construction and safe to
// share between threads.
struct StarAlgebra {
  int dim = 0;
  // e_i e_j = sum_k mult[i*dim+j][k-th pair]
  std::vector<std::vector<std::pair<int, Cplx>>> mult_table;
  MatrixXcd dagger_mat;  // dagger(e_i) = sum_j dagger_mat(j,i) e_j
  VectorXcd unit;
  double norm_sq = 1.0;  // normalization used for idempotent coefficient tables

  std::vector<MatrixXcd> left_regular;  // L_i
  MatrixXcd gram;                       // H(i,j) = Tr[e_i^dag e_j]

  void finalize();  // builds left_regular and gram

  VectorXcd product(const VectorXcd& x, const VectorXcd& y) const;
  VectorXcd adjoint(const VectorXcd& x) const;  // antilinear
  MatrixXcd left_matrix(const VectorXcd& x) const;
  Cplx trace(const VectorXcd& x) const;                            // Tr[x]
  Cplx trace_pair(const VectorXcd& x, const VectorXcd& y) const;   // Tr[x^dag y]
};

struct TubeLabel {
  int p = 0, q = 0, r = 0, s = 0;
  bool operator==(const TubeLabel&) const = default;
};

// Tube algebra of a fusion category: basis of admissible tubes T_{pqr}^s with
// the stacking product. If restrict_s_to_trivial is set on a graded category,
// only tubes whose wrapping string s lies in the trivial sector are kept (the
// defect tube algebra); the sector of p then grades the algebra.
struct TubeAlgebra {
  FusionCategoryData cat;
  std::vector<TubeLabel> basis;
  StarAlgebra alg;
  bool dube = false;

  int size() const { return alg.dim; }
  int index_of(int p, int q, int r, int s) const;  // -1 if not in basis
  int sector_p(int i) const { return cat.sector(basis[i].p); }
  int sector_s(int i) const { return cat.sector(basis[i].s); }
  std::string tube_name(int i) const;

  // Modular maps at the tube level.
  const MatrixXcd& s_operator() const { return s_op_; }
  const VectorXcd& t_element() const { return t_elem_; }

  MatrixXcd s_op_;
  VectorXcd t_elem_;
};

std::shared_ptr<const TubeAlgebra> build_tube_algebra(const FusionCategoryData& cat,
                                                      bool restrict_s_to_trivial = false);

VectorXcd multiply(const TubeAlgebra& t, const VectorXcd& x, const VectorXcd& y);
VectorXcd dagger(const TubeAlgebra& t, const VectorXcd& x);

struct CstarReport {
  double assoc_residual = 0;
  double unit_residual = 0;
  double dagger_antihom_residual = 0;
  double dagger_involution_residual = 0;
  double gram_min_eigenvalue = 0;
  double cylinder_residual = 0;  // 1/D^2 sum T^dag T = unit
  bool ok(double tol = 1e-8) const {
    return assoc_residual < tol && unit_residual < tol && dagger_antihom_residual < tol &&
           dagger_involution_residual < tol && gram_min_eigenvalue > 0 && cylinder_residual < tol;
  }
};

CstarReport verify_cstar(const TubeAlgebra& t, std::uint64_t seed = kDefaultSeed);
CstarReport verify_cstar(const StarAlgebra& a, std::uint64_t seed = kDefaultSeed);

}  // namespace tubealg

#endif

#ifndef TUBEALG_CATEGORY_HPP
#define TUBEALG_CATEGORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tubealg/group.hpp"
#include "tubealg/types.hpp"

namespace tubealg {

struct Grading {
  FiniteGroup group;
  std::vector<int> sector;  // label index -> group element index
};

// Multiplicity-free unitary fusion category in the triangle gauge, optionally
// graded over a finite group. Immutable after construction; all operations on
// it are pure.
struct FusionCategoryData {
  std::vector<std::string> labels;
  int unit = 0;
  std::vector<int> dual;
  std::vector<std::uint8_t> fusion;  // flat [a][b][c], N_{ab}^c in {0,1}
  std::vector<double> qdim;
  double total_dim_sq = 0;           // D^2 = sum d_a^2
  std::vector<Cplx> fsym;            // flat [a][b][c][d][e][f], zero off support
  std::optional<Grading> grading;

  int size() const { return static_cast<int>(labels.size()); }

  bool N(int a, int b, int c) const {
    int n = size();
    return fusion[(a * n + b) * n + c] != 0;
  }
  std::vector<int> fuse(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < size(); ++c)
      if (N(a, b, c)) out.push_back(c);
    return out;
  }
  bool admissible_F(int a, int b, int c, int d, int e, int f) const {
    return N(a, b, e) && N(e, c, d) && N(b, c, f) && N(a, f, d);
  }
  Cplx F(int a, int b, int c, int d, int e, int f) const {
    int n = size();
    return fsym[((((static_cast<size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f];
  }
  Cplx& F_ref(int a, int b, int c, int d, int e, int f) {
    int n = size();
    return fsym[((((static_cast<size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f];
  }

  // Frobenius-Schur indicator kappa_a = d_a F^{a abar a}_{a;0,0}.
  Cplx kappa(int a) const { return qdim[a] * F(a, dual[a], a, a, unit, unit); }

  // Bending phases for multiplicity-free splittings.
  Cplx bendA(int a, int b, int c) const {
    return std::sqrt(qdim[a] * qdim[b] / qdim[c]) * std::conj(F(dual[a], a, b, b, unit, c));
  }
  Cplx bendB(int a, int b, int c) const {
    return std::sqrt(qdim[a] * qdim[b] / qdim[c]) * F(a, b, dual[b], a, c, unit);
  }

  int sector(int a) const { return grading ? grading->sector[a] : 0; }
  const FiniteGroup& group() const;
  // Labels in a given sector.
  std::vector<int> sector_labels(int g) const;
  double sector_dim_sq(int g) const;

  int label_by_name(const std::string& name) const;
};

struct Violation {
  std::string check;
  std::string where;
  double residual = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const FusionCategoryData& cat, double tol = 1e-9);
void require_valid(const FusionCategoryData& cat, double tol = 1e-9);

// Constructors.
FusionCategoryData vec_g_omega(const FiniteGroup& group, const ThreeCocycle& alpha);
FusionCategoryData ising(int kappa_sign);
FusionCategoryData builtin_extension(const std::string& name);

// Transformations.
FusionCategoryData shift_by_3cocycle(const FusionCategoryData& cat, const ThreeCocycle& alpha);
FusionCategoryData regrade_by_quotient(const FusionCategoryData& cat,
                                       const std::vector<int>& normal_subgroup);
FusionCategoryData forget_grading(const FusionCategoryData& cat);
// The fusion subcategory spanned by the trivial sector of a graded category.
FusionCategoryData trivial_sector_category(const FusionCategoryData& cat);

struct PivotalData {
  std::vector<Cplx> A, B;  // flat [a][b][c] on fusion support, zero elsewhere
  std::vector<Cplx> kappa; // per label
};
PivotalData pivotal_data(const FusionCategoryData& cat, double tol = 1e-9);

// Perron-Frobenius quantum dimensions recomputed from the fusion ring.
std::vector<double> perron_frobenius_dims(const FusionCategoryData& cat);

// JSON file round trip; see README for the schema.
FusionCategoryData load_category(const std::string& path);
void save_category(const FusionCategoryData& cat, const std::string& path);
FusionCategoryData category_from_json_text(const std::string& text);
std::string category_to_json_text(const FusionCategoryData& cat);

}  // namespace tubealg

#endif

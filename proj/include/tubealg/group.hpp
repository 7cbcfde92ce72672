#ifndef TUBEALG_GROUP_HPP
#define TUBEALG_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "tubealg/types.hpp"

namespace tubealg {

// Finite group given by an explicit multiplication table. Element 0 is the
// identity. Optional cyclic factor decomposition is carried along when the
// group was built as a product of cyclic groups; the cocycle library needs it.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mult;  // mult[g][h] = gh
  std::vector<int> inv;
  std::vector<int> factor_orders;              // nonempty iff product-of-cyclic
  std::vector<std::vector<int>> components;    // components[g][i] in Z_{n_i}

  int size() const { return static_cast<int>(names.size()); }
  int op(int g, int h) const { return mult[g][h]; }
  int conj(int h, int g) const { return mult[mult[h][g]][inv[h]]; }  // h g h^{-1}

  static FiniteGroup cyclic(int n, const std::string& prefix = "");
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup symmetric3();
  static FiniteGroup trivial();
  // From explicit data (element names + name-valued table); validates axioms.
  static FiniteGroup from_table(const std::vector<std::string>& elements,
                                const std::vector<std::vector<std::string>>& table);

  int element_by_name(const std::string& n) const;
  bool is_subgroup(const std::vector<int>& subset) const;
  bool is_normal(const std::vector<int>& subgroup) const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  std::vector<int> centralizer(int g) const;

  // Quotient by a normal subgroup: returns the quotient group together with
  // the projection map G -> Q (by element index).
  std::pair<FiniteGroup, std::vector<int>> quotient(const std::vector<int>& normal_subgroup) const;

  void validate() const;  // throws Error(MalformedInput) on broken axioms
};

// U(1)-valued 3-cocycle on a finite group, normalized so that any argument
// equal to the identity gives 1.
struct ThreeCocycle {
  FiniteGroup group;
  std::vector<Cplx> table;  // flat [g][h][k]

  Cplx operator()(int g, int h, int k) const {
    int n = group.size();
    return table[(g * n + h) * n + k];
  }
  double cocycle_residual() const;
  bool is_normalized(double tol = 1e-12) const;
  void check(double tol = 1e-12) const;  // throws Error(InvalidCocycle)

  static ThreeCocycle trivial(const FiniteGroup& g);
  // Pointwise product and power of cocycles on the same group.
  ThreeCocycle times(const ThreeCocycle& other) const;
  ThreeCocycle power(int k) const;
};

// Named library cocycles (Propitius conventions): see cocycle_library in
// category.hpp for the name grammar.
ThreeCocycle cocycle_library(const FiniteGroup& group, const std::string& name);

}  // namespace tubealg

#endif

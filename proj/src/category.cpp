#include "tubealg/category.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace tubealg {

const FiniteGroup& FusionCategoryData::group() const {
  if (!grading) throw Error(ErrorKind::MalformedInput, "category is not graded");
  return grading->group;
}

std::vector<int> FusionCategoryData::sector_labels(int g) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (sector(a) == g) out.push_back(a);
  return out;
}

double FusionCategoryData::sector_dim_sq(int g) const {
  double s = 0;
  for (int a : sector_labels(g)) s += qdim[a] * qdim[a];
  return s;
}

int FusionCategoryData::label_by_name(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == name) return i;
  throw Error(ErrorKind::MalformedInput, "unknown label '" + name + "'");
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  if (valid()) {
    os << "valid";
  } else {
    os << violations.size() << " violation(s):";
    for (const auto& v : violations)
      os << "\n  [" << v.check << "] " << v.where << " residual=" << v.residual;
  }
  return os.str();
}

std::vector<double> perron_frobenius_dims(const FusionCategoryData& cat) {
  int n = cat.size();
  std::vector<double> d(n);
  for (int a = 0; a < n; ++a) {
    MatrixXd Na = MatrixXd::Zero(n, n);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cat.N(a, b, c)) Na(b, c) = 1.0;
    Eigen::EigenSolver<MatrixXd> es(Na);
    double lam = 0;
    for (int i = 0; i < n; ++i) lam = std::max(lam, es.eigenvalues()[i].real());
    d[a] = lam;
  }
  return d;
}

namespace {

void check_structure(const FusionCategoryData& cat, ValidationReport& rep) {
  int n = cat.size();
  if (n == 0) {
    rep.violations.push_back({"structure", "no labels", 1.0});
    return;
  }
  std::set<std::string> names(cat.labels.begin(), cat.labels.end());
  if (static_cast<int>(names.size()) != n)
    rep.violations.push_back({"structure", "duplicate label names", 1.0});
  if (cat.unit < 0 || cat.unit >= n)
    rep.violations.push_back({"structure", "missing unit", 1.0});
  for (int a = 0; a < n; ++a) {
    if (cat.dual[a] < 0 || cat.dual[a] >= n) {
      rep.violations.push_back({"structure", "dual undefined for " + cat.labels[a], 1.0});
      return;
    }
    if (cat.dual[cat.dual[a]] != a)
      rep.violations.push_back({"structure", "dual not involutive at " + cat.labels[a], 1.0});
  }
}

void check_fusion(const FusionCategoryData& cat, ValidationReport& rep) {
  int n = cat.size();
  int u = cat.unit;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (cat.N(u, a, b) != (a == b) || cat.N(a, u, b) != (a == b))
        rep.violations.push_back({"fusion-unit", cat.labels[a] + "," + cat.labels[b], 1.0});
      if (cat.N(a, b, u) != (b == cat.dual[a]))
        rep.violations.push_back({"fusion-dual", cat.labels[a] + "," + cat.labels[b], 1.0});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += cat.N(a, b, e) * cat.N(e, c, d);
            rhs += cat.N(b, c, e) * cat.N(a, e, d);
          }
          if (lhs != rhs)
            rep.violations.push_back({"fusion-assoc",
                                      cat.labels[a] + "," + cat.labels[b] + "," + cat.labels[c] +
                                          "->" + cat.labels[d],
                                      std::abs(lhs - rhs) * 1.0});
        }
}

void check_qdim(const FusionCategoryData& cat, ValidationReport& rep, double tol) {
  int n = cat.size();
  auto pf = perron_frobenius_dims(cat);
  for (int a = 0; a < n; ++a)
    if (std::abs(pf[a] - cat.qdim[a]) > tol)
      rep.violations.push_back({"qdim-pf", cat.labels[a], std::abs(pf[a] - cat.qdim[a])});
  if (std::abs(cat.qdim[cat.unit] - 1.0) > tol)
    rep.violations.push_back({"qdim-unit", cat.labels[cat.unit], std::abs(cat.qdim[cat.unit] - 1.0)});
  for (int a = 0; a < n; ++a) {
    if (std::abs(cat.qdim[a] - cat.qdim[cat.dual[a]]) > tol)
      rep.violations.push_back({"qdim-dual", cat.labels[a], std::abs(cat.qdim[a] - cat.qdim[cat.dual[a]])});
    for (int b = 0; b < n; ++b) {
      double s = 0;
      for (int c = 0; c < n; ++c)
        if (cat.N(a, b, c)) s += cat.qdim[c];
      double resid = std::abs(cat.qdim[a] * cat.qdim[b] - s);
      if (resid > tol)
        rep.violations.push_back({"qdim-eqn", cat.labels[a] + "," + cat.labels[b], resid});
    }
  }
}

void check_f_symbols(const FusionCategoryData& cat, ValidationReport& rep, double tol) {
  int n = cat.size();
  // Support.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              Cplx v = cat.F(a, b, c, d, e, f);
              if (!cat.admissible_F(a, b, c, d, e, f) && std::abs(v) > tol)
                rep.violations.push_back({"F-support",
                                          cat.labels[a] + cat.labels[b] + cat.labels[c] + "|" +
                                              cat.labels[d] + ";" + cat.labels[e] + "," + cat.labels[f],
                                          std::abs(v)});
            }
  // Unitarity on each (a,b,c,d) slice.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          std::vector<int> es, fs;
          for (int e = 0; e < n; ++e)
            if (cat.N(a, b, e) && cat.N(e, c, d)) es.push_back(e);
          for (int f = 0; f < n; ++f)
            if (cat.N(b, c, f) && cat.N(a, f, d)) fs.push_back(f);
          if (es.empty() && fs.empty()) continue;
          if (es.size() != fs.size()) continue;  // reported by fusion-assoc
          MatrixXcd M(es.size(), fs.size());
          for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = 0; j < fs.size(); ++j) M(i, j) = cat.F(a, b, c, d, es[i], fs[j]);
          double resid = (M * M.adjoint() - MatrixXcd::Identity(es.size(), es.size())).cwiseAbs().maxCoeff();
          if (resid > tol)
            rep.violations.push_back({"F-unitary",
                                      cat.labels[a] + cat.labels[b] + cat.labels[c] + "|" + cat.labels[d],
                                      resid});
        }
  // Triangle gauge.
  int u = cat.unit;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        if (cat.admissible_F(a, u, c, d, a, c) && std::abs(cat.F(a, u, c, d, a, c) - 1.0) > tol)
          rep.violations.push_back({"F-triangle", cat.labels[a] + "0" + cat.labels[c], std::abs(cat.F(a, u, c, d, a, c) - 1.0)});
        if (cat.admissible_F(u, a, c, d, a, d) && std::abs(cat.F(u, a, c, d, a, d) - 1.0) > tol)
          rep.violations.push_back({"F-triangle", "0" + cat.labels[a] + cat.labels[c], std::abs(cat.F(u, a, c, d, a, d) - 1.0)});
        if (cat.admissible_F(a, c, u, d, d, c) && std::abs(cat.F(a, c, u, d, d, c) - 1.0) > tol)
          rep.violations.push_back({"F-triangle", cat.labels[a] + cat.labels[c] + "0", std::abs(cat.F(a, c, u, d, d, c) - 1.0)});
      }
  // Pentagon: F^{pcd}_{e;q,r} F^{abr}_{e;p,s} = sum_x F^{abc}_{q;p,x} F^{axd}_{e;q,s} F^{bcd}_{s;x,r}.
  double pent_max = 0;
  std::string pent_where;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p : cat.fuse(a, b))
        for (int c = 0; c < n; ++c)
          for (int q : cat.fuse(p, c))
            for (int d = 0; d < n; ++d)
              for (int e : cat.fuse(q, d))
                for (int r : cat.fuse(c, d))
                  for (int s : cat.fuse(b, r)) {
                    Cplx lhs = cat.F(p, c, d, e, q, r) * cat.F(a, b, r, e, p, s);
                    Cplx rhs = 0;
                    for (int x : cat.fuse(b, c))
                      rhs += cat.F(a, b, c, q, p, x) * cat.F(a, x, d, e, q, s) * cat.F(b, c, d, s, x, r);
                    double resid = std::abs(lhs - rhs);
                    if (resid > pent_max) {
                      pent_max = resid;
                      pent_where = cat.labels[a] + cat.labels[b] + cat.labels[c] + cat.labels[d] +
                                   "|" + cat.labels[e];
                    }
                  }
  if (pent_max > tol) rep.violations.push_back({"pentagon", pent_where, pent_max});
  // FS indicators.
  for (int a = 0; a < n; ++a) {
    double m = std::abs(cat.F(a, cat.dual[a], a, a, u, u));
    if (std::abs(m - 1.0 / cat.qdim[a]) > tol)
      rep.violations.push_back({"fs-magnitude", cat.labels[a], std::abs(m - 1.0 / cat.qdim[a])});
  }
  for (int a = 0; a < n; ++a) {
    Cplx k = cat.kappa(a) * cat.kappa(cat.dual[a]);
    if (std::abs(k - 1.0) > 10 * tol)
      rep.violations.push_back({"fs-inverse", cat.labels[a], std::abs(k - 1.0)});
    if (cat.dual[a] == a) {
      Cplx ka = cat.kappa(a);
      if (std::min(std::abs(ka - 1.0), std::abs(ka + 1.0)) > 10 * tol)
        rep.violations.push_back({"fs-sign", cat.labels[a], std::abs(ka * ka - 1.0)});
    }
  }
}

void check_grading(const FusionCategoryData& cat, ValidationReport& rep, double tol) {
  if (!cat.grading) return;
  const Grading& gr = *cat.grading;
  const FiniteGroup& G = gr.group;
  try {
    G.validate();
  } catch (const Error& e) {
    rep.violations.push_back({"grading-group", e.what(), 1.0});
    return;
  }
  int n = cat.size();
  if (static_cast<int>(gr.sector.size()) != n) {
    rep.violations.push_back({"grading-sector", "sector map size mismatch", 1.0});
    return;
  }
  if (gr.sector[cat.unit] != 0)
    rep.violations.push_back({"grading-unit", cat.labels[cat.unit], 1.0});
  for (int a = 0; a < n; ++a)
    if (gr.sector[cat.dual[a]] != G.inv[gr.sector[a]])
      rep.violations.push_back({"grading-dual", cat.labels[a], 1.0});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cat.N(a, b, c) && gr.sector[c] != G.op(gr.sector[a], gr.sector[b]))
          rep.violations.push_back({"grading-fusion",
                                    cat.labels[a] + "," + cat.labels[b] + "->" + cat.labels[c], 1.0});
  double d1 = cat.sector_dim_sq(0);
  for (int g = 0; g < G.size(); ++g) {
    if (cat.sector_labels(g).empty())
      rep.violations.push_back({"grading-faithful", G.names[g], 1.0});
    else if (std::abs(cat.sector_dim_sq(g) - d1) > tol)
      rep.violations.push_back({"grading-dim", G.names[g], std::abs(cat.sector_dim_sq(g) - d1)});
  }
}

}  // namespace

ValidationReport validate(const FusionCategoryData& cat, double tol) {
  ValidationReport rep;
  check_structure(cat, rep);
  if (!rep.valid()) return rep;  // structural failures preempt numeric checks
  check_fusion(cat, rep);
  check_qdim(cat, rep, tol);
  check_f_symbols(cat, rep, tol);
  check_grading(cat, rep, tol);
  return rep;
}

void require_valid(const FusionCategoryData& cat, double tol) {
  ValidationReport rep = validate(cat, tol);
  if (!rep.valid())
    throw Error(ErrorKind::InvalidCategory, "invalid category: " + rep.summary());
}

namespace {

FusionCategoryData make_skeleton(std::vector<std::string> labels) {
  FusionCategoryData cat;
  cat.labels = std::move(labels);
  int n = cat.size();
  cat.dual.assign(n, -1);
  cat.fusion.assign(static_cast<size_t>(n) * n * n, 0);
  cat.qdim.assign(n, 1.0);
  cat.fsym.assign(static_cast<size_t>(n) * n * n * n * n * n, Cplx(0, 0));
  return cat;
}

// Fill all admissible F entries with 1.
void trivial_F(FusionCategoryData& cat) {
  int n = cat.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (cat.admissible_F(a, b, c, d, e, f)) cat.F_ref(a, b, c, d, e, f) = 1.0;
}

void finalize_dims(FusionCategoryData& cat) {
  cat.total_dim_sq = 0;
  for (double d : cat.qdim) cat.total_dim_sq += d * d;
}

}  // namespace

FusionCategoryData vec_g_omega(const FiniteGroup& group, const ThreeCocycle& alpha) {
  alpha.check();
  if (alpha.group.size() != group.size())
    throw Error(ErrorKind::InvalidCocycle, "cocycle group size mismatch");
  FusionCategoryData cat = make_skeleton(group.names);
  int n = cat.size();
  cat.unit = 0;
  for (int g = 0; g < n; ++g) {
    cat.dual[g] = group.inv[g];
    for (int h = 0; h < n; ++h) cat.fusion[(g * n + h) * n + group.op(g, h)] = 1;
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        int gh = group.op(g, h), hk = group.op(h, k);
        cat.F_ref(g, h, k, group.op(gh, k), gh, hk) = alpha(g, h, k);
      }
  finalize_dims(cat);
  Grading gr;
  gr.group = group;
  gr.sector.resize(n);
  for (int g = 0; g < n; ++g) gr.sector[g] = g;
  cat.grading = gr;
  return cat;
}

FusionCategoryData ising(int kappa_sign) {
  if (kappa_sign != 1 && kappa_sign != -1)
    throw Error(ErrorKind::MalformedInput, "ising kappa sign must be +1 or -1");
  FusionCategoryData cat = make_skeleton({"0", "psi", "sig"});
  const int O = 0, P = 1, S = 2;
  cat.unit = O;
  cat.dual = {O, P, S};
  auto setN = [&](int a, int b, int c) { cat.fusion[(a * 3 + b) * 3 + c] = 1; };
  for (int a = 0; a < 3; ++a) {
    setN(O, a, a);
    setN(a, O, a);
  }
  setN(P, P, O);
  setN(P, S, S);
  setN(S, P, S);
  setN(S, S, O);
  setN(S, S, P);
  cat.qdim = {1.0, 1.0, std::sqrt(2.0)};
  trivial_F(cat);
  double r = 1.0 / std::sqrt(2.0);
  cat.F_ref(S, S, S, S, O, O) = r;
  cat.F_ref(S, S, S, S, O, P) = r;
  cat.F_ref(S, S, S, S, P, O) = r;
  cat.F_ref(S, S, S, S, P, P) = -r;
  cat.F_ref(S, P, S, P, S, S) = -1.0;
  cat.F_ref(P, S, P, S, S, S) = -1.0;
  finalize_dims(cat);
  Grading gr;
  gr.group = FiniteGroup::cyclic(2, "g");
  gr.group.names = {"1", "x"};
  gr.sector = {0, 0, 1};
  cat.grading = gr;
  if (kappa_sign == -1) {
    ThreeCocycle a = cocycle_library(gr.group, "I");
    return shift_by_3cocycle(cat, a);
  }
  return cat;
}

FusionCategoryData shift_by_3cocycle(const FusionCategoryData& cat, const ThreeCocycle& alpha) {
  if (!cat.grading) throw Error(ErrorKind::MalformedInput, "shift_by_3cocycle needs a graded category");
  alpha.check();
  if (alpha.group.size() != cat.grading->group.size())
    throw Error(ErrorKind::InvalidCocycle, "cocycle group does not match grading group");
  FusionCategoryData out = cat;
  int n = cat.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Cplx ph = alpha(cat.sector(a), cat.sector(b), cat.sector(c));
        if (std::abs(ph - 1.0) < 1e-15) continue;
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (cat.admissible_F(a, b, c, d, e, f)) out.F_ref(a, b, c, d, e, f) *= ph;
      }
  return out;
}

FusionCategoryData regrade_by_quotient(const FusionCategoryData& cat,
                                       const std::vector<int>& normal_subgroup) {
  if (!cat.grading) throw Error(ErrorKind::MalformedInput, "regrade_by_quotient needs a graded category");
  auto [q, coset_of] = cat.grading->group.quotient(normal_subgroup);
  FusionCategoryData out = cat;
  Grading gr;
  gr.group = q;
  gr.sector.resize(cat.size());
  for (int a = 0; a < cat.size(); ++a) gr.sector[a] = coset_of[cat.sector(a)];
  out.grading = gr;
  return out;
}

FusionCategoryData forget_grading(const FusionCategoryData& cat) {
  FusionCategoryData out = cat;
  out.grading.reset();
  return out;
}

FusionCategoryData trivial_sector_category(const FusionCategoryData& cat) {
  if (!cat.grading) return forget_grading(cat);
  std::vector<int> keep = cat.sector_labels(0);
  int m = static_cast<int>(keep.size());
  std::vector<int> back(cat.size(), -1);
  for (int i = 0; i < m; ++i) back[keep[i]] = i;
  FusionCategoryData out = make_skeleton({});
  out.labels.resize(m);
  out.dual.resize(m);
  out.qdim.resize(m);
  out.fusion.assign(static_cast<size_t>(m) * m * m, 0);
  out.fsym.assign(static_cast<size_t>(m) * m * m * m * m * m, Cplx(0, 0));
  for (int i = 0; i < m; ++i) {
    out.labels[i] = cat.labels[keep[i]];
    out.dual[i] = back[cat.dual[keep[i]]];
    out.qdim[i] = cat.qdim[keep[i]];
    if (keep[i] == cat.unit) out.unit = i;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        out.fusion[(a * m + b) * m + c] = cat.N(keep[a], keep[b], keep[c]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          for (int e = 0; e < m; ++e)
            for (int f = 0; f < m; ++f)
              if (out.admissible_F(a, b, c, d, e, f))
                out.F_ref(a, b, c, d, e, f) =
                    cat.F(keep[a], keep[b], keep[c], keep[d], keep[e], keep[f]);
  finalize_dims(out);
  return out;
}

FusionCategoryData builtin_extension(const std::string& name) {
  if (name == "tc_ising+") return ising(+1);
  if (name == "tc_ising-") return ising(-1);

  auto z2graded_abelian = [](const FiniteGroup& G, const ThreeCocycle& alpha,
                             const std::vector<int>& sector) {
    FusionCategoryData cat = vec_g_omega(G, alpha);
    Grading gr;
    gr.group = FiniteGroup::cyclic(2, "g");
    gr.group.names = {"1", "x"};
    gr.sector = sector;
    cat.grading = gr;
    return cat;
  };

  if (name == "tc_z2z2_trivial" || name == "tc_z2z2_twisted" || name == "tc_z2z2_II") {
    FiniteGroup g2 = FiniteGroup::cyclic(2);
    FiniteGroup G = FiniteGroup::product(g2, g2);
    // labels 00, 01, 10, 11; trivial sector = {00, 01}, graded by first component
    G.names = {"0", "psi", "sp", "sm"};
    ThreeCocycle alpha = ThreeCocycle::trivial(G);
    if (name == "tc_z2z2_twisted") alpha = cocycle_library(G, "I(1)");
    if (name == "tc_z2z2_II")
      alpha = cocycle_library(G, "I(1)").times(cocycle_library(G, "II"));
    return z2graded_abelian(G, alpha, {0, 0, 1, 1});
  }
  if (name == "tc_z4_trivial" || name == "tc_z4_twisted") {
    FiniteGroup G = FiniteGroup::cyclic(4);
    // labels in cyclic order 0, sp, psi, sm; trivial sector = {0, psi} (even)
    G.names = {"0", "sp", "psi", "sm"};
    ThreeCocycle alpha = ThreeCocycle::trivial(G);
    if (name == "tc_z4_twisted") alpha = cocycle_library(G, "I^2");
    return z2graded_abelian(G, alpha, {0, 1, 0, 1});
  }
  throw Error(ErrorKind::UnknownName, "unknown extension '" + name + "'");
}

PivotalData pivotal_data(const FusionCategoryData& cat, double tol) {
  int n = cat.size();
  for (int a = 0; a < n; ++a) {
    double m = std::abs(cat.F(a, cat.dual[a], a, a, cat.unit, cat.unit));
    if (std::abs(m - 1.0 / cat.qdim[a]) > tol)
      throw Error(ErrorKind::GaugeViolation,
                  "|F^{a abar a}| != 1/d_a for label " + cat.labels[a]);
  }
  PivotalData out;
  out.A.assign(static_cast<size_t>(n) * n * n, Cplx(0, 0));
  out.B.assign(static_cast<size_t>(n) * n * n, Cplx(0, 0));
  out.kappa.resize(n);
  for (int a = 0; a < n; ++a) out.kappa[a] = cat.kappa(a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cat.N(a, b, c)) {
          out.A[(a * n + b) * n + c] = cat.bendA(a, b, c);
          out.B[(a * n + b) * n + c] = cat.bendB(a, b, c);
          if (std::abs(std::abs(out.A[(a * n + b) * n + c]) - 1.0) > tol ||
              std::abs(std::abs(out.B[(a * n + b) * n + c]) - 1.0) > tol)
            throw Error(ErrorKind::GaugeViolation,
                        "bending coefficient is not a phase at " + cat.labels[a] + "," +
                            cat.labels[b] + "->" + cat.labels[c]);
        }
  return out;
}

}  // namespace tubealg

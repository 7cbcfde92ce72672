#include "tubealg/modular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace tubealg {

MatrixXcd s_matrix(const TubeAlgebra& T, const BlockDecomposition& dec) {
  int n = dec.size();
  MatrixXcd S(n, n);
  std::vector<VectorXcd> simg(n);
  for (int a = 0; a < n; ++a) simg[a] = T.s_operator() * dec.blocks[a].ici;
  for (int b = 0; b < n; ++b) {
    const Block& B = dec.blocks[b];
    Cplx nb = T.alg.trace_pair(B.ici, B.ici);
    for (int a = 0; a < n; ++a)
      S(a, b) = static_cast<double>(B.dim) / dec.blocks[a].dim *
                T.alg.trace_pair(B.ici, simg[a]) / nb;
  }
  return S;
}

std::vector<Cplx> t_matrix(const TubeAlgebra& T, const BlockDecomposition& dec, double tol) {
  std::vector<Cplx> theta(dec.size());
  for (int a = 0; a < dec.size(); ++a) theta[a] = block_theta(T, dec.blocks[a].ici, tol, true);
  return theta;
}

std::vector<double> quantum_dimensions(const TubeAlgebra& T, const BlockDecomposition& dec) {
  std::vector<double> d(dec.size());
  for (int a = 0; a < dec.size(); ++a)
    d[a] = block_qdim(T, dec.blocks[a].ici, dec.blocks[a].dim);
  return d;
}

std::vector<double> tee(const ModularData& md) {
  std::vector<double> g(md.size());
  for (int a = 0; a < md.size(); ++a) g[a] = std::log(md.d_out) - std::log(md.d[a]);
  return g;
}

std::vector<int> verlinde_fusion(const MatrixXcd& S, double tol) {
  int n = static_cast<int>(S.rows());
  double unit_resid = (S * S.adjoint() - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unit_resid > 1e-6)
    throw Error(ErrorKind::NonIntegerFusion, "S is not unitary; Verlinde inapplicable");
  std::vector<int> N(static_cast<size_t>(n) * n * n);
  double max_resid = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Cplx acc = 0;
        for (int x = 0; x < n; ++x) acc += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(0, x);
        double rounded = std::lround(acc.real());
        max_resid = std::max(max_resid, std::abs(acc - rounded));
        if (rounded < 0) max_resid = std::max(max_resid, std::abs(rounded));
        N[(a * n + b) * n + c] = static_cast<int>(std::lround(acc.real()));
      }
  if (max_resid > tol)
    throw Error(ErrorKind::NonIntegerFusion,
                "Verlinde multiplicities are not integers; residual " + std::to_string(max_resid));
  return N;
}

namespace {

// Support object s^a of a nondegenerate block: I_a T_{ppp}^0 = delta_{p,s^a} I_a.
int support_object(const TubeAlgebra& T, const Block& b) {
  if (b.dim != 1)
    throw Error(ErrorKind::DegenerateBlock, "support object defined for nondegenerate blocks only");
  int found = -1;
  for (int i = 0; i < T.size(); ++i)
    if (std::abs(b.ici[i]) > 1e-8) {
      if (found >= 0 && found != T.basis[i].p)
        throw Error(ErrorKind::DegenerateBlock, "nondegenerate block with mixed boundary labels");
      found = T.basis[i].p;
    }
  return found;
}

}  // namespace

Cplx r_symbol_abelian(const TubeAlgebra& T, const BlockDecomposition& dec, int a, int b) {
  const Block& A = dec.blocks[a];
  const Block& B = dec.blocks[b];
  if (A.dim != 1 || B.dim != 1)
    throw Error(ErrorKind::DegenerateBlock, "r_symbol_abelian needs nondegenerate blocks");
  int sa = support_object(T, A);
  int sb = support_object(T, B);
  const FusionCategoryData& C = T.cat;
  if (std::abs(C.qdim[sa] - 1.0) > 1e-9 || std::abs(C.qdim[sb] - 1.0) > 1e-9)
    throw Error(ErrorKind::DegenerateBlock, "r_symbol_abelian needs invertible support objects");
  Cplx acc = 0;
  for (int q = 0; q < T.cat.size(); ++q)
    acc += std::conj(t_coefficient(T, A, sa, q, sa, sb));
  // The raw tube differs from the wall tube by the associator 1-cochain
  // F^{s^b, s^a s^b-bar, s^b}; for a trivial boundary this is the FS phase of
  // s^b. It normalizes the vacuum braiding R^{0b} to 1.
  int m = C.fuse(sa, C.dual[sb])[0];
  int e = C.fuse(sb, m)[0];
  int f = C.fuse(m, sb)[0];
  int d = C.fuse(e, sb)[0];
  Cplx cochain = C.F(sb, m, sb, d, e, f);
  return std::conj(cochain) * acc / T.cat.qdim[sb];
}

// Bantay-type indicator from modular data; valid for the modular doubles the
// pipeline produces.
static Cplx indicator_from_modular(const ModularData& md, int a) {
  Cplx acc = 0;
  int n = md.size();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      int nb = md.fusion.empty() ? 0 : md.N(b, c, a);
      if (!nb) continue;
      acc += static_cast<double>(nb) * md.d[b] * md.d[c] * std::pow(md.theta[b] / md.theta[c], 2);
    }
  return acc / (md.d_out * md.d_out);
}

std::pair<int, Cplx> fs_indicator(const TubeAlgebra& T, const BlockDecomposition& dec,
                                  const ModularData& md, int a) {
  int n = md.size();
  // Dual from the vacuum column of the Verlinde integers.
  int abar = -1;
  for (int b = 0; b < n; ++b)
    if (md.N(a, b, 0) == 1) {
      if (abar >= 0) throw Error(ErrorKind::DualAmbiguous, "several duals for one block");
      abar = b;
    }
  if (abar < 0) throw Error(ErrorKind::DualAmbiguous, "no dual found for block " + md.labels[a]);
  if (std::abs(md.d[a] - md.d[abar]) > 1e-6 || std::abs(md.theta[a] - md.theta[abar]) > 1e-6)
    throw Error(ErrorKind::DualAmbiguous, "dual candidate has inconsistent spin or dimension");
  Cplx kappa;
  if (dec.blocks[a].dim == 1 && abar == a && std::abs(md.d[a] - 1.0) < 1e-9) {
    // Unbending a self-dual worldline: cup then cap equals theta_a times the
    // self-braiding in the vacuum channel.
    kappa = md.theta[a] * r_symbol_abelian(T, dec, a, a);
    Cplx cross = indicator_from_modular(md, a);
    if (std::abs(kappa - cross) > 1e-6)
      throw Error(ErrorKind::DualAmbiguous, "FS indicator routes disagree on " + md.labels[a]);
  } else {
    kappa = indicator_from_modular(md, a);
  }
  if (abar == a) {
    double snapped = (kappa.real() >= 0) ? 1.0 : -1.0;
    if (std::abs(kappa - snapped) > 1e-6)
      throw Error(ErrorKind::DualAmbiguous, "self-dual FS indicator is not a sign");
    kappa = snapped;
  }
  return {abar, kappa};
}

ModularData modular_data(const TubeAlgebra& T, const BlockDecomposition& dec, double tol) {
  ModularData md;
  md.d_out = T.alg.norm_sq;
  for (const Block& b : dec.blocks) md.labels.push_back(b.label);
  md.d = quantum_dimensions(T, dec);
  md.theta = t_matrix(T, dec, tol);
  md.S = s_matrix(T, dec);
  md.fusion = verlinde_fusion(md.S);
  md.gamma = tee(md);
  md.dual.resize(md.size());
  md.kappa.resize(md.size());
  for (int a = 0; a < md.size(); ++a) {
    auto [abar, k] = fs_indicator(T, dec, md, a);
    md.dual[a] = abar;
    md.kappa[a] = k;
  }
  return md;
}

ModularChecks modular_consistency(const ModularData& md) {
  ModularChecks c;
  int n = md.size();
  MatrixXcd Tm = MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) Tm(i, i) = md.theta[i];
  MatrixXcd S2 = md.S * md.S;
  c.s_unitary = (md.S * md.S.adjoint() - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  MatrixXcd ST = md.S * Tm;
  c.st_cubed = (ST * ST * ST - S2).cwiseAbs().maxCoeff();
  c.s_fourth = (S2 * S2 - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  MatrixXcd C = MatrixXcd::Zero(n, n);
  for (int a = 0; a < n; ++a) C(md.dual[a], a) = 1.0;
  c.s2_charge_conj = (S2 - C).cwiseAbs().maxCoeff();
  double vr = 0;
  for (int a = 0; a < n; ++a) vr = std::max(vr, std::abs(md.S(0, a) - md.d[a] / md.d_out));
  c.vacuum_row = vr;
  double ir = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc) {
        Cplx acc = 0;
        for (int x = 0; x < n; ++x) acc += md.S(a, x) * md.S(b, x) * std::conj(md.S(cc, x)) / md.S(0, x);
        ir = std::max(ir, std::abs(acc - static_cast<double>(md.N(a, b, cc))));
      }
  c.verlinde_integrality = ir;
  return c;
}

std::optional<std::vector<int>> match_modular_data(const ModularData& A, const ModularData& B,
                                                   double tol) {
  int n = A.size();
  if (B.size() != n) return std::nullopt;
  // Candidate images by (d, theta) agreement.
  std::vector<std::vector<int>> cand(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (std::abs(A.d[a] - B.d[b]) < 1e-6 && std::abs(A.theta[a] - B.theta[b]) < 1e-6)
        cand[a].push_back(b);
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  // Order by fewest candidates first.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return cand[x].size() < cand[y].size(); });
  std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
    if (idx == order.size()) return true;
    int a = order[idx];
    for (int b : cand[a]) {
      if (used[b]) continue;
      bool ok = true;
      for (int a2 = 0; a2 < n && ok; ++a2) {
        if (perm[a2] < 0) continue;
        if (std::abs(A.S(a, a2) - B.S(b, perm[a2])) > tol ||
            std::abs(A.S(a2, a) - B.S(perm[a2], b)) > tol)
          ok = false;
      }
      if (!ok) continue;
      perm[a] = b;
      used[b] = true;
      if (assign(idx + 1)) return true;
      perm[a] = -1;
      used[b] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  // Final verification.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (std::abs(A.S(a, b) - B.S(perm[a], perm[b])) > tol) return std::nullopt;
  return perm;
}

}  // namespace tubealg

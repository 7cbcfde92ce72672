#include "tubealg/defects.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace tubealg {

namespace {

// Lift a dube coefficient vector into the full tube algebra.
VectorXcd lift(const TubeAlgebra& dube, const TubeAlgebra& full, const VectorXcd& v) {
  VectorXcd out = VectorXcd::Zero(full.size());
  for (int i = 0; i < dube.size(); ++i) {
    if (v[i] == Cplx(0, 0)) continue;
    const TubeLabel& t = dube.basis[i];
    int k = full.index_of(t.p, t.q, t.r, t.s);
    if (k < 0) throw Error(ErrorKind::DimensionMismatch, "dube tube missing from full basis");
    out[k] = v[i];
  }
  return out;
}

// Phase convention for walls: the first nonzero coefficient is made real
// positive, scanning tubes boundary-then-wrap-string major (the order wall
// tables are conventionally listed in).
VectorXcd phase_fix(const TubeAlgebra& full, VectorXcd v) {
  int best = -1;
  auto key = [&](int i) {
    const TubeLabel& t = full.basis[i];
    return std::tuple(full.sector_p(i), t.p, t.s, t.q, t.r);
  };
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) <= 1e-9) continue;
    if (best < 0 || key(i) < key(best)) best = i;
  }
  if (best >= 0) v *= std::conj(v[best]) / std::abs(v[best]);
  return v;
}

// In-algebra inverse square root of a positive element s supported on one
// block: Lagrange interpolation of 1/sqrt on the nonzero spectrum of L_s.
VectorXcd inv_sqrt_in_block(const StarAlgebra& A, const VectorXcd& s, const VectorXcd& block_unit) {
  MatrixXcd Ls = A.left_matrix(s);
  Eigen::ComplexEigenSolver<MatrixXcd> es(Ls);
  std::vector<double> vals;
  double scale = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    scale = std::max(scale, std::abs(es.eigenvalues()[i]));
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double re = es.eigenvalues()[i].real();
    if (std::abs(es.eigenvalues()[i]) < 1e-8 * std::max(scale, 1.0)) continue;
    bool found = false;
    for (double v : vals)
      if (std::abs(v - re) < 1e-7 * std::max(1.0, std::abs(re))) found = true;
    if (!found) vals.push_back(re);
  }
  if (vals.empty()) throw Error(ErrorKind::ZeroProjection, "zero element in polar decomposition");
  for (double v : vals)
    if (v < 0) throw Error(ErrorKind::ZeroProjection, "polar decomposition hit a nonpositive element");
  // Interpolation polynomial p with p(v) = 1/sqrt(v) on vals, evaluated at s.
  VectorXcd acc = VectorXcd::Zero(A.dim);
  for (size_t k = 0; k < vals.size(); ++k) {
    VectorXcd term = block_unit;
    double denom = 1;
    for (size_t j = 0; j < vals.size(); ++j) {
      if (j == k) continue;
      term = A.product(term, s - vals[j] * block_unit);
      denom *= (vals[k] - vals[j]);
    }
    acc += term / (denom * std::sqrt(vals[k]));
  }
  return acc;
}

// Generic seeded combination of sector-h tubes projected onto a defect ICI,
// then right-polar normalized to a block unitary.
VectorXcd wall_generic(const TubeAlgebra& full, const VectorXcd& ici_full, int h,
                       std::uint64_t seed) {
  Rng rng(seed);
  VectorXcd x = VectorXcd::Zero(full.size());
  for (int i = 0; i < full.size(); ++i)
    if (full.sector_s(i) == h) x[i] = rng.cgaussian();
  VectorXcd w = full.alg.product(x, ici_full);
  if (w.norm() < 1e-10) return VectorXcd();
  VectorXcd s = full.alg.product(full.alg.adjoint(w), w);
  VectorXcd isq = inv_sqrt_in_block(full.alg, s, ici_full);
  return full.alg.product(w, isq);
}

// Wall from the grading-filtered subidempotents of the full-double ICIs: for
// rho-invariant defects the filtered piece is a coherent block unitary.
VectorXcd wall_from_subidempotents(const TubeAlgebra& full,
                                   const std::vector<VectorXcd>& full_icis,
                                   const VectorXcd& ici_full, int g, int h) {
  for (const VectorXcd& A : full_icis) {
    VectorXcd piece = VectorXcd::Zero(full.size());
    for (int i = 0; i < full.size(); ++i)
      if (full.sector_p(i) == g && full.sector_s(i) == h) piece[i] = A[i];
    if (piece.norm() < 1e-10) continue;
    VectorXcd w = full.alg.product(piece, ici_full);
    if (w.norm() < 1e-10) continue;
    VectorXcd s = full.alg.product(full.alg.adjoint(w), w);
    VectorXcd isq = inv_sqrt_in_block(full.alg, s, ici_full);
    return full.alg.product(w, isq);
  }
  return VectorXcd();
}

}  // namespace

int DefectTheory::orbit_rep(int a) const {
  int rep = a;
  for (int h = 0; h < group().size(); ++h) rep = std::min(rep, rho[h][a]);
  return rep;
}

std::vector<int> DefectTheory::orbit(int a) const {
  std::vector<int> out;
  for (int h = 0; h < group().size(); ++h)
    if (std::find(out.begin(), out.end(), rho[h][a]) == out.end()) out.push_back(rho[h][a]);
  std::sort(out.begin(), out.end());
  return out;
}

DefectTheory defect_spectrum(const FusionCategoryData& gcat, std::uint64_t seed, double tol) {
  if (!gcat.grading)
    throw Error(ErrorKind::MalformedInput, "defect_spectrum needs a graded category");
  DefectTheory th;
  th.cat = gcat;
  th.full = build_tube_algebra(gcat, false);
  th.dube = build_tube_algebra(gcat, true);
  th.ddec = central_idempotents(*th.dube, seed, tol);
  const FiniteGroup& G = gcat.group();
  int n = th.ddec.size();
  th.ici.resize(n);
  th.sector.resize(n);
  th.qdim.resize(n);
  for (int a = 0; a < n; ++a) {
    th.ici[a] = lift(*th.dube, *th.full, th.ddec.blocks[a].ici);
    th.sector[a] = th.ddec.blocks[a].sector;
    th.qdim[a] = th.ddec.blocks[a].qdim;
  }

  // Full-double ICIs provide coherent walls for degenerate blocks.
  std::vector<VectorXcd> full_icis;
  for (int a = 0; a < n; ++a)
    if (th.ddec.blocks[a].dim > 1 && full_icis.empty())
      full_icis = central_idempotents_raw(th.full->alg, seed, tol);

  // Walls for every defect and group element.
  th.walls.assign(n, std::vector<VectorXcd>(G.size()));
  for (int a = 0; a < n; ++a) {
    for (int h = 0; h < G.size(); ++h) {
      VectorXcd w;
      if (h == 0) {
        w = th.ici[a];
      } else if (a == 0) {
        // omega_0 convention: the sector-h projector string on the vacuum.
        w = VectorXcd::Zero(th.full->size());
        for (int s = 0; s < gcat.size(); ++s) {
          if (gcat.sector(s) != h) continue;
          int k = th.full->index_of(gcat.unit, gcat.dual[s], gcat.unit, s);
          if (k < 0) continue;
          w[k] = std::conj(gcat.kappa(s)) * gcat.qdim[s] / th.dube->alg.norm_sq;
        }
      } else if (th.ddec.blocks[a].dim > 1) {
        w = wall_from_subidempotents(*th.full, full_icis, th.ici[a], th.sector[a], h);
        if (w.size() == 0) w = wall_generic(*th.full, th.ici[a], h, seed + 77 * a + h);
      } else {
        std::uint64_t s = seed + 1000003ull * a + h;
        for (int attempt = 0; attempt < 5 && w.size() == 0; ++attempt)
          w = wall_generic(*th.full, th.ici[a], h, s + 7919 * attempt);
        if (w.size() == 0)
          throw Error(ErrorKind::ZeroProjection, "domain wall projection vanished for five seeds");
      }
      if (w.size() == 0)
        throw Error(ErrorKind::ZeroProjection, "domain wall could not be constructed");
      th.walls[a][h] = (h == 0) ? w : phase_fix(*th.full, w);
      double resid =
          (th.full->alg.product(th.full->alg.adjoint(th.walls[a][h]), th.walls[a][h]) - th.ici[a])
              .norm();
      if (resid > std::max(100 * tol, 1e-6))
        throw Error(ErrorKind::ZeroProjection,
                    "domain wall is not unitary on its block, residual " + std::to_string(resid));
    }
  }

  // Permutation action rho_h(a) from O O^dag.
  th.rho.assign(G.size(), std::vector<int>(n, -1));
  for (int h = 0; h < G.size(); ++h)
    for (int a = 0; a < n; ++a) {
      VectorXcd img = th.full->alg.product(th.walls[a][h], th.full->alg.adjoint(th.walls[a][h]));
      for (int b = 0; b < n; ++b)
        if ((img - th.ici[b]).norm() < 1e-6) th.rho[h][a] = b;
      if (th.rho[h][a] < 0)
        throw Error(ErrorKind::NoMatchingICI, "wall conjugate does not land on a defect ICI");
    }
  for (int h = 0; h < G.size(); ++h)
    for (int k = 0; k < G.size(); ++k)
      for (int a = 0; a < n; ++a)
        if (th.rho[h][th.rho[k][a]] != th.rho[G.op(h, k)][a])
          throw Error(ErrorKind::NoMatchingICI, "rho is not a group action");

  th.stabilizer.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < G.size(); ++h)
      if (th.rho[h][a] == a) th.stabilizer[a].push_back(h);

  // eta_a(h,k): O^h_{rho_k a} O^k_a = eta O^{hk}_a.
  th.eta.assign(n, MatrixXcd::Zero(G.size(), G.size()));
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < G.size(); ++h)
      for (int k = 0; k < G.size(); ++k) {
        VectorXcd prod = th.full->alg.product(th.walls[th.rho[k][a]][h], th.walls[a][k]);
        const VectorXcd& target = th.walls[a][G.op(h, k)];
        Cplx e = th.full->alg.trace_pair(target, prod) / th.full->alg.trace_pair(target, target);
        if ((prod - e * target).norm() > 1e-6 * std::max(1.0, prod.norm()))
          throw Error(ErrorKind::NoMatchingICI, "wall product is not a phase times a wall");
        th.eta[a](h, k) = e;
      }

  // Defect spins: theta_{a_g} from the twist against the O^g wall.
  th.theta.resize(n);
  for (int a = 0; a < n; ++a) {
    VectorXcd tw = th.full->alg.product(th.full->t_element(), th.ici[a]);
    int g = th.sector[a];
    th.theta[a] = th.full->alg.trace_pair(th.walls[a][g], tw) /
                  th.full->alg.trace_pair(th.walls[a][g], th.walls[a][g]);
    double resid = (tw - th.theta[a] * th.walls[a][g]).norm();
    if (resid > 1e-6)
      throw Error(ErrorKind::NonScalarT, "twist does not act as a phase times the g-wall");
  }
  return th;
}

VectorXcd domain_wall(const DefectTheory& th, int defect, int h, std::uint64_t seed) {
  if (h == 0) return th.ici[defect];
  if (th.ddec.blocks[defect].dim > 1) return th.walls[defect][h];
  VectorXcd w;
  for (int attempt = 0; attempt < 5 && w.size() == 0; ++attempt)
    w = wall_generic(*th.full, th.ici[defect], h, seed + 7919 * attempt);
  if (w.size() == 0)
    throw Error(ErrorKind::ZeroProjection, "domain wall projection vanished for five seeds");
  return phase_fix(*th.full, w);
}

int permutation_action(const DefectTheory& th, int h, int defect, double tol) {
  (void)tol;
  return th.rho[h][defect];
}

EtaDiagnostics eta_table(const DefectTheory& th, int defect) {
  EtaDiagnostics out;
  const FiniteGroup& G = th.group();
  out.eta = MatrixXcd::Zero(G.size(), G.size());
  out.beta = MatrixXcd::Zero(G.size(), G.size());
  for (int h : th.stabilizer[defect])
    for (int k : th.stabilizer[defect]) {
      out.eta(h, k) = th.eta[defect](h, k);
      out.beta(h, k) = th.beta_pairing(defect, h, k);
    }
  // rho-twisted 2-cocycle residual over the full group.
  double resid = 0;
  for (int f = 0; f < G.size(); ++f)
    for (int h = 0; h < G.size(); ++h)
      for (int k = 0; k < G.size(); ++k) {
        Cplx lhs = th.eta[th.rho[k][defect]](f, h) * th.eta[defect](G.op(f, h), k);
        Cplx rhs = th.eta[defect](f, G.op(h, k)) * th.eta[defect](h, k);
        resid = std::max(resid, std::abs(lhs - rhs));
      }
  out.cocycle_residual = resid;
  return out;
}

Cplx gx_s_entry(const DefectTheory& th, int a, int b) {
  const FiniteGroup& G = th.group();
  int g = th.sector[a], h = th.sector[b];
  if (G.op(g, h) != G.op(h, g)) return 0;
  if (th.rho[h][a] != a || th.rho[g][b] != b) return 0;
  const VectorXcd& bra = th.walls[b][G.inv[g]];
  VectorXcd ket = th.full->s_operator() * th.walls[a][h];
  double Da = th.ddec.blocks[a].dim, Db = th.ddec.blocks[b].dim;
  return Db / Da * th.full->alg.trace_pair(bra, ket) / th.full->alg.trace_pair(bra, bra);
}

GxModular gcrossed_modular(const DefectTheory& th) {
  GxModular out;
  int n = th.count();
  const FiniteGroup& G = th.group();
  out.S = MatrixXcd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.S(a, b) = gx_s_entry(th, a, b);
  out.twisted_theta = MatrixXcd::Zero(n, G.size());
  for (int a = 0; a < n; ++a)
    for (int h : th.stabilizer[a]) {
      int g = th.sector[a];
      // T(O^h_a) = theta_{O^h_a} O^{gh}_a.
      VectorXcd tw = th.full->alg.product(th.full->t_element(), th.walls[a][h]);
      const VectorXcd& target = th.walls[a][G.op(g, h)];
      Cplx val = th.full->alg.trace_pair(target, tw) / th.full->alg.trace_pair(target, target);
      if ((tw - val * target).norm() > 1e-6)
        throw Error(ErrorKind::NonScalarT, "twisted T is not a phase times a wall");
      out.twisted_theta(a, h) = val;
    }
  return out;
}

std::vector<std::vector<int>> twisted_sector_dims(const DefectTheory& th) {
  const FiniteGroup& G = th.group();
  std::vector<std::vector<int>> dims(G.size(), std::vector<int>(G.size(), 0));
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h) {
      if (G.op(g, h) != G.op(h, g)) continue;
      int c = 0;
      for (int a = 0; a < th.count(); ++a)
        if (th.sector[a] == g && th.rho[h][a] == a) ++c;
      dims[g][h] = c;
    }
  return dims;
}

}  // namespace tubealg

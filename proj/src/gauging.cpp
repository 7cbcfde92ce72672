#include "tubealg/gauging.hpp"

#include <algorithm>
#include <cmath>

namespace tubealg {

Cplx ProjectiveIrrepSet::chi(int irrep, int ambient_element) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == ambient_element) return irreps[irrep].chi[i];
  return 0;
}

ProjectiveIrrepSet projective_irreps(const std::vector<int>& subgroup, const FiniteGroup& G,
                                     const MatrixXcd& eta, std::uint64_t seed, double tol) {
  int m = static_cast<int>(subgroup.size());
  std::vector<int> pos(G.size(), -1);
  for (int i = 0; i < m; ++i) pos[subgroup[i]] = i;
  if (subgroup.empty() || subgroup[0] != 0)
    throw Error(ErrorKind::MalformedInput, "subgroup list must start with the identity");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (pos[G.op(subgroup[i], subgroup[j])] < 0)
        throw Error(ErrorKind::MalformedInput, "element list is not closed under multiplication");
      if (std::abs(std::abs(eta(subgroup[i], subgroup[j])) - 1.0) > 1e-9)
        throw Error(ErrorKind::InvalidCocycle, "eta entry is not a phase on the subgroup");
    }
  // 2-cocycle equation and normalization.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        int ga = subgroup[a], gb = subgroup[b], gc = subgroup[c];
        Cplx lhs = eta(ga, gb) * eta(G.op(ga, gb), gc);
        Cplx rhs = eta(gb, gc) * eta(ga, G.op(gb, gc));
        if (std::abs(lhs - rhs) > 1e-8)
          throw Error(ErrorKind::InvalidCocycle, "eta violates the 2-cocycle equation");
      }

  // Twisted group algebra u_g u_h = eta(g,h) u_{gh} with unitary generators.
  StarAlgebra A;
  A.dim = m;
  A.norm_sq = m;
  A.mult_table.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      A.mult_table[i * m + j] = {{pos[G.op(subgroup[i], subgroup[j])], eta(subgroup[i], subgroup[j])}};
  A.dagger_mat = MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    int gi = subgroup[i];
    A.dagger_mat(pos[G.inv[gi]], i) = std::conj(eta(gi, G.inv[gi]));
  }
  A.unit = VectorXcd::Zero(m);
  A.unit[0] = 1.0;
  A.finalize();

  auto icis = central_idempotents_raw(A, seed, tol);
  ProjectiveIrrepSet out;
  out.elements = subgroup;
  int dim_check = 0;
  for (const VectorXcd& P : icis) {
    ProjectiveIrrep ir;
    double tr = A.trace(P).real();
    int dsq = static_cast<int>(std::lround(tr));
    ir.dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dsq))));
    if (ir.dim * ir.dim != dsq)
      throw Error(ErrorKind::DegenerateSpectrum, "twisted group algebra block is not square");
    dim_check += dsq;
    ir.chi.resize(m);
    for (int i = 0; i < m; ++i)
      ir.chi[i] = std::conj(Cplx(P[i]) * static_cast<double>(m) / static_cast<double>(ir.dim));
    if (std::abs(ir.chi[0] - static_cast<double>(ir.dim)) > 1e-7)
      throw Error(ErrorKind::DegenerateSpectrum, "projective character at the identity is not d_mu");
    out.irreps.push_back(std::move(ir));
  }
  if (dim_check != m)
    throw Error(ErrorKind::DegenerateSpectrum, "projective irrep dimensions do not sum to |H|");
  // Canonical order: dimension, then snapped character tuple.
  auto key = [m](const ProjectiveIrrep& ir) {
    std::vector<std::pair<long, long>> k;
    for (const Cplx& c : ir.chi) k.push_back({std::lround(c.real() * 1e6), std::lround(c.imag() * 1e6)});
    return std::make_pair(ir.dim, k);
  };
  std::sort(out.irreps.begin(), out.irreps.end(),
            [&](const ProjectiveIrrep& x, const ProjectiveIrrep& y) { return key(x) < key(y); });
  return out;
}

std::string GaugedTheory::label_name(int i) const {
  return "[" + std::to_string(labels[i].first) + "," + std::to_string(labels[i].second) + "]";
}

GaugedTheory gauge(const DefectTheory& th, std::uint64_t seed, double tol) {
  GaugedTheory gt;
  gt.theory = th;
  const FiniteGroup& G = th.cat.group();
  const StarAlgebra& A = th.full->alg;

  std::vector<int> reps;
  for (int a = 0; a < th.count(); ++a)
    if (th.orbit_rep(a) == a) reps.push_back(a);

  VectorXcd total = VectorXcd::Zero(th.full->size());
  for (int a : reps) {
    const std::vector<int>& Z = th.stabilizer[a];
    ProjectiveIrrepSet irr = projective_irreps(Z, G, th.eta[a], seed, tol);
    // Left-coset representatives of Z_a, smallest element first.
    std::vector<int> cosets;
    std::vector<bool> seen(G.size(), false);
    for (int k = 0; k < G.size(); ++k) {
      if (seen[k]) continue;
      cosets.push_back(k);
      for (int z : Z) seen[G.op(k, z)] = true;
    }
    for (size_t mu = 0; mu < irr.irreps.size(); ++mu) {
      const ProjectiveIrrep& ir = irr.irreps[mu];
      VectorXcd P = VectorXcd::Zero(th.full->size());
      for (size_t i = 0; i < Z.size(); ++i)
        P += std::conj(ir.chi[i]) * th.walls[a][Z[i]];
      P *= static_cast<double>(ir.dim) / static_cast<double>(Z.size());
      VectorXcd I = VectorXcd::Zero(th.full->size());
      for (int k : cosets)
        I += A.product(th.walls[a][k], A.product(P, A.adjoint(th.walls[a][k])));
      double idem = (A.product(I, I) - I).norm();
      double herm = (A.adjoint(I) - I).norm();
      if (idem > 1e-6 || herm > 1e-6)
        throw Error(ErrorKind::NotIdempotent,
                    "gauged projector fails idempotency at residual " + std::to_string(idem));
      double tr = A.trace(I).real();
      int dsq = static_cast<int>(std::lround(tr));
      int D = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dsq))));
      if (D * D != dsq)
        throw Error(ErrorKind::NotIdempotent, "gauged block trace is not a perfect square");
      int orbit_size = static_cast<int>(th.orbit(a).size());
      if (D != ir.dim * th.ddec.blocks[a].dim * orbit_size)
        throw Error(ErrorKind::NotIdempotent, "gauged block dimension mismatch");
      gt.labels.push_back({a, static_cast<int>(mu)});
      gt.irreps.push_back(irr);
      gt.ici.push_back(I);
      gt.block_dim.push_back(D);
      gt.qdim.push_back(G.size() * ir.dim * th.qdim[a] / static_cast<double>(Z.size()));
      int g = th.sector[a];
      Cplx chig = irr.chi(mu, g);
      gt.theta.push_back(chig / static_cast<double>(ir.dim) * th.theta[a]);
      total += I;
    }
  }
  if ((total - A.unit).norm() > 1e-6)
    throw Error(ErrorKind::NotIdempotent, "gauged idempotents do not partition the identity");
  // The gauged vacuum [0, trivial] goes first (downstream Verlinde reads the
  // vacuum row of S).
  VectorXcd vac = vacuum_idempotent(*th.full);
  int vpos = -1;
  for (int i = 0; i < gt.count(); ++i)
    if ((gt.ici[i] - vac).norm() < 1e-6) vpos = i;
  if (vpos < 0)
    throw Error(ErrorKind::VacuumNotFound, "no gauged block matches the vacuum idempotent");
  if (vpos != 0) {
    auto rot = [&](auto& v) { std::rotate(v.begin(), v.begin() + vpos, v.begin() + vpos + 1); };
    rot(gt.labels);
    rot(gt.irreps);
    rot(gt.ici);
    rot(gt.block_dim);
    rot(gt.qdim);
    rot(gt.theta);
  }
  // Centrality against the full algebra basis.
  for (const VectorXcd& I : gt.ici)
    for (int i = 0; i < th.full->size(); ++i) {
      VectorXcd e = VectorXcd::Zero(th.full->size());
      e[i] = 1.0;
      if ((A.product(e, I) - A.product(I, e)).norm() > 1e-6)
        throw Error(ErrorKind::NotIdempotent, "gauged idempotent is not central");
    }
  return gt;
}

namespace {

// Transported projective character of the defect rho_r(a): read off the wall
// expansion of O^r P_{a,mu} O^r\dag.
Cplx transported_chi_conj(const DefectTheory& th, const ProjectiveIrrepSet& irr, int a, int mu,
                          int r, int w) {
  const StarAlgebra& A = th.full->alg;
  int ra = th.rho[r][a];
  bool in_stab = false;
  for (int z : th.stabilizer[ra]) in_stab |= (z == w);
  if (!in_stab) return 0;
  const ProjectiveIrrep& ir = irr.irreps[mu];
  VectorXcd P = VectorXcd::Zero(th.full->size());
  for (size_t i = 0; i < irr.elements.size(); ++i)
    P += std::conj(ir.chi[i]) * th.walls[a][irr.elements[i]];
  P *= static_cast<double>(ir.dim) / static_cast<double>(irr.elements.size());
  VectorXcd Pt = A.product(th.walls[a][r], A.product(P, A.adjoint(th.walls[a][r])));
  Cplx coeff = A.trace_pair(th.walls[ra][w], Pt) / A.trace_pair(th.walls[ra][w], th.walls[ra][w]);
  return coeff * static_cast<double>(th.stabilizer[ra].size()) / static_cast<double>(ir.dim);
}

}  // namespace

ModularData gauged_modular(const GaugedTheory& gt, double tol) {
  const DefectTheory& th = gt.theory;
  const FiniteGroup& G = th.cat.group();
  int n = gt.count();
  ModularData md;
  md.d_out = G.size() * th.dube->alg.norm_sq;
  md.d = gt.qdim;
  md.theta = gt.theta;
  for (int i = 0; i < n; ++i) md.labels.push_back(gt.label_name(i));
  md.S = MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    auto [a, mu] = gt.labels[i];
    const std::vector<int>& Za = th.stabilizer[a];
    std::vector<int> acos;
    {
      std::vector<bool> seen(G.size(), false);
      for (int k = 0; k < G.size(); ++k) {
        if (seen[k]) continue;
        acos.push_back(k);
        for (int z : Za) seen[G.op(k, z)] = true;
      }
    }
    for (int j = 0; j < n; ++j) {
      auto [b, nu] = gt.labels[j];
      const std::vector<int>& Zb = th.stabilizer[b];
      std::vector<int> bcos;
      std::vector<bool> seen(G.size(), false);
      for (int k = 0; k < G.size(); ++k) {
        if (seen[k]) continue;
        bcos.push_back(k);
        for (int z : Zb) seen[G.op(k, z)] = true;
      }
      Cplx acc = 0;
      for (int r : acos)
        for (int s : bcos) {
          int ra = th.rho[r][a], sb = th.rho[s][b];
          int sh = G.conj(s, th.sector[b]);
          int rginv = G.inv[G.conj(r, th.sector[a])];
          Cplx sterm = gx_s_entry(th, ra, sb);
          if (std::abs(sterm) < 1e-14) continue;
          Cplx c1 = transported_chi_conj(th, gt.irreps[i], a, mu, r, sh);
          Cplx c2 = std::conj(transported_chi_conj(th, gt.irreps[j], b, nu, s, rginv));
          acc += c1 * c2 * sterm;
        }
      md.S(i, j) = acc / static_cast<double>(G.size());
    }
  }
  md.fusion = verlinde_fusion(md.S);
  md.gamma = tee(md);
  md.dual.assign(n, -1);
  md.kappa.assign(n, Cplx(0, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (md.N(a, b, 0) == 1) md.dual[a] = b;
    if (md.dual[a] < 0) throw Error(ErrorKind::DualAmbiguous, "gauged dual missing");
  }
  (void)tol;
  return md;
}

ModularData gauged_modular_direct(const GaugedTheory& gt, std::uint64_t seed, double tol) {
  const DefectTheory& th = gt.theory;
  BlockDecomposition dec;
  for (int i = 0; i < gt.count(); ++i) {
    Block b;
    b.ici = gt.ici[i];
    b.dim = gt.block_dim[i];
    b.qdim = block_qdim(*th.full, b.ici, b.dim);
    b.theta = block_theta(*th.full, b.ici, tol, true);
    b.label = gt.label_name(i);
    dec.blocks.push_back(std::move(b));
  }
  dec.vacuum = 0;
  for (auto& b : dec.blocks) refine_block(th.full->alg, b, seed ^ 0xABCDEF, tol);
  return modular_data(*th.full, dec, tol);
}

std::vector<int> spt_fusion(const GaugedTheory& gt) {
  const DefectTheory& th = gt.theory;
  const FiniteGroup& G = th.cat.group();
  const StarAlgebra& A = th.full->alg;
  // Requires every sector to hold exactly one defect (an SPT input).
  std::vector<int> defect_of(G.size(), -1), lbl(G.size(), -1);
  for (int a = 0; a < th.count(); ++a) {
    if (defect_of[th.sector[a]] >= 0)
      throw Error(ErrorKind::Unsupported, "spt_fusion needs single-defect sectors");
    defect_of[th.sector[a]] = a;
  }
  for (int a = 0; a < th.cat.size(); ++a) lbl[th.cat.sector(a)] = a;
  auto alpha = [&](int p, int q, int r2) {
    int pq = G.op(p, q), qr = G.op(q, r2);
    return th.cat.F(lbl[p], lbl[q], lbl[r2], lbl[G.op(pq, r2)], lbl[pq], lbl[qr]);
  };
  // Explicit closed-form wall gauge for invertible defects; eta is then the
  // slant product of the associator, and the U phase on fusion vertices is
  // the same slant, so all ingredients of the character sum share one gauge.
  auto wall = [&](int g, int h) {
    VectorXcd w = VectorXcd::Zero(th.full->size());
    int hg = G.conj(h, g);
    int k = th.full->index_of(lbl[hg], lbl[G.op(g, G.inv[h])], lbl[g], lbl[h]);
    if (k < 0) throw Error(ErrorKind::ZeroProjection, "missing invertible wall tube");
    w[k] = std::conj(alpha(h, G.op(g, G.inv[h]), h));
    return w;
  };
  auto slant = [&](int w, int y, int z) {
    int zw = G.conj(z, w);
    int yzw = G.conj(G.op(y, z), w);
    return alpha(y, zw, z) / (alpha(yzw, y, z) * alpha(y, z, w));
  };
  // eta in this gauge, verified against the wall products.
  std::vector<MatrixXcd> eta(G.size(), MatrixXcd::Zero(G.size(), G.size()));
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h)
      for (int k = 0; k < G.size(); ++k) {
        VectorXcd prod = A.product(wall(G.conj(k, g), h), wall(g, k));
        VectorXcd target = wall(g, G.op(h, k));
        Cplx e = A.trace_pair(target, prod) / A.trace_pair(target, target);
        if ((prod - e * target).norm() > 1e-8)
          throw Error(ErrorKind::NoMatchingICI, "invertible wall product is not a phase");
        eta[g](h, k) = e;
      }
  // Projective irreps of each centralizer in this gauge, orbit sums, and the
  // map onto the gauged labels by ICI matching.
  int n = gt.count();
  struct Entry {
    int cls_rep;
    ProjectiveIrrepSet irr;
    int mu;
    int gt_index;
  };
  std::vector<Entry> entries;
  std::vector<bool> used(n, false);
  for (const auto& cls : G.conjugacy_classes()) {
    int g = cls[0];
    std::vector<int> Z = G.centralizer(g);
    ProjectiveIrrepSet irr = projective_irreps(Z, G, eta[g], kDefaultSeed);
    std::vector<int> cosets;
    std::vector<bool> seen(G.size(), false);
    for (int k = 0; k < G.size(); ++k) {
      if (seen[k]) continue;
      cosets.push_back(k);
      for (int z : Z) seen[G.op(k, z)] = true;
    }
    for (size_t mu = 0; mu < irr.irreps.size(); ++mu) {
      const ProjectiveIrrep& ir = irr.irreps[mu];
      VectorXcd P = VectorXcd::Zero(th.full->size());
      for (size_t i = 0; i < Z.size(); ++i) P += std::conj(ir.chi[i]) * wall(g, Z[i]);
      P *= static_cast<double>(ir.dim) / static_cast<double>(Z.size());
      VectorXcd I = VectorXcd::Zero(th.full->size());
      for (int k : cosets) I += A.product(wall(g, k), A.product(P, A.adjoint(wall(g, k))));
      int found = -1;
      for (int i = 0; i < n; ++i)
        if (!used[i] && (I - gt.ici[i]).norm() < 1e-6) found = i;
      if (found < 0)
        throw Error(ErrorKind::NoMatchingICI, "paper-gauge gauged block does not match");
      used[found] = true;
      entries.push_back({g, irr, static_cast<int>(mu), found});
    }
  }
  // Transported conjugated character in this gauge.
  auto chi_conj = [&](const Entry& E, int r, int w) -> Cplx {
    int rg = G.conj(r, E.cls_rep);
    if (G.op(w, rg) != G.op(rg, w)) return 0;
    const ProjectiveIrrep& ir = E.irr.irreps[E.mu];
    VectorXcd P = VectorXcd::Zero(th.full->size());
    for (size_t i = 0; i < E.irr.elements.size(); ++i)
      P += std::conj(ir.chi[i]) * wall(E.cls_rep, E.irr.elements[i]);
    P *= static_cast<double>(ir.dim) / static_cast<double>(E.irr.elements.size());
    VectorXcd Pt = A.product(wall(E.cls_rep, r), A.product(P, A.adjoint(wall(E.cls_rep, r))));
    VectorXcd wv = wall(rg, w);
    Cplx coeff = A.trace_pair(wv, Pt) / A.trace_pair(wv, wv);
    return coeff * static_cast<double>(E.irr.elements.size()) / static_cast<double>(ir.dim);
  };
  auto cosets_of = [&](const std::vector<int>& Z) {
    std::vector<int> out;
    std::vector<bool> seen(G.size(), false);
    for (int k = 0; k < G.size(); ++k) {
      if (seen[k]) continue;
      out.push_back(k);
      for (int z : Z) seen[G.op(k, z)] = true;
    }
    return out;
  };
  std::vector<int> N(static_cast<size_t>(n) * n * n, 0);
  for (const Entry& ea : entries)
    for (const Entry& eb : entries)
      for (const Entry& ec : entries) {
        int g = ea.cls_rep, h = eb.cls_rep, c = ec.cls_rep;
        Cplx acc = 0;
        for (int x : cosets_of(G.centralizer(g)))
          for (int y : cosets_of(G.centralizer(h)))
            for (int z : cosets_of(G.centralizer(c))) {
              int xg = G.conj(x, g), yh = G.conj(y, h), zc = G.conj(z, c);
              if (G.op(xg, yh) != zc) continue;
              for (int w = 0; w < G.size(); ++w) {
                if (G.op(w, xg) != G.op(xg, w) || G.op(w, yh) != G.op(yh, w)) continue;
                Cplx c1 = chi_conj(ea, x, w);
                Cplx c2 = chi_conj(eb, y, w);
                Cplx c3 = std::conj(chi_conj(ec, z, w));
                acc += slant(w, xg, yh) * c1 * c2 * c3;
              }
            }
        acc /= static_cast<double>(G.size());
        double rounded = std::lround(acc.real());
        if (std::abs(acc - rounded) > 1e-6)
          throw Error(ErrorKind::NonIntegerFusion, "spt character-sum fusion is not integral");
        N[(ea.gt_index * n + eb.gt_index) * n + ec.gt_index] =
            static_cast<int>(std::lround(acc.real()));
      }
  return N;
}

}  // namespace tubealg

#include "tubealg/condensation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace tubealg {

CondensationReport break_symmetry(const FusionCategoryData& gcat, std::uint64_t seed, double tol) {
  if (!gcat.grading)
    throw Error(ErrorKind::MalformedInput, "break_symmetry needs a graded category");
  CondensationReport rep;
  rep.cat = gcat;
  rep.theory = defect_spectrum(gcat, seed, tol);
  rep.full = rep.theory.full;
  // Decompose the full tube algebra of C_G with the same machinery (blocks in
  // canonical order, matrix units included).
  {
    FusionCategoryData ungraded = forget_grading(gcat);
    auto dec = central_idempotents(*rep.full, seed, tol);
    rep.fdec = std::move(dec);
  }
  const FiniteGroup& G = gcat.group();
  int ng = G.size();
  int na = rep.fdec.size();
  int nd = rep.theory.count();

  rep.pieces.assign(na, std::vector<VectorXcd>(static_cast<size_t>(ng) * ng));
  for (int a = 0; a < na; ++a)
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h) {
        VectorXcd piece = VectorXcd::Zero(rep.full->size());
        for (int i = 0; i < rep.full->size(); ++i)
          if (rep.full->sector_p(i) == g && rep.full->sector_s(i) == h)
            piece[i] = rep.fdec.blocks[a].ici[i];
        rep.pieces[a][rep.piece_index(g, h)] = std::move(piece);
      }

  // Splitting: the normalized (I_a)_g^1 pieces decompose into defect ICIs.
  rep.splits.assign(na, {});
  rep.members.assign(nd, {});
  for (int a = 0; a < na; ++a)
    for (int g = 0; g < ng; ++g) {
      const VectorXcd& piece = rep.pieces[a][rep.piece_index(g, 0)];
      if (piece.norm() < 1e-9) continue;
      for (int b = 0; b < nd; ++b) {
        if (rep.theory.sector[b] != g) continue;
        Cplx overlap = rep.full->alg.trace_pair(rep.theory.ici[b], piece) /
                       rep.full->alg.trace_pair(rep.theory.ici[b], rep.theory.ici[b]);
        if (std::abs(overlap) > 1e-7) {
          rep.splits[a].push_back(b);
          rep.members[b].push_back(a);
        }
      }
    }
  for (int b = 0; b < nd; ++b)
    if (rep.members[b].empty())
      throw Error(ErrorKind::NoMatchingICI, "a defect received no anyons under condensation");

  // Rep(G) bosons: anyons whose trivial piece is proportional to the dube
  // vacuum, (I_a)_1^1 = I_0 / |G|.
  VectorXcd dube_vac = rep.theory.ici[0];
  for (int a = 0; a < na; ++a) {
    const VectorXcd& piece = rep.pieces[a][rep.piece_index(0, 0)];
    if (piece.norm() < 1e-9) continue;
    if ((piece - dube_vac / static_cast<double>(ng)).norm() < 1e-7)
      rep.condensed_vacuum.push_back(a);
  }
  if (std::find(rep.condensed_vacuum.begin(), rep.condensed_vacuum.end(), rep.fdec.vacuum) ==
      rep.condensed_vacuum.end())
    throw Error(ErrorKind::VacuumNotFound, "double vacuum does not condense to the dube vacuum");

  for (int b = 0; b < nd; ++b)
    if (rep.theory.sector[b] != 0) rep.confined.push_back(b);
  return rep;
}

std::vector<int> condensed_vacuum_set(const CondensationReport& rep) {
  return rep.condensed_vacuum;
}

std::vector<int> confinement_set(const CondensationReport& rep) { return rep.confined; }

std::vector<std::vector<int>> identification_classes(const CondensationReport& rep) {
  int na = rep.fdec.size();
  std::vector<int> cls(na, -1);
  std::vector<std::vector<int>> out;
  // Union by shared defects.
  std::vector<int> parent(na);
  for (int i = 0; i < na; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& anyons : rep.members)
    for (size_t i = 1; i < anyons.size(); ++i) parent[find(anyons[i])] = find(anyons[0]);
  std::vector<std::vector<int>> buckets(na);
  for (int i = 0; i < na; ++i) buckets[find(i)].push_back(i);
  for (auto& b : buckets)
    if (!b.empty()) out.push_back(b);
  return out;
}

VacuumAttachable vacuum_attachable_sectors(const TubeAlgebra& T, const BlockDecomposition& dec,
                                           double tol) {
  VacuumAttachable out;
  for (int a = 0; a < dec.size(); ++a) {
    VectorXcd piece = VectorXcd::Zero(T.size());
    for (int i = 0; i < T.size(); ++i) {
      const TubeLabel& t = T.basis[i];
      if (t.p == T.cat.unit && t.r == T.cat.unit) piece[i] = dec.blocks[a].ici[i];
    }
    if (piece.norm() < 1e-9) continue;
    out.blocks.push_back(a);
    // Normalize to an idempotent: K fixed by (K X)^2 = K X.
    VectorXcd sq = T.alg.product(piece, piece);
    Cplx k = T.alg.trace_pair(piece, piece) / T.alg.trace_pair(piece, sq);
    VectorXcd proj = k * piece;
    if ((T.alg.product(proj, proj) - proj).norm() > std::max(100 * tol, 1e-6))
      throw Error(ErrorKind::NotIdempotent, "charge projector normalization failed");
    out.projectors.push_back(std::move(proj));
  }
  return out;
}

RoundTrip roundtrip_check(const FusionCategoryData& gcat, std::uint64_t seed, double tol) {
  RoundTrip rt;
  CondensationReport rep = break_symmetry(gcat, seed);
  GaugedTheory gt = gauge(rep.theory, seed);
  ModularData gauged = gauged_modular(gt);
  ModularData direct = modular_data(*rep.full, rep.fdec);
  auto perm = match_modular_data(gauged, direct, tol);
  if (perm) {
    rt.ok = true;
    rt.detail = "gauge(condense(.)) matches the direct double";
  } else {
    rt.ok = false;
    rt.detail = "no modular-data matching permutation found";
  }
  return rt;
}

}  // namespace tubealg

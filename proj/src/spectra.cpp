#include "tubealg/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace tubealg {

namespace {

// Orthonormal basis of the null space of M (columns), via SVD.
MatrixXcd null_space(const MatrixXcd& M, double tol) {
  Eigen::JacobiSVD<MatrixXcd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = sv.size() ? sv[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > std::max(tol, 1e-12 * std::max(1.0, scale))) ++rank;
  return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

// Cluster sorted eigenvalues with a relative gap threshold.
std::vector<std::vector<int>> cluster_eigenvalues(const VectorXd& vals, double rel_gap) {
  std::vector<int> order(vals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
  double scale = 0;
  for (int i = 0; i < vals.size(); ++i) scale = std::max(scale, std::abs(vals[i]));
  scale = std::max(scale, 1e-300);
  std::vector<std::vector<int>> clusters;
  for (int idx : order) {
    if (!clusters.empty() && std::abs(vals[idx] - vals[clusters.back().back()]) < rel_gap * scale)
      clusters.back().push_back(idx);
    else
      clusters.push_back({idx});
  }
  return clusters;
}

}  // namespace

std::vector<VectorXcd> central_idempotents_raw(const StarAlgebra& A, std::uint64_t seed,
                                               double tol) {
  int N = A.dim;
  // Center: x with x e_i = e_i x for all i, i.e. (L_i - R_i) x = 0.
  std::vector<MatrixXcd> right(N, MatrixXcd::Zero(N, N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (const auto& [k, c] : A.mult_table[i * N + j]) right[j](k, i) += c;
  MatrixXcd constraints(static_cast<Eigen::Index>(N) * N, N);
  for (int i = 0; i < N; ++i) constraints.middleRows(static_cast<Eigen::Index>(i) * N, N) = A.left_regular[i] - right[i];
  MatrixXcd center = null_space(constraints, 1e-10);
  int m = static_cast<int>(center.cols());
  if (m == 0) throw Error(ErrorKind::DegenerateSpectrum, "algebra has empty center");

  // Random Hermitian central element.
  Rng rng(seed);
  VectorXcd z = VectorXcd::Zero(N);
  for (int k = 0; k < m; ++k) z += Cplx(rng.gaussian(), rng.gaussian()) * center.col(k);
  z = (z + A.adjoint(z)) / 2.0;

  // The left-regular image of z is self-adjoint for the Tr[x^dag y] metric;
  // orthonormalize with the Gram Cholesky factor and diagonalize.
  MatrixXcd H = (A.gram + A.gram.adjoint()) / 2.0;
  Eigen::LLT<MatrixXcd> llt(H);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorKind::InvalidCategory, "trace form is not positive definite");
  MatrixXcd Lc = llt.matrixL();
  MatrixXcd Lz = A.left_matrix(z);
  MatrixXcd M = Lc.adjoint() * Lz * Lc.adjoint().fullPivLu().inverse();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es((M + M.adjoint()) / 2.0);
  auto clusters = cluster_eigenvalues(es.eigenvalues(), 1e-6);
  if (static_cast<int>(clusters.size()) != m)
    throw Error(ErrorKind::DegenerateSpectrum,
                "eigenvalue clustering of the random central element is ambiguous; retry with a new seed");

  std::vector<VectorXcd> icis;
  for (const auto& cl : clusters) {
    MatrixXcd P = MatrixXcd::Zero(N, N);
    for (int idx : cl) P += es.eigenvectors().col(idx) * es.eigenvectors().col(idx).adjoint();
    // Pull back to the regular representation and apply to the unit: L_x 1 = x.
    MatrixXcd Preg = Lc.adjoint().fullPivLu().solve(P * Lc.adjoint());
    icis.push_back(Preg * A.unit);
  }
  double resid = idempotent_residual(A, icis);
  if (resid > tol)
    throw Error(ErrorKind::DegenerateSpectrum,
                "idempotent axioms failed at residual " + std::to_string(resid) +
                    "; retry with a new seed");
  return icis;
}

double idempotent_residual(const StarAlgebra& A, const std::vector<VectorXcd>& icis) {
  double resid = 0;
  VectorXcd sum = VectorXcd::Zero(A.dim);
  for (size_t a = 0; a < icis.size(); ++a) {
    sum += icis[a];
    resid = std::max(resid, (A.product(icis[a], icis[a]) - icis[a]).norm());
    resid = std::max(resid, (A.adjoint(icis[a]) - icis[a]).norm());
    for (size_t b = a + 1; b < icis.size(); ++b)
      resid = std::max(resid, A.product(icis[a], icis[b]).norm());
  }
  resid = std::max(resid, (sum - A.unit).norm());
  return resid;
}

VectorXcd vacuum_idempotent(const TubeAlgebra& T) {
  VectorXcd v = VectorXcd::Zero(T.size());
  const FusionCategoryData& C = T.cat;
  // The unique tube with p = r = 0 and wrap s has middle label sbar; closing
  // the s-loop around the cylinder carries the conjugate FS phase of s.
  for (int s = 0; s < C.size(); ++s) {
    int k = T.index_of(C.unit, C.dual[s], C.unit, s);
    if (k < 0) continue;
    v[k] = std::conj(C.kappa(s)) * C.qdim[s] / T.alg.norm_sq;
  }
  return v;
}

Cplx t_coefficient(const TubeAlgebra& T, const Block& b, int p, int q, int r, int s) {
  int k = T.index_of(p, q, r, s);
  if (k < 0) return 0;
  return b.ici[k] * T.alg.norm_sq;
}

double block_qdim(const TubeAlgebra& T, const VectorXcd& ici, int block_dim) {
  const FusionCategoryData& C = T.cat;
  Cplx acc = 0;
  for (int p = 0; p < C.size(); ++p) {
    int k = T.index_of(p, p, p, C.unit);
    if (k < 0) continue;
    acc += C.qdim[p] * ici[k] * T.alg.norm_sq;
  }
  return acc.real() / block_dim;
}

Cplx block_theta(const TubeAlgebra& T, const VectorXcd& ici, double tol, bool check_scalar) {
  VectorXcd tw = T.alg.product(T.t_element(), ici);
  Cplx theta = T.alg.trace_pair(ici, tw) / T.alg.trace_pair(ici, ici);
  if (check_scalar) {
    double resid = (tw - theta * ici).norm() / ici.norm();
    if (resid > std::max(tol, 1e-7))
      throw Error(ErrorKind::NonScalarT,
                  "twist does not act as a scalar on a block, residual " + std::to_string(resid));
  }
  return theta;
}

void refine_block(const StarAlgebra& A, Block& b, std::uint64_t seed, double tol) {
  int D = b.dim;
  const VectorXcd& P = b.ici;
  if ((A.product(P, P) - P).norm() > 10 * tol)
    throw Error(ErrorKind::NotIdempotent, "refine_block input fails idempotency");
  b.units.assign(static_cast<size_t>(D) * D, VectorXcd());
  if (D == 1) {
    b.units[0] = P;
    return;
  }
  Rng rng(seed);
  auto rand_in_block = [&] {
    VectorXcd x(A.dim);
    for (int i = 0; i < A.dim; ++i) x[i] = rng.cgaussian();
    return A.product(P, A.product(x, P));
  };

  // Random Hermitian element of the corner P A P: generically D distinct
  // eigenvalues inside the block; Lagrange interpolation in the algebra gives
  // the minimal idempotents.
  std::vector<VectorXcd> diag;
  for (int attempt = 0; attempt < 8; ++attempt) {
    VectorXcd y = rand_in_block();
    y = (y + A.adjoint(y)) / 2.0;
    MatrixXcd Ly = A.left_matrix(y);
    Eigen::ComplexEigenSolver<MatrixXcd> es(Ly);
    std::vector<double> vals;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      double re = es.eigenvalues()[i].real();
      if (std::abs(es.eigenvalues()[i]) < 1e-9) continue;  // other blocks
      bool found = false;
      for (double v : vals)
        if (std::abs(v - re) < 1e-7 * std::max(1.0, std::abs(re))) found = true;
      if (!found) vals.push_back(re);
    }
    if (static_cast<int>(vals.size()) != D) continue;
    diag.clear();
    bool ok = true;
    for (int k = 0; k < D && ok; ++k) {
      // e_k = prod_{j != k} (y - vals_j P) / (vals_k - vals_j)
      VectorXcd e = P;
      for (int j = 0; j < D; ++j) {
        if (j == k) continue;
        e = A.product(e, y - vals[j] * P) / (vals[k] - vals[j]);
      }
      if ((A.product(e, e) - e).norm() > 10 * tol) ok = false;
      diag.push_back(e);
    }
    if (ok && static_cast<int>(diag.size()) == D) break;
    diag.clear();
  }
  if (static_cast<int>(diag.size()) != D)
    throw Error(ErrorKind::DegenerateSpectrum, "failed to split a degenerate block into minimal idempotents");

  // Partial isometries u_{1j} = e_11 x e_jj, normalized; phase fixed by the
  // first-nonzero-coefficient-real-positive rule.
  auto phase_fix = [&](VectorXcd v) {
    for (int i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > 1e-9) {
        v *= std::conj(v[i]) / std::abs(v[i]);
        break;
      }
    return v;
  };
  std::vector<VectorXcd> u1(D);
  u1[0] = diag[0];
  for (int jj = 1; jj < D; ++jj) {
    VectorXcd w;
    for (int attempt = 0; attempt < 8; ++attempt) {
      VectorXcd x(A.dim);
      for (int i = 0; i < A.dim; ++i) x[i] = rng.cgaussian();
      w = A.product(diag[0], A.product(x, diag[jj]));
      Cplx c = A.trace_pair(w, w) / A.trace_pair(diag[jj], diag[jj]);
      if (std::abs(c) > 1e-8) {
        w /= std::sqrt(c.real());
        break;
      }
      w = VectorXcd();
    }
    if (w.size() == 0)
      throw Error(ErrorKind::DegenerateSpectrum, "failed to connect minimal idempotents");
    u1[jj] = phase_fix(w);
  }
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      if (i == 0 && j == 0)
        b.units[0] = diag[0];
      else if (i == 0)
        b.units[j] = u1[j];
      else if (j == 0)
        b.units[i * D] = A.adjoint(u1[i]);
      else
        b.units[i * D + j] = A.product(A.adjoint(u1[i]), u1[j]);
    }
  // Matrix-unit axioms.
  double resid = 0;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      resid = std::max(resid, (A.adjoint(b.unit_at(i, j)) - b.unit_at(j, i)).norm());
      for (int k = 0; k < D; ++k)
        for (int l = 0; l < D; ++l) {
          VectorXcd prod = A.product(b.unit_at(i, j), b.unit_at(k, l));
          VectorXcd expect = (j == k) ? b.unit_at(i, l) : VectorXcd::Zero(A.dim);
          resid = std::max(resid, (prod - expect).norm());
        }
    }
  VectorXcd sum = VectorXcd::Zero(A.dim);
  for (int i = 0; i < D; ++i) sum += b.unit_at(i, i);
  resid = std::max(resid, (sum - P).norm());
  if (resid > std::max(100 * tol, 1e-7))
    throw Error(ErrorKind::DegenerateSpectrum,
                "matrix-unit axioms failed at residual " + std::to_string(resid));
}

BlockDecomposition central_idempotents(const TubeAlgebra& T, std::uint64_t seed, double tol) {
  std::vector<VectorXcd> icis;
  std::uint64_t s = seed;
  for (int attempt = 0;; ++attempt) {
    try {
      icis = central_idempotents_raw(T.alg, s, tol);
      break;
    } catch (const Error& e) {
      if (e.kind != ErrorKind::DegenerateSpectrum || attempt >= 4) throw;
      s = s * 6364136223846793005ull + 1442695040888963407ull;
    }
  }
  BlockDecomposition dec;
  for (auto& v : icis) {
    Block b;
    b.ici = v;
    double tr = T.alg.trace(v).real();
    int dsq = static_cast<int>(std::lround(tr));
    if (std::abs(tr - dsq) > 1e-6 || dsq <= 0)
      throw Error(ErrorKind::DegenerateSpectrum, "block dimension is not a positive integer");
    b.dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dsq))));
    if (b.dim * b.dim != dsq)
      throw Error(ErrorKind::DegenerateSpectrum, "block regular trace is not a perfect square");
    b.qdim = block_qdim(T, v, b.dim);
    b.theta = block_theta(T, v, tol, !T.dube);
    for (int i = 0; i < T.size(); ++i)
      if (std::abs(v[i]) > 1e-8) {
        b.sector = T.sector_p(i);
        break;
      }
    dec.blocks.push_back(std::move(b));
  }

  // Canonical order: vacuum first, then by sector, quantum dimension, snapped
  // spin phase, smallest support tube, and finally the rounded coefficients.
  VectorXcd vac = vacuum_idempotent(T);
  auto snap_arg = [](Cplx z) {
    double a = std::arg(z) / (2 * M_PI);
    return std::lround(a * 48 * 2) / (48.0 * 2);  // denominator <= 48
  };
  auto sort_key = [&](const Block& b) {
    int support = T.size();
    for (int i = 0; i < T.size(); ++i)
      if (std::abs(b.ici[i]) > 1e-8) {
        support = i;
        break;
      }
    std::vector<long> coeffs;
    for (int i = 0; i < T.size(); ++i) {
      coeffs.push_back(std::lround(b.ici[i].real() * 1e6));
      coeffs.push_back(std::lround(b.ici[i].imag() * 1e6));
    }
    return std::tuple(b.sector, std::lround(b.qdim * 1e9), snap_arg(b.theta), support, coeffs);
  };
  std::stable_sort(dec.blocks.begin(), dec.blocks.end(),
                   [&](const Block& a, const Block& b) { return sort_key(a) < sort_key(b); });
  for (int i = 0; i < dec.size(); ++i)
    if ((dec.blocks[i].ici - vac).norm() < 1e-6) dec.vacuum = i;
  if (dec.vacuum < 0)
    throw Error(ErrorKind::VacuumNotFound, "no block matches the closed-form vacuum idempotent");
  if (dec.vacuum != 0) {
    std::rotate(dec.blocks.begin(), dec.blocks.begin() + dec.vacuum,
                dec.blocks.begin() + dec.vacuum + 1);
    dec.vacuum = 0;
  }
  for (int i = 0; i < dec.size(); ++i)
    dec.blocks[i].label = (i == 0) ? "0" : "a" + std::to_string(i);

  int total = 0;
  for (const auto& b : dec.blocks) total += b.dim * b.dim;
  if (total != T.size())
    throw Error(ErrorKind::DegenerateSpectrum, "sum of squared block dimensions mismatches algebra dimension");

  for (auto& b : dec.blocks) refine_block(T.alg, b, seed ^ 0x9E3779B9ull, tol);
  return dec;
}

}  // namespace tubealg

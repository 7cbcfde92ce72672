#ifndef TUBEALG_SPECTRA_HPP
#define TUBEALG_SPECTRA_HPP

#include <string>
#include <vector>

#include "tubealg/tubes.hpp"

namespace tubealg {

struct Block {
  VectorXcd ici;                         // coefficient vector over the algebra basis
  int dim = 1;                           // D_a
  double qdim = 0;                       // d_a (tube algebras)
  Cplx theta = 1;                        // topological spin (tube algebras)
  std::vector<VectorXcd> units;          // matrix units, row-major D x D; empty until refined
  std::string label;
  int sector = 0;                        // sector of the supporting boundary labels (graded)

  const VectorXcd& unit_at(int i, int j) const { return units[i * dim + j]; }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  int vacuum = -1;
  int size() const { return static_cast<int>(blocks.size()); }
};

// Irreducible central idempotents of a finite *-algebra: the center is solved
// exactly as a null space, a seeded random Hermitian central element is
// spectrally decomposed, and eigenprojectors are read back as idempotents.
std::vector<VectorXcd> central_idempotents_raw(const StarAlgebra& A, std::uint64_t seed,
                                               double tol = kDefaultTol);

// Full decomposition of a tube algebra: idempotents, block dimensions, quantum
// dimensions, spins, matrix units for degenerate blocks, canonical ordering.
BlockDecomposition central_idempotents(const TubeAlgebra& T, std::uint64_t seed,
                                       double tol = kDefaultTol);

// Matrix units (I_a)_{ij} inside one block; fills b.units.
void refine_block(const StarAlgebra& A, Block& b, std::uint64_t seed, double tol = kDefaultTol);

// The closed-form vacuum idempotent sum_s d_s / D^2 T_{0s0}^s.
VectorXcd vacuum_idempotent(const TubeAlgebra& T);

// t-coefficient of a block on a tube (the 1/D^2-normalized table entry).
Cplx t_coefficient(const TubeAlgebra& T, const Block& b, int p, int q, int r, int s);

// Quantum dimension d_a = sum_p d_p t_a^{ppp0} / D_a.
double block_qdim(const TubeAlgebra& T, const VectorXcd& ici, int block_dim);

// Topological spin from the twist element (must act as a scalar per block for
// an ungraded algebra).
Cplx block_theta(const TubeAlgebra& T, const VectorXcd& ici, double tol = kDefaultTol,
                 bool check_scalar = true);

// Diagnostics for idempotent systems.
double idempotent_residual(const StarAlgebra& A, const std::vector<VectorXcd>& icis);

}  // namespace tubealg

#endif

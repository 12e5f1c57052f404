#pragma once

#include <cstdint>
#include <vector>

#include "actdim/complex.hpp"
#include "actdim/smith.hpp"

namespace actdim {

using HomologyGroup = AbelianGroup;

/// ∂_k : C_k → C_{k-1} in the bases simplices(k), simplices(k-1), with
/// ∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk]. For k = 0 this is the augmentation
/// row of ones (1 × f_0). Zero-sized when k is out of range.
template <typename Scalar = std::int64_t>
DenseMatrix<Scalar> boundary_matrix(const SimplicialComplex& k, int dim);

/// All ∂_1 .. ∂_d.
std::vector<DenseMatrix<std::int64_t>> boundary_matrices(const SimplicialComplex& k);

/// H_k(K; ℤ) for 0 ≤ k ≤ dim K; reduced in degree 0 when requested.
/// Throws EmptyComplex or DimensionOutOfRange.
HomologyGroup homology(const SimplicialComplex& k, int dim, bool reduced = false);

/// H^k(K; ℤ) computed from the transposed boundary maps.
HomologyGroup cohomology(const SimplicialComplex& k, int dim, bool reduced = false);

/// dim H_k(K; 𝔽_p) (unreduced). Throws NotPrime.
std::size_t homology_mod_p(const SimplicialComplex& k, int dim, int p, bool reduced = false);

/// Rank of H_1(K; ℤ); 0 for complexes of dimension 0.
std::size_t h1_rank(const SimplicialComplex& k);

/// H^d(K; ℤ) = 0 for d = dim K, reduced when d = 0.
bool is_top_cohomology_trivial(const SimplicialComplex& k);

/// Reduced H_k = 0 for every k.
bool is_acyclic(const SimplicialComplex& k);

/// Integral basis of the k-cycles (columns), from the Smith transform of ∂_k.
DenseMatrix<std::int64_t> cycle_basis(const SimplicialComplex& k, int dim);

/// True when the k-chain z lies in the image of ∂_{k+1} over ℤ.
bool is_boundary(const SimplicialComplex& k, int dim, const Eigen::VectorX<std::int64_t>& z);

}  // namespace actdim

#ifndef PQSAP_ALGEBRA_HPP
#define PQSAP_ALGEBRA_HPP

#include <cstdint>
#include <vector>

#include "pqsap/bytes.hpp"
#include "pqsap/params.hpp"
#include "pqsap/poly.hpp"

namespace pqsap {

/**
 * Public matrix A expanded from a 32-byte seed.
 * Ring variants: k x k ring elements, row-major. Unstructured variant: n x n
 * scalars, row-major.
 */
struct PublicMatrix {
  const ParamSet* params = nullptr;
  std::vector<Poly> ring;        // k*k entries (MLWE/RLWE)
  std::vector<uint16_t> scalar;  // n*n entries (LWE)
};

/**
 * Deterministic expansion of A from rho. Ring entries come from per-(row, col)
 * domain-separated streams; the unstructured matrix from per-row streams.
 */
[[nodiscard]] PublicMatrix expand_public_matrix(ByteView rho, const ParamSet& p);

/** y := A * x (transpose = false) or A^T * x (transpose = true). */
[[nodiscard]] PolyVec mat_mul(const PublicMatrix& A, const PolyVec& x, bool transpose);

/**
 * Bilinear pairing of two vectors: ring variants give sum_i a_i * b_i (one ring
 * element); the unstructured variant gives the k x k block of column inner
 * products, entry (i, j) = <a_i, b_j>, flattened row-major.
 */
[[nodiscard]] Poly inner_pairs(const PolyVec& a, const PolyVec& b, const ParamSet& p);

/** Per-coefficient compress/decompress; identity when d equals the full width. */
[[nodiscard]] Poly compress_poly(const Poly& a, uint32_t d, const ParamSet& p);
[[nodiscard]] Poly decompress_poly(const Poly& a, uint32_t d, const ParamSet& p);
[[nodiscard]] PolyVec compress_vec(const PolyVec& a, uint32_t d, const ParamSet& p);
[[nodiscard]] PolyVec decompress_vec(const PolyVec& a, uint32_t d, const ParamSet& p);

}  // namespace pqsap

#endif

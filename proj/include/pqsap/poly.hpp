#ifndef PQSAP_POLY_HPP
#define PQSAP_POLY_HPP

#include <cstdint>
#include <vector>

#include "pqsap/params.hpp"

namespace pqsap {

/**
 * Element of Z_q[x]/(x^n + 1) with coefficients stored in [0, q), index == degree.
 * For the unstructured variant the same container holds a length-n column of Z_q.
 */
struct Poly {
  std::vector<uint16_t> c;

  Poly() = default;
  explicit Poly(size_t n) : c(n) {}
  [[nodiscard]] size_t size() const { return c.size(); }
  friend bool operator==(const Poly&, const Poly&) = default;
};

/** k ring elements (module vector) or k columns (unstructured variant). */
using PolyVec = std::vector<Poly>;

[[nodiscard]] Poly poly_add(const Poly& a, const Poly& b, uint32_t q);
[[nodiscard]] Poly poly_sub(const Poly& a, const Poly& b, uint32_t q);

/** Negacyclic product in Z_q[x]/(x^n + 1). Schoolbook reference path. */
[[nodiscard]] Poly poly_mul_schoolbook(const Poly& a, const Poly& b, uint32_t q);

/** Negacyclic product; uses the NTT fast path when available, bit-identical to schoolbook. */
[[nodiscard]] Poly poly_mul(const Poly& a, const Poly& b, uint32_t q);

[[nodiscard]] PolyVec vec_add(const PolyVec& a, const PolyVec& b, uint32_t q);
[[nodiscard]] PolyVec vec_sub(const PolyVec& a, const PolyVec& b, uint32_t q);

/** max |symmetric_mod(coefficient)| over the element. */
[[nodiscard]] uint32_t inf_norm(const Poly& a, uint32_t q);
[[nodiscard]] uint32_t inf_norm(const PolyVec& a, uint32_t q);

namespace detail {

/** The fast path handles the 7-layer negacyclic transform for q = 3329, n = 256. */
[[nodiscard]] bool ntt_eligible(size_t n, uint32_t q);

using NttPoly = std::vector<uint16_t>;  // coefficients of 128 degree-2 residues

[[nodiscard]] NttPoly ntt(const Poly& a);
[[nodiscard]] Poly intt(const NttPoly& a);
/** acc += a * b in the transform domain. */
void basemul_acc(NttPoly& acc, const NttPoly& a, const NttPoly& b);

}  // namespace detail

}  // namespace pqsap

#endif

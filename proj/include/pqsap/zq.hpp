#ifndef PQSAP_ZQ_HPP
#define PQSAP_ZQ_HPP

#include <cstdint>
#include <stdexcept>

namespace pqsap {

/** Euclidean remainder: result in [0, q) for any r. Throws std::domain_error if q == 0. */
[[nodiscard]] constexpr uint32_t mod_reduce(int64_t r, uint32_t q) {
  if (q == 0) throw std::domain_error("mod_reduce: q must be positive");
  int64_t m = r % static_cast<int64_t>(q);
  if (m < 0) m += q;
  return static_cast<uint32_t>(m);
}

/**
 * Centered representative. Even q: range (-q/2, q/2], q/2 maps to itself.
 * Odd q: range [-(q-1)/2, (q-1)/2].
 */
[[nodiscard]] constexpr int32_t symmetric_mod(int64_t r, uint32_t q) {
  uint32_t m = mod_reduce(r, q);
  if (m <= q / 2) return static_cast<int32_t>(m);
  return static_cast<int32_t>(static_cast<int64_t>(m) - q);
}

/**
 * Nearest integer to a/b with ties rounding up (toward +inf), b > 0, a >= 0.
 * Exact integer arithmetic: floor((2a + b) / (2b)).
 */
[[nodiscard]] constexpr uint64_t round_half_up(uint64_t a, uint64_t b) {
  if (b == 0) throw std::domain_error("round_half_up: divisor must be positive");
  return (2 * a + b) / (2 * b);
}

/** Valid compression width: 1 <= d < ceil(log2 q). Throws std::domain_error otherwise. */
constexpr void check_compress_width(uint32_t d, uint32_t q) {
  if (q < 2) throw std::domain_error("compress: q must be at least 2");
  uint32_t bits = 0;
  for (uint32_t pow = 1; pow < q && bits <= 31; pow *= 2) ++bits;
  if (d < 1 || d >= bits) throw std::domain_error("compress: width out of range");
}

/** Maps x in [0, q) to [0, 2^d): round(2^d * x / q) mod 2^d, ties up. */
[[nodiscard]] constexpr uint32_t compress(uint32_t x, uint32_t d, uint32_t q) {
  check_compress_width(d, q);
  if (x >= q) throw std::domain_error("compress: x out of range");
  uint64_t r = round_half_up(static_cast<uint64_t>(x) << d, q);
  return static_cast<uint32_t>(r & ((uint64_t{1} << d) - 1));
}

/** Maps y in [0, 2^d) back to [0, q): round(q * y / 2^d) mod q, ties up. */
[[nodiscard]] constexpr uint32_t decompress(uint32_t y, uint32_t d, uint32_t q) {
  check_compress_width(d, q);
  if (y >= (uint32_t{1} << d)) throw std::domain_error("decompress: y out of range");
  uint64_t r = round_half_up(static_cast<uint64_t>(q) * y, uint64_t{1} << d);
  return static_cast<uint32_t>(r % q);
}

/** Worst-case centered error of decompress(compress(x, d), d): round(q / 2^(d+1)), ties up. */
[[nodiscard]] constexpr uint32_t max_roundtrip_error(uint32_t d, uint32_t q) {
  return static_cast<uint32_t>(round_half_up(q, uint64_t{1} << (d + 1)));
}

}  // namespace pqsap

#endif

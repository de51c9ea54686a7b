#ifndef PQSAP_SAMPLING_HPP
#define PQSAP_SAMPLING_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pqsap/params.hpp"
#include "pqsap/poly.hpp"
#include "pqsap/xof.hpp"

namespace pqsap {

/**
 * Little-endian bit cursor over an XOF stream. Pulls the stream in fixed-size
 * blocks, so it owns the stream from construction on: bytes buffered but not
 * consumed through read_bits are discarded with the reader.
 */
class BitReader {
 public:
  explicit BitReader(ByteSource& stream) : stream_(stream) {}

  /** Next `nbits` bits (1..32) as an integer, bit 0 taken first. */
  [[nodiscard]] uint32_t read_bits(uint32_t nbits);

 private:
  static constexpr size_t kBlockBytes = 512;

  ByteSource& stream_;
  std::array<uint8_t, kBlockBytes> block_{};
  size_t pos_ = kBlockBytes;
  uint64_t buf_ = 0;
  uint32_t have_ = 0;
};

/**
 * Centered binomial samples: sum(a_i) - sum(b_i) over 2*eta consecutive stream
 * bits per sample. Values lie in [-eta, eta]; an all-zero stream yields zeros.
 */
[[nodiscard]] std::vector<int32_t> cbd_samples(ByteSource& stream, uint32_t eta, size_t count);

/** CBD polynomial with coefficients reduced to [0, q). */
[[nodiscard]] Poly cbd_poly(ByteSource& stream, uint32_t eta, size_t len, uint32_t q);

/** k CBD polynomials drawn sequentially from one stream. */
[[nodiscard]] PolyVec cbd_vec(ByteSource& stream, uint32_t eta, size_t k, size_t len, uint32_t q);

/**
 * Uniform coefficients in [0, q) by rejection: ceil(log2 q)-bit little-endian
 * candidates, discarding those >= q. Throws std::runtime_error if the attempt
 * cap (2^16 per coefficient on average) is exhausted.
 */
[[nodiscard]] Poly uniform_poly(ByteSource& stream, size_t len, uint32_t q);

}  // namespace pqsap

#endif

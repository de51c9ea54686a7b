#ifndef PQSAP_SERIALIZE_HPP
#define PQSAP_SERIALIZE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pqsap/bytes.hpp"

namespace pqsap {

/**
 * Little-endian bit packing: coefficient 0 occupies the lowest bits of byte 0,
 * subsequent coefficients follow without gaps; the final partial byte (if any)
 * is zero-padded. bits must be in [1, 16]; every value must fit in `bits` bits
 * (std::invalid_argument otherwise).
 */
[[nodiscard]] Bytes pack_bits(std::span<const uint16_t> values, uint32_t bits);

/**
 * Inverse of pack_bits. Rejects inputs whose length differs from the packed
 * size of `count` values or whose padding bits are nonzero.
 */
[[nodiscard]] std::vector<uint16_t> unpack_bits(ByteView data, size_t count, uint32_t bits);

}  // namespace pqsap

#endif

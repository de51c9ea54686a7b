#include "pqsap/serialize.hpp"

#include <stdexcept>

namespace pqsap {

Bytes pack_bits(std::span<const uint16_t> values, uint32_t bits) {
  if (bits < 1 || bits > 16) throw std::invalid_argument("pack_bits: width out of range");
  const uint32_t limit_mask = bits == 16 ? 0xffffu : (1u << bits) - 1;
  Bytes out((values.size() * bits + 7) / 8);
  uint32_t acc = 0;
  uint32_t acc_bits = 0;
  size_t pos = 0;
  for (uint16_t v : values) {
    if ((v & ~limit_mask) != 0) throw std::invalid_argument("pack_bits: value exceeds width");
    acc |= static_cast<uint32_t>(v) << acc_bits;
    acc_bits += bits;
    while (acc_bits >= 8) {
      out[pos++] = static_cast<uint8_t>(acc & 0xff);
      acc >>= 8;
      acc_bits -= 8;
    }
  }
  if (acc_bits > 0) out[pos++] = static_cast<uint8_t>(acc & 0xff);
  return out;
}

std::vector<uint16_t> unpack_bits(ByteView data, size_t count, uint32_t bits) {
  if (bits < 1 || bits > 16) throw std::invalid_argument("unpack_bits: width out of range");
  if (data.size() != (count * bits + 7) / 8) {
    throw std::invalid_argument("unpack_bits: length mismatch");
  }
  const uint32_t mask = bits == 16 ? 0xffffu : (1u << bits) - 1;
  std::vector<uint16_t> out(count);
  uint32_t acc = 0;
  uint32_t acc_bits = 0;
  size_t pos = 0;
  for (size_t i = 0; i < count; ++i) {
    while (acc_bits < bits) {
      acc |= static_cast<uint32_t>(data[pos++]) << acc_bits;
      acc_bits += 8;
    }
    out[i] = static_cast<uint16_t>(acc & mask);
    acc >>= bits;
    acc_bits -= bits;
  }
  if (acc != 0) throw std::invalid_argument("unpack_bits: nonzero padding");
  return out;
}

}  // namespace pqsap

#include "pqsap/sampling.hpp"

#include <bit>
#include <stdexcept>

#include "pqsap/zq.hpp"

namespace pqsap {

uint32_t BitReader::read_bits(uint32_t nbits) {
  if (nbits == 0 || nbits > 32) throw std::invalid_argument("read_bits: width out of range");
  while (have_ < nbits) {
    if (pos_ == kBlockBytes) {
      stream_.read(std::span<uint8_t>(block_));
      pos_ = 0;
    }
    buf_ |= static_cast<uint64_t>(block_[pos_++]) << have_;
    have_ += 8;
  }
  uint32_t v = static_cast<uint32_t>(buf_ & ((uint64_t{1} << nbits) - 1));
  buf_ >>= nbits;
  have_ -= nbits;
  return v;
}

namespace {

std::vector<int32_t> cbd_from_reader(BitReader& bits, uint32_t eta, size_t count) {
  std::vector<int32_t> out(count);
  for (size_t i = 0; i < count; ++i) {
    int32_t a = std::popcount(bits.read_bits(eta));
    int32_t b = std::popcount(bits.read_bits(eta));
    out[i] = a - b;
  }
  return out;
}

Poly cbd_poly_from_reader(BitReader& bits, uint32_t eta, size_t len, uint32_t q) {
  std::vector<int32_t> samples = cbd_from_reader(bits, eta, len);
  Poly r(len);
  for (size_t i = 0; i < len; ++i) {
    r.c[i] = static_cast<uint16_t>(mod_reduce(samples[i], q));
  }
  return r;
}

}  // namespace

std::vector<int32_t> cbd_samples(ByteSource& stream, uint32_t eta, size_t count) {
  if (eta == 0 || eta > 16) throw std::invalid_argument("cbd_samples: eta out of range");
  BitReader bits(stream);
  return cbd_from_reader(bits, eta, count);
}

Poly cbd_poly(ByteSource& stream, uint32_t eta, size_t len, uint32_t q) {
  if (eta == 0 || eta > 16) throw std::invalid_argument("cbd_poly: eta out of range");
  BitReader bits(stream);
  return cbd_poly_from_reader(bits, eta, len, q);
}

PolyVec cbd_vec(ByteSource& stream, uint32_t eta, size_t k, size_t len, uint32_t q) {
  if (eta == 0 || eta > 16) throw std::invalid_argument("cbd_vec: eta out of range");
  BitReader bits(stream);
  PolyVec r(k);
  for (size_t i = 0; i < k; ++i) r[i] = cbd_poly_from_reader(bits, eta, len, q);
  return r;
}

Poly uniform_poly(ByteSource& stream, size_t len, uint32_t q) {
  const uint32_t bits = ceil_log2(q);
  Poly r(len);
  if (std::has_single_bit(q)) {
    // Every fixed-width candidate is < q, so no draw can be rejected and the
    // values can be extracted in one pass over the raw stream bytes.
    const uint32_t mask = (uint32_t{1} << bits) - 1;
    const size_t nbytes = (len * bits + 7) / 8;
    Bytes raw(nbytes + 3);
    stream.read(std::span<uint8_t>(raw.data(), nbytes));
    size_t bitpos = 0;
    for (size_t i = 0; i < len; ++i, bitpos += bits) {
      const size_t byte = bitpos >> 3;
      const uint32_t window = static_cast<uint32_t>(raw[byte]) |
                              (static_cast<uint32_t>(raw[byte + 1]) << 8) |
                              (static_cast<uint32_t>(raw[byte + 2]) << 16);
      r.c[i] = static_cast<uint16_t>((window >> (bitpos & 7)) & mask);
    }
    return r;
  }
  BitReader reader(stream);
  uint64_t attempts = 0;
  const uint64_t cap = (uint64_t{1} << 16) * len + (uint64_t{1} << 16);
  for (size_t i = 0; i < len; ++i) {
    for (;;) {
      if (++attempts > cap) throw std::runtime_error("uniform_poly: rejection cap exhausted");
      uint32_t candidate = reader.read_bits(bits);
      if (candidate < q) {
        r.c[i] = static_cast<uint16_t>(candidate);
        break;
      }
    }
  }
  return r;
}

}  // namespace pqsap

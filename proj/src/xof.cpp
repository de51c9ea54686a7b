#include "pqsap/xof.hpp"

#include <bit>
#include <cstring>

namespace pqsap {

namespace detail {

namespace {

constexpr std::array<uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

constexpr std::array<int, 24> kRotations = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                            27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};

constexpr std::array<int, 24> kPiLane = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                         15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

void keccak_f1600(std::array<uint64_t, 25>& s) {
  for (int round = 0; round < 24; ++round) {
    uint64_t bc[5];
    for (int x = 0; x < 5; ++x) {
      bc[x] = s[x] ^ s[x + 5] ^ s[x + 10] ^ s[x + 15] ^ s[x + 20];
    }
    for (int x = 0; x < 5; ++x) {
      uint64_t t = bc[(x + 4) % 5] ^ std::rotl(bc[(x + 1) % 5], 1);
      for (int y = 0; y < 25; y += 5) s[x + y] ^= t;
    }
    uint64_t t = s[1];
    for (int i = 0; i < 24; ++i) {
      int j = kPiLane[i];
      uint64_t tmp = s[j];
      s[j] = std::rotl(t, kRotations[i]);
      t = tmp;
    }
    for (int y = 0; y < 25; y += 5) {
      for (int x = 0; x < 5; ++x) bc[x] = s[y + x];
      for (int x = 0; x < 5; ++x) s[y + x] = bc[x] ^ (~bc[(x + 1) % 5] & bc[(x + 2) % 5]);
    }
    s[0] ^= kRoundConstants[round];
  }
}

}  // namespace

KeccakSponge::KeccakSponge(size_t rate_bytes, uint8_t pad_byte) : rate_(rate_bytes), pad_(pad_byte) {}

void KeccakSponge::absorb(ByteView data) {
  for (uint8_t b : data) {
    state_[offset_ / 8] ^= static_cast<uint64_t>(b) << (8 * (offset_ % 8));
    if (++offset_ == rate_) {
      keccak_f1600(state_);
      offset_ = 0;
    }
  }
}

void KeccakSponge::finish() {
  state_[offset_ / 8] ^= static_cast<uint64_t>(pad_) << (8 * (offset_ % 8));
  state_[(rate_ - 1) / 8] ^= 0x8000000000000000ULL >> (8 * (7 - (rate_ - 1) % 8));
  keccak_f1600(state_);
  offset_ = 0;
  squeezing_ = true;
}

void KeccakSponge::squeeze(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    if (offset_ == rate_) {
      keccak_f1600(state_);
      offset_ = 0;
    }
    const size_t take = std::min(out.size() - done, rate_ - offset_);
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(out.data() + done, reinterpret_cast<const uint8_t*>(state_.data()) + offset_,
                  take);
    } else {
      for (size_t i = 0; i < take; ++i) {
        const size_t pos = offset_ + i;
        out[done + i] = static_cast<uint8_t>(state_[pos / 8] >> (8 * (pos % 8)));
      }
    }
    done += take;
    offset_ += take;
  }
}

}  // namespace detail

namespace {

constexpr size_t kShake128Rate = 168;
constexpr size_t kSha3_256Rate = 136;
constexpr size_t kSha3_512Rate = 72;
constexpr uint8_t kShakePad = 0x1f;
constexpr uint8_t kSha3Pad = 0x06;

Bytes sponge_digest(size_t rate, ByteView a, ByteView b, size_t out_len) {
  detail::KeccakSponge sponge(rate, kSha3Pad);
  sponge.absorb(a);
  sponge.absorb(b);
  sponge.finish();
  Bytes out(out_len);
  sponge.squeeze(out);
  return out;
}

}  // namespace

XofStream::XofStream(ByteView seed, std::initializer_list<uint8_t> tags)
    : sponge_(kShake128Rate, kShakePad) {
  sponge_.absorb(seed);
  sponge_.absorb(ByteView(tags.begin(), tags.size()));
  sponge_.finish();
}

XofStream::XofStream(ByteView seed, Domain tag)
    : XofStream(seed, {static_cast<uint8_t>(tag)}) {}

XofStream::XofStream(ByteView seed, Domain tag, uint16_t index)
    : XofStream(seed, {static_cast<uint8_t>(tag), static_cast<uint8_t>(index & 0xff),
                       static_cast<uint8_t>(index >> 8)}) {}

void XofStream::read(std::span<uint8_t> out) { sponge_.squeeze(out); }

Bytes shake128(ByteView data, size_t out_len) {
  detail::KeccakSponge sponge(kShake128Rate, kShakePad);
  sponge.absorb(data);
  sponge.finish();
  Bytes out(out_len);
  sponge.squeeze(out);
  return out;
}

Bytes sha3_256(ByteView data) { return sponge_digest(kSha3_256Rate, data, {}, 32); }
Bytes sha3_256(ByteView a, ByteView b) { return sponge_digest(kSha3_256Rate, a, b, 32); }
Bytes sha3_512(ByteView data) { return sponge_digest(kSha3_512Rate, data, {}, 64); }
Bytes sha3_512(ByteView a, ByteView b) { return sponge_digest(kSha3_512Rate, a, b, 64); }

namespace {

constexpr std::array<uint32_t, 64> kSha256K = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
    0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
    0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
    0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
    0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

void sha256_block(std::array<uint32_t, 8>& h, const uint8_t* p) {
  uint32_t w[64];
  for (int i = 0; i < 16; ++i) {
    w[i] = static_cast<uint32_t>(p[4 * i]) << 24 | static_cast<uint32_t>(p[4 * i + 1]) << 16 |
           static_cast<uint32_t>(p[4 * i + 2]) << 8 | static_cast<uint32_t>(p[4 * i + 3]);
  }
  for (int i = 16; i < 64; ++i) {
    uint32_t s0 = std::rotr(w[i - 15], 7) ^ std::rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
    uint32_t s1 = std::rotr(w[i - 2], 17) ^ std::rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
    w[i] = w[i - 16] + s0 + w[i - 7] + s1;
  }
  uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
  for (int i = 0; i < 64; ++i) {
    uint32_t s1 = std::rotr(e, 6) ^ std::rotr(e, 11) ^ std::rotr(e, 25);
    uint32_t ch = (e & f) ^ (~e & g);
    uint32_t t1 = hh + s1 + ch + kSha256K[i] + w[i];
    uint32_t s0 = std::rotr(a, 2) ^ std::rotr(a, 13) ^ std::rotr(a, 22);
    uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
    uint32_t t2 = s0 + maj;
    hh = g;
    g = f;
    f = e;
    e = d + t1;
    d = c;
    c = b;
    b = a;
    a = t1 + t2;
  }
  h[0] += a;
  h[1] += b;
  h[2] += c;
  h[3] += d;
  h[4] += e;
  h[5] += f;
  h[6] += g;
  h[7] += hh;
}

}  // namespace

Bytes sha256(ByteView data) {
  std::array<uint32_t, 8> h = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                               0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
  size_t i = 0;
  for (; i + 64 <= data.size(); i += 64) sha256_block(h, data.data() + i);

  uint8_t tail[128] = {};
  size_t rem = data.size() - i;
  std::memcpy(tail, data.data() + i, rem);
  tail[rem] = 0x80;
  size_t tail_len = rem + 9 <= 64 ? 64 : 128;
  uint64_t bit_len = static_cast<uint64_t>(data.size()) * 8;
  for (int j = 0; j < 8; ++j) {
    tail[tail_len - 1 - j] = static_cast<uint8_t>(bit_len >> (8 * j));
  }
  sha256_block(h, tail);
  if (tail_len == 128) sha256_block(h, tail + 64);

  Bytes out(32);
  for (int j = 0; j < 8; ++j) {
    out[4 * j] = static_cast<uint8_t>(h[j] >> 24);
    out[4 * j + 1] = static_cast<uint8_t>(h[j] >> 16);
    out[4 * j + 2] = static_cast<uint8_t>(h[j] >> 8);
    out[4 * j + 3] = static_cast<uint8_t>(h[j]);
  }
  return out;
}

}  // namespace pqsap

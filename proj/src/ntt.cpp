#include <array>
#include <cstdint>
#include <stdexcept>

#include "pqsap/poly.hpp"

namespace pqsap::detail {

namespace {

constexpr uint32_t kQ = 3329;
constexpr size_t kN = 256;
constexpr uint32_t kZeta = 17;        // primitive 256th root of unity mod q
constexpr uint32_t kNInv = 3303;      // 128^-1 mod q

constexpr uint32_t mul_q(uint32_t a, uint32_t b) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % kQ);
}

constexpr uint32_t bitrev7(uint32_t v) {
  uint32_t r = 0;
  for (int i = 0; i < 7; ++i) {
    r = (r << 1) | ((v >> i) & 1);
  }
  return r;
}

constexpr uint32_t pow_q(uint32_t base, uint32_t exp) {
  uint32_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) r = mul_q(r, base);
  return r;
}

/** zetas[i] = zeta^bitrev7(i); butterfly twiddles in transform order. */
constexpr std::array<uint16_t, 128> make_zetas() {
  std::array<uint16_t, 128> z{};
  for (uint32_t i = 0; i < 128; ++i) {
    z[i] = static_cast<uint16_t>(pow_q(kZeta, bitrev7(i)));
  }
  return z;
}

/** gammas[i] = zeta^(2*bitrev7(i)+1); the degree-2 residue moduli x^2 - gamma_i. */
constexpr std::array<uint16_t, 128> make_gammas() {
  std::array<uint16_t, 128> g{};
  for (uint32_t i = 0; i < 128; ++i) {
    g[i] = static_cast<uint16_t>(pow_q(kZeta, 2 * bitrev7(i) + 1));
  }
  return g;
}

constexpr auto kZetas = make_zetas();
constexpr auto kGammas = make_gammas();

}  // namespace

bool ntt_eligible(size_t n, uint32_t q) { return n == kN && q == kQ; }

NttPoly ntt(const Poly& a) {
  if (a.size() != kN) throw std::invalid_argument("ntt: wrong degree");
  NttPoly f(a.c.begin(), a.c.end());
  size_t zi = 1;
  for (size_t len = 128; len >= 2; len >>= 1) {
    for (size_t start = 0; start < kN; start += 2 * len) {
      const uint32_t zeta = kZetas[zi++];
      for (size_t j = start; j < start + len; ++j) {
        uint32_t t = mul_q(zeta, f[j + len]);
        uint32_t u = f[j];
        f[j + len] = static_cast<uint16_t>((u + kQ - t) % kQ);
        f[j] = static_cast<uint16_t>((u + t) % kQ);
      }
    }
  }
  return f;
}

Poly intt(const NttPoly& a) {
  if (a.size() != kN) throw std::invalid_argument("intt: wrong degree");
  NttPoly f = a;
  size_t zi = 127;
  for (size_t len = 2; len <= 128; len <<= 1) {
    for (size_t start = 0; start < kN; start += 2 * len) {
      const uint32_t zeta = kZetas[zi--];
      for (size_t j = start; j < start + len; ++j) {
        uint32_t t = f[j];
        f[j] = static_cast<uint16_t>((t + f[j + len]) % kQ);
        f[j + len] = static_cast<uint16_t>(mul_q(zeta, f[j + len] + kQ - t));
      }
    }
  }
  Poly r(kN);
  for (size_t i = 0; i < kN; ++i) {
    r.c[i] = static_cast<uint16_t>(mul_q(f[i], kNInv));
  }
  return r;
}

void basemul_acc(NttPoly& acc, const NttPoly& a, const NttPoly& b) {
  if (acc.size() != kN || a.size() != kN || b.size() != kN) {
    throw std::invalid_argument("basemul_acc: wrong degree");
  }
  for (size_t i = 0; i < 128; ++i) {
    const uint32_t a0 = a[2 * i], a1 = a[2 * i + 1];
    const uint32_t b0 = b[2 * i], b1 = b[2 * i + 1];
    uint64_t c0 = static_cast<uint64_t>(a0) * b0 +
                  static_cast<uint64_t>(mul_q(a1, b1)) * kGammas[i] + acc[2 * i];
    uint64_t c1 = static_cast<uint64_t>(a0) * b1 + static_cast<uint64_t>(a1) * b0 + acc[2 * i + 1];
    acc[2 * i] = static_cast<uint16_t>(c0 % kQ);
    acc[2 * i + 1] = static_cast<uint16_t>(c1 % kQ);
  }
}

}  // namespace pqsap::detail

#ifndef PQSAP_PARAMS_HPP
#define PQSAP_PARAMS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace pqsap {

/**
 * Lattice instantiation families.
 *
 * MLWE: module of rank k over Z_q[x]/(x^n + 1), n = 256.
 * RLWE: rank-1 ring instances, n in {512, 1024}.
 * LWE:  unstructured matrices over Z_q; "vectors" are n x k column bundles
 *       (k = 8 secret/error columns) and the public matrix is n x n.
 */
enum class Variant : uint8_t { MLWE, RLWE, LWE };

[[nodiscard]] constexpr uint32_t ceil_log2(uint32_t v) {
  uint32_t bits = 0;
  uint32_t pow = 1;
  while (pow < v) {
    pow *= 2;
    ++bits;
    if (bits > 31) break;
  }
  return bits;
}

struct ParamSet {
  std::string_view name;
  Variant variant;
  uint32_t n;     // ring degree (MLWE/RLWE) or matrix dimension (LWE)
  uint32_t k;     // module rank; 1 for RLWE; secret column count for LWE
  uint32_t q;     // coefficient modulus
  uint32_t eta1;  // CBD width for keygen secrets/errors and encryption secret
  uint32_t eta2;  // CBD width for encryption errors e1, e2
  uint32_t d_t;   // public key compression width (== full_bits: uncompressed)
  uint32_t d_u;   // ciphertext u compression width
  uint32_t d_v;   // ciphertext v compression width

  [[nodiscard]] constexpr uint32_t full_bits() const { return ceil_log2(q); }
  [[nodiscard]] constexpr bool compresses_t() const { return d_t < full_bits(); }
  [[nodiscard]] constexpr bool compresses_u() const { return d_u < full_bits(); }
  [[nodiscard]] constexpr bool compresses_v() const { return d_v < full_bits(); }

  /** Coefficients in the v/message component: ring degree, or the k x k block for LWE. */
  [[nodiscard]] constexpr uint32_t v_len() const {
    return variant == Variant::LWE ? k * k : n;
  }
  /** Message bits carried per v coefficient (1 with repetition for rings, 4 for LWE). */
  [[nodiscard]] constexpr uint32_t msg_bits_per_coeff() const {
    return variant == Variant::LWE ? 4 : 1;
  }
  /** Ring variants repeat each message bit n/256 times; LWE packs nibbles directly. */
  [[nodiscard]] constexpr uint32_t msg_repeat() const {
    return variant == Variant::LWE ? 1 : n / 256;
  }

  [[nodiscard]] constexpr size_t vec_coeffs() const { return size_t{k} * n; }
  [[nodiscard]] constexpr size_t packed_vec_bytes(uint32_t bits) const {
    return vec_coeffs() * bits / 8;
  }
  [[nodiscard]] constexpr size_t pk_bytes() const { return packed_vec_bytes(d_t) + 32; }
  [[nodiscard]] constexpr size_t ct_bytes() const {
    return packed_vec_bytes(d_u) + size_t{v_len()} * d_v / 8;
  }
  [[nodiscard]] constexpr size_t pke_sk_bytes() const { return packed_vec_bytes(full_bits()); }
};

// clang-format off
inline constexpr ParamSet KYBER512  {"kyber512",  Variant::MLWE,  256, 2,  3329, 3, 2, 10, 10,  4};
inline constexpr ParamSet KYBER768  {"kyber768",  Variant::MLWE,  256, 3,  3329, 2, 2, 10, 10,  4};
inline constexpr ParamSet KYBER1024 {"kyber1024", Variant::MLWE,  256, 4,  3329, 2, 2, 11, 11,  5};
inline constexpr ParamSet RLWE512   {"rlwe512",   Variant::RLWE,  512, 1, 12289, 8, 8, 14, 14,  4};
inline constexpr ParamSet RLWE1024  {"rlwe1024",  Variant::RLWE, 1024, 1, 12289, 8, 8, 14, 14,  4};
inline constexpr ParamSet LWE640    {"lwe640",    Variant::LWE,   640, 8, 32768, 2, 2, 15, 15, 15};
inline constexpr ParamSet LWE976    {"lwe976",    Variant::LWE,   976, 8, 65536, 2, 2, 16, 16, 16};
inline constexpr ParamSet LWE1344   {"lwe1344",   Variant::LWE,  1344, 8, 65536, 2, 2, 16, 16, 16};
// clang-format on

inline constexpr std::array<ParamSet, 8> kParamSets = {
    KYBER512, KYBER768, KYBER1024, RLWE512, RLWE1024, LWE640, LWE976, LWE1344};

/** Lookup by name; returns nullptr if unknown. */
[[nodiscard]] const ParamSet* find_params(std::string_view name);

/** Throws std::invalid_argument if the set violates a structural constraint. */
void validate(const ParamSet& p);

inline constexpr size_t kSeedBytes = 32;
inline constexpr size_t kCpaSeedBytes = 64;   // rho || sigma
inline constexpr size_t kKemSeedBytes = 96;   // rho || sigma || z
inline constexpr size_t kSharedSecretBytes = 32;
inline constexpr size_t kAddressBytes = 20;

}  // namespace pqsap

#endif

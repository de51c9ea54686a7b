#ifndef PQSAP_KEM_HPP
#define PQSAP_KEM_HPP

#include <cstdint>
#include <utility>

#include "pqsap/bytes.hpp"
#include "pqsap/params.hpp"
#include "pqsap/poly.hpp"

namespace pqsap {

/** t = compress(A*s + e, d_t) held in the compressed domain, plus the matrix seed. */
struct PkePublicKey {
  PolyVec t;  // coefficients in [0, 2^d_t), or [0, q) when uncompressed
  Bytes rho;  // 32-byte public matrix seed

  [[nodiscard]] Bytes serialize(const ParamSet& p) const;
  [[nodiscard]] static PkePublicKey deserialize(ByteView data, const ParamSet& p);
  friend bool operator==(const PkePublicKey&, const PkePublicKey&) = default;
};

struct PkeSecretKey {
  PolyVec s;  // coefficients in [0, q)

  [[nodiscard]] Bytes serialize(const ParamSet& p) const;
  [[nodiscard]] static PkeSecretKey deserialize(ByteView data, const ParamSet& p);
};

struct KemCiphertext {
  PolyVec u;  // compressed domain, [0, 2^d_u)
  Poly v;     // compressed domain, [0, 2^d_v)

  [[nodiscard]] Bytes serialize(const ParamSet& p) const;
  [[nodiscard]] static KemCiphertext deserialize(ByteView data, const ParamSet& p);
  friend bool operator==(const KemCiphertext&, const KemCiphertext&) = default;
};

/** Decryption key plus the implicit-rejection secret and a public key copy. */
struct KemSecretKey {
  PkeSecretKey sk;
  Bytes z;  // 32-byte rejection secret
  PkePublicKey pk;
  Bytes pk_hash;  // cached H(serialize(pk))
};

struct KemKeyPair {
  PkePublicKey pk;
  KemSecretKey sk;
};

struct EncapsResult {
  KemCiphertext ct;
  Bytes shared_secret;  // 32 bytes
};

struct DecapsResult {
  Bytes shared_secret;  // 32 bytes; implicit-rejection output on failure
  bool accepted;        // re-encryption matched
};

/** Deterministic keypair from seed = rho || sigma (64 bytes). */
[[nodiscard]] std::pair<PkePublicKey, PkeSecretKey> cpa_keygen(ByteView seed, const ParamSet& p);

/** Encrypts a 32-byte message under coin l (32 bytes); fully deterministic. */
[[nodiscard]] KemCiphertext cpa_encrypt(const PkePublicKey& pk, ByteView msg, ByteView coin,
                                        const ParamSet& p);

/** Recovers the 32-byte message (exact for honestly generated ciphertexts). */
[[nodiscard]] Bytes cpa_decrypt(const PkeSecretKey& sk, const KemCiphertext& ct,
                                const ParamSet& p);

/** Deterministic KEM keypair from seed = rho || sigma || z (96 bytes). */
[[nodiscard]] KemKeyPair cca_keygen(ByteView seed, const ParamSet& p);

/**
 * Encapsulation: derives (K_hat, coin) from H(pk) and the message, encrypts,
 * and outputs K = H(K_hat, H(ct)). msg must be 32 bytes; empty draws fresh
 * randomness.
 */
[[nodiscard]] EncapsResult encaps(const PkePublicKey& pk, const ParamSet& p, ByteView msg = {});

/**
 * Decapsulation with re-encryption check. On mismatch returns the implicit
 * rejection key H(z, H(ct)) and accepted = false. Both candidate keys are
 * always computed; selection avoids secret-dependent branching (best effort,
 * not a certified constant-time implementation).
 */
[[nodiscard]] DecapsResult decaps_checked(const KemSecretKey& sk, const KemCiphertext& ct,
                                          const ParamSet& p);

/** Plain decapsulation: the shared secret only. */
[[nodiscard]] Bytes decaps(const KemSecretKey& sk, const KemCiphertext& ct, const ParamSet& p);

namespace detail {

/**
 * Message codec, exposed for white-box tests. Ring variants place bit i of the
 * 32-byte message into coefficients {i, i+256, ...} as bit * round(q/2) and
 * decode by aggregate distance with ties toward 0; the unstructured variant
 * stores nibble i in slot i via decompress(nibble, 4).
 */
[[nodiscard]] Poly encode_msg(ByteView msg, const ParamSet& p);
[[nodiscard]] Bytes decode_msg(const Poly& w, const ParamSet& p);

}  // namespace detail

}  // namespace pqsap

#endif

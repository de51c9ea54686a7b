#ifndef PQSAP_SAP_HPP
#define PQSAP_SAP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pqsap/bytes.hpp"
#include "pqsap/kem.hpp"
#include "pqsap/params.hpp"

namespace pqsap {

/** Published recipient identity: spend public key K and view public key V. */
struct StealthMetaAddress {
  std::string params_id;
  PkePublicKey K;
  PkePublicKey V;
};

/** Full recipient key material (spend and view KEM keypairs). */
struct RecipientKeys {
  std::string params_id;
  KemKeyPair spend;
  KemKeyPair view;

  [[nodiscard]] StealthMetaAddress meta() const;
};

/** Delegatable scanning key: view secret plus spend *public* key; no spend secret. */
struct ViewingKey {
  std::string params_id;
  KemSecretKey view;
  PkePublicKey K;
};

/** On-registry record: KEM ciphertext R and optional view tag (0, 1 or 32 bytes). */
struct Announcement {
  uint64_t index = 0;  // registry sequence number; assigned on publish
  Bytes R;
  Bytes view_tag;
};

struct StealthAddress {
  PolyVec P;
  std::array<uint8_t, kAddressBytes> address{};
};

/** One-time key p = k + y with the noise term that completes P = A*p + e1. */
struct StealthPrivateKey {
  std::string params_id;
  PolyVec p;
  PolyVec e1;
};

struct SendResult {
  Announcement announcement;  // index unset until published
  StealthAddress addr;
};

struct ScanHit {
  uint64_t index;
  Bytes shared_secret;
  StealthAddress addr;
};

/** Scan instrumentation. tag_passed counts tag-filter survivors (vt > 0 only). */
struct ScanStats {
  uint64_t processed = 0;
  uint64_t tag_passed = 0;
  uint64_t tag_false_positives = 0;  // tag matched, decapsulation rejected
  std::vector<uint64_t> malformed;   // skipped announcement indices
};

inline constexpr std::array<size_t, 3> kViewTagWidths = {0, 1, 32};

/** Deterministic spend + view keypairs from one 32-byte seed. K != V guaranteed. */
[[nodiscard]] RecipientKeys generate_meta(ByteView seed, const ParamSet& p);

[[nodiscard]] ViewingKey viewing_key_of(const RecipientKeys& keys);

/** First `width` bytes (0, 1 or 32) of SHA-256 over the shared secret. */
[[nodiscard]] Bytes compute_view_tag(ByteView shared_secret, size_t width);

/** Sender-side one-time public key: P = A_K * y(S) + decompress(t_K) [+ e1(S)]. */
[[nodiscard]] StealthAddress derive_stealth_pubkey(const PkePublicKey& K, ByteView shared_secret,
                                                   const ParamSet& p);

/** Recipient-side one-time secret: p = k + y(S), e1 = decompress(t_K) - A_K * k [+ e1(S)]. */
[[nodiscard]] StealthPrivateKey derive_stealth_privkey(const PkeSecretKey& spend_sk,
                                                       const PkePublicKey& K,
                                                       ByteView shared_secret, const ParamSet& p);

/** Exact check P == A * p + e1 with A expanded from rho. */
[[nodiscard]] bool verify_key_pair(const PolyVec& P, const StealthPrivateKey& priv, ByteView rho,
                                   const ParamSet& p);

/** First 20 bytes of SHA-256 over the full-width serialization of P. */
[[nodiscard]] std::array<uint8_t, kAddressBytes> address_from_pubkey(const PolyVec& P,
                                                                     const ParamSet& p);

/**
 * Sender flow: encapsulate to V with the given 32 bytes of entropy, derive the
 * one-time address from K, emit the announcement (R, view tag of `vt_width`).
 */
[[nodiscard]] SendResult send(const StealthMetaAddress& meta, ByteView entropy, size_t vt_width,
                              const ParamSet& p);

/**
 * Recipient flow over a batch of announcements: decapsulate each R, apply the
 * view-tag prefilter (vt_width > 0), drop implicit rejections, and derive the
 * full address for survivors. Returns hits ordered by index; every
 * announcement produced by send() against these keys is returned, independent
 * of thread count. Malformed entries are skipped and recorded in stats.
 */
[[nodiscard]] std::vector<ScanHit> scan(const ViewingKey& keys,
                                        std::span<const Announcement> announcements,
                                        size_t vt_width, const ParamSet& p, unsigned threads = 1,
                                        ScanStats* stats = nullptr);

/** Recipient spend-recovery: one-time keypair for S, verified before return. */
[[nodiscard]] std::pair<StealthAddress, StealthPrivateKey> recover_spend(
    const RecipientKeys& keys, ByteView shared_secret, const ParamSet& p);

}  // namespace pqsap

#endif

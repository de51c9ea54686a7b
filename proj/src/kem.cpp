#include "pqsap/kem.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pqsap/algebra.hpp"
#include "pqsap/sampling.hpp"
#include "pqsap/serialize.hpp"
#include "pqsap/xof.hpp"
#include "pqsap/zq.hpp"

namespace pqsap {

namespace {

Bytes pack_vec(const PolyVec& v, uint32_t bits) {
  std::vector<uint16_t> flat;
  size_t total = 0;
  for (const Poly& e : v) total += e.size();
  flat.reserve(total);
  for (const Poly& e : v) flat.insert(flat.end(), e.c.begin(), e.c.end());
  return pack_bits(flat, bits);
}

PolyVec unpack_vec(ByteView data, size_t k, size_t n, uint32_t bits, uint32_t limit) {
  std::vector<uint16_t> flat = unpack_bits(data, k * n, bits);
  PolyVec v(k, Poly(n));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < n; ++j) {
      uint16_t c = flat[i * n + j];
      if (c >= limit) throw std::invalid_argument("deserialize: coefficient out of range");
      v[i].c[j] = c;
    }
  }
  return v;
}

/** Value domain of a component stored at width d: [0, 2^d) compressed, [0, q) otherwise. */
uint32_t coeff_limit(uint32_t d, const ParamSet& p) {
  return d < p.full_bits() ? (1u << d) : p.q;
}

}  // namespace

namespace detail {

/**
 * Message codec. Ring variants place bit i of the 32-byte message into
 * coefficients {i, i+256, ...} as bit * round(q/2); decoding aggregates the
 * per-coefficient distances to 0 and to round(q/2) over the repetition group,
 * ties toward 0. At repetition 1 this equals compress(x, 1). The unstructured
 * variant stores nibble i of the message in slot i via decompress(nibble, 4).
 */
Poly encode_msg(ByteView msg, const ParamSet& p) {
  if (msg.size() != kSharedSecretBytes) throw std::invalid_argument("encode_msg: need 32 bytes");
  Poly m(p.v_len());
  if (p.variant == Variant::LWE) {
    for (size_t i = 0; i < p.v_len(); ++i) {
      uint32_t nibble = (msg[i / 2] >> (4 * (i % 2))) & 0x0f;
      m.c[i] = static_cast<uint16_t>(decompress(nibble, 4, p.q));
    }
    return m;
  }
  const uint32_t half = static_cast<uint32_t>(round_half_up(p.q, 2));
  for (size_t j = 0; j < p.n; ++j) {
    size_t bit_index = j % 256;
    uint32_t bit = (msg[bit_index / 8] >> (bit_index % 8)) & 1;
    m.c[j] = static_cast<uint16_t>(bit ? half : 0);
  }
  return m;
}

Bytes decode_msg(const Poly& w, const ParamSet& p) {
  Bytes msg(kSharedSecretBytes, 0);
  if (p.variant == Variant::LWE) {
    for (size_t i = 0; i < p.v_len(); ++i) {
      uint32_t nibble = compress(w.c[i], 4, p.q);
      msg[i / 2] |= static_cast<uint8_t>(nibble << (4 * (i % 2)));
    }
    return msg;
  }
  const uint32_t half = static_cast<uint32_t>(round_half_up(p.q, 2));
  const size_t rep = p.msg_repeat();
  for (size_t i = 0; i < 256; ++i) {
    uint64_t dist_zero = 0;
    uint64_t dist_half = 0;
    for (size_t r = 0; r < rep; ++r) {
      uint32_t x = w.c[i + 256 * r];
      dist_zero += std::min(x, p.q - x);
      dist_half += x > half ? x - half : half - x;
    }
    if (dist_half < dist_zero) msg[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
  }
  return msg;
}

}  // namespace detail

namespace {

using detail::decode_msg;
using detail::encode_msg;

PolyVec sample_noise_vec(ByteView seed, Domain tag, uint32_t eta, const ParamSet& p) {
  XofStream stream(seed, tag);
  return cbd_vec(stream, eta, p.k, p.n, p.q);
}

Poly sample_noise_poly(ByteView seed, Domain tag, uint32_t eta, const ParamSet& p) {
  XofStream stream(seed, tag);
  return cbd_poly(stream, eta, p.v_len(), p.q);
}

}  // namespace

Bytes PkePublicKey::serialize(const ParamSet& p) const {
  return concat(pack_vec(t, p.d_t), rho);
}

PkePublicKey PkePublicKey::deserialize(ByteView data, const ParamSet& p) {
  if (data.size() != p.pk_bytes()) throw std::invalid_argument("public key: wrong length");
  PkePublicKey pk;
  pk.t = unpack_vec(data.first(p.packed_vec_bytes(p.d_t)), p.k, p.n, p.d_t,
                    coeff_limit(p.d_t, p));
  pk.rho.assign(data.end() - kSeedBytes, data.end());
  return pk;
}

Bytes PkeSecretKey::serialize(const ParamSet& p) const {
  return pack_vec(s, p.full_bits());
}

PkeSecretKey PkeSecretKey::deserialize(ByteView data, const ParamSet& p) {
  if (data.size() != p.pke_sk_bytes()) throw std::invalid_argument("secret key: wrong length");
  PkeSecretKey sk;
  sk.s = unpack_vec(data, p.k, p.n, p.full_bits(), p.q);
  return sk;
}

Bytes KemCiphertext::serialize(const ParamSet& p) const {
  return concat(pack_vec(u, p.d_u), pack_bits(v.c, p.d_v));
}

KemCiphertext KemCiphertext::deserialize(ByteView data, const ParamSet& p) {
  if (data.size() != p.ct_bytes()) throw std::invalid_argument("ciphertext: wrong length");
  KemCiphertext ct;
  const size_t u_bytes = p.packed_vec_bytes(p.d_u);
  ct.u = unpack_vec(data.first(u_bytes), p.k, p.n, p.d_u, coeff_limit(p.d_u, p));
  std::vector<uint16_t> vc = unpack_bits(data.subspan(u_bytes), p.v_len(), p.d_v);
  const uint32_t limit = coeff_limit(p.d_v, p);
  for (uint16_t c : vc) {
    if (c >= limit) throw std::invalid_argument("ciphertext: coefficient out of range");
  }
  ct.v.c = std::move(vc);
  return ct;
}

std::pair<PkePublicKey, PkeSecretKey> cpa_keygen(ByteView seed, const ParamSet& p) {
  if (seed.size() != kCpaSeedBytes) throw std::invalid_argument("cpa_keygen: need 64-byte seed");
  ByteView rho = seed.first(kSeedBytes);
  ByteView sigma = seed.subspan(kSeedBytes);

  PublicMatrix A = expand_public_matrix(rho, p);
  PolyVec s = sample_noise_vec(sigma, Domain::KeygenSecret, p.eta1, p);
  PolyVec e = sample_noise_vec(sigma, Domain::KeygenError, p.eta1, p);
  PolyVec t = vec_add(mat_mul(A, s, false), e, p.q);

  PkePublicKey pk{compress_vec(t, p.d_t, p), Bytes(rho.begin(), rho.end())};
  return {std::move(pk), PkeSecretKey{std::move(s)}};
}

KemCiphertext cpa_encrypt(const PkePublicKey& pk, ByteView msg, ByteView coin, const ParamSet& p) {
  Bytes fresh;
  if (coin.empty()) {
    fresh = random_bytes(kSeedBytes);
    coin = fresh;
  }
  if (coin.size() != kSeedBytes) throw std::invalid_argument("cpa_encrypt: need 32-byte coin");

  PublicMatrix A = expand_public_matrix(pk.rho, p);
  PolyVec t = decompress_vec(pk.t, p.d_t, p);
  PolyVec r = sample_noise_vec(coin, Domain::EncSecret, p.eta1, p);
  PolyVec e1 = sample_noise_vec(coin, Domain::EncError1, p.eta2, p);
  Poly e2 = sample_noise_poly(coin, Domain::EncError2, p.eta2, p);

  PolyVec u = vec_add(mat_mul(A, r, true), e1, p.q);
  Poly v = poly_add(poly_add(inner_pairs(r, t, p), e2, p.q), encode_msg(msg, p), p.q);
  return {compress_vec(u, p.d_u, p), compress_poly(v, p.d_v, p)};
}

Bytes cpa_decrypt(const PkeSecretKey& sk, const KemCiphertext& ct, const ParamSet& p) {
  PolyVec u = decompress_vec(ct.u, p.d_u, p);
  Poly v = decompress_poly(ct.v, p.d_v, p);
  Poly w = poly_sub(v, inner_pairs(u, sk.s, p), p.q);
  return decode_msg(w, p);
}

KemKeyPair cca_keygen(ByteView seed, const ParamSet& p) {
  if (seed.size() != kKemSeedBytes) throw std::invalid_argument("cca_keygen: need 96-byte seed");
  auto [pk, sk] = cpa_keygen(seed.first(kCpaSeedBytes), p);
  KemSecretKey kem_sk;
  kem_sk.sk = std::move(sk);
  kem_sk.z.assign(seed.end() - kSeedBytes, seed.end());
  kem_sk.pk = pk;
  kem_sk.pk_hash = sha3_256(pk.serialize(p));
  return {std::move(pk), std::move(kem_sk)};
}

EncapsResult encaps(const PkePublicKey& pk, const ParamSet& p, ByteView msg) {
  Bytes fresh;
  if (msg.empty()) {
    fresh = random_bytes(kSharedSecretBytes);
    msg = fresh;
  }
  if (msg.size() != kSharedSecretBytes) throw std::invalid_argument("encaps: need 32-byte message");

  Bytes g = sha3_512(sha3_256(pk.serialize(p)), msg);
  ByteView k_hat = ByteView(g).first(32);
  ByteView coin = ByteView(g).subspan(32);

  KemCiphertext ct = cpa_encrypt(pk, msg, coin, p);
  Bytes key = sha3_256(k_hat, sha3_256(ct.serialize(p)));
  return {std::move(ct), std::move(key)};
}

DecapsResult decaps_checked(const KemSecretKey& sk, const KemCiphertext& ct, const ParamSet& p) {
  Bytes msg = cpa_decrypt(sk.sk, ct, p);

  Bytes g = sha3_512(sk.pk_hash, msg);
  ByteView k_hat = ByteView(g).first(32);
  ByteView coin = ByteView(g).subspan(32);

  KemCiphertext ct2 = cpa_encrypt(sk.pk, msg, coin, p);
  Bytes ct_bytes = ct.serialize(p);
  Bytes ct_hash = sha3_256(ct_bytes);
  bool match = ct_equal(ct2.serialize(p), ct_bytes);

  Bytes accept_key = sha3_256(k_hat, ct_hash);
  Bytes reject_key = sha3_256(sk.z, ct_hash);

  // branch-free select between the two candidates
  uint8_t keep = static_cast<uint8_t>(-static_cast<int8_t>(match));
  Bytes key(kSharedSecretBytes);
  for (size_t i = 0; i < kSharedSecretBytes; ++i) {
    key[i] = static_cast<uint8_t>((accept_key[i] & keep) | (reject_key[i] & ~keep));
  }
  return {std::move(key), match};
}

Bytes decaps(const KemSecretKey& sk, const KemCiphertext& ct, const ParamSet& p) {
  return decaps_checked(sk, ct, p).shared_secret;
}

}  // namespace pqsap

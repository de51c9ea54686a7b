#include "pqsap/sap.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "pqsap/algebra.hpp"
#include "pqsap/sampling.hpp"
#include "pqsap/serialize.hpp"
#include "pqsap/xof.hpp"
#include "pqsap/zq.hpp"

namespace pqsap {

namespace {

void check_vt_width(size_t width) {
  if (width != 0 && width != 1 && width != 32) {
    throw std::invalid_argument("view tag width must be 0, 1 or 32");
  }
}

void check_shared_secret(ByteView s) {
  if (s.size() != kSharedSecretBytes) {
    throw std::invalid_argument("shared secret must be 32 bytes");
  }
}

/** Stealth offset y ~ CBD_eta1 over xof(S, tag); same shape and scale as a spend secret. */
PolyVec stealth_offset(ByteView shared_secret, const ParamSet& p) {
  XofStream stream(shared_secret, Domain::StealthY);
  return cbd_vec(stream, p.eta1, p.k, p.n, p.q);
}

/** Deterministic extra noise for the variants whose public keys are uncompressed. */
PolyVec stealth_error(ByteView shared_secret, const ParamSet& p) {
  XofStream stream(shared_secret, Domain::StealthE);
  return cbd_vec(stream, p.eta2, p.k, p.n, p.q);
}

Bytes pack_vec_full(const PolyVec& v, const ParamSet& p) {
  std::vector<uint16_t> flat;
  flat.reserve(p.vec_coeffs());
  for (const Poly& e : v) flat.insert(flat.end(), e.c.begin(), e.c.end());
  return pack_bits(flat, p.full_bits());
}

}  // namespace

StealthMetaAddress RecipientKeys::meta() const {
  return {params_id, spend.pk, view.pk};
}

RecipientKeys generate_meta(ByteView seed, const ParamSet& p) {
  if (seed.size() != kSeedBytes) throw std::invalid_argument("generate_meta: need 32-byte seed");
  Bytes spend_seed = XofStream(seed, Domain::MetaSpend).read(kKemSeedBytes);
  Bytes view_seed = XofStream(seed, Domain::MetaView).read(kKemSeedBytes);
  RecipientKeys keys;
  keys.params_id = std::string(p.name);
  keys.spend = cca_keygen(spend_seed, p);
  keys.view = cca_keygen(view_seed, p);
  if (keys.spend.pk == keys.view.pk) {
    throw std::runtime_error("generate_meta: spend and view keys collide");
  }
  return keys;
}

ViewingKey viewing_key_of(const RecipientKeys& keys) {
  return {keys.params_id, keys.view.sk, keys.spend.pk};
}

Bytes compute_view_tag(ByteView shared_secret, size_t width) {
  check_vt_width(width);
  check_shared_secret(shared_secret);
  Bytes digest = sha256(shared_secret);
  digest.resize(width);
  return digest;
}

std::array<uint8_t, kAddressBytes> address_from_pubkey(const PolyVec& P, const ParamSet& p) {
  Bytes digest = sha256(pack_vec_full(P, p));
  std::array<uint8_t, kAddressBytes> addr{};
  std::copy_n(digest.begin(), kAddressBytes, addr.begin());
  return addr;
}

StealthAddress derive_stealth_pubkey(const PkePublicKey& K, ByteView shared_secret,
                                     const ParamSet& p) {
  check_shared_secret(shared_secret);
  PublicMatrix A = expand_public_matrix(K.rho, p);
  PolyVec P = vec_add(mat_mul(A, stealth_offset(shared_secret, p), false),
                      decompress_vec(K.t, p.d_t, p), p.q);
  if (p.variant != Variant::MLWE) {
    P = vec_add(P, stealth_error(shared_secret, p), p.q);
  }
  StealthAddress out;
  out.address = address_from_pubkey(P, p);
  out.P = std::move(P);
  return out;
}

StealthPrivateKey derive_stealth_privkey(const PkeSecretKey& spend_sk, const PkePublicKey& K,
                                         ByteView shared_secret, const ParamSet& p) {
  check_shared_secret(shared_secret);
  StealthPrivateKey out;
  out.params_id = std::string(p.name);
  out.p = vec_add(spend_sk.s, stealth_offset(shared_secret, p), p.q);
  PublicMatrix A = expand_public_matrix(K.rho, p);
  out.e1 = vec_sub(decompress_vec(K.t, p.d_t, p), mat_mul(A, spend_sk.s, false), p.q);
  if (p.variant != Variant::MLWE) {
    out.e1 = vec_add(out.e1, stealth_error(shared_secret, p), p.q);
  }
  return out;
}

bool verify_key_pair(const PolyVec& P, const StealthPrivateKey& priv, ByteView rho,
                     const ParamSet& p) {
  if (priv.params_id != p.name) return false;
  PublicMatrix A = expand_public_matrix(rho, p);
  return vec_add(mat_mul(A, priv.p, false), priv.e1, p.q) == P;
}

SendResult send(const StealthMetaAddress& meta, ByteView entropy, size_t vt_width,
                const ParamSet& p) {
  check_vt_width(vt_width);
  if (meta.params_id != p.name) throw std::invalid_argument("send: parameter set mismatch");
  EncapsResult enc = encaps(meta.V, p, entropy);
  SendResult out;
  out.addr = derive_stealth_pubkey(meta.K, enc.shared_secret, p);
  out.announcement.R = enc.ct.serialize(p);
  out.announcement.view_tag = compute_view_tag(enc.shared_secret, vt_width);
  return out;
}

namespace {

struct ChunkResult {
  std::vector<ScanHit> hits;
  ScanStats stats;
};

void scan_chunk(const ViewingKey& keys, std::span<const Announcement> announcements,
                size_t vt_width, const ParamSet& p, ChunkResult& out) {
  for (const Announcement& ann : announcements) {
    out.stats.processed++;
    KemCiphertext ct;
    try {
      ct = KemCiphertext::deserialize(ann.R, p);
    } catch (const std::invalid_argument&) {
      out.stats.malformed.push_back(ann.index);
      continue;
    }
    DecapsResult dec = decaps_checked(keys.view, ct, p);
    if (vt_width > 0) {
      if (ann.view_tag.size() < vt_width) {
        out.stats.malformed.push_back(ann.index);
        continue;
      }
      Bytes tag = compute_view_tag(dec.shared_secret, vt_width);
      if (!std::equal(tag.begin(), tag.end(), ann.view_tag.begin())) continue;
      out.stats.tag_passed++;
    }
    // Every announcement surviving the tag filter gets its candidate address
    // derived; a deployed wallet matches that address against transaction
    // outputs, so this is the step a view tag exists to skip. The
    // decapsulation consistency flag stands in for the output lookup.
    StealthAddress derived = derive_stealth_pubkey(keys.K, dec.shared_secret, p);
    if (!dec.accepted) {
      // an honest sender cannot reach this point; a passing tag was a collision
      if (vt_width > 0) out.stats.tag_false_positives++;
      continue;
    }
    ScanHit hit;
    hit.index = ann.index;
    hit.addr = std::move(derived);
    hit.shared_secret = std::move(dec.shared_secret);
    out.hits.push_back(std::move(hit));
  }
}

}  // namespace

std::vector<ScanHit> scan(const ViewingKey& keys, std::span<const Announcement> announcements,
                          size_t vt_width, const ParamSet& p, unsigned threads,
                          ScanStats* stats) {
  check_vt_width(vt_width);
  if (keys.params_id != p.name) throw std::invalid_argument("scan: parameter set mismatch");
  if (threads == 0) threads = 1;

  std::vector<ChunkResult> results;
  if (threads == 1 || announcements.size() < 2 * threads) {
    results.resize(1);
    scan_chunk(keys, announcements, vt_width, p, results[0]);
  } else {
    results.resize(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const size_t per = (announcements.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      size_t lo = std::min(announcements.size(), w * per);
      size_t hi = std::min(announcements.size(), lo + per);
      pool.emplace_back(scan_chunk, std::cref(keys), announcements.subspan(lo, hi - lo), vt_width,
                        std::cref(p), std::ref(results[w]));
    }
    for (std::thread& t : pool) t.join();
  }

  std::vector<ScanHit> hits;
  for (ChunkResult& r : results) {
    std::move(r.hits.begin(), r.hits.end(), std::back_inserter(hits));
    if (stats != nullptr) {
      stats->processed += r.stats.processed;
      stats->tag_passed += r.stats.tag_passed;
      stats->tag_false_positives += r.stats.tag_false_positives;
      stats->malformed.insert(stats->malformed.end(), r.stats.malformed.begin(),
                              r.stats.malformed.end());
    }
  }
  return hits;
}

std::pair<StealthAddress, StealthPrivateKey> recover_spend(const RecipientKeys& keys,
                                                           ByteView shared_secret,
                                                           const ParamSet& p) {
  StealthAddress addr = derive_stealth_pubkey(keys.spend.pk, shared_secret, p);
  StealthPrivateKey priv =
      derive_stealth_privkey(keys.spend.sk.sk, keys.spend.pk, shared_secret, p);
  if (!verify_key_pair(addr.P, priv, keys.spend.pk.rho, p)) {
    throw std::runtime_error("recover_spend: derived key pair failed verification");
  }
  return {std::move(addr), std::move(priv)};
}

}  // namespace pqsap

#ifndef PQSAP_XOF_HPP
#define PQSAP_XOF_HPP

#include <array>
#include <cstdint>
#include <initializer_list>

#include "pqsap/bytes.hpp"

namespace pqsap {

/** Single-byte domain separation tags appended to seeds before expansion. */
enum class Domain : uint8_t {
  Matrix = 0x00,        // public matrix expansion; followed by index bytes
  KeygenSecret = 0x01,  // s from sigma
  KeygenError = 0x02,   // e from sigma
  EncSecret = 0x03,     // r from the encryption coin
  EncError1 = 0x04,     // e1 from the encryption coin
  EncError2 = 0x05,     // e2 from the encryption coin
  StealthY = 0x06,      // stealth offset y from a shared secret
  StealthE = 0x07,      // deterministic stealth error from a shared secret
  MetaSpend = 0x08,     // spend keypair seed from a meta seed
  MetaView = 0x09,      // view keypair seed from a meta seed
  Synth = 0x0a,         // synthetic registry fill stream
  BenchRecipient = 0x0b,
  BenchFill = 0x0c,
};

namespace detail {

/** Keccak-f[1600] sponge. rate_bytes selects the function; pad_byte the domain suffix. */
class KeccakSponge {
 public:
  KeccakSponge(size_t rate_bytes, uint8_t pad_byte);

  void absorb(ByteView data);
  /** Applies padding; no further absorb calls are valid. Squeezing may span calls. */
  void finish();
  void squeeze(std::span<uint8_t> out);

 private:
  std::array<uint64_t, 25> state_{};
  size_t rate_;
  uint8_t pad_;
  size_t offset_ = 0;  // byte position within the current rate block
  bool squeezing_ = false;
};

}  // namespace detail

/** Unbounded byte stream; the sampling layer is written against this. */
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  virtual void read(std::span<uint8_t> out) = 0;

  [[nodiscard]] Bytes read(size_t n) {
    Bytes out(n);
    read(std::span<uint8_t>(out));
    return out;
  }
};

/** Incrementally readable SHAKE-128 output stream over seed || tag bytes. */
class XofStream final : public ByteSource {
 public:
  explicit XofStream(ByteView seed, std::initializer_list<uint8_t> tags = {});
  XofStream(ByteView seed, Domain tag);
  XofStream(ByteView seed, Domain tag, uint16_t index);

  using ByteSource::read;
  void read(std::span<uint8_t> out) override;

 private:
  detail::KeccakSponge sponge_;
};

[[nodiscard]] Bytes shake128(ByteView data, size_t out_len);
[[nodiscard]] Bytes sha3_256(ByteView data);
[[nodiscard]] Bytes sha3_256(ByteView a, ByteView b);
[[nodiscard]] Bytes sha3_512(ByteView data);
[[nodiscard]] Bytes sha3_512(ByteView a, ByteView b);
[[nodiscard]] Bytes sha256(ByteView data);

}  // namespace pqsap

#endif

#ifndef PQSAP_BYTES_HPP
#define PQSAP_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqsap {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

[[nodiscard]] std::string hex_encode(ByteView data);

/** Decodes a hex string (optionally 0x-prefixed). Throws std::invalid_argument on bad input. */
[[nodiscard]] Bytes hex_decode(std::string_view hex);

[[nodiscard]] std::string base64_encode(ByteView data);

/** Decodes standard base64 with padding. Throws std::invalid_argument on bad input. */
[[nodiscard]] Bytes base64_decode(std::string_view text);

/** Comparison without data-dependent early exit. Lengths must match for equality. */
[[nodiscard]] bool ct_equal(ByteView a, ByteView b);

/** Fresh OS randomness (/dev/urandom). Throws std::runtime_error if unavailable. */
[[nodiscard]] Bytes random_bytes(size_t n);

[[nodiscard]] Bytes concat(ByteView a, ByteView b);

}  // namespace pqsap

#endif

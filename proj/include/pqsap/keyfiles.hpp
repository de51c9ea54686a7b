#ifndef PQSAP_KEYFILES_HPP
#define PQSAP_KEYFILES_HPP

#include <filesystem>

#include "pqsap/sap.hpp"

namespace pqsap {

/**
 * Key-value key files ("name: base64" lines plus format/params headers).
 *
 *   pqsap-meta/1     public meta-address (K, V)
 *   pqsap-keys/1     full recipient secrets; written 0600
 *   pqsap-viewing/1  view secret + spend public key; written 0600
 *
 * Readers validate the format line, the params id, and every field length.
 * All readers throw std::runtime_error with the offending path/field on error.
 */

void write_meta_file(const std::filesystem::path& path, const StealthMetaAddress& meta);
[[nodiscard]] StealthMetaAddress read_meta_file(const std::filesystem::path& path);

void write_recipient_keys(const std::filesystem::path& path, const RecipientKeys& keys);
[[nodiscard]] RecipientKeys read_recipient_keys(const std::filesystem::path& path);

void write_viewing_key(const std::filesystem::path& path, const ViewingKey& key);
[[nodiscard]] ViewingKey read_viewing_key(const std::filesystem::path& path);

}  // namespace pqsap

#endif

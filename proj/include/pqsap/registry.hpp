#ifndef PQSAP_REGISTRY_HPP
#define PQSAP_REGISTRY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pqsap/bytes.hpp"
#include "pqsap/params.hpp"
#include "pqsap/sap.hpp"

namespace pqsap {

/**
 * Append-only announcement log. Line-delimited text:
 *
 *   pqsap-registry/1 params=<name> vt=<width>
 *   <index> <base64 R> <hex tag or '-'>
 *
 * Indices are dense and ascending from 0. Single writer assumed; readers may
 * share a file with a writer between appends.
 */
class Registry {
 public:
  /** Creates (truncating) a registry with the given header. */
  static Registry create(const std::filesystem::path& path, const ParamSet& p, size_t vt_width);

  /** Opens an existing registry, parsing and validating every record. */
  static Registry open(const std::filesystem::path& path);

  /** Validates sizes against the header, appends, flushes, returns the index. */
  uint64_t publish(const Announcement& ann);

  /** Records with index >= cursor. Throws std::out_of_range if cursor > size(). */
  [[nodiscard]] std::vector<Announcement> iterate_since(uint64_t cursor) const;

  [[nodiscard]] uint64_t size() const { return count_; }
  [[nodiscard]] const std::string& params_id() const { return params_id_; }
  [[nodiscard]] size_t vt_width() const { return vt_width_; }
  [[nodiscard]] const std::filesystem::path& path() const { return path_; }

 private:
  Registry() = default;

  std::filesystem::path path_;
  std::string params_id_;
  size_t vt_width_ = 0;
  uint64_t count_ = 0;
};

struct SynthFillResult {
  std::vector<uint64_t> target_indices;         // one per target announcement, ascending
  std::vector<StealthAddress> target_addrs;     // parallel to target_indices
  std::vector<uint64_t> target_meta_of_index;   // which target meta each entry went to
};

/**
 * Fills a registry with n_decoys announcements to fresh throwaway
 * meta-addresses plus one announcement per target meta, interleaved at
 * seed-derived positions. Byte-deterministic in (seed, n_decoys, targets).
 * `per_target` announcements are created for each target meta.
 */
SynthFillResult synth_fill(Registry& reg, size_t n_decoys,
                           std::span<const StealthMetaAddress> targets, size_t per_target,
                           ByteView seed, const ParamSet& p);

}  // namespace pqsap

#endif

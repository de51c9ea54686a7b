#ifndef PQSAP_BENCH_HPP
#define PQSAP_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pqsap/bytes.hpp"
#include "pqsap/params.hpp"

namespace pqsap {

/** Scan-time measurement for one (paramset, registry size, tag mode) cell. */
struct BenchReport {
  std::string paramset;
  uint64_t n_announcements = 0;
  std::string vt_mode;  // none | 1byte | fullhash
  uint32_t repeats = 0;
  std::vector<double> times_ms;  // one wall-clock scan per repeat
  double mean_ms = 0.0;
  double stddev_ms = 0.0;  // sample standard deviation
};

[[nodiscard]] std::string vt_mode_name(size_t vt_width);
/** Maps none/1byte/fullhash to 0/1/32; throws std::invalid_argument otherwise. */
[[nodiscard]] size_t vt_width_from_mode(const std::string& mode);

inline constexpr std::array<uint64_t, 5> kBenchGrid = {5000, 10000, 20000, 40000, 80000};
inline constexpr size_t kBenchTargetAnnouncements = 10;

/**
 * Builds a synthetic registry of n announcements (kBenchTargetAnnouncements of
 * them addressed to a seed-derived recipient), then times `repeats` full scans
 * of that recipient's viewing key with a monotonic clock. One untimed warm-up
 * scan precedes measurement; registry construction is excluded from timing.
 */
[[nodiscard]] BenchReport run_bench(const ParamSet& p, uint64_t n_announcements, size_t vt_width,
                                    uint32_t repeats, ByteView seed, unsigned threads = 1);

/** CSV header + one row per report; times_ms joined with ';'. */
[[nodiscard]] std::string to_csv(std::span<const BenchReport> reports);
/** JSON array of report objects with the same fields as the CSV. */
[[nodiscard]] std::string to_json(std::span<const BenchReport> reports);

}  // namespace pqsap

#endif

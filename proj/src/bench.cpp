#include "pqsap/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pqsap/registry.hpp"
#include "pqsap/sap.hpp"
#include "pqsap/xof.hpp"

namespace pqsap {

std::string vt_mode_name(size_t vt_width) {
  switch (vt_width) {
    case 0:
      return "none";
    case 1:
      return "1byte";
    case 32:
      return "fullhash";
    default:
      throw std::invalid_argument("vt_mode_name: width must be 0, 1 or 32");
  }
}

size_t vt_width_from_mode(const std::string& mode) {
  if (mode == "none") return 0;
  if (mode == "1byte") return 1;
  if (mode == "fullhash") return 32;
  throw std::invalid_argument("view tag mode must be none, 1byte or fullhash");
}

BenchReport run_bench(const ParamSet& p, uint64_t n_announcements, size_t vt_width,
                      uint32_t repeats, ByteView seed, unsigned threads) {
  if (repeats == 0) throw std::invalid_argument("run_bench: repeats must be positive");
  if (n_announcements < kBenchTargetAnnouncements) {
    throw std::invalid_argument("run_bench: announcement count below target count");
  }

  Bytes recipient_seed = XofStream(seed, Domain::BenchRecipient).read(kSeedBytes);
  Bytes fill_seed = XofStream(seed, Domain::BenchFill).read(kSeedBytes);
  RecipientKeys recipient = generate_meta(recipient_seed, p);
  ViewingKey vk = viewing_key_of(recipient);

  const std::filesystem::path path =
      std::filesystem::temp_directory_path() /
      ("pqsap-bench-" + std::string(p.name) + "-" + hex_encode(ByteView(fill_seed).first(8)) +
       ".reg");
  Registry reg = Registry::create(path, p, vt_width);
  const StealthMetaAddress meta = recipient.meta();
  (void)synth_fill(reg, n_announcements - kBenchTargetAnnouncements, {&meta, 1},
                   kBenchTargetAnnouncements, fill_seed, p);
  std::vector<Announcement> announcements = reg.iterate_since(0);

  BenchReport report;
  report.paramset = std::string(p.name);
  report.n_announcements = n_announcements;
  report.vt_mode = vt_mode_name(vt_width);
  report.repeats = repeats;
  report.times_ms.reserve(repeats);

  (void)scan(vk, announcements, vt_width, p, threads);  // warm-up, untimed
  for (uint32_t i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    std::vector<ScanHit> hits = scan(vk, announcements, vt_width, p, threads);
    auto stop = std::chrono::steady_clock::now();
    if (hits.size() != kBenchTargetAnnouncements) {
      std::filesystem::remove(path);
      throw std::runtime_error("run_bench: scan lost announcements");
    }
    report.times_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::filesystem::remove(path);

  double sum = 0.0;
  for (double t : report.times_ms) sum += t;
  report.mean_ms = sum / repeats;
  if (repeats > 1) {
    double sq = 0.0;
    for (double t : report.times_ms) sq += (t - report.mean_ms) * (t - report.mean_ms);
    report.stddev_ms = std::sqrt(sq / (repeats - 1));
  }
  return report;
}

std::string to_csv(std::span<const BenchReport> reports) {
  std::ostringstream os;
  os << "paramset,n_announcements,vt_mode,repeats,mean_ms,stddev_ms,times_ms\n";
  os.precision(6);
  os << std::fixed;
  for (const BenchReport& r : reports) {
    os << r.paramset << ',' << r.n_announcements << ',' << r.vt_mode << ',' << r.repeats << ','
       << r.mean_ms << ',' << r.stddev_ms << ',';
    for (size_t i = 0; i < r.times_ms.size(); ++i) {
      if (i > 0) os << ';';
      os << r.times_ms[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(std::span<const BenchReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchReport& r : reports) {
    arr.push_back({{"paramset", r.paramset},
                   {"n_announcements", r.n_announcements},
                   {"vt_mode", r.vt_mode},
                   {"repeats", r.repeats},
                   {"mean_ms", r.mean_ms},
                   {"stddev_ms", r.stddev_ms},
                   {"times_ms", r.times_ms}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace pqsap

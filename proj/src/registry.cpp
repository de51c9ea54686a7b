#include "pqsap/registry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pqsap/xof.hpp"

namespace pqsap {

namespace {

constexpr std::string_view kMagic = "pqsap-registry/1";

std::string header_line(std::string_view params_id, size_t vt_width) {
  std::ostringstream os;
  os << kMagic << " params=" << params_id << " vt=" << vt_width;
  return os.str();
}

[[noreturn]] void corrupt(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

struct ParsedHeader {
  std::string params_id;
  size_t vt_width;
};

ParsedHeader parse_header(const std::filesystem::path& path, const std::string& line) {
  std::istringstream is(line);
  std::string magic, params_kv, vt_kv;
  if (!(is >> magic >> params_kv >> vt_kv) || magic != kMagic ||
      !params_kv.starts_with("params=") || !vt_kv.starts_with("vt=")) {
    corrupt(path, "bad registry header");
  }
  ParsedHeader h;
  h.params_id = params_kv.substr(7);
  const ParamSet* p = find_params(h.params_id);
  if (p == nullptr) corrupt(path, "unknown parameter set '" + h.params_id + "'");
  std::string vt = vt_kv.substr(3);
  if (vt != "0" && vt != "1" && vt != "32") corrupt(path, "bad view tag width '" + vt + "'");
  h.vt_width = static_cast<size_t>(std::stoul(vt));
  return h;
}

Announcement parse_record(const std::filesystem::path& path, const std::string& line,
                          uint64_t expected_index, size_t vt_width, size_t ct_bytes) {
  std::istringstream is(line);
  std::string index_str, r_b64, tag_hex;
  if (!(is >> index_str >> r_b64 >> tag_hex)) {
    corrupt(path, "record " + std::to_string(expected_index) + ": malformed line");
  }
  std::string extra;
  if (is >> extra) corrupt(path, "record " + std::to_string(expected_index) + ": trailing data");

  Announcement ann;
  try {
    ann.index = std::stoull(index_str);
    ann.R = base64_decode(r_b64);
    ann.view_tag = tag_hex == "-" ? Bytes{} : hex_decode(tag_hex);
  } catch (const std::exception& e) {
    corrupt(path, "record " + std::to_string(expected_index) + ": " + e.what());
  }
  if (ann.index != expected_index) {
    corrupt(path, "record " + std::to_string(expected_index) + ": index out of sequence");
  }
  if (ann.R.size() != ct_bytes) {
    corrupt(path, "record " + std::to_string(expected_index) + ": wrong ciphertext length");
  }
  if (ann.view_tag.size() != vt_width) {
    corrupt(path, "record " + std::to_string(expected_index) + ": wrong view tag length");
  }
  return ann;
}

}  // namespace

Registry Registry::create(const std::filesystem::path& path, const ParamSet& p, size_t vt_width) {
  if (vt_width != 0 && vt_width != 1 && vt_width != 32) {
    throw std::invalid_argument("registry: view tag width must be 0, 1 or 32");
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("registry: cannot create " + path.string());
  out << header_line(p.name, vt_width) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("registry: write failed on " + path.string());

  Registry reg;
  reg.path_ = path;
  reg.params_id_ = std::string(p.name);
  reg.vt_width_ = vt_width;
  reg.count_ = 0;
  return reg;
}

Registry Registry::open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("registry: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) corrupt(path, "missing header");
  ParsedHeader h = parse_header(path, line);
  const ParamSet& p = *find_params(h.params_id);

  uint64_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) corrupt(path, "record " + std::to_string(count) + ": empty line");
    (void)parse_record(path, line, count, h.vt_width, p.ct_bytes());
    ++count;
  }

  Registry reg;
  reg.path_ = path;
  reg.params_id_ = h.params_id;
  reg.vt_width_ = h.vt_width;
  reg.count_ = count;
  return reg;
}

uint64_t Registry::publish(const Announcement& ann) {
  const ParamSet& p = *find_params(params_id_);
  if (ann.R.size() != p.ct_bytes()) {
    throw std::invalid_argument("publish: wrong ciphertext length");
  }
  if (ann.view_tag.size() != vt_width_) {
    throw std::invalid_argument("publish: wrong view tag length");
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("registry: cannot append to " + path_.string());
  out << count_ << ' ' << base64_encode(ann.R) << ' '
      << (vt_width_ == 0 ? std::string("-") : hex_encode(ann.view_tag)) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("registry: append failed on " + path_.string());
  return count_++;
}

std::vector<Announcement> Registry::iterate_since(uint64_t cursor) const {
  if (cursor > count_) throw std::out_of_range("iterate_since: cursor beyond registry size");
  const ParamSet& p = *find_params(params_id_);

  std::ifstream in(path_);
  if (!in) throw std::runtime_error("registry: cannot open " + path_.string());
  std::string line;
  if (!std::getline(in, line)) corrupt(path_, "missing header");
  (void)parse_header(path_, line);

  std::vector<Announcement> out;
  out.reserve(static_cast<size_t>(count_ - cursor));
  uint64_t index = 0;
  while (std::getline(in, line)) {
    Announcement ann = parse_record(path_, line, index, vt_width_, p.ct_bytes());
    if (index >= cursor) out.push_back(std::move(ann));
    ++index;
  }
  return out;
}

SynthFillResult synth_fill(Registry& reg, size_t n_decoys,
                           std::span<const StealthMetaAddress> targets, size_t per_target,
                           ByteView seed, const ParamSet& p) {
  if (reg.params_id() != p.name) throw std::invalid_argument("synth_fill: parameter set mismatch");
  for (const StealthMetaAddress& meta : targets) {
    if (meta.params_id != p.name) {
      throw std::invalid_argument("synth_fill: target parameter set mismatch");
    }
  }
  const size_t n_targets = targets.size() * per_target;
  const size_t total = n_decoys + n_targets;
  XofStream stream(seed, Domain::Synth);

  // seed-derived distinct positions for the target announcements
  std::vector<size_t> slot(total, SIZE_MAX);
  for (size_t t = 0; t < n_targets; ++t) {
    for (;;) {
      Bytes draw = stream.read(8);
      uint64_t pos = 0;
      for (int i = 7; i >= 0; --i) pos = pos << 8 | draw[i];
      pos %= total;
      if (slot[pos] == SIZE_MAX) {
        slot[pos] = t;
        break;
      }
    }
  }

  SynthFillResult result;
  result.target_indices.resize(n_targets);
  result.target_addrs.resize(n_targets);
  result.target_meta_of_index.resize(n_targets);
  for (size_t pos = 0; pos < total; ++pos) {
    if (slot[pos] == SIZE_MAX) {
      Bytes meta_seed = stream.read(kSeedBytes);
      Bytes entropy = stream.read(kSeedBytes);
      RecipientKeys decoy = generate_meta(meta_seed, p);
      SendResult sr = send(decoy.meta(), entropy, reg.vt_width(), p);
      (void)reg.publish(sr.announcement);
    } else {
      const size_t t = slot[pos];
      const size_t which_meta = t / per_target;
      Bytes entropy = stream.read(kSeedBytes);
      SendResult sr = send(targets[which_meta], entropy, reg.vt_width(), p);
      uint64_t index = reg.publish(sr.announcement);
      result.target_indices[t] = index;
      result.target_addrs[t] = std::move(sr.addr);
      result.target_meta_of_index[t] = which_meta;
    }
  }

  // report targets in index order
  std::vector<size_t> order(n_targets);
  for (size_t i = 0; i < n_targets; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return result.target_indices[a] < result.target_indices[b];
  });
  SynthFillResult sorted;
  sorted.target_indices.reserve(n_targets);
  sorted.target_addrs.reserve(n_targets);
  sorted.target_meta_of_index.reserve(n_targets);
  for (size_t i : order) {
    sorted.target_indices.push_back(result.target_indices[i]);
    sorted.target_addrs.push_back(std::move(result.target_addrs[i]));
    sorted.target_meta_of_index.push_back(result.target_meta_of_index[i]);
  }
  return sorted;
}

}  // namespace pqsap

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pqsap/registry.hpp"
#include "pqsap/sap.hpp"

using namespace pqsap;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
  fs::path dir = fs::temp_directory_path() / "pqsap_registry_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path fresh_path(const std::string& name) {
  fs::path p = test_dir() / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Bytes varied_seed(size_t n, uint8_t base) {
  Bytes s(n);
  for (size_t i = 0; i < n; ++i) s[i] = static_cast<uint8_t>(base + 13 * i);
  return s;
}

Announcement make_announcement(const RecipientKeys& keys, uint8_t entropy, size_t vt_width,
                               const ParamSet& p) {
  return send(keys.meta(), varied_seed(32, entropy), vt_width, p).announcement;
}

}  // namespace

TEST_CASE("publish assigns dense ascending indices that survive reopening") {
  const ParamSet& p = KYBER512;
  RecipientKeys keys = generate_meta(varied_seed(32, 1), p);
  fs::path path = fresh_path("basic.reg");

  Registry reg = Registry::create(path, p, 1);
  CHECK(reg.size() == 0);
  CHECK(reg.params_id() == "kyber512");
  CHECK(reg.vt_width() == 1);

  std::vector<Announcement> published;
  for (uint8_t i = 0; i < 5; ++i) {
    Announcement ann = make_announcement(keys, static_cast<uint8_t>(0x10 + i), 1, p);
    uint64_t idx = reg.publish(ann);
    CHECK(idx == i);
    ann.index = idx;
    published.push_back(std::move(ann));
  }
  CHECK(reg.size() == 5);

  Registry again = Registry::open(path);
  CHECK(again.size() == 5);
  CHECK(again.params_id() == "kyber512");
  CHECK(again.vt_width() == 1);

  std::vector<Announcement> all = again.iterate_since(0);
  REQUIRE(all.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(all[i].index == i);
    CHECK(all[i].R == published[i].R);
    CHECK(all[i].view_tag == published[i].view_tag);
  }

  // appending through the reopened handle continues the sequence
  Announcement more = make_announcement(keys, 0x20, 1, p);
  CHECK(again.publish(more) == 5);
  CHECK(Registry::open(path).size() == 6);
}

TEST_CASE("iterate_since returns the suffix from the cursor") {
  const ParamSet& p = KYBER512;
  RecipientKeys keys = generate_meta(varied_seed(32, 3), p);
  fs::path path = fresh_path("cursor.reg");
  Registry reg = Registry::create(path, p, 0);
  for (uint8_t i = 0; i < 4; ++i) {
    (void)reg.publish(make_announcement(keys, static_cast<uint8_t>(0x30 + i), 0, p));
  }

  CHECK(reg.iterate_since(0).size() == 4);
  std::vector<Announcement> tail = reg.iterate_since(2);
  REQUIRE(tail.size() == 2);
  CHECK(tail[0].index == 2);
  CHECK(tail[1].index == 3);
  CHECK(reg.iterate_since(4).empty());
  CHECK_THROWS_AS((void)reg.iterate_since(5), std::out_of_range);
}

TEST_CASE("a width-zero registry stores no tags") {
  const ParamSet& p = KYBER512;
  RecipientKeys keys = generate_meta(varied_seed(32, 5), p);
  fs::path path = fresh_path("notag.reg");
  Registry reg = Registry::create(path, p, 0);
  (void)reg.publish(make_announcement(keys, 0x41, 0, p));
  std::vector<Announcement> all = reg.iterate_since(0);
  REQUIRE(all.size() == 1);
  CHECK(all[0].view_tag.empty());
  // the record encodes the absent tag as '-'
  std::string text = slurp(path);
  CHECK(text.find(" -\n") != std::string::npos);
}

TEST_CASE("publish validates announcement shape against the header") {
  const ParamSet& p = KYBER512;
  RecipientKeys keys = generate_meta(varied_seed(32, 7), p);
  fs::path path = fresh_path("shape.reg");
  Registry reg = Registry::create(path, p, 1);

  Announcement short_ct = make_announcement(keys, 0x51, 1, p);
  short_ct.R.pop_back();
  CHECK_THROWS_AS((void)reg.publish(short_ct), std::invalid_argument);

  Announcement wrong_tag = make_announcement(keys, 0x52, 32, p);
  CHECK_THROWS_AS((void)reg.publish(wrong_tag), std::invalid_argument);

  Announcement no_tag = make_announcement(keys, 0x53, 0, p);
  CHECK_THROWS_AS((void)reg.publish(no_tag), std::invalid_argument);

  CHECK(reg.size() == 0);
  CHECK_THROWS_AS((void)Registry::create(fresh_path("badwidth.reg"), p, 2),
                  std::invalid_argument);
}

TEST_CASE("synthetic fills are byte-deterministic and scannable") {
  const ParamSet& p = KYBER512;
  RecipientKeys alice = generate_meta(varied_seed(32, 9), p);
  RecipientKeys bob = generate_meta(varied_seed(32, 10), p);
  std::vector<StealthMetaAddress> targets{alice.meta(), bob.meta()};
  Bytes seed = varied_seed(32, 0x61);

  fs::path path_a = fresh_path("synth_a.reg");
  fs::path path_b = fresh_path("synth_b.reg");
  Registry reg_a = Registry::create(path_a, p, 1);
  Registry reg_b = Registry::create(path_b, p, 1);
  SynthFillResult ra = synth_fill(reg_a, 30, targets, 3, seed, p);
  SynthFillResult rb = synth_fill(reg_b, 30, targets, 3, seed, p);

  CHECK(slurp(path_a) == slurp(path_b));
  CHECK(ra.target_indices == rb.target_indices);
  CHECK(ra.target_meta_of_index == rb.target_meta_of_index);
  REQUIRE(ra.target_addrs.size() == 6);
  for (size_t i = 0; i < 6; ++i) {
    CHECK(ra.target_addrs[i].address == rb.target_addrs[i].address);
  }

  CHECK(reg_a.size() == 36);
  REQUIRE(ra.target_indices.size() == 6);
  CHECK(std::is_sorted(ra.target_indices.begin(), ra.target_indices.end()));

  // scanning with each target's viewing key finds exactly its announcements
  std::vector<Announcement> anns = reg_a.iterate_since(0);
  for (size_t who = 0; who < 2; ++who) {
    const RecipientKeys& keys = who == 0 ? alice : bob;
    std::vector<ScanHit> hits = scan(viewing_key_of(keys), anns, 1, p);
    REQUIRE(hits.size() == 3);
    size_t matched = 0;
    for (size_t t = 0; t < 6; ++t) {
      if (ra.target_meta_of_index[t] != who) continue;
      CHECK(hits[matched].index == ra.target_indices[t]);
      CHECK(hits[matched].addr.address == ra.target_addrs[t].address);
      matched++;
    }
    CHECK(matched == 3);
  }

  // a different seed gives a different fill
  fs::path path_c = fresh_path("synth_c.reg");
  Registry reg_c = Registry::create(path_c, p, 1);
  (void)synth_fill(reg_c, 30, targets, 3, varied_seed(32, 0x62), p);
  CHECK(slurp(path_c) != slurp(path_a));
}

TEST_CASE("synthetic fill rejects parameter set mismatches") {
  const ParamSet& p = KYBER512;
  RecipientKeys alice = generate_meta(varied_seed(32, 11), p);
  std::vector<StealthMetaAddress> targets{alice.meta()};
  fs::path path = fresh_path("synth_mismatch.reg");
  Registry reg = Registry::create(path, RLWE512, 1);
  CHECK_THROWS_AS((void)synth_fill(reg, 4, targets, 1, varied_seed(32, 1), RLWE512),
                  std::invalid_argument);
  Registry reg2 = Registry::create(fresh_path("synth_mismatch2.reg"), p, 1);
  CHECK_THROWS_AS((void)synth_fill(reg2, 4, targets, 1, varied_seed(32, 1), RLWE512),
                  std::invalid_argument);
}

TEST_CASE("corrupt registries are rejected with the failing record named") {
  const ParamSet& p = KYBER512;
  RecipientKeys keys = generate_meta(varied_seed(32, 13), p);
  fs::path path = fresh_path("donor.reg");
  Registry reg = Registry::create(path, p, 1);
  (void)reg.publish(make_announcement(keys, 0x71, 1, p));
  (void)reg.publish(make_announcement(keys, 0x72, 1, p));
  std::string good = slurp(path);
  const size_t header_end = good.find('\n') + 1;
  const size_t rec0_end = good.find('\n', header_end) + 1;

  auto write_and_open = [](const fs::path& where, const std::string& text) {
    std::ofstream out(where, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    return Registry::open(where);
  };
  auto check_open_fails = [&](const std::string& text, const std::string& needle) {
    fs::path where = fresh_path("corrupt.reg");
    CHECK_THROWS_WITH_AS((void)write_and_open(where, text), doctest::Contains(needle.c_str()),
                         std::runtime_error);
  };

  check_open_fails("", "missing header");
  check_open_fails("registry/999 params=kyber512 vt=1\n", "bad registry header");
  check_open_fails("pqsap-registry/1 params=nonesuch vt=1\n", "unknown parameter set");
  check_open_fails("pqsap-registry/1 params=kyber512 vt=7\n", "bad view tag width");

  // index out of sequence: drop record 0, keep record 1
  check_open_fails(good.substr(0, header_end) + good.substr(rec0_end), "index out of sequence");
  check_open_fails(good.substr(0, header_end) + good.substr(rec0_end), "record 0");

  // truncated base64 payload changes the decoded length
  std::string rec0 = good.substr(header_end, rec0_end - header_end);
  const size_t sp1 = rec0.find(' ');
  const size_t sp2 = rec0.find(' ', sp1 + 1);
  std::string shorter =
      rec0.substr(0, sp1 + 1) + rec0.substr(sp1 + 5, sp2 - sp1 - 5) + rec0.substr(sp2);
  check_open_fails(good.substr(0, header_end) + shorter, "record 0");

  // invalid base64 alphabet
  std::string garbled = rec0;
  garbled[sp1 + 1] = '!';
  check_open_fails(good.substr(0, header_end) + garbled, "record 0");

  // wrong tag length for the declared width
  std::string fat_tag = rec0.substr(0, rec0.size() - 1) + "ab\n";
  check_open_fails(good.substr(0, header_end) + fat_tag, "wrong view tag length");

  // trailing fields and blank lines
  check_open_fails(good.substr(0, header_end) + rec0.substr(0, rec0.size() - 1) + " extra\n",
                   "trailing data");
  check_open_fails(good.substr(0, header_end) + "\n" + good.substr(header_end), "empty line");

  // the pristine text still opens
  CHECK(write_and_open(fresh_path("pristine.reg"), good).size() == 2);
}

TEST_CASE("opening a missing file reports the path") {
  fs::path path = fresh_path("never_created.reg");
  CHECK_THROWS_WITH_AS((void)Registry::open(path), doctest::Contains("cannot open"),
                       std::runtime_error);
}

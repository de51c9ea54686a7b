#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "pqsap/zq.hpp"

using namespace pqsap;

namespace {

// Independent oracle: normalize into [0, q) by repeated shifts of q. Only
// usable for |r| within a few multiples of q; wide inputs are checked against
// the defining congruence instead.
int64_t mod_oracle_small(int64_t r, int64_t q) {
  while (r < 0) r += q;
  while (r >= q) r -= q;
  return r;
}

// Defining property of round-half-up: z is the unique integer with
// 2*den*z <= 2*num + den < 2*den*(z + 1).
bool is_round_half_up(uint64_t num, uint64_t den, uint64_t z) {
  const __int128 lhs = static_cast<__int128>(2) * den * z;
  const __int128 mid = static_cast<__int128>(2) * num + den;
  const __int128 rhs = static_cast<__int128>(2) * den * (z + 1);
  return lhs <= mid && mid < rhs;
}

}  // namespace

TEST_CASE("mod_reduce matches the shift oracle near zero") {
  for (uint32_t q : {2u, 3u, 17u, 256u, 3329u, 12289u}) {
    for (int64_t r = -3 * static_cast<int64_t>(q); r <= 3 * static_cast<int64_t>(q); ++r) {
      CAPTURE(r);
      CAPTURE(q);
      CHECK(mod_reduce(r, q) == mod_oracle_small(r, q));
    }
  }
}

TEST_CASE("mod_reduce satisfies the congruence for wide inputs") {
  std::mt19937_64 rng(0x5eed0001);
  for (int i = 0; i < 20000; ++i) {
    const int64_t r = static_cast<int64_t>(rng());
    const uint32_t q = static_cast<uint32_t>(rng() % 65535) + 1;
    const uint32_t m = mod_reduce(r, q);
    CHECK(m < q);
    CHECK(((static_cast<__int128>(r) - m) % q) == 0);
  }
  CHECK(mod_reduce(INT64_MAX, 3329) < 3329);
  CHECK(mod_reduce(INT64_MIN + 1, 3329) < 3329);
}

TEST_CASE("mod_reduce pinned values") {
  CHECK(mod_reduce(-1, 3329) == 3328);
  CHECK(mod_reduce(0, 3329) == 0);
  CHECK(mod_reduce(3329, 3329) == 0);
  CHECK(mod_reduce(6659, 3329) == 1);
  CHECK(mod_reduce(-3330, 3329) == 3328);
}

TEST_CASE("symmetric_mod lands in the centered range and keeps congruence") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 16u, 17u, 3329u, 12289u, 32768u}) {
    const int64_t lo = (q % 2 == 0) ? -(static_cast<int64_t>(q) / 2) + 1
                                    : -(static_cast<int64_t>(q) - 1) / 2;
    const int64_t hi = (q % 2 == 0) ? static_cast<int64_t>(q) / 2
                                    : (static_cast<int64_t>(q) - 1) / 2;
    for (int64_t r = -2 * static_cast<int64_t>(q); r <= 2 * static_cast<int64_t>(q); ++r) {
      const int32_t s = symmetric_mod(r, q);
      CAPTURE(r);
      CAPTURE(q);
      CHECK(s >= lo);
      CHECK(s <= hi);
      CHECK(mod_oracle_small(static_cast<int64_t>(s) - r, q) == 0);
    }
  }
}

TEST_CASE("symmetric_mod pinned values") {
  CHECK(symmetric_mod(3000, 3329) == -329);
  CHECK(symmetric_mod(1664, 3329) == 1664);
  CHECK(symmetric_mod(1665, 3329) == -1664);
  CHECK(symmetric_mod(2, 4) == 2);
  CHECK(symmetric_mod(3, 4) == -1);
  CHECK(symmetric_mod(-2, 4) == 2);
}

TEST_CASE("round_half_up satisfies its defining inequality") {
  SUBCASE("exhaustive small arguments") {
    for (uint64_t a = 0; a <= 300; ++a) {
      for (uint64_t b = 1; b <= 40; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(is_round_half_up(a, b, round_half_up(a, b)));
      }
    }
  }
  SUBCASE("random wide arguments") {
    std::mt19937_64 rng(0x5eed0002);
    for (int i = 0; i < 20000; ++i) {
      const uint64_t a = rng() % (uint64_t{1} << 40);
      const uint64_t b = rng() % (uint64_t{1} << 20) + 1;
      CHECK(is_round_half_up(a, b, round_half_up(a, b)));
    }
  }
  SUBCASE("ties round toward +inf") {
    CHECK(round_half_up(1, 2) == 1);
    CHECK(round_half_up(3, 2) == 2);
    CHECK(round_half_up(5, 2) == 3);
    CHECK(round_half_up(3329, 2) == 1665);
  }
}

TEST_CASE("compress agrees with the rounding definition for every x") {
  struct Config {
    uint32_t q;
    std::initializer_list<uint32_t> widths;
  };
  const Config configs[] = {
      {3329, {1, 4, 5, 10, 11}},
      {12289, {1, 4, 13}},
      {32768, {1, 4, 14}},
  };
  for (const auto& cfg : configs) {
    for (uint32_t d : cfg.widths) {
      const uint64_t two_d = uint64_t{1} << d;
      for (uint32_t x = 0; x < cfg.q; ++x) {
        const uint32_t y = compress(x, d, cfg.q);
        // the pre-reduction rounded value is either y or y + 2^d
        const bool ok = is_round_half_up(static_cast<uint64_t>(x) << d, cfg.q, y) ||
                        is_round_half_up(static_cast<uint64_t>(x) << d, cfg.q, y + two_d);
        CAPTURE(cfg.q);
        CAPTURE(d);
        CAPTURE(x);
        CHECK(y < two_d);
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("decompress agrees with the rounding definition for every y") {
  const std::pair<uint32_t, uint32_t> configs[] = {
      {3329, 1}, {3329, 4}, {3329, 10}, {3329, 11}, {12289, 13}, {32768, 14},
  };
  for (const auto& [q, d] : configs) {
    for (uint32_t y = 0; y < (uint32_t{1} << d); ++y) {
      const uint32_t x = decompress(y, d, q);
      CAPTURE(q);
      CAPTURE(d);
      CAPTURE(y);
      CHECK(x < q);
      // round(q*y / 2^d) < q holds for y < 2^d, so no reduction occurs
      CHECK(is_round_half_up(static_cast<uint64_t>(q) * y, uint64_t{1} << d, x));
    }
  }
}

TEST_CASE("compress/decompress round trip stays within the error bound") {
  for (uint32_t q : {3329u, 12289u}) {
    const uint32_t max_d = q == 3329 ? 11 : 13;
    for (uint32_t d = 1; d <= max_d; ++d) {
      const int64_t bound = max_roundtrip_error(d, q);
      for (uint32_t x = 0; x < q; ++x) {
        const uint32_t back = decompress(compress(x, d, q), d, q);
        const int64_t err = symmetric_mod(static_cast<int64_t>(back) - x, q);
        CAPTURE(q);
        CAPTURE(d);
        CAPTURE(x);
        CHECK(err <= bound);
        CHECK(err >= -bound);
      }
    }
  }
}

TEST_CASE("compress/decompress pinned values") {
  CHECK(compress(1664, 1, 3329) == 1);
  CHECK(compress(3328, 4, 3329) == 0);
  CHECK(decompress(1, 1, 3329) == 1665);
  CHECK(compress(0, 10, 3329) == 0);
  CHECK(decompress(0, 10, 3329) == 0);
}

TEST_CASE("max_roundtrip_error pinned values at q=3329") {
  CHECK(max_roundtrip_error(1, 3329) == 832);
  CHECK(max_roundtrip_error(4, 3329) == 104);
  CHECK(max_roundtrip_error(5, 3329) == 52);
  CHECK(max_roundtrip_error(10, 3329) == 2);
  CHECK(max_roundtrip_error(11, 3329) == 1);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS((void)mod_reduce(5, 0), std::domain_error);
  CHECK_THROWS_AS((void)symmetric_mod(5, 0), std::domain_error);
  CHECK_THROWS_AS((void)round_half_up(5, 0), std::domain_error);
  CHECK_THROWS_AS((void)compress(0, 0, 3329), std::domain_error);
  CHECK_THROWS_AS((void)compress(0, 12, 3329), std::domain_error);
  CHECK_THROWS_AS((void)compress(3329, 4, 3329), std::domain_error);
  CHECK_THROWS_AS((void)decompress(16, 4, 3329), std::domain_error);
  CHECK_THROWS_AS((void)decompress(0, 0, 3329), std::domain_error);
  CHECK_THROWS_AS((void)compress(0, 1, 1), std::domain_error);
}

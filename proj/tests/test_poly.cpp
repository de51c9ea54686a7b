#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pqsap/poly.hpp"
#include "pqsap/zq.hpp"

using namespace pqsap;

namespace {

// Independent negacyclic product oracle: accumulate a_i * b_j into slot
// (i + j) mod n with a sign flip whenever i + j wraps past n. Structured
// differently from the library path on purpose.
Poly mul_oracle(const Poly& a, const Poly& b, uint32_t q) {
  const size_t n = a.c.size();
  std::vector<int64_t> acc(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const int64_t term = static_cast<int64_t>(a.c[i]) * b.c[j] % q;
      if (i + j >= n) {
        acc[(i + j) - n] -= term;
      } else {
        acc[i + j] += term;
      }
    }
  }
  Poly r(n);
  for (size_t i = 0; i < n; ++i) r.c[i] = static_cast<uint16_t>(mod_reduce(acc[i], q));
  return r;
}

Poly random_poly(std::mt19937_64& rng, size_t n, uint32_t q) {
  Poly r(n);
  for (auto& c : r.c) c = static_cast<uint16_t>(rng() % q);
  return r;
}

}  // namespace

TEST_CASE("poly_add and poly_sub are inverse elementwise operations") {
  std::mt19937_64 rng(0x5eed0021);
  for (uint32_t q : {3329u, 12289u, 32768u, 65536u}) {
    Poly a = random_poly(rng, 64, q);
    Poly b = random_poly(rng, 64, q);
    CHECK(poly_sub(poly_add(a, b, q), b, q) == a);
    CHECK(poly_add(poly_sub(a, b, q), b, q) == a);
  }
}

TEST_CASE("multiplication by the constant one is the identity") {
  std::mt19937_64 rng(0x5eed0022);
  for (uint32_t q : {3329u, 12289u}) {
    Poly a = random_poly(rng, 256, q);
    Poly one(256);
    one.c[0] = 1;
    CHECK(poly_mul(a, one, q) == a);
    CHECK(poly_mul(one, a, q) == a);
  }
}

TEST_CASE("x^(n-1) * x wraps to -1") {
  for (uint32_t q : {3329u, 12289u}) {
    for (size_t n : {256u, 512u}) {
      Poly a(n);
      Poly b(n);
      a.c[n - 1] = 1;
      b.c[1] = 1;
      Poly prod = poly_mul(a, b, q);
      CHECK(prod.c[0] == q - 1);
      for (size_t i = 1; i < n; ++i) CHECK(prod.c[i] == 0);
    }
  }
}

TEST_CASE("schoolbook multiplication matches the independent oracle") {
  std::mt19937_64 rng(0x5eed0023);
  struct Cfg {
    uint32_t q;
    size_t n;
    int trials;
  };
  for (const Cfg& cfg : {Cfg{3329, 256, 40}, Cfg{12289, 512, 15}, Cfg{32768, 64, 40},
                         Cfg{12289, 256, 20}}) {
    for (int t = 0; t < cfg.trials; ++t) {
      Poly a = random_poly(rng, cfg.n, cfg.q);
      Poly b = random_poly(rng, cfg.n, cfg.q);
      CHECK(poly_mul_schoolbook(a, b, cfg.q) == mul_oracle(a, b, cfg.q));
    }
  }
}

TEST_CASE("fast path agrees with schoolbook bit for bit") {
  std::mt19937_64 rng(0x5eed0024);
  for (int t = 0; t < 200; ++t) {
    Poly a = random_poly(rng, 256, 3329);
    Poly b = random_poly(rng, 256, 3329);
    Poly fast = poly_mul(a, b, 3329);
    Poly slow = poly_mul_schoolbook(a, b, 3329);
    REQUIRE(fast == slow);
  }
}

TEST_CASE("fast path handles sparse and extreme inputs") {
  Poly a(256);
  Poly b(256);
  a.c[0] = 3328;
  a.c[255] = 3328;
  b.c[128] = 1664;
  CHECK(poly_mul(a, b, 3329) == poly_mul_schoolbook(a, b, 3329));
  Poly zero(256);
  CHECK(poly_mul(a, zero, 3329) == zero);
}

TEST_CASE("multiplication distributes over addition") {
  std::mt19937_64 rng(0x5eed0025);
  const uint32_t q = 3329;
  Poly a = random_poly(rng, 256, q);
  Poly b = random_poly(rng, 256, q);
  Poly c = random_poly(rng, 256, q);
  CHECK(poly_mul(a, poly_add(b, c, q), q) ==
        poly_add(poly_mul(a, b, q), poly_mul(a, c, q), q));
}

TEST_CASE("inf_norm uses the centered representative") {
  Poly p(8);
  CHECK(inf_norm(p, 3329) == 0);
  p.c[3] = 3000;  // centered: -329
  CHECK(inf_norm(p, 3329) == 329);
  p.c[5] = 1664;  // centered: 1664 (maximal positive)
  CHECK(inf_norm(p, 3329) == 1664);
  PolyVec v{p, Poly(8)};
  CHECK(inf_norm(v, 3329) == 1664);
}

TEST_CASE("vector add and sub operate componentwise") {
  std::mt19937_64 rng(0x5eed0026);
  const uint32_t q = 3329;
  PolyVec a{random_poly(rng, 32, q), random_poly(rng, 32, q)};
  PolyVec b{random_poly(rng, 32, q), random_poly(rng, 32, q)};
  PolyVec s = vec_add(a, b, q);
  for (size_t i = 0; i < a.size(); ++i) CHECK(s[i] == poly_add(a[i], b[i], q));
  CHECK(vec_sub(s, b, q) == a);
}

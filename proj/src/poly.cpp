#include "pqsap/poly.hpp"

#include <stdexcept>

#include "pqsap/zq.hpp"

namespace pqsap {

namespace {

void check_same_size(const Poly& a, const Poly& b, const char* op) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(op) + ": size mismatch");
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b, uint32_t q) {
  check_same_size(a, b, "poly_add");
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    uint32_t s = static_cast<uint32_t>(a.c[i]) + b.c[i];
    if (s >= q) s -= q;
    r.c[i] = static_cast<uint16_t>(s);
  }
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b, uint32_t q) {
  check_same_size(a, b, "poly_sub");
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    uint32_t s = static_cast<uint32_t>(a.c[i]) + q - b.c[i];
    if (s >= q) s -= q;
    r.c[i] = static_cast<uint16_t>(s);
  }
  return r;
}

Poly poly_mul_schoolbook(const Poly& a, const Poly& b, uint32_t q) {
  check_same_size(a, b, "poly_mul");
  const size_t n = a.size();
  // accumulate the 2n-1 convolution terms, then fold x^n = -1
  std::vector<int64_t> acc(2 * n - 1, 0);
  for (size_t i = 0; i < n; ++i) {
    const int64_t ai = a.c[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      acc[i + j] += ai * b.c[j];
    }
  }
  Poly r(n);
  for (size_t i = 0; i < n; ++i) {
    int64_t v = acc[i] - (i + n < 2 * n - 1 ? acc[i + n] : 0);
    r.c[i] = static_cast<uint16_t>(mod_reduce(v, q));
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t q) {
  if (detail::ntt_eligible(a.size(), q)) {
    detail::NttPoly acc(a.size(), 0);
    detail::basemul_acc(acc, detail::ntt(a), detail::ntt(b));
    return detail::intt(acc);
  }
  return poly_mul_schoolbook(a, b, q);
}

PolyVec vec_add(const PolyVec& a, const PolyVec& b, uint32_t q) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = poly_add(a[i], b[i], q);
  return r;
}

PolyVec vec_sub(const PolyVec& a, const PolyVec& b, uint32_t q) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = poly_sub(a[i], b[i], q);
  return r;
}

uint32_t inf_norm(const Poly& a, uint32_t q) {
  uint32_t m = 0;
  for (uint16_t v : a.c) {
    int32_t s = symmetric_mod(v, q);
    uint32_t mag = static_cast<uint32_t>(s < 0 ? -s : s);
    if (mag > m) m = mag;
  }
  return m;
}

uint32_t inf_norm(const PolyVec& a, uint32_t q) {
  uint32_t m = 0;
  for (const Poly& p : a) {
    uint32_t v = inf_norm(p, q);
    if (v > m) m = v;
  }
  return m;
}

}  // namespace pqsap

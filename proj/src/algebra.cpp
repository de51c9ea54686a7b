#include "pqsap/algebra.hpp"

#include <stdexcept>

#include "pqsap/sampling.hpp"
#include "pqsap/zq.hpp"

namespace pqsap {

namespace {

void check_vec(const PolyVec& x, const ParamSet& p, const char* op) {
  if (x.size() != p.k) throw std::invalid_argument(std::string(op) + ": wrong rank");
  for (const Poly& e : x) {
    if (e.size() != p.n) throw std::invalid_argument(std::string(op) + ": wrong degree");
  }
}

/** out[i] += A[l][i] * s (axpy over one unstructured matrix row). */
void scalar_axpy(std::vector<uint32_t>& out, const uint16_t* row, uint32_t s, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    out[i] += row[i] * s;  // wraps mod 2^32; q | 2^32 keeps residues exact
  }
}

PolyVec mat_mul_scalar(const PublicMatrix& A, const PolyVec& x, bool transpose) {
  const ParamSet& p = *A.params;
  const size_t n = p.n;
  const uint32_t mask = p.q - 1;  // power-of-two modulus
  PolyVec out(p.k, Poly(n));
  std::vector<uint32_t> acc(n);
  for (size_t col = 0; col < p.k; ++col) {
    const Poly& xc = x[col];
    std::fill(acc.begin(), acc.end(), 0);
    if (transpose) {
      for (size_t l = 0; l < n; ++l) {
        uint32_t s = xc.c[l];
        if (s != 0) scalar_axpy(acc, &A.scalar[l * n], s, n);
      }
    } else {
      for (size_t i = 0; i < n; ++i) {
        const uint16_t* row = &A.scalar[i * n];
        uint32_t sum = 0;
        for (size_t l = 0; l < n; ++l) sum += row[l] * static_cast<uint32_t>(xc.c[l]);
        acc[i] = sum;
      }
    }
    for (size_t i = 0; i < n; ++i) out[col].c[i] = static_cast<uint16_t>(acc[i] & mask);
  }
  return out;
}

PolyVec mat_mul_ring(const PublicMatrix& A, const PolyVec& x, bool transpose) {
  const ParamSet& p = *A.params;
  const size_t k = p.k;
  PolyVec out(k);
  if (detail::ntt_eligible(p.n, p.q)) {
    std::vector<detail::NttPoly> xh(k);
    for (size_t l = 0; l < k; ++l) xh[l] = detail::ntt(x[l]);
    for (size_t i = 0; i < k; ++i) {
      detail::NttPoly acc(p.n, 0);
      for (size_t l = 0; l < k; ++l) {
        const Poly& a = A.ring[transpose ? l * k + i : i * k + l];
        detail::basemul_acc(acc, detail::ntt(a), xh[l]);
      }
      out[i] = detail::intt(acc);
    }
    return out;
  }
  for (size_t i = 0; i < k; ++i) {
    Poly acc(p.n);
    for (size_t l = 0; l < k; ++l) {
      const Poly& a = A.ring[transpose ? l * k + i : i * k + l];
      acc = poly_add(acc, poly_mul_schoolbook(a, x[l], p.q), p.q);
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace

PublicMatrix expand_public_matrix(ByteView rho, const ParamSet& p) {
  if (rho.size() != kSeedBytes) throw std::invalid_argument("expand_public_matrix: bad seed size");
  PublicMatrix A;
  A.params = &p;
  if (p.variant == Variant::LWE) {
    A.scalar.resize(size_t{p.n} * p.n);
    Poly row;
    for (uint32_t i = 0; i < p.n; ++i) {
      XofStream stream(rho, Domain::Matrix, static_cast<uint16_t>(i));
      row = uniform_poly(stream, p.n, p.q);
      std::copy(row.c.begin(), row.c.end(), A.scalar.begin() + size_t{i} * p.n);
    }
  } else {
    A.ring.resize(size_t{p.k} * p.k);
    for (uint32_t i = 0; i < p.k; ++i) {
      for (uint32_t j = 0; j < p.k; ++j) {
        XofStream stream(rho, {static_cast<uint8_t>(Domain::Matrix), static_cast<uint8_t>(i),
                               static_cast<uint8_t>(j)});
        A.ring[size_t{i} * p.k + j] = uniform_poly(stream, p.n, p.q);
      }
    }
  }
  return A;
}

PolyVec mat_mul(const PublicMatrix& A, const PolyVec& x, bool transpose) {
  if (A.params == nullptr) throw std::invalid_argument("mat_mul: empty matrix");
  check_vec(x, *A.params, "mat_mul");
  return A.params->variant == Variant::LWE ? mat_mul_scalar(A, x, transpose)
                                           : mat_mul_ring(A, x, transpose);
}

Poly inner_pairs(const PolyVec& a, const PolyVec& b, const ParamSet& p) {
  check_vec(a, p, "inner_pairs");
  check_vec(b, p, "inner_pairs");
  if (p.variant == Variant::LWE) {
    Poly out(p.v_len());
    const uint32_t mask = p.q - 1;
    for (size_t i = 0; i < p.k; ++i) {
      for (size_t j = 0; j < p.k; ++j) {
        uint32_t sum = 0;
        const uint16_t* ai = a[i].c.data();
        const uint16_t* bj = b[j].c.data();
        for (size_t l = 0; l < p.n; ++l) sum += ai[l] * static_cast<uint32_t>(bj[l]);
        out.c[i * p.k + j] = static_cast<uint16_t>(sum & mask);
      }
    }
    return out;
  }
  if (detail::ntt_eligible(p.n, p.q)) {
    detail::NttPoly acc(p.n, 0);
    for (size_t i = 0; i < p.k; ++i) {
      detail::basemul_acc(acc, detail::ntt(a[i]), detail::ntt(b[i]));
    }
    return detail::intt(acc);
  }
  Poly acc(p.n);
  for (size_t i = 0; i < p.k; ++i) {
    acc = poly_add(acc, poly_mul_schoolbook(a[i], b[i], p.q), p.q);
  }
  return acc;
}

Poly compress_poly(const Poly& a, uint32_t d, const ParamSet& p) {
  if (d >= p.full_bits()) return a;  // full width: no compression
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r.c[i] = static_cast<uint16_t>(compress(a.c[i], d, p.q));
  }
  return r;
}

Poly decompress_poly(const Poly& a, uint32_t d, const ParamSet& p) {
  if (d >= p.full_bits()) return a;
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r.c[i] = static_cast<uint16_t>(decompress(a.c[i], d, p.q));
  }
  return r;
}

PolyVec compress_vec(const PolyVec& a, uint32_t d, const ParamSet& p) {
  if (d >= p.full_bits()) return a;
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = compress_poly(a[i], d, p);
  return r;
}

PolyVec decompress_vec(const PolyVec& a, uint32_t d, const ParamSet& p) {
  if (d >= p.full_bits()) return a;
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = decompress_poly(a[i], d, p);
  return r;
}

}  // namespace pqsap

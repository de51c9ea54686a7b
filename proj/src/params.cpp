#include "pqsap/params.hpp"

#include <stdexcept>
#include <string>

namespace pqsap {

const ParamSet* find_params(std::string_view name) {
  for (const ParamSet& p : kParamSets) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void validate(const ParamSet& p) {
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string(p.name) + ": " + what);
  };
  if (p.n == 0 || p.k == 0 || p.q < 2) fail("degenerate dimensions");
  if (p.eta1 == 0 || p.eta2 == 0) fail("noise width must be positive");
  if (p.d_t == 0 || p.d_u == 0 || p.d_v == 0) fail("zero serialization width");
  if (p.d_t > p.full_bits() || p.d_u > p.full_bits() || p.d_v > p.full_bits()) {
    fail("compression width exceeds coefficient width");
  }
  switch (p.variant) {
    case Variant::MLWE:
      if (p.n != 256 || p.q != 3329) fail("module sets are fixed at n=256, q=3329");
      if (!p.compresses_t() || !p.compresses_u() || !p.compresses_v()) {
        fail("module sets compress all transmitted values");
      }
      break;
    case Variant::RLWE:
      if (p.k != 1) fail("ring sets have rank 1");
      if (p.n % 256 != 0) fail("ring degree must be a multiple of 256");
      break;
    case Variant::LWE:
      if (p.k != 8) fail("unstructured sets carry 8 secret columns");
      if ((p.q & (p.q - 1)) != 0) fail("unstructured sets use a power-of-two modulus");
      break;
  }
  // whole-byte packing for every transmitted component
  if ((p.vec_coeffs() * p.d_t) % 8 != 0 || (p.vec_coeffs() * p.d_u) % 8 != 0 ||
      (size_t{p.v_len()} * p.d_v) % 8 != 0 || (p.vec_coeffs() * p.full_bits()) % 8 != 0) {
    fail("components must pack to whole bytes");
  }
}

}  // namespace pqsap

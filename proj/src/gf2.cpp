#include "nrs/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace nrs {

namespace {
constexpr int kTableDegreeLimit = 16;
}

std::uint64_t GF2Field::poly_mod(std::uint64_t a, std::uint64_t b) {
  while (a) {
    int sh = (int)std::bit_width(a) - (int)std::bit_width(b);
    if (sh < 0) break;
    a ^= b << sh;
  }
  return a;
}

bool GF2Field::is_irreducible(std::uint64_t p) {
  int deg = (int)std::bit_width(p) - 1;
  for (int d = 1; d <= deg / 2; ++d)
    for (std::uint64_t div = 1ull << d; div < (2ull << d); ++div)
      if (poly_mod(p, div) == 0) return false;
  return true;
}

GF2Field::GF2Field(int ell) : ell_(ell) {
  if (ell < 1 || ell > 32)
    throw std::invalid_argument("GF2Field: degree must be in [1, 32]");
  // Reduction polynomials need a nonzero constant term, hence odd masks.
  for (std::uint64_t cand = (1ull << ell) | 1; cand < (2ull << ell); cand += 2) {
    if (is_irreducible(cand)) {
      poly_ = cand;
      break;
    }
  }
  if (ell_ <= kTableDegreeLimit) build_tables();
}

GFElem GF2Field::element(std::uint64_t bits) const {
  if (bits >= order())
    throw std::invalid_argument("GF2Field: element bits out of range");
  return GFElem{(std::uint32_t)bits};
}

std::uint64_t GF2Field::mul_bits(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    a <<= 1;
    b >>= 1;
  }
  while (true) {
    int d = (int)std::bit_width(acc) - 1;
    if (d < ell_) break;
    acc ^= poly_ << (d - ell_);
  }
  return acc;
}

void GF2Field::build_tables() {
  const std::uint32_t qm1 = (std::uint32_t)(order() - 1);
  log_.assign((std::size_t)order(), 0);
  exp_.assign((std::size_t)qm1 * 2, 0);
  for (std::uint64_t g = 1; g < order(); ++g) {
    std::uint64_t x = 1;
    std::uint32_t i = 0;
    for (; i < qm1; ++i) {
      exp_[i] = (std::uint32_t)x;
      x = mul_bits(x, g);
      if (x == 1) {
        ++i;
        break;
      }
    }
    if (i != qm1 || x != 1) continue;  // g is not a generator
    for (std::uint32_t j = 0; j < qm1; ++j) {
      log_[exp_[j]] = j;
      exp_[j + qm1] = exp_[j];
    }
    return;
  }
  // Unreachable: the multiplicative group of a finite field is cyclic.
  throw std::logic_error("GF2Field: no generator found");
}

GFElem GF2Field::mul(GFElem a, GFElem b) const {
  if (!log_.empty()) {
    if (a.bits == 0 || b.bits == 0) return GFElem{0};
    return GFElem{exp_[(std::size_t)log_[a.bits] + log_[b.bits]]};
  }
  return GFElem{(std::uint32_t)mul_bits(a.bits, b.bits)};
}

GFElem GF2Field::inv(GFElem a) const {
  if (a.bits == 0) throw std::domain_error("GF2Field: inverse of zero");
  if (!log_.empty()) {
    std::uint32_t qm1 = (std::uint32_t)(order() - 1);
    return GFElem{exp_[qm1 - log_[a.bits]]};
  }
  // a^(2^ell - 2) via square and multiply.
  std::uint64_t result = 1, base = a.bits;
  std::uint64_t e = order() - 2;
  while (e) {
    if (e & 1) result = mul_bits(result, base);
    base = mul_bits(base, base);
    e >>= 1;
  }
  return GFElem{(std::uint32_t)result};
}

}  // namespace nrs

#pragma once

#include <cstdint>
#include <vector>

namespace nrs {

// Element of GF(2^ell): an ell-bit coefficient mask.
struct GFElem {
  std::uint32_t bits = 0;
  bool operator==(const GFElem&) const = default;
};

// GF(2^ell) for 1 <= ell <= 32. The reduction polynomial is the smallest
// odd coefficient mask of degree ell with no divisor of degree in
// [1, ell/2] (trial division certificate). Fields up to degree 16 carry
// discrete log/antilog tables; larger fields multiply by shift-and-add.
// Immutable after construction, safe to share across threads.
class GF2Field {
public:
  explicit GF2Field(int ell);

  int degree() const { return ell_; }
  std::uint64_t poly() const { return poly_; }
  std::uint64_t order() const { return 1ull << ell_; }

  GFElem element(std::uint64_t bits) const;  // validates bits < 2^ell

  GFElem add(GFElem a, GFElem b) const { return GFElem{a.bits ^ b.bits}; }
  GFElem mul(GFElem a, GFElem b) const;
  GFElem inv(GFElem a) const;  // throws std::domain_error on zero
  GFElem div(GFElem a, GFElem b) const { return mul(a, inv(b)); }

  // Remainder of a modulo b over GF(2); b must be nonzero.
  static std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b);
  // No divisor of degree in [1, deg/2]; checked by trial division over all
  // candidate masks of those degrees.
  static bool is_irreducible(std::uint64_t p);

private:
  std::uint64_t mul_bits(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  int ell_ = 0;
  std::uint64_t poly_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // doubled so mul never reduces the sum
};

}  // namespace nrs

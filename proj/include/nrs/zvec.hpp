#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nrs {

// Residue vector over Z_r^k. Arithmetic requires matching modulus and
// dimension; mismatches throw std::invalid_argument.
class ZVector {
public:
  ZVector(int modulus, std::vector<int> coords)
      : r_(modulus), c_(std::move(coords)) {
    if (r_ < 2) throw std::invalid_argument("ZVector: modulus must be >= 2");
    if (c_.empty()) throw std::invalid_argument("ZVector: dimension must be >= 1");
    for (int x : c_)
      if (x < 0 || x >= r_)
        throw std::invalid_argument("ZVector: coordinate out of range");
  }

  static ZVector zero(int modulus, int dim) {
    return ZVector(modulus, std::vector<int>((std::size_t)dim, 0));
  }

  int modulus() const { return r_; }
  int dim() const { return (int)c_.size(); }
  const std::vector<int>& coords() const { return c_; }
  int operator[](int i) const { return c_[(std::size_t)i]; }

  bool operator==(const ZVector& o) const {
    return r_ == o.r_ && c_ == o.c_;
  }
  bool operator!=(const ZVector& o) const { return !(*this == o); }

  friend ZVector operator+(const ZVector& a, const ZVector& b) {
    if (a.r_ != b.r_ || a.c_.size() != b.c_.size())
      throw std::invalid_argument("ZVector: shape mismatch in addition");
    std::vector<int> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = (a.c_[i] + b.c_[i]) % a.r_;
    return ZVector(a.r_, std::move(out));
  }

  // Scalar multiple; any integer scalar is reduced mod r first.
  friend ZVector operator*(long long c, const ZVector& v) {
    long long cr = c % v.r_;
    if (cr < 0) cr += v.r_;
    std::vector<int> out(v.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = (int)((cr * v.c_[i]) % v.r_);
    return ZVector(v.r_, std::move(out));
  }

private:
  int r_;
  std::vector<int> c_;
};

// Least t >= 1 with t*v = 0, i.e. lcm over coordinates of r / gcd(coord, r).
inline int additive_order(const ZVector& v) {
  long long ord = 1;
  for (int x : v.coords())
    ord = std::lcm(ord, (long long)v.modulus() / std::gcd((long long)x, (long long)v.modulus()));
  return (int)ord;
}

// Base-r encoding, first coordinate most significant.
inline std::int64_t vector_to_id(const ZVector& v) {
  std::int64_t id = 0;
  for (int i = 0; i < v.dim(); ++i) id = id * v.modulus() + v[i];
  return id;
}

inline ZVector id_to_vector(std::int64_t id, int r, int k) {
  if (r < 2 || k < 1) throw std::invalid_argument("id_to_vector: bad shape");
  std::vector<int> c((std::size_t)k);
  for (int i = k - 1; i >= 0; --i) {
    c[(std::size_t)i] = (int)(id % r);
    id /= r;
  }
  if (id != 0) throw std::invalid_argument("id_to_vector: id out of range");
  return ZVector(r, std::move(c));
}

}  // namespace nrs

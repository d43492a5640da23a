#include <doctest.h>

#include <set>
#include <stdexcept>

#include "nrs/rng.hpp"
#include "nrs/zvec.hpp"

using nrs::ZVector;

TEST_CASE("vector addition small cases") {
  CHECK(ZVector(3, {1, 2}) + ZVector(3, {2, 2}) == ZVector(3, {0, 1}));
  CHECK(ZVector(6, {5}) + ZVector(6, {1}) == ZVector(6, {0}));
  CHECK(ZVector(6, {3, 4}) + ZVector(6, {4, 5}) == ZVector(6, {1, 3}));
}

TEST_CASE("vector addition shape mismatch") {
  CHECK_THROWS_AS(ZVector(3, {1, 2}) + ZVector(3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(ZVector(3, {1, 2}) + ZVector(4, {1, 2}), std::invalid_argument);
}

TEST_CASE("scalar multiples small cases") {
  CHECK(0 * ZVector(6, {2, 5}) == ZVector(6, {0, 0}));
  CHECK(2 * ZVector(3, {1, 2}) == ZVector(3, {2, 1}));
  CHECK(5 * ZVector(6, {1, 3}) == ZVector(6, {5, 3}));
}

TEST_CASE("scalar multiples reduce the scalar first") {
  const ZVector v(6, {1, 3});
  CHECK(11 * v == 5 * v);
  CHECK(-1 * v == 5 * v);
  CHECK(-7 * v == 5 * v);
  CHECK(600000000007LL * v == 1 * v);
}

TEST_CASE("additive order small cases") {
  CHECK(additive_order(ZVector(6, {0, 0})) == 1);
  CHECK(additive_order(ZVector(6, {2})) == 3);
  CHECK(additive_order(ZVector(6, {2, 3})) == 6);
}

TEST_CASE("additive order matches iteration count exhaustively") {
  for (int r = 2; r <= 6; ++r) {
    for (int k = 1; k <= 3; ++k) {
      long long total = 1;
      for (int i = 0; i < k; ++i) total *= r;
      for (long long id = 0; id < total; ++id) {
        const ZVector v = nrs::id_to_vector(id, r, k);
        // count distinct multiples 0*v, 1*v, ... directly
        std::set<long long> seen;
        ZVector acc = ZVector::zero(r, k);
        for (int i = 0; i < r; ++i) {
          seen.insert(nrs::vector_to_id(acc));
          acc = acc + v;
        }
        CHECK(additive_order(v) == (int)seen.size());
        CHECK(acc == ZVector::zero(r, k));
      }
    }
  }
}

TEST_CASE("arithmetic agrees with a plain modular oracle") {
  nrs::Rng rng(20240811);
  for (int trial = 0; trial < 10000; ++trial) {
    const int r = 2 + (int)rng.below(29);
    const int k = 1 + (int)rng.below(6);
    std::vector<int> a((std::size_t)k), b((std::size_t)k);
    for (int i = 0; i < k; ++i) {
      a[(std::size_t)i] = (int)rng.below((std::uint64_t)r);
      b[(std::size_t)i] = (int)rng.below((std::uint64_t)r);
    }
    const long long c = (long long)rng.below(1000) - 500;
    const ZVector va(r, a), vb(r, b);

    const ZVector sum = va + vb;
    const ZVector scaled = c * va;
    for (int i = 0; i < k; ++i) {
      CHECK(sum[i] == (a[(std::size_t)i] + b[(std::size_t)i]) % r);
      long long want = ((c % r) * a[(std::size_t)i]) % r;
      if (want < 0) want += r;
      CHECK((long long)scaled[i] == want);
    }
  }
}

TEST_CASE("vector ids are big endian and round trip") {
  CHECK(nrs::vector_to_id(ZVector(6, {2, 3})) == 15);
  CHECK(nrs::vector_to_id(ZVector(3, {1, 0, 2})) == 11);
  CHECK(nrs::id_to_vector(15, 6, 2) == ZVector(6, {2, 3}));
  for (int r = 2; r <= 7; ++r)
    for (int k = 1; k <= 3; ++k) {
      long long total = 1;
      for (int i = 0; i < k; ++i) total *= r;
      for (long long id = 0; id < total; ++id)
        CHECK(nrs::vector_to_id(nrs::id_to_vector(id, r, k)) == id);
    }
  CHECK_THROWS_AS(nrs::id_to_vector(36, 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(nrs::id_to_vector(-1, 6, 2), std::invalid_argument);
}

TEST_CASE("constructor validates entries") {
  CHECK_THROWS_AS(ZVector(1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(ZVector(6, {6}), std::invalid_argument);
  CHECK_THROWS_AS(ZVector(6, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(ZVector(6, std::vector<int>{}), std::invalid_argument);
}

#include "doctest.h"
#include "pauligeo/errors.hpp"
#include "pauligeo/matrix_oracle.hpp"

using namespace pauligeo;

TEST_CASE("base matrices") {
  const auto y = realize(PauliWord::parse("Y"));
  CHECK(y.entry(0, 1) == -1);
  CHECK(y.entry(1, 0) == 1);
  CHECK(y.entry(0, 0) == 0);
  CHECK(y * y == -SignedPermMatrix::identity(2));
  const auto x = realize(PauliWord::parse("X"));
  const auto z = realize(PauliWord::parse("Z"));
  CHECK(x * x == SignedPermMatrix::identity(2));
  CHECK(z * z == SignedPermMatrix::identity(2));
  CHECK(x * z == y);
  CHECK(z * x == -y);
}

TEST_CASE("kronecker layout") {
  const auto xz = realize(PauliWord::parse("XZ"));
  CHECK(xz.size() == 4);
  // X (x) Z: block [[0, Z], [Z, 0]]
  CHECK(xz.entry(2, 0) == 1);
  CHECK(xz.entry(3, 1) == -1);
  CHECK(xz.entry(0, 2) == 1);
  CHECK(xz.entry(1, 3) == -1);
  CHECK(kronecker(realize(PauliWord::parse("X")), realize(PauliWord::parse("Z"))) == xz);
}

TEST_CASE("decode") {
  const auto [s, w] = decode(realize(PauliWord::parse("YXZI")), 4);
  CHECK(s == 1);
  CHECK(w.str() == "YXZI");
  const auto [s2, w2] = decode(-realize(PauliWord::parse("IZ")), 2);
  CHECK(s2 == -1);
  CHECK(w2.str() == "IZ");
  // 3-cycle on 4 basis vectors is not a Pauli word
  CHECK_THROWS_AS(decode(SignedPermMatrix({1, 2, 0, 3}, {1, 1, 1, 1}), 2), ConsistencyError);
}

TEST_CASE("oracle predicates") {
  CHECK(oracle_symmetric(PauliWord::parse("XYYZ")));
  CHECK_FALSE(oracle_symmetric(PauliWord::parse("IYZX")));
  CHECK(oracle_commutes(PauliWord::parse("XX"), PauliWord::parse("ZZ")));
  CHECK_FALSE(oracle_commutes(PauliWord::parse("XI"), PauliWord::parse("ZI")));
  CHECK(oracle_product(PauliWord::parse("XZ"), PauliWord::parse("ZZ")).str() == "YI");
}

TEST_CASE("agreement with the bit codec") {
  for (int n = 2; n <= 3; ++n) {
    const auto r = check_oracle_agreement(n, true, 0);
    CHECK(r.mismatches == 0);
    const std::size_t words = (std::size_t{1} << (2 * n)) - 1;
    CHECK(r.words_checked == words);
    CHECK(r.pairs_checked == words * (words - 1) / 2);
    CHECK(r.products_checked == words * words);
  }
  const auto r4 = check_oracle_agreement(4, false, 5000, 42);
  CHECK(r4.mismatches == 0);
  CHECK(r4.pairs_checked == 32385);
  CHECK(r4.products_checked == 5000);
}

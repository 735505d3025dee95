#include "doctest.h"
#include "torsionlab/error.hpp"
#include "torsionlab/matrix.hpp"

using namespace torsionlab;

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(5);
  CHECK(f.add(f.from_int(3), f.from_int(4)) == f.from_int(2));
  CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))) == f.one());
  CHECK(f.from_int(-1) == f.from_int(4));
  CHECK(f.elements().size() == 5);
  CHECK_THROWS_AS(f.inv(f.zero()), Error);
}

TEST_CASE("non-prime characteristic is rejected") {
  try {
    Field::prime(4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrimeCharacteristic);
  }
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("rational arithmetic stays reduced") {
  Field q = Field::rationals();
  Scalar half = q.div(q.one(), q.from_int(2));
  Scalar third = q.div(q.one(), q.from_int(3));
  Scalar s = q.add(half, third);
  CHECK(s.num == 5);
  CHECK(s.den == 6);
  CHECK(q.mul(q.from_int(-4), q.div(q.one(), q.from_int(6))) == q.div(q.from_int(-2), q.from_int(3)));
  CHECK(q.to_string(s) == "5/6");
}

TEST_CASE("rank, kernels and inverse over F_2") {
  Field f = Field::prime(2);
  Matrix m = Matrix::from_ints(f, 3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1});
  CHECK(rank(m) == 2);
  Matrix k = left_kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK((k * m).is_zero());
  Matrix r = right_kernel(m);
  REQUIRE(r.rows() == 1);
  CHECK((m * r.transpose()).is_zero());
  Matrix g = Matrix::from_ints(f, 2, 2, {1, 1, 0, 1});
  CHECK((g * inverse(g)).is_identity());
  CHECK_FALSE(is_invertible(m));
}

TEST_CASE("nilpotency and stable powers") {
  Field f = Field::prime(3);
  Matrix shift = Matrix::from_ints(f, 3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(is_nilpotent(shift));
  CHECK(stable_power(shift).is_zero());
  Matrix mixed = Matrix::from_ints(f, 2, 2, {1, 0, 0, 0});
  CHECK_FALSE(is_nilpotent(mixed));
  CHECK(rank(stable_power(mixed)) == 1);
}

TEST_CASE("subspace operations") {
  Field f = Field::prime(2);
  Subspace a = Subspace::span(Matrix::from_ints(f, 1, 3, {1, 1, 0}), 3);
  Subspace b = Subspace::span(Matrix::from_ints(f, 1, 3, {0, 1, 1}), 3);
  CHECK(a.sum(b).dim() == 2);
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.sum(b).contains(Matrix::from_ints(f, 1, 3, {1, 0, 1})));
  CHECK(a.complement_basis().rows() == 2);
  Matrix q = a.quotient_map();
  CHECK(q.cols() == 2);
  CHECK((a.basis() * q).is_zero());
  CHECK(Subspace::whole(f, 3).dim() == 3);
}

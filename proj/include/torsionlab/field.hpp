#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torsionlab {

// An exact field element. Over a prime field only `num` is used and is kept
// in [0, p); over the rationals the pair is a reduced fraction with den > 0.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

bool is_prime(std::int64_t n);

// Either a prime field F_p or the rationals (characteristic 0). All
// arithmetic is exact; rational overflow of 64-bit parts throws.
class Field {
 public:
  Field() : p_(2) {}

  static Field prime(std::int64_t p);
  static Field rationals() { return Field(0, Tag{}); }
  // 0 selects the rationals.
  static Field with_characteristic(std::int64_t p) {
    return p == 0 ? rationals() : prime(p);
  }

  std::int64_t characteristic() const noexcept { return p_; }
  bool is_finite() const noexcept { return p_ != 0; }

  Scalar zero() const noexcept { return Scalar{0, 1}; }
  Scalar one() const noexcept { return Scalar{1, 1}; }
  Scalar from_int(std::int64_t v) const;

  bool is_zero(const Scalar& a) const noexcept { return a.num == 0; }
  bool is_one(const Scalar& a) const noexcept {
    return a.num == 1 && a.den == 1;
  }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // All p elements of a prime field, in the order 0, 1, ..., p-1.
  std::vector<Scalar> elements() const;

  std::string to_string(const Scalar& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  struct Tag {};
  Field(std::int64_t p, Tag) : p_(p) {}

  Scalar normalize(__int128 num, __int128 den) const;

  std::int64_t p_;
};

}  // namespace torsionlab

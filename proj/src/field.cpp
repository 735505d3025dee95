#include "torsionlab/field.hpp"

#include <numeric>

#include "torsionlab/error.hpp"

namespace torsionlab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p) || p > (std::int64_t{1} << 31)) {
    throw Error(ErrorCode::NonPrimeCharacteristic,
                "characteristic " + std::to_string(p) +
                    " is not a supported prime");
  }
  return Field(p, Tag{});
}

Scalar Field::from_int(std::int64_t v) const {
  if (p_ != 0) {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return Scalar{r, 1};
  }
  return Scalar{v, 1};
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);

}  // namespace

Scalar Field::normalize(__int128 num, __int128 den) const {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return zero();
  __int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num > kMax || num < -kMax || den > kMax) {
    throw Error(ErrorCode::ArithmeticOverflow,
                "rational entry exceeds 64-bit range");
  }
  return Scalar{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ != 0) {
    std::int64_t r = a.num + b.num;
    if (r >= p_) r -= p_;
    return Scalar{r, 1};
  }
  if (a.den == 1 && b.den == 1) {
    return normalize(static_cast<__int128>(a.num) + b.num, 1);
  }
  return normalize(static_cast<__int128>(a.num) * b.den +
                       static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  return add(a, neg(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ != 0) {
    return Scalar{static_cast<std::int64_t>(
                      (static_cast<__int128>(a.num) * b.num) % p_),
                  1};
  }
  if (a.num == 0 || b.num == 0) return zero();
  return normalize(static_cast<__int128>(a.num) * b.num,
                   static_cast<__int128>(a.den) * b.den);
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ != 0) return Scalar{a.num == 0 ? 0 : p_ - a.num, 1};
  return Scalar{-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const {
  if (a.num == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (p_ != 0) {
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a.num;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return Scalar{t, 1};
  }
  return normalize(a.den, a.num);
}

std::vector<Scalar> Field::elements() const {
  std::vector<Scalar> out;
  if (p_ == 0) return out;
  out.reserve(static_cast<std::size_t>(p_));
  for (std::int64_t v = 0; v < p_; ++v) out.push_back(Scalar{v, 1});
  return out;
}

std::string Field::to_string(const Scalar& a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace torsionlab

#pragma once

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqsub::exact {

using BigInt = boost::multiprecision::cpp_int;

/// An element p/q of Q/Z, standing for the root of unity exp(2 pi i p/q).
///
/// Always reduced with 0 <= p < q; the zero angle is 0/1. Addition of angles
/// is multiplication of the roots of unity they denote.
class RatAngle {
 public:
  constexpr RatAngle() = default;
  RatAngle(std::int64_t num, std::int64_t den);

  static RatAngle zero() { return {}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  /// Multiplicative order of the denoted root of unity.
  std::int64_t order() const { return den_; }

  RatAngle operator-() const;
  RatAngle& operator+=(const RatAngle& o);
  RatAngle& operator-=(const RatAngle& o);
  friend RatAngle operator+(RatAngle a, const RatAngle& b) { return a += b; }
  friend RatAngle operator-(RatAngle a, const RatAngle& b) { return a -= b; }

  RatAngle times(std::int64_t k) const;
  RatAngle times(const BigInt& k) const;
  /// One preimage under multiplication by s > 0: the angle p/(q s).
  RatAngle divided_by(std::int64_t s) const;

  friend bool operator==(const RatAngle&, const RatAngle&) = default;
  /// Orders by the rational value p/q in [0,1).
  friend std::strong_ordering operator<=>(const RatAngle& a, const RatAngle& b);

  std::string str() const;
  static RatAngle parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RatAngle& a);

using AngleVector = std::vector<RatAngle>;

/// lcm of the denominators, 1 for an empty range.
std::int64_t common_denominator(const AngleVector& v);

}  // namespace eqsub::exact

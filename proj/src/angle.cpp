#include "eqsub/angle.hpp"

#include <charconv>
#include <numeric>

#include "eqsub/error.hpp"

namespace eqsub::exact {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l > INT64_MAX / 4) throw Error(Errc::OutOfRange, "angle denominator overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace

RatAngle::RatAngle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::OutOfRange, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = mod_floor(num, den);
  std::int64_t g = std::gcd(num, den);
  if (num == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

RatAngle RatAngle::operator-() const { return RatAngle(den_ - num_, den_); }

RatAngle& RatAngle::operator+=(const RatAngle& o) {
  std::int64_t l = checked_lcm(den_, o.den_);
  __int128 n = static_cast<__int128>(num_) * (l / den_) + static_cast<__int128>(o.num_) * (l / o.den_);
  *this = RatAngle(static_cast<std::int64_t>(n % l), l);
  return *this;
}

RatAngle& RatAngle::operator-=(const RatAngle& o) { return *this += -o; }

RatAngle RatAngle::times(std::int64_t k) const {
  __int128 n = static_cast<__int128>(num_) * mod_floor(k, den_);
  return RatAngle(static_cast<std::int64_t>(n % den_), den_);
}

RatAngle RatAngle::times(const BigInt& k) const {
  BigInt r = k % den_;
  if (r < 0) r += den_;
  return times(static_cast<std::int64_t>(r));
}

RatAngle RatAngle::divided_by(std::int64_t s) const {
  if (s <= 0) throw Error(Errc::OutOfRange, "divided_by needs a positive divisor");
  if (den_ > INT64_MAX / 4 / s) throw Error(Errc::OutOfRange, "angle denominator overflow");
  return RatAngle(num_, den_ * s);
}

std::strong_ordering operator<=>(const RatAngle& a, const RatAngle& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RatAngle::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RatAngle RatAngle::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(Errc::Parse, "bad angle '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RatAngle(parse_int(text), 1);
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return RatAngle(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const RatAngle& a) { return os << a.str(); }

std::int64_t common_denominator(const AngleVector& v) {
  std::int64_t l = 1;
  for (const auto& a : v) l = checked_lcm(l, a.den());
  return l;
}

}  // namespace eqsub::exact

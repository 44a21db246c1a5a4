#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqsub/angle.hpp"

namespace eqsub::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Q(zeta_M) in the power basis 1, x, ..., x^{phi(M)-1} modulo the M-th cyclotomic polynomial.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> make(std::int64_t level);

  std::int64_t level() const { return level_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  /// Coefficients of Phi_M, lowest degree first (monic).
  const std::vector<BigInt>& modulus() const { return modulus_; }
  /// Reduced power-basis coordinates of x^k, 0 <= k < M.
  const std::vector<Rational>& power(std::int64_t k) const;

  explicit CycloField(std::int64_t level);

 private:
  std::int64_t level_;
  std::vector<BigInt> modulus_;
  std::vector<std::vector<Rational>> powers_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(std::int64_t n);

/// An element of a cyclotomic field. Binary operations require equal levels.
class CycloNumber {
 public:
  CycloNumber() = default;
  explicit CycloNumber(std::shared_ptr<const CycloField> field);
  CycloNumber(std::shared_ptr<const CycloField> field, std::vector<Rational> coeffs);

  static CycloNumber zero(std::shared_ptr<const CycloField> f) { return CycloNumber(std::move(f)); }
  static CycloNumber one(std::shared_ptr<const CycloField> f);
  static CycloNumber rational(std::shared_ptr<const CycloField> f, const Rational& r);
  /// exp(2 pi i a); the angle's denominator must divide the level.
  static CycloNumber embed(std::shared_ptr<const CycloField> f, const RatAngle& a);

  std::int64_t level() const { return field_ ? field_->level() : 0; }
  const std::shared_ptr<const CycloField>& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  /// Multiplicative inverse; throws on zero.
  CycloNumber inverse() const;
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// The angle a with embed(a) == *this, if this is a root of unity of order dividing the level.
  std::optional<RatAngle> as_root_of_unity() const;
  std::string str() const;

 private:
  void require_same(const CycloNumber& o) const;

  std::shared_ptr<const CycloField> field_;
  std::vector<Rational> coeffs_;
};

using CycloMatrix = std::vector<std::vector<CycloNumber>>;
using CycloVector = std::vector<CycloNumber>;

/// Exact Gaussian elimination. Returns nullopt when inconsistent; free
/// variables of a consistent singular system are set to zero.
std::optional<CycloVector> cyclo_solve(const CycloMatrix& m, const CycloVector& b);

/// Sparse system: each row maps unknown -> coefficient, with a right-hand side.
struct SparseCycloRow {
  std::map<std::size_t, CycloNumber> terms;
  CycloNumber rhs;
};

struct SparseCycloSolution {
  std::optional<CycloVector> values;
  bool unique = false;
};

SparseCycloSolution sparse_cyclo_solve(std::vector<SparseCycloRow> rows, std::size_t unknowns,
                                       std::shared_ptr<const CycloField> field);

}  // namespace eqsub::exact

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eqsub/angle.hpp"

namespace eqsub::exact {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& a);

/// A = U * S * V with U, V unimodular and S diagonal, s_1 | s_2 | ... .
///
/// The inverses of U and V are kept as well; they are the accumulated row and
/// column operations and are what the Q/Z solver consumes.
struct SmithDecomposition {
  IntMatrix U, S, V;
  IntMatrix U_inv, V_inv;

  std::size_t rank() const;
  std::vector<BigInt> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// The solution set of A x = b over (Q/Z)^n, restricted to homogeneous
/// directions of order dividing the caller's torsion bound.
struct AngleSystemSolution {
  std::optional<AngleVector> particular;
  /// Generators of the homogeneous solution group; generator i has order kernel_orders[i].
  std::vector<AngleVector> kernel;
  std::vector<std::int64_t> kernel_orders;
  /// True when some homogeneous direction was a free Q/Z factor truncated to the bound.
  bool truncated = false;

  bool solvable() const { return particular.has_value(); }
  /// Number of solutions, 0 if unsolvable.
  std::uint64_t count() const;
  /// Every solution, particular + each combination of generators.
  void for_each(const std::function<void(const AngleVector&)>& f) const;
  std::vector<AngleVector> all() const;
};

AngleSystemSolution solve_angle_system(const IntMatrix& a, const AngleVector& b,
                                       std::int64_t torsion_bound);

/// A x - b, entrywise in Q/Z.
AngleVector angle_residual(const IntMatrix& a, const AngleVector& x, const AngleVector& b);

/// Accumulates sparse integer rows with angle right-hand sides, then solves.
/// Each row is a list of (unknown, coefficient) pairs; repeated unknowns add up.
class AngleSystemBuilder {
 public:
  explicit AngleSystemBuilder(std::size_t unknowns) : unknowns_(unknowns) {}

  void add(const std::vector<std::pair<std::size_t, long long>>& terms, const RatAngle& rhs);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  std::int64_t rhs_denominator() const;

  IntMatrix matrix() const;
  AngleVector rhs() const;
  AngleSystemSolution solve(std::int64_t torsion_bound) const;

 private:
  std::size_t unknowns_;
  std::vector<std::vector<long long>> rows_;
  AngleVector rhs_;
};

}  // namespace eqsub::exact

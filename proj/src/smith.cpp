#include "eqsub/smith.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "eqsub/error.hpp"

namespace eqsub::exact {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::OutOfRange, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::OutOfRange, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::OutOfRange, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  while (r < std::min(S.rows(), S.cols()) && S(r, r) != 0) ++r;
  return r;
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

// Row and column operations on S, mirrored onto the accumulated transforms.
// Invariant: U_inv * A * V_inv == S, U * U_inv == I, V_inv * V == I.
struct Reducer {
  SmithDecomposition& d;

  void add_row(std::size_t dst, std::size_t src, const BigInt& c) {
    auto& S = d.S;
    for (std::size_t j = 0; j < S.cols(); ++j) S(dst, j) += c * S(src, j);
    for (std::size_t j = 0; j < d.U_inv.cols(); ++j) d.U_inv(dst, j) += c * d.U_inv(src, j);
    for (std::size_t i = 0; i < d.U.rows(); ++i) d.U(i, src) -= c * d.U(i, dst);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.S.cols(); ++j) std::swap(d.S(a, j), d.S(b, j));
    for (std::size_t j = 0; j < d.U_inv.cols(); ++j) std::swap(d.U_inv(a, j), d.U_inv(b, j));
    for (std::size_t i = 0; i < d.U.rows(); ++i) std::swap(d.U(i, a), d.U(i, b));
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.S.cols(); ++j) d.S(a, j) = -d.S(a, j);
    for (std::size_t j = 0; j < d.U_inv.cols(); ++j) d.U_inv(a, j) = -d.U_inv(a, j);
    for (std::size_t i = 0; i < d.U.rows(); ++i) d.U(i, a) = -d.U(i, a);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& c) {
    auto& S = d.S;
    for (std::size_t i = 0; i < S.rows(); ++i) S(i, dst) += c * S(i, src);
    for (std::size_t i = 0; i < d.V_inv.rows(); ++i) d.V_inv(i, dst) += c * d.V_inv(i, src);
    for (std::size_t j = 0; j < d.V.cols(); ++j) d.V(src, j) -= c * d.V(dst, j);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.S.rows(); ++i) std::swap(d.S(i, a), d.S(i, b));
    for (std::size_t i = 0; i < d.V_inv.rows(); ++i) std::swap(d.V_inv(i, a), d.V_inv(i, b));
    for (std::size_t j = 0; j < d.V.cols(); ++j) std::swap(d.V(a, j), d.V(b, j));
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n), IntMatrix::identity(m),
                       IntMatrix::identity(n)};
  Reducer r{d};
  auto& S = d.S;

  // Nearest-integer quotient keeps remainders at most half the pivot.
  auto round_div = [](const BigInt& a, const BigInt& p) {
    BigInt q = a / p;
    BigInt r = a - q * p;
    if (2 * abs(r) > abs(p)) q += ((r < 0) == (p < 0)) ? 1 : -1;
    return q;
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return d;
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        r.add_row(i, t, -round_div(S(i, t), S(t, t)));
        dirty = dirty || S(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        r.add_col(j, t, -round_div(S(t, j), S(t, t)));
        dirty = dirty || S(t, j) != 0;
      }
      if (dirty) continue;
      // Divisibility chain: pull an offending row into the pivot row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      r.add_row(t, bad, 1);
    }
    if (S(t, t) < 0) r.negate_row(t);
  }
  return d;
}

std::uint64_t AngleSystemSolution::count() const {
  if (!particular) return 0;
  std::uint64_t c = 1;
  for (auto o : kernel_orders) c *= static_cast<std::uint64_t>(o);
  return c;
}

void AngleSystemSolution::for_each(const std::function<void(const AngleVector&)>& f) const {
  if (!particular) return;
  const std::size_t g = kernel.size();
  std::vector<std::int64_t> digit(g, 0);
  for (;;) {
    AngleVector x = *particular;
    for (std::size_t i = 0; i < g; ++i)
      if (digit[i] != 0)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += kernel[i][j].times(digit[i]);
    f(x);
    std::size_t i = 0;
    while (i < g && ++digit[i] == kernel_orders[i]) digit[i++] = 0;
    if (i == g) break;
  }
}

std::vector<AngleVector> AngleSystemSolution::all() const {
  std::vector<AngleVector> out;
  for_each([&](const AngleVector& x) { out.push_back(x); });
  return out;
}

AngleSystemSolution solve_angle_system(const IntMatrix& a, const AngleVector& b,
                                       std::int64_t torsion_bound) {
  if (b.size() != a.rows()) throw Error(Errc::OutOfRange, "right-hand side length mismatch");
  if (torsion_bound < 1) throw Error(Errc::OutOfRange, "torsion bound must be positive");
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition d = smith_normal_form(a);
  const std::size_t rank = d.rank();

  // S y = U_inv b with x = V_inv y.
  AngleVector c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (d.U_inv(i, j) != 0) c[i] += b[j].times(d.U_inv(i, j));

  AngleSystemSolution sol;
  for (std::size_t i = rank; i < m; ++i)
    if (!c[i].is_zero()) return sol;

  AngleVector y(n);
  for (std::size_t i = 0; i < rank; ++i) y[i] = c[i].divided_by(static_cast<std::int64_t>(d.S(i, i)));

  auto column = [&](std::size_t i, std::int64_t divisor) {
    AngleVector v(n);
    RatAngle unit(1, divisor);
    for (std::size_t j = 0; j < n; ++j) v[j] = unit.times(d.V_inv(j, i));
    return v;
  };

  AngleVector x(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rank; ++i)
      if (d.V_inv(j, i) != 0) x[j] += y[i].times(d.V_inv(j, i));
  sol.particular = std::move(x);

  for (std::size_t i = 0; i < rank; ++i) {
    auto s = static_cast<std::int64_t>(d.S(i, i));
    if (s > 1) {
      sol.kernel.push_back(column(i, s));
      sol.kernel_orders.push_back(s);
    }
  }
  for (std::size_t i = rank; i < n; ++i) {
    sol.truncated = true;
    if (torsion_bound > 1) {
      sol.kernel.push_back(column(i, torsion_bound));
      sol.kernel_orders.push_back(torsion_bound);
    }
  }
  return sol;
}

AngleVector angle_residual(const IntMatrix& a, const AngleVector& x, const AngleVector& b) {
  AngleVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatAngle acc;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) acc += x[j].times(a(i, j));
    r[i] = acc - b[i];
  }
  return r;
}

void AngleSystemBuilder::add(const std::vector<std::pair<std::size_t, long long>>& terms,
                             const RatAngle& rhs) {
  std::vector<long long> row(unknowns_, 0);
  for (auto [u, c] : terms) {
    if (u >= unknowns_) throw Error(Errc::OutOfRange, "unknown index out of range");
    row[u] += c;
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

std::int64_t AngleSystemBuilder::rhs_denominator() const { return common_denominator(rhs_); }

IntMatrix AngleSystemBuilder::matrix() const {
  IntMatrix m(rows_.size(), unknowns_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < unknowns_; ++j) m(i, j) = rows_[i][j];
  return m;
}

AngleVector AngleSystemBuilder::rhs() const { return rhs_; }

AngleSystemSolution AngleSystemBuilder::solve(std::int64_t torsion_bound) const {
  // Identical rows carry no new information; a zero row only matters through its rhs.
  std::set<std::pair<std::vector<long long>, RatAngle>> unique;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    bool zero = std::all_of(rows_[i].begin(), rows_[i].end(), [](long long v) { return v == 0; });
    if (zero && rhs_[i].is_zero()) continue;
    unique.emplace(rows_[i], rhs_[i]);
  }
  IntMatrix m(unique.size(), unknowns_);
  AngleVector b;
  std::size_t i = 0;
  for (const auto& [row, rhs] : unique) {
    for (std::size_t j = 0; j < unknowns_; ++j) m(i, j) = row[j];
    b.push_back(rhs);
    ++i;
  }
  return solve_angle_system(m, b, torsion_bound);
}

}  // namespace eqsub::exact

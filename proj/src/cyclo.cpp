#include "eqsub/cyclo.hpp"

#include <numeric>
#include <sstream>

#include "eqsub/error.hpp"

namespace eqsub::exact {

std::vector<BigInt> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw Error(Errc::OutOfRange, "cyclotomic polynomial needs n >= 1");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<BigInt> q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1;
    std::vector<BigInt> quot(p.size() - dq, 0);
    for (std::size_t k = p.size() - 1; k + 1 > dq; --k) {
      BigInt c = p[k];
      quot[k - dq] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
      if (k == dq) break;
    }
    p = std::move(quot);
  }
  return p;
}

CycloField::CycloField(std::int64_t level) : level_(level), modulus_(cyclotomic_polynomial(level)) {
  const std::size_t phi = degree();
  std::vector<Rational> cur(phi, 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < level; ++k) {
    powers_.push_back(cur);
    // Multiply by x and reduce with the monic modulus.
    Rational top = cur[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * Rational(modulus_[j]);
  }
}

std::shared_ptr<const CycloField> CycloField::make(std::int64_t level) {
  if (level < 1) throw Error(Errc::OutOfRange, "cyclotomic level must be positive");
  return std::make_shared<const CycloField>(level);
}

const std::vector<Rational>& CycloField::power(std::int64_t k) const {
  k %= level_;
  if (k < 0) k += level_;
  return powers_[static_cast<std::size_t>(k)];
}

CycloNumber::CycloNumber(std::shared_ptr<const CycloField> field)
    : field_(std::move(field)), coeffs_(field_->degree(), 0) {}

CycloNumber::CycloNumber(std::shared_ptr<const CycloField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree()) throw Error(Errc::OutOfRange, "coefficient vector length");
}

CycloNumber CycloNumber::one(std::shared_ptr<const CycloField> f) { return rational(std::move(f), 1); }

CycloNumber CycloNumber::rational(std::shared_ptr<const CycloField> f, const Rational& r) {
  CycloNumber c(std::move(f));
  c.coeffs_[0] = r;
  return c;
}

CycloNumber CycloNumber::embed(std::shared_ptr<const CycloField> f, const RatAngle& a) {
  if (f->level() % a.den() != 0)
    throw Error(Errc::LevelMismatch, "angle " + a.str() + " not in level " + std::to_string(f->level()));
  std::int64_t k = a.num() * (f->level() / a.den());
  const auto& p = f->power(k);
  return CycloNumber(std::move(f), p);
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void CycloNumber::require_same(const CycloNumber& o) const {
  if (!field_ || !o.field_ || field_->level() != o.field_->level())
    throw Error(Errc::LevelMismatch, "levels " + std::to_string(level()) + " and " + std::to_string(o.level()));
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  require_same(o);
  const std::size_t phi = coeffs_.size();
  std::vector<Rational> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  const auto& mod = field_->modulus();
  for (std::size_t k = prod.size() - 1; k >= phi; --k) {
    Rational c = prod[k];
    if (c != 0)
      for (std::size_t j = 0; j <= phi; ++j) prod[k - phi + j] -= c * Rational(mod[j]);
  }
  prod.resize(phi);
  coeffs_ = std::move(prod);
  return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw Error(Errc::OutOfRange, "inverse of zero");
  const std::size_t phi = coeffs_.size();
  // Columns of the multiplication-by-this matrix are this * x^j.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, 0));
  for (std::size_t j = 0; j < phi; ++j) {
    CycloNumber col = *this * CycloNumber(field_, field_->power(static_cast<std::int64_t>(j)));
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][phi] = 1;
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CycloNumber(field_, std::move(x));
}

std::optional<RatAngle> CycloNumber::as_root_of_unity() const {
  if (!field_) return std::nullopt;
  for (std::int64_t k = 0; k < field_->level(); ++k)
    if (field_->power(k) == coeffs_) return RatAngle(k, field_->level());
  return std::nullopt;
}

std::string CycloNumber::str() const {
  if (auto a = as_root_of_unity()) return "e(" + a->str() + ")";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i];
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<CycloVector> cyclo_solve(const CycloMatrix& m, const CycloVector& b) {
  const std::size_t rows = m.size();
  if (b.size() != rows) throw Error(Errc::OutOfRange, "right-hand side length mismatch");
  if (rows == 0) return CycloVector{};
  const std::size_t cols = m[0].size();
  auto field = b.empty() ? nullptr : b[0].field();
  for (const auto& r : m) {
    if (r.size() != cols) throw Error(Errc::OutOfRange, "ragged matrix");
    for (const auto& v : r)
      if (!field || v.level() != field->level()) throw Error(Errc::LevelMismatch, "mixed levels in system");
  }
  for (const auto& v : b)
    if (v.level() != field->level()) throw Error(Errc::LevelMismatch, "mixed levels in system");

  std::vector<CycloVector> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i] = m[i];
    a[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    CycloNumber inv = a[r][c].inverse();
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      CycloNumber f = a[i][c];
      for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!a[i][cols].is_zero()) return std::nullopt;
  CycloVector x(cols, CycloNumber::zero(field));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

SparseCycloSolution sparse_cyclo_solve(std::vector<SparseCycloRow> rows, std::size_t unknowns,
                                       std::shared_ptr<const CycloField> field) {
  // Gauss-Jordan with pivot rows kept fully reduced against each other.
  std::map<std::size_t, SparseCycloRow> pivots;
  auto axpy = [](SparseCycloRow& dst, const CycloNumber& f, const SparseCycloRow& src) {
    for (const auto& [v, c] : src.terms) {
      auto it = dst.terms.find(v);
      CycloNumber t = f * c;
      if (it == dst.terms.end()) {
        dst.terms.emplace(v, -t);
      } else {
        it->second -= t;
        if (it->second.is_zero()) dst.terms.erase(it);
      }
    }
    dst.rhs -= f * src.rhs;
  };

  SparseCycloSolution out;
  for (auto& row : rows) {
    for (auto it = row.terms.begin(); it != row.terms.end();)
      it = it->second.is_zero() ? row.terms.erase(it) : std::next(it);
    for (const auto& [v, prow] : pivots) {
      auto it = row.terms.find(v);
      if (it == row.terms.end()) continue;
      CycloNumber f = it->second;
      axpy(row, f, prow);
    }
    if (row.terms.empty()) {
      if (!row.rhs.is_zero()) return out;
      continue;
    }
    auto [pv, pc] = *row.terms.begin();
    CycloNumber inv = pc.inverse();
    for (auto& [v, c] : row.terms) c *= inv;
    row.rhs *= inv;
    for (auto& [v, prow] : pivots) {
      auto it = prow.terms.find(pv);
      if (it == prow.terms.end()) continue;
      CycloNumber f = it->second;
      axpy(prow, f, row);
    }
    pivots.emplace(pv, std::move(row));
  }
  CycloVector x(unknowns, CycloNumber::zero(field));
  for (const auto& [v, prow] : pivots) x[v] = prow.rhs;
  out.values = std::move(x);
  out.unique = pivots.size() == unknowns;
  return out;
}

}  // namespace eqsub::exact

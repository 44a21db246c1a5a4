#include "eqsub/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "eqsub/error.hpp"

namespace eqsub::oracle {

namespace {

std::size_t sz(std::int64_t v) { return static_cast<std::size_t>(v); }

cplx root(const exact::RatAngle& a) {
  double t = 2 * std::numbers::pi * static_cast<double>(a.num()) / static_cast<double>(a.den());
  return {std::cos(t), std::sin(t)};
}

double dist(const CVector& a, const CVector& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Eigen::VectorXcd to_eigen(const CVector& v) {
  Eigen::VectorXcd e(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e(static_cast<Eigen::Index>(i)) = v[i];
  return e;
}

CVector from_eigen(const Eigen::VectorXcd& e) { return CVector(e.data(), e.data() + e.size()); }

std::vector<std::pair<long long, long long>> rounded(const CVector& v) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& z : v) out.emplace_back(std::llround(z.real() * 1e6), std::llround(z.imag() * 1e6));
  return out;
}

/// Product in the Hopf algebra itself, on complex coordinates.
CVector hopf_mul(const hopf::HopfStructure& h, const CVector& x, const CVector& y) {
  CVector z(sz(h.dim));
  for (int i = 0; i < h.dim; ++i) {
    if (x[sz(i)] == cplx{}) continue;
    for (int j = 0; j < h.dim; ++j) {
      if (y[sz(j)] == cplx{}) continue;
      if (const auto& p = h.mul(i, j)) z[sz(p->basis)] += x[sz(i)] * y[sz(j)] * root(p->c);
    }
  }
  return z;
}

}  // namespace

CVector DualAlgebra::mul(const CVector& x, const CVector& y) const {
  CVector z(sz(dim));
  for (int i = 0; i < dim; ++i) {
    if (x[sz(i)] == cplx{}) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[sz(j)] == cplx{}) continue;
      for (const auto& [k, v] : table[sz(i) * sz(dim) + sz(j)]) z[sz(k)] += x[sz(i)] * y[sz(j)] * v;
    }
  }
  return z;
}

CVector DualAlgebra::basis(int i) const {
  CVector v(sz(dim));
  v[sz(i)] = 1;
  return v;
}

CVector DualAlgebra::regular_traces() const {
  CVector t(sz(dim));
  for (int k = 0; k < dim; ++k)
    for (int j = 0; j < dim; ++j)
      for (const auto& [m, v] : table[sz(k) * sz(dim) + sz(j)])
        if (m == j) t[sz(k)] += v;
  return t;
}

double DualAlgebra::associativity_defect() const {
  double worst = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      CVector ij = mul(basis(i), basis(j));
      for (int k = 0; k < dim; ++k) {
        CVector l = mul(ij, basis(k));
        CVector r = mul(basis(i), mul(basis(j), basis(k)));
        worst = std::max(worst, dist(l, r));
      }
    }
  return worst;
}

double DualAlgebra::unit_defect() const {
  double worst = 0;
  for (int i = 0; i < dim; ++i) {
    worst = std::max(worst, dist(mul(unit, basis(i)), basis(i)));
    worst = std::max(worst, dist(mul(basis(i), unit), basis(i)));
  }
  return worst;
}

DualAlgebra dual_algebra(const hopf::HopfStructure& h) {
  DualAlgebra a;
  a.dim = h.dim;
  a.table.assign(sz(h.dim) * sz(h.dim), {});
  for (int k = 0; k < h.dim; ++k)
    for (const auto& t : h.coproduct[sz(k)]) {
      auto& cell = a.table[sz(t.left) * sz(h.dim) + sz(t.right)];
      auto it = std::find_if(cell.begin(), cell.end(), [&](const auto& e) { return e.first == k; });
      if (it == cell.end())
        cell.emplace_back(k, root(t.c));
      else
        it->second += root(t.c);
    }
  a.unit.assign(sz(h.dim), 0);
  for (int k = 0; k < h.dim; ++k) a.unit[sz(k)] = h.counit[sz(k)];
  return a;
}

namespace {

/// Orthonormal basis (columns) of the center.
Eigen::MatrixXcd center_basis(const DualAlgebra& a) {
  const auto n = static_cast<Eigen::Index>(a.dim);
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(n, n);
  // Rows of the commutator system, one per (j, m), accumulated into C^H C.
  for (int j = 0; j < a.dim; ++j) {
    Eigen::MatrixXcd rows = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < a.dim; ++k) {
      for (const auto& [m, v] : a.table[sz(k) * sz(a.dim) + sz(j)]) rows(m, k) += v;
      for (const auto& [m, v] : a.table[sz(j) * sz(a.dim) + sz(k)]) rows(m, k) -= v;
    }
    gram += rows.adjoint() * rows;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const auto& ev = es.eigenvalues();
  std::vector<Eigen::Index> null;
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(ev(i)) < 1e-8) null.push_back(i);
  Eigen::MatrixXcd z(n, static_cast<Eigen::Index>(null.size()));
  for (std::size_t c = 0; c < null.size(); ++c) z.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(null[c]);
  return z;
}

struct Attempt {
  bool ok = false;
  std::string why;
  BlockDecomposition out;
};

Attempt try_decompose(const DualAlgebra& a, const Eigen::MatrixXcd& Z, std::uint64_t seed) {
  Attempt at;
  const auto r = Z.cols();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  CVector z(sz(a.dim));
  {
    Eigen::VectorXcd coef(r);
    for (Eigen::Index t = 0; t < r; ++t) coef(t) = cplx(uni(rng), uni(rng));
    z = from_eigen(Z * coef);
  }
  Eigen::MatrixXcd M(r, r);
  for (Eigen::Index t = 0; t < r; ++t) M.col(t) = Z.adjoint() * to_eigen(a.mul(z, from_eigen(Z.col(t))));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
  const auto& lambda = es.eigenvalues();
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = i + 1; j < r; ++j)
      if (std::abs(lambda(i) - lambda(j)) < 1e-6) {
        at.why = "repeated eigenvalue";
        return at;
      }

  const CVector traces = a.regular_traces();
  CVector total(sz(a.dim));
  std::vector<std::pair<int, CVector>> blocks;
  std::int64_t sum = 0;
  for (Eigen::Index i = 0; i < r; ++i) {
    CVector f = from_eigen(Z * es.eigenvectors().col(i));
    CVector f2 = a.mul(f, f);
    std::size_t piv = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (std::abs(f[k]) > std::abs(f[piv])) piv = k;
    cplx c = f2[piv] / f[piv];
    for (auto& v : f) v /= c;
    if (dist(a.mul(f, f), f) > 1e-8) {
      at.why = "idempotent check failed";
      return at;
    }
    for (std::size_t k = 0; k < f.size(); ++k) total[k] += f[k];
    cplx d2 = 0;
    for (std::size_t k = 0; k < f.size(); ++k) d2 += f[k] * traces[k];
    auto rd2 = std::llround(d2.real());
    double err = std::max(std::abs(d2.real() - static_cast<double>(rd2)), std::abs(d2.imag()));
    at.out.max_rounding_error = std::max(at.out.max_rounding_error, err);
    auto d = std::llround(std::sqrt(static_cast<double>(std::max<long long>(rd2, 0))));
    if (err >= kRoundTolerance || d * d != rd2 || d < 1) {
      at.why = "block size " + std::to_string(d2.real()) + " is not a square integer";
      return at;
    }
    sum += rd2;
    blocks.emplace_back(static_cast<int>(d), std::move(f));
  }
  if (dist(total, a.unit) > 1e-8) {
    at.why = "idempotents do not sum to the unit";
    return at;
  }
  if (sum != a.dim) {
    at.why = "sum of d_i^2 is " + std::to_string(sum) + ", expected " + std::to_string(a.dim);
    return at;
  }

  struct Entry {
    int d;
    CVector e, chi;
    std::vector<std::pair<long long, long long>> key;
  };
  std::vector<Entry> entries;
  for (auto& [d, e] : blocks) {
    CVector chi(sz(a.dim));
    for (int j = 0; j < a.dim; ++j) {
      CVector p = a.mul(a.basis(j), e);
      cplx tr = 0;
      for (std::size_t k = 0; k < p.size(); ++k) tr += p[k] * traces[k];
      chi[sz(j)] = tr / static_cast<double>(d);
    }
    auto key = rounded(chi);
    entries.push_back({d, std::move(e), std::move(chi), std::move(key)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.d, x.key) < std::tie(y.d, y.key);
  });
  for (auto& e : entries) {
    at.out.dims.push_back(e.d);
    at.out.idempotents.push_back(std::move(e.e));
    at.out.characters.push_back(std::move(e.chi));
  }
  at.ok = true;
  return at;
}

}  // namespace

BlockDecomposition block_decompose(const DualAlgebra& a, std::uint64_t seed, int attempts) {
  const Eigen::MatrixXcd Z = center_basis(a);
  std::string why;
  for (int i = 0; i < attempts; ++i) {
    auto at = try_decompose(a, Z, seed + static_cast<std::uint64_t>(i));
    if (at.ok) {
      at.out.seed = seed + static_cast<std::uint64_t>(i);
      at.out.attempts = i + 1;
      return at.out;
    }
    why = at.why;
  }
  throw Error(Errc::ChecksumFailed, why + " after " + std::to_string(attempts) + " seed(s) starting at " + std::to_string(seed));
}

std::vector<std::string> FusionRing::check() const {
  std::vector<std::string> bad;
  auto fail = [&](std::string what) {
    if (bad.size() < 16) bad.push_back(std::move(what));
  };
  auto t = [](int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  for (auto v : mult)
    if (v < 0) fail("negative multiplicity");
  for (int i = 0; i < rank; ++i) {
    if (dual[sz(dual[sz(i)])] != i) fail("dual is not an involution at " + std::to_string(i));
    for (int j = 0; j < rank; ++j) {
      if (N(unit, i, j) != (i == j) || N(i, unit, j) != (i == j)) fail("unit law at " + t(unit, i, j));
      if (N(i, j, unit) != (j == dual[sz(i)])) fail("duality at " + t(i, j, unit));
      std::int64_t prod = 0;
      for (int k = 0; k < rank; ++k) prod += N(i, j, k) * dims[sz(k)];
      if (prod != dims[sz(i)] * dims[sz(j)]) fail("dimension is not multiplicative at " + t(i, j, 0));
      for (int k = 0; k < rank; ++k)
        for (int l = 0; l < rank; ++l) {
          std::int64_t x = 0, y = 0;
          for (int m = 0; m < rank; ++m) {
            x += N(i, j, m) * N(m, k, l);
            y += N(j, k, m) * N(i, m, l);
          }
          if (x != y) fail("associativity at " + t(i, j, k) + " -> " + std::to_string(l));
        }
    }
  }
  return bad;
}

io::json FusionRing::json() const {
  io::json j;
  j["rank"] = rank;
  j["dims"] = dims;
  j["unit"] = unit;
  j["dual"] = dual;
  io::json m = io::json::array();
  for (int i = 0; i < rank; ++i) {
    io::json row = io::json::array();
    for (int k = 0; k < rank; ++k) {
      io::json col = io::json::array();
      for (int l = 0; l < rank; ++l) col.push_back(N(i, k, l));
      row.push_back(col);
    }
    m.push_back(row);
  }
  j["mult"] = m;
  return j;
}

FusionRing fusion_ring(const hopf::HopfStructure& h, std::uint64_t seed) {
  return fusion_ring(h, block_decompose(dual_algebra(h), seed));
}

FusionRing fusion_ring(const hopf::HopfStructure& h, const BlockDecomposition& blocks) {
  const int r = static_cast<int>(blocks.dims.size());
  const auto n = static_cast<Eigen::Index>(h.dim);
  CVector one(sz(h.dim));
  for (int u : h.unit) one[sz(u)] = 1;

  // Unit object first, the rest in block order.
  std::vector<int> order;
  for (int i = 0; i < r; ++i)
    if (dist(blocks.characters[sz(i)], one) < kRoundTolerance) order.push_back(i);
  if (order.size() != 1) throw Error(Errc::InvariantViolated, "the trivial comodule is not among the simples exactly once");
  for (int i = 0; i < r; ++i)
    if (i != order[0]) order.push_back(i);
  std::vector<CVector> chi;
  for (int i : order) chi.push_back(blocks.characters[sz(i)]);

  Eigen::MatrixXcd X(n, r);
  for (int i = 0; i < r; ++i) X.col(i) = to_eigen(chi[sz(i)]);
  auto qr = X.colPivHouseholderQr();
  if (qr.rank() != r) throw Error(Errc::InvariantViolated, "characters are linearly dependent");

  FusionRing f;
  f.rank = r;
  f.unit = 0;
  f.mult.assign(sz(r) * sz(r) * sz(r), 0);
  auto round_to = [&](cplx v, const std::string& what) {
    auto k = std::llround(v.real());
    double err = std::max(std::abs(v.real() - static_cast<double>(k)), std::abs(v.imag()));
    f.max_rounding_error = std::max(f.max_rounding_error, err);
    if (err >= kRoundTolerance)
      throw Error(Errc::RoundingFailed, what + " = " + std::to_string(v.real()) + "+" + std::to_string(v.imag()) + "i");
    return static_cast<std::int64_t>(k);
  };

  for (int i = 0; i < r; ++i) {
    cplx d = 0;
    for (int k = 0; k < h.dim; ++k) d += chi[sz(i)][sz(k)] * static_cast<double>(h.counit[sz(k)]);
    f.dims.push_back(round_to(d, "dimension of simple " + std::to_string(i)));
    if (f.dims.back() != blocks.dims[sz(order[sz(i)])])
      throw Error(Errc::InvariantViolated, "comodule dimension differs from block size at " + std::to_string(i));
  }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Eigen::VectorXcd p = to_eigen(hopf_mul(h, chi[sz(i)], chi[sz(j)]));
      Eigen::VectorXcd c = qr.solve(p);
      double resid = (X * c - p).cwiseAbs().maxCoeff();
      f.max_rounding_error = std::max(f.max_rounding_error, resid);
      if (resid >= kRoundTolerance)
        throw Error(Errc::RoundingFailed, "product of characters " + std::to_string(i) + "," + std::to_string(j) +
                                             " is outside their span");
      for (int k = 0; k < r; ++k)
        f.mult[(sz(i) * sz(r) + sz(j)) * sz(r) + sz(k)] =
            round_to(c(k), "N(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
    }

  for (int i = 0; i < r; ++i) {
    CVector s(sz(h.dim));
    for (int b = 0; b < h.dim; ++b) {
      const auto& a = h.antipode[sz(b)];
      s[sz(a.basis)] += chi[sz(i)][sz(b)] * root(a.c);
    }
    int found = -1;
    for (int k = 0; k < r; ++k)
      if (dist(s, chi[sz(k)]) < kRoundTolerance) found = k;
    if (found < 0) throw Error(Errc::InvariantViolated, "no dual for simple " + std::to_string(i));
    f.dual.push_back(found);
  }

  std::int64_t total = 0;
  for (auto d : f.dims) total += d * d;
  auto bad = f.check();
  if (total != h.dim) bad.push_back("sum of squared dimensions is " + std::to_string(total));
  if (!bad.empty()) throw Error(Errc::InvariantViolated, bad.front());
  return f;
}

lat::Poset OracleLattice::poset() const { return {fpdims, leq}; }

OracleLattice enumerate_based_subrings(const FusionRing& f) {
  const int r = f.rank;
  auto closure = [&](std::vector<bool> s) {
    s[sz(f.unit)] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < r; ++i) {
        if (!s[sz(i)]) continue;
        if (!s[sz(f.dual[sz(i)])]) s[sz(f.dual[sz(i)])] = grew = true;
        for (int j = 0; j < r; ++j) {
          if (!s[sz(j)]) continue;
          for (int k = 0; k < r; ++k)
            if (f.N(i, j, k) > 0 && !s[sz(k)]) s[sz(k)] = grew = true;
        }
      }
    }
    return s;
  };
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{closure(std::vector<bool>(sz(r), false))};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int x = 0; x < r; ++x) {
      if (queue[q][sz(x)]) continue;
      auto s = queue[q];
      s[sz(x)] = true;
      s = closure(std::move(s));
      if (seen.insert(s).second) queue.push_back(s);
    }

  std::int64_t total = 0;
  for (auto d : f.dims) total += d * d;
  std::vector<std::pair<std::int64_t, std::vector<int>>> items;
  for (const auto& s : seen) {
    std::vector<int> idx;
    std::int64_t fp = 0;
    for (int i = 0; i < r; ++i)
      if (s[sz(i)]) {
        idx.push_back(i);
        fp += f.dims[sz(i)] * f.dims[sz(i)];
      }
    items.emplace_back(fp, std::move(idx));
  }
  std::sort(items.begin(), items.end());
  OracleLattice out;
  for (auto& [fp, idx] : items) {
    if (total % fp != 0) out.non_dividing.push_back(static_cast<int>(out.subsets.size()));
    out.fpdims.push_back(fp);
    out.subsets.push_back(std::move(idx));
  }
  const std::size_t m = out.subsets.size();
  out.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.leq[i][j] = std::includes(out.subsets[j].begin(), out.subsets[j].end(), out.subsets[i].begin(),
                                    out.subsets[i].end());
  return out;
}

namespace {

std::string multiset_str(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

Comparison compare(const OracleLattice& oracle, const lat::SubcategoryLattice& lattice) {
  Comparison c;
  c.oracle_count = oracle.subsets.size();
  c.lattice_count = lattice.triples.size();
  c.oracle_fpdims = oracle.fpdims;
  for (const auto& t : lattice.triples) c.lattice_fpdims.push_back(t.fpdim);
  std::sort(c.oracle_fpdims.begin(), c.oracle_fpdims.end());
  std::sort(c.lattice_fpdims.begin(), c.lattice_fpdims.end());
  c.counts_equal = c.oracle_count == c.lattice_count;
  c.fpdims_equal = c.oracle_fpdims == c.lattice_fpdims;
  c.isomorphic = c.counts_equal && lat::posets_isomorphic(oracle.poset(), lattice.poset());
  if (!c.counts_equal)
    c.mismatches.push_back("count: oracle " + std::to_string(c.oracle_count) + ", triples " +
                           std::to_string(c.lattice_count));
  if (!c.fpdims_equal)
    c.mismatches.push_back("fpdims: oracle " + multiset_str(c.oracle_fpdims) + ", triples " +
                           multiset_str(c.lattice_fpdims));
  if (!c.isomorphic) c.mismatches.push_back("posets are not isomorphic");
  return c;
}

std::string Comparison::str() const {
  std::ostringstream os;
  os << "count   oracle " << oracle_count << "  triples " << lattice_count << (counts_equal ? "  equal" : "  DIFFER")
     << "\n";
  os << "fpdims  oracle " << multiset_str(oracle_fpdims) << "  triples " << multiset_str(lattice_fpdims)
     << (fpdims_equal ? "  equal" : "  DIFFER") << "\n";
  os << "poset   " << (isomorphic ? "isomorphic" : "not isomorphic") << "\n";
  return os.str();
}

}  // namespace eqsub::oracle

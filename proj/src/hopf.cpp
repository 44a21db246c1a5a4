#include "eqsub/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "eqsub/cyclo.hpp"
#include "eqsub/error.hpp"

namespace eqsub::hopf {

using exact::CycloField;
using exact::CycloNumber;

std::string Label::str() const { return "(" + std::to_string(g) + "," + std::to_string(x) + ")"; }

std::int64_t HopfStructure::level() const {
  std::int64_t l = 1;
  auto take = [&](const RatAngle& a) { l = std::lcm(l, a.den()); };
  for (const auto& p : product)
    if (p) take(p->c);
  for (const auto& terms : coproduct)
    for (const auto& t : terms) take(t.c);
  for (const auto& s : antipode) take(s.c);
  return l;
}

namespace {

std::size_t sz(std::int64_t v) { return static_cast<std::size_t>(v); }

}  // namespace

HopfStructure build_bismash(const PointedActionData& d, bool validate) {
  if (validate) {
    if (!d.omega().is_trivial()) throw Error(Errc::OmegaNontrivial, "the bismash construction needs omega = 0");
    auto report = act::validate_action_data(d);
    if (!report.valid() || !report.normalized()) throw Error(Errc::DataInvalid, report.str());
  }
  const auto& G = d.G();
  const auto& K = d.K();
  HopfStructure h;
  h.data = d;
  h.nG = G.order();
  h.nK = K.order();
  h.dim = h.nG * h.nK;
  const int n = h.dim;
  for (Elem g = 0; g < h.nG; ++g)
    for (Elem x = 0; x < h.nK; ++x) h.labels.push_back({g, x});

  h.product.assign(sz(n) * sz(n), std::nullopt);
  for (Elem g = 0; g < h.nG; ++g)
    for (Elem x = 0; x < h.nK; ++x)
      for (Elem y = 0; y < h.nK; ++y)
        h.product[sz(h.index(g, x)) * sz(n) + sz(h.index(g, y))] = Scaled{d.beta(g, x, y), h.index(g, K.mul(x, y))};

  h.coproduct.assign(sz(n), {});
  for (Elem g = 0; g < h.nG; ++g)
    for (Elem x = 0; x < h.nK; ++x)
      for (Elem a = 0; a < h.nG; ++a) {
        Elem b = G.mul(G.inv(a), g);
        h.coproduct[sz(h.index(g, x))].push_back({d.mu(a, b, x), h.index(a, d.push(b, x)), h.index(b, x)});
      }

  h.counit.assign(sz(n), 0);
  for (Elem x = 0; x < h.nK; ++x) h.counit[sz(h.index(0, x))] = 1;
  for (Elem g = 0; g < h.nG; ++g) h.unit.push_back(h.index(g, 0));

  // Convolution equation m (S (x) id) Delta = unit counit with S(l) = sum_m s(l,m) m, one row per
  // (basis element, output coordinate).
  const auto field = CycloField::make(d.denominator());
  std::set<int> unit_set(h.unit.begin(), h.unit.end());
  std::vector<exact::SparseCycloRow> rows;
  rows.reserve(sz(n) * sz(n));
  for (int b = 0; b < n; ++b)
    for (int out = 0; out < n; ++out) {
      exact::SparseCycloRow row;
      for (const auto& t : h.coproduct[sz(b)])
        for (int m = 0; m < n; ++m) {
          const auto& p = h.mul(m, t.right);
          if (!p || p->basis != out) continue;
          auto key = sz(t.left) * sz(n) + sz(m);
          CycloNumber c = CycloNumber::embed(field, t.c + p->c);
          auto it = row.terms.find(key);
          if (it == row.terms.end())
            row.terms.emplace(key, c);
          else
            it->second += c;
        }
      bool one = h.counit[sz(b)] == 1 && unit_set.count(out);
      row.rhs = one ? CycloNumber::one(field) : CycloNumber::zero(field);
      rows.push_back(std::move(row));
    }
  auto sol = exact::sparse_cyclo_solve(std::move(rows), sz(n) * sz(n), field);
  if (!sol.values) throw Error(Errc::InvariantViolated, "the convolution equation for the antipode has no solution");
  h.antipode_unique = sol.unique;
  for (int l = 0; l < n; ++l) {
    std::optional<Scaled> s;
    for (int m = 0; m < n; ++m) {
      const auto& v = (*sol.values)[sz(l) * sz(n) + sz(m)];
      if (v.is_zero()) continue;
      auto angle = v.as_root_of_unity();
      if (s || !angle)
        throw Error(Errc::InvariantViolated, "antipode of " + h.labels[sz(l)].str() + " is not a scaled basis element");
      s = Scaled{*angle, m};
    }
    if (!s) throw Error(Errc::InvariantViolated, "antipode of " + h.labels[sz(l)].str() + " vanishes");
    h.antipode.push_back(*s);
  }

  for (int i = 0; i < n; ++i) {
    auto [g, x] = h.labels[sz(i)];
    Elem gi = G.inv(g);
    Elem gx = d.push(g, x);
    Scaled c{-(d.beta(gi, gx, K.inv(gx)) + d.mu(gi, g, x)), h.index(gi, K.inv(gx))};
    h.closed_antipode.push_back(c);
    if (!(c == h.antipode[sz(i)])) h.antipode_mismatches.push_back(i);
  }
  return h;
}

namespace {

/// Linear combinations with root-of-unity coefficients, kept as multisets per key.
using Combo = std::map<std::int64_t, std::vector<RatAngle>>;

bool same_sum(std::vector<RatAngle> a, std::vector<RatAngle> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) return true;
  std::int64_t level = 1;
  for (const auto& v : a) level = std::lcm(level, v.den());
  for (const auto& v : b) level = std::lcm(level, v.den());
  auto f = CycloField::make(level);
  CycloNumber s = CycloNumber::zero(f);
  for (const auto& v : a) s += CycloNumber::embed(f, v);
  for (const auto& v : b) s -= CycloNumber::embed(f, v);
  return s.is_zero();
}

bool equal(const Combo& a, const Combo& b) {
  std::set<std::int64_t> keys;
  for (const auto& [k, v] : a) keys.insert(k);
  for (const auto& [k, v] : b) keys.insert(k);
  static const std::vector<RatAngle> none;
  for (auto k : keys) {
    auto ia = a.find(k), ib = b.find(k);
    if (!same_sum(ia == a.end() ? none : ia->second, ib == b.end() ? none : ib->second)) return false;
  }
  return true;
}

class Algebra {
 public:
  explicit Algebra(const HopfStructure& h) : h_(h), n_(h.dim) {}

  Combo single(int i, RatAngle c = {}) const { return {{i, {c}}}; }
  Combo one() const {
    Combo c;
    for (int u : h_.unit) c[u].push_back({});
    return c;
  }
  Combo one2() const {
    Combo c;
    for (int u : h_.unit)
      for (int v : h_.unit) c[key(u, v)].push_back({});
    return c;
  }

  Combo mul(const Combo& a, const Combo& b) const {
    Combo out;
    for (const auto& [i, va] : a)
      for (const auto& [j, vb] : b) {
        const auto& p = h_.mul(static_cast<int>(i), static_cast<int>(j));
        if (!p) continue;
        for (auto x : va)
          for (auto y : vb) out[p->basis].push_back(x + y + p->c);
      }
    return out;
  }

  Combo mul2(const Combo& a, const Combo& b) const {
    Combo out;
    for (const auto& [i, va] : a)
      for (const auto& [j, vb] : b) {
        const auto& p = h_.mul(left(i), left(j));
        const auto& q = h_.mul(right(i), right(j));
        if (!p || !q) continue;
        for (auto x : va)
          for (auto y : vb) out[key(p->basis, q->basis)].push_back(x + y + p->c + q->c);
      }
    return out;
  }

  Combo delta(const Combo& a) const {
    Combo out;
    for (const auto& [i, va] : a)
      for (const auto& t : h_.coproduct[sz(i)])
        for (auto x : va) out[key(t.left, t.right)].push_back(x + t.c);
    return out;
  }

  Combo antipode(const Combo& a) const {
    Combo out;
    for (const auto& [i, va] : a) {
      const auto& s = h_.antipode[sz(i)];
      for (auto x : va) out[s.basis].push_back(x + s.c);
    }
    return out;
  }

  std::int64_t key(std::int64_t l, std::int64_t r) const { return l * n_ + r; }
  int left(std::int64_t k) const { return static_cast<int>(k / n_); }
  int right(std::int64_t k) const { return static_cast<int>(k % n_); }
  int dim() const { return n_; }

 private:
  const HopfStructure& h_;
  std::int64_t n_;
};

std::string combo_str(const Combo& c, const HopfStructure& h, int arity) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c)
    for (const auto& a : v) {
      if (!first) os << " + ";
      first = false;
      os << "[" << a.str() << "]";
      std::int64_t rest = k;
      std::vector<int> parts;
      for (int i = 0; i < arity; ++i) {
        parts.push_back(static_cast<int>(rest % h.dim));
        rest /= h.dim;
      }
      std::reverse(parts.begin(), parts.end());
      for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "x" : "") << h.labels[sz(parts[i])].str();
    }
  return first ? "0" : os.str();
}

constexpr std::size_t kMaxWitnesses = 8;

}  // namespace

std::string AxiomViolation::str(const HopfStructure& h) const {
  std::ostringstream os;
  os << axiom << " at";
  for (int w : witness) os << " " << h.labels[sz(w)].str();
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

bool AxiomReport::failed(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

std::string AxiomReport::str(const HopfStructure& h) const {
  std::ostringstream os;
  os << (ok() ? "all axioms hold" : std::to_string(violations.size()) + " violation(s)") << "\n";
  for (const auto& [name, count] : checked) {
    std::size_t bad = static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const AxiomViolation& v) { return v.axiom == name; }));
    os << "  " << name << ": " << (bad ? "FAIL" : "ok") << " (" << count << " checked)\n";
  }
  for (const auto& v : violations) os << "  " << v.str(h) << "\n";
  return os.str();
}

AxiomReport verify_hopf_axioms(const HopfStructure& h) {
  AxiomReport r;
  Algebra A(h);
  const int n = h.dim;
  std::map<std::string, std::size_t> failures;
  auto record = [&](const std::string& axiom, std::vector<int> witness, std::string detail) {
    if (failures[axiom]++ < kMaxWitnesses) r.violations.push_back({axiom, std::move(witness), std::move(detail)});
  };
  auto compare = [&](const std::string& axiom, std::vector<int> witness, const Combo& lhs, const Combo& rhs, int arity) {
    ++r.checked[axiom];
    if (!equal(lhs, rhs))
      record(axiom, std::move(witness), combo_str(lhs, h, arity) + " != " + combo_str(rhs, h, arity));
  };

  // Combining two tensor factors into one key for the triple tensor power.
  auto delta_left = [&](const Combo& c2) {
    Combo out;
    for (const auto& [k, v] : c2)
      for (const auto& t : h.coproduct[sz(A.left(k))])
        for (auto x : v) out[(A.key(t.left, t.right)) * n + A.right(k)].push_back(x + t.c);
    return out;
  };
  auto delta_right = [&](const Combo& c2) {
    Combo out;
    for (const auto& [k, v] : c2)
      for (const auto& t : h.coproduct[sz(A.right(k))])
        for (auto x : v) out[(static_cast<std::int64_t>(A.left(k)) * n + t.left) * n + t.right].push_back(x + t.c);
    return out;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        compare("associativity", {i, j, k}, A.mul(A.mul(A.single(i), A.single(j)), A.single(k)),
                A.mul(A.single(i), A.mul(A.single(j), A.single(k))), 1);

  const Combo one = A.one();
  for (int i = 0; i < n; ++i) {
    compare("unit", {i}, A.mul(one, A.single(i)), A.single(i), 1);
    compare("unit", {i}, A.mul(A.single(i), one), A.single(i), 1);
  }

  for (int i = 0; i < n; ++i) {
    Combo l, rr;
    for (const auto& t : h.coproduct[sz(i)]) {
      if (h.counit[sz(t.left)]) l[t.right].push_back(t.c);
      if (h.counit[sz(t.right)]) rr[t.left].push_back(t.c);
    }
    compare("counit", {i}, l, A.single(i), 1);
    compare("counit", {i}, rr, A.single(i), 1);
  }

  for (int i = 0; i < n; ++i) {
    Combo d = A.delta(A.single(i));
    compare("coassociativity", {i}, delta_left(d), delta_right(d), 3);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      compare("delta-multiplicative", {i, j}, A.delta(A.mul(A.single(i), A.single(j))),
              A.mul2(A.delta(A.single(i)), A.delta(A.single(j))), 2);
  compare("delta-unital", {}, A.delta(one), A.one2(), 2);

  auto counit_of = [&](const Combo& c) {
    Combo out;
    for (const auto& [k, v] : c)
      if (h.counit[sz(k)])
        for (auto x : v) out[0].push_back(x);
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Combo rhs;
      if (h.counit[sz(i)] && h.counit[sz(j)]) rhs[0].push_back({});
      compare("counit-multiplicative", {i, j}, counit_of(A.mul(A.single(i), A.single(j))), rhs, 1);
    }
  {
    Combo rhs{{0, {RatAngle{}}}};
    compare("counit-multiplicative", {}, counit_of(one), rhs, 1);
  }

  for (int i = 0; i < n; ++i) {
    Combo lhs_l, lhs_r;
    for (const auto& t : h.coproduct[sz(i)]) {
      Combo a = A.mul(A.antipode(A.single(t.left, t.c)), A.single(t.right));
      Combo b = A.mul(A.single(t.left, t.c), A.antipode(A.single(t.right)));
      for (auto& [k, v] : a) lhs_l[k].insert(lhs_l[k].end(), v.begin(), v.end());
      for (auto& [k, v] : b) lhs_r[k].insert(lhs_r[k].end(), v.begin(), v.end());
    }
    Combo rhs = h.counit[sz(i)] ? one : Combo{};
    compare("antipode-left", {i}, lhs_l, rhs, 1);
    compare("antipode-right", {i}, lhs_r, rhs, 1);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      compare("antipode-antimultiplicative", {i, j}, A.antipode(A.mul(A.single(i), A.single(j))),
              A.mul(A.antipode(A.single(j)), A.antipode(A.single(i))), 1);
  compare("antipode-antimultiplicative", {}, A.antipode(one), one, 1);

  for (const auto& [axiom, count] : failures)
    if (count > kMaxWitnesses)
      r.violations.push_back({axiom, {}, std::to_string(count - kMaxWitnesses) + " further failure(s) not listed"});
  return r;
}

io::json hopf_json(const HopfStructure& h) {
  using io::json;
  json j;
  j["dim"] = h.dim;
  j["basis"] = json::array();
  for (const auto& l : h.labels) j["basis"].push_back(l.str());
  json prod = json::object();
  for (int i = 0; i < h.dim; ++i)
    for (int k = 0; k < h.dim; ++k)
      if (const auto& p = h.mul(i, k))
        prod[h.labels[sz(i)].str() + "|" + h.labels[sz(k)].str()] = json::array({p->c.str(), h.labels[sz(p->basis)].str()});
  j["product"] = prod;
  json co = json::object();
  for (int i = 0; i < h.dim; ++i) {
    json terms = json::array();
    for (const auto& t : h.coproduct[sz(i)])
      terms.push_back(json::array({t.c.str(), h.labels[sz(t.left)].str(), h.labels[sz(t.right)].str()}));
    co[h.labels[sz(i)].str()] = terms;
  }
  j["coproduct"] = co;
  json eps = json::object();
  for (int i = 0; i < h.dim; ++i) eps[h.labels[sz(i)].str()] = h.counit[sz(i)];
  j["counit"] = eps;
  j["unit"] = json::array();
  for (int u : h.unit) j["unit"].push_back(h.labels[sz(u)].str());
  json s = json::object();
  for (int i = 0; i < h.dim; ++i)
    s[h.labels[sz(i)].str()] = json::array({h.antipode[sz(i)].c.str(), h.labels[sz(h.antipode[sz(i)].basis)].str()});
  j["antipode"] = s;
  j["antipode_unique"] = h.antipode_unique;
  json mism = json::array();
  for (int i : h.antipode_mismatches) mism.push_back(h.labels[sz(i)].str());
  j["closed_formula_mismatches"] = mism;
  return j;
}

}  // namespace eqsub::hopf

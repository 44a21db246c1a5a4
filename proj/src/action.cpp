#include "eqsub/action.hpp"

#include <numeric>
#include <sstream>

#include "eqsub/error.hpp"

namespace eqsub::act {

Cocycle3::Cocycle3(FiniteGroup k) : K(std::move(k)) {
  const auto n = static_cast<std::size_t>(K.order());
  w.assign(n * n * n, RatAngle());
}

Cocycle3::Cocycle3(FiniteGroup k, std::vector<RatAngle> values) : K(std::move(k)), w(std::move(values)) {
  const auto n = static_cast<std::size_t>(K.order());
  if (w.size() != n * n * n) throw Error(Errc::OutOfRange, "cocycle table has the wrong size");
}

bool Cocycle3::is_trivial() const {
  for (const auto& v : w)
    if (!v.is_zero()) return false;
  return true;
}

std::string Violation::str() const {
  std::string s = identity + " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + std::to_string(witness[i]);
  return s + "), off by " + discrepancy.str();
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  if (valid()) os << "valid";
  else os << "invalid: " << violations.size() << " violation(s)";
  if (!normalized()) os << " (" << unnormalized.size() << " unnormalized entr" << (unnormalized.size() == 1 ? "y" : "ies") << ")";
  os << "\n";
  for (const auto& v : violations) os << "  " << v.str() << "\n";
  for (const auto& v : unnormalized) os << "  " << v.str() << "\n";
  return os.str();
}

PointedActionData::PointedActionData(grp::ActionByAutomorphisms act, Cocycle3 omega)
    : act_(std::move(act)), omega_(std::move(omega)) {
  if (!(omega_.K == act_.target())) throw Error(Errc::OutOfRange, "cocycle lives on a different group than the action target");
  const auto ng = static_cast<std::size_t>(G().order()), nk = static_cast<std::size_t>(K().order());
  beta_.assign(ng * nk * nk, RatAngle());
  mu_.assign(ng * ng * nk, RatAngle());
}

PointedActionData::PointedActionData(grp::ActionByAutomorphisms act)
    : PointedActionData(act, Cocycle3(act.target())) {}

std::int64_t PointedActionData::denominator() const {
  std::int64_t d = std::lcm(exact::common_denominator(beta_), exact::common_denominator(mu_));
  return std::lcm(d, exact::common_denominator(omega_.w));
}

std::uint64_t PointedActionData::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  };
  for (const auto& t : {G().table(), K().table()}) {
    mix(static_cast<std::int64_t>(t.size()));
    for (const auto& row : t)
      for (int v : row) mix(v);
  }
  for (const auto& p : act_.perms())
    for (int v : p) mix(v);
  for (const auto* tab : {&omega_.w, &beta_, &mu_}) {
    mix(static_cast<std::int64_t>(tab->size()));
    for (const auto& a : *tab) {
      mix(a.num());
      mix(a.den());
    }
  }
  return h;
}

void check_cocycle(const Cocycle3& w, std::vector<Violation>& violations, std::vector<Violation>& unnormalized) {
  const FiniteGroup& K = w.K;
  const int n = K.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if ((a == 0 || b == 0 || c == 0) && !w(a, b, c).is_zero())
          unnormalized.push_back({"omega-normalized", {a, b, c}, w(a, b, c)});
        for (Elem d = 0; d < n; ++d) {
          RatAngle s = w(b, c, d) - w(K.mul(a, b), c, d) + w(a, K.mul(b, c), d) - w(a, b, K.mul(c, d)) + w(a, b, c);
          if (!s.is_zero()) violations.push_back({"omega-cocycle", {a, b, c, d}, s});
        }
      }
}

ValidationReport validate_action_data(const PointedActionData& d) {
  ValidationReport r;
  const FiniteGroup &K = d.K(), &G = d.G();
  const int nk = K.order(), ng = G.order();
  check_cocycle(d.omega(), r.violations, r.unnormalized);

  for (Elem g = 0; g < ng; ++g)
    for (Elem k = 0; k < nk; ++k)
      for (Elem l = 0; l < nk; ++l)
        for (Elem m = 0; m < nk; ++m) {
          RatAngle lhs = d.w(k, l, m) - d.w(d.push(g, k), d.push(g, l), d.push(g, m));
          RatAngle rhs = d.beta(g, k, l) + d.beta(g, K.mul(k, l), m) - d.beta(g, l, m) - d.beta(g, k, K.mul(l, m));
          if (lhs != rhs) r.violations.push_back({"beta-equation", {g, k, l, m}, lhs - rhs});
        }

  for (Elem f = 0; f < ng; ++f)
    for (Elem g = 0; g < ng; ++g)
      for (Elem h = 0; h < ng; ++h)
        for (Elem k = 0; k < nk; ++k) {
          RatAngle lhs = d.mu(g, h, k) + d.mu(f, G.mul(g, h), k);
          RatAngle rhs = d.mu(f, g, d.push(h, k)) + d.mu(G.mul(f, g), h, k);
          if (lhs != rhs) r.violations.push_back({"mu-equation", {f, g, h, k}, lhs - rhs});
        }

  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < ng; ++h)
      for (Elem k = 0; k < nk; ++k)
        for (Elem l = 0; l < nk; ++l) {
          RatAngle lhs = d.beta(G.mul(g, h), k, l) - d.beta(g, d.push(h, k), d.push(h, l)) - d.beta(h, k, l);
          RatAngle rhs = d.mu(g, h, k) + d.mu(g, h, l) - d.mu(g, h, K.mul(k, l));
          if (lhs != rhs) r.violations.push_back({"compatibility", {g, h, k, l}, lhs - rhs});
        }

  for (Elem g = 0; g < ng; ++g)
    for (Elem k = 0; k < nk; ++k)
      for (Elem l = 0; l < nk; ++l)
        if ((k == 0 || l == 0) && !d.beta(g, k, l).is_zero())
          r.unnormalized.push_back({"beta-normalized", {g, k, l}, d.beta(g, k, l)});
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < ng; ++h)
      for (Elem k = 0; k < nk; ++k)
        if ((g == 0 || h == 0) && !d.mu(g, h, k).is_zero())
          r.unnormalized.push_back({"mu-normalized", {g, h, k}, d.mu(g, h, k)});
  return r;
}

PointedActionData apply_gauge(const PointedActionData& d, const std::vector<RatAngle>& gamma) {
  const FiniteGroup &K = d.K(), &G = d.G();
  const int nk = K.order(), ng = G.order();
  if (gamma.size() != static_cast<std::size_t>(ng * nk)) throw Error(Errc::OutOfRange, "gauge table has the wrong size");
  auto gm = [&](Elem g, Elem k) { return gamma[static_cast<std::size_t>(g * nk + k)]; };
  PointedActionData out = d;
  for (Elem g = 0; g < ng; ++g)
    for (Elem k = 0; k < nk; ++k)
      for (Elem l = 0; l < nk; ++l)
        out.set_beta(g, k, l, d.beta(g, k, l) + gm(g, K.mul(k, l)) - gm(g, k) - gm(g, l));
  for (Elem g = 0; g < ng; ++g)
    for (Elem h = 0; h < ng; ++h)
      for (Elem k = 0; k < nk; ++k)
        out.set_mu(g, h, k, d.mu(g, h, k) + gm(g, d.push(h, k)) + gm(h, k) - gm(G.mul(g, h), k));
  return out;
}

PointedActionData normalize(const PointedActionData& d) {
  ValidationReport r = validate_action_data(d);
  if (!r.valid()) throw Error(Errc::NotValid, r.str());
  for (const auto& v : r.unnormalized)
    if (v.identity == "omega-normalized") throw Error(Errc::NotValid, "omega is not normalized");
  if (r.normalized()) return d;
  const int nk = d.K().order(), ng = d.G().order();
  // First make beta vanish on identity arguments, then clear mu(e,e;-).
  std::vector<RatAngle> gamma(static_cast<std::size_t>(ng * nk));
  for (Elem g = 0; g < ng; ++g)
    for (Elem k = 0; k < nk; ++k) gamma[static_cast<std::size_t>(g * nk + k)] = d.beta(g, 0, 0);
  PointedActionData step = apply_gauge(d, gamma);
  std::vector<RatAngle> gamma2(static_cast<std::size_t>(ng * nk));
  for (Elem k = 0; k < nk; ++k) gamma2[static_cast<std::size_t>(k)] = -step.mu(0, 0, k);
  PointedActionData out = apply_gauge(step, gamma2);
  ValidationReport check = validate_action_data(out);
  if (!check.valid() || !check.normalized()) throw Error(Errc::NotValid, "normalization failed: " + check.str());
  return out;
}

PointedActionData double_action(const FiniteGroup& g, const Cocycle3& w) {
  if (!(w.K == g)) throw Error(Errc::InvalidCocycle, "cocycle lives on a different group");
  std::vector<Violation> bad, unnorm;
  check_cocycle(w, bad, unnorm);
  if (!bad.empty()) throw Error(Errc::InvalidCocycle, bad.front().str());
  if (!unnorm.empty()) throw Error(Errc::InvalidCocycle, unnorm.front().str());
  PointedActionData d(grp::conjugation_action(g), w);
  const int n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Elem yay = g.conj(y, a);
        RatAngle eta = w(x, y, a) + w(g.conj(g.mul(x, y), a), x, y) - w(x, yay, y);
        d.set_mu(x, y, a, eta);
        Elem axa = g.conj(a, x), aya = g.conj(a, y);
        RatAngle nu = w(axa, aya, a) + w(a, x, y) - w(axa, a, y);
        d.set_beta(a, x, y, nu);
      }
  return d;
}

Cocycle3 cyclic_cocycle(int n, std::int64_t p) {
  Cocycle3 c(grp::cyclic_group(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        if (b + e >= n) c.set(a, b, e, RatAngle(p * a, n));
  return c;
}

PointedActionData kp_action(int n, RatAngle q) {
  if (n < 1) throw Error(Errc::BadOrder, "n must be positive");
  if (!q.times(n).is_zero()) throw Error(Errc::BadOrder, "q = " + q.str() + " has order not dividing " + std::to_string(n));
  PointedActionData d(grp::swap_action(grp::cyclic_group(n)));
  const Elem s = 1;
  for (Elem a = 0; a < n * n; ++a) {
    const int a1 = a / n, a2 = a % n;
    for (Elem b = 0; b < n * n; ++b) d.set_beta(s, a, b, q.times(static_cast<std::int64_t>(a1) * (b % n)));
    d.set_mu(s, s, a, q.times(static_cast<std::int64_t>(a1) * a2));
  }
  return d;
}

namespace fixtures {

PointedActionData triv(const FiniteGroup& g, const FiniteGroup& k) { return PointedActionData(grp::trivial_action(g, k)); }

PointedActionData kp(int n, RatAngle q) { return kp_action(n, q); }

PointedActionData dbl(const FiniteGroup& g, const Cocycle3& w) { return double_action(g, w); }

PointedActionData mu_character(int n) {
  PointedActionData d = triv(grp::cyclic_group(2), grp::cyclic_group(n));
  for (Elem k = 0; k < n; ++k) d.set_mu(1, 1, k, RatAngle(k, n));
  return d;
}

PointedActionData beta_alternating() {
  PointedActionData d = triv(grp::cyclic_group(2), grp::direct_product(grp::cyclic_group(2), grp::cyclic_group(2)));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) d.set_beta(1, a, b, RatAngle((a / 2) * (b % 2), 2));
  return d;
}

PointedActionData swap_pair() {
  FiniteGroup k = grp::direct_product(grp::cyclic_group(2), grp::cyclic_group(2));
  FiniteGroup g = k;
  std::vector<Elem> id{0, 1, 2, 3}, sw{0, 2, 1, 3};
  // (g1, g2) has index 2 g1 + g2 and acts by the swap to the power g1.
  return PointedActionData(grp::ActionByAutomorphisms(g, k, {id, id, sw, sw}));
}

PointedActionData sym_on_cyclic3() { return triv(grp::symmetric_group(3), grp::cyclic_group(3)); }

}  // namespace fixtures

}  // namespace eqsub::act

#include "eqsub/bichar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eqsub/error.hpp"
#include "eqsub/smith.hpp"

namespace eqsub::triv {

using exact::AngleSystemBuilder;
using grp::FiniteGroup;

namespace {

std::int64_t subgroup_exponent(const FiniteGroup& g, const Subgroup& s) {
  std::int64_t e = 1;
  for (Elem x : s.elements()) e = std::lcm(e, static_cast<std::int64_t>(g.element_order(x)));
  return e;
}

std::int64_t denominators(const std::vector<RatAngle>& v) { return exact::common_denominator(v); }

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

}  // namespace

Bicharacter::Bicharacter(Subgroup l, Subgroup h)
    : L(std::move(l)), H(std::move(h)), table(sz(L.size() * H.size())) {}

Bicharacter::Bicharacter(Subgroup l, Subgroup h, std::vector<RatAngle> values)
    : L(std::move(l)), H(std::move(h)), table(std::move(values)) {
  if (table.size() != sz(L.size() * H.size())) throw Error(Errc::OutOfRange, "bicharacter table has the wrong size");
}

std::size_t Bicharacter::index(Elem k, Elem h) const {
  int i = L.index_of(k), j = H.index_of(h);
  if (i < 0 || j < 0) throw Error(Errc::OutOfRange, "bicharacter argument outside L x H");
  return sz(i * H.size() + j);
}

bool Bicharacter::is_zero() const {
  return std::all_of(table.begin(), table.end(), [](const RatAngle& a) { return a.is_zero(); });
}

std::string Bicharacter::str() const {
  std::string s = "{";
  bool first = true;
  for (Elem k : L.elements())
    for (Elem h : H.elements()) {
      RatAngle v = value(k, h);
      if (v.is_zero()) continue;
      s += (first ? "" : ", ") + std::string("(") + std::to_string(k) + "," + std::to_string(h) + "): " + v.str();
      first = false;
    }
  return s + "}";
}

bool operator<(const Bicharacter& a, const Bicharacter& b) {
  if (!(a.L == b.L)) return a.L < b.L;
  if (!(a.H == b.H)) return a.H < b.H;
  return a.table < b.table;
}

std::string Check::str() const {
  if (ok) return "ok";
  std::string s = identity + " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + std::to_string(witness[i]);
  return s + "), off by " + discrepancy.str();
}

void require_admissible(const PointedActionData& d, const Subgroup& L, const Subgroup& H) {
  grp::require_subgroup(d.K(), L);
  grp::require_subgroup(d.G(), H);
  if (!grp::is_normal(H, d.G())) throw Error(Errc::HNotNormal, "H = " + grp::to_string(H));
  for (Elem h : H.elements())
    for (Elem k : L.elements())
      if (d.push(h, k) != k)
        throw Error(Errc::HActsNontrivially, std::to_string(h) + " moves " + std::to_string(k));
}

bool is_admissible(const PointedActionData& d, const Subgroup& L, const Subgroup& H) {
  try {
    require_admissible(d, L, H);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_invariant(const PointedActionData& d, const Subgroup& L) {
  for (Elem g = 0; g < d.G().order(); ++g)
    for (Elem k : L.elements())
      if (!L.contains(d.push(g, k))) return false;
  return true;
}

Check is_beta_mu_bicharacter(const Bicharacter& eta, const PointedActionData& d) {
  require_admissible(d, eta.L, eta.H);
  const FiniteGroup &K = d.K(), &G = d.G();
  for (Elem h : eta.H.elements())
    for (Elem k1 : eta.L.elements())
      for (Elem k2 : eta.L.elements()) {
        RatAngle diff = eta.value(K.mul(k1, k2), h) - eta.value(k1, h) - eta.value(k2, h) - d.beta(h, k1, k2);
        if (!diff.is_zero()) return {false, "beta-multiplicativity", {k1, k2, h}, diff};
      }
  for (Elem k : eta.L.elements())
    for (Elem g : eta.H.elements())
      for (Elem h : eta.H.elements()) {
        RatAngle diff = eta.value(k, g) + eta.value(k, h) - eta.value(k, G.mul(g, h)) - d.mu(g, h, k);
        if (!diff.is_zero()) return {false, "mu-multiplicativity", {g, h, k}, diff};
      }
  return {};
}

Check is_g_equivariant(const Bicharacter& eta, const PointedActionData& d) {
  Check b = is_beta_mu_bicharacter(eta, d);
  if (!b) throw Error(Errc::NotABicharacter, b.str());
  const FiniteGroup& G = d.G();
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h : eta.H.elements())
      for (Elem k : eta.L.elements()) {
        Elem gk = d.push(g, k), ghg = G.conj(g, h);
        if (!eta.L.contains(gk)) return {false, "L-invariance", {g, k}, RatAngle()};
        RatAngle diff = eta.value(gk, ghg) - eta.value(k, h) - d.mu(ghg, g, k) + d.mu(g, h, k);
        if (!diff.is_zero()) return {false, "equivariance", {g, h, k}, diff};
      }
  return {};
}

namespace {

// Unknown (position of k in L) * |H| + (position of h in H), matching Bicharacter::table.
struct BicharSystem {
  const PointedActionData& d;
  const Subgroup& L;
  const Subgroup& H;
  AngleSystemBuilder b;

  BicharSystem(const PointedActionData& data, const Subgroup& l, const Subgroup& h)
      : d(data), L(l), H(h), b(sz(l.size() * h.size())) {}

  std::size_t var(Elem k, Elem h) const { return sz(L.index_of(k) * H.size() + H.index_of(h)); }

  void biadditive(bool with_corrections) {
    const FiniteGroup &K = d.K(), &G = d.G();
    for (Elem h : H.elements())
      for (Elem k1 : L.elements())
        for (Elem k2 : L.elements())
          b.add({{var(K.mul(k1, k2), h), 1}, {var(k1, h), -1}, {var(k2, h), -1}},
                with_corrections ? d.beta(h, k1, k2) : RatAngle());
    for (Elem k : L.elements())
      for (Elem g : H.elements())
        for (Elem h : H.elements())
          b.add({{var(k, g), 1}, {var(k, h), 1}, {var(k, G.mul(g, h)), -1}}, with_corrections ? d.mu(g, h, k) : RatAngle());
  }

  void equivariance() {
    const FiniteGroup& G = d.G();
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem h : H.elements())
        for (Elem k : L.elements()) {
          Elem ghg = G.conj(g, h);
          b.add({{var(d.push(g, k), ghg), 1}, {var(k, h), -1}}, d.mu(ghg, g, k) - d.mu(g, h, k));
        }
  }

  std::vector<Bicharacter> solve(std::int64_t extra_denominator) const {
    const std::int64_t bound = subgroup_exponent(d.K(), L) * subgroup_exponent(d.G(), H) *
                               std::lcm(b.rhs_denominator(), extra_denominator);
    auto sol = b.solve(bound);
    std::vector<Bicharacter> out;
    sol.for_each([&](const exact::AngleVector& x) { out.emplace_back(L, H, x); });
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

std::vector<Bicharacter> enumerate_bicharacters(const PointedActionData& d, const Subgroup& L, const Subgroup& H,
                                                bool equivariant_only) {
  require_admissible(d, L, H);
  BicharSystem s(d, L, H);
  s.biadditive(true);
  if (equivariant_only) {
    if (!is_invariant(d, L)) throw Error(Errc::InvalidData, "L = " + grp::to_string(L) + " is not G-invariant");
    s.equivariance();
  }
  return s.solve(1);
}

std::vector<Bicharacter> ordinary_bicharacters(const Subgroup& L, const Subgroup& H, const PointedActionData& d) {
  BicharSystem s(d, L, H);
  s.biadditive(false);
  return s.solve(1);
}

bool FirstObstruction::all_solvable() const {
  return std::all_of(solvable.begin(), solvable.end(), [](bool b) { return b; });
}

std::optional<TauTable> FirstObstruction::tau() const {
  if (!all_solvable()) return std::nullopt;
  TauTable t{L, H, {}};
  for (const auto& w : witness) t.values.insert(t.values.end(), w->begin(), w->end());
  return t;
}

FirstObstruction first_obstruction(const PointedActionData& d, const Subgroup& L, const Subgroup& H) {
  require_admissible(d, L, H);
  FirstObstruction out{L, H, {}, {}};
  const FiniteGroup& K = d.K();
  const std::int64_t expL = subgroup_exponent(K, L);
  for (Elem h : H.elements()) {
    AngleSystemBuilder b(sz(L.size()));
    for (Elem k1 : L.elements())
      for (Elem k2 : L.elements())
        b.add({{sz(L.index_of(K.mul(k1, k2))), 1}, {sz(L.index_of(k1)), -1}, {sz(L.index_of(k2)), -1}},
              d.beta(h, k1, k2));
    auto sol = b.solve(expL * b.rhs_denominator());
    out.solvable.push_back(sol.solvable());
    out.witness.push_back(sol.particular);
  }
  return out;
}

SecondObstruction second_obstruction(const PointedActionData& d, const TauTable& tau) {
  const Subgroup &L = tau.L, &H = tau.H;
  require_admissible(d, L, H);
  const FiniteGroup &K = d.K(), &G = d.G();
  const int nl = L.size(), nh = H.size();
  if (tau.values.size() != sz(nl * nh)) throw Error(Errc::TauInvalid, "tau table has the wrong size");
  for (Elem h : H.elements())
    for (Elem k1 : L.elements())
      for (Elem k2 : L.elements()) {
        RatAngle diff = tau.at(h, K.mul(k1, k2)) - tau.at(h, k1) - tau.at(h, k2) - d.beta(h, k1, k2);
        if (!diff.is_zero())
          throw Error(Errc::TauInvalid, "delta tau != beta at (h,k1,k2) = (" + std::to_string(h) + "," +
                                            std::to_string(k1) + "," + std::to_string(k2) + ")");
      }

  SecondObstruction out;
  const auto& He = H.elements();
  const auto& Le = L.elements();
  out.mu_tilde.resize(sz(nh * nh * nl));
  for (int i1 = 0; i1 < nh; ++i1)
    for (int i2 = 0; i2 < nh; ++i2)
      for (int j = 0; j < nl; ++j) {
        Elem h1 = He[sz(i1)], h2 = He[sz(i2)], l = Le[sz(j)];
        out.mu_tilde[sz((i1 * nh + i2) * nl + j)] =
            d.mu(h1, h2, l) + tau.at(G.mul(h1, h2), l) - tau.at(h1, l) - tau.at(h2, l);
      }
  auto mt = [&](Elem h1, Elem h2, Elem l) { return out.at(H.index_of(h1), H.index_of(h2), L.index_of(l), nh, nl); };

  for (Elem h1 : He)
    for (Elem h2 : He)
      for (Elem l1 : Le)
        for (Elem l2 : Le)
          if (mt(h1, h2, K.mul(l1, l2)) != mt(h1, h2, l1) + mt(h1, h2, l2)) out.character_valued = false;
  for (Elem f : He)
    for (Elem g : He)
      for (Elem h : He)
        for (Elem l : Le)
          if (mt(g, h, l) + mt(f, G.mul(g, h), l) != mt(f, g, l) + mt(G.mul(f, g), h, l)) out.cocycle = false;

  // chi(h;l) unknown at (position of h) * |L| + position of l.
  AngleSystemBuilder b(sz(nh * nl));
  auto var = [&](Elem h, Elem l) { return sz(H.index_of(h) * nl + L.index_of(l)); };
  for (Elem h : He)
    for (Elem l1 : Le)
      for (Elem l2 : Le) b.add({{var(h, K.mul(l1, l2)), 1}, {var(h, l1), -1}, {var(h, l2), -1}}, RatAngle());
  for (Elem g : He)
    for (Elem h : He)
      for (Elem l : Le) b.add({{var(g, l), 1}, {var(h, l), 1}, {var(G.mul(g, h), l), -1}}, mt(g, h, l));
  auto sol = b.solve(subgroup_exponent(K, L) * subgroup_exponent(G, H) * denominators(out.mu_tilde));
  out.vanishes = sol.solvable();
  if (sol.particular) out.chi = TauTable{L, H, *sol.particular};
  return out;
}

ObstructionReport obstruction_report(const PointedActionData& d, const Subgroup& L, const Subgroup& H) {
  ObstructionReport r{first_obstruction(d, L, H), std::nullopt, false, 0};
  if (auto tau = r.first.tau()) {
    r.second = second_obstruction(d, *tau);
    r.unobstructed = r.second->vanishes;
  }
  r.bicharacter_count = enumerate_bicharacters(d, L, H, false).size();
  return r;
}

std::string ObstructionReport::str(const PointedActionData& d) const {
  (void)d;
  std::ostringstream os;
  os << "L = " << grp::to_string(first.L) << ", H = " << grp::to_string(first.H) << "\n";
  os << "first obstruction:";
  for (std::size_t i = 0; i < first.solvable.size(); ++i)
    os << " h=" << first.H.elements()[i] << (first.solvable[i] ? " solvable" : " obstructed") << (i + 1 < first.solvable.size() ? ";" : "");
  os << "\n";
  if (second) {
    os << "second obstruction: mu~ " << (second->character_valued ? "character-valued" : "NOT character-valued") << ", "
       << (second->cocycle ? "2-cocycle" : "NOT a 2-cocycle") << ", " << (second->vanishes ? "vanishes" : "nonzero") << "\n";
  } else {
    os << "second obstruction: not reached\n";
  }
  os << "bicharacters: " << bicharacter_count << (unobstructed == (bicharacter_count > 0) ? "" : " (inconsistent with obstructions)") << "\n";
  return os.str();
}

InvarianceObstruction invariance_obstruction(const PointedActionData& d, const Bicharacter& eta) {
  Check b = is_beta_mu_bicharacter(eta, d);
  if (!b) throw Error(Errc::NotABicharacter, b.str());
  if (!is_invariant(d, eta.L)) throw Error(Errc::InvalidData, "L is not G-invariant");
  const FiniteGroup &G = d.G(), &K = d.K();
  const Subgroup &L = eta.L, &H = eta.H;
  const int ng = G.order(), nh = H.size(), nl = L.size();
  InvarianceObstruction out;
  out.omega.resize(sz(ng * nh * nl));
  auto idx = [&](Elem g, Elem h, Elem l) { return sz((g * nh + H.index_of(h)) * nl + L.index_of(l)); };
  for (Elem g = 0; g < ng; ++g)
    for (Elem h : H.elements())
      for (Elem l : L.elements()) {
        Elem ghg = G.conj(g, h);
        RatAngle v = eta.value(l, h) - eta.value(d.push(g, l), ghg) + d.mu(ghg, g, l) - d.mu(g, h, l);
        out.omega[idx(g, h, l)] = v;
        if (!v.is_zero()) out.is_zero = false;
      }
  auto om = [&](Elem g, Elem h, Elem l) { return out.omega[idx(g, h, l)]; };
  for (Elem g1 = 0; g1 < ng; ++g1)
    for (Elem g2 = 0; g2 < ng; ++g2)
      for (Elem h : H.elements())
        for (Elem l : L.elements()) {
          Elem g12 = G.mul(g1, g2);
          RatAngle right = om(g2, h, l) + om(g1, G.conj(g2, h), d.push(g2, l));
          if (out.cocycle && om(g12, h, l) != right) {
            out.cocycle = false;
            out.cocycle_check = {false, "omega-cocycle", {g1, g2, h, l}, om(g12, h, l) - right};
          }
          RatAngle left = om(g1, h, l) + om(g2, G.conj(g1, h), d.push(g1, l));
          if (om(g12, h, l) != left) out.left_form_holds = false;
        }

  // chi ordinary with chi(l,h) - chi(g_*l, ghg^-1) = Omega(g,h,l).
  AngleSystemBuilder sys(sz(nl * nh));
  auto var = [&](Elem k, Elem h) { return sz(L.index_of(k) * nh + H.index_of(h)); };
  for (Elem h : H.elements())
    for (Elem k1 : L.elements())
      for (Elem k2 : L.elements()) sys.add({{var(K.mul(k1, k2), h), 1}, {var(k1, h), -1}, {var(k2, h), -1}}, RatAngle());
  for (Elem k : L.elements())
    for (Elem g : H.elements())
      for (Elem h : H.elements()) sys.add({{var(k, g), 1}, {var(k, h), 1}, {var(k, G.mul(g, h)), -1}}, RatAngle());
  for (Elem g = 0; g < ng; ++g)
    for (Elem h : H.elements())
      for (Elem l : L.elements()) sys.add({{var(l, h), 1}, {var(d.push(g, l), G.conj(g, h)), -1}}, om(g, h, l));
  auto sol = sys.solve(subgroup_exponent(K, L) * subgroup_exponent(G, H) * denominators(out.omega));
  out.vanishes = sol.solvable();
  if (sol.particular) {
    Bicharacter chi(L, H, *sol.particular);
    Bicharacter inv = eta;
    for (std::size_t i = 0; i < inv.table.size(); ++i) inv.table[i] -= chi.table[i];
    out.chi = std::move(chi);
    out.invariant = std::move(inv);
  }
  return out;
}

bool torsor_check(const Bicharacter& eta1, const Bicharacter& eta2, const PointedActionData& d) {
  if (!(eta1.L == eta2.L) || !(eta1.H == eta2.H)) return false;
  const FiniteGroup &K = d.K(), &G = d.G();
  Bicharacter diff = eta1;
  for (std::size_t i = 0; i < diff.table.size(); ++i) diff.table[i] -= eta2.table[i];
  for (Elem h : diff.H.elements())
    for (Elem k1 : diff.L.elements())
      for (Elem k2 : diff.L.elements())
        if (diff.value(K.mul(k1, k2), h) != diff.value(k1, h) + diff.value(k2, h)) return false;
  for (Elem k : diff.L.elements())
    for (Elem g : diff.H.elements())
      for (Elem h : diff.H.elements())
        if (diff.value(k, G.mul(g, h)) != diff.value(k, g) + diff.value(k, h)) return false;
  return true;
}

Bicharacter invert_bicharacter(const Bicharacter& eta) {
  Bicharacter out = eta;
  for (auto& v : out.table) v = -v;
  return out;
}

KpEtaZeta kp_eta_zeta(int n, RatAngle q, int m, RatAngle zeta) {
  if (m < 1 || n % m != 0) throw Error(Errc::OutOfRange, "m must divide n");
  PointedActionData d = act::kp_action(n, q);
  const int x = n / m;
  KpEtaZeta out;
  out.n = n;
  out.m = m;
  auto formula = [&](std::int64_t l) {
    std::int64_t c = static_cast<std::int64_t>(x) * x * (l * (l + 1) / 2);
    return q.times(-c) + zeta.times(l);
  };
  out.tau_generator = q.times(-static_cast<std::int64_t>(x) * x);
  for (int l = 0; l < m; ++l)
    if (formula(l) != formula(l + m)) {
      out.well_defined = false;
      out.disagreement = l;
      break;
    }
  if (!out.well_defined) return out;

  const Elem gen = x % n * n + x % n;
  std::vector<Elem> gens{gen};
  Subgroup L = grp::generated_subgroup(d.K(), gens);
  Subgroup H = grp::whole_group(d.G());
  Bicharacter eta(L, H);
  for (int l = 0; l < m; ++l) {
    Elem k = (l * x % n) * n + (l * x % n);
    eta.set(k, 1, formula(l));
  }
  out.is_bicharacter = static_cast<bool>(is_beta_mu_bicharacter(eta, d));
  if (out.is_bicharacter) out.equivariant = static_cast<bool>(is_g_equivariant(eta, d));
  out.eta = std::move(eta);
  return out;
}

}  // namespace eqsub::triv

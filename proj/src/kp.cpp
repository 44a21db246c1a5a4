#include "eqsub/kp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "eqsub/error.hpp"
#include "eqsub/smith.hpp"

namespace eqsub::kp {

using grp::Elem;

namespace {

std::size_t sz(std::int64_t v) { return static_cast<std::size_t>(v); }

std::string fp_str(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

int divisor_exact(int n, int d) {
  if (d < 1 || n % d != 0) throw Error(Errc::OutOfRange, std::to_string(d) + " does not divide " + std::to_string(n));
  return n / d;
}

}  // namespace

std::string GoursatDatum::str() const {
  return "B=" + std::to_string(b) + " N=" + std::to_string(v) + " f=" + std::to_string(u) + " mod " + std::to_string(r);
}

std::vector<GoursatDatum> kp_goursat(int n) {
  if (n < 1) throw Error(Errc::BadOrder, "n must be positive");
  std::vector<GoursatDatum> out;
  for (int b = 1; b <= n; ++b) {
    if (n % b) continue;
    const int step = divisor_exact(n, b);
    for (int v = 1; v <= b; ++v) {
      if (b % v) continue;
      const int r = b / v;
      for (int u = 0; u < r; ++u) {
        if (std::gcd(u, r) != 1 || (u * u - 1) % r != 0) continue;
        GoursatDatum g{b, v, r, u, {}};
        std::vector<Elem> elems;
        for (int t1 = 0; t1 < b; ++t1)
          for (int t2 = 0; t2 < b; ++t2)
            if ((u * t1 - t2) % r == 0) elems.push_back((step * t1 % n) * n + step * t2 % n);
        std::sort(elems.begin(), elems.end());
        g.H = Subgroup(elems);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::string to_string(Mode m) { return m == Mode::AsStated ? "as-stated" : "main-theorem"; }

std::string to_string(ZetaReading z) { return z == ZetaReading::ExactOrder ? "exact-order" : "mth-root"; }

std::string Type1Entry::key() const { return "type1 m=" + std::to_string(m) + " zeta=" + zeta.str(); }

std::string Type2Entry::key() const {
  std::string e = "trivial";
  if (eta && std::any_of(eta->begin(), eta->end(), [](const RatAngle& a) { return !a.is_zero(); })) {
    e = "[";
    for (std::size_t i = 0; i < eta->size(); ++i) e += (i ? "," : "") + (*eta)[i].str();
    e += "]";
  }
  return "type2 " + datum.str() + " eta=" + e;
}

std::vector<std::int64_t> KPReport::fpdims() const {
  std::vector<std::int64_t> v;
  for (const auto& t : type1) v.push_back(t.fpdim);
  for (const auto& t : type2) v.push_back(t.fpdim);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> KPReport::keys() const {
  std::vector<std::string> k;
  for (const auto& t : type1) k.push_back(t.key());
  for (const auto& t : type2) k.push_back(t.key());
  return k;
}

std::string KPReport::str() const {
  std::ostringstream os;
  os << "n=" << n << " q=" << q.str() << " mode=" << to_string(mode);
  if (mode == Mode::AsStated) os << " zeta=" << to_string(reading);
  os << "\n";
  os << "fpdim  entry\n";
  for (const auto& t : type1) os << t.fpdim << "\t" << t.key() << "\n";
  for (const auto& t : type2) os << t.fpdim << "\t" << t.key() << "\n";
  os << "total " << total() << "  fpdims " << fp_str(fpdims()) << "\n";
  return os.str();
}

io::json KPReport::json() const {
  io::json j;
  j["n"] = n;
  j["q"] = q.str();
  j["mode"] = to_string(mode);
  j["zeta_reading"] = to_string(reading);
  j["type1"] = io::json::array();
  for (const auto& t : type1) j["type1"].push_back({{"m", t.m}, {"zeta", t.zeta.str()}, {"fpdim", t.fpdim}});
  j["type2"] = io::json::array();
  for (const auto& t : type2) {
    io::json e{{"B", t.datum.b}, {"N", t.datum.v}, {"f", t.datum.u}, {"H", io::subgroup_json(t.datum.H)}, {"fpdim", t.fpdim}};
    if (t.eta) {
      io::json vals = io::json::array();
      for (const auto& a : *t.eta) vals.push_back(a.str());
      e["eta"] = vals;
    } else {
      e["eta"] = nullptr;
    }
    j["type2"].push_back(e);
  }
  j["total"] = total();
  j["fpdims"] = fpdims();
  return j;
}

namespace {

/// Characters of H <= Z/n x Z/n with eta(a,b) = eta(b,a).
std::vector<std::vector<RatAngle>> symmetric_characters(int n, const Subgroup& H) {
  const auto& el = H.elements();
  exact::AngleSystemBuilder sys(el.size());
  auto add = [n](Elem a, Elem b) { return ((a / n + b / n) % n) * n + (a % n + b % n) % n; };
  for (Elem s : el)
    for (Elem t : el)
      sys.add({{sz(H.index_of(s)), 1}, {sz(H.index_of(t)), 1}, {sz(H.index_of(add(s, t))), -1}}, RatAngle{});
  for (Elem s : el) {
    Elem sw = (s % n) * n + s / n;
    if (sw != s) sys.add({{sz(H.index_of(s)), 1}, {sz(H.index_of(sw)), -1}}, RatAngle{});
  }
  auto all = sys.solve(n).all();
  std::sort(all.begin(), all.end());
  return all;
}

void sort_report(KPReport& r) {
  std::sort(r.type1.begin(), r.type1.end(),
            [](const Type1Entry& a, const Type1Entry& b) { return std::tie(a.m, a.zeta) < std::tie(b.m, b.zeta); });
  std::stable_sort(r.type2.begin(), r.type2.end(), [](const Type2Entry& a, const Type2Entry& b) {
    return std::tie(a.datum.b, a.datum.v, a.datum.u) < std::tie(b.datum.b, b.datum.v, b.datum.u);
  });
}

}  // namespace

KPReport kp_classify(int n, RatAngle q, Mode mode, ZetaReading reading) {
  const auto d = act::kp_action(n, q);
  KPReport r;
  r.mode = mode;
  r.reading = reading;
  r.n = n;
  r.q = q;
  const auto goursat = kp_goursat(n);

  if (mode == Mode::AsStated) {
    for (int m = 1; m <= n; ++m) {
      if (n % m) continue;
      const int x = n / m;
      const RatAngle lhs = q.times(static_cast<std::int64_t>(x) * x);
      std::vector<RatAngle> candidates;
      if (reading == ZetaReading::ExactOrder) {
        for (int j = 0; j < x; ++j)
          if (std::gcd(j, x) == 1) candidates.emplace_back(j, x);
      } else {
        for (int j = 0; j < m; ++j) candidates.emplace_back(j, m);
      }
      for (const auto& z : candidates)
        if (z.times(2) == lhs) r.type1.push_back({m, z, m});
    }
    for (const auto& g : goursat)
      for (auto& eta : symmetric_characters(n, g.H)) r.type2.push_back({g, std::move(eta), 2 * static_cast<std::int64_t>(g.H.size())});
    sort_report(r);
    return r;
  }

  for (const auto& t : lat::enumerate_triples(d)) {
    if (t.H.size() == 2) {
      const int m = t.L.size();
      const int x = n / m;
      const Elem gen = (x % n) * n + x % n;
      // eta(l(x,x), s) = q x^2 l(l+1)/2 - l zeta, which forces 2 zeta = q x^2
      RatAngle zeta = q.times(static_cast<std::int64_t>(x) * x) - t.eta.value(gen, 1);
      r.type1.push_back({m, zeta, t.fpdim});
    } else {
      auto it = std::find_if(goursat.begin(), goursat.end(), [&](const GoursatDatum& g) { return g.H == t.L; });
      if (it == goursat.end()) throw Error(Errc::InvariantViolated, "invariant subgroup " + grp::to_string(t.L) + " has no Goursat datum");
      r.type2.push_back({*it, std::nullopt, t.fpdim});
    }
  }
  sort_report(r);
  return r;
}

ConcordanceReport compare_kp_vs_general(int n, RatAngle q, ZetaReading reading, std::uint64_t seed) {
  ConcordanceReport c;
  c.n = n;
  c.q = q;
  c.as_stated = kp_classify(n, q, Mode::AsStated, reading);
  c.main = kp_classify(n, q, Mode::MainTheorem, reading);
  const auto d = act::kp_action(n, q);
  try {
    const auto h = hopf::build_bismash(d);
    const auto ring = oracle::fusion_ring(h, seed);
    c.oracle = oracle::compare(oracle::enumerate_based_subrings(ring), lat::build_lattice(d));
  } catch (const Error& e) {
    c.oracle_error = e.what();
  }
  if (c.oracle) {
    c.main_matches_oracle = c.oracle->equal() && c.main.total() == c.oracle->oracle_count &&
                            c.main.fpdims() == c.oracle->oracle_fpdims;
    c.as_stated_matches_oracle =
        c.as_stated.total() == c.oracle->oracle_count && c.as_stated.fpdims() == c.oracle->oracle_fpdims;
  }
  auto a = c.as_stated.keys(), m = c.main.keys();
  std::multiset<std::string> sa(a.begin(), a.end()), sm(m.begin(), m.end());
  std::set_difference(sa.begin(), sa.end(), sm.begin(), sm.end(), std::back_inserter(c.only_as_stated));
  std::set_difference(sm.begin(), sm.end(), sa.begin(), sa.end(), std::back_inserter(c.only_main));
  c.as_stated_matches_main = c.only_as_stated.empty() && c.only_main.empty();
  return c;
}

std::string ConcordanceReport::str() const {
  std::ostringstream os;
  os << "n=" << n << " q=" << q.str() << " zeta reading " << to_string(as_stated.reading) << "\n";
  os << "source        count  fpdims\n";
  auto row = [&](const std::string& name, std::size_t count, const std::vector<std::int64_t>& fp) {
    os << name << std::string(14 - name.size(), ' ') << count << std::string(count < 10 ? 6 : 5, ' ') << fp_str(fp)
       << "\n";
  };
  row("as-stated", as_stated.total(), as_stated.fpdims());
  row("main-theorem", main.total(), main.fpdims());
  if (oracle)
    row("oracle", oracle->oracle_count, oracle->oracle_fpdims);
  else
    os << "oracle        failed: " << oracle_error << "\n";
  os << "main-theorem vs oracle: " << (main_matches_oracle ? "agree" : "DISAGREE") << "\n";
  os << "as-stated vs oracle: " << (as_stated_matches_oracle ? "agree" : "flagged") << "\n";
  os << "as-stated vs main-theorem: " << (as_stated_matches_main ? "same entries" : "entries differ") << "\n";
  for (const auto& k : only_as_stated) os << "  only as-stated: " << k << "\n";
  for (const auto& k : only_main) os << "  only main-theorem: " << k << "\n";
  return os.str();
}

io::json ConcordanceReport::json() const {
  io::json j;
  j["n"] = n;
  j["q"] = q.str();
  j["as_stated"] = as_stated.json();
  j["main_theorem"] = main.json();
  if (oracle) {
    j["oracle"] = {{"count", oracle->oracle_count},
                   {"fpdims", oracle->oracle_fpdims},
                   {"isomorphic_to_triples", oracle->isomorphic}};
  } else {
    j["oracle"] = {{"error", oracle_error}};
  }
  j["main_matches_oracle"] = main_matches_oracle;
  j["as_stated_matches_oracle"] = as_stated_matches_oracle;
  j["as_stated_flagged"] = as_stated_flagged();
  j["only_as_stated"] = only_as_stated;
  j["only_main_theorem"] = only_main;
  return j;
}

}  // namespace eqsub::kp

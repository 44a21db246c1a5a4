#include "eqsub/lattice.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "eqsub/error.hpp"
#include "eqsub/serialize.hpp"

namespace eqsub::lat {

using grp::Elem;

std::vector<Triple> enumerate_triples(const PointedActionData& d) {
  auto report = act::validate_action_data(d);
  if (!report.valid()) throw Error(Errc::InvalidData, report.str());
  const auto fp = d.fingerprint();
  auto normals = grp::normal_subgroups(d.G());
  std::stable_sort(normals.begin(), normals.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.elements() < b.elements();
  });
  const auto invariant = grp::invariant_subgroups(d.action());
  std::vector<Triple> out;
  for (const auto& H : normals) {
    Subgroup fixed = grp::fixed_subgroup(d.action(), H);
    for (const auto& L : invariant) {
      if (!L.is_subset_of(fixed)) continue;
      for (auto& eta : triv::enumerate_bicharacters(d, L, H, true)) {
        Triple t{L, H, std::move(eta), 0, fp};
        t.fpdim = static_cast<std::int64_t>(d.G().order() / H.size()) * L.size();
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

bool triple_leq(const Triple& t1, const Triple& t2) {
  if (t1.data != t2.data) throw Error(Errc::MixedData, "triples come from different action data");
  if (!t1.L.is_subset_of(t2.L) || !t2.H.is_subset_of(t1.H)) return false;
  for (Elem k : t1.L.elements())
    for (Elem h : t2.H.elements())
      if (t1.eta.value(k, h) != t2.eta.value(k, h)) return false;
  return true;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> edges;
  auto lt = [&](int a, int b) { return a != b && leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) cover = !(lt(i, k) && lt(k, j));
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

namespace {

std::vector<std::size_t> counts(const std::vector<std::vector<bool>>& leq, bool below) {
  std::vector<std::size_t> c(leq.size(), 0);
  for (std::size_t i = 0; i < leq.size(); ++i)
    for (std::size_t j = 0; j < leq.size(); ++j)
      if (below ? leq[j][i] : leq[i][j]) ++c[i];
  return c;
}

}  // namespace

bool posets_isomorphic(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  auto la = a.label, lb = b.label;
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  const auto a_below = counts(a.leq, true), a_above = counts(a.leq, false);
  const auto b_below = counts(b.leq, true), b_above = counts(b.leq, false);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || a.label[i] != b.label[j] || a_below[i] != b_below[j] || a_above[i] != b_above[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) {
        auto q = static_cast<std::size_t>(map[p]);
        ok = a.leq[p][i] == b.leq[q][j] && a.leq[i][p] == b.leq[j][q];
      }
      if (!ok) continue;
      map[i] = static_cast<int>(j);
      used[j] = true;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    map[i] = -1;
    return false;
  };
  return rec(0);
}

Poset SubcategoryLattice::poset() const {
  Poset p;
  for (const auto& t : triples) p.label.push_back(t.fpdim);
  p.leq = leq;
  return p;
}

SubcategoryLattice build_lattice(const PointedActionData& d) {
  SubcategoryLattice lat;
  lat.triples = enumerate_triples(d);
  const std::size_t n = lat.triples.size();
  lat.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lat.leq[i][j] = triple_leq(lat.triples[i], lat.triples[j]);
  const auto& L = lat.leq;
  for (std::size_t i = 0; i < n; ++i) {
    if (!L[i][i]) lat.partial_order = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && L[i][j] && L[j][i]) lat.partial_order = false;
      for (std::size_t k = 0; k < n; ++k)
        if (L[i][j] && L[j][k] && !L[i][k]) lat.partial_order = false;
    }
  }
  auto bound_exists = [&](std::size_t i, std::size_t j, bool lower) {
    std::vector<std::size_t> bounds;
    for (std::size_t k = 0; k < n; ++k)
      if (lower ? (L[k][i] && L[k][j]) : (L[i][k] && L[j][k])) bounds.push_back(k);
    for (std::size_t m : bounds) {
      bool best = true;
      for (std::size_t k : bounds) best = best && (lower ? L[k][m] : L[m][k]);
      if (best) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!bound_exists(i, j, true)) lat.meets_exist = false;
      if (!bound_exists(i, j, false)) lat.joins_exist = false;
    }
  for (std::size_t i = 0; i < n; ++i) {
    bool lo = true, hi = true;
    for (std::size_t j = 0; j < n; ++j) {
      lo = lo && L[i][j];
      hi = hi && L[j][i];
    }
    if (lo) lat.minimum = static_cast<int>(i);
    if (hi) lat.maximum = static_cast<int>(i);
  }
  return lat;
}

namespace {

std::string label(const Triple& t) {
  return "L=" + grp::to_string(t.L) + " H=" + grp::to_string(t.H) + " eta=" + t.eta.str();
}

}  // namespace

std::string render(const SubcategoryLattice& lattice, Format format) {
  std::ostringstream os;
  const auto& ts = lattice.triples;
  switch (format) {
    case Format::Table: {
      os << std::left << std::setw(6) << "index" << std::setw(5) << "|L|" << std::setw(5) << "|H|" << std::setw(7)
         << "fpdim" << "eta\n";
      for (std::size_t i = 0; i < ts.size(); ++i)
        os << std::setw(6) << i << std::setw(5) << ts[i].L.size() << std::setw(5) << ts[i].H.size() << std::setw(7)
           << ts[i].fpdim << ts[i].eta.str() << "  L=" << grp::to_string(ts[i].L) << " H=" << grp::to_string(ts[i].H)
           << "\n";
      break;
    }
    case Format::Dot: {
      os << "digraph lattice {\n  rankdir=BT;\n";
      for (std::size_t i = 0; i < ts.size(); ++i)
        os << "  n" << i << " [label=\"" << i << ": fpdim " << ts[i].fpdim << "\\n" << label(ts[i]) << "\"];\n";
      for (auto [a, b] : hasse_edges(lattice.leq)) os << "  n" << a << " -> n" << b << ";\n";
      os << "}\n";
      break;
    }
    case Format::Json: {
      io::json j;
      j["triples"] = io::json::array();
      for (const auto& t : ts)
        j["triples"].push_back({{"L", io::subgroup_json(t.L)},
                                {"H", io::subgroup_json(t.H)},
                                {"eta", io::bicharacter_json(t.eta)},
                                {"fpdim", t.fpdim}});
      io::json leq = io::json::array();
      for (const auto& row : lattice.leq) {
        io::json r = io::json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        leq.push_back(r);
      }
      j["leq"] = leq;
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace eqsub::lat

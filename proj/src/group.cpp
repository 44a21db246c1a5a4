#include "eqsub/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "eqsub/error.hpp"

namespace eqsub::grp {

FiniteGroup::FiniteGroup(const std::vector<std::vector<int>>& t) : order_(static_cast<int>(t.size())) {
  mul_.reserve(t.size() * t.size());
  for (const auto& row : t) mul_.insert(mul_.end(), row.begin(), row.end());
  inv_.assign(t.size(), 0);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inv_[static_cast<std::size_t>(a)] = b;
  for (int a = 0; a < order_; ++a) labels_.push_back(std::to_string(a));
}

Elem FiniteGroup::power(Elem a, std::int64_t k) const {
  int n = element_order(a);
  k %= n;
  if (k < 0) k += n;
  Elem r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Elem a) const {
  int n = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++n;
  return n;
}

std::int64_t FiniteGroup::exponent() const {
  std::int64_t e = 1;
  for (Elem a = 0; a < order_; ++a) e = std::lcm(e, static_cast<std::int64_t>(element_order(a)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
  return t;
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(Errc::OutOfRange, "empty multiplication table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n)
      throw Error(Errc::OutOfRange, "row " + std::to_string(a) + " has the wrong length");
    for (int b = 0; b < n; ++b) {
      int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n)
        throw Error(Errc::OutOfRange, "entry (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                                          std::to_string(v));
    }
  }
  auto m = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          throw Error(Errc::NonAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                std::to_string(c) + ")");
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = m(c, x) == x && m(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw Error(Errc::NoIdentity, "no two-sided identity");
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y) found = m(x, y) == e && m(y, x) == e;
    if (!found) throw Error(Errc::NoInverse, "element " + std::to_string(x));
  }
  // Swap labels e <-> 0 so the identity is element 0.
  auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<std::vector<int>> canon(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      canon[static_cast<std::size_t>(relabel(a))][static_cast<std::size_t>(relabel(b))] = relabel(m(a, b));
  FiniteGroup g(canon);
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n) throw Error(Errc::OutOfRange, "label count mismatch");
    std::swap(labels[0], labels[static_cast<std::size_t>(e)]);
    g.labels_ = std::move(labels);
  }
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(Errc::OutOfRange, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return validate_group(t);
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw Error(Errc::OutOfRange, "symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<std::string> labels;
  if (n == 3) {
    perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    labels = {"id", "(12)", "(13)", "(23)", "(123)", "(132)"};
  } else {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
      std::string s;
      for (int v : p) s += std::to_string(v + 1);
      labels.push_back("[" + s + "]");
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const int order = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // (a b)(i) = a(b(i))
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      t[static_cast<std::size_t>(a)].push_back(find(c));
    }
  return validate_group(t, labels);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb));
  std::vector<std::string> labels;
  for (int x = 0; x < na * nb; ++x) {
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y)
      t[static_cast<std::size_t>(x)].push_back(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  }
  return validate_group(t, labels);
}

namespace {

int consume_int(std::string_view& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr == s.data()) throw Error(Errc::Parse, "expected an integer at '" + std::string(s) + "'");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return v;
}

bool consume_prefix(std::string_view& s, std::string_view p) {
  if (!s.starts_with(p)) return false;
  s.remove_prefix(p.size());
  return true;
}

}  // namespace

FiniteGroup consume_group_preset(std::string_view& s) {
  if (consume_prefix(s, "cyclic:")) return cyclic_group(consume_int(s));
  if (consume_prefix(s, "sym:")) return symmetric_group(consume_int(s));
  if (consume_prefix(s, "product:")) {
    FiniteGroup g = consume_group_preset(s);
    while (consume_prefix(s, ",")) g = direct_product(g, consume_group_preset(s));
    return g;
  }
  throw Error(Errc::Parse, "unknown group preset '" + std::string(s) + "'");
}

FiniteGroup parse_group_preset(std::string_view text) {
  std::string_view s = text;
  FiniteGroup g = consume_group_preset(s);
  if (!s.empty()) throw Error(Errc::Parse, "trailing text in group preset '" + std::string(text) + "'");
  return g;
}

Subgroup::Subgroup(std::vector<Elem> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

int Subgroup::index_of(Elem x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  return it != elems_.end() && *it == x ? static_cast<int>(it - elems_.begin()) : -1;
}

bool Subgroup::is_subset_of(const Subgroup& o) const {
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elems_ < b.elems_;
}

Subgroup trivial_subgroup() { return Subgroup(); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> e(static_cast<std::size_t>(g.order()));
  std::iota(e.begin(), e.end(), 0);
  return Subgroup(std::move(e));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        elems.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(std::move(elems));
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Elem x : elems) {
    if (x < 0 || x >= g.order()) return false;
    in[static_cast<std::size_t>(x)] = 1;
  }
  if (!in[0]) return false;
  for (Elem a : elems) {
    if (!in[static_cast<std::size_t>(g.inv(a))]) return false;
    for (Elem b : elems)
      if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
  }
  return true;
}

void require_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h.elements())) throw Error(Errc::NotASubgroup, to_string(h));
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
  // Every subgroup is reached from {e} by adjoining one element at a time.
  std::set<Subgroup> found{trivial_subgroup()};
  std::deque<Subgroup> queue{trivial_subgroup()};
  while (!queue.empty()) {
    Subgroup s = queue.front();
    queue.pop_front();
    for (Elem x = 0; x < g.order(); ++x) {
      if (s.contains(x)) continue;
      std::vector<Elem> gens = s.elements();
      gens.push_back(x);
      Subgroup t = generated_subgroup(g, gens);
      if (found.insert(t).second) queue.push_back(t);
    }
  }
  return {found.begin(), found.end()};
}

bool is_normal(const Subgroup& h, const FiniteGroup& g) {
  require_subgroup(g, h);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : h.elements())
      if (!h.contains(g.conj(x, y))) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& s : enumerate_subgroups(g))
    if (is_normal(s, g)) out.push_back(std::move(s));
  return out;
}

ActionByAutomorphisms::ActionByAutomorphisms(FiniteGroup acting, FiniteGroup target,
                                             std::vector<std::vector<Elem>> perm)
    : acting_(std::move(acting)), target_(std::move(target)), perm_(std::move(perm)) {
  const int ng = acting_.order(), nk = target_.order();
  if (static_cast<int>(perm_.size()) != ng) throw Error(Errc::OutOfRange, "one permutation per acting element needed");
  for (int g = 0; g < ng; ++g) {
    const auto& p = perm_[static_cast<std::size_t>(g)];
    if (static_cast<int>(p.size()) != nk) throw Error(Errc::OutOfRange, "permutation length mismatch");
    std::vector<char> seen(static_cast<std::size_t>(nk), 0);
    for (Elem v : p) {
      if (v < 0 || v >= nk || seen[static_cast<std::size_t>(v)])
        throw Error(Errc::OutOfRange, "image of element " + std::to_string(g) + " is not a permutation");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (Elem a = 0; a < nk; ++a)
      for (Elem b = 0; b < nk; ++b)
        if (p[static_cast<std::size_t>(target_.mul(a, b))] !=
            target_.mul(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]))
          throw Error(Errc::OutOfRange, "image of element " + std::to_string(g) + " is not an automorphism");
  }
  for (Elem k = 0; k < nk; ++k)
    if (apply(0, k) != k) throw Error(Errc::OutOfRange, "identity does not act trivially");
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (Elem k = 0; k < nk; ++k)
        if (apply(g, apply(h, k)) != apply(acting_.mul(g, h), k))
          throw Error(Errc::OutOfRange, "not a left action at (" + std::to_string(g) + "," + std::to_string(h) + ")");
}

bool ActionByAutomorphisms::is_trivial() const {
  for (int g = 0; g < acting_.order(); ++g)
    for (Elem k = 0; k < target_.order(); ++k)
      if (apply(g, k) != k) return false;
  return true;
}

ActionByAutomorphisms trivial_action(const FiniteGroup& acting, const FiniteGroup& target) {
  std::vector<Elem> id(static_cast<std::size_t>(target.order()));
  std::iota(id.begin(), id.end(), 0);
  return ActionByAutomorphisms(acting, target, std::vector<std::vector<Elem>>(static_cast<std::size_t>(acting.order()), id));
}

ActionByAutomorphisms conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> perm(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    for (int k = 0; k < g.order(); ++k) perm[static_cast<std::size_t>(x)].push_back(g.conj(x, k));
  return ActionByAutomorphisms(g, g, std::move(perm));
}

ActionByAutomorphisms swap_action(const FiniteGroup& a) {
  FiniteGroup k = direct_product(a, a);
  const int n = a.order();
  std::vector<Elem> id(static_cast<std::size_t>(n * n)), sw(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n * n; ++x) {
    id[static_cast<std::size_t>(x)] = x;
    sw[static_cast<std::size_t>(x)] = (x % n) * n + x / n;
  }
  return ActionByAutomorphisms(cyclic_group(2), std::move(k), {id, sw});
}

std::vector<Subgroup> invariant_subgroups(const ActionByAutomorphisms& act) {
  std::vector<Subgroup> out;
  for (auto& s : enumerate_subgroups(act.target())) {
    bool inv = true;
    for (int g = 0; g < act.acting().order() && inv; ++g)
      for (Elem k : s.elements())
        if (!s.contains(act.apply(g, k))) {
          inv = false;
          break;
        }
    if (inv) out.push_back(std::move(s));
  }
  return out;
}

Subgroup fixed_subgroup(const ActionByAutomorphisms& act, const Subgroup& h) {
  require_subgroup(act.acting(), h);
  std::vector<Elem> fixed;
  for (Elem k = 0; k < act.target().order(); ++k) {
    bool f = true;
    for (Elem g : h.elements()) f = f && act.apply(g, k) == k;
    if (f) fixed.push_back(k);
  }
  return Subgroup(std::move(fixed));
}

std::string to_string(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elements()[i]);
  }
  return out + "}";
}

}  // namespace eqsub::grp

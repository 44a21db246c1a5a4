#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqsub/action.hpp"

namespace eqsub::triv {

using act::PointedActionData;
using exact::RatAngle;
using grp::Elem;
using grp::Subgroup;

/// eta: L x H -> Q/Z, stored row-major by (position in L, position in H).
struct Bicharacter {
  Subgroup L;
  Subgroup H;
  std::vector<RatAngle> table;

  Bicharacter() : table(1) {}
  Bicharacter(Subgroup l, Subgroup h);
  Bicharacter(Subgroup l, Subgroup h, std::vector<RatAngle> values);

  RatAngle value(Elem k, Elem h) const { return table[index(k, h)]; }
  void set(Elem k, Elem h, RatAngle v) { table[index(k, h)] = v; }
  std::size_t index(Elem k, Elem h) const;
  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;
  /// Lexicographic by (L, H, table).
  friend bool operator<(const Bicharacter& a, const Bicharacter& b);
};

/// Outcome of an identity check; holds the first failing tuple.
struct Check {
  bool ok = true;
  std::string identity;
  std::vector<Elem> witness;
  RatAngle discrepancy;

  explicit operator bool() const { return ok; }
  std::string str() const;
};

/// Throws NotASubgroup, HNotNormal or HActsNontrivially.
void require_admissible(const PointedActionData& d, const Subgroup& L, const Subgroup& H);
bool is_admissible(const PointedActionData& d, const Subgroup& L, const Subgroup& H);
bool is_invariant(const PointedActionData& d, const Subgroup& L);

/// eta(k1k2,h) = eta(k1,h) + eta(k2,h) + beta(h;k1,k2) and eta(k,g) + eta(k,h) = eta(k,gh) + mu(g,h;k).
Check is_beta_mu_bicharacter(const Bicharacter& eta, const PointedActionData& d);

/// eta(g_*k, ghg^-1) = eta(k,h) + mu(ghg^-1,g;k) - mu(g,h;k) for all g in G. Throws NotABicharacter.
Check is_g_equivariant(const Bicharacter& eta, const PointedActionData& d);

/// All (beta,mu)-bicharacters on L x H, sorted. With equivariant_only, L must be G-invariant.
std::vector<Bicharacter> enumerate_bicharacters(const PointedActionData& d, const Subgroup& L, const Subgroup& H,
                                                bool equivariant_only);

/// Ordinary bicharacters L x H -> Q/Z (the group acting on the solution set).
std::vector<Bicharacter> ordinary_bicharacters(const Subgroup& L, const Subgroup& H, const PointedActionData& d);

/// tau indexed (position in H) * |L| + (position in L).
struct TauTable {
  Subgroup L;
  Subgroup H;
  std::vector<RatAngle> values;

  RatAngle at(Elem h, Elem k) const {
    return values[static_cast<std::size_t>(H.index_of(h) * L.size() + L.index_of(k))];
  }
};

struct FirstObstruction {
  Subgroup L;
  Subgroup H;
  /// Per element of H (in order): whether delta tau_h = beta_h|L has a solution.
  std::vector<bool> solvable;
  /// Per element of H: one solution on L, if any.
  std::vector<std::optional<std::vector<RatAngle>>> witness;

  bool all_solvable() const;
  std::optional<TauTable> tau() const;
};

FirstObstruction first_obstruction(const PointedActionData& d, const Subgroup& L, const Subgroup& H);

struct SecondObstruction {
  /// mu~(h1,h2;l) = mu(h1,h2;l) + tau(h1h2;l) - tau(h1;l) - tau(h2;l), indexed (i1 |H| + i2) |L| + j.
  std::vector<RatAngle> mu_tilde;
  bool character_valued = true;
  bool cocycle = true;
  bool vanishes = false;
  /// chi(h;-) in Hom(L, Q/Z) with chi(g) + chi(h) - chi(gh) = mu~(g,h); tau + chi is a bicharacter.
  std::optional<TauTable> chi;

  RatAngle at(int i1, int i2, int j, int nh, int nl) const {
    return mu_tilde[static_cast<std::size_t>((i1 * nh + i2) * nl + j)];
  }
};

/// Throws TauInvalid if tau does not solve delta tau = beta on all of L.
SecondObstruction second_obstruction(const PointedActionData& d, const TauTable& tau);

struct ObstructionReport {
  FirstObstruction first;
  std::optional<SecondObstruction> second;
  /// first solvable everywhere and the second class vanishes
  bool unobstructed = false;
  std::size_t bicharacter_count = 0;
  std::string str(const PointedActionData& d) const;
};

ObstructionReport obstruction_report(const PointedActionData& d, const Subgroup& L, const Subgroup& H);

struct InvarianceObstruction {
  /// Omega(g,h,l) = eta(l,h) - eta(g_*l, ghg^-1) + mu(ghg^-1,g;l) - mu(g,h;l), indexed (g |H| + i) |L| + j.
  std::vector<RatAngle> omega;
  /// Omega(g1 g2) = Omega(g2) + T_{g2} Omega(g1), with (T_g chi)(l,h) = chi(g_*l, ghg^-1).
  bool cocycle = true;
  Check cocycle_check;
  /// The same identity with the factors in the other order, Omega(g1 g2) = Omega(g1) + T_{g1} Omega(g2).
  bool left_form_holds = true;
  bool is_zero = true;
  /// There is an ordinary chi with chi - T_g chi = Omega(g) for all g.
  bool vanishes = false;
  std::optional<Bicharacter> chi;
  /// eta - chi, a G-equivariant bicharacter, when the class vanishes.
  std::optional<Bicharacter> invariant;
};

/// Throws NotABicharacter. L must be G-invariant.
InvarianceObstruction invariance_obstruction(const PointedActionData& d, const Bicharacter& eta);

/// eta1 - eta2 is an ordinary bicharacter.
bool torsor_check(const Bicharacter& eta1, const Bicharacter& eta2, const PointedActionData& d);

/// Pointwise negation of values.
Bicharacter invert_bicharacter(const Bicharacter& eta);

struct KpEtaZeta {
  int n = 1, m = 1;
  bool well_defined = true;
  /// First l in [0, m) at which l and l + m give different values.
  std::optional<int> disagreement;
  /// Value of the cochain -x^2 l(l+1)/2 q at l = 1.
  RatAngle tau_generator;
  std::optional<Bicharacter> eta;
  bool is_bicharacter = false;
  bool equivariant = false;
};

/// eta(l (x,x), s) = -x^2 l(l+1)/2 q + l zeta on the diagonal subgroup generated by (x,x), x = n/m.
KpEtaZeta kp_eta_zeta(int n, RatAngle q, int m, RatAngle zeta);

}  // namespace eqsub::triv

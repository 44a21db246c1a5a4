#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqsub/angle.hpp"
#include "eqsub/group.hpp"

namespace eqsub::act {

using exact::RatAngle;
using grp::Elem;
using grp::FiniteGroup;

/// A table K x K x K -> Q/Z.
struct Cocycle3 {
  FiniteGroup K;
  std::vector<RatAngle> w;

  Cocycle3() : w(1) {}
  explicit Cocycle3(FiniteGroup k);
  Cocycle3(FiniteGroup k, std::vector<RatAngle> values);

  RatAngle operator()(Elem a, Elem b, Elem c) const { return w[index(a, b, c)]; }
  void set(Elem a, Elem b, Elem c, RatAngle v) { w[index(a, b, c)] = v; }
  std::size_t index(Elem a, Elem b, Elem c) const {
    const auto n = static_cast<std::size_t>(K.order());
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
  }
  bool is_trivial() const;
  friend bool operator==(const Cocycle3&, const Cocycle3&) = default;
};

struct Violation {
  std::string identity;
  std::vector<Elem> witness;
  /// left side minus right side
  RatAngle discrepancy;
  std::string str() const;
};

struct ValidationReport {
  /// Failures of the cocycle identity and the three defining equations.
  std::vector<Violation> violations;
  /// Nonzero entries that normalization would remove.
  std::vector<Violation> unnormalized;

  bool valid() const { return violations.empty(); }
  bool normalized() const { return unnormalized.empty(); }
  std::string str() const;
};

/// Tables for the action of G on Vec(K, w): g_* from `act`, tensorators beta and compositors mu.
///
/// beta(g; k, l) and mu(g, h; k), with equations
///   w(k,l,m) - w(gk,gl,gm) = beta(g;k,l) + beta(g;kl,m) - beta(g;l,m) - beta(g;k,lm)
///   mu(g,h;k) + mu(f,gh;k) = mu(f,g;h_*k) + mu(fg,h;k)
///   beta(gh;k,l) - beta(g;h_*k,h_*l) - beta(h;k,l) = mu(g,h;k) + mu(g,h;l) - mu(g,h;kl)
class PointedActionData {
 public:
  PointedActionData() = default;
  /// Zero beta and mu.
  PointedActionData(grp::ActionByAutomorphisms act, Cocycle3 omega);
  explicit PointedActionData(grp::ActionByAutomorphisms act);

  const FiniteGroup& K() const { return act_.target(); }
  const FiniteGroup& G() const { return act_.acting(); }
  const grp::ActionByAutomorphisms& action() const { return act_; }
  const Cocycle3& omega() const { return omega_; }
  Elem push(Elem g, Elem k) const { return act_.apply(g, k); }

  RatAngle w(Elem a, Elem b, Elem c) const { return omega_(a, b, c); }
  RatAngle beta(Elem g, Elem k, Elem l) const { return beta_[beta_index(g, k, l)]; }
  RatAngle mu(Elem g, Elem h, Elem k) const { return mu_[mu_index(g, h, k)]; }
  void set_beta(Elem g, Elem k, Elem l, RatAngle v) { beta_[beta_index(g, k, l)] = v; }
  void set_mu(Elem g, Elem h, Elem k, RatAngle v) { mu_[mu_index(g, h, k)] = v; }

  const std::vector<RatAngle>& beta_table() const { return beta_; }
  const std::vector<RatAngle>& mu_table() const { return mu_; }

  /// lcm of all denominators in omega, beta and mu.
  std::int64_t denominator() const;
  /// Hash of every table; equal data give equal fingerprints.
  std::uint64_t fingerprint() const;

  friend bool operator==(const PointedActionData&, const PointedActionData&) = default;

 private:
  std::size_t beta_index(Elem g, Elem k, Elem l) const {
    const auto n = static_cast<std::size_t>(K().order());
    return (static_cast<std::size_t>(g) * n + static_cast<std::size_t>(k)) * n + static_cast<std::size_t>(l);
  }
  std::size_t mu_index(Elem g, Elem h, Elem k) const {
    const auto ng = static_cast<std::size_t>(G().order());
    const auto nk = static_cast<std::size_t>(K().order());
    return (static_cast<std::size_t>(g) * ng + static_cast<std::size_t>(h)) * nk + static_cast<std::size_t>(k);
  }

  grp::ActionByAutomorphisms act_;
  Cocycle3 omega_;
  std::vector<RatAngle> beta_;
  std::vector<RatAngle> mu_;
};

/// Checks the cocycle identity and normalization of w; violations are appended.
void check_cocycle(const Cocycle3& w, std::vector<Violation>& violations, std::vector<Violation>& unnormalized);

ValidationReport validate_action_data(const PointedActionData& d);

/// beta' = beta + dgamma_g, mu'(g,h;k) = mu + gamma(g;h_*k) + gamma(h;k) - gamma(gh;k).
/// gamma is indexed g * |K| + k.
PointedActionData apply_gauge(const PointedActionData& d, const std::vector<RatAngle>& gamma);

/// Gauge-equivalent data with beta and mu vanishing on identity arguments. Throws NotValid.
PointedActionData normalize(const PointedActionData& d);

/// K = G with conjugation, mu(g,h;k) = eta_k(g,h) and beta(g;h,k) = nu_g(h,k) where
///   eta_a(x,y) = w(x,y,a) + w(xyay^-1x^-1, x, y) - w(x, yay^-1, y)
///   nu_a(x,y)  = w(axa^-1, aya^-1, a) + w(a,x,y) - w(axa^-1, a, y)
/// Throws InvalidCocycle.
PointedActionData double_action(const FiniteGroup& g, const Cocycle3& w);

/// w(a,b,c) = p a [b + c >= n] / n on Z/n, the standard representatives of H^3(Z/n).
Cocycle3 cyclic_cocycle(int n, std::int64_t p);

/// C2 swapping the factors of Z/n x Z/n, beta(s;a,b) = q a1 b2, mu(s,s;a) = q a1 a2.
/// Element (a1,a2) has index a1 * n + a2. Throws BadOrder unless n q = 0.
PointedActionData kp_action(int n, RatAngle q);

/// Named reproducible data used across the test suites.
namespace fixtures {

/// G acting trivially on K, all tables zero.
PointedActionData triv(const FiniteGroup& g, const FiniteGroup& k);
PointedActionData kp(int n, RatAngle q);
PointedActionData dbl(const FiniteGroup& g, const Cocycle3& w);
/// C2 acting trivially on Z/n with mu(s,s;k) = k/n.
PointedActionData mu_character(int n);
/// C2 acting trivially on Z/2 x Z/2 with beta(s;a,b) = a1 b2 / 2.
PointedActionData beta_alternating();
/// Z/2 x Z/2 acting on Z/2 x Z/2, the first factor swapping, the second trivially.
PointedActionData swap_pair();
/// S3 acting trivially on Z/3, all tables zero.
PointedActionData sym_on_cyclic3();

}  // namespace fixtures

}  // namespace eqsub::act

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqsub/action.hpp"
#include "eqsub/serialize.hpp"

namespace eqsub::hopf {

using act::PointedActionData;
using exact::RatAngle;
using grp::Elem;

/// Basis element delta_g # x.
struct Label {
  Elem g = 0;
  Elem x = 0;
  std::string str() const;
};

/// c times a basis element.
struct Scaled {
  RatAngle c;
  int basis = 0;
  friend bool operator==(const Scaled&, const Scaled&) = default;
};

/// c times left (x) right.
struct TensorTerm {
  RatAngle c;
  int left = 0;
  int right = 0;
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// k^G #_mu^beta kK on the basis delta_g # x, index g |K| + x.
struct HopfStructure {
  int dim = 0;
  int nG = 0;
  int nK = 0;
  std::vector<Label> labels;
  /// Indexed i * dim + j; empty when the product is zero.
  std::vector<std::optional<Scaled>> product;
  std::vector<std::vector<TensorTerm>> coproduct;
  std::vector<int> counit;
  /// Basis elements with coefficient 1 in the unit.
  std::vector<int> unit;
  std::vector<Scaled> antipode;
  /// The solver found exactly one solution of the convolution equation.
  bool antipode_unique = false;
  /// Closed formula -(beta(g^-1; g_*x, (g_*x)^-1) + mu(g^-1, g; x)) on delta_{g^-1} # (g_*x)^-1.
  std::vector<Scaled> closed_antipode;
  /// Basis elements where the closed formula and the solved antipode differ.
  std::vector<int> antipode_mismatches;
  PointedActionData data;

  int index(Elem g, Elem x) const { return g * nK + x; }
  const std::optional<Scaled>& mul(int i, int j) const {
    return product[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)];
  }
  /// lcm of the denominators of all structure constants.
  std::int64_t level() const;
};

/// Throws OmegaNontrivial, DataInvalid. With validate = false the data is taken as is
/// (used to check that the verifier finds broken tables).
HopfStructure build_bismash(const PointedActionData& d, bool validate = true);

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
  std::string str(const HopfStructure& h) const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  /// axiom -> number of basis tuples checked
  std::map<std::string, std::size_t> checked;

  bool ok() const { return violations.empty(); }
  bool failed(const std::string& axiom) const;
  std::string str(const HopfStructure& h) const;
};

/// Axioms: associativity, unit, counit, coassociativity, delta-multiplicative,
/// delta-unital, counit-multiplicative, antipode-left, antipode-right, antipode-antimultiplicative.
AxiomReport verify_hopf_axioms(const HopfStructure& h);

io::json hopf_json(const HopfStructure& h);

}  // namespace eqsub::hopf

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqsub::grp {

using Elem = int;

/// A finite group given by its multiplication table. Identity is element 0.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}

  int order() const { return order_; }
  Elem id() const { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a * order_ + b)]; }
  Elem inv(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }
  Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }
  Elem power(Elem a, std::int64_t k) const;
  int element_order(Elem a) const;
  /// Least common multiple of element orders.
  std::int64_t exponent() const;
  bool is_abelian() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
  std::vector<std::vector<int>> table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  friend FiniteGroup validate_group(const std::vector<std::vector<int>>&, std::vector<std::string>);
  explicit FiniteGroup(const std::vector<std::vector<int>>& canonical_table);

  int order_ = 1;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

/// Checks the group axioms and relabels the identity to index 0.
/// Throws Error with NonAssociative, NoIdentity, NoInverse or OutOfRange and a witness.
FiniteGroup validate_group(const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels = {});

FiniteGroup cyclic_group(int n);
/// Symmetric group on n letters. For n = 3 the order is id, (12), (13), (23), (123), (132).
FiniteGroup symmetric_group(int n);
/// Element (a, b) has index a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// "cyclic:n", "sym:n", "product:<g>,<g>,...".
FiniteGroup parse_group_preset(std::string_view text);
/// Parses one group preset from the front of text and advances past it.
FiniteGroup consume_group_preset(std::string_view& text);

/// Strictly increasing element indices of a parent group.
class Subgroup {
 public:
  Subgroup() : elems_{0} {}
  explicit Subgroup(std::vector<Elem> elems);

  const std::vector<Elem>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(Elem x) const;
  /// Position of x in elements(), or -1.
  int index_of(Elem x) const;
  bool is_subset_of(const Subgroup& o) const;
  bool is_trivial() const { return elems_.size() == 1; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  /// Orders by (size, lexicographic elements).
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  std::vector<Elem> elems_;
};

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& g);
/// Smallest subgroup containing the given elements.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
/// Throws NotASubgroup unless the elements form a subgroup of g.
void require_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems);

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);
bool is_normal(const Subgroup& h, const FiniteGroup& g);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

/// A left action g -> perm[g] of `acting` on `target` by automorphisms:
/// perm[g] o perm[h] = perm[g h].
class ActionByAutomorphisms {
 public:
  ActionByAutomorphisms() : perm_{{0}} {}
  /// Validates the automorphism and homomorphism conditions; throws OutOfRange otherwise.
  ActionByAutomorphisms(FiniteGroup acting, FiniteGroup target, std::vector<std::vector<Elem>> perm);

  const FiniteGroup& acting() const { return acting_; }
  const FiniteGroup& target() const { return target_; }
  Elem apply(Elem g, Elem k) const { return perm_[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)]; }
  const std::vector<std::vector<Elem>>& perms() const { return perm_; }
  bool is_trivial() const;

  friend bool operator==(const ActionByAutomorphisms& a, const ActionByAutomorphisms& b) {
    return a.acting_ == b.acting_ && a.target_ == b.target_ && a.perm_ == b.perm_;
  }

 private:
  FiniteGroup acting_;
  FiniteGroup target_;
  std::vector<std::vector<Elem>> perm_;
};

ActionByAutomorphisms trivial_action(const FiniteGroup& acting, const FiniteGroup& target);
/// g acts on itself by k -> g k g^-1.
ActionByAutomorphisms conjugation_action(const FiniteGroup& g);
/// C2 acting on A x A by exchanging the factors.
ActionByAutomorphisms swap_action(const FiniteGroup& a);

std::vector<Subgroup> invariant_subgroups(const ActionByAutomorphisms& act);
/// Target elements fixed by every element of h (a subgroup of the acting group).
Subgroup fixed_subgroup(const ActionByAutomorphisms& act, const Subgroup& h);

std::string to_string(const Subgroup& s);

}  // namespace eqsub::grp

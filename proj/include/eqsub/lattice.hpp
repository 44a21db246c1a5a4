#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqsub/bichar.hpp"

namespace eqsub::lat {

using act::PointedActionData;
using grp::Subgroup;
using triv::Bicharacter;

/// A fusion subcategory of the equivariantization: L <= K, H <= G and an equivariant bicharacter.
struct Triple {
  Subgroup L;
  Subgroup H;
  Bicharacter eta;
  /// [G:H] |L|
  std::int64_t fpdim = 1;
  /// Fingerprint of the data the triple was enumerated from.
  std::uint64_t data = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Order: H by size descending, then L, then eta. Throws InvalidData.
std::vector<Triple> enumerate_triples(const PointedActionData& d);

/// L1 <= L2, H2 <= H1 and the two bicharacters agree on L1 x H2. Throws MixedData.
bool triple_leq(const Triple& t1, const Triple& t2);

/// A finite poset with integer node labels used to prune isomorphism search.
struct Poset {
  std::vector<std::int64_t> label;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return label.size(); }
};

bool posets_isomorphic(const Poset& a, const Poset& b);

/// Edges (i, j) with i < j covering (nothing strictly between).
std::vector<std::pair<int, int>> hasse_edges(const std::vector<std::vector<bool>>& leq);

struct SubcategoryLattice {
  std::vector<Triple> triples;
  std::vector<std::vector<bool>> leq;
  bool partial_order = true;
  bool meets_exist = true;
  bool joins_exist = true;
  int minimum = -1;
  int maximum = -1;

  Poset poset() const;
};

/// Throws InvalidData.
SubcategoryLattice build_lattice(const PointedActionData& d);

enum class Format { Table, Dot, Json };

std::string render(const SubcategoryLattice& lattice, Format format);

}  // namespace eqsub::lat

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eqsub/hopf.hpp"
#include "eqsub/lattice.hpp"

namespace eqsub::oracle {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr double kRoundTolerance = 1e-6;
inline constexpr double kIdentityTolerance = 1e-9;

/// The dual of the bismash algebra: e_i e_j = sum_k c(i,j,k) e_k, with e_i the dual basis.
struct DualAlgebra {
  int dim = 0;
  /// Nonzero c(i,j,k) as (k, value), indexed i * dim + j.
  std::vector<std::vector<std::pair<int, cplx>>> table;
  CVector unit;

  CVector mul(const CVector& x, const CVector& y) const;
  CVector basis(int i) const;
  /// tr(L_{e_k}) for each k.
  CVector regular_traces() const;
  /// Largest deviation from associativity over basis triples.
  double associativity_defect() const;
  /// Largest deviation of unit * e_i and e_i * unit from e_i.
  double unit_defect() const;
};

DualAlgebra dual_algebra(const hopf::HopfStructure& h);

struct BlockDecomposition {
  /// Block sizes d_i with sum d_i^2 = dim; order matches characters.
  std::vector<int> dims;
  std::vector<CVector> idempotents;
  /// chi_i(e_j): the character of the i-th simple module on the dual basis, an element of H.
  std::vector<CVector> characters;
  std::uint64_t seed = 0;
  int attempts = 0;
  double max_rounding_error = 0;
};

/// Blocks ordered by (dim, character). Retries with seed + 1, seed + 2 before throwing ChecksumFailed.
BlockDecomposition block_decompose(const DualAlgebra& a, std::uint64_t seed = kDefaultSeed, int attempts = 3);

struct FusionRing {
  int rank = 0;
  std::vector<std::int64_t> dims;
  /// N(i,j,k) at (i * rank + j) * rank + k
  std::vector<std::int64_t> mult;
  std::vector<int> dual;
  int unit = 0;
  double max_rounding_error = 0;

  std::int64_t N(int i, int j, int k) const {
    return mult[static_cast<std::size_t>((i * rank + j) * rank + k)];
  }
  /// Violations of the ring identities; empty when all hold.
  std::vector<std::string> check() const;
  io::json json() const;
};

/// Simple comodules of the Hopf algebra, tensor products decomposed numerically and rounded.
/// Throws ChecksumFailed, RoundingFailed, InvariantViolated.
FusionRing fusion_ring(const hopf::HopfStructure& h, std::uint64_t seed = kDefaultSeed);

/// Decomposes products in the character basis of a given block decomposition.
FusionRing fusion_ring(const hopf::HopfStructure& h, const BlockDecomposition& blocks);

struct OracleLattice {
  /// Sorted simple indices of each closed subset.
  std::vector<std::vector<int>> subsets;
  /// sum of dims^2 over the subset
  std::vector<std::int64_t> fpdims;
  std::vector<std::vector<bool>> leq;
  /// Subsets whose FPdim does not divide the total.
  std::vector<int> non_dividing;

  lat::Poset poset() const;
};

OracleLattice enumerate_based_subrings(const FusionRing& f);

struct Comparison {
  std::size_t oracle_count = 0;
  std::size_t lattice_count = 0;
  std::vector<std::int64_t> oracle_fpdims;
  std::vector<std::int64_t> lattice_fpdims;
  bool counts_equal = false;
  bool fpdims_equal = false;
  bool isomorphic = false;
  std::vector<std::string> mismatches;

  bool equal() const { return counts_equal && fpdims_equal && isomorphic; }
  std::string str() const;
};

Comparison compare(const OracleLattice& oracle, const lat::SubcategoryLattice& lattice);

}  // namespace eqsub::oracle

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqsub/oracle.hpp"

namespace eqsub::kp {

using exact::RatAngle;
using grp::Subgroup;

/// N <= B <= Z/n with |B| = b, |N| = v and f = multiplication by u on B/N = Z/r, r = b/v, u^2 = 1 mod r.
struct GoursatDatum {
  int b = 1;
  int v = 1;
  int r = 1;
  int u = 0;
  /// {(a,c) in B x B : f(aN) = cN} inside Z/n x Z/n, element (a1,a2) at index a1 n + a2.
  Subgroup H;
  std::string str() const;
};

/// All towers with an involutive f (f = id allowed), ordered by (b, v, u).
std::vector<GoursatDatum> kp_goursat(int n);

enum class Mode { AsStated, MainTheorem };
/// How the order condition on zeta in the first type is read: exact order n/m, or any m-th root.
enum class ZetaReading { ExactOrder, MthRoot };

std::string to_string(Mode m);
std::string to_string(ZetaReading z);

struct Type1Entry {
  int m = 1;
  RatAngle zeta;
  std::int64_t fpdim = 1;
  std::string key() const;
};

struct Type2Entry {
  GoursatDatum datum;
  /// A character on H, by position in datum.H; absent when only the trivial one is allowed.
  std::optional<std::vector<RatAngle>> eta;
  std::int64_t fpdim = 1;
  std::string key() const;
};

struct KPReport {
  Mode mode = Mode::AsStated;
  ZetaReading reading = ZetaReading::ExactOrder;
  int n = 1;
  RatAngle q;
  std::vector<Type1Entry> type1;
  std::vector<Type2Entry> type2;

  std::size_t total() const { return type1.size() + type2.size(); }
  /// Sorted.
  std::vector<std::int64_t> fpdims() const;
  std::vector<std::string> keys() const;
  std::string str() const;
  io::json json() const;
};

/// Throws BadOrder unless n q = 0.
KPReport kp_classify(int n, RatAngle q, Mode mode, ZetaReading reading = ZetaReading::ExactOrder);

struct ConcordanceReport {
  int n = 1;
  RatAngle q;
  KPReport as_stated;
  KPReport main;
  std::optional<oracle::Comparison> oracle;
  std::string oracle_error;

  bool main_matches_oracle = false;
  bool as_stated_matches_oracle = false;
  bool as_stated_matches_main = false;
  /// Entries (by coordinates) present in one report only.
  std::vector<std::string> only_as_stated;
  std::vector<std::string> only_main;

  bool as_stated_flagged() const { return !as_stated_matches_oracle; }
  std::string str() const;
  io::json json() const;
};

ConcordanceReport compare_kp_vs_general(int n, RatAngle q, ZetaReading reading = ZetaReading::ExactOrder,
                                        std::uint64_t seed = oracle::kDefaultSeed);

}  // namespace eqsub::kp

#pragma once

#include "eqsub/hopf.hpp"
#include "eqsub/oracle.hpp"

namespace eqsub::io {

/// {"valid", "normalized", "violations", "unnormalized", "data"}
json validation_json(const act::ValidationReport& r, const act::PointedActionData& d);

/// Structure constants plus {"axioms": {name: holds}}.
json hopf_report_json(const hopf::HopfStructure& h, const hopf::AxiomReport& r);

/// {"fusion_ring", "subrings", "leq"}
json oracle_json(const oracle::FusionRing& ring, const oracle::OracleLattice& sub);

json comparison_json(const oracle::Comparison& c);

}  // namespace eqsub::io

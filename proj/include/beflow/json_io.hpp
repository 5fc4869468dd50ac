#pragma once

#include <json.hpp>
#include <string>

#include "beflow/bisection.hpp"
#include "beflow/flow.hpp"
#include "beflow/region.hpp"
#include "beflow/weak5.hpp"

namespace beflow {

using Json = nlohmann::ordered_json;

Json graph_to_json(const CubicMultigraph& g);
CubicMultigraph graph_from_json(const Json& j);

Json flow_witness_to_json(const CubicMultigraph& g, const FlowAssignment& fa,
                          const FlowPoint& p);

Json infeasible_to_json(const CubicMultigraph& g, const Infeasible& inf,
                        const FlowPoint& p);

Json region_to_json(const FlowRegion& reg);

Json weak5_certificate_to_json(const CubicMultigraph& g,
                               const Weak5Certificate& cert);

Json hunt_record_to_json(const HuntRecord& rec);

/// Re-checks a previously emitted certificate ("flow_witness" or
/// "weak5_certificate"). Returns a human-readable failure, or empty when
/// the certificate verifies.
std::string verify_certificate_json(const Json& j);

}  // namespace beflow

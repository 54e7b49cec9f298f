#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tiltforge/cluster.hpp"
#include "tiltforge/oracle.hpp"
#include "tiltforge/quiver.hpp"
#include "tiltforge/slices.hpp"
#include "tiltforge/tilt.hpp"

namespace tiltforge {

using Json = nlohmann::ordered_json;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);  // arrow ids optional

struct Distribution {
  ClusterModel model;
  CTObject object;
};

Json distribution_to_json(const ClusterModel& m, const CTObject& t);
Distribution distribution_from_json(const Json& j);

Json vertex_to_json(const ClusterModel& m, const CVertex& v);
CVertex vertex_from_json(const ClusterModel& m, const Json& j);
Json slice_to_json(const ClusterModel& m, const LocalSlice& s);
LocalSlice slice_from_json(const ClusterModel& m, const Json& j);

Json arrow_set_to_json(const Quiver& q, const AdmissibleSet& s);
AdmissibleSet arrow_set_from_json(const Quiver& q, const Json& j);

Json result_to_json(const AlgorithmResult& r);
// Restores quiver, relations, jump paths and jump graph; slices are not serialized.
AlgorithmResult result_from_json(const Json& j);

Json report_to_json(const OracleReport& r);
OracleReport report_from_json(const Json& j);

std::string dump(const Json& j);  // two-space indent, trailing newline

// Relation arrows are dashed.
std::string presentation_dot(const Quiver& q, const AdmissibleSet& s, const std::string& name);
// AR quiver of C; summands of T boxed, tau T greyed, `highlight` filled.
std::string ar_quiver_dot(const ClusterModel& m, const CTObject* t, const std::vector<CVertex>& highlight,
                          const std::string& name);

}  // namespace tiltforge

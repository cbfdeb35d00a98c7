#pragma once

#include <json.hpp>

#include "planepart/bijections.hpp"
#include "planepart/components.hpp"
#include "planepart/genfun.hpp"
#include "planepart/partition.hpp"
#include "planepart/plane_partition.hpp"
#include "planepart/polynomial.hpp"
#include "planepart/series.hpp"
#include "planepart/tableau.hpp"

namespace planepart {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const PlanePartition& pp);
PlanePartition plane_partition_from_json(const Json& j);

Json to_json(const ComponentAnalysis& analysis);

Json to_json(const MarkedValue& v);
MarkedValue marked_value_from_json(const Json& j);

Json to_json(const MarkedShiftedTableau& t);
Json to_json(const ShiftedTableau& t);
MarkedShiftedTableau marked_tableau_from_json(const Json& j);
ShiftedTableau tableau_from_json(const Json& j);

Json to_json(const MarkedMatrix& m);
MarkedMatrix matrix_from_json(const Json& j);

Json to_json(const Polynomial& p, const std::string& var);
Json to_json(const QtSeries& s);

Json to_json(const TruncatedSeries<Polynomial>& s, const std::string& var);
Json to_json(const TruncatedSeries<QtSeries>& s);

Json to_json(const VerificationReport& report);

}  // namespace planepart

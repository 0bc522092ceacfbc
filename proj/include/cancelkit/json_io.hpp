#pragma once

#include <json.hpp>

#include "cancelkit/cancel.hpp"
#include "cancelkit/conjtrans.hpp"
#include "cancelkit/dfa.hpp"
#include "cancelkit/geodesic.hpp"
#include "cancelkit/oracle.hpp"

namespace cancelkit {

nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const StripCertificate& c);
nlohmann::json to_json(const ReductionResult& r);
nlohmann::json to_json(const HalfInteger& h);
nlohmann::json to_json(const ClassRep& r);
nlohmann::json to_json(const RootAnswer& r);
nlohmann::json to_json(const MaxRootAnswer& r);
nlohmann::json to_json(const PowerConjAnswer& r);
nlohmann::json to_json(const ClassCount& r);
nlohmann::json to_json(const GrowthCount& g);
nlohmann::json to_json(const CayleyBall& b);

}  // namespace cancelkit

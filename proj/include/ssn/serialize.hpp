#pragma once

#include <json.hpp>

#include "ssn/families.hpp"
#include "ssn/network.hpp"
#include "ssn/seifert.hpp"
#include "ssn/twist.hpp"

namespace ssn {

// Every rational is written as the string "p/q" ("1/0" for ∞).
nlohmann::ordered_json to_json(const ExtendedRational& r);
nlohmann::ordered_json to_json(const Integer& v);  // a number when it fits in 64 bits
nlohmann::ordered_json to_json(const SeifertInvariants& si);
nlohmann::ordered_json to_json(const SfsClassification& c);
nlohmann::ordered_json to_json(const SurgeryVertex& v);
nlohmann::ordered_json to_json(const SurgeryResult& r);
nlohmann::ordered_json to_json(const HopfPairState& s);
nlohmann::ordered_json to_json(const TwistSequence& seq);
nlohmann::ordered_json to_json(const SurgeryDescription& d);
nlohmann::ordered_json to_json(const NetworkPath& path);
nlohmann::ordered_json to_json(const NetworkGraph& graph);

} // namespace ssn

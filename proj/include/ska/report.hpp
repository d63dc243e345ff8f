#ifndef SKA_REPORT_HPP
#define SKA_REPORT_HPP

#include <json.hpp>

#include "ska/apolar.hpp"
#include "ska/gallery.hpp"
#include "ska/koszul.hpp"

namespace ska {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const UniversalGBReport& rep);
Json to_json(const StrongKoszulCertificate& cert);
Json to_json(const ObstructionReport& rep);
Json to_json(const CayleyReport& rep);
Json to_json(const LinesLemmaReport& rep);

// common envelope: {"schema": 1, "command": ..., "inputs": {...}, ...}
Json run_report(const std::string& command, const Json& inputs, const Json& body,
                double wall_seconds);

std::string verdict_name(SkVerdict v);

}  // namespace ska

#endif

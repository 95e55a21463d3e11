#pragma once

#include <string>

#include <json.hpp>

#include "polarfix/polarity.hpp"
#include "polarfix/sets.hpp"
#include "polarfix/verify.hpp"

namespace polarfix {

/* JSON documents for sets, operators, and reports.  Parsing is strict:
 * unknown fields and malformed shapes raise BadParams.  Serialization is
 * deterministic: canonical_dump prints sorted keys with 17-significant-digit
 * doubles, so identical values give identical bytes. */

nlohmann::json set_to_json(const ConvexSet& c);
ConvexSet set_from_json(const nlohmann::json& doc);

/* Operators serialize as {"matrix": [[..]]}; parsing additionally accepts
 * {"scalar": g, "dim": n}. */
nlohmann::json operator_to_json(const Operator& g);
Operator operator_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const ResidualReport& rep);

/* Parse from text with library errors rewrapped as BadParams. */
nlohmann::json parse_json(const std::string& text);

/* Deterministic pretty printer: keys sorted, doubles at %.17g, two-space
 * indent, trailing newline.  Non-finite doubles are rejected; infinities are
 * legal only where the schema stores them as "inf"/"-inf" strings. */
std::string canonical_dump(const nlohmann::json& doc);

/* Interval endpoints: finite numbers stay numbers, infinities become the
 * strings "inf" / "-inf". */
nlohmann::json endpoint_to_json(double v);
double endpoint_from_json(const nlohmann::json& v);

}  // namespace polarfix

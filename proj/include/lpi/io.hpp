#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lpi/holo.hpp"
#include "lpi/partitions.hpp"
#include "lpi/qseries.hpp"
#include "lpi/transfer.hpp"

namespace lpi {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "lpi/1";

// Polynomials and rational functions are stored in canonical text; every
// reader accepts any text the parser understands and re-canonicalizes it.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Restriction& r);
Restriction restriction_from_json(const Json& j);

Json to_json(const TailTable& t);
TailTable tails_from_json(const Json& j);

Json to_json(const QDiffSystem& s);
QDiffSystem system_from_json(const Json& j);

Json to_json(const QDiffEquation& e);
QDiffEquation equation_from_json(const Json& j);

Json to_json(const Recurrence& r);  // coefficients in q and S = q^M
Recurrence recurrence_from_json(const Json& j);

Json to_json(const NonvanishingReport& r);
NonvanishingReport nonvanishing_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const AndrewsSum& s);
AndrewsSum sum_from_json(const Json& j);

Json to_json(const VerifyReport& r);
VerifyReport report_from_json(const Json& j);

Json to_json(const std::vector<RationalQ>& values);
std::vector<RationalQ> values_from_json(const Json& j);

Json to_json(const SeriesQ& s);  // coefficient list, rationals as strings
SeriesQ series_from_json(const Json& j);

Json counts_to_json(const CountTable& c);
CountTable counts_from_json(const Json& j);

// Keys sorted, two-space indent, trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);  // ParseError on malformed input

} // namespace lpi

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "borwein/asymptotics.hpp"
#include "borwein/series.hpp"

namespace borwein {

using Json = nlohmann::ordered_json;

/* {"order": N, "coeffs": ["num/den", ...]} */
Json series_to_json(const TruncatedSeries& s);

/* (n, numerator, denominator) rows under a header. */
void series_to_csv(const TruncatedSeries& s, std::ostream& out);

Json estimate_to_json(const EstimateReport& r);

/* Number of decimal digits used when printing BigReal values. */
inline constexpr int kPrintDigits = 30;

}  // namespace borwein

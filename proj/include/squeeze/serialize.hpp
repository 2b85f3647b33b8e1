#pragma once

#include <json.hpp>

#include "squeeze/certifier.hpp"
#include "squeeze/constants.hpp"

namespace squeeze {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultDigits = 10;

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& node);

/// {"lo": "p/q", "hi": "p/q", "dec_lo": ..., "dec_hi": ...} with the
/// decimals rounded down / up respectively.
Json enclosure_to_json(const Enclosure& e, int digits = kDefaultDigits);
/// Reads lo/hi only; the decimal fields are informational.
Enclosure enclosure_from_json(const Json& node);

Json witness_to_json(const Witness& w, int digits = kDefaultDigits);
Witness witness_from_json(const Json& node);

Json certificate_to_json(const Certificate& cert, int digits = kDefaultDigits);
/// Throws ParseError on a missing or mistyped field.
Certificate certificate_from_json(const Json& node);

Json squeeze_to_json(const SqueezeResult& result, int digits = kDefaultDigits);
Json error_report_to_json(const ErrorReport& report, int digits = kDefaultDigits);
Json scan_row_to_json(const ScanRow& row, int digits = kDefaultDigits);

}  // namespace squeeze

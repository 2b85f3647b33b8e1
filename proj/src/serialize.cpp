#include "squeeze/serialize.hpp"

#include <string>

#include "squeeze/errors.hpp"

namespace squeeze {
namespace {

const Json& field(const Json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return node.at(key);
}

Sign sign_from_string(const std::string& text) {
  if (text == "positive") return Sign::Positive;
  if (text == "negative") return Sign::Negative;
  if (text == "indeterminate") return Sign::Indeterminate;
  throw ParseError("unknown sign '" + text + "'");
}

const char* statement(FamilyTag tag) {
  return tag == FamilyTag::LogCos ? "exp(-theta x^2) < cos x < exp(-x^2/2) for x in (0, x0)"
                                  : "exp(-theta x^2) < x/tan x < exp(-x^2/3) for x in (0, x0)";
}

}  // namespace

Json rational_to_json(const Rational& value) { return to_fraction_string(value); }

Rational rational_from_json(const Json& node) {
  if (!node.is_string()) throw ParseError("expected a \"p/q\" string");
  return rational_from_decimal(node.get<std::string>());
}

Json enclosure_to_json(const Enclosure& e, int digits) {
  Json out;
  out["lo"] = rational_to_json(e.lo());
  out["hi"] = rational_to_json(e.hi());
  out["dec_lo"] = to_decimal(e.lo(), digits, Rounding::Down);
  out["dec_hi"] = to_decimal(e.hi(), digits, Rounding::Up);
  return out;
}

Enclosure enclosure_from_json(const Json& node) {
  return Enclosure(rational_from_json(field(node, "lo")), rational_from_json(field(node, "hi")));
}

Json witness_to_json(const Witness& w, int digits) {
  Json out;
  out["point"] = rational_to_json(w.point);
  out["order"] = w.order;
  out["sign"] = to_string(w.sign);
  out["enclosure"] = enclosure_to_json(w.enclosure, digits);
  return out;
}

Witness witness_from_json(const Json& node) {
  Witness w;
  w.point = rational_from_json(field(node, "point"));
  const Json& order = field(node, "order");
  if (!order.is_number_unsigned()) throw ParseError("witness order must be a nonnegative integer");
  w.order = order.get<unsigned>();
  const Json& sign = field(node, "sign");
  if (!sign.is_string()) throw ParseError("witness sign must be a string");
  w.sign = sign_from_string(sign.get<std::string>());
  w.enclosure = enclosure_from_json(field(node, "enclosure"));
  return w;
}

Json certificate_to_json(const Certificate& cert, int digits) {
  Json out;
  out["kind"] = to_string(cert.kind);
  out["family"] = family(cert.family).name;
  out["theta"] = rational_to_json(cert.theta);
  out["lambda"] = rational_to_json(cert.lambda());
  out["m"] = cert.m;
  out["coefficient_checks"] = cert.coefficient_checks;
  out["depth_used"] = cert.depth_used;
  out["domain_end"] = enclosure_to_json(cert.domain_end, digits);
  if (cert.min_bracket) out["min_bracket"] = enclosure_to_json(*cert.min_bracket, digits);
  if (cert.zero_bracket) out["zero_bracket"] = enclosure_to_json(*cert.zero_bracket, digits);
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(witness_to_json(w, digits));
  out["witnesses"] = std::move(witnesses);
  return out;
}

Certificate certificate_from_json(const Json& node) {
  Certificate cert;
  const Json& kind = field(node, "kind");
  if (kind == "positivity") {
    cert.kind = CertificateKind::Positivity;
  } else if (kind == "unique_zero") {
    cert.kind = CertificateKind::UniqueZero;
  } else {
    throw ParseError("unknown certificate kind");
  }
  const Json& fam = field(node, "family");
  if (!fam.is_string()) throw ParseError("family must be a string");
  cert.family = family_from_name(fam.get<std::string>()).tag;
  cert.theta = rational_from_json(field(node, "theta"));
  const Json& m = field(node, "m");
  const Json& checks = field(node, "coefficient_checks");
  const Json& depth = field(node, "depth_used");
  if (!m.is_number_unsigned() || !checks.is_number_unsigned() || !depth.is_number_unsigned()) {
    throw ParseError("m, coefficient_checks and depth_used must be nonnegative integers");
  }
  cert.m = m.get<unsigned>();
  cert.coefficient_checks = checks.get<unsigned>();
  cert.depth_used = depth.get<unsigned>();
  cert.domain_end = enclosure_from_json(field(node, "domain_end"));
  if (node.contains("min_bracket")) cert.min_bracket = enclosure_from_json(node.at("min_bracket"));
  if (node.contains("zero_bracket")) {
    cert.zero_bracket = enclosure_from_json(node.at("zero_bracket"));
  }
  const Json& witnesses = field(node, "witnesses");
  if (!witnesses.is_array()) throw ParseError("witnesses must be an array");
  for (const auto& w : witnesses) cert.witnesses.push_back(witness_from_json(w));
  return cert;
}

Json squeeze_to_json(const SqueezeResult& result, int digits) {
  Json out;
  out["family"] = family(result.family).name;
  out["statement"] = statement(result.family);
  out["x0"] = rational_to_json(result.x0);
  out["best_constant"] = enclosure_to_json(result.best_constant, digits);
  out["certified_constant"] = rational_to_json(result.certified_constant());
  out["upper_constant"] = rational_to_json(result.upper_constant);
  out["certified_interval_end"] = rational_to_json(result.certified_interval_end);
  out["lower_cert"] = certificate_to_json(result.lower_cert, digits);
  out["upper_cert"] = certificate_to_json(result.upper_cert, digits);
  return out;
}

Json error_report_to_json(const ErrorReport& report, int digits) {
  Json out;
  out["family"] = family(report.family).name;
  out["x0"] = rational_to_json(report.x0);
  out["theta"] = rational_to_json(report.theta);
  out["t0"] = enclosure_to_json(report.t0, digits);
  out["delta"] = enclosure_to_json(report.delta, digits);
  return out;
}

Json scan_row_to_json(const ScanRow& row, int digits) {
  Json out;
  out["x0"] = rational_to_json(row.x0);
  auto put = [&](const char* key, const std::optional<Enclosure>& e) {
    out[key] = e ? enclosure_to_json(*e, digits) : Json(nullptr);
  };
  put("best_constant", row.best_constant);
  put("t0", row.t0);
  put("delta", row.delta);
  out["error"] = row.error ? Json(*row.error) : Json(nullptr);
  return out;
}

}  // namespace squeeze

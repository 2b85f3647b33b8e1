#include "squeeze/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "squeeze/bernoulli.hpp"
#include "squeeze/constants.hpp"
#include "squeeze/errors.hpp"
#include "squeeze/serialize.hpp"

namespace squeeze::cli {
namespace {

struct Options {
  std::string family = "logcos";
  std::string x0;
  std::string width = "1e-7";
  std::string tol = "1e-6";
  std::string from;
  std::string to;
  unsigned steps = 1;
  unsigned upto = 1;
  std::string format;
  std::string input;
  int digits = kDefaultDigits;
};

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_enclosure(const std::optional<Enclosure>& e, int digits) {
  if (!e) return ",,,";
  return csv_quote(to_fraction_string(e->lo())) + "," + csv_quote(to_fraction_string(e->hi())) +
         "," + to_decimal(e->lo(), digits, Rounding::Down) + "," +
         to_decimal(e->hi(), digits, Rounding::Up);
}

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, std::istream& in)
      : out_(out), err_(err), in_(in) {}

  int dispatch(const std::string& command, const Options& opt) {
    command_ = command;
    limits_ = Limits::from_environment();
    if (command == "coeffs") return coeffs(opt);
    if (command == "constant") return constant(opt);
    if (command == "certify") return certify(opt);
    if (command == "error") return error(opt);
    if (command == "scan") return scan_grid(opt);
    if (command == "verify") return verify(opt);
    throw ParseError("unknown command '" + command + "'");
  }

  int fail(int code, const std::string& reason) {
    err_ << "error: " << reason << "\n";
    if (csv_) return code;
    Json doc = header();
    doc["status"] = "error";
    doc["results"] = nullptr;
    doc["error_reason"] = reason;
    out_ << doc.dump(2) << "\n";
    return code;
  }

  void set_command(std::string command) { command_ = std::move(command); }
  void set_csv(bool csv) { csv_ = csv; }

 private:
  Json header() const {
    Json doc;
    doc["schema_version"] = "1";
    doc["command"] = command_;
    doc["inputs"] = inputs_;
    return doc;
  }

  int emit(Json results) {
    Json doc = header();
    doc["status"] = "ok";
    doc["results"] = std::move(results);
    out_ << doc.dump(2) << "\n";
    return kOk;
  }

  Rational input(const char* name, const std::string& text) {
    if (text.empty()) throw ParseError(std::string("--") + name + " is required");
    Rational value = rational_from_decimal(text);
    inputs_[name] = rational_to_json(value);
    return value;
  }

  const Family& input_family(const Options& opt) {
    const Family& fam = family_from_name(opt.family);
    inputs_["family"] = fam.name;
    return fam;
  }

  Rational positive(const char* name, const std::string& text) {
    Rational value = input(name, text);
    if (value <= 0) throw DomainError(std::string("--") + name + " must be positive");
    return value;
  }

  int coeffs(const Options& opt) {
    const Family& fam = input_family(opt);
    inputs_["upto"] = opt.upto;
    if (opt.upto < 1) throw DomainError("--upto must be >= 1");
    const auto values = coeff_prefix(fam, opt.upto, limits_.bernoulli_cap());
    if (csv_) {
      out_ << "k,coefficient,dec_lo,dec_hi\n";
      for (unsigned k = 1; k <= values.size(); ++k) {
        const Rational& c = values[k - 1];
        out_ << k << "," << csv_quote(to_fraction_string(c)) << ","
             << to_decimal(c, opt.digits, Rounding::Down) << ","
             << to_decimal(c, opt.digits, Rounding::Up) << "\n";
      }
      return kOk;
    }
    Json rows = Json::array();
    for (unsigned k = 1; k <= values.size(); ++k) {
      const Rational& c = values[k - 1];
      Json row;
      row["k"] = k;
      row["coefficient"] = rational_to_json(c);
      row["dec_lo"] = to_decimal(c, opt.digits, Rounding::Down);
      row["dec_hi"] = to_decimal(c, opt.digits, Rounding::Up);
      rows.push_back(std::move(row));
    }
    Json results;
    results["family"] = fam.name;
    results["rows"] = std::move(rows);
    return emit(std::move(results));
  }

  int constant(const Options& opt) {
    const Family& fam = input_family(opt);
    const Rational x0 = input("x0", opt.x0);
    const Rational width = positive("width", opt.width);
    const Enclosure value = best_constant(fam, x0, width, limits_);
    Json results;
    results["family"] = fam.name;
    results["x0"] = rational_to_json(x0);
    results["best_constant"] = enclosure_to_json(value, opt.digits);
    return emit(std::move(results));
  }

  int certify(const Options& opt) {
    const Family& fam = input_family(opt);
    const Rational x0 = input("x0", opt.x0);
    const Rational width = positive("width", opt.width);
    return emit(squeeze_to_json(certify_squeeze(fam, x0, width, limits_), opt.digits));
  }

  int error(const Options& opt) {
    const Family& fam = input_family(opt);
    const Rational x0 = input("x0", opt.x0);
    const Rational tol = positive("tol", opt.tol);
    return emit(error_report_to_json(max_error(fam, x0, tol, limits_), opt.digits));
  }

  int scan_grid(const Options& opt) {
    const Family& fam = input_family(opt);
    const Rational from = input("from", opt.from);
    const Rational to = input("to", opt.to);
    inputs_["steps"] = opt.steps;
    const Rational width = positive("width", opt.width);
    const Rational tol = positive("tol", opt.tol);
    const auto rows = scan(fam, from, to, opt.steps, width, tol, limits_);
    if (csv_) {
      out_ << "x0,best_constant_lo,best_constant_hi,best_constant_dec_lo,best_constant_dec_hi,"
              "t0_lo,t0_hi,t0_dec_lo,t0_dec_hi,delta_lo,delta_hi,delta_dec_lo,delta_dec_hi,error\n";
      for (const auto& row : rows) {
        out_ << csv_quote(to_fraction_string(row.x0)) << ","
             << csv_enclosure(row.best_constant, opt.digits) << ","
             << csv_enclosure(row.t0, opt.digits) << "," << csv_enclosure(row.delta, opt.digits)
             << "," << (row.error ? csv_quote(*row.error) : "") << "\n";
      }
      return kOk;
    }
    Json results;
    results["family"] = fam.name;
    results["rows"] = Json::array();
    for (const auto& row : rows) results["rows"].push_back(scan_row_to_json(row, opt.digits));
    return emit(std::move(results));
  }

  int verify(const Options& opt) {
    if (opt.input.empty()) throw ParseError("--in is required");
    inputs_["in"] = opt.input;
    Json doc;
    try {
      if (opt.input == "-") {
        doc = Json::parse(in_);
      } else {
        std::ifstream file(opt.input);
        if (!file) throw ParseError("cannot open '" + opt.input + "'");
        doc = Json::parse(file);
      }
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    std::vector<std::pair<std::string, const Json*>> found;
    const Json* body = &doc;
    if (doc.is_object() && doc.contains("results") && doc["results"].is_object()) {
      body = &doc["results"];
    }
    if (body->is_object() && body->contains("kind")) {
      found.emplace_back("certificate", body);
    } else if (body->is_object()) {
      for (const char* key : {"lower_cert", "upper_cert"}) {
        if (body->contains(key)) found.emplace_back(key, &body->at(key));
      }
    }
    if (found.empty()) throw ParseError("no certificate found in input");

    bool all_valid = true;
    Json checked = Json::array();
    for (const auto& [name, node] : found) {
      const Certificate cert = certificate_from_json(*node);
      const VerifyResult verdict = verify_certificate(cert, limits_);
      all_valid = all_valid && verdict.ok;
      Json entry;
      entry["name"] = name;
      entry["kind"] = to_string(cert.kind);
      entry["valid"] = verdict.ok;
      entry["reasons"] = verdict.reasons;
      checked.push_back(std::move(entry));
    }
    Json results;
    results["valid"] = all_valid;
    results["certificates"] = std::move(checked);
    if (!all_valid) {
      Json doc_out = header();
      doc_out["status"] = "error";
      doc_out["results"] = std::move(results);
      doc_out["error_reason"] = "certificate verification failed";
      out_ << doc_out.dump(2) << "\n";
      return kCertificationFailure;
    }
    return emit(std::move(results));
  }

  std::ostream& out_;
  std::ostream& err_;
  std::istream& in_;
  std::string command_;
  Json inputs_ = Json::object();
  Limits limits_;
  bool csv_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Certified exponential squeeze bounds for cos x and x/tan x"};
  app.require_subcommand(1);
  Options opt;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "logcos or logtan")
        ->required()
        ->check(CLI::IsMember({"logcos", "logtan"}));
  };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", opt.digits, "significant digits in decimal renderings")
        ->check(CLI::Range(1, 60));
  };

  auto* coeffs = app.add_subcommand("coeffs", "series coefficients as exact rationals");
  add_family(coeffs);
  coeffs->add_option("--upto", opt.upto, "last index k")->required();
  coeffs->add_option("--format", opt.format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_digits(coeffs);

  auto* constant = app.add_subcommand("constant", "best constant for the interval (0, x0)");
  add_family(constant);
  constant->add_option("--x0", opt.x0, "interval end (decimal or p/q)")->required();
  constant->add_option("--width", opt.width, "enclosure width")->required();
  add_digits(constant);

  auto* certify = app.add_subcommand("certify", "certify both sides of the squeeze on (0, x0)");
  add_family(certify);
  certify->add_option("--x0", opt.x0, "interval end")->required();
  certify->add_option("--width", opt.width, "best-constant enclosure width (default 1e-7)");
  add_digits(certify);

  auto* error = app.add_subcommand("error", "minimum location t0 and largest error delta");
  add_family(error);
  error->add_option("--x0", opt.x0, "interval end")->required();
  error->add_option("--tol", opt.tol, "bracket tolerance (default 1e-6)");
  add_digits(error);

  auto* scan = app.add_subcommand("scan", "best constant, t0 and delta over a grid of x0");
  add_family(scan);
  scan->add_option("--from", opt.from, "first x0")->required();
  scan->add_option("--to", opt.to, "last x0")->required();
  scan->add_option("--steps", opt.steps, "number of grid intervals")->required();
  scan->add_option("--format", opt.format, "csv (default) or json")
      ->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--width", opt.width, "best-constant width (default 1e-7)");
  scan->add_option("--tol", opt.tol, "bracket tolerance (default 1e-6)");
  add_digits(scan);

  auto* verify = app.add_subcommand("verify", "re-check a serialized certificate");
  verify->add_option("--in", opt.input, "certificate or certify output; '-' for stdin")
      ->required();

  Session session(out, err, in);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (!args.empty()) session.set_command(args.front());
    return session.fail(kInputError, e.what());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  session.set_command(command);
  if (command == "coeffs") session.set_csv(opt.format == "csv");
  if (command == "scan") session.set_csv(opt.format != "json");

  try {
    return session.dispatch(command, opt);
  } catch (const ParseError& e) {
    return session.fail(kInputError, e.what());
  } catch (const DomainError& e) {
    return session.fail(kInputError, e.what());
  } catch (const PreconditionError& e) {
    return session.fail(kInputError, e.what());
  } catch (const Error& e) {
    return session.fail(kCertificationFailure, e.what());
  }
}

}  // namespace squeeze::cli

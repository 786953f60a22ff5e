#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "legscale/deriv_expand.hpp"
#include "legscale/json.hpp"
#include "legscale/scale_expand.hpp"
#include "legscale/verify.hpp"
#include "numeric.hpp"

namespace legscale::cli {

namespace {

using nlohmann::json;

/// Thrown for bad user input that survives CLI11's own checks.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputSpec {
  std::string format = "json";
  std::string destination;  // empty: standard output
  std::optional<int> float_digits;
};

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  return row + "\n";
}

// Returns false when the destination cannot be written.
bool emit(const OutputSpec& spec, const std::string& content, std::ostream& out) {
  if (spec.destination.empty()) {
    out << content;
    return static_cast<bool>(out);
  }
  std::ofstream file(spec.destination, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << content;
  file.flush();
  return static_cast<bool>(file);
}

Rational parse_lambda(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse lambda '" + text + "': " + e.what());
  }
}

std::vector<Rational> parse_lambda_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_lambda(item));
  if (out.empty()) throw UsageError("empty lambda list");
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- table

struct TableOptions {
  std::string kind;
  int n_max = 0;
  std::optional<std::string> lambda;
  OutputSpec output;
};

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
  const bool needs_lambda = opt.kind == "a" || opt.kind == "b";
  std::optional<Rational> lambda;
  if (needs_lambda) {
    if (!opt.lambda) throw UsageError("table " + opt.kind + " requires --lambda");
    lambda = parse_lambda(*opt.lambda);
  }

  std::vector<std::string> header = opt.kind == "alpha" ? std::vector<std::string>{"n", "k", "i", "degree", "value"}
                                                        : std::vector<std::string>{"n", "k", "value"};
  if (opt.output.float_digits) header.emplace_back("approx");

  std::vector<std::vector<std::string>> rows;
  json json_rows = json::array();
  auto add_row = [&](std::vector<std::pair<std::string, int>> indices, const Rational& value) {
    std::vector<std::string> row;
    json entry = json::object();
    for (const auto& [name, v] : indices) {
      row.push_back(std::to_string(v));
      entry[name] = v;
    }
    row.push_back(value.str());
    entry["value"] = value;
    if (opt.output.float_digits) {
      row.push_back(format_significant(value, *opt.output.float_digits));
      entry["approx"] = row.back();
    }
    rows.push_back(std::move(row));
    json_rows.push_back(std::move(entry));
  };

  for (int n = 0; n <= opt.n_max; ++n) {
    if (opt.kind == "alpha") {
      for (int k = 0; k <= n; ++k) {
        const auto alphas = alpha_closed_recurrence_upto(n, k, (n - k) / 2);
        for (std::size_t i = 0; i < alphas.size(); ++i) {
          const int ii = static_cast<int>(i);
          add_row({{"n", n}, {"k", k}, {"i", ii}, {"degree", n - k - 2 * ii}}, alphas[i]);
        }
      }
    } else {
      for (int k = 0; 2 * k <= n; ++k) {
        add_row({{"n", n}, {"k", k}},
                opt.kind == "a" ? a_coefficient(*lambda, n, k) : b_coefficient(*lambda, n, k));
      }
    }
  }

  std::string content;
  if (opt.output.format == "csv") {
    content = csv_row(header);
    for (const auto& row : rows) content += csv_row(row);
  } else {
    json doc = {{"kind", opt.kind}, {"n_max", opt.n_max}, {"rows", std::move(json_rows)}};
    if (lambda) doc["lambda"] = *lambda;
    content = dump(doc);
  }
  if (!emit(opt.output, content, out)) {
    err << "error: cannot write " << opt.output.destination << "\n";
    return kIoError;
  }
  return kOk;
}

// ---------------------------------------------------------------- expand

struct ExpandOptions {
  std::string expr;
  int n = 0;
  std::optional<int> k;
  std::optional<std::string> lambda;
  std::string form = "legendre";
  std::string method = "recurrence";
  OutputSpec output;
};

int cmd_expand(const ExpandOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 0) throw UsageError("--n must be nonnegative");
  std::string content;
  const auto& digits = opt.output.float_digits;

  if (opt.expr == "scaled") {
    if (!opt.lambda) throw UsageError("expand scaled requires --lambda");
    const Rational lambda = parse_lambda(*opt.lambda);
    if (opt.k && (*opt.k < 0 || 2 * *opt.k > opt.n)) {
      throw UsageError("k=" + std::to_string(*opt.k) + " outside 0..floor(n/2) for n=" + std::to_string(opt.n));
    }
    const auto form = parse_expansion_form(opt.form);
    auto expansion = form == ExpansionForm::derivative ? expand_derivative_form(lambda, opt.n)
                                                       : expand_legendre_form(lambda, opt.n);
    if (opt.k) {
      const Rational keep = expansion.coeff(*opt.k);
      expansion.coeffs.clear();
      expansion.set(*opt.k, keep);
    }
    if (opt.output.format == "csv") {
      content = csv_row(digits ? std::vector<std::string>{"k", "value", "approx"} : std::vector<std::string>{"k", "value"});
      for (const auto& [k, c] : expansion.coeffs) {
        std::vector<std::string> row{std::to_string(k), c.str()};
        if (digits) row.push_back(format_significant(c, *digits));
        content += csv_row(row);
      }
    } else {
      json doc = expansion;
      if (digits) {
        json approx = json::object();
        for (const auto& [k, c] : expansion.coeffs) approx[std::to_string(k)] = format_significant(c, *digits);
        doc["approx"] = std::move(approx);
      }
      content = dump(doc);
    }
  } else {
    if (!opt.k) throw UsageError("expand deriv requires --k");
    if (*opt.k < 0) throw UsageError("--k must be nonnegative");
    DerivExpansion expansion;
    if (opt.method == "telescoping") {
      expansion = deriv_expand_telescoping(opt.n, *opt.k);
    } else if (opt.method == "triangular") {
      expansion = deriv_expand_triangular(opt.n, *opt.k);
    } else {
      expansion = deriv_expand_recurrence(opt.n, *opt.k);
    }
    if (opt.output.format == "csv") {
      content = csv_row(digits ? std::vector<std::string>{"degree", "value", "approx"}
                               : std::vector<std::string>{"degree", "value"});
      for (std::size_t i = 0; i < expansion.alphas.size(); ++i) {
        std::vector<std::string> row{std::to_string(expansion.degree_of(static_cast<int>(i))),
                                     expansion.alphas[i].str()};
        if (digits) row.push_back(format_significant(expansion.alphas[i], *digits));
        content += csv_row(row);
      }
    } else {
      json doc = expansion;
      if (digits) {
        json approx = json::object();
        for (std::size_t i = 0; i < expansion.alphas.size(); ++i) {
          approx[std::to_string(expansion.degree_of(static_cast<int>(i)))] =
              format_significant(expansion.alphas[i], *digits);
        }
        doc["approx"] = std::move(approx);
      }
      content = dump(doc);
    }
  }

  if (!emit(opt.output, content, out)) {
    err << "error: cannot write " << opt.output.destination << "\n";
    return kIoError;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite;
  int n_max = 0;
  std::optional<std::string> lambdas;
  std::optional<std::uint64_t> seed;
  int random_count = 20;
  std::optional<std::string> format;
  std::string destination;
};

std::string summary_table(const std::vector<oracle::VerificationReport>& reports, bool passed) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "subject" << std::setw(8) << "status" << std::right << std::setw(8) << "cases"
     << "  counterexample\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(18) << r.subject << std::setw(8) << (r.passed() ? "pass" : "FAIL") << std::right
       << std::setw(8) << r.cases << "  " << (r.counterexample ? r.counterexample->parameters : "-") << "\n";
  }
  for (const auto& r : reports) {
    for (const auto& note : r.notes) os << "  " << r.subject << ": " << note << "\n";
  }
  os << "overall: " << (passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string join_rationals(const std::vector<Rational>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const auto suite = verify::parse_suite(opt.suite);
  if (!suite) throw UsageError("unknown suite '" + opt.suite + "'");

  std::vector<Rational> lambdas;
  if (opt.lambdas) {
    lambdas = parse_lambda_list(*opt.lambdas);
  } else {
    lambdas = verify::default_lambdas();
    if (*suite == verify::Suite::replay) std::erase_if(lambdas, [](const Rational& l) { return l.is_zero(); });
  }
  if (opt.seed) {
    auto extra = verify::random_lambdas(*opt.seed, opt.random_count);
    if (*suite == verify::Suite::replay && !opt.lambdas) {
      std::erase_if(extra, [](const Rational& l) { return l.is_zero(); });
    }
    lambdas.insert(lambdas.end(), extra.begin(), extra.end());
  }
  if (*suite == verify::Suite::replay &&
      std::any_of(lambdas.begin(), lambdas.end(), [](const Rational& l) { return l.is_zero(); })) {
    throw UsageError("lambda=0 invalid for replay");
  }

  const auto reports = verify::run_suite(*suite, opt.n_max, lambdas);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  std::string content;
  if (!opt.format) {
    content = summary_table(reports, passed);
  } else if (*opt.format == "csv") {
    content = csv_row({"subject", "status", "cases", "n_max", "k_range", "lambdas", "counterexample", "notes"});
    for (const auto& r : reports) {
      std::string notes;
      for (const auto& note : r.notes) notes += (notes.empty() ? "" : "; ") + note;
      content += csv_row({r.subject, r.passed() ? "pass" : "fail", std::to_string(r.cases), std::to_string(r.n_max),
                          r.k_range, join_rationals(r.lambdas, " "),
                          r.counterexample ? r.counterexample->parameters : "", notes});
    }
  } else {
    json doc = {{"suite", opt.suite}, {"n_max", opt.n_max}, {"status", passed ? "pass" : "fail"}, {"reports", reports}};
    if (opt.seed) doc["seed"] = *opt.seed;
    content = dump(doc);
  }

  OutputSpec spec;
  spec.destination = opt.destination;
  if (!emit(spec, content, out)) {
    err << "error: cannot write " << opt.destination << "\n";
    return kIoError;
  }
  return passed ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  int n = 0;
  std::string lambda;
  std::string x;
  std::string method = "direct";
  int digits = 15;
};

int cmd_eval(const EvalOptions& opt, std::ostream& out) {
  if (opt.n < 0) throw UsageError("--n must be nonnegative");
  const auto method = parse_eval_method(opt.method);
  if (!method) throw UsageError("unknown method '" + opt.method + "'");
  const Rational lambda = parse_lambda(opt.lambda);
  Rational x;
  try {
    x = Rational::parse(opt.x);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse x '" + opt.x + "': " + e.what());
  }
  out << format_significant(evaluate_scaled_legendre(opt.n, lambda, x, *method), opt.digits) << "\n";
  return kOk;
}

void add_output_options(CLI::App& cmd, OutputSpec& spec) {
  cmd.add_option("--format", spec.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--output", spec.destination, "write to this file instead of standard output");
  cmd.add_option("--digits", spec.float_digits, "add a decimal rendering with this many significant digits")
      ->check(CLI::Range(kMinDigits, kMaxDigits));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact expansions of scaled Legendre polynomials and their derivatives", "legscale"};
  app.require_subcommand(1);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "tabulate a, b or alpha coefficients");
  table_cmd->add_option("kind", table.kind, "a | b | alpha")->required()->check(CLI::IsMember({"a", "b", "alpha"}));
  table_cmd->add_option("--n-max", table.n_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--lambda", table.lambda, "scale factor p/q (a and b tables)");
  add_output_options(*table_cmd, table.output);

  ExpandOptions expand;
  auto* expand_cmd = app.add_subcommand("expand", "expand P_n(lambda x) or d^k P_n / dx^k");
  expand_cmd->add_option("expr", expand.expr, "scaled | deriv")->required()->check(CLI::IsMember({"scaled", "deriv"}));
  expand_cmd->add_option("--n", expand.n, "degree")->required();
  expand_cmd->add_option("--k", expand.k, "derivative order (deriv) or single coefficient index (scaled)");
  expand_cmd->add_option("--lambda", expand.lambda, "scale factor p/q");
  expand_cmd->add_option("--form", expand.form, "derivative | legendre")
      ->check(CLI::IsMember({"derivative", "legendre"}));
  expand_cmd->add_option("--method", expand.method, "telescoping | triangular | recurrence")
      ->check(CLI::IsMember({"telescoping", "triangular", "recurrence"}));
  add_output_options(*expand_cmd, expand.output);

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "run oracle verification sweeps");
  verify_cmd->add_option("suite", verify_opt.suite, "all | eq9 | eq13 | eq19 | eq26 | replay")
      ->required()
      ->check(CLI::IsMember({"all", "eq9", "eq13", "eq19", "eq26", "replay"}));
  verify_cmd->add_option("--n-max", verify_opt.n_max, "largest degree")->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--lambda", verify_opt.lambdas, "comma-separated lambda set");
  verify_cmd->add_option("--seed", verify_opt.seed, "append seeded random lambdas");
  verify_cmd->add_option("--random-count", verify_opt.random_count, "random lambdas added with --seed")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify_opt.format, "json or csv (default: summary table)")
      ->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--output", verify_opt.destination, "write to this file instead of standard output");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate P_n(lambda x) numerically");
  eval_cmd->add_option("--n", eval.n, "degree")->required();
  eval_cmd->add_option("--lambda", eval.lambda, "scale factor p/q")->required();
  eval_cmd->add_option("--x", eval.x, "point, as a decimal or p/q")->required();
  eval_cmd->add_option("--method", eval.method, "direct | a-form | b-form");
  eval_cmd->add_option("--digits", eval.digits, "significant digits")->check(CLI::Range(kMinDigits, kMaxDigits));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out, err);
    if (*expand_cmd) return cmd_expand(expand, out, err);
    if (*verify_cmd) return cmd_verify(verify_opt, out, err);
    if (*eval_cmd) return cmd_eval(eval, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace legscale::cli

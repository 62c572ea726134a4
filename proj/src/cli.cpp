/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "utri/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "utri/analysis.hpp"
#include "utri/solver.hpp"

namespace utri {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax:
    case ErrorKind::constant_term:
    case ErrorKind::variable_out_of_range:
    case ErrorKind::field_mismatch:
    case ErrorKind::arity_mismatch:
    case ErrorKind::size_mismatch:
    case ErrorKind::unbound_variable:
    case ErrorKind::invalid_argument:
      return kExitUsage;
    case ErrorKind::resource_limit:
    case ErrorKind::cap_reached:
    case ErrorKind::budget_exhausted:
    case ErrorKind::degenerate_coefficient:
      return kExitBudget;
    default:
      return kExitDomain;
  }
}

int band_of(const FieldMatrix& u) {
  const std::size_t n = u.size();
  for (std::size_t span = 0; span < n; ++span) {
    for (std::size_t j = 1; j + span <= n; ++j) {
      if (!u.field().is_zero(u.at(j, j + span))) return static_cast<int>(span) - 1;
    }
  }
  return static_cast<int>(n) - 1;
}

OracleSummary oracle_enum(const NcPolynomial& p, std::size_t n) {
  const Field& field = p.field();
  if (field.kind() != FieldKind::prime) raise(ErrorKind::precondition, "the oracle runs over F_q only");
  const std::uint64_t q = field.modulus();
  if (q != 2 && q != 3 && q != 5) raise(ErrorKind::precondition, "the oracle needs q in {2,3,5}");
  if (n == 0) raise(ErrorKind::invalid_argument, "n must be >= 1");
  const std::size_t m = p.arity();
  const std::size_t cells = n * (n + 1) / 2;
  const double count = std::pow(static_cast<double>(q), static_cast<double>(m * cells));
  if (n > 3 || m > 2 || count > kOracleTupleLimit) {
    raise(ErrorKind::resource_limit, "oracle limited to n <= 3, m <= 2 and 1e8 tuples (requested " +
                                         std::to_string(static_cast<long double>(count)) + ")");
  }

  OracleSummary summary;
  summary.q = q;
  summary.n = n;
  summary.m = m;
  CoefficientTable table(p);
  std::vector<FieldMatrix> mats(m, FieldMatrix(field, n));
  std::vector<FieldValue> residues;
  for (std::uint64_t v = 0; v < q; ++v) residues.push_back(field.from_int(static_cast<std::int64_t>(v)));

  std::vector<std::size_t> digits(m * cells, 0);
  while (true) {
    std::size_t d = 0;
    for (auto& u : mats) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = j; k <= n; ++k) u.at(j, k) = residues[digits[d++]];
      }
    }
    const FieldMatrix value = evaluate<FieldValue>(p, mats);
    if (!(value == evaluate_structured(p, mats, table))) summary.evaluators_agree = false;
    std::vector<std::uint64_t> key;
    key.reserve(cells);
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = j; k <= n; ++k) key.push_back(value.at(j, k).residue().value);
    }
    summary.image.insert(std::move(key));
    ++summary.tuples;

    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }

  for (const auto& key : summary.image) {
    FieldMatrix u(field, n);
    std::size_t d = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = j; k <= n; ++k) u.at(j, k) = residues[key[d++]];
    }
    ++summary.band_counts[band_of(u)];
  }
  return summary;
}

Json to_json(const OracleSummary& summary) {
  const Field field = Field::prime(summary.q);
  Json image = Json::array();
  for (const auto& key : summary.image) {
    FieldMatrix u(field, summary.n);
    std::size_t d = 0;
    for (std::size_t j = 1; j <= summary.n; ++j) {
      for (std::size_t k = j; k <= summary.n; ++k) u.at(j, k) = field.from_int(static_cast<std::int64_t>(key[d++]));
    }
    image.push_back(to_json(u));
  }
  Json bands = Json::object();
  for (const auto& [band, count] : summary.band_counts) bands[std::to_string(band)] = count;
  return Json{{"note",
               "exhaustive enumeration over a small finite field; validates evaluation and band containment, "
               "not density"},
              {"field", field.name()},
              {"n", summary.n},
              {"m", summary.m},
              {"tuples", summary.tuples},
              {"image_size", summary.image.size()},
              {"image", std::move(image)},
              {"band_counts", std::move(bands)},
              {"evaluators_agree", summary.evaluators_agree}};
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("missing input file");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void pretty_print(std::ostream& err, const std::string& title, const FieldMatrix& u) {
  err << title << ":\n";
  for (std::size_t j = 1; j <= u.size(); ++j) {
    for (std::size_t k = 1; k <= u.size(); ++k) {
      err << "  " << (k < j ? std::string("0") : u.at(j, k).to_string());
    }
    err << '\n';
  }
}

SolveOptions solve_options(const CommandConfig& c) {
  SolveOptions o;
  o.seed = c.seed;
  o.retries = c.retries;
  o.sample_budget = c.sample_budget;
  o.sampling_height = c.height;
  o.tolerance = c.tolerance;
  o.monomial_budget = c.monomial_budget;
  return o;
}

std::size_t need_n(const CommandConfig& c) {
  if (c.n == 0) throw UsageError(c.subcommand + " needs --n");
  return c.n;
}

Json dispatch(const CommandConfig& c, std::ostream& err, int& status) {
  if (c.poly.empty()) throw UsageError("missing --poly");
  const Field field = Field::parse(c.field);
  const NcPolynomial p = parse_polynomial(c.poly, c.m, field);
  const std::string& cmd = c.subcommand;

  if (cmd == "order") {
    return to_json(order(p, c.max_n, c.monomial_budget));
  }
  if (cmd == "classify") {
    return to_json(classify(p, need_n(c), c.max_n));
  }
  if (cmd == "eval") {
    if (c.generic) {
      const PolyMatrix value = generic_evaluate(p, need_n(c), c.monomial_budget);
      return Json{{"generic", true}, {"product", to_json(value)}};
    }
    const auto mats = matrices_from_json(read_json(c.matrices_path), field);
    const FieldMatrix product = evaluate<FieldValue>(p, mats, c.monomial_budget);
    const FieldMatrix structured = evaluate_structured(p, mats);
    if (c.pretty) pretty_print(err, "p(u)", product);
    const bool agree = field.is_exact() ? product == structured : max_deviation(product, structured) <= c.tolerance;
    return Json{{"product", to_json(product)}, {"structured_agrees", agree}};
  }
  if (cmd == "coeffs") {
    CoefficientTable table(p, c.monomial_budget);
    std::size_t k = c.k;
    if (k == 0) {
      const OrderReport report = order(p, c.max_n, c.monomial_budget);
      if (!report.order) raise(ErrorKind::cap_reached, "order unresolved; pass --k");
      if (*report.order == 0) throw UsageError("ord(p) = 0; pass --k");
      k = *report.order;
    }
    Json list = Json::array();
    for (const auto& [tuple, poly] : table.level(k)) {
      list.push_back(Json{{"tuple", tuple}, {"poly", poly.to_string()}});
    }
    return Json{{"k", k}, {"coefficients", std::move(list)}};
  }
  if (cmd == "solve") {
    const FieldMatrix target = field_matrix_from_json(read_json(c.target_path), field);
    if (c.n != 0 && c.n != target.size()) throw UsageError("--n differs from the target size");
    const WitnessResult result = solve(p, target.size(), target, solve_options(c));
    if (c.pretty) {
      for (std::size_t i = 0; i < result.matrices.size(); ++i) {
        pretty_print(err, "u" + std::to_string(i + 1), result.matrices[i]);
      }
      pretty_print(err, "p(u)", result.product);
    }
    return to_json(result);
  }
  if (cmd == "hit") {
    if (c.open_set.empty()) throw UsageError("hit needs --f");
    const CPolynomial f = parse_cpolynomial(c.open_set, field);
    const WitnessResult result = hit_open_set(p, need_n(c), f, solve_options(c));
    if (c.pretty) pretty_print(err, "p(u)", result.product);
    return to_json(result);
  }
  if (cmd == "oracle-enum") {
    return to_json(oracle_enum(p, need_n(c)));
  }
  if (cmd == "verify") {
    const Json doc = read_json(c.matrices_path);
    const auto mats = matrices_from_json(doc, field);
    VerifyReport report;
    if (!c.open_set.empty() || (c.target_path.empty() && doc.is_object() && doc.contains("open_set"))) {
      const std::string text = c.open_set.empty() ? doc["open_set"].get<std::string>() : c.open_set;
      report = verify_open_set(p, mats, parse_cpolynomial(text, field), c.tolerance);
    } else {
      FieldMatrix target;
      if (!c.target_path.empty()) {
        target = field_matrix_from_json(read_json(c.target_path), field);
      } else if (doc.is_object() && doc.contains("target")) {
        target = field_matrix_from_json(doc["target"], field);
      } else {
        throw UsageError("verify needs --target or a witness file carrying one");
      }
      std::optional<std::size_t> r;
      if (doc.is_object() && doc.contains("order") && doc["order"].get<std::size_t>() >= 1) {
        r = doc["order"].get<std::size_t>();
      }
      report = verify(p, mats, target, r, c.tolerance);
    }
    if (!report.passed) status = kExitDomain;
    return to_json(report);
  }
  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  Json result;
  try {
    result = dispatch(config, err, status);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const std::string text = result.dump(2) + "\n";
  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output_path);
    if (!file) {
      err << "error: cannot write " << config.output_path << '\n';
      return kExitUsage;
    }
    file << text;
  }
  return status;
}

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative polynomials on upper triangular matrices"};
  app.require_subcommand(1);
  CommandConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--poly", c.poly, "polynomial in x1..xm")->required();
    sub->add_option("--m", c.m, "number of variables (default: inferred)");
    sub->add_option("--field", c.field, "Q | Fp:<prime> | C[:tol]");
    sub->add_option("--monomial-budget", c.monomial_budget, "cap on intermediate monomials");
    sub->add_option("-o,--output", c.output_path, "write JSON here instead of stdout");
  };
  auto solving = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed);
    sub->add_option("--retries", c.retries);
    sub->add_option("--budget", c.sample_budget, "random draws for sampling searches");
    sub->add_option("--height", c.height, "rational sampling height");
    sub->add_option("--tol", c.tolerance, "complex residual tolerance");
    sub->add_flag("--pretty", c.pretty, "print matrices to stderr");
  };

  auto* order_cmd = app.add_subcommand("order", "compute ord(p)");
  common(order_cmd);
  order_cmd->add_option("--max-n", c.max_n);

  auto* classify_cmd = app.add_subcommand("classify", "classify the image p(T_n)");
  common(classify_cmd);
  classify_cmd->add_option("--n", c.n)->required();
  classify_cmd->add_option("--max-n", c.max_n);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate p on matrices or generically");
  common(eval_cmd);
  eval_cmd->add_option("--matrices", c.matrices_path);
  eval_cmd->add_option("--n", c.n);
  eval_cmd->add_flag("--generic", c.generic);
  eval_cmd->add_option("--tol", c.tolerance);
  eval_cmd->add_flag("--pretty", c.pretty);

  auto* coeffs_cmd = app.add_subcommand("coeffs", "list coefficient polynomials");
  common(coeffs_cmd);
  coeffs_cmd->add_option("--k", c.k, "tuple length (default: ord(p))");
  coeffs_cmd->add_option("--max-n", c.max_n);

  auto* solve_cmd = app.add_subcommand("solve", "find u with p(u) = target");
  common(solve_cmd);
  solving(solve_cmd);
  solve_cmd->add_option("--target", c.target_path)->required();
  solve_cmd->add_option("--n", c.n);

  auto* hit_cmd = app.add_subcommand("hit", "find u with f(p(u)) != 0");
  common(hit_cmd);
  solving(hit_cmd);
  hit_cmd->add_option("--f", c.open_set)->required();
  hit_cmd->add_option("--n", c.n)->required();

  auto* oracle_cmd = app.add_subcommand("oracle-enum", "exhaustive image over a small prime field");
  common(oracle_cmd);
  oracle_cmd->add_option("--n", c.n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "replay a witness");
  common(verify_cmd);
  verify_cmd->add_option("--witness,--matrices", c.matrices_path)->required();
  verify_cmd->add_option("--target", c.target_path);
  verify_cmd->add_option("--f", c.open_set);
  verify_cmd->add_option("--tol", c.tolerance);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace utri

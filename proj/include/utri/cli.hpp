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

#ifndef UTRI_CLI_HPP
#define UTRI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "utri/freealg.hpp"
#include "utri/io.hpp"
#include "utri/triangular.hpp"

namespace utri {

struct CommandConfig {
  std::string subcommand;
  std::string field = "Q";
  std::string poly;
  std::size_t m = 0;  // 0: inferred from the polynomial
  std::size_t n = 0;
  std::size_t max_n = 0;
  std::size_t k = 0;  // coeffs: tuple length (0: ord(p))
  std::string target_path;
  std::string matrices_path;
  std::string output_path;
  std::string open_set;  // f in the y[s,t] grammar
  std::uint64_t seed = 0;
  std::size_t retries = 16;
  std::size_t sample_budget = 4096;
  std::size_t monomial_budget = kDefaultMonomialBudget;
  std::int64_t height = 0;
  double tolerance = 1e-9;
  bool generic = false;
  bool pretty = false;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitBudget = 3;

int exit_code(ErrorKind kind);

/// Runs one subcommand, writing JSON to out (or output_path) and
/// diagnostics to err.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);
/// Parses argv (argv[0] is the program name) and runs.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

inline constexpr double kOracleTupleLimit = 1e8;

struct OracleSummary {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t tuples = 0;
  /// Image points as packed row-major residues of the upper triangle.
  std::set<std::vector<std::uint64_t>> image;
  /// Image points counted by their largest band t with the point in T^(t).
  std::map<int, std::size_t> band_counts;
  bool evaluators_agree = true;
};

/// Exhaustive image of p over T_n(F_q). Requires p over F_q with
/// q in {2,3,5}, n <= 3, m <= 2 and q^(m n(n+1)/2) <= 1e8. Errors:
/// resource_limit, precondition.
OracleSummary oracle_enum(const NcPolynomial& p, std::size_t n);
/// Largest t with u in T^(t) (n - 1 for the zero matrix).
int band_of(const FieldMatrix& u);
Json to_json(const OracleSummary& summary);

}  // namespace utri

#endif  // UTRI_CLI_HPP

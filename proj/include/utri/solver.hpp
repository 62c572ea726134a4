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

#ifndef UTRI_SOLVER_HPP
#define UTRI_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "utri/analysis.hpp"
#include "utri/cpoly.hpp"
#include "utri/field.hpp"
#include "utri/freealg.hpp"
#include "utri/triangular.hpp"

namespace utri {

struct SolveOptions {
  std::uint64_t seed = 0;
  /// Resampling attempts for the greedy sweep.
  std::size_t retries = 16;
  /// Random draws allowed when searching diagonal tuples or nonvanishing points.
  std::size_t sample_budget = 4096;
  /// Rational sampling height; 0 keeps the field's own.
  std::int64_t sampling_height = 0;
  /// Acceptance tolerance for complex residuals.
  double tolerance = 1e-9;
  std::size_t monomial_budget = kDefaultMonomialBudget;
  /// When set, the order is taken as given instead of recomputed.
  std::optional<std::size_t> known_order;
};

/// Scalar values accumulated during a sweep. Merging two assignments that
/// disagree on a shared key is rejected.
class PartialAssignment {
 public:
  const Assignment& values() const noexcept { return values_; }
  const FieldValue* find(const VarKey& key) const;
  /// Returns false (and binds nothing) if key is bound to a different value.
  bool bind(const VarKey& key, const FieldValue& value);
  /// True iff the two agree on every shared key.
  bool compatible(const PartialAssignment& other) const;
  /// Raises internal_inconsistency on conflict.
  void merge(const PartialAssignment& other);

 private:
  Assignment values_;
};

struct SweepEntry {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::uint32_t band = 0;  // t - s - r
  VarKey fresh;
  std::vector<VarKey> chain;  // arcs (w, w+1), w = s .. r+s-2
  std::set<Position> new_positions;
  std::set<Position> old_positions;
};

struct SweepPlan {
  std::uint32_t r = 0;
  std::uint32_t n = 0;
  SlotTuple leading_tuple;
  std::vector<SweepEntry> entries;
};

struct PlanCheck {
  bool fresh_is_new = true;
  bool overlap_holds = true;
  bool single_schedule = true;
  std::string detail;

  bool ok() const { return fresh_is_new && overlap_holds && single_schedule; }
};

/// Entry order: band b = 0 .. n-r-1, within a band s = 1 .. n-r-b, target
/// (s, r+s+b) with fresh variable x[r+s-1, r+s+b, i'_r]. Requires
/// 1 <= r <= n-1 and |leading_tuple| = r. The invariants are checked.
SweepPlan build_sweep_plan(std::uint32_t r, std::uint32_t n, const SlotTuple& leading_tuple);
/// Uses ord(p) and the first leading tuple.
SweepPlan build_sweep_plan(const NcPolynomial& p, std::uint32_t n);

/// Checks (1) each fresh position lies in the entry's new positions, (2) the
/// first chain arc (s, s+1) lies in the old positions of every non-initial
/// entry that has a chain arc or a span beyond r+1 (for r = 1 and band 0
/// the arc (s, s+1) is the fresh position itself), (3) no position is fresh
/// twice.
PlanCheck check_sweep_plan(const SweepPlan& plan);
/// The overlap claim applied to every non-initial entry without exception.
bool literal_overlap_claim(const SweepPlan& plan, std::string* failure = nullptr);

/// n diagonal tuples b_1..b_n in K^m with p_{tuple}(b_{j_1}, ..., b_{j_{r+1}})
/// nonzero for every increasing (r+1)-subset. Errors: budget_exhausted,
/// precondition (zero coefficient polynomial).
std::vector<std::vector<FieldValue>> find_diagonals(const NcPolynomial& p, const SlotTuple& tuple, std::size_t n,
                                                    Rng& rng, std::size_t budget);
/// Same search for a coefficient polynomial in blocks z[1..blocks, 1..m].
std::vector<std::vector<FieldValue>> find_diagonals(const CPolynomial& coeff, std::size_t blocks, std::size_t m,
                                                    std::size_t n, const Field& field, Rng& rng, std::size_t budget);

/// A point where every listed polynomial is nonzero. Errors: precondition
/// (a zero polynomial in the list), budget_exhausted.
Assignment simultaneous_nonvanishing(const std::vector<CPolynomial>& polys, const Field& field, Rng& rng,
                                     std::size_t budget);

enum class WitnessStatus { exact, approximate };

struct VerifyReport {
  bool evaluators_agree = false;
  bool exact = false;           // p(u) equals the target exactly
  std::size_t mismatches = 0;   // entries off target (field equality)
  double max_residual = 0.0;    // complex: max entry deviation
  double structured_residual = 0.0;
  bool band_ok = false;         // entries with k - j <= r - 1 vanish
  std::optional<FieldValue> open_set_value;  // f(p(u)) when checking an open set
  bool passed = false;
  FieldMatrix product;
};

struct WitnessDiagnostics {
  std::string mode;  // "sweep", "diagonal", "zero", "random_fallback"
  std::size_t retries = 0;
  SlotTuple leading_tuple;
  std::vector<std::vector<FieldValue>> diagonals;
  std::size_t assignments_merged = 0;
  std::vector<std::string> notes;
};

struct WitnessResult {
  WitnessStatus status = WitnessStatus::exact;
  std::size_t order = 0;
  std::vector<FieldMatrix> matrices;
  FieldMatrix product;
  std::optional<FieldMatrix> target;
  std::optional<CPolynomial> open_set;
  VerifyReport verification;
  WitnessDiagnostics diagnostics;
};

/// Matrices with p(u) = target. Requires ord(p) = r >= 1 and target in
/// T_n^(r-1); for r >= n only the zero target is accepted. Errors:
/// band_violation, order_mismatch (r = 0), degenerate_coefficient.
WitnessResult solve_target(const NcPolynomial& p, std::size_t n, const FieldMatrix& target,
                           const SolveOptions& options = {});

/// ord(p) = 0: solves the diagonal by univariate root finding, then the
/// off-diagonal entries band by band. Errors: no_root_in_field,
/// degenerate_coefficient, order_mismatch.
WitnessResult solve_diagonal_r0(const NcPolynomial& p, std::size_t n, const FieldMatrix& target,
                                const SolveOptions& options = {});

/// Dispatches to solve_target or solve_diagonal_r0 by order.
WitnessResult solve(const NcPolynomial& p, std::size_t n, const FieldMatrix& target, const SolveOptions& options = {});

/// Matrices with f(p(u)) != 0, f a nonzero polynomial in the y[s,t]
/// coordinates with t - s >= r. Errors: band_violation, precondition,
/// budget_exhausted.
WitnessResult hit_open_set(const NcPolynomial& p, std::size_t n, const CPolynomial& f,
                           const SolveOptions& options = {});

/// Evaluates with both evaluators and checks the target (or f != 0).
VerifyReport verify(const NcPolynomial& p, const std::vector<FieldMatrix>& matrices, const FieldMatrix& target,
                    std::optional<std::size_t> r = std::nullopt, double tolerance = 1e-9);
VerifyReport verify_open_set(const NcPolynomial& p, const std::vector<FieldMatrix>& matrices, const CPolynomial& f,
                             double tolerance = 1e-9);

}  // namespace utri

#endif  // UTRI_SOLVER_HPP

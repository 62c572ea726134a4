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

#include "utri/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace utri {

const FieldValue* PartialAssignment::find(const VarKey& key) const {
  auto it = values_.find(key);
  return it == values_.end() ? nullptr : &it->second;
}

bool PartialAssignment::bind(const VarKey& key, const FieldValue& value) {
  auto [it, inserted] = values_.try_emplace(key, value);
  return inserted || it->second == value;
}

bool PartialAssignment::compatible(const PartialAssignment& other) const {
  for (const auto& [key, value] : other.values_) {
    const FieldValue* mine = find(key);
    if (mine != nullptr && !(*mine == value)) return false;
  }
  return true;
}

void PartialAssignment::merge(const PartialAssignment& other) {
  if (!compatible(other)) raise(ErrorKind::internal_inconsistency, "partial assignments disagree on a shared variable");
  for (const auto& [key, value] : other.values_) values_.try_emplace(key, value);
}

SweepPlan build_sweep_plan(std::uint32_t r, std::uint32_t n, const SlotTuple& leading_tuple) {
  if (r < 1 || r >= n) raise(ErrorKind::precondition, "sweep needs 1 <= r <= n - 1");
  if (leading_tuple.size() != r) raise(ErrorKind::invalid_argument, "leading tuple length must equal r");
  SweepPlan plan{r, n, leading_tuple, {}};
  std::set<Position> seen;
  for (std::uint32_t b = 0; b + r < n; ++b) {
    for (std::uint32_t s = 1; s + r + b <= n; ++s) {
      SweepEntry e;
      e.s = s;
      e.t = r + s + b;
      e.band = b;
      e.fresh = VarKey::entry(r + s - 1, e.t, leading_tuple[r - 1]);
      for (std::uint32_t w = s; w + 1 < r + s; ++w) e.chain.push_back(VarKey::entry(w, w + 1, leading_tuple[w - s]));
      for (const auto& pos : band_sets(s, e.t, r).reduced) {
        (seen.contains(pos) ? e.old_positions : e.new_positions).insert(pos);
      }
      seen.insert(e.new_positions.begin(), e.new_positions.end());
      plan.entries.push_back(std::move(e));
    }
  }
  const PlanCheck check = check_sweep_plan(plan);
  if (!check.ok()) raise(ErrorKind::internal_inconsistency, "sweep plan invariant failed: " + check.detail);
  return plan;
}

SweepPlan build_sweep_plan(const NcPolynomial& p, std::uint32_t n) {
  const OrderReport report = order(p, std::max<std::size_t>(p.degree() + 1, n));
  if (!report.order) raise(ErrorKind::cap_reached, "order unresolved");
  const auto r = static_cast<std::uint32_t>(*report.order);
  return build_sweep_plan(r, n, leading_tuples(p, r).front());
}

namespace {

std::string position_string(std::uint32_t j, std::uint32_t k) {
  return "(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

PlanCheck check_sweep_plan(const SweepPlan& plan) {
  PlanCheck check;
  std::set<Position> fresh_seen;
  auto note = [&](const std::string& msg) {
    if (check.detail.empty()) check.detail = msg;
  };
  for (std::size_t idx = 0; idx < plan.entries.size(); ++idx) {
    const SweepEntry& e = plan.entries[idx];
    const Position fresh{e.fresh.row(), e.fresh.col()};
    const std::string where = "entry " + position_string(e.s, e.t);
    if (!e.new_positions.contains(fresh)) {
      check.fresh_is_new = false;
      note(where + ": fresh position " + position_string(fresh.first, fresh.second) + " was already covered");
    }
    if (!fresh_seen.insert(fresh).second) {
      check.single_schedule = false;
      note(where + ": position " + position_string(fresh.first, fresh.second) + " scheduled twice");
    }
    if (idx == 0) continue;
    const Position arc{e.s, e.s + 1};
    if (!e.chain.empty() || e.band >= 1) {
      if (!e.old_positions.contains(arc)) {
        check.overlap_holds = false;
        note(where + ": arc " + position_string(arc.first, arc.second) + " not previously covered");
      }
    } else if (fresh != arc) {
      check.overlap_holds = false;
      note(where + ": band-0 entry without chain must be fresh at " + position_string(arc.first, arc.second));
    }
  }
  return check;
}

bool literal_overlap_claim(const SweepPlan& plan, std::string* failure) {
  for (std::size_t idx = 1; idx < plan.entries.size(); ++idx) {
    const SweepEntry& e = plan.entries[idx];
    if (!e.old_positions.contains(Position{e.s, e.s + 1})) {
      if (failure != nullptr) {
        *failure = "entry " + position_string(e.s, e.t) + ": arc " + position_string(e.s, e.s + 1) +
                   " not previously covered";
      }
      return false;
    }
  }
  return true;
}

namespace {

std::vector<FieldValue> sample_vector(const Field& field, std::size_t m, Rng& rng) {
  std::vector<FieldValue> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(sample(field, rng));
  return out;
}

Field sampling_field(const Field& field, const SolveOptions& options) {
  return options.sampling_height > 0 ? field.with_sampling_height(options.sampling_height) : field;
}

bool nonzero(const Field& field, const FieldValue& v, double tolerance) {
  if (field.kind() == FieldKind::complex) return std::abs(v.complex()) > tolerance;
  return !v.is_exact_zero();
}

}  // namespace

std::vector<std::vector<FieldValue>> find_diagonals(const CPolynomial& coeff, std::size_t blocks, std::size_t m,
                                                    std::size_t n, const Field& field, Rng& rng,
                                                    std::size_t budget) {
  if (coeff.is_zero()) raise(ErrorKind::precondition, "coefficient polynomial is zero");
  if (blocks == 0) raise(ErrorKind::invalid_argument, "blocks must be >= 1");
  constexpr std::size_t kPerPosition = 32;
  std::size_t draws = 0;
  std::size_t last_failures = 0;
  while (draws < budget) {
    std::vector<std::vector<FieldValue>> diag;
    bool complete = true;
    for (std::size_t j = 1; j <= n && complete; ++j) {
      bool placed = false;
      for (std::size_t attempt = 0; attempt < kPerPosition && draws < budget; ++attempt) {
        std::vector<FieldValue> cand = sample_vector(field, m, rng);
        ++draws;
        diag.push_back(std::move(cand));
        // every increasing subset of {1..j} of size `blocks` ending at j
        std::size_t failures = 0;
        if (blocks <= j) {
          std::vector<std::size_t> subset(blocks);
          subset[blocks - 1] = j;
          auto walk = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
            if (depth + 1 == blocks) {
              const FieldValue v = eval_with(coeff, [&](const VarKey& key) -> const FieldValue* {
                if (key.kind != VarKey::Kind::diag || key.a > blocks || key.b > m) return nullptr;
                return &diag[subset[key.a - 1] - 1][key.b - 1];
              });
              if (field.is_zero(v)) ++failures;
              return;
            }
            for (std::size_t x = start; x + (blocks - 2 - depth) < j; ++x) {
              subset[depth] = x;
              self(self, depth + 1, x + 1);
            }
          };
          walk(walk, 0, 1);
        }
        if (failures == 0) {
          placed = true;
          break;
        }
        last_failures = failures;
        diag.pop_back();
      }
      if (!placed) complete = false;
    }
    if (complete) return diag;
  }
  raise(ErrorKind::budget_exhausted, "no diagonal tuples found within " + std::to_string(budget) +
                                         " draws; last candidate failed on " + std::to_string(last_failures) +
                                         " subsets");
}

std::vector<std::vector<FieldValue>> find_diagonals(const NcPolynomial& p, const SlotTuple& tuple, std::size_t n,
                                                    Rng& rng, std::size_t budget) {
  CoefficientTable table(p);
  return find_diagonals(table.coefficient(tuple), tuple.size() + 1, p.arity(), n, p.field(), rng, budget);
}

Assignment simultaneous_nonvanishing(const std::vector<CPolynomial>& polys, const Field& field, Rng& rng,
                                     std::size_t budget) {
  std::set<VarKey> vars;
  for (const auto& f : polys) {
    if (f.is_zero()) raise(ErrorKind::precondition, "cannot make the zero polynomial nonvanishing");
    const auto v = f.variables();
    vars.insert(v.begin(), v.end());
  }
  for (std::size_t draw = 0; draw < budget; ++draw) {
    Assignment point;
    for (const auto& key : vars) point.emplace(key, sample(field, rng));
    const bool all = std::all_of(polys.begin(), polys.end(),
                                 [&](const CPolynomial& f) { return !field.is_zero(eval_full(f, point)); });
    if (all) return point;
  }
  raise(ErrorKind::budget_exhausted, "no common nonvanishing point within " + std::to_string(budget) + " draws");
}

namespace {

struct SweepTask {
  std::uint32_t s;
  std::uint32_t t;
  VarKey fresh;
};

struct SweepOutcome {
  std::optional<std::vector<FieldMatrix>> matrices;
  std::string failure;
  std::size_t merged = 0;
};

// Off-diagonal positions whose values are fixed once entry (s, t) is solved.
std::set<Position> block_positions(std::uint32_t s, std::uint32_t t, std::size_t r) {
  if (r == 0) {
    std::set<Position> out;
    for (std::uint32_t j = s; j <= t; ++j) {
      for (std::uint32_t k = j + 1; k <= t; ++k) out.emplace(j, k);
    }
    return out;
  }
  return band_sets(s, t, static_cast<std::uint32_t>(r)).reduced;
}

// Fills the non-fresh entries at random, evaluates p with the fresh variables
// symbolic and solves each target entry for its fresh variable in order.
SweepOutcome run_sweep(const NcPolynomial& p, const Field& field, std::size_t n, std::size_t r,
                       const std::vector<std::vector<FieldValue>>& diag, const std::vector<SweepTask>& tasks,
                       const FieldMatrix& target, Rng& rng, const SolveOptions& options) {
  const std::size_t m = p.arity();
  std::set<VarKey> fresh;
  for (const auto& task : tasks) fresh.insert(task.fresh);

  std::vector<PolyMatrix> symbolic;
  Assignment values;
  for (std::uint32_t i = 1; i <= m; ++i) {
    PolyMatrix u(field, n);
    for (std::uint32_t j = 1; j <= n; ++j) {
      u.at(j, j) = CPolynomial::constant(field, diag[j - 1][i - 1]);
      for (std::uint32_t k = j + 1; k <= n; ++k) {
        const VarKey key = VarKey::entry(j, k, i);
        if (fresh.contains(key)) {
          u.at(j, k) = CPolynomial::variable(field, key);
        } else {
          const FieldValue v = sample(field, rng);
          values.emplace(key, v);
          u.at(j, k) = CPolynomial::constant(field, v);
        }
      }
    }
    symbolic.push_back(std::move(u));
  }
  const PolyMatrix value = evaluate<CPolynomial>(p, symbolic, options.monomial_budget);

  SweepOutcome outcome;
  PartialAssignment accumulated;
  Assignment solved;
  for (const auto& task : tasks) {
    CPolynomial entry = eval_partial(value.at(task.s, task.t), solved);
    Assignment stray;
    for (const auto& key : entry.variables()) {
      if (key == task.fresh) continue;
      if (field.is_exact()) {
        raise(ErrorKind::internal_inconsistency,
              "entry " + position_string(task.s, task.t) + " depends on unsolved " + key.to_string());
      }
      stray.emplace(key, field.zero());
    }
    if (!stray.empty()) entry = eval_partial(entry, stray);
    if (entry.degree_in(task.fresh) > 1) {
      raise(ErrorKind::internal_inconsistency,
            "entry " + position_string(task.s, task.t) + " is not affine in " + task.fresh.to_string());
    }
    const VarKey vars[] = {task.fresh};
    const FieldValue c = coefficient_of(entry, vars).constant_term();
    const FieldValue alpha = eval_partial(entry, Assignment{{task.fresh, field.zero()}}).constant_term();
    if (field.is_zero(c)) {
      outcome.failure = "entry " + position_string(task.s, task.t) + ": coefficient of " + task.fresh.to_string() +
                        " vanished";
      return outcome;
    }
    const FieldValue v = (target.at(task.s, task.t) - alpha) / c;
    solved.emplace(task.fresh, v);
    values.emplace(task.fresh, v);

    PartialAssignment block;
    for (const auto& [j, k] : block_positions(task.s, task.t, r)) {
      for (std::uint32_t i = 1; i <= m; ++i) {
        const VarKey key = VarKey::entry(j, k, i);
        block.bind(key, values.at(key));
      }
    }
    accumulated.merge(block);
    ++outcome.merged;
  }

  std::vector<FieldMatrix> mats;
  for (std::uint32_t i = 1; i <= m; ++i) {
    FieldMatrix u(field, n);
    for (std::uint32_t j = 1; j <= n; ++j) {
      u.at(j, j) = diag[j - 1][i - 1];
      for (std::uint32_t k = j + 1; k <= n; ++k) u.at(j, k) = values.at(VarKey::entry(j, k, i));
    }
    mats.push_back(std::move(u));
  }
  outcome.matrices = std::move(mats);
  return outcome;
}

void check_target(const NcPolynomial& p, std::size_t n, const FieldMatrix& target) {
  if (n == 0) raise(ErrorKind::invalid_argument, "n must be >= 1");
  if (target.size() != n) raise(ErrorKind::size_mismatch, "target size differs from n");
  if (!(target.field() == p.field())) raise(ErrorKind::field_mismatch, "target field differs from the polynomial's");
}

std::size_t resolve_order(const NcPolynomial& p, std::size_t n, const SolveOptions& options) {
  if (options.known_order) return *options.known_order;
  const OrderReport report = order(p, std::max<std::size_t>(p.degree() + 1, n));
  // an identity of every T_k with k <= n behaves as order >= n here
  return report.order ? *report.order : n;
}

WitnessResult finish(const NcPolynomial& p, std::size_t r, std::vector<FieldMatrix> mats, const FieldMatrix& target,
                     const SolveOptions& options, WitnessDiagnostics diagnostics) {
  WitnessResult result;
  result.order = r;
  result.verification = verify(p, mats, target, r == 0 ? std::nullopt : std::optional<std::size_t>(r),
                               options.tolerance);
  if (!result.verification.passed) {
    raise(ErrorKind::internal_inconsistency, "constructed witness fails verification (max residual " +
                                                 std::to_string(result.verification.max_residual) + ")");
  }
  result.status = p.field().is_exact() ? WitnessStatus::exact : WitnessStatus::approximate;
  result.product = result.verification.product;
  result.matrices = std::move(mats);
  result.target = target;
  result.diagnostics = std::move(diagnostics);
  return result;
}

std::vector<FieldMatrix> zero_tuple(const Field& field, std::size_t n, std::size_t m) {
  return std::vector<FieldMatrix>(m, FieldMatrix(field, n));
}

}  // namespace

WitnessResult solve_target(const NcPolynomial& p, std::size_t n, const FieldMatrix& target,
                           const SolveOptions& options) {
  check_target(p, n, target);
  const std::size_t r = resolve_order(p, n, options);
  if (r == 0) raise(ErrorKind::order_mismatch, "ord(p) = 0; use the diagonal solver");
  const Field field = sampling_field(p.field(), options);
  if (r >= n) {
    if (!target.is_zero()) raise(ErrorKind::band_violation, "p is an identity of T_n; only the zero target is reachable");
    WitnessDiagnostics diag;
    diag.mode = "zero";
    return finish(p, r, zero_tuple(p.field(), n, p.arity()), target, options, std::move(diag));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = j; k < j + r && k <= n; ++k) {
      if (!p.field().is_zero(target.at(j, k))) {
        raise(ErrorKind::band_violation, "target entry " + position_string(j, k) + " must vanish for ord(p) = " +
                                             std::to_string(r));
      }
    }
  }

  CoefficientTable table(p, options.monomial_budget);
  const std::vector<SlotTuple> leads = leading_tuples(table, r);
  Rng rng(options.seed);
  std::string last_failure;
  const std::size_t attempts = std::max<std::size_t>(options.retries, 1);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    const SlotTuple& tuple = leads[(attempt / 2) % leads.size()];
    const auto diagonals =
        find_diagonals(table.coefficient(tuple), r + 1, p.arity(), n, field, rng, options.sample_budget);
    const SweepPlan plan = build_sweep_plan(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(n), tuple);
    std::vector<SweepTask> tasks;
    for (const auto& e : plan.entries) tasks.push_back({e.s, e.t, e.fresh});
    SweepOutcome outcome = run_sweep(p, field, n, r, diagonals, tasks, target, rng, options);
    if (!outcome.matrices) {
      last_failure = outcome.failure;
      continue;
    }
    WitnessDiagnostics diag;
    diag.mode = "sweep";
    diag.retries = attempt;
    diag.leading_tuple = tuple;
    diag.diagonals = diagonals;
    diag.assignments_merged = outcome.merged;
    return finish(p, r, std::move(*outcome.matrices), target, options, std::move(diag));
  }
  raise(ErrorKind::degenerate_coefficient,
        "sweep failed after " + std::to_string(attempts) + " attempts; last: " + last_failure);
}

namespace {

// A tuple in K^m with p(tuple) = value, solving for one coordinate.
std::optional<std::vector<FieldValue>> solve_scalar(const NcPolynomial& p, const Field& field,
                                                    const FieldValue& value, Rng& rng, std::size_t tries) {
  const std::size_t m = p.arity();
  const std::size_t start = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    const std::size_t i = (start + attempt) % m;
    std::vector<FieldValue> point = sample_vector(field, m, rng);
    std::vector<FieldValue> h(p.degree() + 1, field.zero());
    for (const auto& [w, c] : p.terms()) {
      std::size_t e = 0;
      FieldValue term = c;
      for (auto letter : w) {
        if (letter == i + 1) {
          ++e;
        } else {
          term *= point[letter - 1];
        }
      }
      h[e] += term;
    }
    while (h.size() > 1 && field.is_zero(h.back())) h.pop_back();
    if (h.size() < 2) continue;
    std::vector<FieldValue> roots;
    try {
      roots = univariate_roots(field, h, value);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::non_convergence) throw;
      continue;
    }
    if (roots.empty()) continue;
    point[i] = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
    return point;
  }
  return std::nullopt;
}

}  // namespace

WitnessResult solve_diagonal_r0(const NcPolynomial& p, std::size_t n, const FieldMatrix& target,
                                const SolveOptions& options) {
  check_target(p, n, target);
  const std::size_t r = resolve_order(p, n, options);
  if (r != 0) raise(ErrorKind::order_mismatch, "diagonal solver needs ord(p) = 0");
  const Field field = sampling_field(p.field(), options);
  const std::size_t m = p.arity();
  CoefficientTable table(p, options.monomial_budget);
  const auto& level1 = table.level(1);

  Rng rng(options.seed);
  std::string last_failure;
  const std::size_t attempts = std::max<std::size_t>(options.retries, 1);
  const std::size_t scalar_tries = std::max<std::size_t>(8 * m, 16);
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::vector<FieldValue>> diag;
    for (std::size_t j = 1; j <= n; ++j) {
      auto point = solve_scalar(p, field, target.at(j, j), rng, scalar_tries);
      if (!point) {
        raise(ErrorKind::no_root_in_field,
              "p(a) = " + target.at(j, j).to_string() + " has no solution found in " + field.name());
      }
      diag.push_back(std::move(*point));
    }
    std::vector<SweepTask> tasks;
    bool degenerate = false;
    for (std::uint32_t span = 1; span < n && !degenerate; ++span) {
      for (std::uint32_t s = 1; s + span <= n; ++s) {
        const std::uint32_t t = s + span;
        std::optional<std::uint32_t> slot;
        for (const auto& [tuple, coeff] : level1) {
          const FieldValue v = eval_with(coeff, [&](const VarKey& key) -> const FieldValue* {
            if (key.kind != VarKey::Kind::diag || key.a > 2 || key.b > m) return nullptr;
            return &diag[(key.a == 1 ? s : t) - 1][key.b - 1];
          });
          if (!field.is_zero(v)) {
            slot = tuple[0];
            break;
          }
        }
        if (!slot) {
          degenerate = true;
          last_failure = "entry " + position_string(s, t) + ": every linear coefficient vanishes";
          break;
        }
        tasks.push_back({s, t, VarKey::entry(s, t, *slot)});
      }
    }
    if (degenerate) continue;
    SweepOutcome outcome = run_sweep(p, field, n, 0, diag, tasks, target, rng, options);
    if (!outcome.matrices) {
      last_failure = outcome.failure;
      continue;
    }
    WitnessDiagnostics info;
    info.mode = "diagonal";
    info.retries = attempt;
    info.diagonals = diag;
    info.assignments_merged = outcome.merged;
    return finish(p, 0, std::move(*outcome.matrices), target, options, std::move(info));
  }
  raise(ErrorKind::degenerate_coefficient,
        "diagonal solve failed after " + std::to_string(attempts) + " attempts; last: " + last_failure);
}

WitnessResult solve(const NcPolynomial& p, std::size_t n, const FieldMatrix& target, const SolveOptions& options) {
  check_target(p, n, target);
  SolveOptions resolved = options;
  resolved.known_order = resolve_order(p, n, options);
  return *resolved.known_order == 0 ? solve_diagonal_r0(p, n, target, resolved) : solve_target(p, n, target, resolved);
}

WitnessResult hit_open_set(const NcPolynomial& p, std::size_t n, const CPolynomial& f, const SolveOptions& options) {
  if (n == 0) raise(ErrorKind::invalid_argument, "n must be >= 1");
  if (f.is_zero()) raise(ErrorKind::precondition, "the open set of the zero polynomial is empty");
  if (!(f.field() == p.field())) raise(ErrorKind::field_mismatch, "f and p live over different fields");
  const std::size_t r = resolve_order(p, n, options);
  if (r == 0 || r >= n) raise(ErrorKind::precondition, "open-set hitting needs 1 <= ord(p) <= n - 1");
  for (const auto& key : f.variables()) {
    if (key.kind != VarKey::Kind::out || key.b > n || key.b - key.a < r) {
      raise(ErrorKind::band_violation, "f may only use y[s,t] with t <= n and t - s >= " + std::to_string(r) +
                                           "; found " + key.to_string());
    }
  }
  const Field field = sampling_field(p.field(), options);
  Rng rng(options.seed ^ 0x68697421ULL);
  SolveOptions inner = options;
  inner.known_order = r;

  auto open_value = [&](const FieldMatrix& product) {
    return eval_with(f, [&](const VarKey& key) -> const FieldValue* { return &product.at(key.a, key.b); });
  };

  std::vector<std::string> notes;
  try {
    const Assignment point = simultaneous_nonvanishing({f}, field, rng, options.sample_budget);
    FieldMatrix target(p.field(), n);
    for (std::uint32_t s = 1; s <= n; ++s) {
      for (std::uint32_t t = s + static_cast<std::uint32_t>(r); t <= n; ++t) {
        auto it = point.find(VarKey::out(s, t));
        target.at(s, t) = it != point.end() ? it->second : sample(field, rng);
      }
    }
    WitnessResult result = solve_target(p, n, target, inner);
    result.verification = verify_open_set(p, result.matrices, f, options.tolerance);
    if (result.verification.passed) {
      result.open_set = f;
      return result;
    }
    notes.push_back("sweep witness landed on f = 0");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::degenerate_coefficient && e.kind() != ErrorKind::budget_exhausted) throw;
    notes.push_back(std::string("sweep failed: ") + e.what());
  }

  for (std::size_t draw = 0; draw < options.sample_budget; ++draw) {
    std::vector<FieldMatrix> mats;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      FieldMatrix u(p.field(), n);
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = j; k <= n; ++k) u.at(j, k) = sample(field, rng);
      }
      mats.push_back(std::move(u));
    }
    const FieldMatrix product = evaluate<FieldValue>(p, mats, options.monomial_budget);
    if (!nonzero(p.field(), open_value(product), options.tolerance)) continue;
    WitnessResult result;
    result.status = p.field().is_exact() ? WitnessStatus::exact : WitnessStatus::approximate;
    result.order = r;
    result.verification = verify_open_set(p, mats, f, options.tolerance);
    result.product = result.verification.product;
    result.matrices = std::move(mats);
    result.open_set = f;
    result.diagnostics.mode = "random_fallback";
    result.diagnostics.retries = draw;
    result.diagnostics.notes = std::move(notes);
    return result;
  }
  raise(ErrorKind::budget_exhausted, "no tuple with f(p(u)) != 0 within " + std::to_string(options.sample_budget) +
                                         " draws");
}

namespace {

struct Evaluations {
  FieldMatrix product;
  bool agree = false;
  double structured_residual = 0.0;
};

Evaluations evaluate_both(const NcPolynomial& p, const std::vector<FieldMatrix>& matrices, double tolerance) {
  detail::check_tuple<FieldValue>(matrices, p.arity());
  for (const auto& u : matrices) {
    if (!(u.field() == p.field())) raise(ErrorKind::field_mismatch, "matrix field differs from the polynomial's");
  }
  Evaluations out;
  out.product = evaluate<FieldValue>(p, matrices);
  const FieldMatrix structured = evaluate_structured(p, matrices);
  out.structured_residual = max_deviation(out.product, structured);
  if (p.field().is_exact()) {
    out.agree = out.product == structured;
  } else {
    double scale = 1.0;
    for (std::size_t j = 1; j <= out.product.size(); ++j) {
      for (std::size_t k = j; k <= out.product.size(); ++k) {
        scale = std::max(scale, std::abs(out.product.at(j, k).complex()));
      }
    }
    out.agree = out.structured_residual <= tolerance * scale;
  }
  return out;
}

}  // namespace

VerifyReport verify(const NcPolynomial& p, const std::vector<FieldMatrix>& matrices, const FieldMatrix& target,
                    std::optional<std::size_t> r, double tolerance) {
  Evaluations ev = evaluate_both(p, matrices, tolerance);
  if (target.size() != ev.product.size()) raise(ErrorKind::size_mismatch, "target size differs from the matrices");
  VerifyReport report;
  report.evaluators_agree = ev.agree;
  report.structured_residual = ev.structured_residual;
  report.max_residual = max_deviation(ev.product, target);
  const std::size_t n = target.size();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = j; k <= n; ++k) {
      const FieldValue d = ev.product.at(j, k) - target.at(j, k);
      if (nonzero(p.field(), d, tolerance)) ++report.mismatches;
    }
  }
  report.exact = p.field().is_exact() && report.mismatches == 0;
  report.band_ok = true;
  if (r && *r >= 1) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = j; k < j + *r && k <= n; ++k) {
        if (nonzero(p.field(), ev.product.at(j, k), tolerance)) report.band_ok = false;
      }
    }
  }
  report.passed = report.evaluators_agree && report.mismatches == 0 && report.band_ok;
  report.product = std::move(ev.product);
  return report;
}

VerifyReport verify_open_set(const NcPolynomial& p, const std::vector<FieldMatrix>& matrices, const CPolynomial& f,
                             double tolerance) {
  Evaluations ev = evaluate_both(p, matrices, tolerance);
  VerifyReport report;
  report.evaluators_agree = ev.agree;
  report.structured_residual = ev.structured_residual;
  report.band_ok = true;
  const FieldValue value = eval_with(f, [&](const VarKey& key) -> const FieldValue* {
    if (key.kind != VarKey::Kind::out || key.b > ev.product.size()) return nullptr;
    return &ev.product.at(key.a, key.b);
  });
  report.open_set_value = value;
  report.exact = p.field().is_exact();
  report.passed = report.evaluators_agree && nonzero(p.field(), value, tolerance);
  report.product = std::move(ev.product);
  return report;
}

}  // namespace utri

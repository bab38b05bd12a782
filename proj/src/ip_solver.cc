#include "hopdom/ip_solver.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

#include "hopdom/error.h"

namespace hopdom {

SolverConfig SolverConfig::FromEnvironment() {
  SolverConfig cfg;
  if (const char* env = std::getenv("HOPDOM_NODE_LIMIT")) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) cfg.node_limit = value;
  }
  return cfg;
}

namespace {

constexpr int kFree = -1;
constexpr int64_t kNoIncumbent = std::numeric_limits<int64_t>::max();

struct ColumnEntry {
  int row;
  int coeff;
};

class BranchAndBound {
 public:
  BranchAndBound(const IpInstance& inst, const SolverConfig& cfg)
      : inst_(inst),
        cfg_(cfg),
        columns_(inst.var_count),
        value_(inst.var_count, kFree),
        fixed_(inst.rows.size(), 0),
        pos_free_(inst.rows.size(), 0),
        neg_free_(inst.rows.size(), 0) {
    for (int r = 0; r < static_cast<int>(inst.rows.size()); ++r) {
      for (const Term& t : inst.rows[r].terms) {
        columns_[t.var].push_back({r, t.coeff});
        (t.coeff > 0 ? pos_free_[r] : neg_free_[r]) += t.coeff;
      }
    }
  }

  void SetIncumbent(std::vector<int> assignment, int64_t cost) {
    best_ = std::move(assignment);
    best_cost_ = cost;
  }

  void Run() {
    bool alive = true;
    for (int r = 0; r < static_cast<int>(inst_.rows.size()); ++r) {
      alive &= RowAlive(r);
    }
    if (alive) Search();
  }

  int64_t nodes() const { return nodes_; }
  int64_t best_cost() const { return best_cost_; }
  const std::vector<int>& best() const { return best_; }

 private:
  // Can the row still be satisfied by some completion of the free vars?
  bool RowAlive(int r) const {
    const Row& row = inst_.rows[r];
    return row.sense == Sense::kGe ? fixed_[r] + pos_free_[r] >= row.rhs
                                   : fixed_[r] + neg_free_[r] <= row.rhs;
  }

  // Residual of a GE row if every free variable stays at zero.
  int64_t Need(int r) const {
    const Row& row = inst_.rows[r];
    return row.sense == Sense::kGe ? row.rhs - fixed_[r] : 0;
  }

  bool Assign(int var, int v) {
    value_[var] = v;
    cost_ += v * inst_.objective[var];
    bool alive = true;
    for (const ColumnEntry& e : columns_[var]) {
      (e.coeff > 0 ? pos_free_[e.row] : neg_free_[e.row]) -= e.coeff;
      fixed_[e.row] += int64_t{e.coeff} * v;
      alive &= RowAlive(e.row);
    }
    return alive;
  }

  void Unassign(int var) {
    const int v = value_[var];
    for (const ColumnEntry& e : columns_[var]) {
      (e.coeff > 0 ? pos_free_[e.row] : neg_free_[e.row]) += e.coeff;
      fixed_[e.row] -= int64_t{e.coeff} * v;
    }
    cost_ -= v * inst_.objective[var];
    value_[var] = kFree;
  }

  // Fewest raised variables (times their cheapest cost) that could close
  // the total GE residual, taking the largest column contributions first.
  // Returns nullopt when even all free variables cannot close it.
  std::optional<int64_t> CompletionBound(std::vector<int64_t>& contrib) const {
    int64_t total_need = 0;
    for (int r = 0; r < static_cast<int>(inst_.rows.size()); ++r) {
      total_need += std::max<int64_t>(Need(r), 0);
    }
    if (total_need == 0) return 0;
    contrib.clear();
    int64_t cheapest = std::numeric_limits<int64_t>::max();
    for (int j = 0; j < inst_.var_count; ++j) {
      if (value_[j] != kFree) continue;
      int64_t c = 0;
      for (const ColumnEntry& e : columns_[j]) {
        const int64_t need = Need(e.row);
        if (e.coeff > 0 && need > 0) c += std::min<int64_t>(e.coeff, need);
      }
      if (c > 0) {
        contrib.push_back(c);
        cheapest = std::min<int64_t>(cheapest, inst_.objective[j]);
      }
    }
    std::sort(contrib.begin(), contrib.end(), std::greater<>());
    int64_t covered = 0, k = 0;
    for (int64_t c : contrib) {
      if (covered >= total_need) break;
      covered += c;
      ++k;
    }
    if (covered < total_need) return std::nullopt;
    return k * cheapest;
  }

  int PickCoverVariable() const {
    int best_var = -1, best_count = 0;
    for (int j = 0; j < inst_.var_count; ++j) {
      if (value_[j] != kFree) continue;
      int count = 0;
      for (const ColumnEntry& e : columns_[j]) {
        if (e.coeff > 0 && Need(e.row) > 0) ++count;
      }
      if (count == 0) continue;
      if (cfg_.branching == BranchingRule::kLowestIndex) return j;
      if (count > best_count) {
        best_var = j;
        best_count = count;
      }
    }
    return best_var;
  }

  // All GE rows hold at the zero completion; find an LE row that does not,
  // and the free variable with the most negative coefficient in it.
  // Returns -2 when the zero completion is feasible.
  int PickRepairVariable() const {
    for (int r = 0; r < static_cast<int>(inst_.rows.size()); ++r) {
      const Row& row = inst_.rows[r];
      if (row.sense != Sense::kLe || fixed_[r] <= row.rhs) continue;
      int pick = -1, most_negative = 0;
      for (const Term& t : row.terms) {
        if (value_[t.var] == kFree && t.coeff < most_negative) {
          pick = t.var;
          most_negative = t.coeff;
        }
      }
      return pick;  // -1 cannot happen while the row is alive
    }
    return -2;
  }

  void Search() {
    if (++nodes_ > cfg_.node_limit) {
      throw Error(ErrorCode::kNodeLimitExceeded,
                  "branch and bound exceeded " +
                      std::to_string(cfg_.node_limit) + " nodes");
    }
    const std::optional<int64_t> bound = CompletionBound(scratch_);
    if (!bound || cost_ + *bound >= best_cost_) return;

    int var = PickCoverVariable();
    if (var < 0) {
      var = PickRepairVariable();
      if (var == -2) {
        // zero completion is feasible and, with nonnegative costs, cheapest
        best_cost_ = cost_;
        best_.resize(inst_.var_count);
        for (int j = 0; j < inst_.var_count; ++j) {
          best_[j] = value_[j] == 1 ? 1 : 0;
        }
        return;
      }
      if (var < 0) return;
    }

    for (int v : {1, 0}) {
      if (Assign(var, v)) Search();
      Unassign(var);
    }
  }

  const IpInstance& inst_;
  const SolverConfig& cfg_;
  std::vector<std::vector<ColumnEntry>> columns_;
  std::vector<int> value_;
  std::vector<int64_t> fixed_;
  std::vector<int64_t> pos_free_;
  std::vector<int64_t> neg_free_;
  std::vector<int64_t> scratch_;
  int64_t cost_ = 0;
  int64_t nodes_ = 0;
  int64_t best_cost_ = kNoIncumbent;
  std::vector<int> best_;
};

int64_t CostOf(const IpInstance& inst, const std::vector<int>& x) {
  int64_t cost = 0;
  for (int j = 0; j < inst.var_count; ++j) cost += inst.objective[j] * x[j];
  return cost;
}

}  // namespace

std::optional<std::vector<int>> GreedyIncumbent(const IpInstance& inst) {
  const int n = inst.var_count;
  std::vector<int> x(n, 0);
  std::vector<int64_t> lhs(inst.rows.size(), 0);
  auto raise = [&](int var) {
    x[var] = 1;
    for (size_t r = 0; r < inst.rows.size(); ++r) {
      for (const Term& t : inst.rows[r].terms) {
        if (t.var == var) lhs[r] += t.coeff;
      }
    }
  };

  // Each pass raises one variable, so n passes are enough.
  for (int pass = 0; pass <= n; ++pass) {
    int best_var = -1;
    int64_t best_gain = 0;
    for (int j = 0; j < n; ++j) {
      if (x[j]) continue;
      int64_t gain = 0;
      for (size_t r = 0; r < inst.rows.size(); ++r) {
        const Row& row = inst.rows[r];
        const int64_t need = row.sense == Sense::kGe ? row.rhs - lhs[r] : 0;
        if (need <= 0) continue;
        for (const Term& t : row.terms) {
          if (t.var == j && t.coeff > 0) gain += std::min<int64_t>(t.coeff, need);
        }
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_var = j;
      }
    }
    if (best_var >= 0) {
      raise(best_var);
      continue;
    }
    // GE rows either hold or cannot be helped; repair one LE row.
    int repair = -1;
    bool le_violated = false;
    for (size_t r = 0; r < inst.rows.size() && !le_violated; ++r) {
      const Row& row = inst.rows[r];
      if (row.sense != Sense::kLe || lhs[r] <= row.rhs) continue;
      le_violated = true;
      int most_negative = 0;
      for (const Term& t : row.terms) {
        if (!x[t.var] && t.coeff < most_negative) {
          repair = t.var;
          most_negative = t.coeff;
        }
      }
    }
    if (repair < 0) break;
    raise(repair);
  }
  if (inst.Satisfies(x)) return x;
  std::vector<int> all_ones(n, 1);
  if (inst.Satisfies(all_ones)) return all_ones;
  return std::nullopt;
}

SolveResult Solve(const IpInstance& inst, const SolverConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (static_cast<int>(inst.objective.size()) != inst.var_count) {
    throw Error(ErrorCode::kDimensionMismatch, "objective length mismatch");
  }
  for (int c : inst.objective) {
    if (c < 0) throw Error(ErrorCode::kBadParams, "negative objective cost");
  }
  if (cfg.node_limit <= 0) {
    throw Error(ErrorCode::kBadParams, "node_limit must be positive");
  }

  BranchAndBound bnb(inst, cfg);
  if (cfg.greedy_incumbent && !inst.trivially_infeasible()) {
    if (auto x = GreedyIncumbent(inst)) {
      const int64_t cost = CostOf(inst, *x);
      bnb.SetIncumbent(std::move(*x), cost);
    }
  }
  bnb.Run();

  SolveResult result;
  result.nodes_explored = bnb.nodes();
  if (bnb.best_cost() != kNoIncumbent) {
    result.status = OptStatus::kOptimal;
    result.value = bnb.best_cost();
    result.assignment = bnb.best();
    for (int j = 0; j < inst.var_count; ++j) {
      if (result.assignment[j]) result.witness.push_back(j);
    }
    if (!inst.Satisfies(result.assignment) ||
        CostOf(inst, result.assignment) != result.value) {
      throw Error(ErrorCode::kInternal, "solver witness failed re-check");
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace hopdom

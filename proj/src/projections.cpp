#include "clash/projections.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "clash/errors.hpp"
#include "clash/rng.hpp"

namespace clash {

namespace {

constexpr int kMaxEnumerationDim = 24;

// Indices of x ordered by decreasing squared magnitude, lowest index first
// among equal magnitudes.
std::vector<int> magnitude_order(const Vector& x) {
  std::vector<int> order(static_cast<std::size_t>(x.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&x](int a, int b) {
    const double fa = std::abs(x[a]);
    const double fb = std::abs(x[b]);
    if (fa != fb) return fa > fb;
    return a < b;
  });
  return order;
}

// Canonical F evaluation for a bitmask support: ascending-index sequential sum.
double mask_variance_reduction(std::uint32_t mask, const Vector& x) {
  double sum = 0.0;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    sum += x[i] * x[i];
    mask &= mask - 1;
  }
  return sum;
}

// True when support `a` precedes support `b` lexicographically as sorted
// index lists, given both masks are distinct and of equal popcount.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  const std::uint32_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

SupportSet mask_to_support(std::uint32_t mask) {
  std::vector<int> idx;
  while (mask != 0) {
    idx.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return SupportSet(std::move(idx));
}

// Shared winner rule for the enumeration paths: maximize F, then cardinality,
// then take the lexicographically smallest support.
struct BestMask {
  bool valid = false;
  std::uint32_t mask = 0;
  double score = -std::numeric_limits<double>::infinity();
  int cardinality = -1;

  void offer(std::uint32_t candidate, double candidate_score) {
    const int card = std::popcount(candidate);
    if (!valid || candidate_score > score ||
        (candidate_score == score &&
         (card > cardinality ||
          (card == cardinality && mask_lex_less(candidate, mask))))) {
      valid = true;
      mask = candidate;
      score = candidate_score;
      cardinality = card;
    }
  }
};

// Minimum number of disjoint length-C runs covering the set bits of mask,
// or n + 1 when impossible. Mirrors SparsityModel::is_feasible.
int mask_min_run_cover(std::uint32_t mask, int n, int C) {
  const int kInfeasible = n + 1;
  int memo[kMaxEnumerationDim + 1];
  for (int i = n; i >= 0; --i) {
    const std::uint32_t rest = mask >> i << i;
    if (rest == 0) {
      memo[i] = 0;
      continue;
    }
    const int p = std::countr_zero(rest);
    int best = kInfeasible;
    const int lo = std::max(i, p - C + 1);
    const int hi = std::min(p, n - C);
    for (int start = lo; start <= hi; ++start) {
      const int tail = memo[std::min(start + C, n)];
      if (tail < kInfeasible) best = std::min(best, 1 + tail);
    }
    memo[i] = best;
  }
  return memo[0];
}

}  // namespace

double variance_reduction(const SupportSet& s, const DenseVector& x) {
  if (s.max_index() >= x.size()) {
    throw DimensionError("variance_reduction: support index " +
                         std::to_string(s.max_index()) +
                         " outside vector of length " + std::to_string(x.size()));
  }
  double sum = 0.0;
  for (int i : s) sum += x[i] * x[i];
  return sum;
}

SupportSet project_uniform(const DenseVector& x, int k) {
  if (k < 1 || k > x.size()) {
    throw InfeasibleError("project_uniform: k = " + std::to_string(k) +
                          " outside [1, " + std::to_string(x.size()) + "]");
  }
  const std::vector<int> order = magnitude_order(x.values());
  return SupportSet(
      std::vector<int>(order.begin(), order.begin() + k));
}

SupportSet project_matroid_greedy(const DenseVector& x, int k,
                                  const IndependenceOracle& oracle) {
  if (k < 1) throw InfeasibleError("project_matroid_greedy: k must be >= 1");
  if (!oracle(SupportSet{})) {
    throw Error("project_matroid_greedy: independence oracle rejects the empty set");
  }
  std::vector<int> chosen;
  for (int i : magnitude_order(x.values())) {
    if (static_cast<int>(chosen.size()) >= k) break;
    std::vector<int> candidate = chosen;
    candidate.push_back(i);
    if (oracle(SupportSet(std::move(candidate)))) chosen.push_back(i);
  }
  SupportSet result{std::vector<int>(chosen)};

  // Downward-closure spot check: random subsets of an independent set must
  // stay independent. Fixed seed keeps the check deterministic.
  Rng rng(0x5ca1ab1eULL);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> subset;
    for (int i : chosen) {
      if (rng.uniform01() < 0.5) subset.push_back(i);
    }
    if (!oracle(SupportSet(std::move(subset)))) {
      throw Error("project_matroid_greedy: oracle fails downward-closure spot "
                  "check (subset of an accepted set reported dependent)");
    }
  }
  return result;
}

SupportSet project_clustered(const DenseVector& x, int k, int block_len) {
  const int n = x.size();
  const int C = block_len;
  if (C < 1 || k < 1 || k % C != 0 || k > n) {
    throw InfeasibleError("project_clustered: cannot place " +
                          std::to_string(k / std::max(C, 1)) + " runs of length " +
                          std::to_string(C) + " in [0, " + std::to_string(n) + ")");
  }
  const int runs = k / C;

  // Window sums, each computed by direct ascending summation.
  std::vector<double> window(static_cast<std::size_t>(n - C + 1), 0.0);
  for (int i = 0; i + C <= n; ++i) {
    double sum = 0.0;
    for (int j = i; j < i + C; ++j) sum += x[j] * x[j];
    window[static_cast<std::size_t>(i)] = sum;
  }

  // dp[i][r]: best total over positions >= i with r runs still to place.
  // On ties, taking the run at the current position wins, which yields the
  // leftmost (lexicographically smallest) optimal placement.
  const double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dp(
      static_cast<std::size_t>(n + 1),
      std::vector<double>(static_cast<std::size_t>(runs + 1), kNegInf));
  std::vector<std::vector<bool>> take(
      static_cast<std::size_t>(n + 1),
      std::vector<bool>(static_cast<std::size_t>(runs + 1), false));
  for (int i = n; i >= 0; --i) {
    dp[static_cast<std::size_t>(i)][0] = 0.0;
    for (int r = 1; r <= runs; ++r) {
      double best = kNegInf;
      bool best_take = false;
      if (i + C <= n) {
        const double rest = dp[static_cast<std::size_t>(i + C)][static_cast<std::size_t>(r - 1)];
        if (rest != kNegInf) {
          best = window[static_cast<std::size_t>(i)] + rest;
          best_take = true;
        }
      }
      if (i + 1 <= n) {
        const double skip = dp[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(r)];
        if (skip != kNegInf && skip > best) {
          best = skip;
          best_take = false;
        }
      }
      dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = best;
      take[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = best_take;
    }
  }
  if (dp[0][static_cast<std::size_t>(runs)] == kNegInf) {
    throw InfeasibleError("project_clustered: run placement infeasible");
  }

  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  for (int i = 0, r = runs; r > 0;) {
    if (take[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]) {
      for (int j = i; j < i + C; ++j) chosen.push_back(j);
      i += C;
      --r;
    } else {
      ++i;
    }
  }
  return SupportSet(std::move(chosen));
}

IlpDescription build_ilp(const DenseVector& x, const SparsityModel& model) {
  model.validate_for_dimension(x.size());
  const int n = x.size();

  IlpDescription ilp;
  ilp.n = n;
  ilp.weights = Vector(n);
  for (int i = 0; i < n; ++i) ilp.weights[i] = -(x[i] * x[i]);

  switch (model.kind()) {
    case ModelKind::Uniform:
      ilp.constraints = {std::vector<int>(static_cast<std::size_t>(n), 1)};
      ilp.bounds = {model.k()};
      break;
    case ModelKind::PartitionBudget: {
      ilp.constraints.push_back(std::vector<int>(static_cast<std::size_t>(n), 1));
      ilp.bounds.push_back(model.k());
      for (std::size_t j = 0; j < model.blocks().size(); ++j) {
        std::vector<int> row(static_cast<std::size_t>(n), 0);
        for (int i : model.blocks()[j]) row[static_cast<std::size_t>(i)] = 1;
        ilp.constraints.push_back(std::move(row));
        ilp.bounds.push_back(model.budgets()[j]);
      }
      break;
    }
    case ModelKind::ExplicitIlp:
      ilp.constraints = model.ilp().constraints;
      ilp.bounds = model.ilp().bounds;
      break;
    case ModelKind::ClusteredChain:
      throw Error("build_ilp: clustered-chain run structure is not emitted as "
                  "linear constraints; use project_clustered");
  }
  ilp.validate();
  return ilp;
}

std::pair<SupportSet, double> solve_ilp_exhaustive(const IlpDescription& ilp) {
  ilp.validate();
  if (ilp.n > kMaxEnumerationDim) {
    throw DimensionError("solve_ilp_exhaustive: n = " + std::to_string(ilp.n) +
                         " exceeds the enumeration guard of " +
                         std::to_string(kMaxEnumerationDim));
  }
  if (ilp.weights.size() != ilp.n) {
    throw DimensionError("solve_ilp_exhaustive: weights not set");
  }
  const int n = ilp.n;
  const std::size_t rows = ilp.constraints.size();
  // Minimizing w^T z over feasible z; offer() maximizes, so scores are -w^T z.
  BestMask winner;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t r = 0; r < rows && ok; ++r) {
      long long lhs = 0;
      std::uint32_t bits = mask;
      while (bits != 0) {
        lhs += ilp.constraints[r][static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
      ok = lhs <= ilp.bounds[r];
    }
    if (!ok) continue;
    double objective = 0.0;
    std::uint32_t bits = mask;
    while (bits != 0) {
      objective += ilp.weights[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    winner.offer(mask, -objective);
  }
  if (!winner.valid) {
    throw InfeasibleError("solve_ilp_exhaustive: no feasible binary point");
  }
  return {mask_to_support(winner.mask), -winner.score};
}

SupportSet brute_force_project(const DenseVector& x, const SparsityModel& model) {
  const int n = x.size();
  if (n > kMaxEnumerationDim) {
    throw DimensionError("brute_force_project: n = " + std::to_string(n) +
                         " exceeds the enumeration guard of " +
                         std::to_string(kMaxEnumerationDim));
  }
  model.validate_for_dimension(n);
  const int k = model.k();

  // Per-kind feasibility on bitmasks.
  std::vector<std::uint32_t> block_masks;
  if (model.kind() == ModelKind::PartitionBudget) {
    for (const auto& block : model.blocks()) {
      std::uint32_t m = 0;
      for (int i : block) m |= (1u << i);
      block_masks.push_back(m);
    }
  }
  const auto feasible = [&](std::uint32_t mask) {
    if (std::popcount(mask) > k) return false;
    switch (model.kind()) {
      case ModelKind::Uniform:
        return true;
      case ModelKind::PartitionBudget:
        for (std::size_t j = 0; j < block_masks.size(); ++j) {
          if (std::popcount(mask & block_masks[j]) > model.budgets()[j]) {
            return false;
          }
        }
        return true;
      case ModelKind::ClusteredChain:
        return mask_min_run_cover(mask, n, model.block_len()) <=
               k / model.block_len();
      case ModelKind::ExplicitIlp: {
        for (std::size_t r = 0; r < model.ilp().constraints.size(); ++r) {
          long long lhs = 0;
          std::uint32_t bits = mask;
          while (bits != 0) {
            lhs += model.ilp().constraints[r][static_cast<std::size_t>(
                std::countr_zero(bits))];
            bits &= bits - 1;
          }
          if (lhs > model.ilp().bounds[r]) return false;
        }
        return true;
      }
    }
    return false;
  };

  BestMask best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!feasible(mask)) continue;
    best.offer(mask, mask_variance_reduction(mask, x.values()));
  }
  return mask_to_support(best.mask);
}

Projection project(const DenseVector& x, const SparsityModel& model) {
  model.validate_for_dimension(x.size());
  SupportSet support;
  switch (model.kind()) {
    case ModelKind::Uniform:
      support = project_uniform(x, model.k());
      break;
    case ModelKind::PartitionBudget: {
      // Truncated partition matroid: greedy is exact.
      std::vector<int> block_of(static_cast<std::size_t>(x.size()), -1);
      for (std::size_t j = 0; j < model.blocks().size(); ++j) {
        for (int i : model.blocks()[j]) {
          block_of[static_cast<std::size_t>(i)] = static_cast<int>(j);
        }
      }
      const auto oracle = [&](const SupportSet& s) {
        if (s.size() > model.k()) return false;
        std::vector<int> used(model.blocks().size(), 0);
        for (int i : s) {
          const int j = block_of[static_cast<std::size_t>(i)];
          if (++used[static_cast<std::size_t>(j)] > model.budgets()[static_cast<std::size_t>(j)]) {
            return false;
          }
        }
        return true;
      };
      support = project_matroid_greedy(x, model.k(), oracle);
      break;
    }
    case ModelKind::ClusteredChain:
      support = project_clustered(x, model.k(), model.block_len());
      break;
    case ModelKind::ExplicitIlp:
      support = solve_ilp_exhaustive(build_ilp(x, model)).first;
      break;
  }
  return Projection{x.masked(support), std::move(support)};
}

}  // namespace clash

#include "clash/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clash/errors.hpp"

namespace clash {

void IlpDescription::validate() const {
  if (n <= 0) throw InfeasibleError("ilp: n must be positive");
  if (weights.size() != 0 && weights.size() != n) {
    throw InfeasibleError("ilp: weights length " +
                          std::to_string(weights.size()) + " != n = " +
                          std::to_string(n));
  }
  if (constraints.empty() || constraints.size() != bounds.size()) {
    throw InfeasibleError("ilp: need as many bounds as constraint rows");
  }
  for (const auto& row : constraints) {
    if (static_cast<int>(row.size()) != n) {
      throw InfeasibleError("ilp: constraint row length != n");
    }
  }
  for (int a : constraints.front()) {
    if (a != 1) throw InfeasibleError("ilp: first constraint row must be all ones");
  }
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Uniform: return "uniform";
    case ModelKind::PartitionBudget: return "partition";
    case ModelKind::ClusteredChain: return "clustered";
    case ModelKind::ExplicitIlp: return "ilp";
  }
  return "?";
}

SparsityModel SparsityModel::uniform(int k) {
  if (k < 1) throw InfeasibleError("uniform model: k must be >= 1");
  SparsityModel m;
  m.kind_ = ModelKind::Uniform;
  m.k_ = k;
  return m;
}

SparsityModel SparsityModel::partition_budget(
    std::vector<std::vector<int>> blocks, std::vector<int> budgets, int k) {
  if (k < 1) throw InfeasibleError("partition model: k must be >= 1");
  if (blocks.empty() || blocks.size() != budgets.size()) {
    throw InfeasibleError("partition model: need one budget per block");
  }
  for (int b : budgets) {
    if (b < 0) throw InfeasibleError("partition model: budgets must be >= 0");
  }
  SparsityModel m;
  m.kind_ = ModelKind::PartitionBudget;
  m.k_ = k;
  m.blocks_ = std::move(blocks);
  m.budgets_ = std::move(budgets);
  for (auto& block : m.blocks_) std::sort(block.begin(), block.end());
  return m;
}

SparsityModel SparsityModel::clustered_chain(int k, int block_len) {
  if (k < 1) throw InfeasibleError("clustered model: k must be >= 1");
  if (block_len < 1) throw InfeasibleError("clustered model: C must be >= 1");
  if (k % block_len != 0) {
    throw InfeasibleError("clustered model: C = " + std::to_string(block_len) +
                          " does not divide k = " + std::to_string(k));
  }
  SparsityModel m;
  m.kind_ = ModelKind::ClusteredChain;
  m.k_ = k;
  m.block_len_ = block_len;
  return m;
}

SparsityModel SparsityModel::explicit_ilp(IlpDescription ilp) {
  ilp.validate();
  SparsityModel m;
  m.kind_ = ModelKind::ExplicitIlp;
  m.k_ = ilp.bounds.front();
  m.ilp_ = std::move(ilp);
  if (m.k_ < 1) throw InfeasibleError("ilp model: cardinality bound must be >= 1");
  return m;
}

void SparsityModel::validate_for_dimension(int n) const {
  if (n < 1) throw InfeasibleError("model: dimension must be positive");
  switch (kind_) {
    case ModelKind::Uniform:
      if (k_ > n) {
        throw InfeasibleError("uniform model: k = " + std::to_string(k_) +
                              " > n = " + std::to_string(n));
      }
      return;
    case ModelKind::PartitionBudget: {
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      for (const auto& block : blocks_) {
        for (int i : block) {
          if (i < 0 || i >= n) {
            throw InfeasibleError("partition model: block index " +
                                  std::to_string(i) + " outside [0, " +
                                  std::to_string(n) + ")");
          }
          ++seen[static_cast<std::size_t>(i)];
        }
      }
      for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)] != 1) {
          throw InfeasibleError("partition model: blocks must cover index " +
                                std::to_string(i) + " exactly once");
        }
      }
      return;
    }
    case ModelKind::ClusteredChain:
      if (k_ > n) {
        throw InfeasibleError("clustered model: " + std::to_string(k_ / block_len_) +
                              " disjoint runs of length " +
                              std::to_string(block_len_) + " do not fit in n = " +
                              std::to_string(n));
      }
      return;
    case ModelKind::ExplicitIlp:
      ilp_.validate();
      if (ilp_.n != n) {
        throw InfeasibleError("ilp model: built for n = " +
                              std::to_string(ilp_.n) + ", applied to n = " +
                              std::to_string(n));
      }
      return;
  }
}

namespace {

// Minimum number of disjoint length-C runs inside [0, n) covering all points
// of s; returns n + 1 when no disjoint cover exists.
int min_disjoint_run_cover(const std::vector<int>& points, int n, int C) {
  const int kInfeasible = n + 1;
  std::vector<int> memo(static_cast<std::size_t>(n) + 1, -1);
  // Iterative evaluation from the right; memo[i] = cover count for points >= i.
  for (int i = n; i >= 0; --i) {
    auto it = std::lower_bound(points.begin(), points.end(), i);
    if (it == points.end()) {
      memo[static_cast<std::size_t>(i)] = 0;
      continue;
    }
    const int p = *it;
    int best = kInfeasible;
    const int lo = std::max(i, p - C + 1);
    const int hi = std::min(p, n - C);
    for (int start = lo; start <= hi; ++start) {
      const int rest = memo[static_cast<std::size_t>(std::min(start + C, n))];
      if (rest < kInfeasible) best = std::min(best, 1 + rest);
    }
    memo[static_cast<std::size_t>(i)] = best;
  }
  return memo[0];
}

}  // namespace

bool SparsityModel::is_feasible(const SupportSet& s, int n) const {
  if (s.max_index() >= n) return false;
  if (s.size() > k_) return false;
  switch (kind_) {
    case ModelKind::Uniform:
      return true;
    case ModelKind::PartitionBudget: {
      for (std::size_t j = 0; j < blocks_.size(); ++j) {
        int used = 0;
        for (int i : blocks_[j]) {
          if (s.contains(i)) ++used;
        }
        if (used > budgets_[j]) return false;
      }
      return true;
    }
    case ModelKind::ClusteredChain:
      return min_disjoint_run_cover(s.indices(), n, block_len_) <=
             k_ / block_len_;
    case ModelKind::ExplicitIlp: {
      for (std::size_t r = 0; r < ilp_.constraints.size(); ++r) {
        long long lhs = 0;
        for (int i : s) lhs += ilp_.constraints[r][static_cast<std::size_t>(i)];
        if (lhs > ilp_.bounds[r]) return false;
      }
      return true;
    }
  }
  return false;
}

std::string SparsityModel::describe() const {
  std::ostringstream out;
  out << model_kind_name(kind_) << "(k=" << k_;
  if (kind_ == ModelKind::ClusteredChain) out << ", C=" << block_len_;
  if (kind_ == ModelKind::PartitionBudget) out << ", blocks=" << blocks_.size();
  if (kind_ == ModelKind::ExplicitIlp) out << ", rows=" << ilp_.constraints.size();
  out << ")";
  return out.str();
}

}  // namespace clash

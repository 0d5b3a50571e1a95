#pragma once

#include <string>
#include <vector>

#include "clash/types.hpp"

namespace clash {

/// Binary program min w^T z subject to A z <= b, z in {0,1}^n, where A and b
/// are integral, the first row of A is all ones, and bounds[0] caps the
/// support cardinality.
struct IlpDescription {
  int n = 0;
  Vector weights;                               // length n
  std::vector<std::vector<int>> constraints;    // rows of A, each length n
  std::vector<int> bounds;                      // b, one entry per row

  /// Checks integrality-by-construction invariants: the all-ones first row
  /// and matching row shapes. Throws InfeasibleError on violation.
  void validate() const;
};

enum class ModelKind { Uniform, PartitionBudget, ClusteredChain, ExplicitIlp };

std::string model_kind_name(ModelKind kind);

/// A combinatorial sparsity model: a downward-closed family of supports of
/// cardinality at most k. Four concrete families are supported:
///   Uniform          all supports with |S| <= k
///   PartitionBudget  per-block budgets over a partition of [0, n), |S| <= k
///   ClusteredChain   unions of k/C disjoint runs of C consecutive indices
///   ExplicitIlp      supports of binary points of an integral system Az <= b
class SparsityModel {
 public:
  static SparsityModel uniform(int k);
  static SparsityModel partition_budget(std::vector<std::vector<int>> blocks,
                                        std::vector<int> budgets, int k);
  static SparsityModel clustered_chain(int k, int block_len);
  static SparsityModel explicit_ilp(IlpDescription ilp);

  ModelKind kind() const { return kind_; }
  int k() const { return k_; }
  int block_len() const { return block_len_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& budgets() const { return budgets_; }
  const IlpDescription& ilp() const { return ilp_; }

  /// Throws InfeasibleError unless the model makes sense on vectors of
  /// length n (blocks partition [0, n), C | k, k/C disjoint runs fit, ...).
  void validate_for_dimension(int n) const;

  /// Membership test S in C_k, honoring downward compatibility. Assumes the
  /// model has been validated for dimension n.
  bool is_feasible(const SupportSet& s, int n) const;

  std::string describe() const;

 private:
  ModelKind kind_ = ModelKind::Uniform;
  int k_ = 0;
  int block_len_ = 0;                       // ClusteredChain only
  std::vector<std::vector<int>> blocks_;    // PartitionBudget only
  std::vector<int> budgets_;                // PartitionBudget only
  IlpDescription ilp_;                      // ExplicitIlp only
};

}  // namespace clash

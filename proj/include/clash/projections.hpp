#pragma once

#include <functional>
#include <utility>

#include "clash/model.hpp"
#include "clash/types.hpp"

namespace clash {

/// F(S; x) = sum_{i in S} x_i^2, the modular variance-reduction set function.
/// Equals ||x||^2 - ||(x)_S - x||^2; maximizing it over a model gives the
/// Euclidean projection support.
double variance_reduction(const SupportSet& s, const DenseVector& x);

struct Projection {
  DenseVector vector;  // (x)_S, the hard-thresholded input
  SupportSet support;  // the selected S
};

/// Exact Euclidean projection of x onto the model. Dispatches to the sort,
/// greedy, dynamic-programming, or enumeration routine matching the model
/// kind. Ties always resolve toward the lexicographically smallest support.
Projection project(const DenseVector& x, const SparsityModel& model);

/// Support of the k largest entries by magnitude; ties go to the lowest index.
SupportSet project_uniform(const DenseVector& x, int k);

/// Answers whether a candidate support is independent.
using IndependenceOracle = std::function<bool(const SupportSet&)>;

/// Greedy basis algorithm: scans indices in decreasing x_i^2 order (lowest
/// index first among ties) and keeps an index when the augmented set stays
/// independent and has at most k members. Exact for matroid models. The
/// oracle must accept the empty set and be downward-closed; the latter is
/// spot-checked on random subsets of the result.
SupportSet project_matroid_greedy(const DenseVector& x, int k,
                                  const IndependenceOracle& oracle);

/// Selects exactly k/C disjoint runs of C consecutive indices maximizing the
/// total variance reduction, by dynamic programming over (position, runs
/// used). Ties resolve toward the leftmost placement.
SupportSet project_clustered(const DenseVector& x, int k, int block_len);

/// Encodes the projection of x onto the model as a binary program with
/// weights w_i = -x_i^2 and the cardinality row first. ClusteredChain run
/// structure is not emitted as linear constraints and is rejected.
IlpDescription build_ilp(const DenseVector& x, const SparsityModel& model);

/// Exhaustive binary-program optimum: (support, objective). Guarded to
/// ilp.n <= 24.
std::pair<SupportSet, double> solve_ilp_exhaustive(const IlpDescription& ilp);

/// Verification oracle: enumerates every model-feasible support (n <= 24) and
/// returns the variance-reduction argmax under the shared tie-break (greater
/// F, then larger cardinality, then lexicographically smaller support).
SupportSet brute_force_project(const DenseVector& x, const SparsityModel& model);

}  // namespace clash

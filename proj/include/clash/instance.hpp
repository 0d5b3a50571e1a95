#pragma once

#include <cstdint>

#include "clash/model.hpp"
#include "clash/rng.hpp"
#include "clash/types.hpp"

namespace clash {

/// How an instance's lambda is fixed relative to its ground truth.
struct LambdaPolicy {
  bool infinite = false;
  double multiple = 1.0;  // lambda = multiple * ||x*||_1 when finite

  static LambdaPolicy multiple_of_l1(double multiple) {
    return LambdaPolicy{false, multiple};
  }
  static LambdaPolicy unbounded() { return LambdaPolicy{true, 1.0}; }
};

/// One synthetic recovery task, y = Phi x* + eps by construction.
struct ProblemInstance {
  DesignMatrix phi;
  DenseVector y;
  DenseVector x_star;
  double noise_energy;   // ||eps||_2, exact
  SparsityModel model;
  double lambda;         // +infinity when the policy is unbounded
  std::uint64_t seed;
};

/// Uniform draw among model-feasible supports of cardinality exactly
/// model.k(). Exact uniformity via counting (partition and clustered models
/// use counting DPs, explicit-ILP models enumerate at n <= 24).
SupportSet sample_feasible_support(const SparsityModel& model, int n, Rng& rng);

/// Deterministic instance generation. The seed splits into four streams:
/// 1 fills Phi with iid N(0, 1/m) entries row by row, 2 draws the support,
/// 3 draws iid standard-normal amplitudes (ascending support order) rescaled
/// to ||x*||_2 = 1, 4 draws the noise direction rescaled to the exact
/// requested energy. The same seed reproduces the instance bit for bit.
ProblemInstance generate_instance(int n, int m, const SparsityModel& model,
                                  double noise_energy,
                                  const LambdaPolicy& lambda_policy,
                                  std::uint64_t seed);

}  // namespace clash

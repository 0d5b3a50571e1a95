#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "clash/errors.hpp"

namespace clash {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Ordered set of coordinate indices: strictly increasing, no duplicates,
/// all nonnegative. The combinatorial object every selection step produces.
class SupportSet {
 public:
  SupportSet() = default;

  /// Takes ownership of `indices`; sorts them and rejects duplicates or
  /// negative entries.
  explicit SupportSet(std::vector<int> indices);

  /// {0, 1, ..., n-1}.
  static SupportSet full(int n);

  /// supp(x): indices of the nonzero entries.
  static SupportSet nonzeros(const Vector& x);

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int index) const;
  int operator[](int pos) const { return indices_[pos]; }

  /// Largest member, or -1 when empty.
  int max_index() const { return indices_.empty() ? -1 : indices_.back(); }

  const std::vector<int>& indices() const { return indices_; }
  std::vector<int>::const_iterator begin() const { return indices_.begin(); }
  std::vector<int>::const_iterator end() const { return indices_.end(); }

  SupportSet unite(const SupportSet& other) const;
  SupportSet intersect(const SupportSet& other) const;
  SupportSet subtract(const SupportSet& other) const;

  /// [0, n) \ this. Throws if any member lies outside [0, n).
  SupportSet complement(int n) const;

  bool is_subset_of(const SupportSet& other) const;

  bool operator==(const SupportSet& other) const = default;

  std::string to_string() const;

 private:
  std::vector<int> indices_;
};

/// Fixed-length real vector. Entries are validated finite on construction,
/// so every value that flows through the library is a usable number.
class DenseVector {
 public:
  explicit DenseVector(Vector values);
  static DenseVector zeros(int n);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const Vector& values() const { return values_; }

  double l1_norm() const { return values_.lpNorm<1>(); }
  double l2_norm() const { return values_.norm(); }
  double squared_l2_norm() const { return values_.squaredNorm(); }

  /// (x)_S: entries on s kept, everything else zeroed. Throws if s reaches
  /// outside [0, size()).
  DenseVector masked(const SupportSet& s) const;

  SupportSet support() const { return SupportSet::nonzeros(values_); }

 private:
  Vector values_;
};

/// Dense m-by-n sensing operator. Entries validated finite on construction.
class DesignMatrix {
 public:
  explicit DesignMatrix(Matrix values);

  int rows() const { return static_cast<int>(values_.rows()); }
  int cols() const { return static_cast<int>(values_.cols()); }
  const Matrix& values() const { return values_; }

  /// Phi_S: the column submatrix indexed by s (m x |s|).
  Matrix columns(const SupportSet& s) const;

 private:
  Matrix values_;
};

}  // namespace clash

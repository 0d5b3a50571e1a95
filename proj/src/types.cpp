#include "clash/types.hpp"

#include <algorithm>
#include <sstream>

namespace clash {

namespace {

void require_finite(const Matrix& values, const char* what) {
  if (!values.allFinite()) {
    throw Error(std::string(what) + ": entries must be finite (no NaN/Inf)");
  }
}

}  // namespace

SupportSet::SupportSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 0) {
    throw DimensionError("SupportSet: negative index " +
                         std::to_string(indices_.front()));
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw DimensionError("SupportSet: duplicate indices");
  }
}

SupportSet SupportSet::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  SupportSet s;
  s.indices_ = std::move(all);
  return s;
}

SupportSet SupportSet::nonzeros(const Vector& x) {
  std::vector<int> idx;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) idx.push_back(i);
  }
  SupportSet s;
  s.indices_ = std::move(idx);
  return s;
}

bool SupportSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

SupportSet SupportSet::unite(const SupportSet& other) const {
  std::vector<int> out;
  out.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out));
  SupportSet s;
  s.indices_ = std::move(out);
  return s;
}

SupportSet SupportSet::intersect(const SupportSet& other) const {
  std::vector<int> out;
  std::set_intersection(indices_.begin(), indices_.end(),
                        other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(out));
  SupportSet s;
  s.indices_ = std::move(out);
  return s;
}

SupportSet SupportSet::subtract(const SupportSet& other) const {
  std::vector<int> out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out));
  SupportSet s;
  s.indices_ = std::move(out);
  return s;
}

SupportSet SupportSet::complement(int n) const {
  if (max_index() >= n) {
    throw DimensionError("SupportSet::complement: index " +
                         std::to_string(max_index()) + " outside [0, " +
                         std::to_string(n) + ")");
  }
  return full(n).subtract(*this);
}

bool SupportSet::is_subset_of(const SupportSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

std::string SupportSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out << ' ';
    out << indices_[i];
  }
  out << '}';
  return out.str();
}

DenseVector::DenseVector(Vector values) : values_(std::move(values)) {
  require_finite(values_, "DenseVector");
}

DenseVector DenseVector::zeros(int n) { return DenseVector(Vector::Zero(n)); }

DenseVector DenseVector::masked(const SupportSet& s) const {
  if (s.max_index() >= size()) {
    throw DimensionError("DenseVector::masked: support index " +
                         std::to_string(s.max_index()) +
                         " outside vector of length " + std::to_string(size()));
  }
  Vector out = Vector::Zero(values_.size());
  for (int i : s) out[i] = values_[i];
  return DenseVector(std::move(out));
}

DesignMatrix::DesignMatrix(Matrix values) : values_(std::move(values)) {
  require_finite(values_, "DesignMatrix");
}

Matrix DesignMatrix::columns(const SupportSet& s) const {
  if (s.max_index() >= cols()) {
    throw DimensionError("DesignMatrix::columns: support index " +
                         std::to_string(s.max_index()) + " outside " +
                         std::to_string(rows()) + "x" + std::to_string(cols()) +
                         " matrix");
  }
  Matrix out(values_.rows(), s.size());
  for (int j = 0; j < s.size(); ++j) out.col(j) = values_.col(s[j]);
  return out;
}

}  // namespace clash

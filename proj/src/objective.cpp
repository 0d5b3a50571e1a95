#include "clash/objective.hpp"

#include <string>

namespace clash {

namespace {

void check_shapes(const DesignMatrix& phi, const DenseVector& y,
                  const DenseVector& x, const char* op) {
  if (y.size() != phi.rows() || x.size() != phi.cols()) {
    throw DimensionError(std::string(op) + ": phi is " +
                         std::to_string(phi.rows()) + "x" +
                         std::to_string(phi.cols()) + " but y has length " +
                         std::to_string(y.size()) + " and x has length " +
                         std::to_string(x.size()));
  }
}

}  // namespace

double data_error(const DesignMatrix& phi, const DenseVector& y,
                  const DenseVector& x) {
  check_shapes(phi, y, x, "data_error");
  return (y.values() - phi.values() * x.values()).squaredNorm();
}

DenseVector gradient(const DesignMatrix& phi, const DenseVector& y,
                     const DenseVector& x) {
  check_shapes(phi, y, x, "gradient");
  Vector residual = y.values() - phi.values() * x.values();
  return DenseVector(-2.0 * (phi.values().transpose() * residual));
}

}  // namespace clash

#pragma once

#include "clash/types.hpp"

namespace clash {

/// f(x) = ||y - Phi x||_2^2, the empirical data error.
double data_error(const DesignMatrix& phi, const DenseVector& y,
                  const DenseVector& x);

/// grad f(x) = -2 Phi^T (y - Phi x). Restrict to a support with
/// DenseVector::masked.
DenseVector gradient(const DesignMatrix& phi, const DenseVector& y,
                     const DenseVector& x);

}  // namespace clash

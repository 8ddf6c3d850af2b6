// Copyright 2026 The srqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace srqe::linalg {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Largest deviation from Hermiticity, elementwise.
inline double hermiticity_defect(const Matrix& m) {
    return max_abs(m - Matrix(m.adjoint()));
}

// Matrix exponential by scaling and squaring of a truncated Taylor series.
// Terms are added until the bound on the remainder drops below tol.
Matrix expm(const Matrix& a, double tol = 1e-12);

// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

// Trace distance (1/2)*||rho - sigma||_1 for Hermitian arguments.
double trace_distance(const Matrix& rho, const Matrix& sigma);

}  // namespace srqe::linalg

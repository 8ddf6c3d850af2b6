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

#include "srqe/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace srqe::linalg {

Matrix expm(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
    const auto n = a.rows();
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm

    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    const Matrix b = a * scale;
    Matrix result = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    // ||b|| <= 0.5, so the remainder after term k is bounded by
    // ||term_k|| * ||b|| / (1 - ||b||) <= ||term_k||.
    for (int k = 1; k < 60; ++k) {
        term = term * b / static_cast<double>(k);
        result += term;
        if (max_abs(term) < 0.25 * tol) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
    return solver.eigenvalues();
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
    const Eigen::VectorXd ev = hermitian_eigenvalues(hermitize(rho - sigma));
    return 0.5 * ev.cwiseAbs().sum();
}

}  // namespace srqe::linalg

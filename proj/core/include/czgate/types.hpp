// Copyright 2026 The czgate Authors
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

#ifndef CZGATE_TYPES_HPP
#define CZGATE_TYPES_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace czgate {

using Complex = std::complex<double>;

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat6 = Eigen::Matrix<Complex, 6, 6>;
using Mat12 = Eigen::Matrix<Complex, 12, 12>;
using Mat2x4 = Eigen::Matrix<Complex, 2, 4>;
using Mat4x2 = Eigen::Matrix<Complex, 4, 2>;
using Vec4 = Eigen::Vector4cd;

/// Tolerance for algebraic identities among products of a handful of
/// unitaries in double precision.
inline constexpr double kAlgebraTol = 1e-12;

/// Tolerance for sanitizing externally supplied density matrices
/// (Hermiticity, positivity, trace).
inline constexpr double kDensityTol = 1e-10;

/// Thrown when a numerical invariant fails (non-unitary gate, invalid
/// density matrix, out-of-range probability). The message names the
/// violated property.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest absolute entry.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Largest entrywise deviation between two same-shaped matrices.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a,
                    const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// max |U^dag U - I| <= tol.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = kAlgebraTol) {
  using Plain = typename Derived::PlainObject;
  const Plain prod = u.adjoint() * u;
  return max_abs_diff(prod, Plain::Identity(u.rows(), u.cols())) <= tol;
}

}  // namespace czgate

#endif  // CZGATE_TYPES_HPP

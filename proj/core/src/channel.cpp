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

#include "czgate/channel.hpp"

#include <cmath>
#include <sstream>

namespace czgate {

namespace {

Mat4 completeness_sum(const KrausSet& kraus) {
  return kraus.a1.adjoint() * kraus.a1 + kraus.a3.adjoint() * kraus.a3 +
         kraus.c1.adjoint() * kraus.c1 + kraus.c3.adjoint() * kraus.c3;
}

void validate_kraus(const KrausSet& kraus) {
  const double residual = max_abs_diff(completeness_sum(kraus), Mat4::Identity());
  if (residual > kAlgebraTol) {
    std::ostringstream msg;
    msg << "Kraus completeness violated: max |sum K^dag K - I| = " << residual;
    throw ValidationError(msg.str());
  }
}

}  // namespace

void validate_density(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                      double expected_trace) {
  const double herm = max_abs(rho - rho.adjoint());
  if (herm > kDensityTol) {
    std::ostringstream msg;
    msg << "density matrix not Hermitian: max |rho - rho^dag| = " << herm;
    throw ValidationError(msg.str());
  }

  const double trace_err = std::abs(rho.trace() - Complex{expected_trace, 0.0});
  if (trace_err > kDensityTol) {
    std::ostringstream msg;
    msg << "density matrix trace off by " << trace_err << " (expected "
        << expected_trace << ", got " << rho.trace() << ")";
    throw ValidationError(msg.str());
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kDensityTol) {
    std::ostringstream msg;
    msg << "density matrix not positive: min eigenvalue = " << min_eig;
    throw ValidationError(msg.str());
  }
}

void validate_unitary(const Eigen::Ref<const Eigen::MatrixXcd>& u) {
  const Eigen::MatrixXcd prod = u.adjoint() * u;
  const double residual = max_abs_diff(
      prod, Eigen::MatrixXcd::Identity(u.rows(), u.cols()));
  if (residual > kAlgebraTol) {
    std::ostringstream msg;
    msg << "matrix not unitary: max |U^dag U - I| = " << residual;
    throw ValidationError(msg.str());
  }
}

BlockDecomposition BlockDecomposition::split(const GateMatrix& gate) {
  BlockDecomposition d;
  d.a = gate.block<6, 6>(0, 0);
  d.b = gate.block<6, 6>(0, 6);
  d.c = gate.block<6, 6>(6, 0);
  d.d = gate.block<6, 6>(6, 6);

  d.a1 = d.a.block<4, 4>(0, 0);
  d.a2 = d.a.block<4, 2>(0, 4);
  d.a3 = d.a.block<2, 4>(4, 0);
  d.a4 = d.a.block<2, 2>(4, 4);

  d.c1 = d.c.block<4, 4>(0, 0);
  d.c2 = d.c.block<4, 2>(0, 4);
  d.c3 = d.c.block<2, 4>(4, 0);
  d.c4 = d.c.block<2, 2>(4, 4);
  return d;
}

GateMatrix BlockDecomposition::reassemble() const {
  GateMatrix gate;
  gate.block<6, 6>(0, 0) = a;
  gate.block<6, 6>(0, 6) = b;
  gate.block<6, 6>(6, 0) = c;
  gate.block<6, 6>(6, 6) = d;
  return gate;
}

Mat12 lift_input(const Mat4& rho4) {
  validate_density(rho4);
  Mat12 rho12 = Mat12::Zero();
  rho12.block<4, 4>(0, 0) = rho4;
  return rho12;
}

Mat12 evolve(const Mat12& rho12, const GateMatrix& gate) {
  validate_unitary(gate);
  validate_density(rho12, rho12.trace().real());
  return gate * rho12 * gate.adjoint();
}

Mat6 trace_out_phonon(const Mat12& rho12) {
  validate_density(rho12, rho12.trace().real());
  return rho12.block<6, 6>(0, 0) + rho12.block<6, 6>(6, 6);
}

ReducedState split_blocks(const Mat6& rho6) {
  ReducedState state;
  state.rho1 = rho6.block<4, 4>(0, 0);
  state.rho2 = rho6.block<4, 2>(0, 4);
  state.rho3 = rho6.block<2, 4>(4, 0);
  state.rho4 = rho6.block<2, 2>(4, 4);
  return state;
}

KrausSet kraus_from_gate(const GateMatrix& gate) {
  validate_unitary(gate);
  KrausSet kraus;
  kraus.a1 = gate.block<4, 4>(0, 0);
  kraus.a3 = gate.block<2, 4>(4, 0);
  kraus.c1 = gate.block<4, 4>(6, 0);
  kraus.c3 = gate.block<2, 4>(10, 0);
  return kraus;
}

KrausSet kraus_closed_form(const TwoLevelUnitary& u1, const TwoLevelUnitary& u2,
                           const TwoLevelUnitary& u3) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex one{1.0, 0.0};

  const Complex a11 =
      0.5 * (2.0 * u1(0, 0) * u3(0, 0) + u1(1, 0) * (one + u2(0, 0)) * u3(0, 1));
  const Complex a12 = 0.5 * u1(1, 0) * (u2(0, 0) - one) * u3(0, 1);
  const Complex c11 =
      inv_sqrt2 * (u1(0, 0) * u3(1, 0) + u1(1, 0) * u2(0, 0) * u3(1, 1));
  const Complex c12 = inv_sqrt2 * (u1(0, 0) * u3(1, 0) + u1(1, 0) * u3(1, 1));
  const Complex c3 = inv_sqrt2 * u1(1, 0) * u2(1, 0);

  KrausSet kraus;
  kraus.a1 = Mat4::Zero();
  kraus.a1(0, 0) = one;
  kraus.a1(1, 1) = one;
  kraus.a1(2, 2) = a11;
  kraus.a1(2, 3) = a12;
  kraus.a1(3, 2) = a12;
  kraus.a1(3, 3) = a11;

  kraus.a3 = Mat2x4::Zero();

  kraus.c1 = Mat4::Zero();
  kraus.c1(0, 2) = c11;
  kraus.c1(0, 3) = c11;
  kraus.c1(1, 2) = c12;
  kraus.c1(1, 3) = -c12;

  kraus.c3 = Mat2x4::Zero();
  kraus.c3(0, 2) = c3;
  kraus.c3(0, 3) = c3;
  return kraus;
}

ReducedState apply_channel(const KrausSet& kraus, const Mat4& rho4) {
  validate_density(rho4);
  validate_kraus(kraus);

  ReducedState state;
  state.rho1 = kraus.a1 * rho4 * kraus.a1.adjoint() +
               kraus.c1 * rho4 * kraus.c1.adjoint();
  state.rho2 = Mat4x2::Zero();
  state.rho3 = Mat2x4::Zero();
  state.rho4 = kraus.a3 * rho4 * kraus.a3.adjoint() +
               kraus.c3 * rho4 * kraus.c3.adjoint();
  return state;
}

}  // namespace czgate

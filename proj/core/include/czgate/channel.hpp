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

#ifndef CZGATE_CHANNEL_HPP
#define CZGATE_CHANNEL_HPP

#include "czgate/level_space.hpp"
#include "czgate/types.hpp"

namespace czgate {

/// Checks Hermiticity (per entry), positivity (eigenvalues >= -kDensityTol),
/// and trace (within kDensityTol of expected_trace). Throws ValidationError
/// naming the violated property.
void validate_density(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                      double expected_trace = 1.0);

/// Throws ValidationError if u is not unitary within kAlgebraTol.
void validate_unitary(const Eigen::Ref<const Eigen::MatrixXcd>& u);

/// The 6x6 quadrants of a gate matrix, with the phonon occupation as the
/// block coordinate, plus the finer sub-blocks of the two left quadrants.
/// reassemble() reproduces the source matrix exactly.
struct BlockDecomposition {
  Mat6 a, b, c, d;  // gate = [a b; c d]

  Mat4 a1;    // a = [a1 a2; a3 a4]
  Mat4x2 a2;
  Mat2x4 a3;
  Mat2 a4;

  Mat4 c1;    // c = [c1 c2; c3 c4]
  Mat4x2 c2;
  Mat2x4 c3;
  Mat2 c4;

  static BlockDecomposition split(const GateMatrix& gate);
  GateMatrix reassemble() const;
};

/// The four operators defining the reduced channel on the 4-dim input
/// subspace. For gates produced by compose_gate, a3 is structurally zero and
/// a1 + c1 + c3 satisfy the completeness relation
/// a1^dag a1 + a3^dag a3 + c1^dag c1 + c3^dag c3 = I4.
struct KrausSet {
  Mat4 a1;
  Mat2x4 a3;
  Mat4 c1;
  Mat2x4 c3;
};

/// Blocks of the reduced 6x6 state: rho1 is the 4x4 computational block,
/// rho4 the 2x2 auxiliary block, rho2/rho3 the coherences between them
/// (rho3 = rho2^dag for Hermitian input).
struct ReducedState {
  Mat4 rho1;
  Mat4x2 rho2;
  Mat2x4 rho3;
  Mat2 rho4;
};

/// Places a validated 4x4 input state at rows/columns 0-3 of the
/// twelve-level space, zeros elsewhere.
Mat12 lift_input(const Mat4& rho4);

/// rho -> gate rho gate^dag. Validates the gate (unitarity) and the input
/// (density invariants); preserves trace and Hermiticity.
Mat12 evolve(const Mat12& rho12, const GateMatrix& gate);

/// Partial trace over the phonon: the sum of the two diagonal 6x6 blocks.
/// Reduced basis order: (control,target) =
/// (0,0),(0,1),(1,0),(1,1),(0,2),(1,2).
Mat6 trace_out_phonon(const Mat12& rho12);

/// The four sub-blocks of a reduced 6x6 state.
ReducedState split_blocks(const Mat6& rho6);

/// Kraus operators read off the first four columns of a unitary gate:
/// a1 = rows 0-3, a3 = rows 4-5, c1 = rows 6-9, c3 = rows 10-11.
/// Throws ValidationError on a non-unitary gate.
KrausSet kraus_from_gate(const GateMatrix& gate);

/// Closed-form Kraus operators of the composed gate (kPaper embedding) in
/// terms of the three pulse unitaries:
///
///   a1 = [[1,0,0,0],[0,1,0,0],[0,0,a11,a12],[0,0,a12,a11]] with
///       a11 = (2 u1_11 u3_11 + u1_21 (1 + u2_11) u3_12) / 2
///       a12 = u1_21 (u2_11 - 1) u3_12 / 2
///   a3 = 0
///   c1 has c11 at (0,2),(0,3) and c12 at (1,2), -c12 at (1,3) with
///       c11 = (u1_11 u3_21 + u1_21 u2_11 u3_22) / sqrt(2)
///       c12 = (u1_11 u3_21 + u1_21 u3_22) / sqrt(2)
///   c3 has c at (0,2),(0,3) with
///       c = u1_21 u2_21 / sqrt(2)
///
/// The auxiliary amplitude c involves the first two pulses only: population
/// reaches the phonon-excited auxiliary level through pulse 1 followed by
/// pulse 2, and pulse 3 never couples to that level.
KrausSet kraus_closed_form(const TwoLevelUnitary& u1, const TwoLevelUnitary& u2,
                           const TwoLevelUnitary& u3);

/// Applies the reduced channel:
///   rho1 = a1 rho a1^dag + c1 rho c1^dag
///   rho4 = a3 rho a3^dag + c3 rho c3^dag
/// The coherence blocks rho2/rho3 are not reconstructible from the KrausSet
/// and are returned as zero; the full pipeline (evolve, trace_out_phonon,
/// split_blocks) produces them. Validates the input state and the KrausSet
/// completeness relation.
ReducedState apply_channel(const KrausSet& kraus, const Mat4& rho4);

}  // namespace czgate

#endif  // CZGATE_CHANNEL_HPP

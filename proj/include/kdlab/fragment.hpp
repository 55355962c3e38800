// Copyright 2026 The kdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdlab/classify.hpp"
#include "kdlab/tolerances.hpp"

namespace kdlab {

struct KdRealityResult {
    bool verdict = false;
    /// max |Im KD_A|.
    double direct_violation = 0.0;
    /// max |X0_A(g, chi)| over the points with chi(g) != 1.
    double support_violation = 0.0;
    bool direct_verdict = false;
    bool support_verdict = false;
    bool methods_agree() const { return direct_verdict == support_verdict; }
    double worst_violation() const;
};

/// KD-reality of a Hermitian operator, decided two ways: by the imaginary part
/// of the KD table and by the support of the characteristic function X0.
KdRealityResult is_kd_real(const Operator &A, double tol);

/// Number of points (g, chi) with chi(g) = 1.
int kd_real_dimension(const FiniteAbelianGroup &G);

/// Orthogonal projection onto the KD-real operators: X0 is zeroed off the set
/// chi(g) = 1. Hermitian inputs stay Hermitian.
Operator project_kd_real(const Operator &A);

struct KdPositivityResult {
    bool verdict = false;
    double max_imag = 0.0;
    double min_real = 0.0;
    double worst_violation() const;
};

/// Throws PreconditionError if rho is not a state at `state_tol`.
KdPositivityResult is_kd_positive_state(const Operator &rho, double tol, double state_tol = 1e-9);

enum class Verdict { inside, outside, inconclusive };
const char *to_string(Verdict v);

struct MembershipResult {
    Verdict verdict = Verdict::inconclusive;
    /// ||A - sum_i lambda_i Pi_i||_HS for the returned coefficients.
    double residual = 0.0;
    /// One coefficient per family member (hull: lambda_i >= 0, sum 1).
    Eigen::VectorXd coefficients;
    /// Unit-norm separating functional when verdict == outside.
    std::optional<Operator> witness;
    /// <W, A> - max_i <W, Pi_i>.
    double gap = 0.0;
    int span_dimension = 0;
    int iterations = 0;
    std::string detail;
};

/// The KD-positive pure family together with its KD tables as real columns,
/// scaled so that Euclidean geometry in column space is Hilbert-Schmidt
/// geometry on operators.
class PureFamilyBasis {
   public:
    explicit PureFamilyBasis(GroupPtr G, int bound = kDefaultSubgroupBound);

    const GroupPtr &group() const { return group_; }
    const std::vector<KdPureState> &states() const { return states_; }
    const Eigen::MatrixXd &columns() const { return columns_; }
    int span_dimension() const { return span_dimension_; }

    /// Flattened scaled KD table (real part, imaginary part) of A.
    std::pair<Eigen::VectorXd, Eigen::VectorXd> coordinates(const Operator &A) const;
    Operator combination(const Eigen::VectorXd &coefficients) const;

   private:
    GroupPtr group_;
    std::vector<KdPureState> states_;
    Eigen::MatrixXd columns_;
    int span_dimension_ = 0;
};

/// Least-squares fit of a Hermitian A by real combinations of the family.
MembershipResult span_membership(const PureFamilyBasis &basis, const Operator &A, double tol);

/// Convex-hull membership of a KD-positive state in conv(family). Throws
/// PreconditionError when rho is not a KD-positive state.
MembershipResult conv_membership(const PureFamilyBasis &basis, const Operator &rho,
                                 const Tolerances &tol = kDefaultTolerances);

struct ProjectionResult {
    Operator rho;
    /// ||rho - rho0||_HS.
    double distance = 0.0;
    /// Distance between the final iterates of the two sets.
    double set_gap = 0.0;
    /// Worst KD positivity violation of the returned state.
    double kd_violation = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Dykstra projection of a Hermitian, trace-one rho0 onto the KD-positive
/// states. The returned operator is always an exact state (it is the iterate
/// of the spectral set); `converged` reports whether it is also within `tol`
/// of the KD-positive polyhedron.
ProjectionResult project_onto_kdpos(const Operator &rho0, int max_iter = 2000, double tol = 1e-9);

}  // namespace kdlab

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

#include <vector>

#include <Eigen/SparseCore>

#include "kdlab/sampling.hpp"

namespace kdlab {

/// Operator sum_{k,l} c_{kl} |k><l| on L^2(S^1) with <z|k> = z^k and all
/// modes in [-K, K]. Coefficients are stored sparsely so that long diagonal
/// states stay cheap.
class BandLimitedOperator {
   public:
    using Sparse = Eigen::SparseMatrix<Complex>;

    BandLimitedOperator() = default;
    BandLimitedOperator(int band, Sparse coeffs);

    static BandLimitedOperator from_dense(int band, const CMatrix &coeffs);
    /// Diagonal operator; `diag[i]` is the coefficient of mode i - band.
    static BandLimitedOperator diagonal(int band, const std::vector<double> &diag);
    /// Rank-one projector onto the normalised vector sum_k a_k |k>.
    static BandLimitedOperator pure(int band, const std::vector<std::pair<int, Complex>> &amplitudes);
    /// Geometric state proportional to sum_{k=0}^{band} e^{-a k} |k><k|, trace one.
    static BandLimitedOperator geometric(double a, int band);

    int band() const { return band_; }
    int size() const { return 2 * band_ + 1; }
    const Sparse &coeffs() const { return coeffs_; }
    /// c_{kl} for modes k, l in [-K, K].
    Complex coeff(int k, int l) const;
    CMatrix dense() const;

    bool is_hermitian(double tol) const;
    Complex trace() const;
    double hs_norm_squared() const;

   private:
    int band_ = 0;
    Sparse coeffs_;
};

/// KD_A(z, m) = sum_k c_{km} z^{k - m}. Throws PreconditionError for |m| > K
/// or |z| != 1.
Complex circle_kd_eval(const BandLimitedOperator &A, int m, Complex z);

struct CircleSearchReport {
    double max_imag = 0.0;
    int imag_mode = 0;
    double imag_theta = 0.0;
    double min_real = 0.0;
    int real_mode = 0;
    double real_theta = 0.0;
    int grid_size = 0;
    double violation() const;
};

/// Worst KD violations over every mode and a uniform angle grid, each
/// sharpened by a bracketed golden-section search. Needs grid_size >= 4K + 4.
CircleSearchReport circle_negativity_search(const BandLimitedOperator &A, int grid_size);

/// Off-diagonal coefficients vanish and the diagonal is nonnegative (within
/// tol). Throws PreconditionError for non-Hermitian input.
bool circle_is_classical(const BandLimitedOperator &A, double tol);

/// Wishart state B B^* / tr on 2K + 1 modes; rank <= 0 means full rank.
BandLimitedOperator random_circle_state(int band, Rng &rng, int rank = 0);

/// sum_{k != l} |c_{kl}|.
double off_diagonal_mass(const BandLimitedOperator &A);

}  // namespace kdlab

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

#include "kdlab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kdlab/errors.hpp"

namespace kdlab {

BandLimitedOperator::BandLimitedOperator(int band, Sparse coeffs) : band_(band), coeffs_(std::move(coeffs)) {
    if (band < 0) throw PreconditionError("band limit must be nonnegative");
    if (coeffs_.rows() != size() || coeffs_.cols() != size()) {
        throw PreconditionError("coefficient matrix for band " + std::to_string(band) + " must be " +
                                std::to_string(size()) + "x" + std::to_string(size()));
    }
    coeffs_.makeCompressed();
}

BandLimitedOperator BandLimitedOperator::from_dense(int band, const CMatrix &coeffs) {
    return BandLimitedOperator(band, coeffs.sparseView(Complex(0.0), 0.0));
}

BandLimitedOperator BandLimitedOperator::diagonal(int band, const std::vector<double> &diag) {
    const int n = 2 * band + 1;
    if (static_cast<int>(diag.size()) != n) {
        throw PreconditionError("diagonal for band " + std::to_string(band) + " needs " + std::to_string(n) +
                                " entries");
    }
    std::vector<Eigen::Triplet<Complex>> triplets;
    for (int i = 0; i < n; ++i) {
        if (diag[i] != 0.0) triplets.emplace_back(i, i, Complex(diag[i], 0.0));
    }
    Sparse c(n, n);
    c.setFromTriplets(triplets.begin(), triplets.end());
    return BandLimitedOperator(band, std::move(c));
}

BandLimitedOperator BandLimitedOperator::pure(int band, const std::vector<std::pair<int, Complex>> &amplitudes) {
    const int n = 2 * band + 1;
    CVector v = CVector::Zero(n);
    for (const auto &[k, a] : amplitudes) {
        if (k < -band || k > band) throw PreconditionError("mode " + std::to_string(k) + " outside the band");
        v[k + band] += a;
    }
    const double norm = v.norm();
    if (norm == 0.0) throw PreconditionError("pure circle state needs a nonzero amplitude");
    v /= norm;
    return from_dense(band, v * v.adjoint());
}

BandLimitedOperator BandLimitedOperator::geometric(double a, int band) {
    if (!(a > 0.0)) throw PreconditionError("geometric state needs a > 0");
    std::vector<double> diag(static_cast<std::size_t>(2 * band + 1), 0.0);
    double total = 0.0;
    for (int k = 0; k <= band; ++k) {
        diag[static_cast<std::size_t>(k + band)] = std::exp(-a * k);
        total += diag[static_cast<std::size_t>(k + band)];
    }
    for (double &d : diag) d /= total;
    return diagonal(band, diag);
}

Complex BandLimitedOperator::coeff(int k, int l) const {
    if (k < -band_ || k > band_ || l < -band_ || l > band_) return Complex(0.0);
    return coeffs_.coeff(k + band_, l + band_);
}

CMatrix BandLimitedOperator::dense() const { return CMatrix(coeffs_); }

bool BandLimitedOperator::is_hermitian(double tol) const {
    const Sparse diff = coeffs_ - Sparse(coeffs_.adjoint());
    double worst = 0.0;
    for (int j = 0; j < diff.outerSize(); ++j) {
        for (Sparse::InnerIterator it(diff, j); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst <= tol;
}

Complex BandLimitedOperator::trace() const {
    Complex t(0.0);
    for (int j = 0; j < coeffs_.outerSize(); ++j) t += coeffs_.coeff(j, j);
    return t;
}

double BandLimitedOperator::hs_norm_squared() const { return coeffs_.squaredNorm(); }

namespace {

void require_mode(const BandLimitedOperator &A, int m) {
    if (m < -A.band() || m > A.band()) {
        throw PreconditionError("mode " + std::to_string(m) + " outside the band [-" + std::to_string(A.band()) +
                                ", " + std::to_string(A.band()) + "]");
    }
}

// Column m of the coefficients as (exponent k - m, coefficient) pairs.
std::vector<std::pair<int, Complex>> column_terms(const BandLimitedOperator &A, int m) {
    std::vector<std::pair<int, Complex>> terms;
    const int col = m + A.band();
    for (BandLimitedOperator::Sparse::InnerIterator it(A.coeffs(), col); it; ++it) {
        terms.emplace_back(static_cast<int>(it.row()) - A.band() - m, it.value());
    }
    return terms;
}

Complex eval_terms(const std::vector<std::pair<int, Complex>> &terms, double theta) {
    Complex s(0.0);
    for (const auto &[p, c] : terms) s += c * std::polar(1.0, p * theta);
    return s;
}

// Golden-section minimisation of f on [lo, hi].
template <class F>
std::pair<double, double> golden_min(F f, double lo, double hi) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - r * (b - a);
    double d = a + r * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < 100 && (b - a) > 1e-14; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    const double x = fc < fd ? c : d;
    return {x, std::min(fc, fd)};
}

}  // namespace

Complex circle_kd_eval(const BandLimitedOperator &A, int m, Complex z) {
    require_mode(A, m);
    if (std::abs(std::abs(z) - 1.0) > 1e-12) throw PreconditionError("KD on the circle needs |z| = 1");
    Complex s(0.0);
    for (const auto &[p, c] : column_terms(A, m)) s += c * std::pow(z, p);
    return s;
}

double CircleSearchReport::violation() const { return std::max({0.0, max_imag, -min_real}); }

CircleSearchReport circle_negativity_search(const BandLimitedOperator &A, int grid_size) {
    const int K = A.band();
    if (grid_size < 4 * K + 4) {
        throw PreconditionError("grid of " + std::to_string(grid_size) + " points is below the Nyquist margin " +
                                std::to_string(4 * K + 4));
    }
    const double two_pi = 2.0 * std::numbers::pi;
    const double h = two_pi / grid_size;
    CircleSearchReport report;
    report.grid_size = grid_size;
    report.min_real = std::numeric_limits<double>::infinity();
    for (int m = -K; m <= K; ++m) {
        const auto terms = column_terms(A, m);
        if (terms.empty()) {
            if (0.0 < report.min_real) {
                report.min_real = 0.0;
                report.real_mode = m;
                report.real_theta = 0.0;
            }
            continue;
        }
        int worst_re = 0;
        int worst_im = 0;
        double re_min = std::numeric_limits<double>::infinity();
        double im_max = -1.0;
        for (int j = 0; j < grid_size; ++j) {
            const Complex v = eval_terms(terms, j * h);
            if (v.real() < re_min) {
                re_min = v.real();
                worst_re = j;
            }
            if (std::abs(v.imag()) > im_max) {
                im_max = std::abs(v.imag());
                worst_im = j;
            }
        }
        auto re_fn = [&](double t) { return eval_terms(terms, t).real(); };
        auto im_fn = [&](double t) { return -std::abs(eval_terms(terms, t).imag()); };
        auto [t_re, v_re] = golden_min(re_fn, (worst_re - 1) * h, (worst_re + 1) * h);
        auto [t_im, v_im] = golden_min(im_fn, (worst_im - 1) * h, (worst_im + 1) * h);
        if (v_re > re_min) {
            v_re = re_min;
            t_re = worst_re * h;
        }
        if (-v_im < im_max) {
            v_im = -im_max;
            t_im = worst_im * h;
        }
        if (v_re < report.min_real) {
            report.min_real = v_re;
            report.real_mode = m;
            report.real_theta = std::fmod(t_re + two_pi, two_pi);
        }
        if (-v_im > report.max_imag) {
            report.max_imag = -v_im;
            report.imag_mode = m;
            report.imag_theta = std::fmod(t_im + two_pi, two_pi);
        }
    }
    return report;
}

bool circle_is_classical(const BandLimitedOperator &A, double tol) {
    if (!A.is_hermitian(tol)) throw PreconditionError("circle classicality needs a Hermitian operator");
    const auto &c = A.coeffs();
    for (int j = 0; j < c.outerSize(); ++j) {
        for (BandLimitedOperator::Sparse::InnerIterator it(c, j); it; ++it) {
            if (it.row() != it.col()) {
                if (std::abs(it.value()) > tol) return false;
            } else if (it.value().real() < -tol) {
                return false;
            }
        }
    }
    return true;
}

BandLimitedOperator random_circle_state(int band, Rng &rng, int rank) {
    const int n = 2 * band + 1;
    if (rank <= 0 || rank > n) rank = n;
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix b(n, rank);
    for (int j = 0; j < rank; ++j) {
        for (int i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            b(i, j) = Complex(re, im);
        }
    }
    CMatrix c = b * b.adjoint();
    c /= c.trace().real();
    c = (c + c.adjoint()).eval() * 0.5;
    return BandLimitedOperator::from_dense(band, c);
}

double off_diagonal_mass(const BandLimitedOperator &A) {
    double mass = 0.0;
    const auto &c = A.coeffs();
    for (int j = 0; j < c.outerSize(); ++j) {
        for (BandLimitedOperator::Sparse::InnerIterator it(c, j); it; ++it) {
            if (it.row() != it.col()) mass += std::abs(it.value());
        }
    }
    return mass;
}

}  // namespace kdlab

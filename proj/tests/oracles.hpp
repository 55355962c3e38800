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

// Independent reference implementations used by the tests. Nothing here calls
// into the library: groups are plain factor lists, indices are decoded by
// hand and every transform is a literal loop over its defining sum.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Factors = std::vector<int>;

inline int order(const Factors &f) {
    int n = 1;
    for (int x : f) n *= x;
    return n;
}

// Lexicographic decoding, last factor varying fastest.
inline std::vector<int> decode(const Factors &f, int idx) {
    std::vector<int> r(f.size());
    for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) {
        r[j] = idx % f[j];
        idx /= f[j];
    }
    return r;
}

inline int encode(const Factors &f, const std::vector<int> &r) {
    int idx = 0;
    for (std::size_t j = 0; j < f.size(); ++j) idx = idx * f[j] + ((r[j] % f[j]) + f[j]) % f[j];
    return idx;
}

inline int add(const Factors &f, int a, int b) {
    auto x = decode(f, a);
    auto y = decode(f, b);
    for (std::size_t j = 0; j < f.size(); ++j) x[j] += y[j];
    return encode(f, x);
}

inline int neg(const Factors &f, int a) {
    auto x = decode(f, a);
    for (int &v : x) v = -v;
    return encode(f, x);
}

inline int sub(const Factors &f, int a, int b) { return add(f, a, neg(f, b)); }

inline C pair(const Factors &f, int c, int g) {
    const auto x = decode(f, c);
    const auto y = decode(f, g);
    double phase = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) phase += static_cast<double>((x[j] * y[j]) % f[j]) / f[j];
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

// Closure of a generating set under addition.
inline std::vector<int> closure(const Factors &f, const std::vector<int> &gens) {
    std::set<int> s{0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur) {
            for (int g : gens) {
                if (s.insert(add(f, a, g)).second) grew = true;
            }
        }
    }
    return {s.begin(), s.end()};
}

// Every subgroup of a group of rank <= 3 is generated by <= 3 elements.
inline std::set<std::vector<int>> all_subgroups(const Factors &f) {
    const int n = order(f);
    std::set<std::vector<int>> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            if (f.size() <= 2) {
                out.insert(closure(f, {a, b}));
                continue;
            }
            for (int c = b; c < n; ++c) out.insert(closure(f, {a, b, c}));
        }
    }
    return out;
}

inline std::vector<int> annihilator(const Factors &f, const std::vector<int> &H) {
    std::vector<int> out;
    for (int c = 0; c < order(f); ++c) {
        bool ok = true;
        for (int h : H) ok = ok && std::abs(pair(f, c, h) - 1.0) < 1e-9;
        if (ok) out.push_back(c);
    }
    return out;
}

inline Vec fourier(const Factors &f, const Vec &psi) {
    const int n = order(f);
    Vec out = Vec::Zero(n);
    for (int c = 0; c < n; ++c) {
        for (int g = 0; g < n; ++g) out[c] += psi[g] * std::conj(pair(f, c, g));
        out[c] /= static_cast<double>(n);
    }
    return out;
}

// KD(g, chi) = conj(chi(g)) (1/N) sum_g' K(g, g') chi(g').
inline Mat kd(const Factors &f, const Mat &K) {
    const int n = order(f);
    Mat out = Mat::Zero(n, n);
    for (int g = 0; g < n; ++g) {
        for (int c = 0; c < n; ++c) {
            C s = 0.0;
            for (int gp = 0; gp < n; ++gp) s += K(g, gp) * pair(f, c, gp);
            out(g, c) = std::conj(pair(f, c, g)) * s / static_cast<double>(n);
        }
    }
    return out;
}

// X0(g, chi) = (1/N) sum_x K(x, x + g) chi(x + g).
inline Mat char_fn0(const Factors &f, const Mat &K) {
    const int n = order(f);
    Mat out = Mat::Zero(n, n);
    for (int g = 0; g < n; ++g) {
        for (int c = 0; c < n; ++c) {
            C s = 0.0;
            for (int x = 0; x < n; ++x) {
                const int y = add(f, x, g);
                s += K(x, y) * pair(f, c, y);
            }
            out(g, c) = s / static_cast<double>(n);
        }
    }
    return out;
}

// (F_symp F)(g, chi) = (1/N) sum F(g', chi') chi(g') conj(chi'(g)).
inline Mat symplectic(const Factors &f, const Mat &F) {
    const int n = order(f);
    Mat out = Mat::Zero(n, n);
    for (int g = 0; g < n; ++g) {
        for (int c = 0; c < n; ++c) {
            C s = 0.0;
            for (int gp = 0; gp < n; ++gp) {
                for (int cp = 0; cp < n; ++cp) s += F(gp, cp) * pair(f, c, gp) * std::conj(pair(f, cp, g));
            }
            out(g, c) = s / static_cast<double>(n);
        }
    }
    return out;
}

// Minimum of ||A x - b|| over the simplex by enumerating every support and
// solving the equality-constrained problem on it (KKT system, pseudo-inverse).
inline double simplex_lsq_min(const Eigen::MatrixXd &A, const Eigen::VectorXd &b) {
    const int n = static_cast<int>(A.cols());
    double best = std::numeric_limits<double>::infinity();
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> S;
        for (int j = 0; j < n; ++j) {
            if (mask & (1 << j)) S.push_back(j);
        }
        const int k = static_cast<int>(S.size());
        Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
        Eigen::VectorXd rhs(k + 1);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) kkt(i, j) = A.col(S[i]).dot(A.col(S[j]));
            kkt(i, k) = 1.0;
            kkt(k, i) = 1.0;
            rhs[i] = A.col(S[i]).dot(b);
        }
        rhs[k] = 1.0;
        const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        bool feasible = std::abs(sol.head(k).sum() - 1.0) < 1e-9;
        for (int i = 0; i < k; ++i) {
            if (sol[i] < -1e-12) feasible = false;
            x[S[i]] = sol[i];
        }
        if (feasible) best = std::min(best, (A * x - b).norm());
    }
    return best;
}

}  // namespace oracle

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

#include "kdlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "kdlab/errors.hpp"
#include "kdlab/kd.hpp"

namespace kdlab {

int VerificationReport::passed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check &c) { return c.passed; }));
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

namespace {

Check upper_bound(std::string name, std::string anchor, double measured, double tol) {
    return Check{std::move(name), std::move(anchor), measured <= tol, measured, tol, {}};
}

// Each suite draws from its own stream so adding samples to one suite does
// not shift the others.
Rng stream(std::uint64_t seed, std::uint64_t salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); }

PhaseSpaceFunction translated(const PhaseSpaceFunction &F, int g0, int chi0) {
    const auto &G = *F.group;
    PhaseSpaceFunction out = PhaseSpaceFunction::zeros(F.group);
    for (int g = 0; g < G.order(); ++g) {
        for (int c = 0; c < G.order(); ++c) out.values(g, c) = F(G.sub(g, g0), G.sub(c, chi0));
    }
    return out;
}

void group_suite(const GroupPtr &G, std::vector<Check> &out) {
    const auto subgroups = enumerate_subgroups(*G);
    int failures = 0;
    for (const Subgroup &H : subgroups) {
        const Subgroup perp = annihilator(*G, H);
        if (G->order() % H.order() != 0) ++failures;
        if (H.order() * perp.order() != G->order()) ++failures;
        if (!(annihilator(*G, perp) == H)) ++failures;
        const auto reps = coset_reps(*G, H);
        if (static_cast<int>(reps.size()) * H.order() != G->order()) ++failures;
    }
    Check c = upper_bound("group.annihilator_duality", "annihilator duality (H-perp)-perp = H", failures, 0.0);
    c.detail = std::to_string(subgroups.size()) + " subgroups";
    out.push_back(c);

    double worst = 0.0;
    for (int chi = 0; chi < G->order(); ++chi) {
        for (int g = 0; g < G->order(); ++g) {
            for (int h = 0; h < G->order(); ++h) {
                worst = std::max(worst, std::abs(G->pair(chi, G->add(g, h)) - G->pair(chi, g) * G->pair(chi, h)));
            }
        }
    }
    out.push_back(upper_bound("group.character_homomorphism", "characters are group morphisms", worst, 1e-12));
}

void harmonic_suite(const GroupPtr &G, const VerifyOptions &opt, std::vector<Check> &out) {
    Rng rng = stream(opt.seed, 1);
    double plancherel = 0.0;
    double round_trip = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const GFunction psi = haar_pure_state(G, rng);
        const DualFunction hat = fourier(psi);
        plancherel = std::max(plancherel, std::abs(l2_norm(hat) - l2_norm(psi)));
        round_trip = std::max(round_trip, (inverse_fourier(hat).values - psi.values).cwiseAbs().maxCoeff());
    }
    out.push_back(upper_bound("harmonic.plancherel", "Plancherel identity for the Fourier transform", plancherel,
                              opt.tol.structural));
    out.push_back(upper_bound("harmonic.round_trip", "Fourier inversion formula", round_trip, opt.tol.structural));

    double poisson = 0.0;
    double mass = 0.0;
    for (const Subgroup &H : enumerate_subgroups(*G)) {
        const Subgroup perp = annihilator(*G, H);
        const DualFunction hat = fourier(haar_density(G, H));
        for (int c = 0; c < G->order(); ++c) {
            poisson = std::max(poisson, std::abs(hat(c) - (perp.contains(c) ? 1.0 : 0.0)));
        }
        mass = std::max(mass, std::abs(haar_mass(*G, H) * dual_haar_mass(perp) - 1.0));
    }
    out.push_back(upper_bound("harmonic.poisson_tate", "Poisson-Tate formula", poisson, opt.tol.exact));
    out.push_back(upper_bound("harmonic.mass_product", "product of Haar measures of H and its annihilator", mass,
                              opt.tol.exact));
}

void kd_suite(const GroupPtr &G, const VerifyOptions &opt, std::vector<Check> &out) {
    Rng rng = stream(opt.seed, 2);
    double unitarity = 0.0;
    double inverse = 0.0;
    double oconnell = 0.0;
    double akd_err = 0.0;
    double trace_err = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const Operator A = random_operator(G, rng);
        const Operator B = random_operator(G, rng);
        const PhaseSpaceFunction ka = kd(A);
        const PhaseSpaceFunction kb = kd(B);
        const double scale = 1.0 + hs_norm(A) * hs_norm(B);
        unitarity = std::max(unitarity, std::abs(hs_inner(A, B) - l2_inner(ka, kb)) / scale);
        inverse = std::max(inverse, max_abs_diff(kd_inverse(ka), A) / (1.0 + hs_norm(A)));
        oconnell = std::max(oconnell, max_abs_diff(ka, symplectic_fourier(char_fn(A, CharOrder::standard1))) /
                                          (1.0 + hs_norm(A)));
        akd_err = std::max(akd_err, max_abs_diff(akd(A), kd(A.adjoint()).conj()) / (1.0 + hs_norm(A)));
        if (i < 5) {
            const PhaseSpaceFunction x0 = char_fn(A, CharOrder::standard0);
            for (int g = 0; g < G->order(); ++g) {
                for (int c = 0; c < G->order(); ++c) {
                    const Complex direct = trace_of_product(A, wh_unitary(G, WHElement{g, c, 1.0}));
                    trace_err = std::max(trace_err, std::abs(direct - x0(g, c)) / (1.0 + hs_norm(A)));
                }
            }
        }
    }
    out.push_back(upper_bound("kd.unitarity", "KD unitarity", unitarity, opt.tol.structural));
    out.push_back(upper_bound("kd.inverse_round_trip", "inverse KD formula", inverse, opt.tol.structural));
    out.push_back(upper_bound("kd.oconnell", "O'Connell formula KD = F_symp(X1)", oconnell, opt.tol.structural));
    out.push_back(upper_bound("kd.akd_identity", "anti-KD is conj(KD of the adjoint)", akd_err, opt.tol.structural));
    out.push_back(upper_bound("kd.char_fn_trace", "characteristic function X0 = tr(A U)", trace_err,
                              opt.tol.structural));

    double born = 0.0;
    double total = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const Operator rho = random_state(G, rng, 1 + i % G->order());
        const Marginals m = marginals(rho, opt.tol.positivity);
        const CMatrix M = rho.matrix();
        for (int g = 0; g < G->order(); ++g) born = std::max(born, std::abs(m.position[g] - rho.kernel(g, g).real()));
        for (int c = 0; c < G->order(); ++c) {
            const CVector e = G->character_table().row(c).transpose() / std::sqrt(static_cast<double>(G->order()));
            born = std::max(born, std::abs(m.momentum[c] - (e.adjoint() * M * e)(0, 0).real()));
        }
        const Complex mass = kd(rho).values.sum() / static_cast<double>(G->order());
        total = std::max(total, std::abs(mass - 1.0));
    }
    out.push_back(upper_bound("kd.marginals", "Born-rule marginals of the KD distribution", born,
                              opt.tol.structural));
    out.push_back(upper_bound("kd.total_mass", "KD total mass equals the trace", total, opt.tol.structural));

    double kn = 0.0;
    std::normal_distribution<double> normal;
    for (int i = 0; i < std::min(opt.samples, 20); ++i) {
        CVector f(G->order());
        CVector h(G->order());
        for (int k = 0; k < G->order(); ++k) f[k] = Complex(normal(rng), normal(rng));
        for (int k = 0; k < G->order(); ++k) h[k] = Complex(normal(rng), normal(rng));
        const GFunction fg(G, f);
        const DualFunction hd(G, h);
        kn = std::max(kn, max_abs_diff(kd(kohn_nirenberg(fg, hd)), tensor(fg, hd)) / (1.0 + f.norm() * h.norm()));
    }
    out.push_back(upper_bound("kd.kohn_nirenberg_symbol", "KD of the Kohn-Nirenberg quantisation is f (x) h", kn,
                              opt.tol.structural));
}

void wh_suite(const GroupPtr &G, const VerifyOptions &opt, const std::vector<KdPureState> &family,
              std::vector<Check> &out) {
    Rng rng = stream(opt.seed, 3);
    std::uniform_int_distribution<int> pick(0, G->order() - 1);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    auto random_wh = [&] { return WHElement{pick(rng), pick(rng), std::polar(1.0, angle(rng))}; };

    double rep = 0.0;
    double cov = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const WHElement a = random_wh();
        const WHElement b = random_wh();
        const Operator lhs = wh_unitary(G, a) * wh_unitary(G, b);
        rep = std::max(rep, max_abs_diff(lhs, wh_unitary(G, wh_mul(*G, a, b))) / G->order());
        const Operator A = random_operator(G, rng);
        const PhaseSpaceFunction moved = kd(wh_conjugate(A, a));
        cov = std::max(cov, max_abs_diff(moved, translated(kd(A), a.g, a.chi)) / (1.0 + hs_norm(A)));
    }
    out.push_back(upper_bound("wh.representation", "Weyl-Heisenberg group law U(a)U(b) = U(ab)", rep,
                              opt.tol.structural));
    out.push_back(upper_bound("wh.covariance", "Weyl-Heisenberg covariance of the KD distribution", cov,
                              opt.tol.structural));

    int escaped = 0;
    for (const KdPureState &s : family) {
        const WHElement a = random_wh();
        const GFunction moved = wh_act(s.vector, a);
        if (!recognize_kd_positive_pure(family, moved, 1e-9)) ++escaped;
    }
    out.push_back(upper_bound("wh.family_closure", "KD-positive pure family is closed under Weyl-Heisenberg",
                              escaped, 0.0));
}

void classify_suite(const GroupPtr &G, const VerifyOptions &opt, const std::vector<KdPureState> &family,
                    std::vector<Check> &out) {
    const std::size_t expected = static_cast<std::size_t>(G->order()) * enumerate_subgroups(*G).size();
    Check size{"classify.family_size", "classification of KD-positive pure states",
               family.size() == expected, static_cast<double>(family.size()), static_cast<double>(expected), {}};
    size.detail = "expected |G| * #subgroups";
    out.push_back(size);

    double indicator = 0.0;
    double negativity = 0.0;
    for (const KdPureState &s : family) {
        const PhaseSpaceFunction table = kd(s.projector());
        indicator = std::max(indicator, max_abs_diff(table, expected_kd(G, s)));
        negativity = std::max(negativity, -table.values.real().minCoeff());
    }
    out.push_back(upper_bound("classify.indicator_formula", "KD distribution of a subgroup state is an indicator",
                              std::max(indicator, negativity), opt.tol.exact));

    Rng rng = stream(opt.seed, 4);
    int unrecognised = 0;
    int positive = 0;
    for (int i = 0; i < opt.samples * 10; ++i) {
        const GFunction psi = haar_pure_state(G, rng);
        const PhaseSpaceFunction table = kd_pure(psi);
        const bool kd_positive = table.values.real().minCoeff() >= -opt.tol.positivity &&
                                 table.values.imag().cwiseAbs().maxCoeff() <= opt.tol.positivity;
        if (!kd_positive) continue;
        ++positive;
        if (!recognize_kd_positive_pure(family, psi, opt.tol.positivity)) ++unrecognised;
    }
    int accepted_perturbed = 0;
    std::normal_distribution<double> normal;
    // Perturbations orthogonal to the member; on the trivial group there are none.
    for (const KdPureState &s : family) {
        if (G->order() == 1) break;
        CVector d(G->order());
        for (int k = 0; k < G->order(); ++k) d[k] = Complex(normal(rng), normal(rng));
        d -= s.vector.values * (s.vector.values.dot(d) / s.vector.values.squaredNorm());
        CVector v = s.vector.values + 1e-3 * std::sqrt(static_cast<double>(G->order())) * d / d.norm();
        v *= std::sqrt(static_cast<double>(G->order())) / v.norm();
        if (recognize_kd_positive_pure(family, GFunction(G, v), opt.tol.positivity)) ++accepted_perturbed;
    }
    Check comp = upper_bound("classify.completeness", "every KD-positive pure state is a subgroup state",
                             unrecognised + accepted_perturbed, 0.0);
    comp.detail = std::to_string(positive) + " KD-positive samples; " + std::to_string(accepted_perturbed) +
                  " perturbed members accepted";
    out.push_back(comp);
}

void fragment_suite(const GroupPtr &G, const VerifyOptions &opt, const PureFamilyBasis &basis,
                    std::vector<Check> &out) {
    Rng rng = stream(opt.seed, 5);
    int disagreements = 0;
    double worst_ratio = 1.0;
    for (int i = 0; i < opt.samples; ++i) {
        const Operator A = random_hermitian(G, rng);
        const KdRealityResult r = is_kd_real(A, opt.tol.structural);
        if (!r.methods_agree()) ++disagreements;
        if (!r.verdict && r.direct_violation > 0.0 && r.support_violation > 0.0) {
            const double ratio = r.direct_violation / r.support_violation;
            worst_ratio = std::max({worst_ratio, ratio, 1.0 / ratio});
        }
        const KdRealityResult p = is_kd_real(project_kd_real(A), opt.tol.structural);
        if (!p.verdict || !p.methods_agree()) ++disagreements;
    }
    Check agree = upper_bound("fragment.reality_methods_agree", "support criterion for KD-reality",
                              disagreements + (worst_ratio > 10.0 ? 1 : 0), 0.0);
    std::ostringstream detail;
    detail << "worst violation ratio " << std::setprecision(6) << worst_ratio;
    agree.detail = detail.str();
    out.push_back(agree);

    const int dim = kd_real_dimension(*G);
    Check span{"fragment.span_dimension", "span of KD-positive pure states equals the KD-real operators",
               basis.span_dimension() == dim, static_cast<double>(basis.span_dimension()), static_cast<double>(dim),
               "expected kd_real_dimension"};
    out.push_back(span);

    int chain_failures = 0;
    double certificate = 0.0;
    for (const KdPureState &s : basis.states()) {
        const Operator P = s.projector();
        if (!is_kd_positive_state(P, opt.tol.positivity).verdict) ++chain_failures;
        if (!is_kd_real(P, opt.tol.structural).verdict) ++chain_failures;
        if (span_membership(basis, P, opt.tol.membership).verdict != Verdict::inside) ++chain_failures;
        const MembershipResult m = conv_membership(basis, P, opt.tol);
        if (m.verdict != Verdict::inside) ++chain_failures;
        certificate = std::max(certificate, hs_norm(basis.combination(m.coefficients) - P));
    }
    out.push_back(upper_bound("fragment.inclusion_chain", "pure KD-positive states lie in every fragment level",
                              chain_failures, 0.0));

    std::gamma_distribution<double> gamma(1.0, 1.0);
    for (int i = 0; i < std::min(opt.samples, 20); ++i) {
        Eigen::VectorXd w(static_cast<Eigen::Index>(basis.states().size()));
        for (Eigen::Index k = 0; k < w.size(); ++k) w[k] = gamma(rng);
        w /= w.sum();
        const Operator rho = basis.combination(w);
        const MembershipResult m = conv_membership(basis, rho, opt.tol);
        if (m.verdict != Verdict::inside) certificate = std::max(certificate, 1.0);
        certificate = std::max(certificate, hs_norm(basis.combination(m.coefficients) - rho));
    }
    out.push_back(upper_bound("fragment.hull_certificates", "hull certificates reconstruct the state", certificate,
                              opt.tol.membership));

    WitnessOptions wo;
    wo.seed = opt.seed;
    wo.budget = opt.witness_budget;
    wo.tol = opt.tol;
    const WitnessResult w = find_conv_gap_witness(basis, wo);
    double mismatch = 0.0;
    if (w.found) {
        mismatch = std::abs(evaluate_gap(basis, w.rho, w.W) - w.gap);
        if (!is_kd_positive_state(w.rho, opt.tol.positivity).verdict) mismatch = 1.0;
    }
    Check witness = upper_bound("fragment.witness_search", "convex hull of KD-positive pure states", mismatch,
                                opt.tol.membership);
    std::ostringstream wd;
    wd << std::setprecision(6);
    if (w.found) {
        wd << "gap " << w.verified_gap << " found after " << w.steps_used << " steps";
    } else {
        wd << "no witness found at budget " << opt.witness_budget;
    }
    witness.detail = wd.str();
    out.push_back(witness);
}

void wigner_suite(const GroupPtr &G, const VerifyOptions &opt, std::vector<Check> &out) {
    Rng rng = stream(opt.seed, 6);
    if (!G->doubling_invertible()) {
        bool refused = false;
        try {
            (void)char_fn(Operator::maximally_mixed(G), CharOrder::half);
        } catch (const UnsupportedOrderError &) {
            refused = true;
        }
        Check c{"wigner.half_order", "doubling map and the Wigner function", refused, refused ? 0.0 : 1.0, 0.0,
                "even factor: half order must be refused"};
        out.push_back(c);
        return;
    }
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        const Operator A = random_hermitian(G, rng);
        worst = std::max(worst, wigner(A).values.imag().cwiseAbs().maxCoeff() / (1.0 + hs_norm(A)));
        const Operator B = random_operator(G, rng);
        worst = std::max(worst, max_abs_diff(wigner(B).conj(), wigner(B.adjoint())) / (1.0 + hs_norm(B)));
    }
    out.push_back(upper_bound("wigner.half_order", "doubling map and the Wigner function", worst,
                              opt.tol.structural));
}

void circle_suite(const VerifyOptions &opt, std::vector<Check> &out) {
    Rng rng = stream(opt.seed, 7);
    const int band = 4;
    const int grid = 256;
    double forward = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < std::min(opt.samples, 20); ++i) {
        std::vector<double> diag(2 * band + 1);
        double total = 0.0;
        for (double &d : diag) total += (d = unit(rng));
        for (double &d : diag) d /= total;
        forward = std::max(forward, circle_negativity_search(BandLimitedOperator::diagonal(band, diag), grid).violation());
    }
    out.push_back(upper_bound("circle.forward", "diagonal states on the circle are KD-positive", forward,
                              opt.tol.exact));

    int missed = 0;
    int disagreements = 0;
    for (int i = 0; i < std::min(opt.samples, 50); ++i) {
        const BandLimitedOperator rho = random_circle_state(band, rng, 1 + i % 3);
        const CircleSearchReport r = circle_negativity_search(rho, grid);
        if (!(r.violation() > 1e-6)) ++missed;
        if (circle_is_classical(rho, 1e-6) != (r.violation() <= 1e-6)) ++disagreements;
    }
    out.push_back(upper_bound("circle.converse", "KD-positive states on the circle are diagonal",
                              missed + disagreements, 0.0));
}

}  // namespace

VerificationReport verify_all(const GroupPtr &G, const VerifyOptions &options) {
    VerificationReport report;
    report.suite = "all";
    report.group = G;
    report.seed = options.seed;
    const PureFamilyBasis basis(G);
    report.family_size = basis.states().size();

    group_suite(G, report.checks);
    harmonic_suite(G, options, report.checks);
    kd_suite(G, options, report.checks);
    wh_suite(G, options, basis.states(), report.checks);
    classify_suite(G, options, basis.states(), report.checks);
    fragment_suite(G, options, basis, report.checks);
    wigner_suite(G, options, report.checks);
    circle_suite(options, report.checks);

    std::sort(report.checks.begin(), report.checks.end(),
              [](const Check &a, const Check &b) { return a.name < b.name; });
    report.timestamp = utc_timestamp();
    return report;
}

Json to_json(const VerificationReport &report) {
    Json checks = Json::array();
    for (const Check &c : report.checks) {
        Json j{{"name", c.name},
               {"anchor", c.anchor},
               {"status", c.passed ? "pass" : "fail"},
               {"measured", c.measured},
               {"tolerance", c.tolerance}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(j);
    }
    return Json{{"suite", report.suite},
                {"group", report.group->spec()},
                {"seed", report.seed},
                {"family_size", report.family_size},
                {"timestamp", report.timestamp},
                {"summary", Json{{"passed", report.passed()},
                                 {"failed", report.failed()},
                                 {"total", report.checks.size()},
                                 {"status", report.ok() ? "pass" : "fail"}}},
                {"checks", checks}};
}

std::string to_table(const VerificationReport &report) {
    std::ostringstream out;
    out << "suite " << report.suite << " on " << report.group->spec() << " (seed " << report.seed
        << ", family size " << report.family_size << ")\n";
    std::size_t width = 5;
    for (const Check &c : report.checks) width = std::max(width, c.name.size());
    out << std::setprecision(6);
    for (const Check &c : report.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name
            << "  measured " << std::setw(12) << c.measured << " tol " << std::setw(12) << c.tolerance << "  "
            << c.anchor;
        if (!c.detail.empty()) out << " [" << c.detail << "]";
        out << '\n';
    }
    out << report.passed() << "/" << report.checks.size() << " checks passed\n";
    return out.str();
}

}  // namespace kdlab

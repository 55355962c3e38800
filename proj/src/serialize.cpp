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

#include "kdlab/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "kdlab/errors.hpp"

namespace kdlab {

namespace {

void expect(bool ok, const std::string &what) {
    if (!ok) throw ParseError(what);
}

double number(const Json &j, const char *what) {
    expect(j.is_number(), std::string(what) + " must be a number");
    return j.get<double>();
}

// [re, im] pair, {"re":..,"im":..} object, or a bare real number.
Complex pair_from_json(const Json &j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array()) {
        expect(j.size() == 2, "complex pair must have two entries");
        return Complex(number(j[0], "real part"), number(j[1], "imaginary part"));
    }
    return complex_from_json(j);
}

Json pair_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json residues_json(const FiniteAbelianGroup &G, int index) { return Json(G.residues(index)); }

std::string dash_joined(const FiniteAbelianGroup &G, int index) {
    std::string out;
    for (int r : G.residues(index)) {
        if (!out.empty()) out += '-';
        out += std::to_string(r);
    }
    return out;
}

GroupPtr pick_group(const Json &j, const GroupPtr &G) {
    if (j.is_object() && j.contains("group")) {
        GroupPtr embedded = group_from_json(j.at("group"));
        if (G && !(*G == *embedded)) {
            throw ParseError("document group " + embedded->spec() + " does not match " + G->spec());
        }
        return G ? G : embedded;
    }
    expect(G != nullptr, "document has no \"group\" field");
    return G;
}

CMatrix square_from_pairs(const Json &arr, int n, const char *what) {
    expect(arr.is_array(), std::string(what) + " must be an array");
    CMatrix m(n, n);
    if (arr.size() == static_cast<std::size_t>(n) && n > 0 && arr[0].is_array() &&
        arr[0].size() == static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) {  // nested rows
            for (int j = 0; j < n; ++j) m(i, j) = pair_from_json(arr[i][j]);
        }
        return m;
    }
    expect(arr.size() == static_cast<std::size_t>(n) * n,
           std::string(what) + " needs " + std::to_string(n * n) + " entries, got " + std::to_string(arr.size()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = pair_from_json(arr[static_cast<std::size_t>(i) * n + j]);
    }
    return m;
}

Json square_to_pairs(const CMatrix &m) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) arr.push_back(pair_to_json(m(i, j)));
    }
    return arr;
}

template <class F>
auto guarded(F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed JSON document: ") + e.what());
    }
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
}

Json to_json(const FiniteAbelianGroup &G) { return Json{{"factors", G.factors()}}; }

GroupPtr group_from_json(const Json &j) {
    return guarded([&] {
        if (j.is_string()) return parse_group(j.get<std::string>());
        expect(j.is_object() && j.contains("factors"), "group must be {\"factors\":[...]} or a spec string");
        const Json &f = j.at("factors");
        expect(f.is_array(), "factors must be an array");
        std::vector<int> factors;
        for (const Json &x : f) {
            expect(x.is_number_integer() && x.get<long long>() >= 1, "factors must be positive integers");
            factors.push_back(x.get<int>());
        }
        if (factors.size() > 1) {
            for (int n : factors) expect(n >= 2, "a product of groups cannot contain Z1");
        }
        return make_group(factors);
    });
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json &j) {
    return guarded([&] {
        expect(j.is_object() && j.contains("re") && j.contains("im"), "complex number must be {\"re\",\"im\"}");
        return Complex(number(j.at("re"), "re"), number(j.at("im"), "im"));
    });
}

Json element_to_json(const FiniteAbelianGroup &G, int g) { return residues_json(G, g); }

int element_from_json(const FiniteAbelianGroup &G, const Json &j) {
    return guarded([&] {
        if (j.is_number_integer()) {
            const long long v = j.get<long long>();
            expect(v >= 0 && v < G.order(), "element index out of range");
            return static_cast<int>(v);
        }
        expect(j.is_array(), "element must be a residue tuple or an index");
        std::vector<int> r;
        for (const Json &x : j) {
            expect(x.is_number_integer(), "residues must be integers");
            r.push_back(x.get<int>());
        }
        expect(static_cast<int>(r.size()) == G.rank() || (G.is_trivial() && r.size() <= 1),
               "residue tuple has the wrong length for " + G.spec());
        try {
            return G.index_of_residues(r);
        } catch (const std::exception &e) {
            throw ParseError(e.what());
        }
    });
}

Json to_json(const GFunction &psi) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < psi.values.size(); ++i) arr.push_back(to_json(psi.values[i]));
    return arr;
}

GFunction gfunction_from_json(const GroupPtr &G, const Json &j) {
    return guarded([&] {
        GroupPtr group = G;
        const Json *values = &j;
        if (j.is_object()) {
            group = pick_group(j, G);
            expect(j.contains("values"), "function document needs \"values\"");
            values = &j.at("values");
        }
        expect(group != nullptr, "function document has no group");
        expect(values->is_array() && values->size() == static_cast<std::size_t>(group->order()),
               "function on " + group->spec() + " needs " + std::to_string(group->order()) + " values");
        CVector v(group->order());
        for (int i = 0; i < group->order(); ++i) v[i] = pair_from_json((*values)[i]);
        return GFunction(group, std::move(v));
    });
}

Json to_json(const DualFunction &phi) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < phi.values.size(); ++i) arr.push_back(to_json(phi.values[i]));
    return arr;
}

Json to_json(const FiniteAbelianGroup &G, const WHElement &a) {
    return Json{{"g", residues_json(G, a.g)}, {"chi", residues_json(G, a.chi)}, {"z", to_json(a.z)}};
}

WHElement wh_from_json(const FiniteAbelianGroup &G, const Json &j) {
    return guarded([&] {
        expect(j.is_object() && j.contains("g") && j.contains("chi"), "WH element needs \"g\" and \"chi\"");
        WHElement a;
        a.g = element_from_json(G, j.at("g"));
        a.chi = element_from_json(G, j.at("chi"));
        if (j.contains("z")) a.z = pair_from_json(j.at("z"));
        return a;
    });
}

Json to_json(const Operator &A) { return Json{{"group", to_json(*A.group)}, {"kernel", square_to_pairs(A.kernel)}}; }

Operator operator_from_json(const Json &j, const GroupPtr &G) {
    return guarded([&] {
        expect(j.is_object(), "operator document must be an object");
        const GroupPtr group = pick_group(j, G);
        expect(j.contains("kernel"), "operator document needs \"kernel\"");
        return Operator(group, square_from_pairs(j.at("kernel"), group->order(), "kernel"));
    });
}

Json to_json(const PhaseSpaceFunction &F) {
    return Json{{"group", to_json(*F.group)}, {"values", square_to_pairs(F.values)}};
}

PhaseSpaceFunction phase_space_from_json(const Json &j, const GroupPtr &G) {
    return guarded([&] {
        expect(j.is_object(), "phase-space document must be an object");
        const GroupPtr group = pick_group(j, G);
        expect(j.contains("values"), "phase-space document needs \"values\"");
        return PhaseSpaceFunction(group, square_from_pairs(j.at("values"), group->order(), "values"));
    });
}

std::string to_csv(const PhaseSpaceFunction &F) {
    const auto &G = *F.group;
    std::ostringstream out;
    out << "g,chi,re,im\n";
    char buf[64];
    for (int g = 0; g < G.order(); ++g) {
        const std::string gs = dash_joined(G, g);
        for (int c = 0; c < G.order(); ++c) {
            out << gs << ',' << dash_joined(G, c) << ',';
            std::snprintf(buf, sizeof buf, "%.17g", F(g, c).real());
            out << buf << ',';
            std::snprintf(buf, sizeof buf, "%.17g", F(g, c).imag());
            out << buf << '\n';
        }
    }
    return out.str();
}

Json to_json(const FiniteAbelianGroup &G, const Subgroup &H) {
    Json elements = Json::array();
    for (int h : H.elements()) elements.push_back(residues_json(G, h));
    return Json{{"order", H.order()}, {"indices", H.elements()}, {"elements", elements}};
}

Json to_json(const FiniteAbelianGroup &G, const KdPureState &s) {
    return Json{{"H", s.H.elements()},
                {"g", residues_json(G, s.g_rep)},
                {"chi", residues_json(G, s.chi_rep)},
                {"vector", to_json(s.vector)}};
}

Json to_json(const FiniteAbelianGroup &G, const std::vector<KdPureState> &family) {
    Json arr = Json::array();
    for (const KdPureState &s : family) arr.push_back(to_json(G, s));
    return arr;
}

Json to_json(const KdRealityResult &r) {
    return Json{{"kd_real", r.verdict},
                {"direct_violation", r.direct_violation},
                {"support_violation", r.support_violation},
                {"direct_verdict", r.direct_verdict},
                {"support_verdict", r.support_verdict},
                {"methods_agree", r.methods_agree()}};
}

Json to_json(const KdPositivityResult &r) {
    return Json{{"kd_positive", r.verdict},
                {"max_imag", r.max_imag},
                {"min_real", r.min_real},
                {"worst_violation", r.worst_violation()}};
}

Json to_json(const PureFamilyBasis &basis, const MembershipResult &m) {
    const auto &G = *basis.group();
    Json j{{"verdict", to_string(m.verdict)},
           {"residual", m.residual},
           {"span_dimension", m.span_dimension},
           {"family_size", basis.states().size()}};
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < basis.states().size(); ++i) {
        const double c = m.coefficients.size() ? m.coefficients[static_cast<Eigen::Index>(i)] : 0.0;
        if (c == 0.0) continue;
        const KdPureState &s = basis.states()[i];
        coeffs.push_back(Json{{"index", i},
                              {"H", s.H.elements()},
                              {"g", residues_json(G, s.g_rep)},
                              {"chi", residues_json(G, s.chi_rep)},
                              {"coefficient", c}});
    }
    j["coefficients"] = coeffs;
    if (m.witness) {
        j["witness"] = to_json(*m.witness);
        j["gap"] = m.gap;
    }
    if (m.iterations) j["iterations"] = m.iterations;
    if (!m.detail.empty()) j["detail"] = m.detail;
    return j;
}

Json to_json(const ProjectionResult &p) {
    return Json{{"state", to_json(p.rho)},
                {"distance", p.distance},
                {"set_gap", p.set_gap},
                {"kd_violation", p.kd_violation},
                {"iterations", p.iterations},
                {"converged", p.converged}};
}

Json to_json(const PureFamilyBasis &basis, const WitnessResult &w, const WitnessOptions &options) {
    Json j{{"group", to_json(*basis.group())},
           {"found", w.found},
           {"seed", options.seed},
           {"budget", options.budget},
           {"steps_used", w.steps_used},
           {"directions", w.directions}};
    if (w.found) {
        j["gap"] = w.gap;
        j["verified_gap"] = w.verified_gap;
        j["state"] = to_json(w.rho);
        j["witness"] = to_json(w.W);
    } else {
        j["note"] = "no witness found at this budget";
    }
    return j;
}

Json to_json(const BandLimitedOperator &A) { return Json{{"K", A.band()}, {"coeffs", square_to_pairs(A.dense())}}; }

BandLimitedOperator band_limited_from_json(const Json &j) {
    return guarded([&] {
        expect(j.is_object() && j.contains("K") && j.contains("coeffs"), "circle operator needs \"K\" and \"coeffs\"");
        expect(j.at("K").is_number_integer() && j.at("K").get<long long>() >= 0, "K must be a nonnegative integer");
        const int band = j.at("K").get<int>();
        return BandLimitedOperator::from_dense(band, square_from_pairs(j.at("coeffs"), 2 * band + 1, "coeffs"));
    });
}

Json to_json(const CircleSearchReport &r) {
    return Json{{"grid_size", r.grid_size},
                {"max_imag", r.max_imag},
                {"imag_location", Json{{"m", r.imag_mode}, {"theta", r.imag_theta}}},
                {"min_real", r.min_real},
                {"real_location", Json{{"m", r.real_mode}, {"theta", r.real_theta}}},
                {"violation", r.violation()}};
}

}  // namespace kdlab

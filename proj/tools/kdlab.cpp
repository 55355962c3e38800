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

// kdlab command-line front end. Every command writes one document (JSON by
// default) to stdout or --out.
//
// Exit codes:
//   0  success / "inside" membership verdict
//   1  parse or configuration error
//   2  a computation precondition was violated
//   3  "outside" membership verdict
//   4  "inconclusive" membership verdict
//   5  `verify all` finished with failing checks

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kdlab/errors.hpp"
#include "kdlab/kd.hpp"
#include "kdlab/verify.hpp"

namespace {

using namespace kdlab;

enum ExitCode : int { kOk = 0, kConfig = 1, kPrecondition = 2, kOutside = 3, kInconclusive = 4, kFailed = 5 };

struct RunConfig {
    std::string group_spec;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_path;
    long budget = -1;
    Tolerances tol;

    std::string input;
    std::string order = "0";
    std::string kind = "kd";
    std::string element;
    std::string g_text;
    std::string chi_text;
    double phase_turns = 0.0;
    int grid = 0;
    int samples = 100;
};

// --- output ---------------------------------------------------------------

void emit(const RunConfig &cfg, const std::string &text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file '" + cfg.out_path + "'");
    f << text;
}

std::string six_digits(double v) {
    std::ostringstream s;
    s << std::setprecision(6) << v;
    return s.str();
}

// Flat "path: value" listing used for --format table on generic documents.
void flatten(const Json &j, const std::string &prefix, std::ostringstream &out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_array() && !j.empty() && (j[0].is_structured())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_number_float()) {
        out << prefix << ": " << six_digits(j.get<double>()) << '\n';
    } else {
        out << prefix << ": " << j.dump() << '\n';
    }
}

std::string phase_space_table(const PhaseSpaceFunction &F) {
    const auto &G = *F.group;
    std::ostringstream out;
    out << std::left << std::setw(12) << "g" << std::setw(12) << "chi" << std::setw(14) << "re"
        << "im\n";
    for (int g = 0; g < G.order(); ++g) {
        for (int c = 0; c < G.order(); ++c) {
            out << std::setw(12) << G.format_element(g) << std::setw(12) << G.format_element(c) << std::setw(14)
                << six_digits(F(g, c).real()) << six_digits(F(g, c).imag()) << '\n';
        }
    }
    return out.str();
}

void emit_json(const RunConfig &cfg, const Json &doc) {
    if (cfg.format == "json") {
        emit(cfg, doc.dump(2) + "\n");
    } else if (cfg.format == "table") {
        std::ostringstream out;
        flatten(doc, "", out);
        emit(cfg, out.str());
    } else {
        throw ParseError("--format csv is only available for phase-space tables");
    }
}

void emit_phase_space(const RunConfig &cfg, const PhaseSpaceFunction &F) {
    if (cfg.format == "csv") {
        emit(cfg, to_csv(F));
    } else if (cfg.format == "table") {
        emit(cfg, phase_space_table(F));
    } else {
        emit(cfg, to_json(F).dump(2) + "\n");
    }
}

// --- input ----------------------------------------------------------------

GroupPtr require_group(const RunConfig &cfg) {
    if (cfg.group_spec.empty()) throw ParseError("--group is required for this command");
    return parse_group(cfg.group_spec);
}

Json read_document(const std::string &path) {
    if (path.empty()) throw ParseError("an input JSON file is required (--input/--operator/--state)");
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open input file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_json(buf.str());
}

// Group from --group when given, otherwise from the document.
Operator read_operator(const RunConfig &cfg) {
    const Json doc = read_document(cfg.input);
    return operator_from_json(doc, cfg.group_spec.empty() ? nullptr : parse_group(cfg.group_spec));
}

int parse_tuple(const FiniteAbelianGroup &G, const std::string &text) {
    std::vector<int> r;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, text.find(',') != std::string::npos ? ',' : '-')) {
        try {
            std::size_t used = 0;
            r.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw ParseError("bad residue tuple '" + text + "'");
        }
    }
    if (static_cast<int>(r.size()) != std::max(1, G.rank())) {
        throw ParseError("residue tuple '" + text + "' has the wrong length for " + G.spec());
    }
    if (G.is_trivial()) return 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0 || r[i] >= G.factors()[i]) throw ParseError("residue out of range in '" + text + "'");
    }
    return G.index_of_residues(r);
}

WHElement read_wh(const RunConfig &cfg, const FiniteAbelianGroup &G) {
    if (!cfg.element.empty()) return wh_from_json(G, read_document(cfg.element));
    WHElement a;
    if (!cfg.g_text.empty()) a.g = parse_tuple(G, cfg.g_text);
    if (!cfg.chi_text.empty()) a.chi = parse_tuple(G, cfg.chi_text);
    a.z = std::polar(1.0, 2.0 * std::numbers::pi * cfg.phase_turns);
    return a;
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::inside:
            return kOk;
        case Verdict::outside:
            return kOutside;
        case Verdict::inconclusive:
            return kInconclusive;
    }
    return kInconclusive;
}

// --- commands ---------------------------------------------------------------

int cmd_group_info(const RunConfig &cfg) {
    const GroupPtr G = require_group(cfg);
    const auto subgroups = enumerate_subgroups(*G);
    emit_json(cfg, Json{{"group", to_json(*G)},
                        {"spec", G->spec()},
                        {"order", G->order()},
                        {"rank", G->rank()},
                        {"doubling_invertible", G->doubling_invertible()},
                        {"subgroup_count", subgroups.size()},
                        {"kd_positive_pure_count", subgroups.size() * static_cast<std::size_t>(G->order())},
                        {"kd_real_dimension", kd_real_dimension(*G)}});
    return kOk;
}

int cmd_group_subgroups(const RunConfig &cfg) {
    const GroupPtr G = require_group(cfg);
    Json list = Json::array();
    for (const Subgroup &H : enumerate_subgroups(*G)) {
        Json h = to_json(*G, H);
        h["annihilator"] = annihilator(*G, H).elements();
        h["coset_reps"] = coset_reps(*G, H);
        list.push_back(h);
    }
    emit_json(cfg, Json{{"group", to_json(*G)}, {"count", list.size()}, {"subgroups", list}});
    return kOk;
}

int cmd_kd_compute(const RunConfig &cfg) {
    const Operator A = read_operator(cfg);
    if (cfg.kind == "kd") {
        emit_phase_space(cfg, kd(A));
    } else if (cfg.kind == "akd") {
        emit_phase_space(cfg, akd(A));
    } else if (cfg.kind == "wigner") {
        emit_phase_space(cfg, wigner(A));
    } else {
        throw ParseError("--kind must be kd, akd or wigner");
    }
    return kOk;
}

int cmd_kd_invert(const RunConfig &cfg) {
    const Json doc = read_document(cfg.input);
    const PhaseSpaceFunction F = phase_space_from_json(doc, cfg.group_spec.empty() ? nullptr : parse_group(cfg.group_spec));
    emit_json(cfg, to_json(kd_inverse(F)));
    return kOk;
}

int cmd_charfn(const RunConfig &cfg) {
    const Operator A = read_operator(cfg);
    emit_phase_space(cfg, char_fn(A, parse_char_order(cfg.order)));
    return kOk;
}

int cmd_wh_act(const RunConfig &cfg) {
    const Json doc = read_document(cfg.input);
    GroupPtr G = cfg.group_spec.empty() ? nullptr : parse_group(cfg.group_spec);
    if (doc.is_object() && doc.contains("kernel")) {
        const Operator A = operator_from_json(doc, G);
        const WHElement a = read_wh(cfg, *A.group);
        a.validate(*A.group);
        emit_json(cfg, Json{{"element", to_json(*A.group, a)}, {"operator", to_json(wh_conjugate(A, a))}});
    } else {
        if (!G && doc.is_object() && doc.contains("group")) G = group_from_json(doc.at("group"));
        if (!G) throw ParseError("--group is required for a bare vector");
        const GFunction psi = gfunction_from_json(G, doc);
        const WHElement a = read_wh(cfg, *G);
        a.validate(*G);
        emit_json(cfg, Json{{"element", to_json(*G, a)}, {"vector", to_json(wh_act(psi, a))}});
    }
    return kOk;
}

int cmd_pure_enumerate(const RunConfig &cfg) {
    const GroupPtr G = require_group(cfg);
    const auto family = enumerate_kd_positive_pure(G);
    emit_json(cfg, Json{{"group", to_json(*G)}, {"count", family.size()}, {"states", to_json(*G, family)}});
    return kOk;
}

int cmd_pure_recognize(const RunConfig &cfg) {
    const Json doc = read_document(cfg.input);
    GroupPtr G = cfg.group_spec.empty() ? nullptr : parse_group(cfg.group_spec);
    if (!G && doc.is_object() && doc.contains("group")) G = group_from_json(doc.at("group"));
    if (!G) throw ParseError("--group is required for a bare vector");
    const GFunction psi = gfunction_from_json(G, doc);
    const auto family = enumerate_kd_positive_pure(G);
    const auto hit = recognize_kd_positive_pure(family, psi, cfg.tol.positivity);
    Json out{{"group", to_json(*G)}, {"recognized", hit.has_value()}};
    if (hit) {
        out["member"] = to_json(*G, family[*hit]);
        out["overlap"] = std::abs(l2_inner(family[*hit].vector, psi));
    }
    emit_json(cfg, out);
    return kOk;
}

int cmd_check_kd_real(const RunConfig &cfg) {
    const Operator A = read_operator(cfg);
    emit_json(cfg, to_json(is_kd_real(A, cfg.tol.structural)));
    return kOk;
}

int cmd_check_kd_positive(const RunConfig &cfg) {
    const Operator rho = read_operator(cfg);
    emit_json(cfg, to_json(is_kd_positive_state(rho, cfg.tol.positivity, cfg.tol.positivity)));
    return kOk;
}

int cmd_member_span(const RunConfig &cfg) {
    const Operator A = read_operator(cfg);
    const PureFamilyBasis basis(A.group);
    const MembershipResult m = span_membership(basis, A, cfg.tol.membership);
    Json out = to_json(basis, m);
    out["kd_real_dimension"] = kd_real_dimension(*A.group);
    emit_json(cfg, out);
    return verdict_code(m.verdict);
}

int cmd_member_conv(const RunConfig &cfg) {
    const Operator rho = read_operator(cfg);
    const PureFamilyBasis basis(rho.group);
    const MembershipResult m = conv_membership(basis, rho, cfg.tol);
    emit_json(cfg, to_json(basis, m));
    return verdict_code(m.verdict);
}

int cmd_witness_search(const RunConfig &cfg) {
    const GroupPtr G = require_group(cfg);
    const PureFamilyBasis basis(G);
    WitnessOptions options;
    options.seed = cfg.seed;
    if (cfg.budget >= 0) options.budget = cfg.budget;
    options.tol = cfg.tol;
    const WitnessResult w = find_conv_gap_witness(basis, options);
    emit_json(cfg, to_json(basis, w, options));
    return kOk;
}

BandLimitedOperator read_circle(const RunConfig &cfg) { return band_limited_from_json(read_document(cfg.input)); }

int cmd_circle_check(const RunConfig &cfg) {
    const BandLimitedOperator A = read_circle(cfg);
    emit_json(cfg, Json{{"K", A.band()},
                        {"classical", circle_is_classical(A, cfg.tol.positivity)},
                        {"off_diagonal_mass", off_diagonal_mass(A)},
                        {"hs_norm_squared", A.hs_norm_squared()}});
    return kOk;
}

int cmd_circle_search(const RunConfig &cfg) {
    const BandLimitedOperator A = read_circle(cfg);
    const int grid = cfg.grid > 0 ? cfg.grid : std::max(1024, 4 * A.band() + 4);
    Json out = to_json(circle_negativity_search(A, grid));
    out["K"] = A.band();
    emit_json(cfg, out);
    return kOk;
}

int cmd_verify_all(const RunConfig &cfg) {
    const GroupPtr G = require_group(cfg);
    VerifyOptions options;
    options.seed = cfg.seed;
    options.samples = cfg.samples;
    options.tol = cfg.tol;
    if (cfg.budget >= 0) options.witness_budget = cfg.budget;
    const VerificationReport report = verify_all(G, options);
    if (cfg.format == "table") {
        emit(cfg, to_table(report));
    } else if (cfg.format == "json") {
        emit(cfg, to_json(report).dump(2) + "\n");
    } else {
        throw ParseError("--format csv is only available for phase-space tables");
    }
    return report.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"kdlab: Kirkwood-Dirac quasiprobability toolkit for finite abelian groups and the circle"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;

    app.add_option("--group,-g", cfg.group_spec, "group spec, e.g. Z4xZ2");
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--out,-o", cfg.out_path, "write output to this file instead of stdout");
    app.add_option("--budget", cfg.budget, "witness-search step budget");
    app.add_option("--tol-exact", cfg.tol.exact, "tolerance for closed-form identities")->capture_default_str();
    app.add_option("--tol-structural", cfg.tol.structural, "tolerance for unitarity and Hermiticity")
        ->capture_default_str();
    app.add_option("--tol-positivity", cfg.tol.positivity, "tolerance for PSD and KD-positivity")
        ->capture_default_str();
    app.add_option("--tol-membership", cfg.tol.membership, "tolerance for span and hull residuals")
        ->capture_default_str();
    app.add_option("--tol-witness", cfg.tol.witness, "minimum verified hull gap")->capture_default_str();

    std::function<int(const RunConfig &)> action;
    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help, auto fn) {
        CLI::App *sub = parent->add_subcommand(name, help);
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto with_input = [&](CLI::App *sub) {
        sub->add_option("--input,--operator,--state,--vector,-i", cfg.input, "input JSON document");
        return sub;
    };

    CLI::App *group = app.add_subcommand("group", "group structure")->require_subcommand(1);
    leaf(group, "info", "order, rank and derived counts", cmd_group_info);
    leaf(group, "subgroups", "all subgroups with annihilators and coset representatives", cmd_group_subgroups);

    CLI::App *kdc = app.add_subcommand("kd", "KD distributions")->require_subcommand(1);
    with_input(leaf(kdc, "compute", "KD (or aKD / Wigner) table of an operator", cmd_kd_compute))
        ->add_option("--kind", cfg.kind, "kd, akd or wigner")
        ->capture_default_str();
    with_input(leaf(kdc, "invert", "operator with the given KD table", cmd_kd_invert));

    with_input(leaf(&app, "charfn", "characteristic function of an operator", cmd_charfn))
        ->add_option("--order", cfg.order, "0, 1 or half")
        ->capture_default_str();

    CLI::App *wh = app.add_subcommand("wh", "Weyl-Heisenberg action")->require_subcommand(1);
    CLI::App *act = with_input(leaf(wh, "act", "apply U(g, chi, z) to a vector or conjugate an operator", cmd_wh_act));
    act->add_option("--element", cfg.element, "WH element JSON file");
    act->add_option("--shift", cfg.g_text, "translation g as a residue tuple, e.g. 1-0");
    act->add_option("--chi", cfg.chi_text, "character label as a residue tuple");
    act->add_option("--phase", cfg.phase_turns, "phase z = exp(2 pi i t), given as t");

    CLI::App *pure = app.add_subcommand("pure", "KD-positive pure states")->require_subcommand(1);
    leaf(pure, "enumerate", "list the KD-positive pure family", cmd_pure_enumerate);
    with_input(leaf(pure, "recognize", "match a unit vector against the family", cmd_pure_recognize));

    CLI::App *check = app.add_subcommand("check", "fragment predicates")->require_subcommand(1);
    with_input(leaf(check, "kd-real", "KD-reality by two methods", cmd_check_kd_real));
    with_input(leaf(check, "kd-positive", "KD-positivity of a state", cmd_check_kd_positive));

    CLI::App *member = app.add_subcommand("member", "membership in the classical fragment")->require_subcommand(1);
    with_input(leaf(member, "span", "real span of KD-positive pure states", cmd_member_span));
    with_input(leaf(member, "conv", "convex hull of KD-positive pure states", cmd_member_conv));

    CLI::App *witness = app.add_subcommand("witness", "hull-gap witnesses")->require_subcommand(1);
    leaf(witness, "search", "randomised search for a KD-positive state outside the hull", cmd_witness_search);

    CLI::App *circle = app.add_subcommand("circle", "band-limited operators on the circle")->require_subcommand(1);
    with_input(leaf(circle, "check", "diagonal-and-nonnegative test", cmd_circle_check));
    with_input(leaf(circle, "search", "grid-and-refine KD negativity search", cmd_circle_search))
        ->add_option("--grid", cfg.grid, "angle grid size (default max(1024, 4K + 4))");

    CLI::App *verify = app.add_subcommand("verify", "invariant suites")->require_subcommand(1);
    leaf(verify, "all", "run every suite on --group", cmd_verify_all)
        ->add_option("--samples", cfg.samples, "random samples per check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        return action ? action(cfg) : kConfig;
    } catch (const ParseError &e) {
        std::cerr << "kdlab: " << e.what() << '\n';
        return kConfig;
    } catch (const PreconditionError &e) {
        std::cerr << "kdlab: precondition violated: " << e.what() << '\n';
        return kPrecondition;
    } catch (const BoundExceededError &e) {
        std::cerr << "kdlab: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception &e) {
        std::cerr << "kdlab: error: " << e.what() << '\n';
        return kConfig;
    }
}

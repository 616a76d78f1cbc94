/*
   Copyright 2026 the linrel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINREL_CLI_HPP
#define LINREL_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linrel/expr.hpp"
#include "linrel/normalform.hpp"
#include "linrel/oracle.hpp"
#include "linrel/printing.hpp"
#include "linrel/solver.hpp"

namespace linrel::cli {

using json = nlohmann::ordered_json;

// exit codes: 0 success/true, 1 equation-false or empty result,
// 2 parse/usage error, 3 mathematical obstruction, 4 budget exceeded
inline int exit_code_for(errc c) {
    switch (c) {
        case errc::no_fixed_point_in_field:
        case errc::infinite_field:
            return 3;
        case errc::budget_exceeded:
            return 4;
        case errc::not_semiconjugate:
        case errc::not_invariant:
        case errc::not_scaling_related:
            return 1;
        default:
            return 2;
    }
}

namespace detail {

/// Builds the text and JSON views of one command's report together, so both
/// carry the same mathematical content. Text lines appear in emission order;
/// the JSON document follows the fixed schema
/// {command, field, inputs, result, status}.
class Report {
public:
    explicit Report(const std::string& command) {
        doc_["command"] = command;
        line("command", command);
    }

    void set_field(const Field& f) {
        json fj;
        fj["char"] = f->characteristic;
        fj["degree"] = f->extension_degree;
        if (f->extension_degree > 1) fj["modulus"] = f->modulus;
        doc_["field"] = fj;
        line("field", to_string(f));
    }

    void input(const std::string& key, const std::string& value) {
        doc_["inputs"][key] = value;
        line(key, value);
    }
    void input_int(const std::string& key, long long value) {
        doc_["inputs"][key] = value;
        line(key, std::to_string(value));
    }

    void result_str(const std::string& key, const std::string& value) {
        doc_["result"][key] = value;
        line(key, value);
    }
    void result_int(const std::string& key, long long value) {
        doc_["result"][key] = value;
        line(key, std::to_string(value));
    }
    void result_uint(const std::string& key, std::uint64_t value) {
        doc_["result"][key] = value;
        line(key, std::to_string(value));
    }
    void result_bool(const std::string& key, bool value) {
        doc_["result"][key] = value;
        line(key, value ? "true" : "false");
    }

    static json poly_json(const Polynomial& p) {
        json arr = json::array();
        for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
        return arr;
    }
    static json ratfun_json(const RationalFunction& f) {
        json o;
        o["num"] = poly_json(f.num());
        o["den"] = poly_json(f.den());
        return o;
    }
    static json mobius_json(const MobiusMap& m) {
        return json::array({to_string(m.a()), to_string(m.b()), to_string(m.c()), to_string(m.d())});
    }

    void result_poly(const std::string& key, const Polynomial& p) {
        doc_["result"][key] = poly_json(p);
        line(key, to_string(p));
    }
    void result_basis(const std::string& key, const std::vector<Polynomial>& basis) {
        json arr = json::array();
        for (const auto& b : basis) arr.push_back(poly_json(b));
        doc_["result"][key] = arr;
        for (std::size_t i = 0; i < basis.size(); ++i)
            line(key + "[" + std::to_string(i) + "]", to_string(basis[i]));
    }
    void result_ratfun(const std::string& key, const RationalFunction& f) {
        doc_["result"][key] = ratfun_json(f);
        line(key, to_string(f));
    }
    void result_members(const std::string& key, const std::vector<Polynomial>& members) {
        json arr = json::array();
        for (const auto& m : members) arr.push_back(poly_json(m));
        doc_["result"][key] = arr;
        for (std::size_t i = 0; i < members.size(); ++i)
            line(key + "[" + std::to_string(i) + "]", to_string(members[i]));
    }
    void result_members_rf(const std::string& key, const std::vector<RationalFunction>& members) {
        json arr = json::array();
        for (const auto& m : members) arr.push_back(ratfun_json(m));
        doc_["result"][key] = arr;
        for (std::size_t i = 0; i < members.size(); ++i)
            line(key + "[" + std::to_string(i) + "]", to_string(members[i]));
    }

    void witness_mobius(const std::string& key, const MobiusMap& m) {
        doc_["result"]["witness"][key] = mobius_json(m);
        line("witness." + key, to_string(m));
    }
    void witness_scalar(const std::string& key, const FieldElement& e) {
        doc_["result"]["witness"][key] = to_string(e);
        line("witness." + key, to_string(e));
    }
    void witness_int(const std::string& key, long long value) {
        doc_["result"]["witness"][key] = value;
        line("witness." + key, std::to_string(value));
    }
    void witness_ratfun(const std::string& key, const RationalFunction& f) {
        doc_["result"]["witness"][key] = ratfun_json(f);
        line("witness." + key, to_string(f));
    }

    void status(const std::string& s) {
        doc_["status"] = s;
        line("status", s);
    }

    json& doc() { return doc_; }
    void note(const std::string& text) { lines_.push_back(text); }

    void print(std::ostream& out, bool json_mode) const {
        if (json_mode) {
            out << doc_.dump(2) << "\n";
        } else {
            for (const auto& l : lines_) out << l << "\n";
        }
    }

private:
    void line(const std::string& key, const std::string& value) { lines_.push_back(key + ": " + value); }

    json doc_;
    std::vector<std::string> lines_;
};

struct Options {
    std::string field_text;
    std::string mod_text;
    bool json_mode = false;
    std::uint64_t budget = default_budget;

    std::string alpha, beta, gamma, delta;
    std::string f_text, g_text, h_text;
    int degree = 0;
    long bound = 8;
    std::string psi_text;
    std::optional<long> e_override;
    std::string mode;
    int max_num_deg = 0, max_den_deg = 0;
};

inline Field field_from(const Options& opt) {
    std::string spec = opt.field_text;
    if (!opt.mod_text.empty()) spec += " mod " + opt.mod_text;
    return make_field(spec);
}

inline MobiusMap parse_mobius(const std::string& text, const Field& field) {
    return MobiusMap::from_rational(parse_expression(text, field));
}

inline int finish(const Report& r, const Options& opt, std::ostream& out, int code) {
    r.print(out, opt.json_mode);
    return code;
}

// --- subcommand handlers ---------------------------------------------------

inline int run_solve(const Options& opt, std::ostream& out, bool peel) {
    const Field field = field_from(opt);
    const FieldElement alpha = parse_scalar(opt.alpha, field);
    const FieldElement beta = parse_scalar(opt.beta, field);
    const FieldElement gamma = parse_scalar(opt.gamma, field);
    const FieldElement delta = parse_scalar(opt.delta, field);

    Report r(peel ? "solve-peel" : "solve");
    r.set_field(field);
    r.input("alpha", to_string(alpha));
    r.input("beta", to_string(beta));
    r.input("gamma", to_string(gamma));
    r.input("delta", to_string(delta));
    r.input_int("degree", opt.degree);

    const SolutionSpace space = peel ? solve_affine_by_peeling(alpha, beta, gamma, delta, opt.degree)
                                     : solve_affine(alpha, beta, gamma, delta, opt.degree);
    r.result_str("kind", "space");
    if (space.is_empty()) {
        r.result_int("dimension", 0);
        r.status("empty");
        return finish(r, opt, out, 1);
    }
    r.result_int("dimension", space.dimension());
    r.result_bool("has_nonconstant", space.has_nonconstant());
    r.result_poly("particular", *space.particular);
    r.result_basis("basis", space.basis);
    r.status("ok");
    return finish(r, opt, out, 0);
}

inline int run_verify(const Options& opt, std::ostream& out) {
    const Field field = field_from(opt);
    const Polynomial f = parse_polynomial(opt.f_text, field);
    const FieldElement alpha = parse_scalar(opt.alpha, field);
    const FieldElement beta = parse_scalar(opt.beta, field);
    const FieldElement gamma = parse_scalar(opt.gamma, field);
    const FieldElement delta = parse_scalar(opt.delta, field);

    Report r("verify");
    r.set_field(field);
    r.input("f", to_string(f));
    r.input("alpha", to_string(alpha));
    r.input("beta", to_string(beta));
    r.input("gamma", to_string(gamma));
    r.input("delta", to_string(delta));

    const bool holds = verify_affine(f, alpha, beta, gamma, delta);
    r.result_str("kind", "verify");
    r.result_bool("holds", holds);
    r.status(holds ? "ok" : "false");
    return finish(r, opt, out, holds ? 0 : 1);
}

inline int run_normalize(const Options& opt, std::ostream& out) {
    const Field field = field_from(opt);
    const MobiusMap g = parse_mobius(opt.g_text, field);

    Report r("normalize");
    r.set_field(field);
    r.input("g", to_string(g));

    const Normalization n = normalize_linear(g);
    r.result_str("kind", linear_kind_name(n.canonical.kind));
    r.witness_mobius("v", n.v);
    if (n.canonical.kind == LinearKind::scaling) r.witness_scalar("alpha", *n.canonical.alpha);
    r.result_str("canonical", to_string(n.canonical.to_mobius(field)));
    r.status("ok");
    return finish(r, opt, out, 0);
}

inline int run_decompose(const Options& opt, std::ostream& out) {
    const Field field = field_from(opt);
    const RationalFunction f = parse_expression(opt.f_text, field);
    const MobiusMap g = parse_mobius(opt.g_text, field);
    const MobiusMap h = parse_mobius(opt.h_text, field);

    Report r("decompose");
    r.set_field(field);
    r.input("f", to_string(f));
    r.input("g", to_string(g));
    r.input("h", to_string(h));

    const NormalForm nf = decompose_semiconjugate(f, g, h);
    r.result_str("kind", nf.kind == NormalFormKind::trans_trans ? "TransTrans" : "ScaleScale");
    r.witness_mobius("u", nf.u);
    r.witness_mobius("v", nf.v);
    if (nf.kind == NormalFormKind::trans_trans) {
        r.witness_scalar("delta", *nf.delta);
    } else {
        r.witness_scalar("alpha", *nf.alpha);
        r.witness_int("e", nf.e);
        r.witness_int("s", static_cast<long long>(nf.s));
    }
    r.witness_ratfun("psi", nf.psi);
    r.result_ratfun("core", nf.core());
    r.status("ok");
    return finish(r, opt, out, 0);
}

inline int run_family(const Options& opt, std::ostream& out) {
    const Field field = field_from(opt);
    const MobiusMap g = parse_mobius(opt.g_text, field);
    const MobiusMap h = parse_mobius(opt.h_text, field);

    Report r("family");
    r.set_field(field);
    r.input("g", to_string(g));
    r.input("h", to_string(h));
    r.input_int("bound", opt.bound);

    const SolutionFamily fam = solve_semiconjugacy(g, h, opt.bound);
    r.result_str("kind", family_kind_name(fam.kind()));
    if (fam.is_empty()) {
        r.result_str("reason", fam.reason());
        r.status("empty");
        return finish(r, opt, out, 1);
    }

    const std::uint64_t p = field->characteristic;
    std::string description;
    if (fam.kind() == FamilyKind::all) {
        description = "every nonconstant f in K(x) satisfies f o g = h o f";
    } else if (fam.kind() == FamilyKind::trans_trans) {
        r.witness_mobius("u", fam.u());
        r.witness_mobius("v", fam.v());
        r.witness_scalar("delta", fam.delta());
        description = p > 0 ? "f = u^-1 o (delta x + psi(x^" + std::to_string(p) + " - x)) o v^-1, psi free in K(t)"
                            : "f = u^-1 o (delta x + c) o v^-1, c in K";
    } else {
        r.witness_mobius("u", fam.u());
        r.witness_mobius("v", fam.v());
        r.witness_scalar("alpha", fam.alpha());
        r.witness_int("e", fam.exponent());
        r.witness_int("s", static_cast<long long>(fam.order()));
        description = fam.order() > 0
                          ? "f = u^-1 o (x^e psi(x^" + std::to_string(fam.order()) + ")) o v^-1, psi free in K(t)"
                          : "f = u^-1 o (c x^e) o v^-1, c in K";
    }
    r.result_str("description", description);

    if (!opt.psi_text.empty()) {
        const RationalFunction psi = parse_expression(opt.psi_text, field);
        const RationalFunction sample = fam.sample(psi, opt.e_override);
        r.result_ratfun("sample", sample);
        const bool holds = rf_compose(sample, g.to_rational()) == h.apply_to_function(sample);
        r.result_bool("sample_satisfies_equation", holds);
        if (!holds) fail(errc::internal_error, "sampled member violates the equation");
    }
    r.status("ok");
    return finish(r, opt, out, 0);
}

inline int run_enumerate(const Options& opt, std::ostream& out) {
    const Field field = field_from(opt);
    const FieldElement alpha = parse_scalar(opt.alpha, field);
    const FieldElement beta = parse_scalar(opt.beta, field);
    const FieldElement gamma = parse_scalar(opt.gamma, field);
    const FieldElement delta = parse_scalar(opt.delta, field);

    Report r("enumerate");
    r.set_field(field);
    r.input("alpha", to_string(alpha));
    r.input("beta", to_string(beta));
    r.input("gamma", to_string(gamma));
    r.input("delta", to_string(delta));
    r.input_int("degree", opt.degree);

    const auto members = enumerate_solutions(field, alpha, beta, gamma, delta, opt.degree, opt.budget);
    r.result_str("kind", "members");
    r.result_uint("count", members.size());
    r.result_members("members", members);
    r.status(members.empty() ? "empty" : "ok");
    return finish(r, opt, out, members.empty() ? 1 : 0);
}

inline int run_count(const Options& opt, std::ostream& out) {
    const Field field = field_from(opt);
    Report r("count");
    r.set_field(field);
    r.input("mode", opt.mode);

    CountResult res;
    if (opt.mode == "wells") {
        const FieldElement beta = parse_scalar(opt.beta, field);
        r.input("beta", to_string(beta));
        res = count_commuting_translation(field, beta, opt.budget);
    } else if (opt.mode == "mullen") {
        const FieldElement alpha = parse_scalar(opt.alpha, field);
        const FieldElement beta = parse_scalar(opt.beta, field);
        r.input("alpha", to_string(alpha));
        r.input("beta", to_string(beta));
        res = count_commuting_scaling(field, alpha, beta, opt.budget);
    } else if (opt.mode == "custom") {
        const FieldElement alpha = parse_scalar(opt.alpha, field);
        const FieldElement beta = parse_scalar(opt.beta, field);
        const FieldElement gamma = parse_scalar(opt.gamma, field);
        const FieldElement delta = parse_scalar(opt.delta, field);
        r.input("alpha", to_string(alpha));
        r.input("beta", to_string(beta));
        r.input("gamma", to_string(gamma));
        r.input("delta", to_string(delta));
        r.input_int("degree", opt.degree);
        res = count_solutions(field, alpha, beta, gamma, delta, opt.degree, opt.budget);
    } else {
        fail(errc::invalid_argument, "--mode must be wells, mullen or custom");
    }
    r.result_str("kind", "count");
    r.result_uint("count", res.count);
    r.result_str("method", res.by_enumeration ? "enumeration" : "formula");
    r.status(res.count == 0 ? "empty" : "ok");
    return finish(r, opt, out, res.count == 0 ? 1 : 0);
}

inline int run_search_mixed(const Options& opt, std::ostream& out) {
    const Field field = field_from(opt);
    Report r("search-mixed");
    r.set_field(field);
    r.input_int("max_num_deg", opt.max_num_deg);
    r.input_int("max_den_deg", opt.max_den_deg);

    const auto hits = search_mixed_counterexamples(field, opt.max_num_deg, opt.max_den_deg, opt.budget);
    r.result_str("kind", "members");
    r.result_uint("count", hits.size());
    r.result_members_rf("members", hits);
    // an empty list is the expected outcome; exit 1 still flags "no members"
    r.status(hits.empty() ? "empty" : "ok");
    return finish(r, opt, out, hits.empty() ? 1 : 0);
}

inline int run_selftest(const Options& opt, std::ostream& out) {
    Report r("selftest");
    bool all_ok = true;
    json checks = json::array();
    auto check = [&](const std::string& name, bool ok) {
        checks.push_back(json{{"name", name}, {"pass", ok}});
        all_ok = all_ok && ok;
    };

    const Field f5 = make_field("F5");
    const Field f3 = make_field("F3");
    const Field q = make_field("Q");
    auto el = [](const Field& f, long long n) { return FieldElement::from_integer(f, n); };

    check("field axioms spot check",
          (el(f5, 2) + el(f5, 4)) * el(f5, 3) == el(f5, 2) * el(f5, 3) + el(f5, 4) * el(f5, 3) &&
              el(q, 7) * el(q, 7).inverse() == el(q, 1));
    check("multiplicative order of 2 in F5 is 4", multiplicative_order(el(f5, 2)) == std::uint64_t{4});

    const SolutionSpace space = solve_affine(el(f5, 2), el(f5, 0), el(f5, 2), el(f5, 0), 5);
    check("solve over F5 finds {x, x^5}",
          !space.is_empty() && space.dimension() == 2 && to_string(space.basis[0]) == "x" &&
              to_string(space.basis[1]) == "x^5");
    check("solver agrees with enumeration over F3", [&] {
        const auto brute = enumerate_solutions(f3, el(f3, 1), el(f3, 1), el(f3, 1), el(f3, 1), 3);
        const auto via_space = enumerate_members(solve_affine(el(f3, 1), el(f3, 1), el(f3, 1), el(f3, 1), 3));
        if (brute.size() != via_space.size()) return false;
        for (const auto& m : via_space)
            if (std::find(brute.begin(), brute.end(), m) == brute.end()) return false;
        return true;
    }());
    check("translation commutant count over F3 is 3", count_commuting_translation(f3, el(f3, 1)).count == 3);
    check("cube decomposes against translations over F3", [&] {
        const RationalFunction cube = parse_expression("x^3", f3);
        const MobiusMap step = MobiusMap::translation(el(f3, 1));
        const NormalForm nf = decompose_semiconjugate(cube, step, step);
        return nf.kind == NormalFormKind::trans_trans && to_string(nf.psi) == "x";
    }());
    check("parser round trip", [&] {
        for (const char* text : {"x^3 - x", "(x^6+1)/x^2", "1/2x", "2x/(x^2 + 1)"}) {
            const RationalFunction v = parse_expression(text, q);
            if (parse_expression(to_string(v), q) != v) return false;
        }
        return true;
    }());

    r.doc()["result"]["kind"] = "selftest";
    r.doc()["result"]["checks"] = checks;
    for (const auto& c : checks)
        r.note(c["name"].get<std::string>() + ": " + (c["pass"].get<bool>() ? "pass" : "FAIL"));
    r.status(all_ok ? "ok" : "false");
    return finish(r, opt, out, all_ok ? 0 : 1);
}

}  // namespace detail

/// Entry point shared by main() and the tests. Parses flags, dispatches, and
/// maps failures onto documented exit codes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options opt;

    CLI::App app{"exact solver for the functional equation f(g(x)) = h(f(x)) with degree-one g and h"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "print help");  // frees -h/--h for the map flag
    app.add_option("--field", opt.field_text, "coefficient field: Q, F<q>, or F<p>^<k>");
    app.add_option("--mod", opt.mod_text, "modulus for extension fields, e.g. \"t^2+t+1\"");
    app.add_flag("--json", opt.json_mode, "print a JSON report instead of text");
    app.add_option("--budget", opt.budget, "candidate budget for exhaustive commands");

    auto add_subcommand = [&app](const std::string& name, const std::string& description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    CLI::App* solve = add_subcommand("solve", "solution space of f(ax+b) = c f(x) + d up to a degree bound");
    CLI::App* solve_peel = add_subcommand("solve-peel", "same space, by leading-term peeling");
    for (CLI::App* sub : {solve, solve_peel}) {
        sub->add_option("--alpha", opt.alpha)->required();
        sub->add_option("--beta", opt.beta)->required();
        sub->add_option("--gamma", opt.gamma)->required();
        sub->add_option("--delta", opt.delta)->required();
        sub->add_option("--degree", opt.degree)->required();
    }

    CLI::App* verify = add_subcommand("verify", "check f(ax+b) = c f(x) + d for a given polynomial f");
    verify->add_option("--f", opt.f_text)->required();
    verify->add_option("--alpha", opt.alpha)->required();
    verify->add_option("--beta", opt.beta)->required();
    verify->add_option("--gamma", opt.gamma)->required();
    verify->add_option("--delta", opt.delta)->required();

    CLI::App* normalize = add_subcommand("normalize", "conjugate a degree-one map to x+1 or alpha x");
    normalize->add_option("--g", opt.g_text)->required();

    CLI::App* decompose = add_subcommand("decompose", "normal form of f for a semiconjugacy f o g = h o f");
    decompose->add_option("--f", opt.f_text)->required();
    decompose->add_option("--g", opt.g_text)->required();
    decompose->add_option("--h", opt.h_text)->required();

    CLI::App* family = add_subcommand("family", "describe all f with f o g = h o f; optionally sample one");
    family->add_option("--g", opt.g_text)->required();
    family->add_option("--h", opt.h_text)->required();
    family->add_option("--bound", opt.bound, "exponent search bound for infinite-order multipliers");
    family->add_option("--psi", opt.psi_text, "free parameter (a rational expression in x) to sample a member");
    long e_value = 0;
    CLI::Option* e_opt = family->add_option("--e", e_value, "override the exponent when sampling");

    CLI::App* enumerate = add_subcommand("enumerate", "brute-force all polynomial solutions over a finite field");
    enumerate->add_option("--alpha", opt.alpha)->required();
    enumerate->add_option("--beta", opt.beta)->required();
    enumerate->add_option("--gamma", opt.gamma)->required();
    enumerate->add_option("--delta", opt.delta)->required();
    enumerate->add_option("--degree", opt.degree)->required();

    CLI::App* count = add_subcommand("count", "count commuting polynomials of degree < q");
    count->add_option("--mode", opt.mode, "wells | mullen | custom")->required();
    count->add_option("--alpha", opt.alpha);
    count->add_option("--beta", opt.beta);
    count->add_option("--gamma", opt.gamma);
    count->add_option("--delta", opt.delta);
    count->add_option("--degree", opt.degree);

    CLI::App* search = add_subcommand("search-mixed", "search for f with f(alpha x) = f(x) + 1 (expected none)");
    search->add_option("--max-num-deg", opt.max_num_deg)->required();
    search->add_option("--max-den-deg", opt.max_den_deg)->required();

    CLI::App* selftest = add_subcommand("selftest", "quick internal consistency battery");

    std::vector<const char*> argv;
    argv.push_back("linrel");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (e_opt->count() > 0) opt.e_override = e_value;

    std::string command = "unknown";
    for (const CLI::App* sub : app.get_subcommands())
        command = sub->get_name();

    const bool needs_field = !app.got_subcommand(selftest);
    if (needs_field && opt.field_text.empty()) {
        err << "usage error: --field is required\n";
        return 2;
    }

    try {
        if (app.got_subcommand(solve)) return detail::run_solve(opt, out, false);
        if (app.got_subcommand(solve_peel)) return detail::run_solve(opt, out, true);
        if (app.got_subcommand(verify)) return detail::run_verify(opt, out);
        if (app.got_subcommand(normalize)) return detail::run_normalize(opt, out);
        if (app.got_subcommand(decompose)) return detail::run_decompose(opt, out);
        if (app.got_subcommand(family)) return detail::run_family(opt, out);
        if (app.got_subcommand(enumerate)) return detail::run_enumerate(opt, out);
        if (app.got_subcommand(count)) return detail::run_count(opt, out);
        if (app.got_subcommand(search)) return detail::run_search_mixed(opt, out);
        if (app.got_subcommand(selftest)) return detail::run_selftest(opt, out);
    } catch (const Error& e) {
        const int code = exit_code_for(e.code());
        detail::Report r(command);
        r.result_str("error", errc_name(e.code()));
        r.result_str("message", e.what());
        r.status(code == 1 ? "false" : code == 3 ? "obstruction" : code == 4 ? "budget-exceeded" : "error");
        r.print(opt.json_mode ? out : err, opt.json_mode);
        return code;
    }
    err << "usage error: no subcommand selected\n";
    return 2;
}

inline int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace linrel::cli

#endif  // LINREL_CLI_HPP

// Command line front end.  Every subcommand emits a deterministic report
// (JSON by default) and exits 0 on success, 1 on a failed verification,
// 2 on a usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sympvoa/affine.hpp"
#include "sympvoa/cartan.hpp"
#include "sympvoa/classify.hpp"
#include "sympvoa/fock.hpp"
#include "sympvoa/parallel.hpp"
#include "sympvoa/uea.hpp"
#include "sympvoa/weights.hpp"
#include "sympvoa/zeros.hpp"

using json = nlohmann::ordered_json;
using namespace sympvoa;

namespace {

json weight_json(const AffineWeight& w) {
    json j;
    json lam = json::array();
    for (const auto& c : w.lambda) lam.push_back(rat_to_string(c));
    j["lambda"] = lam;
    j["delta"] = rat_to_string(w.delta);
    return j;
}

json poly_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exponents"] = e;
        t["coeff"] = rat_to_string(c);
        terms.push_back(t);
    }
    return terms;
}

json zero_set_json(const ZeroSet& zs) {
    json arr = json::array();
    for (const auto& p : zs)
        arr.push_back(json::array({rat_to_string(p.h1), rat_to_string(p.h2)}));
    return arr;
}

AffineWeight parse_weight(const std::string& spec) {
    std::vector<Rat> coeffs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(rat_from_string(tok));
    if (coeffs.size() < 3) throw CLI::ValidationError("--lambda needs at least 3 coefficients");
    return weight_from_lambda(coeffs);
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations around the level n - 3/2 symplectic affine vertex algebras"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", out_path, "write the report to a file instead of stdout");

    int n = 1, ell = 2, bound = 8;

    auto* roots_cmd = app.add_subcommand("roots", "finite root system and real coroots");
    roots_cmd->add_option("--ell", ell)->check(CLI::Range(2, 8));
    roots_cmd->add_option("--bound", bound, "loop-mode bound for the coroot list");

    auto* weights_cmd = app.add_subcommand("weights", "enumerate one weight family");
    std::string set_name = "S1";
    weights_cmd->add_option("--set", set_name)->check(CLI::IsMember({"S1", "S2"}));
    weights_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    weights_cmd->add_option("--ell", ell)->check(CLI::Range(2, 8));

    auto* adm_cmd = app.add_subcommand("admissible", "bounded admissibility check");
    std::string lambda_spec;
    adm_cmd->add_option("--lambda", lambda_spec, "comma separated Lambda coefficients")
        ->required();
    adm_cmd->add_option("--bound", bound);

    auto* polys_cmd = app.add_subcommand("polys", "classification polynomials");
    bool check_closed = false;
    polys_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    polys_cmd->add_flag("--check-closed-form", check_closed);

    auto* zeros_cmd = app.add_subcommand("zeros", "common zero sets of the triple");
    std::string source = "closed-form";
    bool check_recursion = false;
    zeros_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    zeros_cmd->add_option("--source", source)->check(CLI::IsMember({"closed-form", "uea"}));
    zeros_cmd->add_flag("--check-recursion", check_recursion);

    auto* classify_cmd = app.add_subcommand("classify", "module list at level n - 3/2");
    bool cross_check = false;
    std::string candidates_path;
    classify_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    classify_cmd->add_option("--ell", ell)->check(CLI::Range(2, 8));
    classify_cmd->add_flag("--cross-check", cross_check);
    classify_cmd->add_option("--candidates", candidates_path,
                             "JSON file with a list of Lambda coefficient vectors");

    auto* singular_cmd = app.add_subcommand("singular", "singular vector verification");
    std::string perturb = "0";
    singular_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    singular_cmd->add_option("--perturb-level", perturb, "rational added to the level");

    auto* fock_cmd = app.add_subcommand("fock", "quadratic field relation on one sector");
    std::string sector = "half-even";
    int max_degree = 2;
    std::string modes = "-2..2";
    fock_cmd->add_option("--sector", sector)
        ->check(CLI::IsMember({"int-even", "int-odd", "half-even", "half-odd"}));
    fock_cmd->add_option("--max-degree", max_degree)->check(CLI::Range(0, 6));
    fock_cmd->add_option("--modes", modes, "inclusive mode range a..b");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    configure_threads();

    try {
        json report;
        report["schema"] = 1;
        int exit_code = 0;

        if (*roots_cmd) {
            const auto rs = build_root_system(ell);
            report["ell"] = ell;
            json roots = json::array();
            for (const auto& r : rs.roots) roots.push_back(r);
            report["roots"] = roots;
            report["theta"] = rs.theta;
            report["positive_real_coroots"] = real_coroots_up_to(ell, bound).size();
        } else if (*weights_cmd) {
            const auto ws = enumerate_S(set_name == "S1" ? 1 : 2, n, ell);
            report["set"] = set_name;
            report["n"] = n;
            report["ell"] = ell;
            if (format == "csv") {
                std::ostringstream os;
                for (const auto& m : ws.members) {
                    for (const auto& c : m.lambda) os << rat_to_string(c) << ",";
                    os << rat_to_string(m.level()) << "\n";
                }
                emit(out_path, os.str());
                return 0;
            }
            json members = json::array();
            for (const auto& m : ws.members) members.push_back(weight_json(m));
            report["members"] = members;
        } else if (*adm_cmd) {
            const auto lam = parse_weight(lambda_spec);
            const auto rep = check_admissible(lam, bound);
            report["lambda"] = weight_json(lam);
            report["bound"] = bound;
            report["positivity"] = rep.cond1;
            report["full_rank"] = rep.cond2;
            json pis = json::array();
            for (const auto& g : rep.pi_lambda) pis.push_back(g.coords);
            report["minimal_integral_coroots"] = pis;
            if (!rep.cond1 || !rep.cond2) exit_code = 1;
        } else if (*polys_cmd) {
            SpAlgebra g(2);
            UEA u(g);
            report["n"] = n;
            bool ok = true;
            for (int idx : {1, 2, 3}) {
                const MultiPoly p = u.compute_p(idx, n);
                report["p" + std::to_string(idx)] = poly_json(p);
                if (check_closed && !p.proportional_to(closed_form_p(idx, n))) ok = false;
            }
            if (check_closed) {
                report["closed_form_match"] = ok;
                if (!ok) exit_code = 1;
            }
        } else if (*zeros_cmd) {
            report["n"] = n;
            report["source"] = source;
            MultiPoly p1(2), p2(2), p3(2);
            if (source == "uea") {
                SpAlgebra g(2);
                UEA u(g);
                p1 = u.compute_p(1, n);
                p2 = u.compute_p(2, n);
                p3 = u.compute_p(3, n);
            } else {
                p1 = closed_form_p(1, n);
                p2 = closed_form_p(2, n);
                p3 = closed_form_p(3, n);
            }
            const auto t1 = zero_search(1, n, p1, p2, p3);
            const auto t2 = zero_search(2, n, p1, p2, p3);
            report["T1"] = zero_set_json(t1);
            report["T2"] = zero_set_json(t2);
            bool ok = t1 == zero_component(1, n) && t2 == zero_component(2, n);
            report["parametrization_match"] = ok;
            if (check_recursion) {
                bool rec = true;
                for (int m = 1; m <= n; ++m)
                    for (int i : {1, 2}) rec = rec && zero_recursion_step(i, m);
                report["recursion_ok"] = rec;
                ok = ok && rec;
            }
            if (!ok) exit_code = 1;
        } else if (*classify_cmd) {
            const auto cr = classify(n, ell);
            report["n"] = n;
            report["ell"] = ell;
            report["level"] = rat_to_string(Rat(2 * n - 3, 2));
            report["match_component_1"] = cr.match1;
            report["match_component_2"] = cr.match2;
            report["disjoint"] = cr.disjoint;
            json mods = json::array();
            for (const auto& m : cr.modules) mods.push_back(weight_json(m));
            report["modules"] = mods;
            report["module_count"] = cr.modules.size();
            if (cross_check) {
                bool ok = cr.match1 && cr.match2 && cr.disjoint;
                for (const auto& m : cr.modules) ok = ok && evaluate_module_criterion(m, n);
                report["cross_check"] = ok;
                if (!ok) exit_code = 1;
            }
            if (!candidates_path.empty()) {
                std::ifstream f(candidates_path);
                if (!f) throw CLI::ValidationError("cannot read " + candidates_path);
                json cand = json::parse(f);
                json results = json::array();
                for (const auto& entry : cand) {
                    std::vector<Rat> coeffs;
                    for (const auto& c : entry) coeffs.push_back(rat_from_string(c.get<std::string>()));
                    const auto w = weight_from_lambda(coeffs);
                    json r;
                    r["lambda"] = weight_json(w);
                    r["in_list"] = check_module(w, n);
                    results.push_back(r);
                }
                report["candidates"] = results;
            }
            if (format == "csv") {
                std::ostringstream os;
                os << "lambda,level,criterion\n";
                for (const auto& m : cr.modules) {
                    os << "\"";
                    for (size_t k = 0; k < m.lambda.size(); ++k)
                        os << (k ? " " : "") << rat_to_string(m.lambda[k]);
                    os << "\"," << rat_to_string(m.level()) << ","
                       << (evaluate_module_criterion(m, n) ? 1 : 0) << "\n";
                }
                emit(out_path, os.str());
                return exit_code;
            }
        } else if (*singular_cmd) {
            const auto rep = singular_check(n, rat_from_string(perturb));
            report["n"] = n;
            report["level"] = rat_to_string(Rat(2 * n - 3, 2) + rat_from_string(perturb));
            json checks = json::array();
            for (const auto& [op, zero] : rep.checks) {
                json c;
                c["op"] = op;
                c["zero"] = zero;
                checks.push_back(c);
            }
            report["checks"] = checks;
            if (!rep.ok) {
                report["witness"] = rep.witness;
                exit_code = 1;
            }
        } else if (*fock_cmd) {
            const auto dots = modes.find("..");
            if (dots == std::string::npos)
                throw CLI::ValidationError("--modes expects a..b");
            const int lo = std::stoi(modes.substr(0, dots));
            const int hi = std::stoi(modes.substr(dots + 2));
            if (lo > hi) throw CLI::ValidationError("--modes expects a <= b");
            const Moding moding = sector.starts_with("int") ? Moding::Int : Moding::Half;
            const Parity parity = sector.ends_with("odd") ? Parity::Odd : Parity::Even;
            const auto rep =
                quadratic_field_relation_check(2, moding, parity, max_degree, lo, hi);
            report["sector"] = sector;
            report["checked"] = rep.checked;
            json failures = json::array();
            if (!rep.ok) {
                json w;
                w["state"] = rep.witness_state;
                w["mode"] = rep.witness_mode;
                failures.push_back(w);
                exit_code = 1;
            }
            report["failures"] = failures;
        }

        emit(out_path, dump(report));
        return exit_code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

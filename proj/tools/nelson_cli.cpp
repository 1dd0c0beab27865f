// Command-line workbench: validate algebras against the structural classes,
// search for countermodels, decide (quasi)equations, check proof scripts,
// apply the doubling and translation constructions, enumerate small models,
// export the bundled algebras, and run the acceptance suite.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "nelson/bridge.hpp"
#include "nelson/calculus.hpp"
#include "nelson/catalog.hpp"
#include "nelson/mutation.hpp"
#include "nelson/paper_suite.hpp"
#include "nelson/search.hpp"
#include "nelson/semantics.hpp"

using nlohmann::json;
using namespace nelson;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;

FiniteAlgebra load_algebra_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return catalog_get(arg.substr(1));
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open algebra file '" + arg + "'");
    return load_algebra(in);
}

void write_algebra_file(const FiniteAlgebra& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file '" + path + "'");
    save_algebra(A, out);
}

json report_to_json(const FiniteAlgebra& A, const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json item{{"law", c.law}, {"passed", c.passed}};
        if (!c.witness.empty()) {
            json w = json::array();
            for (int ix : c.witness) w.push_back(A.elem_name(ix));
            item["witness"] = w;
        }
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return json{{"algebra", rep.algebra}, {"class", rep.what}, {"ok", rep.ok()},
                {"checks", std::move(checks)}};
}

json valuation_to_json(const FiniteAlgebra& A, const Valuation& nu) {
    json out = json::object();
    for (const auto& [v, e] : nu) out[v] = A.elem_name(e);
    return out;
}

std::string valuation_to_text(const FiniteAlgebra& A, const Valuation& nu) {
    std::string out;
    for (const auto& [v, e] : nu) out += (out.empty() ? "" : ", ") + v + " = " + A.elem_name(e);
    return out;
}

ValidationReport run_class_check(const std::string& cls, const FiniteAlgebra& A) {
    if (cls == "lattice") return check_lattice(A);
    if (cls == "cirl") return check_cirl(A);
    if (cls == "cibrl") return check_cibrl(A);
    if (cls == "involutive") return check_involutive(A);
    if (cls == "three-potent") return check_three_potent(A);
    if (cls == "s-algebra") return validate_s_algebra(A);
    if (cls == "s-algebra-q") return validate_s_algebra_via_quasiequations(A);
    if (cls == "mv") return check_mv(A);
    if (cls == "distributive") return check_distributive(A);
    if (cls == "n4") return check_n4_lattice(A);
    if (cls == "n3") return check_n3_lattice(A);
    if (cls == "congruence-orderable") return check_congruence_orderability(A);
    throw InputError("unknown class '" + cls + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for Nelson-style logics and their finite algebraic models"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // validate
    auto* validate = app.add_subcommand("validate", "check an algebra against a class");
    std::string val_class = "s-algebra", val_algebra;
    validate->add_option("--class", val_class,
                         "lattice|cirl|cibrl|involutive|three-potent|s-algebra|"
                         "s-algebra-q|mv|distributive|n4|n3|congruence-orderable")
        ->capture_default_str();
    validate->add_option("algebra", val_algebra, "algebra file, or @KEY for a bundled one")
        ->required();

    // countermodel
    auto* countermodel = app.add_subcommand("countermodel", "search a refuting valuation");
    std::string cm_algebra, cm_formula;
    countermodel->add_option("--algebra", cm_algebra, "algebra file or @KEY")->required();
    countermodel->add_option("--formula", cm_formula, "formula text")->required();

    // satisfies
    auto* satisfies = app.add_subcommand("satisfies", "decide an equation or quasiequation");
    std::string sat_algebra, sat_eq, sat_quasieq;
    satisfies->add_option("--algebra", sat_algebra, "algebra file or @KEY")->required();
    satisfies->add_option("--eq", sat_eq, "equation:  <formula> = <formula>");
    satisfies->add_option("--quasieq", sat_quasieq,
                          "quasiequation:  <eq>, ..., <eq> |- <eq>");

    // check-proof
    auto* check_proof = app.add_subcommand("check-proof", "check a proof script");
    std::string proof_file;
    check_proof->add_option("file", proof_file, "proof script")->required();

    // double
    auto* dbl = app.add_subcommand("double", "apply the doubling construction");
    std::string dbl_in, dbl_out;
    dbl->add_option("--in", dbl_in, "input algebra (a CIRL)")->required();
    dbl->add_option("--out", dbl_out, "output file")->required();

    // translate
    auto* translate = app.add_subcommand("translate", "switch table language");
    std::string tr_to, tr_in, tr_out;
    translate->add_option("--to", tr_to, "s (negation form) or sprime (fusion form)")
        ->check(CLI::IsMember({"s", "sprime"}))
        ->required();
    translate->add_option("--in", tr_in, "input algebra")->required();
    translate->add_option("--out", tr_out, "output file")->required();

    // star
    auto* star = app.add_subcommand("star", "the q -> q* quasiequation transform");
    std::string star_q, star_file, star_out;
    star->add_option("--quasieq", star_q, "quasiequation text");
    star->add_option("--quasieq-file", star_file, "file with one quasiequation");
    star->add_option("--out", star_out, "write the starred form here");

    // search
    auto* search = app.add_subcommand("search", "enumerate small models");
    int search_size = 4;
    std::string search_class = "s-algebra", search_mode = "count", out_dir;
    std::vector<std::string> search_require, search_forbid;
    long long search_budget = 500'000'000;
    search->add_option("--size", search_size, "carrier size (bound for --mode first)")
        ->capture_default_str();
    search->add_option("--class", search_class,
                       "lattice|cirl|cibrl|s-algebra|mv|implicative|n4|n3")
        ->capture_default_str();
    search->add_option("--require", search_require, "(quasi)equations that must hold");
    search->add_option("--forbid", search_forbid, "(quasi)equations that must fail");
    search->add_option("--mode", search_mode, "first|count|all")
        ->check(CLI::IsMember({"first", "count", "all"}))
        ->capture_default_str();
    search->add_option("--out-dir", out_dir, "write found algebras here (mode all/first)");
    search->add_option("--budget", search_budget, "node budget")->capture_default_str();

    // catalog
    auto* catalog = app.add_subcommand("catalog", "bundled algebras");
    bool cat_list = false, cat_selftest = false;
    std::string cat_get, cat_out;
    catalog->add_flag("--list", cat_list, "list keys");
    catalog->add_flag("--self-test", cat_selftest, "check the advertised classes");
    catalog->add_option("--get", cat_get, "key to fetch");
    catalog->add_option("--out", cat_out, "write the fetched algebra here");

    // paper-suite
    app.add_subcommand("paper-suite", "run every acceptance criterion");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            FiniteAlgebra A = load_algebra_arg(val_algebra);
            ValidationReport rep = run_class_check(val_class, A);
            if (format == "json") std::cout << report_to_json(A, rep).dump(2) << "\n";
            else std::cout << rep.summary(A);
            return rep.ok() ? kExitOk : kExitRefuted;
        }

        if (countermodel->parsed()) {
            FiniteAlgebra A = load_algebra_arg(cm_algebra);
            Formula f = parse(cm_formula);
            auto nu = find_countermodel(A, f);
            if (format == "json") {
                json out{{"algebra", A.name}, {"formula", render(f)}, {"refuted", nu.has_value()}};
                if (nu) {
                    out["valuation"] = valuation_to_json(A, *nu);
                    out["value"] = A.elem_name(eval(f, *nu, A));
                }
                std::cout << out.dump(2) << "\n";
            } else if (nu) {
                std::cout << "refuted: " << valuation_to_text(A, *nu) << "  evaluates to "
                          << A.elem_name(eval(f, *nu, A)) << "\n";
            } else {
                std::cout << "valid: no countermodel in " << A.name << "\n";
            }
            return nu ? kExitRefuted : kExitOk;
        }

        if (satisfies->parsed()) {
            if (sat_eq.empty() == sat_quasieq.empty())
                throw InputError("give exactly one of --eq / --quasieq");
            FiniteAlgebra A = load_algebra_arg(sat_algebra);
            SatResult res;
            std::string what;
            if (!sat_eq.empty()) {
                Equation e = parse_equation(sat_eq);
                res = satisfies_equation(A, e);
                what = render(e);
            } else {
                QuasiEquation q = parse_quasiequation(sat_quasieq);
                res = satisfies_quasiequation(A, q);
                what = render(q);
            }
            if (format == "json") {
                json out{{"algebra", A.name}, {"input", what}, {"satisfied", res.satisfied}};
                if (res.witness) out["witness"] = valuation_to_json(A, *res.witness);
                std::cout << out.dump(2) << "\n";
            } else if (res.satisfied) {
                std::cout << "satisfied in " << A.name << "\n";
            } else {
                std::cout << "refuted in " << A.name << ": "
                          << valuation_to_text(A, *res.witness) << "\n";
            }
            return res.satisfied ? kExitOk : kExitRefuted;
        }

        if (check_proof->parsed()) {
            std::ifstream in(proof_file);
            if (!in) throw InputError("cannot open proof script '" + proof_file + "'");
            Derivation d = parse_proof_script(in);
            Verdict v = check_derivation(d);
            if (format == "json") {
                json out{{"accepted", v.accepted}};
                if (!v.accepted) {
                    out["step"] = v.step;
                    out["reason"] = v.reason;
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << v.to_string() << "\n";
            }
            return v.accepted ? kExitOk : kExitRefuted;
        }

        if (dbl->parsed()) {
            FiniteAlgebra A = load_algebra_arg(dbl_in);
            FiniteAlgebra D = double_algebra(A);
            write_algebra_file(D, dbl_out);
            if (format == "json")
                std::cout << json{{"input", A.name}, {"output", D.name}, {"size", D.size()}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "wrote " << D.name << " (" << D.size() << " elements) to "
                          << dbl_out << "\n";
            return kExitOk;
        }

        if (translate->parsed()) {
            FiniteAlgebra A = load_algebra_arg(tr_in);
            FiniteAlgebra B = tr_to == "s" ? to_s(A) : to_s_prime(A);
            write_algebra_file(B, tr_out);
            if (format == "json")
                std::cout << json{{"input", A.name}, {"to", tr_to}}.dump(2) << "\n";
            else
                std::cout << "wrote " << B.name << " to " << tr_out << "\n";
            return kExitOk;
        }

        if (star->parsed()) {
            if (star_q.empty() == star_file.empty())
                throw InputError("give exactly one of --quasieq / --quasieq-file");
            std::string text = star_q;
            if (!star_file.empty()) {
                std::ifstream in(star_file);
                if (!in) throw InputError("cannot open '" + star_file + "'");
                std::ostringstream buf;
                for (std::string line; std::getline(in, line);) {
                    auto hash = line.find('#');
                    if (hash != std::string::npos) line = line.substr(0, hash);
                    if (line.find_first_not_of(" \t\r") != std::string::npos) buf << line << " ";
                }
                text = buf.str();
            }
            StarredQuasiEquation st = star_quasieq(parse_quasiequation(text));
            std::ostringstream body;
            body << render(st.starred) << "\n";
            if (st.equation_form) body << "# as an equation:\n" << render(*st.equation_form) << "\n";
            if (!star_out.empty()) {
                std::ofstream out(star_out);
                if (!out) throw InputError("cannot write '" + star_out + "'");
                out << body.str();
            }
            if (format == "json") {
                json out{{"starred", render(st.starred)}};
                if (st.equation_form) out["equation_form"] = render(*st.equation_form);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << body.str();
            }
            return kExitOk;
        }

        if (search->parsed()) {
            SearchSpec spec;
            spec.size = search_size;
            auto cls = class_from_name(search_class);
            if (!cls) throw InputError("unknown class '" + search_class + "'");
            spec.cls = *cls;
            spec.budget = search_budget;
            for (const auto& q : search_require) spec.require.push_back(parse_quasiequation(q));
            for (const auto& q : search_forbid) spec.forbid.push_back(parse_quasiequation(q));

            if (search_mode == "first") {
                FindOutcome out = find_model(spec);
                json j{{"mode", "first"},
                       {"found", out.model.has_value()},
                       {"nodes", out.stats.nodes},
                       {"budget_exceeded", out.stats.budget_exceeded}};
                if (out.model) {
                    j["size"] = out.model->size();
                    j["name"] = out.model->name;
                    if (!out_dir.empty())
                        write_algebra_file(*out.model, out_dir + "/" + out.model->name + ".alg");
                }
                if (format == "json") std::cout << j.dump(2) << "\n";
                else if (out.stats.budget_exceeded) std::cout << "budget exceeded\n";
                else if (out.model) {
                    std::cout << "found " << out.model->name << " (size " << out.model->size()
                              << ")\n";
                    if (out_dir.empty()) save_algebra(*out.model, std::cout);
                } else {
                    std::cout << "none up to size " << spec.size << "\n";
                }
                if (out.model) return kExitOk;
                return out.stats.budget_exceeded ? kExitInputError : kExitRefuted;
            }

            long long count = 0;
            SearchStats stats = enumerate_algebras(spec, [&](const FiniteAlgebra& A) {
                ++count;
                if (search_mode == "all") {
                    if (!out_dir.empty())
                        write_algebra_file(A, out_dir + "/" + A.name + ".alg");
                    else if (format != "json")
                        save_algebra(A, std::cout), std::cout << "\n";
                }
                return true;
            });
            if (format == "json") {
                std::cout << json{{"mode", search_mode},
                                  {"class", search_class},
                                  {"size", spec.size},
                                  {"count", count},
                                  {"nodes", stats.nodes},
                                  {"budget_exceeded", stats.budget_exceeded}}
                                 .dump(2)
                          << "\n";
            } else {
                if (stats.budget_exceeded) std::cout << "budget exceeded after ";
                std::cout << count << " algebras of size " << spec.size << " ("
                          << class_name(spec.cls) << ")\n";
            }
            return stats.budget_exceeded ? kExitInputError : kExitOk;
        }

        if (catalog->parsed()) {
            if (cat_list || (!cat_selftest && cat_get.empty())) {
                if (format == "json") {
                    json out = json::array();
                    for (const auto& e : catalog_entries())
                        out.push_back({{"key", e.key}, {"provenance", e.provenance}});
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (const auto& e : catalog_entries())
                        std::cout << e.key << "  -- " << e.provenance << "\n";
                }
            }
            if (cat_selftest) {
                bool ok = validate_s_algebra(catalog_get("A8")).ok() &&
                          validate_s_algebra(catalog_get("L3star")).ok() &&
                          check_mv(catalog_get("L3")).ok() &&
                          check_n4_lattice(catalog_get("A4")).ok() &&
                          !check_n3_lattice(catalog_get("A4")).ok() &&
                          validate_s_algebra(catalog_get("B2")).ok() &&
                          validate_s_algebra(catalog_get("T1")).ok();
                std::cout << (ok ? "catalog self-test passed\n" : "catalog self-test FAILED\n");
                if (!ok) return kExitRefuted;
            }
            if (!cat_get.empty()) {
                FiniteAlgebra A = catalog_get(cat_get);
                if (!cat_out.empty()) {
                    write_algebra_file(A, cat_out);
                    std::cout << "wrote " << A.name << " to " << cat_out << "\n";
                } else {
                    save_algebra(A, std::cout);
                }
            }
            return kExitOk;
        }

        // paper-suite
        auto results = run_paper_suite();
        if (format == "json") {
            json out = json::array();
            for (const auto& r : results)
                out.push_back({{"index", r.index},
                               {"label", r.label},
                               {"passed", r.passed},
                               {"informational", r.informational},
                               {"millis", r.millis},
                               {"detail", r.detail}});
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << format_paper_suite(results);
        }
        for (const auto& r : results)
            if (!r.informational && !r.passed) return kExitRefuted;
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

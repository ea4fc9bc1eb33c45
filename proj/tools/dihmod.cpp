#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dihedral/heckeold.hpp"
#include "dihedral/modcheck.hpp"
#include "dihedral/serretrick.hpp"
#include "dihedral/thetaseries.hpp"

using json = nlohmann::ordered_json;
using namespace dihedral;

namespace {

json form_json(const BinaryQuadraticForm& f) { return json::array({f.a, f.b, f.c}); }

json cyc_json(const CycElt& x) {
    return json{{"m", x.modulus()->m()}, {"coeffs", x.coeffs()}};
}

json res_json(const ResElt& x) {
    return json{{"p", x.field()->p()},
                {"m", x.field()->modulus()->m()},
                {"factor", x.field()->factor()},
                {"coeffs", x.coeffs()}};
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DIHMOD_CACHE_DIR")) return env;
    return {};
}

// emit-through cache: print the cached bytes when present, otherwise compute,
// store, and print. Computation is deterministic, so hits never change output.
int emit_cached(const std::string& cache_dir, const std::string& key,
                const std::function<std::string()>& compute) {
    if (!cache_dir.empty()) {
        std::filesystem::path path = std::filesystem::path(cache_dir) / key;
        if (std::filesystem::exists(path)) {
            std::ifstream in(path, std::ios::binary);
            std::cout << in.rdbuf();
            return 0;
        }
        std::string out = compute();
        std::filesystem::create_directories(cache_dir);
        std::ofstream f(path, std::ios::binary);
        f << out;
        std::cout << out;
        return 0;
    }
    std::cout << compute();
    return 0;
}

ClassCharacter character_for(const FormClassGroupPtr& G, std::vector<i64> exps) {
    if (exps.empty()) throw std::domain_error("--chi requires at least one exponent");
    return make_character(G, std::move(exps));
}

std::string chi_key(const std::vector<i64>& exps) {
    std::string s;
    for (i64 e : exps) s += (s.empty() ? "" : "_") + std::to_string(e);
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd dihedral mod-p representations from quadratic fields"};
    app.require_subcommand(1);

    i64 D_flag = 0, p_flag = 2, B_flag = 200, bound_flag = 100;
    std::vector<i64> chi_flag;
    std::string cache_flag;
    int jobs_flag = 0;
    bool csv_flag = false, json_flag = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cache-dir", cache_flag, "cache directory");
        sub->add_option("--jobs", jobs_flag, "parallelism degree (results identical)");
        sub->add_flag("--json", json_flag, "JSON output (default)");
    };

    auto* sc_cg = app.add_subcommand("classgroup", "form class group of Q(sqrt D)");
    sc_cg->add_option("--D", D_flag, "fundamental discriminant")->required();
    add_common(sc_cg);

    auto* sc_rep = app.add_subcommand("rep", "induced representation summary");
    sc_rep->add_option("--D", D_flag)->required();
    sc_rep->add_option("--chi", chi_flag, "character exponents")->required()->delimiter(',');
    sc_rep->add_option("--p", p_flag, "residue characteristic");
    sc_rep->add_option("--bound", bound_flag, "trace table bound");
    add_common(sc_rep);

    auto* sc_tr = app.add_subcommand("traces", "Frobenius trace table");
    sc_tr->add_option("--D", D_flag)->required();
    sc_tr->add_option("--chi", chi_flag)->required()->delimiter(',');
    sc_tr->add_option("--p", p_flag);
    sc_tr->add_option("--bound", bound_flag);
    add_common(sc_tr);

    auto* sc_serre = app.add_subcommand("serre", "Serre invariants");
    sc_serre->add_option("--D", D_flag)->required();
    sc_serre->add_option("--chi", chi_flag)->required()->delimiter(',');
    sc_serre->add_option("--p", p_flag);
    add_common(sc_serre);

    auto* sc_theta = app.add_subcommand("theta", "theta q-expansion");
    i64 modp_flag = 0;
    sc_theta->add_option("--D", D_flag)->required();
    sc_theta->add_option("--chi", chi_flag)->required()->delimiter(',');
    sc_theta->add_option("--B", B_flag, "number of coefficients");
    sc_theta->add_option("--mod-p", modp_flag, "reduce mod a prime over p");
    sc_theta->add_flag("--csv", csv_flag, "CSV coefficient table");
    add_common(sc_theta);

    auto* sc_ver = app.add_subcommand("verify", "trace/coefficient comparison");
    sc_ver->add_option("--D", D_flag)->required();
    sc_ver->add_option("--chi", chi_flag)->required()->delimiter(',');
    sc_ver->add_option("--p", p_flag);
    sc_ver->add_option("--bound", bound_flag, "compare at primes up to this bound");
    add_common(sc_ver);

    auto* sc_old = app.add_subcommand("oldform", "T_p oldform block");
    i64 ap_flag = 0, eps_flag = 1, r_flag = 2;
    int k_flag = 1, delta_flag = 1;
    sc_old->add_option("--ap", ap_flag, "T_p eigenvalue")->required();
    sc_old->add_option("--eps", eps_flag, "nebentypus value at p");
    sc_old->add_option("--k", k_flag, "weight");
    sc_old->add_option("--delta", delta_flag, "1 if p does not divide the level");
    sc_old->add_option("--r", r_flag, "power of p added to the level");
    sc_old->add_option("--p", p_flag);
    add_common(sc_old);

    auto* sc_trick = app.add_subcommand("trick", "auxiliary prime search");
    i64 f_flag = 1;
    sc_trick->add_option("--D", D_flag)->required();
    sc_trick->add_option("--bound", bound_flag, "height bound");
    sc_trick->add_option("--f", f_flag, "character conductor norm");
    add_common(sc_trick);

    auto* sc_irr = app.add_subcommand("irred", "reducibility classifier");
    sc_irr->add_option("--D", D_flag)->required();
    sc_irr->add_option("--chi", chi_flag)->required()->delimiter(',');
    sc_irr->add_option("--p", p_flag);
    sc_irr->add_option("--bound", bound_flag, "trace sample bound");
    add_common(sc_irr);

    auto* sc_px = app.add_subcommand("paper-examples", "run the worked example suite");
    add_common(sc_px);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    std::string cache_dir = resolve_cache_dir(cache_flag);

    try {
        if (sc_cg->parsed()) {
            i64 D = D_flag;
            return emit_cached(cache_dir, "classgroup_D" + std::to_string(D) + ".json", [&] {
                auto G = class_group(FundamentalDiscriminant(D));
                json j{{"D", D}, {"h", G->order()}};
                json cyc = json::array();
                for (auto [gen, ord] : G->cyclic_decomposition())
                    cyc.push_back(json::array({form_json(G->classes()[gen]), ord}));
                j["cyclic"] = cyc;
                json cls = json::array();
                for (const auto& f : G->classes()) cls.push_back(form_json(f));
                j["classes"] = cls;
                return j.dump(2) + "\n";
            });
        }

        if (sc_rep->parsed()) {
            FundamentalDiscriminant D(D_flag);
            auto G = class_group(D);
            auto chi = character_for(G, chi_flag);
            DihedralRep rep(D, chi, p_flag);
            SerreInvariants si = serre_invariants(rep);
            json j{{"D", D.D},
                   {"m", chi.order()},
                   {"p", p_flag},
                   {"N", si.conductor},
                   {"weight_report",
                    si.weight_report == WeightReport::MinimalWeightOne
                        ? "minimal_weight_one"
                        : "unsupported_ramified_at_p"},
                   {"exceptional", si.exceptional},
                   {"lift_case", lift_case(rep) == LiftCase::CaseA ? "case_a" : "case_b"}};
            json tr = json::array();
            for (i64 l : primes_up_to(bound_flag)) {
                if (D.D % l == 0) continue;
                tr.push_back(json{{"l", l}, {"trace", cyc_json(frob_trace(rep, l))}});
            }
            j["traces"] = tr;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (sc_tr->parsed()) {
            FundamentalDiscriminant D(D_flag);
            auto G = class_group(D);
            auto chi = character_for(G, chi_flag);
            DihedralRep rep(D, chi, p_flag);
            json j{{"D", D.D}, {"m", chi.order()}, {"p", p_flag}};
            json tr = json::array();
            for (i64 l : primes_up_to(bound_flag)) {
                if (D.D % l == 0) continue;
                CycElt t = frob_trace(rep, l);
                tr.push_back(json{{"l", l},
                                  {"trace", cyc_json(t)},
                                  {"mod_P", res_json(reduce_mod_P(t, rep.residue()))}});
            }
            j["traces"] = tr;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (sc_serre->parsed()) {
            FundamentalDiscriminant D(D_flag);
            auto G = class_group(D);
            auto chi = character_for(G, chi_flag);
            DihedralRep rep(D, chi, p_flag);
            SerreInvariants si = serre_invariants(rep);
            json j{{"D", D.D}, {"p", p_flag}, {"N", si.conductor}};
            if (si.weight_report == WeightReport::MinimalWeightOne)
                j["weight"] = 1;
            else
                j["weight"] = "unsupported_ramified_at_p";
            j["exceptional"] = si.exceptional;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (sc_theta->parsed()) {
            i64 D = D_flag, B = B_flag, modp = modp_flag;
            std::string key = "theta_D" + std::to_string(D) + "_chi" + chi_key(chi_flag) +
                              "_twist0_B" + std::to_string(B) +
                              (modp ? "_p" + std::to_string(modp) : "") +
                              (csv_flag ? ".csv" : ".json");
            return emit_cached(cache_dir, key, [&] {
                FundamentalDiscriminant Df(D);
                auto G = class_group(Df);
                auto chi = character_for(G, chi_flag);
                IdealCharacter ic(Df, chi);
                auto th = theta_coeffs(ic, B);
                std::ostringstream out;
                if (modp) {
                    auto F = residue_field(chi.order(), modp);
                    auto thp = reduce_qexp(th, F);
                    if (csv_flag) {
                        for (i64 n = 1; n <= B; ++n) {
                            out << n;
                            for (i64 c : thp.at(n).coeffs()) out << "," << c;
                            out << "\n";
                        }
                    } else {
                        json j{{"D", D}, {"m", chi.order()}, {"p", modp}, {"B", B}};
                        json a = json::array();
                        for (i64 n = 1; n <= B; ++n) a.push_back(thp.at(n).coeffs());
                        j["factor"] = F->factor();
                        j["coeffs"] = a;
                        out << j.dump(2) << "\n";
                    }
                } else {
                    if (csv_flag) {
                        for (i64 n = 1; n <= B; ++n) {
                            out << n;
                            for (i64 c : th.at(n).coeffs()) out << "," << c;
                            out << "\n";
                        }
                    } else {
                        json j{{"D", D}, {"m", chi.order()}, {"B", B}};
                        json a = json::array();
                        for (i64 n = 1; n <= B; ++n) a.push_back(th.at(n).coeffs());
                        j["coeffs"] = a;
                        out << j.dump(2) << "\n";
                    }
                }
                return out.str();
            });
        }

        if (sc_ver->parsed()) {
            FundamentalDiscriminant D(D_flag);
            auto G = class_group(D);
            auto chi = character_for(G, chi_flag);
            DihedralRep rep(D, chi, p_flag);
            IdealCharacter ic(D, chi);
            auto th = theta_coeffs(ic, bound_flag);
            auto thp = reduce_qexp(th, rep.residue());
            std::vector<i64> excluded; // ramified primes only; p itself is
            for (auto [q, e] : factorize(D.D < 0 ? -D.D : D.D)) // unramified here
                excluded.push_back(q);
            auto rpt = verify_modularity(rep, thp, bound_flag, excluded);
            json viol = json::array();
            for (i64 q : rpt.mismatches) viol.push_back(json{{"kind", "trace"}, {"q", q}});
            for (i64 q : rpt.epsilon_mismatches)
                viol.push_back(json{{"kind", "epsilon"}, {"q", q}});
            json j{{"D", D.D},
                   {"p", p_flag},
                   {"bound", bound_flag},
                   {"checked", rpt.checked},
                   {"epsilon_checked", rpt.epsilon_checked},
                   {"violations", viol}};
            std::cout << j.dump(2) << "\n";
            return viol.empty() ? 0 : 1;
        }

        if (sc_old->parsed()) {
            auto Z = cyc_modulus(1); // plain integers
            auto mk = [&](i64 n) { return CycElt::from_int(Z, n); };
            auto blk = tp_matrix(mk(ap_flag), mk(eps_flag), k_flag, delta_flag, p_flag, r_flag);
            json mat = json::array();
            for (const auto& row : blk.matrix) {
                json r = json::array();
                for (const auto& e : row) r.push_back(e.coeffs()[0]);
                mat.push_back(r);
            }
            json cp = json::array();
            for (const auto& c : char_poly(blk)) cp.push_back(c.coeffs()[0]);
            json j{{"p", p_flag}, {"r", r_flag}, {"matrix", mat}, {"char_poly", cp}};
            if (r_flag == 2)
                j["stabilizer"] = json::array(
                    {1, -ap_flag, (blk.beta.coeffs())[0]}); // f - ap f(q^p) + beta f(q^{p^2})
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (sc_trick->parsed()) {
            FundamentalDiscriminant D(D_flag);
            auto aux = find_auxiliary(D, f_flag, bound_flag > 100 ? bound_flag : 10000);
            bool norm_ok = quad_norm(D, aux.lambda) == -aux.l;
            bool cong_ok = mod_reduce(aux.lambda.u - 1, aux.congruence_modulus) == 0 &&
                           mod_reduce(aux.lambda.v, aux.congruence_modulus) == 0;
            bool split_ok = splitting_type(D, aux.l) == SplittingType::Split;
            bool prime_ok = aux.l % 2 == 1 && is_prime(aux.l);
            json j{{"D", D.D},
                   {"lambda", json{{"u", aux.lambda.u}, {"v", aux.lambda.v}}},
                   {"l", aux.l},
                   {"congruence_modulus", aux.congruence_modulus},
                   {"checks",
                    json{{"norm_is_minus_l", norm_ok},
                         {"congruent_to_1", cong_ok},
                         {"l_splits", split_ok},
                         {"l_odd_prime", prime_ok}}}};
            std::cout << j.dump(2) << "\n";
            return (norm_ok && cong_ok && split_ok && prime_ok) ? 0 : 1;
        }

        if (sc_irr->parsed()) {
            FundamentalDiscriminant D(D_flag);
            auto G = class_group(D);
            auto chi = character_for(G, chi_flag);
            DihedralRep rep(D, chi, p_flag);
            std::map<i64, ResElt> traces;
            for (i64 l : primes_up_to(bound_flag)) {
                if (D.D % l == 0 || l == p_flag) continue;
                traces.emplace(l, reduce_mod_P(frob_trace(rep, l), rep.residue()));
            }
            auto r = classify_reducible(traces, p_flag, std::abs(D.D), bound_flag);
            const char* kind = nullptr;
            switch (r.kind) {
                case ReducibilityKind::IrreducibleOrTrivial: kind = "irreducible_or_trivial"; break;
                case ReducibilityKind::Irreducible: kind = "irreducible"; break;
                case ReducibilityKind::EisensteinPattern: kind = "eisenstein_pattern"; break;
                case ReducibilityKind::Inconsistent: kind = "inconsistent"; break;
            }
            json j{{"D", D.D}, {"p", p_flag}, {"level", std::abs(D.D)},
                   {"sample_bound", bound_flag}, {"kind", kind},
                   {"violations", json::array()}};
            if (r.kind == ReducibilityKind::EisensteinPattern)
                j["character_order"] = r.character_order;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (sc_px->parsed()) {
            struct Row {
                std::string name;
                bool pass;
            };
            std::vector<Row> rows;
            auto add = [&](std::string name, bool pass) {
                rows.push_back({std::move(name), pass});
            };

            FundamentalDiscriminant Dm23(-23), D2089(2089), D229(229);
            auto Gm23 = class_group(Dm23);
            auto G2089 = class_group(D2089);
            auto G229 = class_group(D229);
            add("h(-23) = 3", Gm23->order() == 3);
            add("h(2089) = 3", G2089->order() == 3);
            add("narrow h+(229) = 3", G229->order() == 3);

            auto chi2089 = make_character(G2089, {1});
            auto chi229 = make_character(G229, {1});
            DihedralRep r2089(D2089, chi2089, 2), r229(D229, chi229, 2);
            add("2 splits in Q(sqrt 2089), principal class",
                splitting_type(D2089, 2) == SplittingType::Split &&
                    chi2089.trivial_on(prime_form(D2089, 2)));
            add("exceptional at 2 for D=2089", exceptionality(r2089));
            add("2 inert in Q(sqrt 229)", splitting_type(D229, 2) == SplittingType::Inert);
            add("exceptional at 2 for D=229", exceptionality(r229));
            add("fundamental unit norm of 229 is -1", fundamental_unit_norm(D229) == -1);
            add("no characteristic-zero lift at level 229",
                no_char0_lift_same_level(r229));

            auto chim23 = make_character(Gm23, {1});
            DihedralRep rm23(Dm23, chim23, 2);
            IdealCharacter ic(Dm23, chim23);
            auto th = theta_coeffs(ic, 1000);
            auto thp = reduce_qexp(th, rm23.residue());
            auto rpt = verify_modularity(rm23, thp, 1000, {2, 23});
            add("theta of D=-23 matches traces to 1000", rpt.mismatches.empty());

            bool all = true;
            for (const auto& r : rows) {
                std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "\n";
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

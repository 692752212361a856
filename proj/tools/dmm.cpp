#include "dmm/catalog.hpp"
#include "dmm/classify.hpp"
#include "dmm/constructions.hpp"
#include "dmm/dot.hpp"
#include "dmm/enumerate.hpp"
#include "dmm/json_io.hpp"
#include "dmm/laws.hpp"
#include "dmm/morphisms.hpp"
#include "dmm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using dmm::AlgebraClass;
using dmm::FiniteAlgebra;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Catalog name, family pattern (A5, B3, S7), or a JSON file path.
FiniteAlgebra load_algebra(const std::string& what) {
    namespace fs = std::filesystem;
    if (fs::exists(what)) {
        auto raw = dmm::raw_from_json(dmm::read_json_file(what));
        auto cls = raw.neg ? AlgebraClass::IRL : AlgebraClass::RL;
        return dmm::validate_or_throw(raw, cls, what);
    }
    return dmm::catalog::resolve(what);
}

json flag_json(const dmm::Flag& f, const FiniteAlgebra* alg = nullptr) {
    json j;
    j["value"] = f.value;
    if (f.witness) {
        j["witness"] = {{"law", f.witness->law}, {"at", f.witness->witness}};
        if (alg) j["witness"]["text"] = describe(*f.witness, alg);
    }
    return j;
}

json report_json(const dmm::ClassificationReport& r, const FiniteAlgebra& a) {
    json j;
    j["is_lattice"] = flag_json(r.is_lattice, &a);
    j["is_distributive"] = flag_json(r.is_distributive, &a);
    j["is_modular"] = flag_json(r.is_modular, &a);
    j["is_rl"] = flag_json(r.is_rl, &a);
    j["is_irl"] = flag_json(r.is_irl, &a);
    j["is_square_increasing"] = flag_json(r.is_square_increasing, &a);
    j["is_dunn"] = flag_json(r.is_dunn, &a);
    j["is_dmm"] = flag_json(r.is_dmm, &a);
    j["is_sugihara"] = flag_json(r.is_sugihara, &a);
    j["is_odd"] = flag_json(r.is_odd, &a);
    j["is_anti_idempotent"] = flag_json(r.is_anti_idempotent, &a);
    j["is_bounded"] = flag_json(r.is_bounded, &a);
    j["is_rigorously_compact"] = flag_json(r.is_rigorously_compact, &a);
    j["is_totally_ordered"] = flag_json(r.is_totally_ordered, &a);
    j["is_semilinear"] = flag_json(r.is_semilinear, &a);
    j["is_fsi"] = flag_json(r.is_fsi, &a);
    j["is_si"] = flag_json(r.is_si, &a);
    j["is_simple"] = flag_json(r.is_simple, &a);
    j["in_u"] = flag_json(r.in_u, &a);
    j["in_m"] = flag_json(r.in_m, &a);
    j["filter_count"] = r.filter_count;
    return j;
}

void print_report(const dmm::ClassificationReport& r, const FiniteAlgebra& a) {
    auto line = [&](const char* name, const dmm::Flag& f) {
        std::cout << "  " << name << ": " << (f.value ? "yes" : "no");
        if (!f.value && f.witness) std::cout << "   [" << describe(*f.witness, &a) << "]";
        std::cout << "\n";
    };
    line("lattice", r.is_lattice);
    line("distributive", r.is_distributive);
    line("modular", r.is_modular);
    line("residuated (RL)", r.is_rl);
    line("involutive (IRL)", r.is_irl);
    line("square-increasing", r.is_square_increasing);
    line("Dunn monoid", r.is_dunn);
    line("De Morgan monoid", r.is_dmm);
    line("Sugihara monoid", r.is_sugihara);
    line("odd", r.is_odd);
    line("anti-idempotent", r.is_anti_idempotent);
    line("bounded", r.is_bounded);
    line("rigorously compact", r.is_rigorously_compact);
    line("totally ordered", r.is_totally_ordered);
    line("semilinear", r.is_semilinear);
    line("FSI", r.is_fsi);
    line("SI", r.is_si);
    line("simple", r.is_simple);
    line("in U", r.in_u);
    line("in M", r.in_m);
    std::cout << "  deductive filters: " << r.filter_count << "\n";
}

int emit_algebra(const FiniteAlgebra& a, bool as_dot, const std::string& out_path,
                 const json& provenance = nullptr, const std::string& dot_name = "algebra") {
    std::string text = as_dot ? dmm::to_dot(a, dot_name) : algebra_to_json(a, provenance).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw dmm::error("cannot write " + out_path);
        out << text;
    }
    return kExitPass;
}

int run_verify(const std::string& section, bool parallel, int jobs, bool as_json) {
    dmm::verify::SuiteOptions opts;
    opts.section = section;
    opts.parallel = parallel;
    opts.jobs = jobs;
    auto suite = dmm::verify::run_suite(opts);
    if (as_json) {
        json out = json::array();
        for (const auto& r : suite.results)
            out.push_back({{"name", r.name},
                           {"section", r.section},
                           {"ref", r.ref},
                           {"passed", r.passed},
                           {"assertions", r.assertions},
                           {"ms", r.milliseconds},
                           {"failures", r.failures}});
        json top;
        top["checks"] = out;
        top["coverage_ok"] = suite.coverage_ok;
        top["missing_ops"] = suite.missing_ops;
        std::cout << top.dump(2) << "\n";
    } else {
        for (const auto& r : suite.results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  §" << r.section << "  " << r.name
                      << "  (" << r.ref << ", " << r.assertions << " assertions, "
                      << static_cast<long long>(r.milliseconds) << " ms)\n";
            for (const auto& f : r.failures) std::cout << "      ! " << f << "\n";
        }
        if (!suite.coverage_ok) {
            std::cout << "FAIL  coverage  unexercised operations:";
            for (const auto& op : suite.missing_ops) std::cout << " " << op;
            std::cout << "\n";
        } else if (section == "all") {
            std::cout << "PASS  coverage  every registered operation exercised\n";
        }
    }
    return suite.all_passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-algebra workbench for De Morgan and Dunn monoids"};
    app.require_subcommand(1);
    app.fallthrough();

    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads for parallel search (0 = all cores)");
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "exploration-order seed (outputs are order-canonical)");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "validate an algebra against a class");
    std::string v_input, v_class = "irl";
    bool v_json = false;
    cmd_validate->add_option("input", v_input, "catalog name or JSON file")->required();
    cmd_validate->add_option("--class", v_class, "rl|irl|dunn|dmm|u-member|m-member");
    cmd_validate->add_flag("--json", v_json, "machine-readable output");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "compute the classification report");
    std::string c_input;
    bool c_json = false;
    cmd_classify->add_option("input", c_input)->required();
    cmd_classify->add_flag("--json", c_json);

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "run a construction");
    cmd_construct->require_subcommand(1);
    cmd_construct->fallthrough();
    std::string skew_base, skew_order_file;
    auto* sc_skew = cmd_construct->add_subcommand("skew-reflect", "skew reflection of an RL");
    sc_skew->add_option("--base", skew_base)->required();
    sc_skew->add_option("--order", skew_order_file, "SkewOrderSpec JSON file")->required();
    std::string refl_base;
    auto* sc_refl = cmd_construct->add_subcommand("reflect", "reflection of an RL");
    sc_refl->add_option("--base", refl_base)->required();
    std::vector<std::string> prod_factors;
    auto* sc_prod = cmd_construct->add_subcommand("product", "direct product");
    sc_prod->add_option("--factors", prod_factors, "comma-separated inputs")
        ->required()
        ->delimiter(',');
    std::string rig_base;
    auto* sc_rig = cmd_construct->add_subcommand("rigorous-extension", "add new extrema");
    sc_rig->add_option("--base", rig_base)->required();
    std::string sub_base;
    std::vector<int> sub_seed;
    auto* sc_sub = cmd_construct->add_subcommand("subalgebra", "generated subalgebra");
    sc_sub->add_option("--base", sub_base)->required();
    sc_sub->add_option("--seed-elements", sub_seed, "generator indices")->delimiter(',');
    std::string dec_base;
    auto* sc_dec = cmd_construct->add_subcommand("decompose", "crystalline decomposition");
    sc_dec->add_option("--base", dec_base)->required();
    int sug_n = 0, ap_p = 0, bp_p = 0;
    auto* sc_sug = cmd_construct->add_subcommand("sugihara", "Sugihara chain S_n");
    sc_sug->add_option("-n", sug_n)->required();
    auto* sc_ap = cmd_construct->add_subcommand("ap", "the chain algebra A_p");
    sc_ap->add_option("-p", ap_p)->required();
    auto* sc_bp = cmd_construct->add_subcommand("bp", "the algebra B_p");
    sc_bp->add_option("-p", bp_p)->required();
    std::string construct_out;
    bool construct_dot = false;
    cmd_construct->add_option("--out", construct_out, "output file (default stdout)");
    cmd_construct->add_flag("--dot", construct_dot, "emit a Hasse diagram instead of JSON");

    // quotient
    auto* cmd_quotient = app.add_subcommand("quotient", "quotient by a deductive filter");
    std::string q_input;
    int q_generator = -1;
    bool q_dot = false;
    std::string q_out;
    cmd_quotient->add_option("input", q_input)->required();
    cmd_quotient->add_option("--generator", q_generator, "filter generator element index")
        ->required();
    cmd_quotient->add_flag("--dot", q_dot);
    cmd_quotient->add_option("--out", q_out);

    // filters
    auto* cmd_filters = app.add_subcommand("filters", "list the deductive filters");
    std::string f_input;
    bool f_json = false;
    cmd_filters->add_option("input", f_input)->required();
    cmd_filters->add_flag("--json", f_json);

    // homs / embed / retract
    auto* cmd_homs = app.add_subcommand("homs", "homomorphism search");
    std::string h_from, h_to;
    bool h_json = false;
    cmd_homs->add_option("--from", h_from)->required();
    cmd_homs->add_option("--to", h_to)->required();
    cmd_homs->add_flag("--json", h_json);

    auto* cmd_embed = app.add_subcommand("embed", "embedding search");
    std::string e_from, e_to;
    bool e_json = false;
    cmd_embed->add_option("--from", e_from)->required();
    cmd_embed->add_option("--to", e_to)->required();
    cmd_embed->add_flag("--json", e_json);

    auto* cmd_retract = app.add_subcommand("retract", "retract check (inner into outer)");
    std::string r_inner, r_outer;
    bool r_json = false;
    cmd_retract->add_option("--inner", r_inner)->required();
    cmd_retract->add_option("--outer", r_outer)->required();
    cmd_retract->add_flag("--json", r_json);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "exhaustive isomorphism-free generation");
    std::string en_class = "dmm", en_contains, en_sole, en_base, en_out;
    int en_min = 1, en_max = 6;
    bool en_simple = false, en_si = false, en_fsi = false, en_chain = false, en_anti = false;
    cmd_enum->add_option("--class", en_class, "dmm|dunn|irl|rl|u-member|m-member");
    cmd_enum->add_option("--min-size", en_min);
    cmd_enum->add_option("--max-size", en_max);
    cmd_enum->add_flag("--simple", en_simple);
    cmd_enum->add_flag("--si", en_si);
    cmd_enum->add_flag("--fsi", en_fsi);
    cmd_enum->add_flag("--totally-ordered", en_chain);
    cmd_enum->add_flag("--anti-idempotent", en_anti);
    cmd_enum->add_option("--contains", en_contains, "require this subalgebra");
    cmd_enum->add_option("--sole-proper", en_sole, "require this sole proper subalgebra");
    cmd_enum->add_option("--base", en_base, "pin this 0-generated base (extension search)");
    cmd_enum->add_option("--out", en_out, "directory for one JSON per result plus manifest");

    // catalog
    auto* cmd_catalog = app.add_subcommand("catalog", "named algebras and case orders");
    auto* cat_list = cmd_catalog->add_subcommand("list", "list catalog names");
    std::string cat_name, cat_out;
    bool cat_json = false, cat_dot = false;
    auto* cat_show = cmd_catalog->add_subcommand("show", "print one catalog algebra");
    cat_show->add_option("name", cat_name)->required();
    cat_show->add_flag("--json", cat_json);
    cat_show->add_flag("--dot", cat_dot);
    cat_show->add_option("--out", cat_out);
    std::string ord_name;
    auto* cat_order = cmd_catalog->add_subcommand("order", "print a case I-IV skew-order spec");
    cat_order->add_option("name", ord_name, "case1|case2|case3|case4")->required();

    // verify-paper
    auto* cmd_verify = app.add_subcommand("verify-paper", "run the claim-verification suite");
    std::string vp_section = "all";
    bool vp_json = false;
    cmd_verify->add_option("--section", vp_section, "all|2|3|4|5|6|7|8|9");
    cmd_verify->add_flag("--json", vp_json);

    // export
    auto* cmd_export = app.add_subcommand("export", "export an algebra as JSON or DOT");
    std::string x_name, x_out;
    bool x_dot = false, x_json_flag = false;
    cmd_export->add_option("--name", x_name)->required();
    cmd_export->add_flag("--dot", x_dot);
    cmd_export->add_flag("--json", x_json_flag);
    cmd_export->add_option("--out", x_out);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif
    bool parallel = jobs != 1;

    try {
        if (*cmd_validate) {
            auto cls = dmm::algebra_class_from_string(v_class);
            dmm::RawTables raw;
            dmm::ValidationOutcome outcome;
            try {
                if (std::filesystem::exists(v_input)) {
                    raw = dmm::raw_from_json(dmm::read_json_file(v_input));
                } else {
                    raw = to_raw(dmm::catalog::resolve(v_input));
                }
                outcome = dmm::validate(raw, cls);
            } catch (const dmm::malformed_table& ex) {
                // malformed input counts as a failed validation, not a usage error
                if (v_json) {
                    std::cout << nlohmann::json{{"ok", false}, {"malformed", ex.what()}}.dump(2)
                              << "\n";
                } else {
                    std::cout << v_input << ": malformed input: " << ex.what() << "\n";
                }
                return kExitCheckFailed;
            }
            if (v_json) {
                json j;
                j["ok"] = outcome.ok();
                j["violations"] = json::array();
                for (const auto& v : outcome.violations)
                    j["violations"].push_back({{"law", v.law}, {"witness", v.witness}});
                if (outcome.ok()) j["report"] = report_json(classify(*outcome.algebra),
                                                            *outcome.algebra);
                std::cout << j.dump(2) << "\n";
            } else if (outcome.ok()) {
                std::cout << v_input << ": valid " << to_string(cls) << "\n";
                print_report(classify(*outcome.algebra), *outcome.algebra);
            } else {
                std::cout << v_input << ": not a valid " << to_string(cls) << "\n";
                for (const auto& v : outcome.violations)
                    std::cout << "  violated: " << describe(v) << "\n";
            }
            return outcome.ok() ? kExitPass : kExitCheckFailed;
        }

        if (*cmd_classify) {
            auto a = load_algebra(c_input);
            auto rep = classify(a);
            if (c_json)
                std::cout << report_json(rep, a).dump(2) << "\n";
            else {
                std::cout << c_input << " (" << a.size << " elements)\n";
                print_report(rep, a);
            }
            return kExitPass;
        }

        if (*cmd_construct) {
            FiniteAlgebra result;
            json provenance;
            std::string dot_name = "constructed";
            if (*sc_skew) {
                auto base = load_algebra(skew_base);
                auto spec = dmm::skew_order_from_json(dmm::read_json_file(skew_order_file));
                result = dmm::skew_reflection(base, spec);
                provenance = {{"op", "skew_reflection"}, {"base", skew_base},
                              {"order", skew_order_file}};
                dot_name = "skew_reflection";
            } else if (*sc_refl) {
                result = dmm::reflection(load_algebra(refl_base));
                provenance = {{"op", "reflection"}, {"base", refl_base}};
                dot_name = "reflection";
            } else if (*sc_prod) {
                std::vector<FiniteAlgebra> factors;
                for (const auto& f : prod_factors) factors.push_back(load_algebra(f));
                result = dmm::direct_product(factors).algebra;
                provenance = {{"op", "direct_product"}, {"factors", prod_factors}};
                dot_name = "product";
            } else if (*sc_rig) {
                result = dmm::rigorous_extension(load_algebra(rig_base));
                provenance = {{"op", "rigorous_extension"}, {"base", rig_base}};
            } else if (*sc_sub) {
                auto sub = dmm::subalgebra_generated(load_algebra(sub_base), sub_seed);
                result = sub.algebra;
                provenance = {{"op", "subalgebra_generated"}, {"base", sub_base},
                              {"seed", sub_seed}, {"embedding", sub.embedding}};
            } else if (*sc_dec) {
                auto dec = dmm::decompose_crystalline(load_algebra(dec_base));
                json j;
                j["base"] = algebra_to_json(dec.base);
                j["spec"] = skew_order_to_json(dec.spec);
                j["carrier"] = dec.carrier;
                if (construct_out.empty())
                    std::cout << j.dump(2) << "\n";
                else
                    dmm::write_json_file(construct_out, j);
                return kExitPass;
            } else if (*sc_sug) {
                result = dmm::catalog::build_sugihara(sug_n);
                provenance = {{"op", "sugihara"}, {"n", sug_n}};
            } else if (*sc_ap) {
                result = dmm::catalog::build_Ap(ap_p);
                provenance = {{"op", "ap"}, {"p", ap_p}};
            } else if (*sc_bp) {
                result = dmm::catalog::build_Bp(bp_p);
                provenance = {{"op", "bp"}, {"p", bp_p}};
            }
            return emit_algebra(result, construct_dot, construct_out, provenance, dot_name);
        }

        if (*cmd_quotient) {
            auto a = load_algebra(q_input);
            if (q_generator < 0 || q_generator >= a.size)
                throw dmm::error("generator index out of range");
            dmm::DeductiveFilter g{a.up_set(q_generator)};
            auto q = dmm::quotient(a, g);
            json provenance = {{"op", "quotient"},
                               {"base", q_input},
                               {"filter_generator", q_generator},
                               {"blocks", q.theta.block_of}};
            return emit_algebra(q.algebra, q_dot, q_out, provenance, "quotient");
        }

        if (*cmd_filters) {
            auto a = load_algebra(f_input);
            auto filters = dmm::deductive_filters(a);
            if (f_json) {
                json j = json::array();
                for (const auto& g : filters) j.push_back(g.members);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << filters.size() << " deductive filters\n";
                for (const auto& g : filters) {
                    std::cout << "  {";
                    for (size_t i = 0; i < g.members.size(); ++i)
                        std::cout << (i ? "," : "") << a.name_of(g.members[i]);
                    std::cout << "}\n";
                }
            }
            return kExitPass;
        }

        auto morphism_listing = [&](const std::string& from, const std::string& to,
                                    bool as_json, bool embeddings) {
            auto a = load_algebra(from);
            auto b = load_algebra(to);
            auto ms = embeddings ? dmm::find_embeddings(a, b) : dmm::find_homomorphisms(a, b);
            for (auto& m : ms) {
                m.source = from;
                m.target = to;
            }
            if (as_json) {
                json j = json::array();
                for (const auto& m : ms) j.push_back(morphism_to_json(m));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << ms.size() << (embeddings ? " embedding(s)\n" : " homomorphism(s)\n");
                for (const auto& m : ms) {
                    std::cout << "  [";
                    for (size_t i = 0; i < m.map.size(); ++i)
                        std::cout << (i ? "," : "") << m.map[i];
                    std::cout << "]\n";
                }
            }
            return kExitPass;
        };

        if (*cmd_homs) return morphism_listing(h_from, h_to, h_json, false);
        if (*cmd_embed) return morphism_listing(e_from, e_to, e_json, true);

        if (*cmd_retract) {
            auto inner = load_algebra(r_inner);
            auto outer = load_algebra(r_outer);
            auto w = dmm::is_retract(inner, outer);
            if (r_json) {
                json j;
                j["retract"] = w.has_value();
                if (w) {
                    j["section"] = morphism_to_json(w->g);
                    j["retraction"] = morphism_to_json(w->h);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << r_inner << (w ? " is" : " is not") << " a retract of " << r_outer
                          << "\n";
            }
            return w ? kExitPass : kExitCheckFailed;
        }

        if (*cmd_enum) {
            dmm::ConstraintBundle b;
            b.cls = dmm::algebra_class_from_string(en_class);
            b.min_size = en_min;
            b.max_size = en_max;
            b.simple = en_simple;
            b.si = en_si;
            b.fsi = en_fsi;
            b.totally_ordered = en_chain;
            b.anti_idempotent = en_anti;
            if (!en_contains.empty()) b.contains = load_algebra(en_contains);
            if (!en_sole.empty()) b.sole_proper = load_algebra(en_sole);
            dmm::EnumerateOptions opts{parallel, jobs, seed};
            auto res = en_base.empty()
                           ? dmm::enumerate_algebras(b, opts)
                           : dmm::enumerate_extensions(load_algebra(en_base), b, opts);
            json manifest;
            manifest["count"] = res.algebras.size();
            manifest["jobs"] = res.stats.job_count;
            manifest["tables_accepted"] = res.stats.tables_accepted;
            manifest["ms"] = res.stats.milliseconds;
            json sizes = json::array();
            for (const auto& a : res.algebras) sizes.push_back(a.size);
            manifest["sizes"] = sizes;
            if (en_out.empty()) {
                json out;
                out["manifest"] = manifest;
                out["algebras"] = json::array();
                for (const auto& a : res.algebras) out["algebras"].push_back(algebra_to_json(a));
                std::cout << out.dump(2) << "\n";
            } else {
                std::filesystem::create_directories(en_out);
                for (size_t i = 0; i < res.algebras.size(); ++i)
                    dmm::write_json_file(en_out + "/algebra_" + std::to_string(i) + ".json",
                                         algebra_to_json(res.algebras[i]));
                dmm::write_json_file(en_out + "/manifest.json", manifest);
                std::cout << "wrote " << res.algebras.size() << " algebras to " << en_out << "\n";
            }
            return kExitPass;
        }

        if (*cmd_catalog) {
            if (*cat_list) {
                for (const auto& n : dmm::catalog::names()) std::cout << n << "\n";
                std::cout << "families: A<p> (p <= 11), B<p> (p <= 11), S<n> (n <= 15)\n";
                std::cout << "case orders: case1 case2 case3 case4\n";
                return kExitPass;
            }
            if (*cat_show) {
                auto a = dmm::catalog::resolve(cat_name);
                if (cat_dot) return emit_algebra(a, true, cat_out, nullptr, cat_name);
                if (cat_json) return emit_algebra(a, false, cat_out, nullptr, cat_name);
                std::cout << cat_name << " (" << a.size << " elements)\n";
                print_report(classify(a), a);
                return kExitPass;
            }
            if (*cat_order) {
                std::string base;
                auto spec = dmm::catalog::case_order(ord_name, &base);
                json j = skew_order_to_json(spec);
                j["base"] = base;
                std::cout << j.dump(2) << "\n";
                return kExitPass;
            }
            std::cerr << "catalog: expected list, show, or order\n";
            return kExitUsage;
        }

        if (*cmd_verify) return run_verify(vp_section, parallel, jobs, vp_json);

        if (*cmd_export) {
            auto a = load_algebra(x_name);
            bool dot = x_dot && !x_json_flag;
            return emit_algebra(a, dot, x_out, nullptr, x_name);
        }
    } catch (const dmm::malformed_table& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const dmm::unknown_name& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const dmm::error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

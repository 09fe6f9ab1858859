#pragma once

#include "cea/json_io.hpp"
#include "cea/relations.hpp"
#include "cea/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace cea::cli {

namespace detail {

inline Json manifest(const std::string &command)
{
    return Json{{"command", command},
                {"fingerprint", OctonionTable::instance().fingerprint()},
                {"version", "0.1.0"}};
}

inline std::string joined(const std::vector<std::string> &args)
{
    std::string s = "cea";
    for (const auto &a : args) {
        s += ' ';
        s += a;
    }
    return s;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

} // namespace detail

/// Runs one CLI invocation. Mathematical output is a single JSON document
/// on `out` (plus JSON lines for the omega table); timings and progress go
/// to `err`. Returns 0 for verified claims, 1 for falsified claims, 2 for
/// usage errors.
inline int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"exact constructor and verifier for central elements of U(gl_N), U(so_N), U(g2)"};
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads, "parallel reduction width (results are independent of it)")
        ->capture_default_str();
    app.fallthrough(); // global flags may follow the subcommand

    // algebra info
    auto *algebra_cmd = app.add_subcommand("algebra", "algebra constructions");
    algebra_cmd->require_subcommand(1);
    auto *info_cmd = algebra_cmd->add_subcommand("info", "dimensions, basis and relations");
    std::string algebra_name = "so4";
    info_cmd->add_option("--name", algebra_name, "glN, soN or g2")->required();

    // omega table
    auto *omega_cmd = app.add_subcommand("omega", "octonion omega tensors");
    omega_cmd->require_subcommand(1);
    auto *table_cmd = omega_cmd->add_subcommand("table", "nonzero entries as JSON lines");
    int omega_k = 3;
    table_cmd->add_option("--k", omega_k, "tensor order (2..7)")->required();

    // poly verify-invariant
    auto *poly_cmd = app.add_subcommand("poly", "commutative m-invariants");
    poly_cmd->require_subcommand(1);
    auto *verify_cmd = poly_cmd->add_subcommand("verify-invariant",
                                                "check a polynomial family under the action");
    std::string poly_algebra, poly_family, graph_file;
    int poly_k = 1;
    std::vector<int> g_rows, g_cols;
    verify_cmd->add_option("--algebra", poly_algebra, "glN, soN or g2")->required();
    verify_cmd->add_option("--family", poly_family, "trace|pf|det|ck|sumpf2|g|graph")->required();
    verify_cmd->add_option("--k", poly_k, "subset size for ck/sumpf2");
    verify_cmd->add_option("--row", g_rows, "row partition for family g");
    verify_cmd->add_option("--col", g_cols, "column partition for family g");
    verify_cmd->add_option("--graph", graph_file, "graph JSON file for family graph");

    // element build / verify-central
    auto *element_cmd = app.add_subcommand("element", "central elements in the enveloping algebra");
    element_cmd->require_subcommand(1);
    auto *build_cmd = element_cmd->add_subcommand("build", "construct and check a named family");
    std::string build_family, build_params = "{}";
    bool allow_long = false;
    build_cmd->add_option("--family", build_family, "casimir|det|pf|sumpf2|g2G")->required();
    build_cmd->add_option("--params", build_params, "parameters as JSON");
    build_cmd->add_flag("--allow-long", allow_long, "permit long-running degree-7 builds");
    auto *verify_central_cmd =
        element_cmd->add_subcommand("verify-central", "check an element from a JSON file");
    std::string in_file;
    verify_central_cmd->add_option("--in", in_file, "UEAElement JSON (or build output)")
        ->required();

    // relations check
    auto *relations_cmd = app.add_subcommand("relations", "pfaffian relation suite");
    relations_cmd->require_subcommand(1);
    auto *check_cmd = relations_cmd->add_subcommand("check", "verify one relation symbolically");
    std::string relation_id;
    int rel_n = 0, rel_k = 0;
    check_cmd->add_option("--id", relation_id, "1|2|3|4|charpoly")->required();
    check_cmd->add_option("--n", rel_n, "matrix size where applicable");
    check_cmd->add_option("--k", rel_k, "power for relation 4");

    // selftest / bench
    auto *selftest_cmd = app.add_subcommand("selftest", "fast acceptance suite");
    uint64_t seed = 20240601;
    selftest_cmd->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    auto *bench_cmd = app.add_subcommand("bench", "time representative computations");

    std::vector<const char *> argv;
    argv.push_back("cea");
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    detail::Timer timer;
    const std::string command = detail::joined(args);
    auto finish = [&](int code) {
        err << "[cea] completed in " << timer.ms() << " ms\n";
        return code;
    };

    try {
        if (*info_cmd) {
            LieAlgebra alg = algebra_by_name(algebra_name);
            Json j = algebra_info_json(alg);
            j["manifest"] = detail::manifest(command);
            out << j.dump() << "\n";
            return finish(0);
        }

        if (*table_cmd) {
            OmegaTensor w = omega_skew(omega_k);
            Json head = detail::manifest(command);
            head["k"] = omega_k;
            head["nonzero_count"] = w.entries.nonzero_count();
            head["scale"] = w.scale.str();
            out << head.dump() << "\n";
            for (const auto &[idx, v] : w.entries.entries()) {
                Json line;
                Json indices = Json::array();
                for (int x : idx) indices.push_back(x + 1);
                line["idx"] = indices;
                line["val"] = int(v.num());
                out << line.dump() << "\n";
            }
            return finish(0);
        }

        if (*verify_cmd) {
            LieAlgebra alg = algebra_by_name(poly_algebra);
            const int N = alg.rep_dim();
            MPolynomial p;
            if (poly_family == "trace") {
                p = trace_poly(N);
            } else if (poly_family == "pf") {
                p = pf_full_poly(N);
            } else if (poly_family == "det") {
                p = det_poly(index_range(N), index_range(N));
            } else if (poly_family == "ck") {
                p = c_k_poly(N, poly_k);
            } else if (poly_family == "sumpf2") {
                p = sum_pf_sq_poly(N, poly_k);
            } else if (poly_family == "g") {
                if (!alg.is_g2())
                    throw std::invalid_argument("family g is defined over g2");
                p = g_poly(g_rows, g_cols, nullptr, threads);
            } else if (poly_family == "graph") {
                if (graph_file.empty())
                    throw std::invalid_argument("family graph needs --graph <file>");
                std::ifstream f(graph_file);
                if (!f) throw std::invalid_argument("cannot open graph file " + graph_file);
                Json gj = Json::parse(f);
                p = compile_graph(graph_from_json(gj), N);
            } else {
                throw std::invalid_argument("unknown family '" + poly_family + "'");
            }
            InvarianceVerdict v = is_invariant(alg, p, VariablePattern::automatic, threads);
            Json j = invariance_to_json(alg, v);
            j["algebra"] = alg.name();
            j["family"] = poly_family;
            j["poly_terms"] = p.term_count();
            j["manifest"] = detail::manifest(command);
            out << j.dump() << "\n";
            return finish(v.invariant ? 0 : 1);
        }

        if (*build_cmd) {
            Json params = Json::parse(build_params);
            std::unique_ptr<LieAlgebra> alg;
            auto algebra_param = [&](const char *fallback) {
                const std::string name =
                    params.contains("algebra") ? params["algebra"].get<std::string>() : fallback;
                alg = std::make_unique<LieAlgebra>(algebra_by_name(name));
            };
            CentralElementReport report;
            if (build_family == "casimir") {
                algebra_param("so4");
                Enveloping env(*alg);
                LMatrix L = build_L(*alg);
                report = casimir(env, L, threads);
            } else if (build_family == "det") {
                algebra_param("gl2");
                Enveloping env(*alg);
                LMatrix L = build_L(*alg);
                report = det_family(env, L, params.value("k", alg->rep_dim()), threads);
            } else if (build_family == "pf") {
                if (params.contains("N")) params["algebra"] = "so" + std::to_string(int(params["N"]));
                algebra_param("so4");
                Enveloping env(*alg);
                LMatrix L = build_L(*alg);
                report = pfaffian_family(env, L, 0, /*full=*/true, threads);
            } else if (build_family == "sumpf2") {
                if (params.contains("N")) params["algebra"] = "so" + std::to_string(int(params["N"]));
                algebra_param("so4");
                Enveloping env(*alg);
                LMatrix L = build_L(*alg);
                report = pfaffian_family(env, L, params.value("k", 1), /*full=*/false, threads);
            } else if (build_family == "g2G") {
                algebra_param("g2");
                std::vector<int> rows = params.value("row", std::vector<int>{});
                std::vector<int> cols = params.value("col", std::vector<int>{});
                int total = 0;
                for (int s : rows) total += s;
                bool vanishes = false;
                for (const auto &pp : {rows, cols})
                    for (int s : pp) vanishes = vanishes || s == 5 || s == 6;
                if (total >= 7 && !vanishes && !allow_long)
                    throw std::invalid_argument(
                        "degree-7 symmetrization is a long computation; pass --allow-long "
                        "(the polynomial route `relations`/unit identities cover it cheaply)");
                Enveloping env(*alg);
                LMatrix L = build_L(*alg);
                err << "[cea] building g2G element, degree " << total << "\n";
                report = g2_G(env, L, rows, cols, threads);
            } else {
                throw std::invalid_argument("unknown family '" + build_family + "'");
            }
            Json j = report_to_json(report, *alg);
            j["manifest"] = detail::manifest(command);
            out << j.dump() << "\n";
            return finish(report.centrality.central ? 0 : 1);
        }

        if (*verify_central_cmd) {
            std::ifstream f(in_file);
            if (!f) throw std::invalid_argument("cannot open " + in_file);
            Json j = Json::parse(f);
            if (j.contains("element")) j = j["element"];
            LieAlgebra alg = algebra_by_name(j.at("algebra").get<std::string>());
            Enveloping env(alg);
            UEAElement e = element_from_json(alg, j);
            CentralityVerdict v = env.is_central(e, threads);
            Json result = centrality_to_json(alg, v);
            result["algebra"] = alg.name();
            result["element_terms"] = e.term_count();
            result["manifest"] = detail::manifest(command);
            out << result.dump() << "\n";
            return finish(v.central ? 0 : 1);
        }

        if (*check_cmd) {
            RelationVerdict v;
            if (relation_id == "charpoly") {
                v = charpoly_pfaffian_identity(rel_n == 0 ? 4 : rel_n);
            } else {
                const int id = std::stoi(relation_id);
                v = check_relation(id, rel_n, rel_k);
            }
            Json j{{"id", relation_id},
                   {"holds", v.holds},
                   {"residual_terms", v.residual.term_count()},
                   {"note", v.note},
                   {"manifest", detail::manifest(command)}};
            if (!v.holds) j["residual_sample"] = v.residual.str(4);
            out << j.dump() << "\n";
            return finish(v.holds ? 0 : 1);
        }

        if (*selftest_cmd) {
            SelftestResult r = run_selftest(seed, threads, &err);
            Json checks = Json::array();
            for (const auto &[name, ok] : r.checks) checks.push_back(Json{{"name", name}, {"ok", ok}});
            Json j{{"ok", r.ok}, {"checks", checks}, {"manifest", detail::manifest(command)}};
            out << j.dump() << "\n";
            return finish(r.ok ? 0 : 1);
        }

        if (*bench_cmd) {
            Json benches = Json::array();
            auto bench = [&](const std::string &name, const std::function<bool()> &fn) {
                detail::Timer t;
                const bool ok = fn();
                err << "[bench] " << name << ": " << t.ms() << " ms\n";
                benches.push_back(Json{{"name", name}, {"ok", ok}});
            };
            bench("omega_skew(7)", [] { return omega_skew(7).entries.nonzero_count() == 5040; });
            bench("g_poly([3],[3])", [&] { return g_poly({3}, {3}, nullptr, threads).term_count() > 0; });
            bench("casimir(so5) centrality", [&] {
                auto alg = LieAlgebra::make_so(5);
                Enveloping env(alg);
                LMatrix L = build_L(alg);
                return casimir(env, L, threads).centrality.central;
            });
            bench("pfaffian(so6) centrality", [&] {
                auto alg = LieAlgebra::make_so(6);
                Enveloping env(alg);
                LMatrix L = build_L(alg);
                return pfaffian_family(env, L, 0, true, threads).centrality.central;
            });
            Json j{{"benchmarks", benches}, {"manifest", detail::manifest(command)}};
            out << j.dump() << "\n";
            return finish(0);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception &e) {
        err << "error: bad JSON input: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace cea::cli

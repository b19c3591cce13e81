#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "resolvekit/analyze.hpp"
#include "resolvekit/bounds.hpp"
#include "resolvekit/io.hpp"
#include "resolvekit/search.hpp"
#include "resolvekit/verify.hpp"

namespace rk = resolvekit;

namespace {

constexpr int exit_ok = 0, exit_false = 1, exit_usage = 2, exit_capacity = 3;

void print_certificate(const rk::Certificate& cert) { rk::write_certificate(std::cout, cert); }

int cmd_verify(const std::string& file, bool robust) {
    auto cert = rk::read_certificate_file(file);
    bool ok = robust ? rk::is_robust(cert) : rk::is_separating(cert);
    std::cout << (robust ? "robust" : "separating") << ": " << (ok ? "true" : "false") << "\n";
    if (!ok) {
        if (auto w = rk::witness_unseparated(cert, robust)) {
            auto show = [](const std::vector<int>& v) {
                std::string s = "{";
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? "," : "") + std::to_string(v[i]);
                return s + "}";
            };
            std::cout << "collision: " << show(w->first) << " " << show(w->second) << "\n";
        }
    }
    return ok ? exit_ok : exit_false;
}

int cmd_analyze(const std::string& file) {
    auto cert = rk::read_certificate_file(file);
    auto rep = rk::analyze_certificate(cert);
    std::cout << "m: " << cert.m << "\nk: " << cert.k << "\nl: " << cert.size() << "\n";
    for (std::size_t x = 0; x < rep.profile.d.size(); ++x)
        std::cout << "d" << x << ": " << rep.profile.d[x] << "\n";
    std::cout << "A: " << rep.A.size() << "\nB: " << rep.B.size() << "\n"
              << "e(A,A): " << rep.eAA << "\ne(A,B): " << rep.eAB << "\ne(B,B): " << rep.eBB
              << "\nB0: " << rep.B0.size() << "\nB1: " << rep.B1.size() << "\n"
              << "AAA: " << rep.eAAA << "\nAAB: " << rep.eAAB << "\nABB: " << rep.eABB
              << "\nBBB: " << rep.eBBB << "\n";
    auto violations = rk::check_structural_constraints(cert);
    std::cout << "violations: " << violations.size() << "\n";
    for (const auto& v : violations) std::cout << "violated: " << v << "\n";
    return violations.empty() ? exit_ok : exit_false;
}

int cmd_search(int m, int k, bool robust, long long budget, bool canonical,
               std::uint64_t seed, int size, long long iterations) {
    if (canonical) rk::set_threads(1);
    if (size > 0 && seed != 0) {
        auto cert = rk::local_search(m, k, size, robust, seed, iterations);
        if (!cert) {
            std::cout << "status: not-found\n";
            return exit_capacity;
        }
        std::cout << "status: found\n";
        print_certificate(*cert);
        return exit_ok;
    }
    if (size > 0) {
        auto res = rk::exists_of_size(m, k, size, robust, budget);
        if (res.status == rk::SearchStatus::budget_exhausted) {
            std::cout << "status: budget-exhausted\nnodes: " << res.nodes << "\n";
            return exit_capacity;
        }
        std::cout << "status: " << (res.status == rk::SearchStatus::found ? "found" : "none")
                  << "\nnodes: " << res.nodes << "\n";
        if (res.cert) print_certificate(*res.cert);
        return res.status == rk::SearchStatus::found ? exit_ok : exit_false;
    }
    auto res = rk::sigma_exact(m, k, robust, budget);
    if (res.status == rk::SearchStatus::budget_exhausted) {
        std::cout << "status: budget-exhausted\nlower: " << res.lower
                  << "\nupper: " << res.upper << "\nnodes: " << res.nodes << "\n";
        return exit_capacity;
    }
    std::cout << "sigma" << (robust ? "*" : "") << "(" << m << "," << k
              << "): " << res.value << "\nnodes: " << res.nodes << "\n";
    if (res.witness) print_certificate(*res.witness);
    return exit_ok;
}

int cmd_construct(const std::string& method, const std::string& cert_file,
                  const std::string& cert2_file, const std::string& graph_file,
                  int alpha, int m, int k, int q) {
    rk::Certificate out = [&] {
        if (method == "extend")
            return rk::extend_plus_one(rk::read_certificate_file(cert_file), alpha);
        if (method == "compose")
            return rk::compose_robust(rk::read_certificate_file(cert_file),
                                      rk::read_certificate_file(cert2_file));
        if (method == "girth") {
            rk::SimpleGraph g = graph_file.empty()
                                    ? rk::read_graph_file(rk::data_dir() / "mcgee.graph")
                                    : rk::read_graph_file(graph_file);
            return rk::from_regular_graph(g, k);
        }
        if (method == "johnson3") return rk::johnson3_certificate(q);
        if (method == "auto") return rk::upper_bound_certificate(m, k);
        throw CLI::ValidationError("unknown method " + method);
    }();
    print_certificate(out);
    return exit_ok;
}

int cmd_bounds(int m, int k) {
    for (const auto& t : rk::lower_bound_terms(m, k))
        std::cout << "lower-term " << t.label << ": " << t.value << "\n";
    std::cout << "lower: " << rk::lower_bound(m, k) << "\n";
    for (const auto& t : rk::upper_bound_terms(m, k))
        std::cout << "upper-term " << t.label << ": " << t.value << "\n";
    std::cout << "upper: " << rk::upper_bound_value(m, k) << "\n";
    return exit_ok;
}

int cmd_group(const std::string& action, const std::string& file, long long order_cap,
              long long budget) {
    auto g = rk::read_group_file(file);
    if (action == "rank") {
        std::cout << "rank: " << rk::rank(g) << "\n";
        return exit_ok;
    }
    if (action == "sigma") {
        auto res = rk::sigma_group(g, budget);
        if (res.status == rk::GroupSearchStatus::budget_exhausted) {
            std::cout << "status: budget-exhausted\nlower: " << res.lower
                      << "\nupper: " << res.upper << "\n";
            return exit_capacity;
        }
        std::cout << "sigma: " << res.value << "\nwitness:";
        for (int p : *res.witness) std::cout << " " << p;
        std::cout << "\n";
        return exit_ok;
    }
    if (action == "extremal") {
        auto rep = rk::verify_extremal_structure(g, order_cap, budget);
        std::cout << "n: " << rep.n << "\nr: " << rep.r << "\nsigma: " << rep.sigma
                  << "\nextremal: " << rep.extremal << "\nregular: " << rep.regular << "\n";
        if (rep.structure_checked) {
            std::cout << "blocks:";
            for (const auto& b : rep.block_system) {
                std::cout << " {";
                for (std::size_t i = 0; i < b.size(); ++i)
                    std::cout << (i ? "," : "") << b[i];
                std::cout << "}";
            }
            std::cout << "\nblock-count-matches: " << rep.block_count_matches
                      << "\naction-on-blocks-regular: " << rep.action_on_blocks_regular
                      << "\nblocks-two-transitive: " << rep.blocks_two_transitive << "\n";
            bool all = rep.block_count_matches && rep.action_on_blocks_regular &&
                       rep.blocks_two_transitive;
            return all ? exit_ok : exit_false;
        }
        return exit_ok;
    }
    if (action == "irredundant") {
        auto res = rk::irredundant_group_sizes(g, order_cap);
        std::cout << "sizes:";
        for (int s : res.sizes) std::cout << " " << s;
        std::cout << "\npartial: " << res.partial << "\n";
        return exit_ok;
    }
    throw CLI::ValidationError("unknown group action " + action);
}

int cmd_table1(int max_m, long long budget) {
    std::cout << "m:";
    for (int m = 4; m <= max_m; ++m) std::cout << " " << m;
    std::cout << "\nsigma(m,3):";
    for (int m = 4; m <= max_m; ++m) {
        auto r = rk::sigma_exact(m, 3, false, budget);
        if (r.status != rk::SearchStatus::found) {
            std::cout << " ?";
            break;
        }
        std::cout << " " << r.value << std::flush;
    }
    std::cout << "\nsigma*(m,3):";
    for (int m = 4; m <= max_m; ++m) {
        auto r = rk::sigma_exact(m, 3, true, budget);
        if (r.status != rk::SearchStatus::found) {
            std::cout << " ?";
            break;
        }
        std::cout << " " << r.value << std::flush;
    }
    std::cout << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating-set toolkit for symmetric-group actions on k-subsets"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = runtime default)");

    std::string cert_file, cert2_file, graph_file, group_file, method = "auto",
                group_action;
    int m = 0, k = 3, q = 1, alpha = 0, size = 0, max_m = 9;
    bool robust = false, canonical = false;
    long long budget = -1, order_cap = rk::default_order_cap, iterations = 1000000;
    std::uint64_t seed = 0;

    auto* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("--cert", cert_file)->required();
    verify->add_flag("--robust", robust);

    auto* analyze = app.add_subcommand("analyze", "structural report for a certificate");
    analyze->add_option("--cert", cert_file)->required();

    auto* search = app.add_subcommand("search", "exact or randomized search");
    search->add_option("--m", m)->required();
    search->add_option("--k", k)->required();
    search->add_flag("--robust", robust);
    search->add_option("--budget", budget);
    search->add_flag("--canonical", canonical);
    search->add_option("--seed", seed);
    search->add_option("--size", size, "fixed family size (decision / local search)");
    search->add_option("--iterations", iterations);

    auto* construct = app.add_subcommand("construct", "build a certificate");
    construct->add_option("--method", method)
        ->check(CLI::IsMember({"extend", "compose", "girth", "johnson3", "auto"}));
    construct->add_option("--cert", cert_file);
    construct->add_option("--cert2", cert2_file);
    construct->add_option("--graph", graph_file);
    construct->add_option("--alpha", alpha);
    construct->add_option("--m", m);
    construct->add_option("--k", k);
    construct->add_option("--q", q);

    auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas");
    bounds->add_option("--m", m)->required();
    bounds->add_option("--k", k)->required();

    auto* group = app.add_subcommand("group", "permutation-group computations");
    group->add_option("action", group_action)
        ->check(CLI::IsMember({"sigma", "rank", "extremal", "irredundant"}))
        ->required();
    group->add_option("--file", group_file)->required();
    group->add_option("--order-cap", order_cap);
    group->add_option("--budget", budget);

    auto* table1 = app.add_subcommand("table1", "reproduce the small-case table");
    table1->add_option("--max-m", max_m);
    table1->add_option("--budget", budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        rk::set_threads(threads);
        if (verify->parsed()) return cmd_verify(cert_file, robust);
        if (analyze->parsed()) return cmd_analyze(cert_file);
        if (search->parsed())
            return cmd_search(m, k, robust, budget, canonical, seed, size, iterations);
        if (construct->parsed())
            return cmd_construct(method, cert_file, cert2_file, graph_file, alpha, m, k, q);
        if (bounds->parsed()) return cmd_bounds(m, k);
        if (group->parsed()) return cmd_group(group_action, group_file, order_cap, budget);
        if (table1->parsed()) return cmd_table1(max_m, budget);
        return exit_usage;
    } catch (const rk::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return exit_capacity;
    } catch (const rk::invalid_parameters& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return exit_usage;
    } catch (const rk::parse_error& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

// estrada: command-line front end for the Estrada / Laplacian Estrada
// library. Exit codes: 0 success, 1 verification failure, 2 usage or input
// error.

#include "estrada/double_star.hpp"
#include "estrada/enumeration.hpp"
#include "estrada/error.hpp"
#include "estrada/graph.hpp"
#include "estrada/graph_io.hpp"
#include "estrada/report.hpp"
#include "estrada/spectral.hpp"
#include "estrada/transforms.hpp"
#include "estrada/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace {

using namespace estrada;

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;

struct InputOptions {
    std::string path = "-";
    std::string format = "edgelist";
};

Graph read_graph(const InputOptions& in)
{
    std::string text;
    if (in.path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream file(in.path);
        if (!file)
            throw invalid_input("cannot open " + in.path);
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    if (in.format == "graph6")
        return decode_graph6(text);
    return parse_edge_list(text);
}

void add_input_options(CLI::App* cmd, InputOptions& in)
{
    cmd->add_option("input", in.path, "Graph file, '-' for stdin")->capture_default_str();
    cmd->add_option("--format", in.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
}

void print_json(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

int default_threads()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_values(std::ostream& out, const std::vector<double>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? " " : "") << values[i];
    out << '\n';
}

int run_compute(const InputOptions& in, int moments, const std::string& output)
{
    const Graph g = read_graph(in);
    const json report = compute_report(g, moments);
    if (output == "json") {
        print_json(report);
        return exit_ok;
    }
    std::cout.precision(12);
    std::cout << "n " << g.order() << "\nm " << g.size() << '\n';
    std::cout << "adjacency_spectrum ";
    print_values(std::cout, report["adjacency_spectrum"].get<std::vector<double>>());
    std::cout << "laplacian_spectrum ";
    print_values(std::cout, report["laplacian_spectrum"].get<std::vector<double>>());
    std::cout << "EE " << report["estrada_index"].get<double>() << '\n';
    std::cout << "LEE " << report["laplacian_estrada_index"].get<double>() << '\n';
    std::cout << "moments";
    for (const auto& m : report["moments"])
        std::cout << ' ' << (m.is_string() ? m.get<std::string>() : m.dump());
    std::cout << '\n';
    return exit_ok;
}

int run_build(const std::string& family, int n, int a)
{
    Graph g;
    if (family == "path")
        g = build_path(n);
    else if (family == "star")
        g = build_star(n);
    else if (family == "cycle")
        g = build_cycle(n);
    else if (family == "complete")
        g = build_complete(n);
    else if (family == "broom")
        g = build_broom(n);
    else
        g = build_double_star(n, a);
    write_edge_list(std::cout, g);
    return exit_ok;
}

json site_json(const SigmaSite& s)
{
    return {{"v", s.v}, {"u", s.u}, {"pendants", s.pendants}};
}

int run_sigma(const InputOptions& in, int at, bool chain, const std::string& output)
{
    const Graph g = read_graph(in);
    if (chain) {
        const auto steps = sigma_chain_to_star(g);
        json out = json::array();
        for (const auto& t : steps)
            out.push_back({{"edges", to_edge_list(t)}, {"lee", laplacian_estrada_index(t)}});
        if (output == "json") {
            print_json({{"chain", out}});
        } else {
            std::cout.precision(12);
            for (std::size_t i = 0; i < steps.size(); ++i)
                std::cout << "step " << i << " LEE " << out[i]["lee"].get<double>() << '\n';
        }
        return exit_ok;
    }
    const auto sites = find_sigma_sites(g);
    if (at < 0) {
        json out = json::array();
        for (const auto& s : sites)
            out.push_back(site_json(s));
        if (output == "json") {
            print_json({{"sites", out}});
        } else {
            for (const auto& s : sites) {
                std::cout << "v " << s.v << " u " << s.u << " pendants";
                for (int p : s.pendants)
                    std::cout << ' ' << p;
                std::cout << '\n';
            }
        }
        return exit_ok;
    }
    for (const auto& s : sites) {
        if (s.v == at) {
            write_edge_list(std::cout, sigma_transform(g, s));
            return exit_ok;
        }
    }
    throw invalid_parameter("vertex " + std::to_string(at) + " is not a sigma site");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Estrada and Laplacian Estrada indices of graphs and trees"};
    app.require_subcommand(1);

    InputOptions compute_in;
    int compute_moments = 10;
    std::string compute_output = "text";
    auto* compute = app.add_subcommand("compute", "Spectra, EE, LEE and closed-walk moments of one graph");
    add_input_options(compute, compute_in);
    compute->add_option("--moments", compute_moments, "Highest moment order K")->check(CLI::NonNegativeNumber)->capture_default_str();
    compute->add_option("--output", compute_output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::string build_family;
    int build_n = 0;
    int build_a = 2;
    auto* build = app.add_subcommand("build", "Print a named graph as an edge list");
    build->add_option("family", build_family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"path", "star", "cycle", "complete", "double-star", "broom"}));
    build->add_option("n", build_n, "Vertex count")->required();
    build->add_option("a", build_a, "Smaller star size for double-star")->capture_default_str();

    InputOptions sigma_in;
    int sigma_at = -1;
    bool sigma_chain = false;
    std::string sigma_output = "text";
    auto* sigma = app.add_subcommand("sigma", "List sigma sites, apply one (--at), or run the chain to the star");
    add_input_options(sigma, sigma_in);
    sigma->add_option("--at", sigma_at, "Apply the transformation at this vertex and print the result");
    sigma->add_flag("--chain", sigma_chain, "Print the sigma chain of a tree and its LEE values");
    sigma->add_option("--output", sigma_output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    IdentitySweepOptions identity;
    auto* verify_identity_cmd = app.add_subcommand("verify-identity", "LEE(G) = n - m + e^2 EE(L(G)) on random trees and even cycles");
    verify_identity_cmd->add_option("--seed", identity.seed)->capture_default_str();
    verify_identity_cmd->add_option("--samples", identity.samples)->check(CLI::NonNegativeNumber)->capture_default_str();
    verify_identity_cmd->add_option("--n-min", identity.n_min)->check(CLI::Range(1, 64))->capture_default_str();
    verify_identity_cmd->add_option("--n,--max-n", identity.n_max, "Largest random tree")->check(CLI::Range(1, 64))->capture_default_str();
    verify_identity_cmd->add_option("--cycles", identity.cycles_up_to, "Check even cycles up to this length (0: none)")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    verify_identity_cmd->add_option("--tol", identity.tolerance, "Relative tolerance")->check(CLI::PositiveNumber)->capture_default_str();

    SigmaSweepOptions sigma_sweep;
    auto* verify_sigma_cmd = app.add_subcommand("verify-sigma", "Sigma transformation strictly increases LEE");
    verify_sigma_cmd->add_option("--seed", sigma_sweep.seed)->capture_default_str();
    verify_sigma_cmd->add_option("--samples", sigma_sweep.samples)->check(CLI::NonNegativeNumber)->capture_default_str();
    verify_sigma_cmd->add_option("--n-min", sigma_sweep.n_min)->check(CLI::Range(4, 64))->capture_default_str();
    verify_sigma_cmd->add_option("--n,--max-n", sigma_sweep.n_max)->check(CLI::Range(4, 64))->capture_default_str();
    verify_sigma_cmd->add_option("--extra-edges", sigma_sweep.extra_edges, "Bipartite extra edges per sample")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_sigma_cmd->add_option("--moment-samples", sigma_sweep.moment_samples)->check(CLI::NonNegativeNumber)->capture_default_str();
    verify_sigma_cmd->add_option("--moment-max-n", sigma_sweep.moment_n_max)->check(CLI::Range(4, 32))->capture_default_str();
    verify_sigma_cmd->add_option("--moment-order", sigma_sweep.moment_order)->check(CLI::Range(0, 40))->capture_default_str();

    int extremal_max = 12;
    int extremal_min = 5;
    int extremal_threads = default_threads();
    auto* verify_extremal_cmd = app.add_subcommand("verify-extremal", "Exhaustive extremal LEE trees for 5 <= n <= max-n");
    verify_extremal_cmd->add_option("--max-n", extremal_max)->check(CLI::Range(5, 24))->capture_default_str();
    verify_extremal_cmd->add_option("--min-n", extremal_min)->check(CLI::Range(5, 24))->capture_default_str();
    verify_extremal_cmd->add_option("--threads", extremal_threads, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);

    int rank_n = 10;
    RankOptions rank_options;
    rank_options.threads = default_threads();
    auto* rank = app.add_subcommand("rank", "Rank all trees on n vertices by LEE");
    rank->add_option("--n", rank_n)->required()->check(CLI::Range(4, 24));
    rank->add_option("--top", rank_options.top_k)->check(CLI::PositiveNumber)->capture_default_str();
    rank->add_option("--bottom", rank_options.bottom_k)->check(CLI::PositiveNumber)->capture_default_str();
    rank->add_option("--threads", rank_options.threads, "Worker threads (output does not depend on it)")->check(CLI::PositiveNumber);
    rank->add_option("--chunk", rank_options.chunk_size, "Trees per worker per batch")->check(CLI::PositiveNumber)->capture_default_str();

    int ds_min = 5;
    int ds_max = 12;
    auto* double_star = app.add_subcommand("double-star", "Double-star spectra and LEE ordering");
    double_star->require_subcommand(1);
    auto* ds_table = double_star->add_subcommand("table", "CSV: n,a,b,x1,x2,x3,lee_closed_form,margin_to_next");
    auto* ds_verify = double_star->add_subcommand("verify", "Check the LEE ordering chain of double stars (JSON)");
    for (auto* cmd : {ds_table, ds_verify}) {
        cmd->add_option("--n-min", ds_min)->check(CLI::Range(5, 200))->capture_default_str();
        cmd->add_option("--n-max", ds_max)->check(CLI::Range(5, 200))->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*compute)
            return run_compute(compute_in, compute_moments, compute_output);
        if (*build)
            return run_build(build_family, build_n, build_a);
        if (*sigma)
            return run_sigma(sigma_in, sigma_at, sigma_chain, sigma_output);
        if (*verify_identity_cmd) {
            identity.n_min = std::min(identity.n_min, identity.n_max);
            const auto report = verify_identity(identity);
            print_json(to_json(report));
            return report.ok ? exit_ok : exit_verification_failed;
        }
        if (*verify_sigma_cmd) {
            sigma_sweep.moment_n_max = std::max(sigma_sweep.moment_n_max, sigma_sweep.n_min);
            const auto report = verify_sigma(sigma_sweep);
            print_json(to_json(report));
            return report.ok ? exit_ok : exit_verification_failed;
        }
        if (*verify_extremal_cmd) {
            if (extremal_min > extremal_max)
                throw invalid_parameter("--min-n exceeds --max-n");
            const auto report = verify_extremal(extremal_max, extremal_threads, extremal_min);
            print_json(to_json(report));
            return report.ok ? exit_ok : exit_verification_failed;
        }
        if (*rank) {
            print_json(to_json(rank_trees(rank_n, rank_options)));
            return exit_ok;
        }
        if (*ds_table) {
            std::cout << double_star_table_csv(ds_min, ds_max);
            return exit_ok;
        }
        if (*ds_verify) {
            if (ds_min > ds_max)
                throw invalid_parameter("--n-min exceeds --n-max");
            json out = json::array();
            bool ok = true;
            for (int n = ds_min; n <= ds_max; ++n) {
                const auto report = verify_double_star_ordering(n);
                ok = ok && report.ok;
                out.push_back(to_json(report));
            }
            print_json({{"command", "double-star verify"}, {"ok", ok}, {"results", out}});
            return ok ? exit_ok : exit_verification_failed;
        }
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const precondition_violation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return exit_verification_failed;
    }
    return exit_usage;
}

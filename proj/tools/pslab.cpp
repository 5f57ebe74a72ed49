// pslab: batch CLI over the product-set library. One subcommand per library
// operation; JSON/CSV on stdout, diagnostics on stderr. Exit codes: 0 success,
// 1 domain error, 2 enumeration cap exceeded, 3 I/O or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pslab/pslab.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pslab::parse_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw pslab::parse_error("read failure on file: " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pslab::parse_error("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw pslab::parse_error("write failure on file: " + path);
}

std::vector<pslab::bigint> parse_bigint_list(const std::vector<std::string>& parts) {
    std::vector<pslab::bigint> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        try {
            out.emplace_back(p);
        } catch (const std::exception&) {
            throw pslab::parse_error("not an integer: " + p);
        }
    }
    return out;
}

// The lists carry their own lengths; explicit --m/--n are accepted for
// symmetry with the written-out grammar and cross-checked when present.
void check_declared_size(bool given, std::uint64_t declared, std::size_t actual,
                         const char* flag, const char* list) {
    if (given && declared != actual)
        throw pslab::domain_error(std::string(flag) + " = " + std::to_string(declared) +
                                  " does not match the length of " + list);
}

struct cli_state {
    std::uint64_t cap = pslab::default_enumeration_cap;

    // sample
    std::uint64_t sample_n = 0;
    double sample_alpha = 0.0;
    std::uint64_t sample_seed = 0;
    std::uint64_t sample_stream = 0;
    std::string sample_format = "text";

    // product
    std::string product_config;

    // energy
    std::vector<double> energy_x, energy_y;
    std::string energy_method = "grouped";

    // matrix-count / bound
    std::uint64_t mc_m = 0, mc_n = 0;
    std::vector<double> mc_x, mc_y;

    // decompose
    std::vector<std::string> dec_a, dec_b;

    // rankin
    std::uint32_t rankin_m = 1;
    double rankin_x = 2.0;
    bool rankin_with_bound = false;

    // condition
    std::string condition_config;

    // verify
    std::string verify_config;
    std::uint64_t verify_trials = 0;
    double verify_eps = 0.0;
    std::uint64_t verify_seed = 0;
    std::string verify_out;
    std::string verify_summary_path;

    // moments
    std::uint64_t moments_n = 0;
    double moments_alpha = 0.0;
    std::uint32_t moments_k = 1;
};

int run_sample(const cli_state& st) {
    const auto set = pslab::sample_set(st.sample_n, st.sample_alpha,
                                       pslab::seed_spec{st.sample_seed, st.sample_stream});
    std::string out;
    if (st.sample_format == "json") {
        out = pslab::sampled_set_json(set) + "\n";
    } else {
        for (auto e : set.elements) out += std::to_string(e) + "\n";
    }
    std::cout << out;
    return 0;
}

int run_product(const cli_state& st) {
    const auto query = pslab::parse_product_query(read_file(st.product_config));
    const auto stats = pslab::compute_product_statistics(query, st.cap);
    std::cout << pslab::product_statistics_json(stats) << "\n";
    return 0;
}

int run_energy(const cli_state& st) {
    pslab::energy_spec spec{st.energy_x, st.energy_y};
    const auto method = st.energy_method == "brute" ? pslab::count_method::brute
                                                    : pslab::count_method::grouped;
    std::cout << pslab::energy_count(spec, method, st.cap).str() << "\n";
    return 0;
}

int run_matrix_count(const cli_state& st, bool m_given, bool n_given) {
    check_declared_size(n_given, st.mc_n, st.mc_x.size(), "--n", "--x");
    check_declared_size(m_given, st.mc_m, st.mc_y.size(), "--m", "--y");
    std::cout << pslab::matrix_count(st.mc_x, st.mc_y, st.cap).str() << "\n";
    return 0;
}

int run_bound(const cli_state& st, bool m_given, bool n_given) {
    check_declared_size(n_given, st.mc_n, st.mc_x.size(), "--n", "--x");
    check_declared_size(m_given, st.mc_m, st.mc_y.size(), "--m", "--y");
    std::cout << pslab::detail::fmt_double(pslab::matrix_count_bound(st.mc_x, st.mc_y))
              << "\n";
    return 0;
}

int run_decompose(const cli_state& st) {
    const auto a = parse_bigint_list(st.dec_a);
    const auto b = parse_bigint_list(st.dec_b);
    std::cout << pslab::factor_matrix_json(pslab::decompose_matrix(a, b)) << "\n";
    return 0;
}

int run_rankin(const cli_state& st) {
    const pslab::rankin_query q{st.rankin_m, st.rankin_x};
    const double sum = pslab::rankin_sum_exact(q, st.cap);
    std::string out;
    if (st.rankin_with_bound) {
        const double bound = pslab::rankin_bound(q);
        out = "m,x,sum,bound,ratio\n" + std::to_string(q.m) + "," +
              pslab::detail::fmt_double(q.x) + "," + pslab::detail::fmt_double(sum) + "," +
              pslab::detail::fmt_double(bound) + "," +
              pslab::detail::fmt_double(sum / bound) + "\n";
    } else {
        out = "m,x,sum\n" + std::to_string(q.m) + "," + pslab::detail::fmt_double(q.x) +
              "," + pslab::detail::fmt_double(sum) + "\n";
    }
    std::cout << out;
    return 0;
}

int run_condition(const cli_state& st) {
    const auto config = pslab::parse_experiment_config(read_file(st.condition_config));
    std::cout << pslab::condition_report_json(pslab::condition_ratios(config)) << "\n";
    return 0;
}

int run_verify(const cli_state& st) {
    const auto config = pslab::parse_experiment_config(read_file(st.verify_config));
    const auto [records, summary] =
        pslab::run_trials(config, st.verify_trials, st.verify_eps, st.verify_seed, st.cap);
    const auto csv = pslab::trials_csv(records, config.set_count());
    const auto json = pslab::summary_json(summary, pslab::condition_ratios(config)) + "\n";
    write_file(st.verify_out, csv);
    if (!st.verify_summary_path.empty()) write_file(st.verify_summary_path, json);
    std::cout << json;
    return 0;
}

int run_moments(const cli_state& st) {
    if (st.moments_k < 1) throw pslab::domain_error("--k must be >= 1");
    std::string out = "k,moment\n";
    for (std::uint32_t k = 1; k <= st.moments_k; ++k)
        out += std::to_string(k) + "," +
               pslab::detail::fmt_double(
                   pslab::binomial_moment_exact(st.moments_n, st.moments_alpha, k)) +
               "\n";
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"product-set statistics laboratory"};
    app.require_subcommand(1);
    cli_state st;
    app.add_option("--cap", st.cap, "global enumeration cap")->capture_default_str();

    auto* sample = app.add_subcommand("sample", "draw a random subset of {1..n}");
    sample->add_option("--n", st.sample_n, "ground-set bound")->required();
    sample->add_option("--alpha", st.sample_alpha, "inclusion probability")->required();
    sample->add_option("--seed", st.sample_seed, "master seed")->required();
    sample->add_option("--stream", st.sample_stream, "stream index");
    sample->add_option("--format", st.sample_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* product = app.add_subcommand("product", "product-multiset statistics of explicit sets");
    product->add_option("--config", st.product_config, "query JSON file")->required();

    auto* energy = app.add_subcommand("energy", "count bounded solutions of prod a = prod b");
    energy->add_option("--x", st.energy_x, "a-side bounds")->required()->delimiter(',');
    energy->add_option("--y", st.energy_y, "b-side bounds")->required()->delimiter(',');
    energy->add_option("--method", st.energy_method, "brute|grouped")
        ->check(CLI::IsMember({"brute", "grouped"}));

    auto* mcount = app.add_subcommand("matrix-count", "count matrices with bounded row/column products");
    auto* mc_m_opt = mcount->add_option("--m", st.mc_m, "row count (checked against --y)");
    auto* mc_n_opt = mcount->add_option("--n", st.mc_n, "column count (checked against --x)");
    mcount->add_option("--x", st.mc_x, "column product bounds")->required()->delimiter(',');
    mcount->add_option("--y", st.mc_y, "row product bounds")->required()->delimiter(',');

    auto* bound = app.add_subcommand("bound", "closed-form ceiling for matrix-count");
    auto* bd_m_opt = bound->add_option("--m", st.mc_m, "row count (checked against --y)");
    auto* bd_n_opt = bound->add_option("--n", st.mc_n, "column count (checked against --x)");
    bound->add_option("--x", st.mc_x, "column product bounds")->required()->delimiter(',');
    bound->add_option("--y", st.mc_y, "row product bounds")->required()->delimiter(',');

    auto* decompose = app.add_subcommand("decompose", "factor matrix with given row/column products");
    decompose->add_option("--a", st.dec_a, "column products")->required()->delimiter(',');
    decompose->add_option("--b", st.dec_b, "row products")->required()->delimiter(',');

    auto* rankin = app.add_subcommand("rankin", "truncated multiple harmonic sum");
    rankin->add_option("--m", st.rankin_m, "factor count")->required();
    rankin->add_option("--x", st.rankin_x, "truncation point")->required();
    rankin->add_flag("--bound", st.rankin_with_bound, "also print the closed-form bound");

    auto* condition = app.add_subcommand("condition", "regime diagnostics for a config");
    condition->add_option("--config", st.condition_config, "experiment JSON file")->required();

    auto* verify = app.add_subcommand("verify", "seeded Monte Carlo trials against predictions");
    verify->add_option("--config", st.verify_config, "experiment JSON file")->required();
    verify->add_option("--trials", st.verify_trials, "trial count")->required();
    verify->add_option("--eps", st.verify_eps, "exceedance tolerance")->required();
    verify->add_option("--seed", st.verify_seed, "master seed")->required();
    verify->add_option("--out", st.verify_out, "per-trial CSV path")->required();
    verify->add_option("--summary", st.verify_summary_path, "summary JSON path");

    auto* moments = app.add_subcommand("moments", "exact binomial moments E|A|^k, k = 1..K");
    moments->add_option("--n", st.moments_n, "ground-set bound")->required();
    moments->add_option("--alpha", st.moments_alpha, "inclusion probability")->required();
    moments->add_option("--k", st.moments_k, "largest moment order")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (sample->parsed()) return run_sample(st);
        if (product->parsed()) return run_product(st);
        if (energy->parsed()) return run_energy(st);
        if (mcount->parsed())
            return run_matrix_count(st, mc_m_opt->count() > 0, mc_n_opt->count() > 0);
        if (bound->parsed())
            return run_bound(st, bd_m_opt->count() > 0, bd_n_opt->count() > 0);
        if (decompose->parsed()) return run_decompose(st);
        if (rankin->parsed()) return run_rankin(st);
        if (condition->parsed()) return run_condition(st);
        if (verify->parsed()) return run_verify(st);
        if (moments->parsed()) return run_moments(st);
    } catch (const pslab::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const pslab::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pslab::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

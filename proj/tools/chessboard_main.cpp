// chessboard — exact ternary/cubic algebra toolbox.
//
// Subcommands:
//   table          emit a full ternary multiplication table (JSON or CSV)
//   verify         run self-verification suites, exit nonzero on failure
//   flat           enumerate flat gauge configurations
//   bracket-search rank/nullity certificate for double-bracket identities
//   dispersion     tabulate the cubic dispersion relation over a k-grid
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Data goes to stdout (or --output); progress and timing go to stderr, so
// the data stream is byte-deterministic for fixed (flags, seed).

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chessboard/cubic.hpp"
#include "chessboard/dirac.hpp"
#include "chessboard/envelope.hpp"
#include "chessboard/graded.hpp"
#include "chessboard/json_io.hpp"
#include "chessboard/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0xC4B1C;

struct CliConfig {
    int n = 2;
    std::string law = "star";
    std::string format = "json";
    std::string suite = "all";
    std::string fault;
    std::string output;  // empty → stdout
    std::uint64_t seed = kDefaultSeed;
    double mass = 1.0;
    std::string grid = "-2:2:0.5";
    double tolerance = 1e-9;
};

void emit(const CliConfig& config, const std::string& bytes) {
    if (config.output.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(config.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + config.output);
    out << bytes;
    if (!out.flush()) throw std::runtime_error("write failed: " + config.output);
}

// Shortest round-tripping decimal form; unlike iostreams this does not
// depend on locale or precision state, so reruns are byte-identical.
std::string double_str(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

int cmd_table(const CliConfig& config) {
    const auto law =
        config.law == "star" ? chessboard::TernaryLaw::star : chessboard::TernaryLaw::oslash;
    const chessboard::TernaryTable table = chessboard::mult_table(config.n, law);
    if (config.format == "csv") {
        emit(config, chessboard::table_to_csv(table));
    } else {
        const nlohmann::json doc = {{"n", table.n},
                                    {"law", chessboard::to_string(table.law)},
                                    {"rows", chessboard::table_to_json(table)}};
        emit(config, doc.dump() + "\n");
    }
    return 0;
}

int cmd_verify(const CliConfig& config) {
    chessboard::VerifyOptions options;
    options.seed = config.seed;
    options.inject_fault_jfactor = config.fault == "jfactor";
    std::cerr << "seed " << options.seed << "\n";

    const auto reports = chessboard::run_verification(config.suite, options);
    for (const auto& report : reports)
        std::cerr << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " ("
                  << report.checks.size() << " checks, " << report.seconds << " s)\n";

    emit(config, chessboard::verification_report_json(reports, options).dump(2) + "\n");
    return chessboard::all_passed(reports) ? 0 : 1;
}

int cmd_flat(const CliConfig& config) {
    const auto solutions = chessboard::enumerate_symmetric_flat();
    const chessboard::ExactScalar one = chessboard::ExactScalar::one();
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [alpha, beta, gamma] : solutions) {
        if (!((alpha + one) * (beta + one) * (gamma + one) == one))
            throw std::logic_error("enumerated solution fails the product condition");
        list.push_back({{"alpha", alpha},
                        {"beta", beta},
                        {"gamma", gamma},
                        {"display", alpha.str() + " , " + beta.str() + " , " + gamma.str()}});
    }
    const nlohmann::json doc = {{"condition", "(alpha+1)(beta+1)(gamma+1) = 1"},
                                {"count", list.size()},
                                {"solutions", std::move(list)}};
    emit(config, doc.dump(2) + "\n");
    return 0;
}

int cmd_bracket_search(const CliConfig& config) {
    std::cerr << "seed " << config.seed << "\n";
    const chessboard::SearchResult result =
        chessboard::double_bracket_identity_search(config.n, config.seed);
    nlohmann::json words = nlohmann::json::array();
    for (const auto& w : result.words) words.push_back(chessboard::word_str(w));
    const nlohmann::json doc = {{"n", result.n},
                                {"seed", config.seed},
                                {"classes", result.words.size()},
                                {"rank", result.rank},
                                {"nullity", result.nullity},
                                {"rank_stable", result.rank_stable},
                                {"words", std::move(words)}};
    emit(config, doc.dump(2) + "\n");
    return result.nullity == 0 && result.rank_stable ? 0 : 1;
}

std::vector<double> parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw CLI::ValidationError("--grid", "expected min:max:step");
    const double lo = std::stod(text.substr(0, first));
    const double hi = std::stod(text.substr(first + 1, second - first - 1));
    const double step = std::stod(text.substr(second + 1));
    if (!(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(step)) || step <= 0 || hi < lo)
        throw CLI::ValidationError("--grid", "need finite min <= max and step > 0");
    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values(count);
    for (int i = 0; i < count; ++i) values[i] = lo + i * step;
    return values;
}

int cmd_dispersion(const CliConfig& config) {
    const std::vector<double> axis = parse_grid(config.grid);
    std::string out = "k_x,k_y,k_z,m,omega_real\n";
    int violations = 0;
    for (double kx : axis)
        for (double ky : axis)
            for (double kz : axis) {
                const auto roots = chessboard::solve_omega({kx, ky, kz}, config.mass);
                const double rhs = chessboard::dispersion_rhs(kx, ky, kz, config.mass);
                const double residual = roots.real_root * roots.real_root * roots.real_root - rhs;
                if (std::abs(residual) > config.tolerance * std::max(1.0, std::abs(rhs)))
                    ++violations;
                out += double_str(kx) + ',' + double_str(ky) + ',' + double_str(kz) + ',' +
                       double_str(config.mass) + ',' + double_str(roots.real_root) + '\n';
            }
    emit(config, out);
    if (violations > 0) {
        std::cerr << violations << " rows exceed tolerance " << config.tolerance << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ternary/cubic algebra toolbox"};
    app.require_subcommand(0, 1);
    CliConfig config;

    CLI::App* table = app.add_subcommand("table", "emit a full ternary multiplication table");
    table->add_option("--n", config.n, "matrix size")
        ->default_val(2)
        ->check(CLI::IsMember({2, 3}));
    table->add_option("--law", config.law, "ternary product")
        ->default_val("star")
        ->check(CLI::IsMember({"star", "oslash"}));
    table->add_option("--format", config.format, "output format")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--output", config.output, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run self-verification suites");
    {
        std::vector<std::string> suites = {"all"};
        for (const auto& name : chessboard::verify_suite_names()) suites.push_back(name);
        verify->add_option("--suite", config.suite, "suite to run")
            ->default_val("all")
            ->check(CLI::IsMember(suites));
    }
    verify->add_option("--seed", config.seed, "seed for randomized checks")
        ->default_val(kDefaultSeed);
    verify->add_option("--inject-fault", config.fault, "deliberately break a law (for testing)")
        ->check(CLI::IsMember({"jfactor"}));
    verify->add_option("--output", config.output, "write the JSON report to a file");

    CLI::App* flat = app.add_subcommand("flat", "enumerate symmetric flat configurations");
    flat->add_option("--output", config.output, "write to file instead of stdout");

    CLI::App* bracket =
        app.add_subcommand("bracket-search", "double-bracket identity certificate");
    bracket->add_option("--n", config.n, "matrix size")->default_val(2)->check(CLI::Range(1, 3));
    bracket->add_option("--seed", config.seed, "seed for the sample tuples")
        ->default_val(kDefaultSeed);
    bracket->add_option("--output", config.output, "write to file instead of stdout");

    CLI::App* dispersion =
        app.add_subcommand("dispersion", "tabulate omega over a cubic k-grid");
    dispersion->add_option("--m", config.mass, "mass parameter")->default_val(1.0);
    dispersion->add_option("--grid", config.grid, "axis sample points as min:max:step")
        ->default_val("-2:2:0.5");
    dispersion->add_option("--tolerance", config.tolerance, "per-row residual bound")
        ->default_val(1e-9);
    dispersion->add_option("--output", config.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0 through CLI11; real parse errors exit 2.
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table->parsed()) return cmd_table(config);
        if (verify->parsed()) return cmd_verify(config);
        if (flat->parsed()) return cmd_flat(config);
        if (bracket->parsed()) return cmd_bracket_search(config);
        if (dispersion->parsed()) return cmd_dispersion(config);
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

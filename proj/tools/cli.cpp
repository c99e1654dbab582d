#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <fmt/format.h>
#include <omp.h>

#include "CLI11.hpp"

#include "normform/errors.hpp"
#include "normform/log_bounds.hpp"
#include "normform/oracle.hpp"
#include "normform/report.hpp"
#include "normform/sieve.hpp"
#include "normform/unit_theory.hpp"

namespace normform::cli {

using nlohmann::ordered_json;

namespace {

/* thrown for flag combinations that parse but make no sense together */
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void require_format(RunConfig const & c, std::initializer_list<Format> allowed, char const * cmd)
{
    for (Format f : allowed)
        if (c.format == f)
            return;
    throw UsageError(fmt::format("--format is not supported by '{}' with this value", cmd));
}

std::int64_t resolve_m_max(RunConfig const & c)
{
    if (c.m_max && c.assume_known_bounds)
        throw UsageError("--m-max and --assume-paper-bounds are mutually exclusive");
    if (c.m_max)
        return *c.m_max;
    return c.assume_known_bounds ? known_m_max : derive_m_max(c.precision);
}

std::string dump(ordered_json const & j)
{
    return j.dump(2) + "\n";
}

std::string cmd_bounds(RunConfig const & c)
{
    require_format(c, {Format::Json, Format::Text}, "bounds");
    auto const b = derive_t_bounds(resolve_m_max(c));
    if (c.format == Format::Text)
        return fmt::format("m_max = {}\nt_max_coarse = {}\nt_max = {}\n", b.m_max, b.t_max_coarse, b.t_max);
    return dump(bounds_to_json(b));
}

std::string text_table(CandidateTable const & table)
{
    std::string out = fmt::format("{:>6}  {:>8}\n", "t", "count");
    for (auto const & r : table.rows)
        out += fmt::format("{:>6}  {:>8}\n", r.t, r.count);
    out += fmt::format("{:>6}  {:>8}\n", "total", table.total());
    return out;
}

std::string cmd_sieve(RunConfig const & c)
{
    std::int64_t const m_max = resolve_m_max(c);
    std::int64_t const t_min = c.t_min.value_or(2);
    std::int64_t const t_max = c.t_max ? *c.t_max : derive_t_bounds(m_max).t_max;
    auto const table = enumerate_candidates(t_min, t_max, m_max);
    switch (c.format) {
    case Format::Csv: return table_to_csv(table);
    case Format::Text: return text_table(table);
    case Format::Json: break;
    }
    return dump(table_to_json(table, t_min, t_max, m_max));
}

std::pair<std::string, int> cmd_verify(RunConfig const & c)
{
    VerifyConfig vc;
    if (c.m_max && c.assume_known_bounds)
        throw UsageError("--m-max and --assume-paper-bounds are mutually exclusive");
    vc.m_max = c.m_max;
    vc.t_max = c.t_max;
    vc.assume_known_bounds = c.assume_known_bounds;
    vc.precision = c.precision;
    vc.target = c.strict_sign ? SignTarget::PlusOrMinusOne : SignTarget::PlusOne;
    if (c.primes)
        vc.primes = *c.primes;
    if (c.t_min && *c.t_min != 2)
        throw UsageError("verify always starts at t = 2; --t-min is only for 'sieve'");

    auto const report = verify_theorem(vc);
    int const code = report.verified ? exit_success : exit_failure;
    switch (c.format) {
    case Format::Csv: return {table_to_csv(report.table), code};
    case Format::Text: {
        std::string out = fmt::format("m_max = {}\nt_max_coarse = {}\nt_max = {}\n", report.bounds.m_max,
                                      report.bounds.t_max_coarse, report.bounds.t_max);
        out += fmt::format("fundamental unit: {}\nfunctional solutions: {}\nnegative exponents: {}\n",
                           report.fundamental_unit_ok ? "ok" : "FAILED",
                           report.functional_solutions_ok ? "ok" : "FAILED",
                           report.negative_exponents_ok ? "ok" : "FAILED");
        out += text_table(report.table);
        out += fmt::format("survivors = {}\nverdict: {}\n", report.survivors, report.verified ? "verified" : "failed");
        return {out, code};
    }
    case Format::Json: break;
    }
    return {dump(report_to_json(report)), code};
}

std::pair<std::string, int> cmd_check_pair(RunConfig const & c)
{
    require_format(c, {Format::Json, Format::Text}, "check-pair");
    if (!c.t || !c.m)
        throw UsageError("check-pair needs --t and --m");
    auto const adm = admissible(*c.t, *c.m);
    auto const primes = c.primes ? *c.primes : default_primes();
    auto const elim = final_coefficient_check(*c.t, *c.m, primes,
                                              c.strict_sign ? SignTarget::PlusOrMinusOne : SignTarget::PlusOne);
    int const code = elim.status == EliminationResult::Status::Eliminated ? exit_success : exit_failure;

    if (c.format == Format::Text) {
        return {fmt::format("t = {}, m = {}\nmod3: {}\nsmallhammer: {}{}\nhammer: {}\ngrowth: {}\nadmissible: {}\n"
                            "coefficient check: {}{}\n",
                            adm.t, adm.m, adm.passes_mod3, adm.passes_smallhammer,
                            adm.k ? fmt::format(" (k = {})", adm.k->get_str()) : std::string{}, adm.passes_hammer,
                            adm.passes_growth, adm.admissible, to_string(elim.status),
                            elim.witness_prime ? fmt::format(" (p = {})", elim.witness_prime) : std::string{}),
                code};
    }
    ordered_json j;
    j["schema_version"] = schema_version;
    j["t"] = adm.t;
    j["m"] = adm.m;
    j["passes_mod3"] = adm.passes_mod3;
    j["passes_smallhammer"] = adm.passes_smallhammer;
    j["k"] = adm.k ? ordered_json(adm.k->get_str()) : ordered_json(nullptr);
    j["passes_hammer"] = adm.passes_hammer;
    j["passes_growth"] = adm.passes_growth;
    j["admissible"] = adm.admissible;
    j["elimination"] = elimination_to_json(elim);
    return {dump(j), code};
}

std::pair<std::string, int> cmd_oracle(RunConfig const & c)
{
    require_format(c, {Format::Json, Format::Text}, "oracle");
    if (!c.t)
        throw UsageError("oracle needs --t");
    SearchWindow const window = c.bound ? SearchWindow(*c.t, *c.bound) : SearchWindow::with_default_bound(*c.t);
    auto const report = cross_check(*c.t, *c.t, window.bound());
    auto const & entry = report.entries.front();
    int const code = report.ok ? exit_success : exit_failure;

    if (c.format == Format::Text) {
        std::string out = fmt::format("t = {}, |x|, |y| <= {}\n", window.t(), window.bound());
        for (auto const & s : entry.found)
            out += fmt::format("  (x, y) = ({}, {})  norm = {}\n", s.x.get_str(), s.y.get_str(), s.delta ? -1 : 1);
        out += fmt::format("matches theorem: {}\n", entry.matches_theorem);
        return {out, code};
    }
    ordered_json j;
    j["schema_version"] = schema_version;
    j["t"] = window.t();
    j["bound"] = window.bound();
    ordered_json sols = ordered_json::array();
    for (auto const & s : entry.found) {
        ordered_json r{{"x", s.x.get_si()}, {"y", s.y.get_si()}, {"norm", s.delta ? -1 : 1}};
        r["m"] = s.m ? ordered_json(*s.m) : ordered_json(nullptr);
        sols.push_back(std::move(r));
    }
    j["solutions"] = std::move(sols);
    j["matches_theorem"] = entry.matches_theorem;
    return {dump(j), code};
}

std::pair<std::string, int> cmd_ziegler(RunConfig const & c)
{
    require_format(c, {Format::Json, Format::Text}, "ziegler");
    std::vector<std::int64_t> points(ziegler_min_points);
    std::iota(points.begin(), points.end(), -static_cast<std::int64_t>(ziegler_min_points / 2));
    bool const ok = verify_ziegler_identity(points);
    int const code = ok ? exit_success : exit_failure;
    if (c.format == Format::Text)
        return {fmt::format("x(x - t y)(x - (t^4 + 3t) y) + y^3 = 1 at t = {}..{}: {}\n", points.front(),
                            points.back(), ok ? "holds" : "FAILS"),
                code};
    ordered_json j;
    j["schema_version"] = schema_version;
    j["x"] = "t^9 + 3t^6 + 4t^3 + 1";
    j["y"] = "t^8 + 3t^5 + 3t^2";
    j["points"] = points;
    j["identity_holds"] = ok;
    return {dump(j), code};
}

} // namespace

std::variant<RunConfig, int> parse_args(int argc, char const * const * argv, std::ostream & out, std::ostream & err)
{
    RunConfig c;
    CLI::App app{"Verification of the solutions of x^3 - (t^3-1) y^3 + 3 (t^3-1) x y + (t^3-1)^2 = +-1"};
    app.require_subcommand(1);

    std::string format = "json";
    std::vector<std::string> prime_strings;
    unsigned long precision = 160;

    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--precision", precision, "working precision in bits")->check(CLI::Range(64ul, 2048ul));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output,-o", c.output_path, "write the report to a file");
        sub->add_option("--threads", c.threads, "OpenMP thread count")->check(CLI::PositiveNumber);
    };
    auto add_bounds = [&](CLI::App * sub) {
        sub->add_option("--m-max", c.m_max, "exponent bound (default: derived)");
        sub->add_flag("--assume-paper-bounds", c.assume_known_bounds, "use m_max = 225676 without deriving it");
    };
    auto add_primes = [&](CLI::App * sub) {
        sub->add_option("--primes", prime_strings, "primes for the coefficient check")->delimiter(',');
        sub->add_flag("--strict-sign", c.strict_sign, "also accept a coefficient of -1 as a possible solution");
    };

    auto * verify = app.add_subcommand("verify", "full pipeline: bounds, sieve, coefficient elimination");
    add_common(verify);
    add_bounds(verify);
    add_primes(verify);
    verify->add_option("--t-max", c.t_max, "largest t searched (default: derived)");

    auto * bounds = app.add_subcommand("bounds", "derive m_max and the t bounds");
    add_common(bounds);
    add_bounds(bounds);

    auto * sieve = app.add_subcommand("sieve", "enumerate admissible (t, m) pairs");
    add_common(sieve);
    add_bounds(sieve);
    sieve->add_option("--t-min", c.t_min, "smallest t (default 2)");
    sieve->add_option("--t-max", c.t_max, "largest t (default: derived)");

    auto * check = app.add_subcommand("check-pair", "admissibility and coefficient check for one (t, m)");
    add_common(check);
    add_primes(check);
    check->add_option("--t", c.t, "parameter t")->required();
    check->add_option("--m", c.m, "unit exponent m")->required();

    auto * oracle = app.add_subcommand("oracle", "brute-force search for one t");
    add_common(oracle);
    oracle->add_option("--t", c.t, "parameter t")->required();
    oracle->add_option("--bound", c.bound, "search |x|, |y| <= bound (default max(2t^2, 1000))");

    auto * ziegler = app.add_subcommand("ziegler", "check Ziegler's functional solution");
    add_common(ziegler);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        app.exit(e, out, err);
        return exit_success;
    } catch (CLI::ParseError const & e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    if (verify->parsed()) c.subcommand = Subcommand::Verify;
    else if (bounds->parsed()) c.subcommand = Subcommand::Bounds;
    else if (sieve->parsed()) c.subcommand = Subcommand::Sieve;
    else if (check->parsed()) c.subcommand = Subcommand::CheckPair;
    else if (oracle->parsed()) c.subcommand = Subcommand::Oracle;
    else c.subcommand = Subcommand::Ziegler;

    c.precision = static_cast<mpfr_prec_t>(precision);
    c.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
    if (!prime_strings.empty()) {
        std::vector<std::uint64_t> primes;
        for (auto const & s : prime_strings) {
            try {
                std::size_t used = 0;
                primes.push_back(std::stoull(s, &used));
                if (used != s.size())
                    throw std::invalid_argument(s);
            } catch (std::exception const &) {
                err << "error: --primes entry '" << s << "' is not an unsigned integer\n";
                return exit_usage;
            }
        }
        c.primes = std::move(primes);
    }
    return c;
}

int run(RunConfig const & config, std::ostream & out, std::ostream & err)
{
    if (config.threads)
        omp_set_num_threads(*config.threads);

    std::string report;
    int code = exit_success;
    try {
        switch (config.subcommand) {
        case Subcommand::Bounds: report = cmd_bounds(config); break;
        case Subcommand::Sieve: report = cmd_sieve(config); break;
        case Subcommand::Verify: std::tie(report, code) = cmd_verify(config); break;
        case Subcommand::CheckPair: std::tie(report, code) = cmd_check_pair(config); break;
        case Subcommand::Oracle: std::tie(report, code) = cmd_oracle(config); break;
        case Subcommand::Ziegler: std::tie(report, code) = cmd_ziegler(config); break;
        }
    } catch (UsageError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (Error const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << *config.output_path << "' for writing\n";
            return exit_usage;
        }
        file << report;
    } else {
        out << report;
    }
    return code;
}

} // namespace normform::cli

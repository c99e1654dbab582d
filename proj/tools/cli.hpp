#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <mpfr.h>

namespace normform::cli {

enum class Subcommand { Verify, Bounds, Sieve, CheckPair, Oracle, Ziegler };
enum class Format { Json, Csv, Text };

struct RunConfig {
    Subcommand subcommand = Subcommand::Verify;
    std::optional<std::int64_t> t;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> t_min;
    std::optional<std::int64_t> t_max;
    std::optional<std::int64_t> m_max;
    std::optional<std::int64_t> bound;
    mpfr_prec_t precision = 160;
    std::optional<std::vector<std::uint64_t>> primes;
    std::optional<std::string> output_path;
    Format format = Format::Json;
    bool assume_known_bounds = false;
    bool strict_sign = false;
    std::optional<int> threads;
};

inline constexpr int exit_success = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/* Either a config or the exit code to return right away (help, parse
 * errors). Diagnostics go to `err`, --help text to `out`. */
std::variant<RunConfig, int> parse_args(int argc, char const * const * argv, std::ostream & out, std::ostream & err);

/* Dispatch. Reports go to `out` (or the --output file); precondition errors
 * are printed to `err` and give exit_usage. */
int run(RunConfig const & config, std::ostream & out, std::ostream & err);

} // namespace normform::cli

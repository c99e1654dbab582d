// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <gmpxx.h>
#include <omp.h>

#include "cli.hpp"
#include "normform/cubic_ring.hpp"
#include "normform/log_bounds.hpp"
#include "normform/oracle.hpp"
#include "normform/sieve.hpp"
#include "normform/unit_theory.hpp"

using namespace normform;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start)
{
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

int failures = 0;

void report(std::string const & id, bool ok, std::string const & detail)
{
    if (!ok)
        ++failures;
    std::cout << fmt::format("{} {:<4} {}", ok ? "PASS" : "FAIL", id, detail) << std::endl;
}

/* runs `body`, turning an escaped exception into a failed line */
void criterion(std::string const & id, std::function<std::pair<bool, std::string>()> const & body)
{
    try {
        auto const [ok, detail] = body();
        report(id, ok, detail);
    } catch (std::exception const & e) {
        report(id, false, fmt::format("threw: {}", e.what()));
    }
}

std::pair<int, std::string> run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "normform");
    std::vector<char const *> argv;
    for (auto const & a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    auto parsed = cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
    if (auto const * code = std::get_if<int>(&parsed))
        return {*code, err.str()};
    int const code = cli::run(std::get<cli::RunConfig>(parsed), out, err);
    return {code, out.str()};
}

mpz_class binom(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

int main()
{
    criterion("1", [] {
        auto const start = clock_type::now();
        auto const b = derive_t_bounds(derive_m_max());
        double const secs = seconds_since(start);
        bool const ok = b.m_max == 225676 && b.t_max_coarse == 2942 && b.t_max == 352 && secs < 1.0;
        return std::pair{ok, fmt::format("bounds: m_max={} t_max_coarse={} t_max={} in {:.3f}s", b.m_max,
                                         b.t_max_coarse, b.t_max, secs)};
    });

    criterion("2", [] {
        std::vector<CandidateRow> const expected = {
            {2, 6715}, {3, 3857}, {4, 1510}, {5, 59}, {6, 291}, {7, 92}, {8, 18}, {9, 51}, {10, 39}, {11, 4},
            {12, 5},   {13, 3},   {15, 2},   {16, 9}, {18, 2},  {19, 1}, {21, 1}, {22, 1}, {25, 1}};
        int const saved = omp_get_max_threads();
        omp_set_num_threads(1);
        auto const start = clock_type::now();
        auto const table = enumerate_candidates(2, 352, 225676);
        double const secs = seconds_since(start);
        omp_set_num_threads(saved);
        bool const ok = table.rows == expected && table.total() == 12661 && secs < 300.0;
        return std::pair{ok, fmt::format("sieve table: {} rows, {} pairs, single thread in {:.2f}s",
                                         table.rows.size(), table.total(), secs)};
    });

    criterion("3", [] {
        VerifyConfig config;
        auto const r = verify_theorem(config);
        auto const [code, out] = run_cli({"verify"});
        bool const ok = r.verified && r.survivors == 0 && r.eliminations.size() == 12661 && code == 0;
        return std::pair{ok, fmt::format("verify: {} pairs eliminated, {} survivors, cli exit {}",
                                         r.eliminations.size() - r.survivors, r.survivors, code)};
    });

    criterion("4", [] {
        auto const start = clock_type::now();
        auto const r = cross_check(2, 25, 5000);
        double const secs = seconds_since(start);
        std::size_t found = 0;
        for (auto const & e : r.entries)
            found += e.found.size();
        bool const ok = r.ok && r.entries.size() == 24 && found == 48 && secs < 120.0;
        return std::pair{ok, fmt::format("oracle: t in [2, 25], B = 5000, {} solutions in total, all functional: {}, "
                                         "{:.1f}s",
                                         found, r.ok, secs)};
    });

    criterion("5", [] {
        mpfr_prec_t const prec = 160;
        Interval const c = laurent_coefficient(prec);
        bool const below = certainly_less(c, Interval::from_decimal("644.66", prec));
        std::int64_t const switch_m = max_term_switch_point(prec);
        // on each side of the switch: log(2m) + 0.21 against 30/D = 10
        Interval const a21 = Interval::from_decimal("0.21", prec);
        bool const before = certainly_less(log(Interval(2 * (switch_m - 1), prec)) + a21, Interval(10L, prec));
        bool const after = certainly_less(Interval(10L, prec), log(Interval(2 * switch_m, prec)) + a21);
        bool bprime_ok = true;
        for (std::int64_t t : {2, 5, 10, 50, 352})
            bprime_ok = bprime_ok && certainly_less(laurent_bprime(t, switch_m, prec), Interval(2 * switch_m, prec));
        bool const ok = below && switch_m == 8928 && before && after && bprime_ok;
        return std::pair{ok, fmt::format("constants: coefficient in {} < 644.66, switch at m = {}, b' < 2m: {}",
                                         c.to_string(10), switch_m, bprime_ok)};
    });

    criterion("6a", [] {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(6);
        int bad = 0;
        mpz_class const offset = mpz_class(1) << 63;
        for (int i = 0; i < 10000; ++i) {
            RingContext const ctx(mpz_class(2) + rng.get_z_bits(32));
            auto draw = [&] {
                auto coeff = [&] { return mpz_class(mpz_class(rng.get_z_bits(64)) - offset); };
                return RingElement{coeff(), coeff(), coeff()};
            };
            auto const u = draw();
            auto const v = draw();
            if (norm(mul(u, v, ctx), ctx) != norm(u, ctx) * norm(v, ctx))
                ++bad;
        }
        return std::pair{bad == 0, fmt::format("norm multiplicativity: 10000 random triples, {} failures", bad)};
    });

    criterion("6b", [] {
        int bad = 0;
        long checked = 0;
        for (unsigned long m = 0; m <= 2000; ++m) {
            if (m % 3 == 2)
                continue;
            for (unsigned long k = 2; k <= m; k += 3) {
                ++checked;
                if (mpz_divisible_ui_p(binom(m, k).get_mpz_t(), 3) == 0)
                    ++bad;
            }
        }
        return std::pair{bad == 0, fmt::format("mod-3 binomial lemma: m <= 2000, {} binomials, {} failures", checked,
                                               bad)};
    });

    criterion("6c", [] {
        int bad = 0, checked = 0;
        for (long t = 2; t <= 10; ++t) {
            mpz_class const tz(t);
            mpz_class const t3 = tz * tz * tz;
            mpz_class const t6 = t3 * t3;
            mpz_class const one_minus_t3 = 1 - t3;
            for (long m = 5; m <= 500; m += 3) {
                auto const r = admissible(t, m);
                if (!r.passes_smallhammer)
                    continue;
                mpz_class p1, p2;
                mpz_powm_ui(p1.get_mpz_t(), one_minus_t3.get_mpz_t(), (m - 5) / 3, t6.get_mpz_t());
                mpz_powm_ui(p2.get_mpz_t(), one_minus_t3.get_mpz_t(), (m - 2) / 3, t6.get_mpz_t());
                mpz_class const lhs = binom(m, 3) * t3 * p1 + p2 - 1;
                bool const loki = mpz_divisible_p(lhs.get_mpz_t(), t6.get_mpz_t()) != 0;
                ++checked;
                if (loki != r.passes_hammer)
                    ++bad;
            }
        }
        return std::pair{bad == 0 && checked > 0,
                         fmt::format("loki <=> hammer: t <= 10, m <= 500, {} pairs, {} disagreements", checked, bad)};
    });

    {
        int lower_bad = 0, upper_bad = 0, points = 0;
        std::string first_upper;
        std::string error;
        try {
            for (std::int64_t t : {2, 5, 10, 50, 352}) {
                for (std::int64_t m : {3, 10, 100, 8928, 225676}) {
                    auto const e = eval_lambda1(t, m);
                    ++points;
                    if (!e.above_laurent_lower)
                        ++lower_bad;
                    if (!e.within_upper_bound) {
                        if (upper_bad++ == 0)
                            first_upper = fmt::format(" (first: t={} m={} |L1| = {} > {})", t, m,
                                                      e.lambda1_abs.to_string(4), e.upper_bound.to_string(4));
                    }
                }
            }
        } catch (std::exception const & ex) {
            error = ex.what();
        }
        if (!error.empty()) {
            report("6d", false, fmt::format("sandwich: threw: {}", error));
        } else {
            report("6d", lower_bad == 0 && points == 25,
                   fmt::format("sandwich, lower half: exp(Laurent) <= |L1| on {} points, {} failures", points,
                               lower_bad));
            report("6e", upper_bad == 0,
                   fmt::format("sandwich, upper half: |L1| <= upper bound on {} points, {} failures{}", points,
                               upper_bad, first_upper));
        }
    }

    criterion("6f", [] {
        std::vector<std::int64_t> points;
        for (std::int64_t t = -13; t <= 14; ++t)
            points.push_back(t);
        bool const ok = verify_ziegler_identity(points);
        return std::pair{ok, fmt::format("Ziegler identity at {} points: {}", points.size(), ok ? "holds" : "fails")};
    });

    criterion("7", [] {
        auto const a = run_cli({"verify", "--threads", "1"});
        auto const b = run_cli({"verify"});
        auto const c = run_cli({"verify", "--threads", "3"});
        bool const ok = a.first == 0 && a.second == b.second && b.second == c.second && !a.second.empty();
        return std::pair{ok, fmt::format("determinism: verify reports at 1, default and 3 threads {} ({} bytes)",
                                         ok ? "identical" : "differ", a.second.size())};
    });

    std::cout << fmt::format("{} failing line(s)", failures) << std::endl;
    return failures == 0 ? 0 : 1;
}

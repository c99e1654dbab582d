#include "normform/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <omp.h>

#include "normform/errors.hpp"

namespace normform {

namespace {

using i128 = __int128;

constexpr std::int64_t native_product_limit = std::int64_t(1) << 40;

struct Cubic {
    /* f(x) = x^3 + p x + q with p = 3 d y, q = d^2 - d y^3 */
    i128 p;
    i128 q;
    i128 operator()(std::int64_t x) const
    {
        i128 const X = x;
        return X * X * X + p * X + q;
    }
};

/* integer x in [lo, hi] with f(x) == target on a run where f is monotone
 * (non-decreasing if `increasing`) */
template <typename Emit>
void search_run(Cubic const & f, std::int64_t lo, std::int64_t hi, bool increasing, i128 target, Emit emit)
{
    if (lo > hi)
        return;
    /* first x with f(x) >= target (increasing) or f(x) <= target (decreasing) */
    std::int64_t a = lo, b = hi + 1;
    while (a < b) {
        std::int64_t const mid = a + (b - a) / 2;
        i128 const v = f(mid);
        if (increasing ? v >= target : v <= target)
            b = mid;
        else
            a = mid + 1;
    }
    if (a <= hi && f(a) == target)
        emit(a);
}

std::int64_t isqrt_floor(i128 n)
{
    if (n <= 0)
        return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (i128(r) * r > n)
        --r;
    while (i128(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

void scan_row(std::int64_t t, std::int64_t d, std::int64_t y, std::int64_t bound,
              std::vector<SolutionRecord> & out)
{
    i128 const D = d;
    i128 const Y = y;
    Cubic const f{3 * D * Y, D * D - D * Y * Y * Y};

    /* f' = 3 (x^2 + d y): monotone everywhere for y >= 0, otherwise
     * increasing for |x| >= sqrt(-d y) and decreasing in between */
    struct Run {
        std::int64_t lo, hi;
        bool increasing;
    };
    std::vector<Run> runs;
    if (y >= 0) {
        runs.push_back({-bound, bound, true});
    } else {
        std::int64_t const r = isqrt_floor(-D * Y);
        runs.push_back({-bound, std::min(bound, -r - 1), true});
        runs.push_back({std::max(-bound, -r), std::min(bound, r), false});
        runs.push_back({std::max(-bound, r + 1), bound, true});
    }
    for (int target : {1, -1}) {
        for (auto const & run : runs) {
            search_run(f, run.lo, run.hi, run.increasing, target, [&](std::int64_t x) {
                out.push_back({t, x, y, target == 1 ? 0 : 1, std::nullopt});
            });
        }
    }
}

bool record_less(SolutionRecord const & a, SolutionRecord const & b)
{
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

} // namespace

SearchWindow::SearchWindow(std::int64_t t, std::int64_t bound)
    : t_(t), bound_(bound)
{
    if (t < 2)
        throw InvalidWindow(fmt::format("search window needs t >= 2, got {}", t));
    if (bound < 2 * t * t)
        throw InvalidWindow(fmt::format("bound {} is below 2 t^2 = {} for t = {}", bound, 2 * t * t, t));
    if (t > native_product_limit / bound)
        throw InvalidWindow(fmt::format("t * bound = {} * {} exceeds 2^40", t, bound));
}

SearchWindow SearchWindow::with_default_bound(std::int64_t t)
{
    return SearchWindow(t, std::max<std::int64_t>(2 * t * t, 1000));
}

mpz_class norm_value(std::int64_t t, std::int64_t x, std::int64_t y)
{
    return norm_form_value(mpz_class(static_cast<long>(t)), mpz_class(static_cast<long>(x)),
                           mpz_class(static_cast<long>(y)));
}

std::vector<SolutionRecord> brute_force(SearchWindow const & window)
{
    std::int64_t const t = window.t();
    std::int64_t const bound = window.bound();
    std::int64_t const d = t * t * t - 1;

    std::vector<SolutionRecord> found;
#pragma omp parallel
    {
        std::vector<SolutionRecord> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t y = -bound; y <= bound; ++y)
            scan_row(t, d, y, bound, local);
#pragma omp critical(normform_oracle_merge)
        found.insert(found.end(), local.begin(), local.end());
    }
    std::sort(found.begin(), found.end(), record_less);
    return found;
}

CrossCheckReport cross_check(std::int64_t t_lo, std::int64_t t_hi, std::int64_t bound)
{
    if (t_lo < 2 || t_hi < t_lo)
        throw InvalidRange(fmt::format("cross_check needs 2 <= t_lo <= t_hi, got [{}, {}]", t_lo, t_hi));
    CrossCheckReport report;
    report.ok = true;
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        CrossCheckEntry entry;
        entry.t = t;
        entry.found = brute_force(SearchWindow(t, bound));

        auto const minus1 = solution_from_exponent(t, -1, 0);
        auto const two = solution_from_exponent(t, 2, 0);
        bool ok = entry.found.size() == 2 && minus1 && two;
        if (ok) {
            /* sorted by (x, y): (t^2, -t) precedes (t^2, 2t) */
            auto const & a = entry.found[0];
            auto const & b = entry.found[1];
            mpz_class const tz(static_cast<long>(t));
            ok = a.x == tz * tz && a.y == -tz && a.delta == 0 &&
                 b.x == tz * tz && b.y == 2 * tz && b.delta == 0 &&
                 a.x == minus1->x && a.y == minus1->y &&
                 b.x == two->x && b.y == two->y;
        }
        if (ok) {
            entry.found[0].m = -1;
            entry.found[1].m = 2;
        }
        entry.matches_theorem = ok;
        report.ok = report.ok && ok;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace reference {

std::vector<SolutionRecord> brute_force(SearchWindow const & window)
{
    std::int64_t const t = window.t();
    std::int64_t const bound = window.bound();
    std::vector<SolutionRecord> found;
    for (std::int64_t x = -bound; x <= bound; ++x) {
        for (std::int64_t y = -bound; y <= bound; ++y) {
            mpz_class const v = norm_value(t, x, y);
            if (v == 1 || v == -1)
                found.push_back({t, x, y, v == 1 ? 0 : 1, std::nullopt});
        }
    }
    return found;
}

} // namespace reference

} // namespace normform

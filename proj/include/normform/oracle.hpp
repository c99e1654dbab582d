#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "normform/unit_theory.hpp"

namespace normform {

/* |x| <= bound, |y| <= bound for a fixed t. */
class SearchWindow {
  public:
    /* Throws InvalidWindow if t < 2, bound < 2 t^2, or t * bound > 2^40 (the
     * limit of exact 128-bit evaluation). */
    SearchWindow(std::int64_t t, std::int64_t bound);

    /* max(2 t^2, 1000) */
    static SearchWindow with_default_bound(std::int64_t t);

    std::int64_t t() const { return t_; }
    std::int64_t bound() const { return bound_; }

  private:
    std::int64_t t_;
    std::int64_t bound_;
};

/* x^3 - (t^3-1) y^3 + 3 (t^3-1) x y + (t^3-1)^2, exact. */
mpz_class norm_value(std::int64_t t, std::int64_t x, std::int64_t y);

/* Every (x, y) in the window with norm value +1 or -1, sorted by (x, y).
 * For each y the value is a cubic in x; it is split into its (at most three)
 * monotone integer runs and each run is binary-searched for +-1.
 * OpenMP-parallel over y. */
std::vector<SolutionRecord> brute_force(SearchWindow const & window);

struct CrossCheckEntry {
    std::int64_t t = 0;
    std::vector<SolutionRecord> found;
    bool matches_theorem = false;
};

struct CrossCheckReport {
    std::vector<CrossCheckEntry> entries;
    bool ok = false;
};

/* For each t in [t_lo, t_hi], brute_force must return exactly the two
 * functional solutions (t^2, -t) and (t^2, 2t), both with norm +1, and they
 * must agree with solution_from_exponent(t, -1, 0) and (t, 2, 0). */
CrossCheckReport cross_check(std::int64_t t_lo, std::int64_t t_hi, std::int64_t bound);

namespace reference {

/* O(bound^2) scan of every (x, y); serial. */
std::vector<SolutionRecord> brute_force(SearchWindow const & window);

} // namespace reference

} // namespace normform

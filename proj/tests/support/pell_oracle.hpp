#pragma once

// Independent decision procedure for the bounded polynomial Pell problem,
// used as a test oracle against the continued-fraction solver.
//
// For fixed deg b = e, a solution a^2 - f b^2 = c in k* exists iff some
// monic b of degree e makes the Laurent tail of sqrt(f) * b vanish down to
// order -(e + d) where 2d = deg f; that tail condition is linear in the
// coefficients of b, so each degree is decided by exact rational
// elimination.  No continued fractions anywhere.

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace pell_oracle {

// Laurent coefficients of sqrt(f) for exponents d, d-1, ..., -depth
// (f dense, low degree first, deg f = 2d, lc a rational square)
inline std::vector<mpq_class> sqrt_series(const std::vector<mpq_class>& f, long depth) {
    const long d = (static_cast<long>(f.size()) - 1) / 2;
    std::vector<mpq_class> s(static_cast<std::size_t>(d + depth + 1)); // s[idx] = coeff of x^(d-idx)
    mpz_class num = f.back().get_num(), den = f.back().get_den();
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    mpq_class lead(sn, sd);
    lead.canonicalize();
    s[0] = lead;
    auto coeff_f = [&](long t) -> mpq_class {
        if (t < 0 || t >= static_cast<long>(f.size())) return 0;
        return f[static_cast<std::size_t>(t)];
    };
    for (long k = d - 1; k >= -depth; --k) {
        mpq_class acc = 0;
        for (long i = k + 1; i <= d - 1; ++i) {
            long j = d + k - i;
            if (j > d - 1 || j < k + 1 || j > i) continue;
            mpq_class term = s[static_cast<std::size_t>(d - i)] * s[static_cast<std::size_t>(d - j)];
            acc += (i == j) ? term : 2 * term;
        }
        mpq_class v = (coeff_f(d + k) - acc) / (2 * lead);
        v.canonicalize();
        s[static_cast<std::size_t>(d - k)] = v;
    }
    return s;
}

// Does a solution with deg b == e exist?  Exact decision.
inline bool solvable_with_degree(const std::vector<mpq_class>& f, long e) {
    const long d = (static_cast<long>(f.size()) - 1) / 2;
    const long conditions = e + d - 1; // tail orders -1 ... -(e+d-1) must vanish
    std::vector<mpq_class> s = sqrt_series(f, conditions + e + 1);
    auto series = [&](long k) -> mpq_class { // coeff of x^k in sqrt(f)
        long idx = d - k;
        if (idx < 0 || idx >= static_cast<long>(s.size())) return 0;
        return s[static_cast<std::size_t>(idx)];
    };
    // unknowns b_0 ... b_{e-1}, with b_e = 1; condition for tail order -t:
    // sum_i b_i * series(-t - i) = 0
    std::vector<std::vector<mpq_class>> rows;
    for (long t = 1; t <= conditions; ++t) {
        std::vector<mpq_class> row(static_cast<std::size_t>(e) + 1);
        for (long i = 0; i < e; ++i) row[static_cast<std::size_t>(i)] = series(-t - i);
        row[static_cast<std::size_t>(e)] = -series(-t - e); // rhs from monic b_e = 1
        rows.push_back(std::move(row));
    }
    // exact Gaussian elimination; solvable iff no row reduces to 0 = nonzero
    std::size_t pivot_row = 0;
    for (long col = 0; col < e && pivot_row < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = pivot_row; r < rows.size(); ++r)
            if (rows[r][static_cast<std::size_t>(col)] != 0) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][static_cast<std::size_t>(col)] == 0) continue;
            mpq_class factor = rows[r][static_cast<std::size_t>(col)] /
                               rows[pivot_row][static_cast<std::size_t>(col)];
            for (std::size_t c2 = 0; c2 <= static_cast<std::size_t>(e); ++c2) {
                rows[r][c2] -= factor * rows[pivot_row][c2];
                rows[r][c2].canonicalize();
            }
        }
        ++pivot_row;
    }
    for (const auto& row : rows) {
        bool all_zero = true;
        for (long c2 = 0; c2 < e; ++c2)
            if (row[static_cast<std::size_t>(c2)] != 0) all_zero = false;
        if (all_zero && row[static_cast<std::size_t>(e)] != 0) return false;
    }
    return true;
}

// Least degree of b up to max_deg_b admitting a solution, if any.
inline std::optional<long> minimal_solution_degree(const std::vector<mpq_class>& f, long max_deg_b) {
    for (long e = 0; e <= max_deg_b; ++e)
        if (solvable_with_degree(f, e)) return e;
    return std::nullopt;
}

} // namespace pell_oracle

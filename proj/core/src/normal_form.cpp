#include "unitgroups/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace unitgroups {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// row_dst -= q * row_src
void submul_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

void submul_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

mpz_class fdiv_q(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// quotient rounding toward the nearest integer, so remainders shrink fast
mpz_class round_q(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class babs = abs(b);
    if (2 * r > babs) q += 1;
    return q;
}

// advance sel to the next k-subset of {0, ..., n-1}; false when exhausted
bool next_combination(std::vector<std::size_t>& sel, std::size_t n) {
    const std::size_t k = sel.size();
    std::size_t p = k;
    while (p > 0) {
        --p;
        if (sel[p] + 1 <= n - (k - p)) {
            ++sel[p];
            for (std::size_t q = p + 1; q < k; ++q) sel[q] = sel[q - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

HermiteForm hnf(const IntMatrix& a) {
    HermiteForm out;
    out.h = a;
    out.u = IntMatrix::identity(a.rows());
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const std::size_t rows = a.rows(), cols = a.cols();

    std::size_t pr = 0; // next pivot row
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        // knock the column below pr down to a single nonzero entry
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = pr; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                if (best == rows || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0) best = i;
            }
            if (best == rows) break; // column is zero from pr down
            swap_rows(h, pr, best);
            swap_rows(u, pr, best);
            bool clean = true;
            for (std::size_t i = pr + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                mpz_class q = round_q(h(i, c), h(pr, c));
                submul_row(h, i, pr, q);
                submul_row(u, i, pr, q);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(pr, c) == 0) continue; // no pivot in this column
        if (h(pr, c) < 0) {
            negate_row(h, pr);
            negate_row(u, pr);
        }
        // reduce the entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < pr; ++i) {
            mpz_class q = fdiv_q(h(i, c), h(pr, c));
            submul_row(h, i, pr, q);
            submul_row(u, i, pr, q);
        }
        ++pr;
    }
    out.rank = pr;
    return out;
}

SmithDecomposition snf(const IntMatrix& a) {
    SmithDecomposition out;
    out.s = a;
    out.u = IntMatrix::identity(a.rows());
    out.v = IntMatrix::identity(a.cols());
    IntMatrix& s = out.s;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t mn = std::min(rows, cols);

    std::size_t t = 0;
    while (t < mn) {
        // minimum-absolute-value pivot in the trailing submatrix
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (s(i, j) == 0) continue;
                if (pi == rows || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break; // trailing submatrix is zero
        swap_rows(s, t, pi);
        swap_rows(u, t, pi);
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (s(i, t) == 0) continue;
            mpz_class q = round_q(s(i, t), s(t, t));
            submul_row(s, i, t, q);
            submul_row(u, i, t, q);
            if (s(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (s(t, j) == 0) continue;
            mpz_class q = round_q(s(t, j), s(t, t));
            submul_col(s, j, t, q);
            submul_col(v, j, t, q);
            if (s(t, j) != 0) clean = false;
        }
        if (!clean) continue; // re-pick pivot

        // force the divisibility chain: fold any non-divisible entry into row t
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
            for (std::size_t j = t + 1; j < cols && divisible; ++j) {
                if (s(i, j) % s(t, t) != 0) {
                    submul_row(s, t, i, mpz_class(-1));
                    submul_row(u, t, i, mpz_class(-1));
                    divisible = false;
                }
            }
        if (!divisible) continue;

        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
        ++t;
    }
    out.factors.resize(mn);
    for (std::size_t i = 0; i < mn; ++i) out.factors[i] = s(i, i);
    return out;
}

std::vector<mpz_class> minors_gcd_factors(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (rows > 8 || cols > 8)
        throw std::invalid_argument("minors_gcd_factors: dimension guard (max 8x8) exceeded");
    const std::size_t mn = std::min(rows, cols);
    std::vector<mpz_class> g(mn + 1);
    g[0] = 1;

    for (std::size_t k = 1; k <= mn; ++k) {
        mpz_class gk = 0;
        std::vector<std::size_t> rsel(k), csel(k);
        for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) csel[i] = i;
            do {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rsel[i], csel[j]);
                mpz_class d = determinant(sub);
                mpz_gcd(gk.get_mpz_t(), gk.get_mpz_t(), d.get_mpz_t());
            } while (next_combination(csel, cols));
        } while (next_combination(rsel, rows));
        g[k] = gk;
    }

    std::vector<mpz_class> factors(mn);
    for (std::size_t k = 1; k <= mn; ++k) {
        if (g[k] == 0)
            factors[k - 1] = 0; // rank < k, so this and all later factors vanish
        else
            factors[k - 1] = g[k] / g[k - 1];
    }
    return factors;
}

std::size_t rank(const IntMatrix& a) { return hnf(a).rank; }

IntMatrix kernel_basis(const IntMatrix& a) {
    // U * A^T = H; rows of U matching zero rows of H give the kernel of A.
    HermiteForm hf = hnf(a.transpose());
    const std::size_t cols = a.cols();
    const std::size_t r = hf.rank;
    IntMatrix k = hf.u.row_slice(r, cols);
    k = hnf(k).h; // canonical basis
    return k.transpose();
}

IntMatrix column_basis(const IntMatrix& a) {
    HermiteForm hf = hnf(a.transpose());
    return hf.h.row_slice(0, hf.rank).transpose();
}

LinearSolver::LinearSolver(const IntMatrix& a)
    : dec_(snf(a)), rows_(a.rows()), cols_(a.cols()) {
    rank_ = 0;
    for (const auto& f : dec_.factors)
        if (f != 0) ++rank_;
}

std::optional<std::vector<mpz_class>> LinearSolver::solve_integer(const std::vector<mpz_class>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve_integer: length mismatch");
    std::vector<mpz_class> y = dec_.u.apply(b);
    std::vector<mpz_class> t(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const mpz_class& si = i < dec_.factors.size() ? dec_.factors[i] : mpz_class(0);
        if (si != 0) {
            if (y[i] % si != 0) return std::nullopt;
            t[i] = y[i] / si;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return dec_.v.apply(t);
}

std::optional<std::vector<mpq_class>> LinearSolver::solve_rational(const std::vector<mpz_class>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve_rational: length mismatch");
    std::vector<mpz_class> y = dec_.u.apply(b);
    std::vector<mpq_class> t(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const mpz_class& si = i < dec_.factors.size() ? dec_.factors[i] : mpz_class(0);
        if (si != 0) {
            t[i] = mpq_class(y[i], si);
            t[i].canonicalize();
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<mpq_class> x(cols_);
    for (std::size_t i = 0; i < cols_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) x[i] += mpq_class(dec_.v(i, j)) * t[j];
    return x;
}

bool in_column_span(const IntMatrix& a, const std::vector<mpz_class>& b) {
    return LinearSolver(a).solve_integer(b).has_value();
}

std::optional<mpz_class> lattice_index(const IntMatrix& sub, const IntMatrix& super) {
    if (sub.rows() != super.rows()) throw std::invalid_argument("lattice_index: ambient ranks differ");
    LinearSolver rational(super);
    for (std::size_t j = 0; j < sub.cols(); ++j) {
        if (!rational.solve_rational(sub.column(j)))
            throw std::invalid_argument("lattice_index: column " + std::to_string(j) +
                                        " of sub is outside the rational span of super");
    }
    IntMatrix basis = column_basis(super);
    const std::size_t k = basis.cols();
    if (rank(sub) < k) return std::nullopt; // infinite index
    // coordinates of sub's columns in the basis of super; integrality is the
    // sublattice condition
    LinearSolver solver(basis);
    std::vector<std::vector<mpz_class>> coords;
    coords.reserve(sub.cols());
    for (std::size_t j = 0; j < sub.cols(); ++j) {
        auto x = solver.solve_integer(sub.column(j));
        if (!x)
            throw std::invalid_argument("lattice_index: column " + std::to_string(j) +
                                        " of sub is not in the lattice spanned by super");
        coords.push_back(std::move(*x));
    }
    IntMatrix x = IntMatrix::from_columns(k, coords);
    SmithDecomposition d = snf(x);
    mpz_class idx = 1;
    for (const auto& f : d.factors) {
        if (f == 0) return std::nullopt;
        idx *= f;
    }
    return idx;
}

IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& relations) {
    if (relations.cols() > 0 && f.rows() != relations.rows())
        throw std::invalid_argument("preimage_lattice: shape mismatch");
    IntMatrix combined = relations.cols() == 0
                             ? f
                             : IntMatrix::concat_cols(f, relations);
    IntMatrix k = kernel_basis(combined);
    IntMatrix x_part = k.row_slice(0, f.cols());
    return column_basis(x_part);
}

} // namespace unitgroups

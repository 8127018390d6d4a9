#include "unitgroups/pell.hpp"

#include <stdexcept>

namespace unitgroups {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const Poly& p) { return static_cast<long>(p.size()) - 1; } // -1 for zero

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, const mpq_class& c) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * c;
        r[i].canonicalize();
    }
    trim(r);
    return r;
}

// a = q*b + r with deg r < deg b
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    Poly rem = a;
    trim(rem);
    if (deg(rem) < deg(b)) return {{}, rem};
    Poly quot(rem.size() - b.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (rem.size() < b.size() + k || rem[k + b.size() - 1] == 0) continue;
        mpq_class c = rem[k + b.size() - 1] / b.back();
        c.canonicalize();
        quot[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            rem[k + j] -= c * b[j];
            rem[k + j].canonicalize();
        }
    }
    trim(rem);
    trim(quot);
    return {quot, rem};
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * mpq_class(i);
    trim(r);
    return r;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, mpq_class(1) / a.back()); // monic
    return a;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(sn, sd);
    r.canonicalize();
    return r;
}

// polynomial part A of sqrt(f): deg A = deg(f)/2 and deg(f - A^2) < deg A
Poly sqrt_polynomial_part(const Poly& f) {
    const long d2 = deg(f);
    const long d = d2 / 2;
    auto lc = rational_sqrt(f.back());
    if (!lc) throw std::invalid_argument("pell_solve: leading coefficient is not a square");
    Poly a(d + 1);
    a[d] = *lc;
    for (long k = d - 1; k >= 0; --k) {
        // match the coefficient of x^(d+k) in a^2 with f
        mpq_class s = 0;
        for (long i = k + 1; i <= d - 1; ++i) {
            long j = d + k - i;
            if (j > i || j < 0) continue; // count each unordered pair once
            mpq_class term = a[i] * a[j];
            s += (i == j) ? term : 2 * term;
        }
        mpq_class target = (d + k < static_cast<long>(f.size())) ? f[d + k] : mpq_class(0);
        a[k] = (target - s) / (2 * a[d]);
        a[k].canonicalize();
    }
    return a;
}

} // namespace

bool squarefree_univariate(const std::vector<mpq_class>& f) {
    Poly g = f;
    trim(g);
    if (deg(g) < 1) return true;
    return deg(gcd(g, derivative(g))) == 0;
}

bool leading_coefficient_is_square(const std::vector<mpq_class>& f) {
    Poly g = f;
    trim(g);
    if (g.empty()) return false;
    return rational_sqrt(g.back()).has_value();
}

PellResult pell_solve(const std::vector<mpq_class>& f_in, unsigned long bound) {
    Poly f = f_in;
    trim(f);
    if (deg(f) < 2 || deg(f) % 2 != 0)
        throw std::invalid_argument("pell_solve: f must have even degree >= 2");
    if (!leading_coefficient_is_square(f))
        throw std::invalid_argument("pell_solve: leading coefficient must be a square");
    if (!squarefree_univariate(f)) throw std::invalid_argument("pell_solve: f must be squarefree");

    const Poly a0 = sqrt_polynomial_part(f);

    // quadratic surd state: alpha_s = (sqrt(f) + p) / q with q | f - p^2
    Poly p{}; // zero
    Poly q{mpq_class(1)};
    // convergent seeds: p_{-2} = 0, p_{-1} = 1; q_{-2} = 1, q_{-1} = 0
    Poly pa_m2{}, pa_m1{mpq_class(1)};
    Poly pb_m2{mpq_class(1)}, pb_m1{};

    PellResult result;
    for (unsigned long s = 0; s < bound; ++s) {
        Poly partial = divrem(add(a0, p), q).first; // floor of alpha_s
        Poly pa = add(mul(partial, pa_m1), pa_m2);
        Poly pb = add(mul(partial, pb_m1), pb_m2);
        pa_m2 = pa_m1;
        pa_m1 = pa;
        pb_m2 = pb_m1;
        pb_m1 = pb;
        result.steps_used = s + 1;

        Poly value = sub(mul(pa, pa), mul(f, mul(pb, pb)));
        if (deg(value) == 0 && !pb.empty()) {
            // normalize b monic and re-verify the certificate before returning
            mpq_class lam = pb.back();
            PellSolution sol;
            sol.a = scale(pa, mpq_class(1) / lam);
            sol.b = scale(pb, mpq_class(1) / lam);
            sol.c = value[0] / (lam * lam);
            sol.c.canonicalize();
            sol.steps = s + 1;
            Poly check = sub(mul(sol.a, sol.a), mul(f, mul(sol.b, sol.b)));
            if (deg(check) != 0 || check[0] != sol.c)
                throw std::logic_error("pell_solve: certificate verification failed");
            result.solution = std::move(sol);
            return result;
        }

        // advance the surd
        p = sub(mul(partial, q), p);
        Poly num = sub(f, mul(p, p));
        auto [nq, rem] = divrem(num, q);
        if (!rem.empty()) throw std::logic_error("pell_solve: surd invariant broken");
        q = nq;
        if (q.empty()) throw std::logic_error("pell_solve: zero denominator in expansion");
    }
    result.bound_reached = true;
    return result;
}

PellResult pell_solve(const MultiPoly& f, unsigned long bound) {
    auto var = f.sole_variable();
    if (!var) throw std::invalid_argument("pell_solve: f must be univariate");
    return pell_solve(f.dense_univariate(*var), bound);
}

MultiPoly univariate_to_multipoly(const std::vector<mpq_class>& p, std::size_t nvars,
                                  unsigned long conductor, std::size_t var) {
    MultiPoly out(nvars, conductor);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Exponents e(nvars, 0);
        e[var] = static_cast<std::uint32_t>(i);
        out.add_term(e, CycNumber(conductor, p[i]));
    }
    return out;
}

} // namespace unitgroups

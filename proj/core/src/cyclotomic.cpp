#include "unitgroups/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace unitgroups {

namespace {

// exact division of integer polynomials, divisor monic
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("divide_monic: degree underflow");
    std::vector<mpz_class> quot(num.size() - dd);
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class c = num[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const auto& rem : num)
        if (rem != 0) throw std::logic_error("divide_monic: division not exact");
    return quot;
}

std::map<unsigned long, std::vector<mpz_class>>& cyclotomic_cache() {
    static std::map<unsigned long, std::vector<mpz_class>> cache;
    return cache;
}
std::mutex cyclotomic_mutex;

std::vector<mpz_class> compute_cyclotomic(unsigned long n,
                                          std::map<unsigned long, std::vector<mpz_class>>& cache) {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<mpz_class> f(n + 1);
    f[0] = -1;
    f[n] = 1; // t^n - 1
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        f = divide_monic(std::move(f), compute_cyclotomic(d, cache));
    }
    cache[n] = f;
    return f;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(cyclotomic_mutex);
    auto& cache = cyclotomic_cache();
    compute_cyclotomic(n, cache);
    return cache.at(n);
}

std::size_t cyclotomic_degree(unsigned long n) { return cyclotomic_polynomial(n).size() - 1; }

CycNumber::CycNumber(unsigned long conductor)
    : conductor_(conductor), coeffs_(cyclotomic_degree(conductor)) {}

CycNumber::CycNumber(unsigned long conductor, const mpq_class& rational)
    : CycNumber(conductor) {
    coeffs_[0] = rational;
}

CycNumber CycNumber::zeta(unsigned long conductor) {
    CycNumber z(conductor);
    std::vector<mpq_class> raw(2);
    raw[1] = 1;
    z.reduce(raw);
    raw.resize(z.coeffs_.size());
    z.coeffs_ = std::move(raw);
    return z;
}

CycNumber CycNumber::from_coeffs(unsigned long conductor, std::vector<mpq_class> coeffs) {
    CycNumber z(conductor);
    if (coeffs.size() != z.coeffs_.size())
        throw std::invalid_argument("CycNumber: coefficient length must equal deg Phi_n");
    for (auto& c : coeffs) c.canonicalize();
    z.coeffs_ = std::move(coeffs);
    return z;
}

bool CycNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

mpq_class CycNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycNumber: not rational");
    return coeffs_[0];
}

void CycNumber::reduce(std::vector<mpq_class>& raw) const {
    const auto& phi = cyclotomic_polynomial(conductor_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = raw.size(); i-- > deg;) {
        mpq_class c = raw[i];
        if (c == 0) continue;
        raw[i] = 0;
        // t^deg = -(phi_0 + ... + phi_{deg-1} t^{deg-1}), phi monic
        for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * phi[j];
    }
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) throw std::invalid_argument("CycNumber: conductor mismatch");
    CycNumber r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) throw std::invalid_argument("CycNumber: conductor mismatch");
    CycNumber r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) throw std::invalid_argument("CycNumber: conductor mismatch");
    const std::size_t deg = a.coeffs_.size();
    std::vector<mpq_class> raw(2 * deg);
    for (std::size_t i = 0; i < deg; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    CycNumber r(a.conductor_);
    r.reduce(raw);
    raw.resize(deg);
    r.coeffs_ = std::move(raw);
    return r;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::invalid_argument("CycNumber: inverse of zero");
    // extended Euclid in Q[t] against Phi_n (irreducible over Q)
    const auto& phi_int = cyclotomic_polynomial(conductor_);
    std::vector<mpq_class> r0(phi_int.begin(), phi_int.end());
    std::vector<mpq_class> r1 = coeffs_;
    auto trim = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(r1);
    std::vector<mpq_class> s0{}, s1{mpq_class(1)}; // coefficients of this in the combination
    while (true) {
        trim(r1);
        if (r1.empty()) throw std::logic_error("CycNumber: Phi_n not coprime to element");
        if (r1.size() == 1) break;
        // r0 = q*r1 + r; long division
        std::vector<mpq_class> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        std::vector<mpq_class> rem = r0;
        for (std::size_t k = q.size(); k-- > 0;) {
            if (rem.size() < r1.size() + k) continue;
            mpq_class c = rem[k + r1.size() - 1] / r1.back();
            q[k] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[k + j] -= c * r1[j];
        }
        trim(rem);
        // s_{next} = s0 - q*s1
        std::vector<mpq_class> snext(std::max(s0.size(), q.size() + s1.size()));
        for (std::size_t i = 0; i < s0.size(); ++i) snext[i] += s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    // r1 is a nonzero constant c: s1 * this == c (mod Phi), inverse = s1/c
    mpq_class c = r1[0];
    std::vector<mpq_class> inv(coeffs_.size());
    std::vector<mpq_class> raw = s1;
    raw.resize(std::max<std::size_t>(raw.size(), coeffs_.size()));
    reduce(raw);
    raw.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        inv[i] = raw[i] / c;
        inv[i].canonicalize();
    }
    CycNumber out(conductor_);
    out.coeffs_ = std::move(inv);
    return out;
}

CycNumber CycNumber::pow(unsigned long e) const {
    CycNumber result(conductor_, 1);
    CycNumber base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string CycNumber::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        mpq_class a = c;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        if (a < 0) a = -a;
        bool unit_coeff = (a == 1) && i > 0;
        if (!unit_coeff) os << a;
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace unitgroups

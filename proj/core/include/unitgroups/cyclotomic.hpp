#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace unitgroups {

/// Dense coefficients (low degree first) of the n-th cyclotomic polynomial,
/// computed by exact recursive division of t^n - 1.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned long n);

/// Element of the cyclotomic field Q(zeta_n) = Q[t]/Phi_n(t), stored as the
/// rational coefficient vector of the residue.  zeta is the residue of t.
class CycNumber {
public:
    CycNumber() : conductor_(1), coeffs_(1) {}
    explicit CycNumber(unsigned long conductor);
    CycNumber(unsigned long conductor, const mpq_class& rational);
    static CycNumber zeta(unsigned long conductor);
    static CycNumber from_coeffs(unsigned long conductor, std::vector<mpq_class> coeffs);

    unsigned long conductor() const { return conductor_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    mpq_class rational_value() const;

    CycNumber operator-() const;
    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    friend bool operator==(const CycNumber& a, const CycNumber& b);

    CycNumber inverse() const; ///< throws on zero
    CycNumber pow(unsigned long e) const;

    std::string to_string() const;

private:
    void reduce(std::vector<mpq_class>& raw) const; ///< mod Phi_n, in place
    unsigned long conductor_;
    std::vector<mpq_class> coeffs_; ///< length deg Phi_n
};

std::size_t cyclotomic_degree(unsigned long n);

} // namespace unitgroups

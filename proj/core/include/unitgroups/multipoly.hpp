#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unitgroups/cyclotomic.hpp"

namespace unitgroups {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable largest.  Fixed once so serialization is deterministic.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q(zeta_n); no zero coefficients are
/// stored and terms sit in graded lexicographic order.
class MultiPoly {
public:
    MultiPoly() : nvars_(0), conductor_(1) {}
    MultiPoly(std::size_t nvars, unsigned long conductor)
        : nvars_(nvars), conductor_(conductor) {}

    static MultiPoly constant(std::size_t nvars, unsigned long conductor, const CycNumber& c);
    static MultiPoly constant(std::size_t nvars, unsigned long conductor, const mpq_class& c);
    static MultiPoly variable(std::size_t nvars, unsigned long conductor, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    unsigned long conductor() const { return conductor_; }
    const std::map<Exponents, CycNumber, GrlexLess>& terms() const { return terms_; }

    void add_term(const Exponents& e, const CycNumber& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Requires is_constant(); zero polynomial yields 0.
    CycNumber constant_value() const;

    unsigned long total_degree() const; ///< 0 for the zero polynomial
    unsigned long degree_in(std::size_t var) const;
    std::vector<bool> used_variables() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const CycNumber& c) const;
    MultiPoly pow(unsigned long e) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Leading term in graded lex order; requires a nonzero polynomial.
    std::pair<Exponents, CycNumber> leading_term() const;

    MultiPoly derivative(std::size_t var) const;

    /// Exact quotient this / d, or nullopt when d does not divide exactly.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

    /// True when a * scalar == b for some nonzero scalar.
    static bool proportional(const MultiPoly& a, const MultiPoly& b);

    /// Index of the single variable occurring, if at most one does.
    std::optional<std::size_t> sole_variable() const;
    /// Dense rational coefficients in the given variable; requires the
    /// polynomial to use only that variable and have rational coefficients.
    std::vector<mpq_class> dense_univariate(std::size_t var) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    unsigned long conductor_;
    std::map<Exponents, CycNumber, GrlexLess> terms_;
};

} // namespace unitgroups

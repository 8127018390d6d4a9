#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitgroups/multipoly.hpp"

namespace unitgroups {

/// The ring T = A[z]/(z^n - f) over A = Q(zeta_n)[x_1, ..., x_m], with its
/// order-n automorphism sigma(z) = zeta z and the localization S = T[1/z].
/// The factorization f = f_1 ... f_nu is declared by the caller with all
/// multiplicities 1; construction checks the product exactly and that no two
/// factors are proportional.  Irreducibility of the factors is the caller's
/// assertion and is not decided here.
struct CoverRing {
    std::size_t nvars = 0;
    unsigned long degree = 2; ///< n
    std::vector<std::string> variable_names;
    MultiPoly f;
    std::vector<MultiPoly> factors;

    CoverRing(std::size_t m, unsigned long n, std::vector<std::string> names, MultiPoly branch,
              std::vector<MultiPoly> declared_factors);

    unsigned long conductor() const { return degree; }
};

using CoverRingPtr = std::shared_ptr<const CoverRing>;

CoverRingPtr make_cover_ring(std::size_t m, unsigned long n, std::vector<std::string> names,
                             MultiPoly f, std::vector<MultiPoly> factors);

/// Element sum u_i z^i of a cover ring.
class CoverElement {
public:
    CoverElement() = default;
    CoverElement(CoverRingPtr ring, std::vector<MultiPoly> components);

    static CoverElement zero(const CoverRingPtr& ring);
    static CoverElement one(const CoverRingPtr& ring);
    static CoverElement generator(const CoverRingPtr& ring); ///< z
    static CoverElement from_constant(const CoverRingPtr& ring, const mpq_class& c);
    static CoverElement from_poly(const CoverRingPtr& ring, const MultiPoly& p);

    const CoverRingPtr& ring() const { return ring_; }
    const std::vector<MultiPoly>& components() const { return comps_; }

    bool is_zero() const;
    std::string to_string() const;

    CoverElement operator-() const;
    friend CoverElement operator+(const CoverElement& a, const CoverElement& b);
    friend CoverElement operator-(const CoverElement& a, const CoverElement& b);
    friend bool operator==(const CoverElement& a, const CoverElement& b);

private:
    CoverRingPtr ring_;
    std::vector<MultiPoly> comps_;
};

/// Ring product with z^n reduced to f.
CoverElement cover_mul(const CoverElement& u, const CoverElement& v);
inline CoverElement operator*(const CoverElement& a, const CoverElement& b) {
    return cover_mul(a, b);
}

/// sigma(sum u_i z^i) = sum zeta^i u_i z^i.
CoverElement sigma(const CoverElement& u);

/// N(u) = u sigma(u) ... sigma^(n-1)(u); lands in A, which is asserted.
MultiPoly norm(const CoverElement& u);

/// Same value as the determinant of multiplication by u on the basis
/// 1, z, ..., z^(n-1); the independent second route.
MultiPoly norm_via_determinant(const CoverElement& u);

/// A nonzero constant norm certifies invertibility in T.
bool is_unit(const CoverElement& u);

/// Inverse of a unit: (prod of the conjugates) / N(u); nullopt when u is not
/// a unit of T.
std::optional<CoverElement> inverse(const CoverElement& u);

/// Unit of the localization S: the norm equals c * prod f_i^(a_i) for a
/// nonzero constant c, decided by iterated exact trial division.
bool is_unit_in_localization(const CoverElement& u);

/// Systematic bounded search for units of T modulo scalars.  Delegates to
/// the continued-fraction solver for quadratic univariate rings; otherwise
/// enumerates elements with small support, bounded component degree and
/// small integer coefficients, filtering with is_unit.  An empty result is
/// evidence relative to the bounds and the rational coefficient field, not
/// proof of triviality.
std::vector<CoverElement> unit_search(const CoverRingPtr& ring, unsigned long degree_bound,
                                      unsigned long support_bound,
                                      const std::atomic<bool>* cancel = nullptr);

} // namespace unitgroups

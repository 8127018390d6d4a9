#include "unitgroups/cover_ring.hpp"

#include <sstream>
#include <stdexcept>

#include "unitgroups/pell.hpp"

namespace unitgroups {

CoverRing::CoverRing(std::size_t m, unsigned long n, std::vector<std::string> names,
                     MultiPoly branch, std::vector<MultiPoly> declared_factors)
    : nvars(m), degree(n), variable_names(std::move(names)), f(std::move(branch)),
      factors(std::move(declared_factors)) {
    if (degree < 2) throw std::invalid_argument("CoverRing: degree must be >= 2");
    if (f.nvars() != nvars || f.conductor() != degree)
        throw std::invalid_argument("CoverRing: f must live in the declared polynomial ring");
    if (f.is_constant()) throw std::invalid_argument("CoverRing: f must be non-constant");
    if (variable_names.size() != nvars)
        throw std::invalid_argument("CoverRing: one name per variable required");
    if (factors.empty()) factors.push_back(f);
    MultiPoly product = MultiPoly::constant(nvars, degree, mpq_class(1));
    for (const auto& fi : factors) {
        if (fi.nvars() != nvars || fi.conductor() != degree)
            throw std::invalid_argument("CoverRing: factor in the wrong ring");
        product = product * fi;
    }
    if (!(product == f))
        throw std::invalid_argument("CoverRing: declared factors do not multiply to f");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (MultiPoly::proportional(factors[i], factors[j]))
                throw std::invalid_argument("CoverRing: repeated factor; f must be squarefree");
    // for univariate f the squarefreeness check is decisive
    if (auto var = f.sole_variable()) {
        bool rational = true;
        for (const auto& [e, c] : f.terms())
            if (!c.is_rational()) rational = false;
        if (rational) {
            std::vector<mpq_class> dense = f.dense_univariate(*var);
            if (!squarefree_univariate(dense))
                throw std::invalid_argument("CoverRing: f has a repeated root");
        }
    }
}

CoverRingPtr make_cover_ring(std::size_t m, unsigned long n, std::vector<std::string> names,
                             MultiPoly f, std::vector<MultiPoly> factors) {
    return std::make_shared<const CoverRing>(m, n, std::move(names), std::move(f),
                                             std::move(factors));
}

CoverElement::CoverElement(CoverRingPtr ring, std::vector<MultiPoly> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
    if (!ring_) throw std::invalid_argument("CoverElement: null ring");
    if (comps_.size() != ring_->degree)
        throw std::invalid_argument("CoverElement: need one component per power of z");
    for (const auto& c : comps_)
        if (c.nvars() != ring_->nvars || c.conductor() != ring_->conductor())
            throw std::invalid_argument("CoverElement: component in the wrong ring");
}

CoverElement CoverElement::zero(const CoverRingPtr& ring) {
    return CoverElement(ring, std::vector<MultiPoly>(ring->degree,
                                                     MultiPoly(ring->nvars, ring->conductor())));
}

CoverElement CoverElement::one(const CoverRingPtr& ring) {
    return from_constant(ring, mpq_class(1));
}

CoverElement CoverElement::generator(const CoverRingPtr& ring) {
    CoverElement z = zero(ring);
    z.comps_[1] = MultiPoly::constant(ring->nvars, ring->conductor(), mpq_class(1));
    return z;
}

CoverElement CoverElement::from_constant(const CoverRingPtr& ring, const mpq_class& c) {
    CoverElement e = zero(ring);
    e.comps_[0] = MultiPoly::constant(ring->nvars, ring->conductor(), c);
    return e;
}

CoverElement CoverElement::from_poly(const CoverRingPtr& ring, const MultiPoly& p) {
    CoverElement e = zero(ring);
    e.comps_[0] = p;
    return e;
}

bool CoverElement::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

std::string CoverElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        std::string cs = comps_[i].to_string(ring_->variable_names);
        bool negated = false;
        if (i > 0 && comps_[i].terms().size() == 1 && cs.size() > 1 && cs[0] == '-') {
            negated = true;
            cs = (-comps_[i]).to_string(ring_->variable_names);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        if (i == 0) {
            os << cs;
            continue;
        }
        if (cs == "1")
            os << "";
        else if (comps_[i].terms().size() == 1)
            os << cs << "*";
        else
            os << "(" << cs << ")*";
        os << "z";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

namespace {

void require_same_ring(const CoverElement& a, const CoverElement& b) {
    if (a.ring() != b.ring() && !(a.ring() && b.ring() && a.ring()->degree == b.ring()->degree &&
                                  a.ring()->nvars == b.ring()->nvars &&
                                  a.ring()->f == b.ring()->f))
        throw std::invalid_argument("CoverElement: ring mismatch");
}

} // namespace

CoverElement CoverElement::operator-() const {
    CoverElement r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

CoverElement operator+(const CoverElement& a, const CoverElement& b) {
    require_same_ring(a, b);
    std::vector<MultiPoly> comps(a.comps_.size());
    for (std::size_t i = 0; i < comps.size(); ++i) comps[i] = a.comps_[i] + b.comps_[i];
    return CoverElement(a.ring_, std::move(comps));
}

CoverElement operator-(const CoverElement& a, const CoverElement& b) { return a + (-b); }

bool operator==(const CoverElement& a, const CoverElement& b) {
    if (!a.ring_ || !b.ring_) return !a.ring_ && !b.ring_;
    return a.ring_->degree == b.ring_->degree && a.comps_ == b.comps_;
}

CoverElement cover_mul(const CoverElement& u, const CoverElement& v) {
    require_same_ring(u, v);
    const CoverRingPtr& ring = u.ring();
    const unsigned long n = ring->degree;
    std::vector<MultiPoly> out(n, MultiPoly(ring->nvars, ring->conductor()));
    for (unsigned long i = 0; i < n; ++i) {
        if (u.components()[i].is_zero()) continue;
        for (unsigned long j = 0; j < n; ++j) {
            if (v.components()[j].is_zero()) continue;
            MultiPoly prod = u.components()[i] * v.components()[j];
            if (i + j < n)
                out[i + j] = out[i + j] + prod;
            else
                out[i + j - n] = out[i + j - n] + prod * ring->f;
        }
    }
    return CoverElement(ring, std::move(out));
}

CoverElement sigma(const CoverElement& u) {
    const CoverRingPtr& ring = u.ring();
    CycNumber zeta = CycNumber::zeta(ring->conductor());
    std::vector<MultiPoly> comps = u.components();
    CycNumber zi(ring->conductor(), 1);
    for (unsigned long i = 0; i < ring->degree; ++i) {
        comps[i] = comps[i].scaled(zi);
        zi = zi * zeta;
    }
    return CoverElement(ring, std::move(comps));
}

MultiPoly norm(const CoverElement& u) {
    const CoverRingPtr& ring = u.ring();
    CoverElement prod = u;
    CoverElement conj = u;
    for (unsigned long i = 1; i < ring->degree; ++i) {
        conj = sigma(conj);
        prod = cover_mul(prod, conj);
    }
    for (unsigned long i = 1; i < ring->degree; ++i)
        if (!prod.components()[i].is_zero())
            throw std::logic_error("norm: conjugate product escaped the base ring");
    return prod.components()[0];
}

MultiPoly norm_via_determinant(const CoverElement& u) {
    const CoverRingPtr& ring = u.ring();
    const unsigned long n = ring->degree;
    // matrix of multiplication by u on 1, z, ..., z^(n-1):
    // column j holds the components of u * z^j
    std::vector<std::vector<MultiPoly>> m(n);
    for (unsigned long k = 0; k < n; ++k) {
        m[k].resize(n, MultiPoly(ring->nvars, ring->conductor()));
        for (unsigned long j = 0; j < n; ++j) {
            if (k >= j)
                m[k][j] = u.components()[k - j];
            else
                m[k][j] = u.components()[k + n - j] * ring->f;
        }
    }
    // Laplace expansion along the first column; n is small here
    std::vector<unsigned long> cols(n);
    for (unsigned long j = 0; j < n; ++j) cols[j] = j;
    struct Expand {
        const std::vector<std::vector<MultiPoly>>& m;
        const CoverRingPtr& ring;
        MultiPoly run(std::vector<unsigned long> rows, std::vector<unsigned long> cols) {
            if (rows.size() == 1) return m[rows[0]][cols[0]];
            MultiPoly det(ring->nvars, ring->conductor());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const MultiPoly& pivot = m[rows[i]][cols[0]];
                if (pivot.is_zero()) continue;
                std::vector<unsigned long> sub_rows;
                for (std::size_t k = 0; k < rows.size(); ++k)
                    if (k != i) sub_rows.push_back(rows[k]);
                MultiPoly minor = run(sub_rows, {cols.begin() + 1, cols.end()});
                MultiPoly term = pivot * minor;
                det = (i % 2 == 0) ? det + term : det - term;
            }
            return det;
        }
    } expand{m, ring};
    std::vector<unsigned long> rows(n);
    for (unsigned long i = 0; i < n; ++i) rows[i] = i;
    return expand.run(rows, cols);
}

bool is_unit(const CoverElement& u) {
    if (u.is_zero()) return false;
    MultiPoly n = norm(u);
    return n.is_constant() && !n.is_zero();
}

std::optional<CoverElement> inverse(const CoverElement& u) {
    if (u.is_zero()) return std::nullopt;
    const CoverRingPtr& ring = u.ring();
    CoverElement prod = CoverElement::one(ring);
    CoverElement conj = u;
    for (unsigned long i = 1; i < ring->degree; ++i) {
        conj = sigma(conj);
        prod = cover_mul(prod, conj);
    }
    MultiPoly nm = cover_mul(u, prod).components()[0];
    if (!nm.is_constant() || nm.is_zero()) return std::nullopt;
    CycNumber scale = nm.constant_value().inverse();
    std::vector<MultiPoly> comps = prod.components();
    for (auto& c : comps) c = c.scaled(scale);
    return CoverElement(ring, std::move(comps));
}

bool is_unit_in_localization(const CoverElement& u) {
    if (u.is_zero()) return false;
    MultiPoly g = norm(u);
    if (g.is_zero()) return false;
    const CoverRingPtr& ring = u.ring();
    for (const auto& fi : ring->factors) {
        while (true) {
            auto q = g.divide_exact(fi);
            if (!q) break;
            g = std::move(*q);
        }
    }
    return g.is_constant() && !g.is_zero();
}

namespace {

// all monomials of total degree <= bound in nvars variables
std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned long bound) {
    std::vector<Exponents> out;
    Exponents e(nvars, 0);
    while (true) {
        out.push_back(e);
        // odometer with a total-degree cap
        std::size_t i = 0;
        for (; i < nvars; ++i) {
            ++e[i];
            unsigned long total = 0;
            for (auto x : e) total += x;
            if (total <= bound) break;
            e[i] = 0;
        }
        if (i == nvars) break;
    }
    return out;
}

} // namespace

std::vector<CoverElement> unit_search(const CoverRingPtr& ring, unsigned long degree_bound,
                                      unsigned long support_bound,
                                      const std::atomic<bool>* cancel) {
    std::vector<CoverElement> found;

    // quadratic univariate covers: the continued-fraction solver is complete
    // up to the degree bound
    if (ring->degree == 2) {
        if (auto var = ring->f.sole_variable()) {
            bool rational = true;
            for (const auto& [e, c] : ring->f.terms())
                if (!c.is_rational()) rational = false;
            std::vector<mpq_class> dense;
            if (rational) dense = ring->f.dense_univariate(*var);
            if (rational && dense.size() % 2 == 1 && dense.size() > 1 &&
                leading_coefficient_is_square(dense)) {
                PellResult pr = pell_solve(dense, degree_bound + 2);
                if (pr.solution && pr.solution->b_degree() <= degree_bound) {
                    MultiPoly a = univariate_to_multipoly(pr.solution->a, ring->nvars,
                                                          ring->conductor(), *var);
                    MultiPoly b = univariate_to_multipoly(pr.solution->b, ring->nvars,
                                                          ring->conductor(), *var);
                    CoverElement u(ring, {a, b});
                    if (is_unit(u)) found.push_back(u);
                }
                return found;
            }
        }
    }

    const std::vector<Exponents> monos = monomials_up_to(ring->nvars, degree_bound);
    const std::size_t slots = monos.size() * ring->degree;
    const long coeff_choices[] = {1, 2, -1, -2};

    // crude upper bound on the number of candidates, to refuse runaway input
    double estimate = 0, binom = 1;
    for (unsigned long s = 1; s <= support_bound && s <= slots; ++s) {
        binom = binom * double(slots - s + 1) / double(s);
        double c = binom;
        for (unsigned long i = 0; i < s; ++i) c *= 4;
        estimate += c;
    }
    if (estimate > 4e6)
        throw std::invalid_argument("unit_search: bounds exceed the enumeration guard");

    auto slot_mono = [&](std::size_t slot) { return monos[slot % monos.size()]; };
    auto slot_zpow = [&](std::size_t slot) { return slot / monos.size(); };

    std::vector<std::size_t> sel;
    std::vector<std::size_t> coeff_idx;
    auto emit = [&]() {
        // skip elements of the base ring: they are never nonscalar units
        bool has_z = false;
        for (auto s : sel)
            if (slot_zpow(s) > 0) has_z = true;
        if (!has_z) return;
        CoverElement u = CoverElement::zero(ring);
        std::vector<MultiPoly> comps = u.components();
        for (std::size_t k = 0; k < sel.size(); ++k) {
            long cv = coeff_choices[coeff_idx[k]];
            if (k == 0 && cv < 0) return; // scalar normalization
            MultiPoly t(ring->nvars, ring->conductor());
            t.add_term(slot_mono(sel[k]), CycNumber(ring->conductor(), mpq_class(cv)));
            comps[slot_zpow(sel[k])] = comps[slot_zpow(sel[k])] + t;
        }
        CoverElement cand(ring, std::move(comps));
        if (cand.is_zero() || !is_unit(cand)) return;
        found.push_back(cand);
    };

    // iterate subsets of each size with an odometer over coefficients
    for (unsigned long size = 1; size <= support_bound && size <= slots; ++size) {
        sel.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) sel[i] = i;
        bool more = true;
        while (more) {
            if (cancel && cancel->load()) return found;
            coeff_idx.assign(size, 0);
            while (true) {
                emit();
                std::size_t p = 0;
                while (p < size && ++coeff_idx[p] == 4) coeff_idx[p++] = 0;
                if (p == size) break;
            }
            // next subset
            std::size_t p = size;
            more = false;
            while (p > 0) {
                --p;
                if (sel[p] + 1 <= slots - (size - p)) {
                    ++sel[p];
                    for (std::size_t q = p + 1; q < size; ++q) sel[q] = sel[q - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }

    // drop scalar multiples
    std::vector<CoverElement> unique;
    for (const auto& u : found) {
        bool dup = false;
        for (const auto& v : unique) {
            bool all_prop = true;
            CycNumber ratio(ring->conductor());
            bool ratio_set = false;
            for (unsigned long i = 0; i < ring->degree && all_prop; ++i) {
                const MultiPoly& a = u.components()[i];
                const MultiPoly& b = v.components()[i];
                if (a.is_zero() != b.is_zero()) all_prop = false;
                else if (!a.is_zero()) {
                    if (!MultiPoly::proportional(a, b)) all_prop = false;
                    else {
                        CycNumber r = b.leading_term().second * a.leading_term().second.inverse();
                        if (!ratio_set) {
                            ratio = r;
                            ratio_set = true;
                        } else if (!(ratio == r)) {
                            all_prop = false;
                        }
                    }
                }
            }
            if (all_prop) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(u);
    }
    return unique;
}

} // namespace unitgroups

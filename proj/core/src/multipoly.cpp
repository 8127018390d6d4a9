#include "unitgroups/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unitgroups {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da < db;
    // same degree: a < b when a is lexicographically smaller, first variable
    // weighs most
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

MultiPoly MultiPoly::constant(std::size_t nvars, unsigned long conductor, const CycNumber& c) {
    MultiPoly p(nvars, conductor);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::constant(std::size_t nvars, unsigned long conductor, const mpq_class& c) {
    return constant(nvars, conductor, CycNumber(conductor, c));
}

MultiPoly MultiPoly::variable(std::size_t nvars, unsigned long conductor, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly p(nvars, conductor);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, CycNumber(conductor, 1));
    return p;
}

void MultiPoly::add_term(const Exponents& e, const CycNumber& c) {
    if (e.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c.conductor() != conductor_) throw std::invalid_argument("MultiPoly: conductor mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

CycNumber MultiPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("MultiPoly: not constant");
    if (terms_.empty()) return CycNumber(conductor_);
    return terms_.begin()->second;
}

unsigned long MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0ul);
}

unsigned long MultiPoly::degree_in(std::size_t var) const {
    unsigned long d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned long>(d, e[var]);
    return d;
}

std::vector<bool> MultiPoly::used_variables() const {
    std::vector<bool> used(nvars_, false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) used[i] = true;
    return used;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_, conductor_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.conductor_ != b.conductor_)
        throw std::invalid_argument("MultiPoly add: ring mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.conductor_ != b.conductor_)
        throw std::invalid_argument("MultiPoly multiply: ring mismatch");
    MultiPoly r(a.nvars_, a.conductor_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const CycNumber& c) const {
    MultiPoly r(nvars_, conductor_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly result = constant(nvars_, conductor_, mpq_class(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
}

std::pair<Exponents, CycNumber> MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly: leading term of zero");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(nvars_, conductor_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * CycNumber(conductor_, mpq_class(e[var])));
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("MultiPoly: division by zero");
    MultiPoly rem = *this;
    MultiPoly quot(nvars_, conductor_);
    auto [de, dc] = d.leading_term();
    CycNumber dinv = dc.inverse();
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading_term();
        Exponents q(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (re[i] < de[i]) return std::nullopt; // leading monomial not divisible
            q[i] = re[i] - de[i];
        }
        MultiPoly qt(nvars_, conductor_);
        qt.add_term(q, rc * dinv);
        quot = quot + qt;
        rem = rem - qt * d;
    }
    return quot;
}

bool MultiPoly::proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms_.size() != b.terms_.size()) return false;
    CycNumber ratio = b.leading_term().second * a.leading_term().second.inverse();
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second * ratio == ib->second)) return false;
    }
    return true;
}

std::optional<std::size_t> MultiPoly::sole_variable() const {
    std::vector<bool> used = used_variables();
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) continue;
        if (var) return std::nullopt; // more than one
        var = i;
    }
    return var ? var : std::optional<std::size_t>(0); // constants count as univariate in x0
}

std::vector<mpq_class> MultiPoly::dense_univariate(std::size_t var) const {
    std::vector<mpq_class> out(degree_in(var) + 1);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i)
            if (i != var && e[i] != 0)
                throw std::invalid_argument("dense_univariate: polynomial is not univariate");
        if (!c.is_rational())
            throw std::invalid_argument("dense_univariate: coefficients must be rational");
        out[e[var]] = c.rational_value();
    }
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool is_const_term = std::accumulate(e.begin(), e.end(), 0u) == 0;
        std::string cs;
        bool negative = false;
        if (c.is_rational()) {
            mpq_class q = c.rational_value();
            if (q < 0) {
                negative = true;
                q = -q;
            }
            if (q != 1 || is_const_term) {
                std::ostringstream cp;
                cp << q;
                cs = cp.str();
            }
        } else {
            cs = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool printed = false;
        if (!cs.empty()) {
            os << cs;
            printed = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

} // namespace unitgroups

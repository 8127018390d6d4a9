#include "unitgroups/expression.hpp"

#include <cctype>
#include <stdexcept>

namespace unitgroups {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Number, src.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Ident, src.substr(i, j - i)});
            i = j;
            continue;
        }
        switch (c) {
        case '+': out.push_back({Token::Plus, "+"}); break;
        case '-': out.push_back({Token::Minus, "-"}); break;
        case '*': out.push_back({Token::Star, "*"}); break;
        case '/': out.push_back({Token::Slash, "/"}); break;
        case '^': out.push_back({Token::Caret, "^"}); break;
        case '(': out.push_back({Token::LParen, "("}); break;
        case ')': out.push_back({Token::RParen, ")"}); break;
        default:
            throw std::invalid_argument(std::string("expression: unexpected character '") + c + "'");
        }
        ++i;
    }
    out.push_back({Token::End, ""});
    return out;
}

// Generic recursive-descent parser over any commutative algebra that can
// resolve identifiers and embed rationals.
template <typename V, typename Atom, typename Embed, typename DivideConst>
class Parser {
public:
    Parser(std::vector<Token> tokens, Atom atom, Embed embed, DivideConst divide)
        : toks_(std::move(tokens)), atom_(atom), embed_(embed), divide_(divide) {}

    V parse() {
        V v = expr();
        expect(Token::End, "end of input");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k) throw std::invalid_argument(std::string("expression: expected ") + what);
        ++pos_;
    }

    V expr() {
        bool neg = false;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            if (take().kind == Token::Minus) neg = !neg;
        }
        V v = term();
        if (neg) v = embed_(mpq_class(-1)) * v;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = take().kind == Token::Minus;
            V rhs = term();
            v = minus ? v - rhs : v + rhs;
        }
        return v;
    }

    V term() {
        V v = factor();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            bool div = take().kind == Token::Slash;
            V rhs = factor();
            if (div)
                v = divide_(v, rhs);
            else
                v = v * rhs;
        }
        return v;
    }

    V factor() {
        V v = base();
        while (peek().kind == Token::Caret) {
            take();
            if (peek().kind != Token::Number)
                throw std::invalid_argument("expression: exponent must be a nonnegative integer");
            unsigned long e = std::stoul(take().text);
            v = pow_value(v, e);
        }
        return v;
    }

    V pow_value(const V& v, unsigned long e) {
        V r = embed_(mpq_class(1));
        V b = v;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    V base() {
        const Token& t = peek();
        if (t.kind == Token::Number) {
            mpz_class n(take().text);
            return embed_(mpq_class(n));
        }
        if (t.kind == Token::Ident) return atom_(take().text);
        if (t.kind == Token::LParen) {
            take();
            V v = expr();
            expect(Token::RParen, "')'");
            return v;
        }
        if (t.kind == Token::Minus) {
            take();
            return embed_(mpq_class(-1)) * base();
        }
        throw std::invalid_argument("expression: expected a value");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Atom atom_;
    Embed embed_;
    DivideConst divide_;
};

} // namespace

MultiPoly parse_polynomial(const std::string& src, const std::vector<std::string>& names,
                           unsigned long conductor) {
    const std::size_t nvars = names.size();
    auto atom = [&](const std::string& id) -> MultiPoly {
        if (id == "zeta") return MultiPoly::constant(nvars, conductor, CycNumber::zeta(conductor));
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == id) return MultiPoly::variable(nvars, conductor, i);
        throw std::invalid_argument("expression: unknown identifier '" + id + "'");
    };
    auto embed = [&](const mpq_class& q) { return MultiPoly::constant(nvars, conductor, q); };
    auto divide = [&](const MultiPoly& a, const MultiPoly& b) -> MultiPoly {
        if (!b.is_constant() || b.is_zero())
            throw std::invalid_argument("expression: division only by nonzero constants");
        return a.scaled(b.constant_value().inverse());
    };
    Parser<MultiPoly, decltype(atom), decltype(embed), decltype(divide)> p(tokenize(src), atom,
                                                                           embed, divide);
    return p.parse();
}

CoverElement parse_cover_element(const std::string& src, const CoverRingPtr& ring) {
    auto atom = [&](const std::string& id) -> CoverElement {
        if (id == "z") return CoverElement::generator(ring);
        if (id == "zeta")
            return CoverElement::from_poly(
                ring, MultiPoly::constant(ring->nvars, ring->conductor(),
                                          CycNumber::zeta(ring->conductor())));
        for (std::size_t i = 0; i < ring->variable_names.size(); ++i)
            if (ring->variable_names[i] == id)
                return CoverElement::from_poly(
                    ring, MultiPoly::variable(ring->nvars, ring->conductor(), i));
        throw std::invalid_argument("expression: unknown identifier '" + id + "'");
    };
    auto embed = [&](const mpq_class& q) { return CoverElement::from_constant(ring, q); };
    auto divide = [&](const CoverElement& a, const CoverElement& b) -> CoverElement {
        bool constant = !b.is_zero() && b.components()[0].is_constant();
        for (std::size_t i = 1; i < b.components().size() && constant; ++i)
            if (!b.components()[i].is_zero()) constant = false;
        if (!constant) throw std::invalid_argument("expression: division only by nonzero constants");
        CycNumber inv = b.components()[0].constant_value().inverse();
        std::vector<MultiPoly> comps = a.components();
        for (auto& c : comps) c = c.scaled(inv);
        return CoverElement(a.ring(), std::move(comps));
    };
    Parser<CoverElement, decltype(atom), decltype(embed), decltype(divide)> p(tokenize(src), atom,
                                                                              embed, divide);
    return p.parse();
}

} // namespace unitgroups

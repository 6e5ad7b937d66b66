#pragma once

// Text syntax for operator expressions, Toeplitz and Laurent elements, points of
// the spectrum, semigroup and group elements.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (['*' with surrounding space] factor)*
//   factor  := primary postfix*
//   postfix := '*' (no space before it: adjoint) | '^' int
//   primary := scalar | generator | '(' expr ')'
//
// Generators depend on the dialect: s, v<p>, v_<p>, w(m,a) for operator words;
// S for the Toeplitz span; i for Laurent polynomials (which also allow i^-n).

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "axb/affine_semigroup.hpp"
#include "axb/covariant_monomials.hpp"
#include "axb/exel_calculus.hpp"
#include "axb/nica_spectrum.hpp"

namespace axb {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at column " + std::to_string(pos + 1) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

enum class Dialect { words, toeplitz, laurent };

struct Expr {
    enum class Kind { scalar, gen, sum, product, power, adjoint };
    Kind kind = Kind::scalar;
    Rational value;                 // scalar
    Letter letter;                  // gen (words dialect)
    char symbol = 0;                // gen (toeplitz 'S', laurent 'i')
    std::vector<Expr> children;     // sum, product, power/adjoint base at [0]
    std::vector<char> negated;      // sum: sign of each child
    Int exponent = 0;               // power

    static Expr scalar(Rational r) {
        Expr e;
        e.value = r;
        return e;
    }
    static Expr gen(Letter l) {
        Expr e;
        e.kind = Kind::gen;
        e.letter = l;
        return e;
    }
    static Expr symbol_gen(char c) {
        Expr e;
        e.kind = Kind::gen;
        e.symbol = c;
        return e;
    }
    static Expr power(Expr base, Int n) {
        Expr e;
        e.kind = Kind::power;
        e.exponent = n;
        e.children.push_back(std::move(base));
        return e;
    }
    static Expr adjoint(Expr base) {
        Expr e;
        e.kind = Kind::adjoint;
        e.children.push_back(std::move(base));
        return e;
    }

    friend bool operator==(const Expr& x, const Expr& y) {
        return x.kind == y.kind && x.value == y.value && x.letter == y.letter && x.symbol == y.symbol &&
               x.children == y.children && x.negated == y.negated && x.exponent == y.exponent;
    }
};

inline std::string print(const Expr& e) {
    auto wrapped = [](const Expr& c, bool bare) { return bare ? print(c) : "(" + print(c) + ")"; };
    switch (e.kind) {
        case Expr::Kind::scalar: return e.value.to_string();
        case Expr::Kind::gen: return e.symbol ? std::string(1, e.symbol) : e.letter.to_string();
        case Expr::Kind::sum: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                bool bare = e.children[i].kind != Expr::Kind::sum;
                if (i == 0) out += e.negated[i] ? "-" : "";
                else out += e.negated[i] ? " - " : " + ";
                out += wrapped(e.children[i], bare);
            }
            return out;
        }
        case Expr::Kind::product: {
            std::string out;
            for (auto& c : e.children) {
                bool bare = c.kind != Expr::Kind::sum && c.kind != Expr::Kind::product;
                out += (out.empty() ? "" : " ") + wrapped(c, bare);
            }
            return out;
        }
        case Expr::Kind::power:
        case Expr::Kind::adjoint: {
            auto& b = e.children[0];
            bool bare = b.kind == Expr::Kind::gen || b.kind == Expr::Kind::power || b.kind == Expr::Kind::adjoint;
            std::string base = wrapped(b, bare);
            return e.kind == Expr::Kind::power ? base + "^" + std::to_string(e.exponent) : base + "*";
        }
    }
    return "?";
}

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    std::size_t pos() const { return i_; }
    bool done() {
        skip();
        return i_ >= s_.size();
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    /// The next character without skipping whitespace.
    char raw_peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    bool raw_match(char c) {
        if (raw_peek() != c) return false;
        ++i_;
        return true;
    }
    bool match(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!match(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

    Int integer(bool allow_sign = false) {
        skip();
        std::size_t start = i_;
        if (allow_sign && i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        auto digits = s_.substr(start, i_ - start);
        if (digits.empty() || digits == "-" || digits == "+") {
            i_ = start;
            fail("expected an integer");
        }
        try {
            return parse_int(digits);
        } catch (const std::exception& ex) {
            i_ = start;
            fail(ex.what());
        }
    }

    Rational rational(bool allow_sign = false) {
        skip();
        std::size_t start = i_;
        if (allow_sign && i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
        if (i_ < s_.size() && s_[i_] == '/') {
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        }
        try {
            return Rational::parse(s_.substr(start, i_ - start));
        } catch (const std::exception& ex) {
            i_ = start;
            fail(std::string("malformed rational: ") + ex.what());
        }
    }

    /// Everything up to (not including) the first of the stop characters.
    std::string until(std::string_view stops) {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && stops.find(s_[i_]) == std::string_view::npos) ++i_;
        auto out = std::string(s_.substr(start, i_ - start));
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        return out;
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

class ExprParser {
public:
    ExprParser(std::string_view text, Dialect d) : c_(text), d_(d) {}

    Expr parse() {
        auto e = sum();
        if (!c_.done()) c_.fail(std::string("unexpected '") + c_.peek() + "'");
        return e;
    }

private:
    static Expr collapse_sum(Expr e) {
        if (e.children.size() == 1 && !e.negated[0]) return std::move(e.children[0]);
        return e;
    }

    Expr sum() {
        Expr e;
        e.kind = Expr::Kind::sum;
        bool neg = c_.match('-');
        e.children.push_back(product());
        e.negated.push_back(neg);
        for (;;) {
            if (c_.match('+')) neg = false;
            else if (c_.match('-')) neg = true;
            else break;
            e.children.push_back(product());
            e.negated.push_back(neg);
        }
        return collapse_sum(std::move(e));
    }

    bool starts_factor() {
        char ch = c_.peek();
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '(') return true;
        switch (d_) {
            case Dialect::words: return ch == 's' || ch == 'v' || ch == 'w';
            case Dialect::toeplitz: return ch == 'S';
            case Dialect::laurent: return ch == 'i';
        }
        return false;
    }

    Expr product() {
        Expr e;
        e.kind = Expr::Kind::product;
        e.children.push_back(factor());
        for (;;) {
            if (c_.peek() == '*') {
                c_.match('*');  // spaced '*' is multiplication
                e.children.push_back(factor());
                continue;
            }
            if (c_.done() || !starts_factor()) break;
            e.children.push_back(factor());
        }
        if (e.children.size() == 1) return std::move(e.children[0]);
        return e;
    }

    Expr factor() {
        Expr e = primary();
        for (;;) {
            if (c_.raw_match('*')) {
                e = Expr::adjoint(std::move(e));
                continue;
            }
            if (c_.match('^')) {
                std::size_t at = c_.pos();
                Int n = c_.integer(d_ == Dialect::laurent);
                if (n < 0 && !(e.kind == Expr::Kind::gen && d_ == Dialect::laurent))
                    throw ParseError(at, "negative exponents are only allowed on i");
                e = Expr::power(std::move(e), n);
                continue;
            }
            break;
        }
        return e;
    }

    Expr primary() {
        char ch = c_.peek();
        if (ch == '(') {
            c_.match('(');
            Expr e = sum();
            c_.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return Expr::scalar(c_.rational());
        std::size_t at = c_.pos();
        switch (d_) {
            case Dialect::toeplitz:
                if (c_.match('S')) return Expr::symbol_gen('S');
                break;
            case Dialect::laurent:
                if (c_.match('i')) return Expr::symbol_gen('i');
                break;
            case Dialect::words:
                if (c_.match('s')) return Expr::gen(Letter::s());
                if (c_.match('v')) {
                    c_.raw_match('_');
                    std::size_t pat = c_.pos();
                    Int p = c_.integer();
                    if (!is_prime(p)) throw ParseError(pat, "unknown prime subscript " + std::to_string(p));
                    return Expr::gen(Letter::v(p));
                }
                if (c_.match('w')) {
                    c_.expect('(');
                    std::size_t mat = c_.pos();
                    Int m = c_.integer();
                    c_.expect(',');
                    Int a = c_.integer();
                    c_.expect(')');
                    if (m < 0 || a < 1) throw ParseError(mat, "w(m,a) needs m >= 0 and a >= 1");
                    return Expr::gen(Letter::w({m, a}));
                }
                break;
        }
        throw ParseError(at, ch ? std::string("unexpected '") + ch + "'" : "unexpected end of input");
    }

    Cursor c_;
    Dialect d_;
};

template <class R, class GenFn, class AdjFn>
R evaluate(const Expr& e, GenFn gen, AdjFn adj) {
    switch (e.kind) {
        case Expr::Kind::scalar: return R(e.value);
        case Expr::Kind::gen: return gen(e);
        case Expr::Kind::sum: {
            R out = R(Rational(0));
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                R c = evaluate<R>(e.children[i], gen, adj);
                out = e.negated[i] ? out - c : out + c;
            }
            return out;
        }
        case Expr::Kind::product: {
            R out = R(Rational(1));
            for (auto& c : e.children) out = out * evaluate<R>(c, gen, adj);
            return out;
        }
        case Expr::Kind::power: {
            R base = evaluate<R>(e.children[0], gen, adj);
            if (e.exponent < 0) base = adj(base);
            R out = R(Rational(1));
            for (Int k = 0; k < (e.exponent < 0 ? -e.exponent : e.exponent); ++k) out = out * base;
            return out;
        }
        case Expr::Kind::adjoint: return adj(evaluate<R>(e.children[0], gen, adj));
    }
    return R(Rational(0));
}

inline WordSum word_sum_adjoint(const WordSum& s) {
    WordSum out;
    for (auto& [c, w] : s.terms) out.add(c, adjoint(w));
    return out;
}

/// Scalars as WordSums.
struct ScalarWordSum : WordSum {
    ScalarWordSum(Rational c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) add(c, {});
    }
    ScalarWordSum(WordSum w) : WordSum(std::move(w)) {}  // NOLINT(google-explicit-constructor)
};

}  // namespace detail

inline Expr parse_expr(std::string_view text, Dialect d = Dialect::words) {
    return detail::ExprParser(text, d).parse();
}

/// An operator expression as a formal sum of generator words.
inline WordSum to_word_sum(const Expr& e) {
    using R = detail::ScalarWordSum;
    auto gen = [](const Expr& g) { return R(WordSum(Word{g.letter})); };
    auto adj = [](const R& x) { return R(detail::word_sum_adjoint(x)); };
    return detail::evaluate<R>(e, gen, adj);
}

/// The word of an expression built only from generators by products, powers and adjoints.
inline Word to_word(const Expr& e) {
    auto s = to_word_sum(e);
    if (s.terms.size() != 1 || s.terms[0].first != Rational(1))
        throw std::invalid_argument("expression is not a single generator word");
    return s.terms[0].second;
}

inline OperatorExpr parse_operator(std::string_view text) { return normalize(to_word_sum(parse_expr(text))); }

inline ToeplitzElement parse_toeplitz(std::string_view text) {
    auto gen = [](const Expr&) { return ToeplitzElement::S(); };
    auto adj = [](const ToeplitzElement& t) { return t.adjoint(); };
    return detail::evaluate<ToeplitzElement>(parse_expr(text, Dialect::toeplitz), gen, adj);
}

inline LaurentPoly parse_laurent(std::string_view text) {
    auto gen = [](const Expr&) { return LaurentPoly::monomial(1); };
    auto adj = [](const LaurentPoly& f) { return f.adjoint(); };
    return detail::evaluate<LaurentPoly>(parse_expr(text, Dialect::laurent), gen, adj);
}

// ---------------------------------------------------------------------------
// Points and elements
// ---------------------------------------------------------------------------

inline Supernatural parse_supernatural(std::string_view text) {
    try {
        return Supernatural::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(0, std::string("malformed supernatural: ") + ex.what());
    }
}

/// "A(m;N)" or "B(r;N)", with r an integer or a table "a1:r1,a2:r2,...".
inline OmegaPoint parse_point(std::string_view text) {
    detail::Cursor c(text);
    char tag = c.peek();
    if (tag != 'A' && tag != 'B') c.fail("a point starts with A( or B(");
    c.match(tag);
    c.expect('(');
    std::size_t rpos = c.pos();
    std::string first = c.until(";");
    c.expect(';');
    std::size_t npos = c.pos();
    std::string nt = c.until(")");
    c.expect(')');
    if (!c.done()) c.fail("trailing input after point");
    Supernatural n;
    try {
        n = Supernatural::parse(nt);
    } catch (const std::exception& ex) {
        throw ParseError(npos, std::string("malformed supernatural: ") + ex.what());
    }
    try {
        if (tag == 'A') return make_a(parse_int(first), n);
        if (first.find(':') == std::string::npos) return make_b(parse_int(first), n);
        std::vector<std::pair<Int, Int>> entries;
        std::size_t at = 0;
        while (at <= first.size()) {
            auto comma = first.find(',', at);
            auto item = first.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
            auto colon = item.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("table entry '" + item + "' lacks ':'");
            entries.emplace_back(parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1)));
            if (comma == std::string::npos) break;
            at = comma + 1;
        }
        return PointB{ProfiniteResidue::from_table(std::move(entries), n)};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ParseError(rpos, ex.what());
    }
}

/// "(m,a)" with integers m ≥ 0, a ≥ 1.
inline SemigroupElement parse_semigroup(std::string_view text) {
    detail::Cursor c(text);
    c.expect('(');
    std::size_t at = c.pos();
    Int m = c.integer(true);
    c.expect(',');
    Int a = c.integer(true);
    c.expect(')');
    if (!c.done()) c.fail("trailing input after element");
    if (m < 0 || a < 1) throw ParseError(at, "semigroup elements need m >= 0 and a >= 1");
    return {m, a};
}

/// "(r,a)" with rationals r and a > 0.
inline GroupElement parse_group(std::string_view text) {
    detail::Cursor c(text);
    c.expect('(');
    Rational r = c.rational(true);
    c.expect(',');
    std::size_t at = c.pos();
    Rational a = c.rational(true);
    c.expect(')');
    if (!c.done()) c.fail("trailing input after element");
    if (!a.is_positive()) throw ParseError(at, "group elements need a > 0");
    return {r, a};
}

/// "2,3,5"; every entry must be prime.
inline std::vector<Int> parse_primes(std::string_view text) {
    std::vector<Int> out;
    detail::Cursor c(text);
    if (c.done()) return out;
    do {
        std::size_t at = c.pos();
        Int p = c.integer();
        if (!is_prime(p)) throw ParseError(at, std::to_string(p) + " is not prime");
        out.push_back(p);
    } while (c.match(','));
    if (!c.done()) c.fail("expected ','");
    return out;
}

}  // namespace axb

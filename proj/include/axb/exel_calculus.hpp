#pragma once

// The two Exel systems over N^x: (C(T), α, L) on Laurent polynomials in the
// generator ι, and (T, β, K) on span{S^m S^{*n}} inside the Toeplitz algebra,
// together with the quotient map ρ(S) = ι and a matrix oracle for K_a = V_a^* · V_a.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axb/arithmetic.hpp"

namespace axb {

namespace detail {

template <class Key>
void add_term(std::map<Key, Rational>& terms, const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

inline std::string signed_join(std::string out, const Rational& c, const std::string& body) {
    bool negative = c.is_negative();
    Rational mag = negative ? -c : c;
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (body.empty()) return out + mag.to_string();
    if (mag != Rational(1)) out += mag.to_string() + " ";
    return out + body;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// Finitely supported Σ c_n ι^n with rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Rational c) { add(0, c); }  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(Int n, Rational c = 1) {
        LaurentPoly p;
        p.add(n, c);
        return p;
    }

    const std::map<Int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(Int n, const Rational& c) { detail::add_term(terms_, n, c); }

    LaurentPoly adjoint() const {
        LaurentPoly out;
        for (auto& [n, c] : terms_) out.add(-n, c);
        return out;
    }

    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) {
        for (auto& [n, c] : y.terms_) x.add(n, c);
        return x;
    }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) {
        for (auto& [n, c] : y.terms_) x.add(n, -c);
        return x;
    }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
        LaurentPoly out;
        for (auto& [n, c] : x.terms_)
            for (auto& [m, d] : y.terms_) out.add(checked_add(n, m), c * d);
        return out;
    }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [n, c] : terms_) out = detail::signed_join(out, c, n == 0 ? "" : n == 1 ? "i" : "i^" + std::to_string(n));
        return out;
    }

private:
    std::map<Int, Rational> terms_;
};

/// α_a(f)(z) = f(z^a).
inline LaurentPoly alpha(Int a, const LaurentPoly& f) {
    LaurentPoly out;
    for (auto& [n, c] : f.terms()) out.add(checked_mul(a, n), c);
    return out;
}

/// L_a(ι^n) = ι^{n/a} when a | n, else 0 (averaging over the a-th roots).
inline LaurentPoly transfer_L(Int a, const LaurentPoly& f) {
    LaurentPoly out;
    for (auto& [n, c] : f.terms())
        if (n % a == 0) out.add(n / a, c);
    return out;
}

// ---------------------------------------------------------------------------
// Toeplitz span
// ---------------------------------------------------------------------------

/// Finitely supported Σ c_{m,n} S^m S^{*n}.
class ToeplitzElement {
public:
    using Key = std::pair<Int, Int>;

    ToeplitzElement() = default;
    ToeplitzElement(Rational c) { add(0, 0, c); }  // NOLINT(google-explicit-constructor)

    static ToeplitzElement monomial(Int m, Int n, Rational c = 1) {
        if (m < 0 || n < 0) throw std::invalid_argument("negative Toeplitz exponent");
        ToeplitzElement t;
        t.add(m, n, c);
        return t;
    }
    static ToeplitzElement S() { return monomial(1, 0); }
    static ToeplitzElement S_star() { return monomial(0, 1); }
    /// S^j S^{*j}.
    static ToeplitzElement projection(Int j) { return monomial(j, j); }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(Int m, Int n, const Rational& c) { detail::add_term(terms_, Key{m, n}, c); }

    ToeplitzElement adjoint() const {
        ToeplitzElement out;
        for (auto& [k, c] : terms_) out.add(k.second, k.first, c);
        return out;
    }

    friend ToeplitzElement operator+(ToeplitzElement x, const ToeplitzElement& y) {
        for (auto& [k, c] : y.terms_) x.add(k.first, k.second, c);
        return x;
    }
    friend ToeplitzElement operator-(ToeplitzElement x, const ToeplitzElement& y) {
        for (auto& [k, c] : y.terms_) x.add(k.first, k.second, -c);
        return x;
    }
    /// (S^a S^{*b})(S^c S^{*d}) = S^{a+c-b} S^{*d} if b ≤ c, else S^a S^{*(b-c+d)}.
    friend ToeplitzElement operator*(const ToeplitzElement& x, const ToeplitzElement& y) {
        ToeplitzElement out;
        for (auto& [k1, c1] : x.terms_)
            for (auto& [k2, c2] : y.terms_) {
                auto [a, b] = k1;
                auto [c, d] = k2;
                if (b <= c) out.add(a + c - b, d, c1 * c2);
                else out.add(a, b - c + d, c1 * c2);
            }
        return out;
    }
    friend bool operator==(const ToeplitzElement&, const ToeplitzElement&) = default;

    Int degree() const {
        Int d = 0;
        for (auto& [k, c] : terms_) d = std::max({d, k.first, k.second});
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [k, c] : terms_) {
            std::string body;
            auto power = [](const char* g, Int e) { return e == 1 ? std::string(g) : g + ("^" + std::to_string(e)); };
            if (k.first > 0) body += power("S", k.first);
            if (k.second > 0) body += (body.empty() ? "" : " ") + power("S*", k.second);
            out = detail::signed_join(out, c, body);
        }
        return out;
    }

private:
    std::map<Key, Rational> terms_;
};

/// β_a(S^m S^{*n}) = S^{am} S^{*an}.
inline ToeplitzElement beta(Int a, const ToeplitzElement& t) {
    ToeplitzElement out;
    for (auto& [k, c] : t.terms()) out.add(checked_mul(a, k.first), checked_mul(a, k.second), c);
    return out;
}

/// K_a(S^m S^{*n}) for m ≥ n, read as S^{m-n} · S^n S^{*n}: zero unless a | (m - n),
/// otherwise S^{(m-n)/a} S^i S^{*i} with i = ⌈n/a⌉. The case m < n is the adjoint.
inline ToeplitzElement transfer_K(Int a, const ToeplitzElement& t) {
    ToeplitzElement out;
    for (auto& [k, c] : t.terms()) {
        auto [m, n] = k;
        bool flipped = m < n;
        if (flipped) std::swap(m, n);
        if ((m - n) % a != 0) continue;
        Int i = ceil_div(n, a);
        Int top = (m - n) / a + i;
        if (flipped) out.add(i, top, c);
        else out.add(top, i, c);
    }
    return out;
}

/// ρ(S^m S^{*n}) = ι^{m-n}.
inline LaurentPoly rho(const ToeplitzElement& t) {
    LaurentPoly out;
    for (auto& [k, c] : t.terms()) out.add(k.first - k.second, c);
    return out;
}

// ---------------------------------------------------------------------------
// Matrix oracle on l^2({0, ..., W-1})
// ---------------------------------------------------------------------------

/// S, S^*, V_a, V_a^* acting on the basis of l^2(N) by S e_n = e_{n+1}, V_a e_n = e_{an}.
struct ShiftLetter {
    enum class Kind { S, V };
    Kind kind = Kind::S;
    Int a = 1;
    bool adjoint = false;

    static ShiftLetter s(bool adj = false) { return {Kind::S, 1, adj}; }
    static ShiftLetter v(Int a, bool adj = false) { return {Kind::V, a, adj}; }

    std::optional<Int> apply(Int n) const {
        if (kind == Kind::S) {
            if (!adjoint) return n + 1;
            if (n == 0) return std::nullopt;
            return n - 1;
        }
        if (!adjoint) return checked_mul(a, n);
        if (n % a != 0) return std::nullopt;
        return n / a;
    }
};

using ShiftWord = std::vector<ShiftLetter>;
using ShiftExpr = std::vector<std::pair<Rational, ShiftWord>>;

/// Each S^m S^{*n} as the word S...S S*...S*.
inline ShiftExpr shift_expr(const ToeplitzElement& t) {
    ShiftExpr out;
    for (auto& [k, c] : t.terms()) {
        ShiftWord w(static_cast<std::size_t>(k.first), ShiftLetter::s());
        w.insert(w.end(), static_cast<std::size_t>(k.second), ShiftLetter::s(true));
        out.emplace_back(c, std::move(w));
    }
    return out;
}

/// V_a^* T V_a as a shift expression.
inline ShiftExpr conjugated_by_v(Int a, const ToeplitzElement& t) {
    ShiftExpr out;
    for (auto& [c, w] : shift_expr(t)) {
        ShiftWord full{ShiftLetter::v(a, true)};
        full.insert(full.end(), w.begin(), w.end());
        full.push_back(ShiftLetter::v(a));
        out.emplace_back(c, std::move(full));
    }
    return out;
}

struct OracleMatrix {
    Int size = 0;
    std::vector<std::vector<Rational>> entries;  // entries[row][col]
    std::vector<char> trusted;                   // per column

    std::size_t trusted_columns() const {
        return static_cast<std::size_t>(std::count(trusted.begin(), trusted.end(), 1));
    }
};

/// Matrix of the operator on the window, column by column. A column is trusted only
/// if every intermediate index of every word stays below the window size.
inline OracleMatrix matrix_oracle(const ShiftExpr& e, Int window) {
    if (window < 1) throw std::invalid_argument("oracle window must be positive");
    OracleMatrix out;
    out.size = window;
    out.entries.assign(static_cast<std::size_t>(window), std::vector<Rational>(static_cast<std::size_t>(window)));
    out.trusted.assign(static_cast<std::size_t>(window), 1);
    for (Int col = 0; col < window; ++col)
        for (auto& [c, w] : e) {
            std::optional<Int> cur = col;
            for (auto it = w.rbegin(); it != w.rend() && cur; ++it) {
                cur = it->apply(*cur);
                if (cur && *cur >= window) out.trusted[col] = 0;
            }
            if (cur && *cur < window) out.entries[*cur][col] += c;
        }
    return out;
}

inline OracleMatrix matrix_oracle(const ToeplitzElement& t, Int window) { return matrix_oracle(shift_expr(t), window); }

/// Compares two oracle matrices on the columns trusted in both; returns the number
/// of compared columns, or nullopt on a mismatch.
inline std::optional<std::size_t> agrees_on_trusted(const OracleMatrix& x, const OracleMatrix& y) {
    if (x.size != y.size) throw std::invalid_argument("oracle size mismatch");
    std::size_t compared = 0;
    for (Int col = 0; col < x.size; ++col) {
        if (!x.trusted[col] || !y.trusted[col]) continue;
        ++compared;
        for (Int row = 0; row < x.size; ++row)
            if (x.entries[row][col] != y.entries[row][col]) return std::nullopt;
    }
    return compared;
}

}  // namespace axb

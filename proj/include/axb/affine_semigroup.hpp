#pragma once

// The group Q ⋊ Q*_+ with law (r,a)(q,b) = (r + aq, ab), its positive cone
// N ⋊ N^x, the induced order x ≤ y ⇔ x^{-1}y ∈ P, and least upper bounds.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "axb/arithmetic.hpp"

namespace axb {

struct SemigroupElement {
    Int m = 0;
    Int a = 1;

    SemigroupElement() = default;
    SemigroupElement(Int m_, Int a_) : m(m_), a(a_) {
        if (m < 0 || a < 1) throw std::invalid_argument("semigroup element needs m >= 0 and a >= 1");
    }

    bool is_identity() const { return m == 0 && a == 1; }
    friend auto operator<=>(const SemigroupElement&, const SemigroupElement&) = default;
    std::string to_string() const { return "(" + std::to_string(m) + "," + std::to_string(a) + ")"; }
};

inline SemigroupElement operator*(const SemigroupElement& x, const SemigroupElement& y) {
    return {checked_add(x.m, checked_mul(x.a, y.m)), checked_mul(x.a, y.a)};
}

inline std::ostream& operator<<(std::ostream& os, const SemigroupElement& x) { return os << x.to_string(); }

struct GroupElement {
    Rational r;
    Rational a{1};

    GroupElement() = default;
    GroupElement(Rational r_, Rational a_) : r(r_), a(a_) {
        if (!a.is_positive()) throw std::invalid_argument("group element needs a > 0");
    }
    GroupElement(const SemigroupElement& x) : r(x.m), a(x.a) {}  // NOLINT(google-explicit-constructor)

    static GroupElement identity() { return {}; }

    GroupElement inverse() const { return {-r / a, a.reciprocal()}; }

    /// The element as a member of P, if it lies there.
    std::optional<SemigroupElement> in_semigroup() const {
        if (!r.is_integer() || !a.is_integer() || r.is_negative()) return std::nullopt;
        return SemigroupElement(r.num(), a.num());
    }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    std::string to_string() const { return "(" + r.to_string() + "," + a.to_string() + ")"; }
};

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return {g.r + g.a * h.r, g.a * h.a};
}

inline std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << g.to_string(); }

inline bool leq(const GroupElement& x, const GroupElement& y) {
    return (x.inverse() * y).in_semigroup().has_value();
}

/// Integer form of leq on P: (m,a) ≤ (n,b) iff a | b and a | (n - m) with n ≥ m.
inline bool leq(const SemigroupElement& x, const SemigroupElement& y) {
    return y.a % x.a == 0 && y.m >= x.m && (y.m - x.m) % x.a == 0;
}

/// Least upper bound in P; nullopt stands for x ∨ y = ∞.
/// A common upper bound (l, c) needs lcm(a,b) | c and l ≡ m (a), l ≡ n (b), l ≥ max(m, n);
/// the least one takes c = lcm(a,b) and the smallest such l.
inline std::optional<SemigroupElement> lub(const SemigroupElement& x, const SemigroupElement& y) {
    auto sol = crt(x.m, x.a, y.m, y.a);
    if (!sol) return std::nullopt;
    auto [r, c] = *sol;
    Int lower = std::max(x.m, y.m);
    Int l = r + ceil_div(lower - r, c) * c;
    return SemigroupElement(l, c);
}

}  // namespace axb

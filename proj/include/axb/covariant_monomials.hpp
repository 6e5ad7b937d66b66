#pragma once

// Nica-covariant monomials W_x W_y^* and their rational combinations, generator
// words in s, v_p and adjoints, and exact basis-action backends: the Toeplitz
// representation on l^2(N ⋊ N^x) and the representation on l^2(Z × N^x) given
// by S e(m,a) = e(m+1,a), V_p e(m,a) = e(pm,pa).

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "axb/affine_semigroup.hpp"
#include "axb/arithmetic.hpp"

namespace axb {

// ---------------------------------------------------------------------------
// Monomials and operator expressions
// ---------------------------------------------------------------------------

/// W_left W_right^*. The zero monomial is represented by an empty optional.
struct Monomial {
    SemigroupElement left;
    SemigroupElement right;

    static Monomial identity() { return {}; }
    Monomial adjoint() const { return {right, left}; }
    bool is_projection() const { return left == right; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    std::string to_string() const {
        if (left.is_identity() && right.is_identity()) return "1";
        std::string out;
        if (!left.is_identity()) out += "w" + left.to_string();
        if (!right.is_identity()) out += (out.empty() ? "" : " ") + std::string("w") + right.to_string() + "*";
        return out;
    }
};

/// x^{-1} z for x ≤ z in P.
inline SemigroupElement left_quotient(const SemigroupElement& x, const SemigroupElement& z) {
    return {(z.m - x.m) / x.a, z.a / x.a};
}

/// (W_x W_y^*)(W_z W_t^*) = W_{x y'} W_{t z'}^* with y' = y^{-1}(y∨z), z' = z^{-1}(y∨z);
/// zero when y ∨ z = ∞.
inline std::optional<Monomial> multiply(const Monomial& p, const Monomial& q) {
    auto l = lub(p.right, q.left);
    if (!l) return std::nullopt;
    return Monomial{p.left * left_quotient(p.right, *l), q.right * left_quotient(q.left, *l)};
}

class OperatorExpr {
public:
    OperatorExpr() = default;
    explicit OperatorExpr(const Monomial& m, Rational c = 1) { add(m, c); }

    static OperatorExpr identity() { return OperatorExpr(Monomial::identity()); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    OperatorExpr adjoint() const {
        OperatorExpr out;
        for (auto& [m, c] : terms_) out.add(m.adjoint(), c);
        return out;
    }

    friend OperatorExpr operator+(OperatorExpr x, const OperatorExpr& y) {
        for (auto& [m, c] : y.terms_) x.add(m, c);
        return x;
    }
    friend OperatorExpr operator-(OperatorExpr x, const OperatorExpr& y) {
        for (auto& [m, c] : y.terms_) x.add(m, -c);
        return x;
    }
    friend OperatorExpr operator*(const Rational& k, const OperatorExpr& x) {
        OperatorExpr out;
        for (auto& [m, c] : x.terms_) out.add(m, k * c);
        return out;
    }
    friend OperatorExpr operator*(const OperatorExpr& x, const OperatorExpr& y) {
        OperatorExpr out;
        for (auto& [m1, c1] : x.terms_)
            for (auto& [m2, c2] : y.terms_)
                if (auto m = multiply(m1, m2)) out.add(*m, c1 * c2);
        return out;
    }
    friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : terms_) {
            bool negative = c.is_negative();
            Rational mag = negative ? -c : c;
            if (out.empty()) out += negative ? "-" : "";
            else out += negative ? " - " : " + ";
            bool unit = m.left.is_identity() && m.right.is_identity();
            if (mag != Rational(1) || unit) out += mag.to_string() + (unit ? "" : " ");
            if (!unit) out += m.to_string();
        }
        return out;
    }

private:
    std::map<Monomial, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Generator words
// ---------------------------------------------------------------------------

struct Letter {
    enum class Kind { s, v, w };
    Kind kind = Kind::s;
    Int prime = 0;          // for v
    SemigroupElement elem;  // for w
    bool adjoint = false;

    static Letter s(bool adj = false) { return {Kind::s, 0, {}, adj}; }
    static Letter v(Int p, bool adj = false) {
        if (!is_prime(p)) throw std::invalid_argument("v_" + std::to_string(p) + ": subscript is not prime");
        return {Kind::v, p, {}, adj};
    }
    static Letter w(SemigroupElement x, bool adj = false) { return {Kind::w, 0, x, adj}; }

    Letter dagger() const {
        Letter l = *this;
        l.adjoint = !adjoint;
        return l;
    }

    /// The semigroup element this letter (or its adjoint) implements.
    SemigroupElement element() const {
        switch (kind) {
            case Kind::s: return {1, 1};
            case Kind::v: return {0, prime};
            case Kind::w: return elem;
        }
        return {};
    }

    friend auto operator<=>(const Letter&, const Letter&) = default;

    std::string to_string() const {
        std::string out;
        switch (kind) {
            case Kind::s: out = "s"; break;
            case Kind::v: out = "v" + std::to_string(prime); break;
            case Kind::w: out = "w(" + std::to_string(elem.m) + "," + std::to_string(elem.a) + ")"; break;
        }
        return adjoint ? out + "*" : out;
    }
};

using Word = std::vector<Letter>;

inline Word power(const Letter& l, Int n) { return Word(static_cast<std::size_t>(n), l); }

inline Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline Word adjoint(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->dagger());
    return out;
}

/// s^m ∏_p v_p^{e_p(a)}, as letters in s and v_p.
inline Word element_word(const SemigroupElement& x) {
    Word out = power(Letter::s(), x.m);
    for (auto [p, e] : factorize(x.a))
        for (unsigned i = 0; i < e; ++i) out.push_back(Letter::v(p));
    return out;
}

/// Replaces every w-letter by its expansion in s and v_p.
inline Word expand(const Word& w) {
    Word out;
    for (auto& l : w) {
        if (l.kind != Letter::Kind::w) {
            out.push_back(l);
            continue;
        }
        Word e = element_word(l.elem);
        if (l.adjoint) e = adjoint(e);
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

inline std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (auto& l : w) out += (out.empty() ? "" : " ") + l.to_string();
    return out;
}

inline Monomial letter_monomial(const Letter& l) {
    Monomial m{l.element(), {}};
    return l.adjoint ? m.adjoint() : m;
}

/// The Nica normal form of a word.
inline OperatorExpr normalize(const Word& w) {
    OperatorExpr out = OperatorExpr::identity();
    for (auto& l : w) {
        out = out * OperatorExpr(letter_monomial(l));
        if (out.is_zero()) break;
    }
    return out;
}

struct WordSum {
    std::vector<std::pair<Rational, Word>> terms;

    WordSum() = default;
    WordSum(Word w) { terms.emplace_back(1, std::move(w)); }  // NOLINT(google-explicit-constructor)

    static WordSum one() { return WordSum(Word{}); }
    static WordSum zero() { return {}; }

    WordSum& add(const Rational& c, Word w) {
        terms.emplace_back(c, std::move(w));
        return *this;
    }
    friend WordSum operator+(WordSum x, const WordSum& y) {
        x.terms.insert(x.terms.end(), y.terms.begin(), y.terms.end());
        return x;
    }
    friend WordSum operator-(WordSum x, const WordSum& y) {
        for (auto& [c, w] : y.terms) x.terms.emplace_back(-c, w);
        return x;
    }
    /// Concatenation product, distributed over both sums.
    friend WordSum operator*(const WordSum& x, const WordSum& y) {
        WordSum out;
        for (auto& [c1, w1] : x.terms)
            for (auto& [c2, w2] : y.terms) out.terms.emplace_back(c1 * c2, concat({w1, w2}));
        return out;
    }
};

inline OperatorExpr normalize(const WordSum& s) {
    OperatorExpr out;
    for (auto& [c, w] : s.terms) out = out + c * normalize(w);
    return out;
}

// ---------------------------------------------------------------------------
// Backends
// ---------------------------------------------------------------------------

/// A basis index (m, a); m ≥ 0 on the Toeplitz backend, m ∈ Z on the other.
struct Index {
    Int m = 0;
    Int a = 1;
    friend auto operator<=>(const Index&, const Index&) = default;
    std::string to_string() const { return "e(" + std::to_string(m) + "," + std::to_string(a) + ")"; }
};

using Vector = std::map<Index, Rational>;

enum class Backend { toeplitz, bilateral };

inline std::string to_string(Backend b) { return b == Backend::toeplitz ? "toeplitz" : "bilateral"; }

/// W_x e(n,c) = e(x·(n,c)) on both backends.
inline Index forward(const SemigroupElement& x, const Index& i) {
    return {checked_add(x.m, checked_mul(x.a, i.m)), checked_mul(x.a, i.a)};
}

/// W_x^* as the inverse partial map; the Toeplitz backend also needs the preimage in N.
inline std::optional<Index> backward(Backend b, const SemigroupElement& x, const Index& i) {
    if (i.a % x.a != 0) return std::nullopt;
    Int shifted = i.m - x.m;
    if (floor_mod(shifted, x.a) != 0) return std::nullopt;
    Index pre{floor_div(shifted, x.a), i.a / x.a};
    if (b == Backend::toeplitz && pre.m < 0) return std::nullopt;
    return pre;
}

inline std::optional<Index> apply(Backend b, const Letter& l, const Index& i) {
    if (l.adjoint) return backward(b, l.element(), i);
    return forward(l.element(), i);
}

inline std::optional<Index> apply(Backend b, const Monomial& m, const Index& i) {
    auto mid = backward(b, m.right, i);
    if (!mid) return std::nullopt;
    return forward(m.left, *mid);
}

/// Applies a word letter by letter (rightmost first), expanding w-letters into s and v_p.
inline std::optional<Index> apply(Backend b, const Word& w, const Index& i) {
    std::optional<Index> cur = i;
    for (auto it = w.rbegin(); it != w.rend() && cur; ++it) {
        if (it->kind != Letter::Kind::w) {
            cur = apply(b, *it, *cur);
            continue;
        }
        Word letters = expand({*it});
        for (auto jt = letters.rbegin(); jt != letters.rend() && cur; ++jt) cur = apply(b, *jt, *cur);
    }
    return cur;
}

inline void accumulate(Vector& v, const Index& i, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline Vector apply(Backend b, const OperatorExpr& e, const Index& i) {
    Vector out;
    for (auto& [m, c] : e.terms())
        if (auto j = apply(b, m, i)) accumulate(out, *j, c);
    return out;
}

inline Vector apply(Backend b, const WordSum& s, const Index& i) {
    Vector out;
    for (auto& [c, w] : s.terms)
        if (auto j = apply(b, w, i)) accumulate(out, *j, c);
    return out;
}

template <class Op>
Vector apply(Backend b, const Op& op, const Vector& v) {
    Vector out;
    for (auto& [i, c] : v)
        for (auto& [j, d] : apply(b, op, i)) accumulate(out, j, c * d);
    return out;
}

/// Basis indices of a window: m in [0, max_m] (Toeplitz) or ordered by |m| with
/// |m| <= max_m (the Z-indexed backend); a in [1, max_a] ascending.
inline std::vector<Index> window_indices(Backend b, Int max_m, Int max_a) {
    std::vector<Index> out;
    for (Int a = 1; a <= max_a; ++a) {
        if (b == Backend::toeplitz) {
            for (Int m = 0; m <= max_m; ++m) out.push_back({m, a});
        } else {
            out.push_back({0, a});
            for (Int m = 1; m <= max_m; ++m) {
                out.push_back({m, a});
                out.push_back({-m, a});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

enum class Relation { isometry, T1, T2, T3, T4, T5, Q5, Q6 };

inline std::string to_string(Relation r) {
    switch (r) {
        case Relation::isometry: return "isometry";
        case Relation::T1: return "T1";
        case Relation::T2: return "T2";
        case Relation::T3: return "T3";
        case Relation::T4: return "T4";
        case Relation::T5: return "T5";
        case Relation::Q5: return "Q5";
        case Relation::Q6: return "Q6";
    }
    return "?";
}

inline std::optional<Relation> relation_from_string(const std::string& s) {
    for (auto r : {Relation::isometry, Relation::T1, Relation::T2, Relation::T3, Relation::T4, Relation::T5,
                   Relation::Q5, Relation::Q6})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

struct RelationInstance {
    Relation relation;
    std::string description;
    WordSum lhs;
    WordSum rhs;
};

/// 1 - Σ_{k<p} s^k v_p v_p^* s^{*k}.
inline WordSum prime_gap(Int p) {
    WordSum out = WordSum::one();
    for (Int k = 0; k < p; ++k)
        out.add(-1, concat({power(Letter::s(), k), {Letter::v(p), Letter::v(p, true)}, power(Letter::s(true), k)}));
    return out;
}

/// Concrete instances of a relation for the given primes. T1 is also checked in
/// its iterated form v_p s^k = s^{pk} v_p for 1 ≤ k ≤ max_exp.
inline std::vector<RelationInstance> relation_instances(Relation r, std::span<const Int> primes, Int max_exp) {
    std::vector<RelationInstance> out;
    auto s = Letter::s();
    auto ss = Letter::s(true);
    switch (r) {
        case Relation::isometry:
            out.push_back({r, "s* s = 1", Word{ss, s}, WordSum::one()});
            for (Int p : primes)
                out.push_back({r, "v" + std::to_string(p) + "* v" + std::to_string(p) + " = 1",
                               Word{Letter::v(p, true), Letter::v(p)}, WordSum::one()});
            break;
        case Relation::T1:
            for (Int p : primes)
                for (Int k = 1; k <= max_exp; ++k)
                    out.push_back({r, "v" + std::to_string(p) + " s^" + std::to_string(k),
                                   concat({{Letter::v(p)}, power(s, k)}),
                                   concat({power(s, p * k), {Letter::v(p)}})});
            break;
        case Relation::T2:
            for (Int p : primes)
                for (Int q : primes)
                    if (p < q)
                        out.push_back({r, "v" + std::to_string(p) + " v" + std::to_string(q),
                                       Word{Letter::v(p), Letter::v(q)}, Word{Letter::v(q), Letter::v(p)}});
            break;
        case Relation::T3:
            for (Int p : primes)
                for (Int q : primes)
                    if (p != q)
                        out.push_back({r, "v" + std::to_string(p) + "* v" + std::to_string(q),
                                       Word{Letter::v(p, true), Letter::v(q)}, Word{Letter::v(q), Letter::v(p, true)}});
            break;
        case Relation::T4:
            for (Int p : primes)
                out.push_back({r, "s* v" + std::to_string(p), Word{ss, Letter::v(p)},
                               concat({power(s, p - 1), {Letter::v(p), ss}})});
            break;
        case Relation::T5:
            for (Int p : primes)
                for (Int k = 1; k < p; ++k)
                    out.push_back({r, "v" + std::to_string(p) + "* s^" + std::to_string(k) + " v" + std::to_string(p),
                                   concat({{Letter::v(p, true)}, power(s, k), {Letter::v(p)}}), WordSum::zero()});
            break;
        case Relation::Q5:
            for (Int p : primes)
                out.push_back({r, "sum_k s^k v" + std::to_string(p) + " v" + std::to_string(p) + "* s*^k",
                               WordSum::one() - prime_gap(p), WordSum::one()});
            break;
        case Relation::Q6:
            out.push_back({r, "s s* = 1", Word{s, ss}, WordSum::one()});
            break;
    }
    return out;
}

struct RelationFailure {
    Relation relation;
    std::string instance;
    Index witness;
};

struct RelationReport {
    Backend backend = Backend::toeplitz;
    Int max_m = 0, max_a = 0;
    std::size_t indices = 0;
    std::size_t instances = 0;
    std::map<Relation, bool> passed;
    std::vector<RelationFailure> failures;  // first failing index per relation instance

    bool all_passed() const { return failures.empty(); }
    std::optional<RelationFailure> first_failure(Relation r) const {
        for (auto& f : failures)
            if (f.relation == r) return f;
        return std::nullopt;
    }
};

inline RelationReport verify_relations(Backend b, std::span<const Relation> relations, std::span<const Int> primes,
                                       Int max_exp, Int max_m, Int max_a) {
    RelationReport rep;
    rep.backend = b;
    rep.max_m = max_m;
    rep.max_a = max_a;
    auto indices = window_indices(b, max_m, max_a);
    rep.indices = indices.size();
    for (Relation r : relations) {
        rep.passed[r] = true;
        for (auto& inst : relation_instances(r, primes, max_exp)) {
            ++rep.instances;
            for (auto& i : indices)
                if (apply(b, inst.lhs, i) != apply(b, inst.rhs, i)) {
                    rep.passed[r] = false;
                    rep.failures.push_back({r, inst.description, i});
                    break;
                }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Faithfulness witnesses
// ---------------------------------------------------------------------------

/// Searches the window (origin first) for a basis vector fixed by
/// (1 - ss^*)^[with_shift_defect] ∏_{p∈F} ∏_{k<p} (1 - s^k v_p v_p^* s^{*k}),
/// which certifies that the product is nonzero.
inline std::optional<Index> faithfulness_witness(Backend b, std::span<const Int> primes, bool with_shift_defect,
                                                 Int max_m = 20, Int max_a = 12) {
    std::vector<WordSum> factors;
    if (with_shift_defect) factors.push_back(WordSum::one() - WordSum(Word{Letter::s(), Letter::s(true)}));
    for (Int p : primes)
        for (Int k = 0; k < p; ++k) {
            Word proj = concat({power(Letter::s(), k), {Letter::v(p), Letter::v(p, true)}, power(Letter::s(true), k)});
            factors.push_back(WordSum::one() - WordSum(proj));
        }
    for (auto& i : window_indices(b, max_m, max_a)) {
        Vector v{{i, Rational(1)}};
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) v = apply(b, *it, v);
        if (v == Vector{{i, Rational(1)}}) return i;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ideal decomposition of 1 - Σ_{k<a} s^k v_a (s^k v_a)^*
// ---------------------------------------------------------------------------

/// One summand c g_p c^* with g_p = 1 - Σ_{l<p} s^l v_p (s^l v_p)^*.
struct IdealTerm {
    Word conjugator;
    Int prime;
};

/// v_a as a word in the v_p.
inline Word v_word(Int a) { return element_word({0, a}); }

/// 1 - Σ_{k<a} s^k v_a (s^k v_a)^*.
inline WordSum range_defect(Int a) {
    WordSum out = WordSum::one();
    for (Int k = 0; k < a; ++k) {
        Word sv = concat({power(Letter::s(), k), v_word(a)});
        out.add(-1, concat({sv, adjoint(sv)}));
    }
    return out;
}

/// Writes 1 - Σ_{k<a} s^k v_a (s^k v_a)^* as Σ_i c_i g_{p_i} c_i^* by peeling off the
/// smallest prime p of a = bp: the terms s^j v_b g_p (s^j v_b)^* for j < b, followed by
/// the decomposition for b. For a = 1 the left side is 0 and the list is empty.
inline std::vector<IdealTerm> lemma65_decompose(Int a) {
    if (a < 1) throw std::invalid_argument("decomposition needs a positive integer");
    std::vector<IdealTerm> out;
    while (a > 1) {
        Int p = factorize(a).front().first;
        Int b = a / p;
        if (b == 1) {
            out.push_back({{}, p});
            break;
        }
        for (Int j = 0; j < b; ++j) out.push_back({concat({power(Letter::s(), j), v_word(b)}), p});
        a = b;
    }
    return out;
}

inline WordSum expand_terms(const std::vector<IdealTerm>& terms) {
    WordSum out;
    for (auto& t : terms) out = out + WordSum(t.conjugator) * prime_gap(t.prime) * WordSum(adjoint(t.conjugator));
    return out;
}

struct DecompositionCheck {
    bool symbolic = false;
    bool backend = false;
    std::optional<Index> witness;
};

inline DecompositionCheck verify_decomposition(Int a, const std::vector<IdealTerm>& terms, Int max_m = 60,
                                               Int max_a = 36) {
    DecompositionCheck out;
    WordSum lhs = range_defect(a);
    WordSum rhs = expand_terms(terms);
    out.symbolic = normalize(lhs) == normalize(rhs);
    out.backend = true;
    for (auto& i : window_indices(Backend::toeplitz, max_m, max_a))
        if (apply(Backend::toeplitz, lhs, i) != apply(Backend::toeplitz, rhs, i)) {
            out.backend = false;
            out.witness = i;
            break;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Nica covariance on a backend
// ---------------------------------------------------------------------------

/// W_x W_x^* W_y W_y^* against W_{x∨y} W_{x∨y}^* (or 0) on the window.
inline bool nica_product_check(Backend b, const SemigroupElement& x, const SemigroupElement& y, Int max_m,
                               Int max_a) {
    Word wx = element_word(x), wy = element_word(y);
    Word lhs = concat({wx, adjoint(wx), wy, adjoint(wy)});
    auto l = lub(x, y);
    WordSum rhs;
    if (l) {
        Word wl = element_word(*l);
        rhs = WordSum(concat({wl, adjoint(wl)}));
    }
    for (auto& i : window_indices(b, max_m, max_a))
        if (apply(b, WordSum(lhs), i) != apply(b, rhs, i)) return false;
    return true;
}

}  // namespace axb

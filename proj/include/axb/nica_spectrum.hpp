#pragma once

// Points of the Nica spectrum of N ⋊ N^x, their membership tests, the
// partial action of Q ⋊ Q*_+, boundary classification, basic open sets and
// convergence against finite generator lists.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "axb/affine_semigroup.hpp"
#include "axb/arithmetic.hpp"

namespace axb {

/// A(m, N) = {(k,a) : a | N and (m - k)/a ∈ N}.
struct PointA {
    Int m = 0;
    Supernatural N;
};

/// B(r, N) = {(k,a) : a | N and k ≡ r(a)}; N is the modulus of r.
struct PointB {
    ProfiniteResidue r;
    const Supernatural& N() const { return r.modulus(); }
};

using OmegaPoint = std::variant<PointA, PointB>;

inline OmegaPoint make_a(Int m, Supernatural n) {
    if (m < 0) throw std::invalid_argument("A-point needs m >= 0");
    return PointA{m, std::move(n)};
}

inline OmegaPoint make_b(Int r, Supernatural n) { return PointB{ProfiniteResidue::from_integer(r, std::move(n))}; }

inline const Supernatural& modulus(const OmegaPoint& w) {
    if (auto* a = std::get_if<PointA>(&w)) return a->N;
    return std::get<PointB>(w).N();
}

inline std::string to_string(const OmegaPoint& w) {
    if (auto* a = std::get_if<PointA>(&w)) return "A(" + std::to_string(a->m) + ";" + a->N.to_string() + ")";
    auto& b = std::get<PointB>(w);
    return "B(" + b.r.to_string() + ";" + b.N().to_string() + ")";
}

inline bool contains(const OmegaPoint& w, const SemigroupElement& x) {
    if (!modulus(w).divisible_by(x.a)) return false;
    if (auto* a = std::get_if<PointA>(&w)) return x.m <= a->m && (a->m - x.m) % x.a == 0;
    return floor_mod(x.m, x.a) == std::get<PointB>(w).r.residue(x.a);
}

// ---------------------------------------------------------------------------
// Windows and equality
// ---------------------------------------------------------------------------

struct Window {
    Int max_k = 200;
    Int max_a = 60;

    std::string to_string() const {
        return "k<=" + std::to_string(max_k) + ",a<=" + std::to_string(max_a);
    }
};

/// Structural equality. Integer embeddings and finite moduli compare exactly;
/// table residues over infinite moduli compare on divisors up to divisor_bound.
inline bool same_point(const OmegaPoint& x, const OmegaPoint& y, Int divisor_bound = 360) {
    if (x.index() != y.index()) return false;
    if (auto* a = std::get_if<PointA>(&x)) {
        auto& b = std::get<PointA>(y);
        return a->m == b.m && a->N == b.N;
    }
    auto& rx = std::get<PointB>(x).r;
    auto& ry = std::get<PointB>(y).r;
    if (rx.modulus() != ry.modulus()) return false;
    auto ix = rx.integer_representative(), iy = ry.integer_representative();
    if (ix && iy) return *ix == *iy;
    // Table sources only determine some residues; compare wherever both are known.
    std::size_t compared = 0;
    for (Int d : rx.modulus().divisors_up_to(divisor_bound)) {
        auto u = rx.try_residue(d), v = ry.try_residue(d);
        if (!u || !v) continue;
        if (*u != *v) return false;
        ++compared;
    }
    return compared > 0;
}

/// Membership grid of a point on a window, indexed [a][k].
using WindowSet = std::vector<std::vector<char>>;

inline WindowSet window_membership(const OmegaPoint& w, const Window& win) {
    WindowSet out(static_cast<std::size_t>(win.max_a + 1), std::vector<char>(static_cast<std::size_t>(win.max_k + 1), 0));
    const auto& n = modulus(w);
    for (Int a = 1; a <= win.max_a; ++a) {
        if (!n.divisible_by(a)) continue;
        for (Int k = 0; k <= win.max_k; ++k) out[a][k] = contains(w, {k, a}) ? 1 : 0;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Boundary classification
// ---------------------------------------------------------------------------

enum class BoundaryClass { interior, additive, multiplicative, minimal };

inline std::string to_string(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::interior: return "interior";
        case BoundaryClass::additive: return "additive";
        case BoundaryClass::multiplicative: return "multiplicative";
        case BoundaryClass::minimal: return "minimal";
    }
    return "?";
}

inline BoundaryClass boundary_class(const OmegaPoint& w) {
    bool nabla = modulus(w).is_nabla();
    if (std::holds_alternative<PointB>(w)) return nabla ? BoundaryClass::minimal : BoundaryClass::additive;
    return nabla ? BoundaryClass::multiplicative : BoundaryClass::interior;
}

// ---------------------------------------------------------------------------
// Partial action
// ---------------------------------------------------------------------------

enum class ActionStatus { defined, undefined, unidentified };

struct ActionResult {
    ActionStatus status = ActionStatus::undefined;
    std::optional<OmegaPoint> point;
    bool via_brute_force = false;
    std::optional<Window> window;
    std::string note;
};

/// Her((gω) ∩ P) restricted to a window, computed from the images of the
/// elements of ω lying in a source window large enough to reach every target.
inline WindowSet brute_force_image(const GroupElement& g, const OmegaPoint& w, const Window& target) {
    WindowSet out(static_cast<std::size_t>(target.max_a + 1),
                  std::vector<char>(static_cast<std::size_t>(target.max_k + 1), 0));
    Int v = g.a.den();
    // A target (k', a') needs a source a with a' | ya, which exists with a <= v·a'.
    Int src_a = v * target.max_a;
    Rational reach = (Rational(target.max_k) + Rational(g.r.num() < 0 ? -g.r.num() : g.r.num(), g.r.den())) / g.a;
    Int src_k = reach.ceil() + src_a;
    if (auto* a = std::get_if<PointA>(&w)) src_k = std::min(src_k, a->m);
    const auto& n = modulus(w);
    for (Int a = 1; a <= src_a; ++a) {
        if (!n.divisible_by(a)) continue;
        Rational ya = g.a * Rational(a);
        if (!ya.is_integer()) continue;
        Int c = ya.num();
        Int first = 0, step = a;
        if (auto* pa = std::get_if<PointA>(&w)) first = pa->m % a;
        else first = std::get<PointB>(w).r.residue(a);
        for (Int k = first; k <= src_k; k += step) {
            Rational top = g.r + g.a * Rational(k);
            if (!top.is_integer() || top.is_negative()) continue;
            Int l = top.num();
            // mark every window element below (l, c)
            for (Int d = 1; d <= std::min(c, target.max_a); ++d) {
                if (c % d != 0) continue;
                for (Int kk = l % d; kk <= std::min(l, target.max_k); kk += d) out[d][kk] = 1;
            }
        }
    }
    return out;
}

inline bool window_nonempty(const WindowSet& s) {
    return std::any_of(s.begin(), s.end(), [](const auto& row) {
        return std::any_of(row.begin(), row.end(), [](char c) { return c != 0; });
    });
}

inline const Window& default_action_window() {
    static const Window w{200, 60};
    return w;
}

/// θ_g(ω). B-points and A(m, ∇) use closed forms with exact domain criteria;
/// A(m, N) with N ≠ ∇ is computed by brute force on the window and matched
/// against the candidate A(s + tm, tN).
inline ActionResult partial_act(const GroupElement& g, const OmegaPoint& w,
                                const Window& window = default_action_window()) {
    ActionResult out;
    if (auto* b = std::get_if<PointB>(&w)) {
        auto image = b->r.affine_image(g.r, g.a);
        if (!image) return out;
        out.status = ActionStatus::defined;
        out.point = PointB{*image};
        return out;
    }
    auto& a = std::get<PointA>(w);
    Rational top = g.r + g.a * Rational(a.m);
    auto new_modulus = a.N.scaled(g.a);
    if (!new_modulus || !top.is_integer() || top.is_negative()) return out;
    OmegaPoint candidate = PointA{top.num(), *new_modulus};
    if (a.N.is_nabla()) {
        out.status = ActionStatus::defined;
        out.point = candidate;
        return out;
    }
    out.via_brute_force = true;
    out.window = window;
    auto computed = brute_force_image(g, w, window);
    if (!window_nonempty(computed)) {
        out.status = ActionStatus::unidentified;
        out.note = "window exhausted: no image element found in " + window.to_string();
        return out;
    }
    if (computed != window_membership(candidate, window)) {
        out.status = ActionStatus::unidentified;
        out.note = "hereditary closure does not match candidate " + to_string(candidate) + " on " + window.to_string();
        return out;
    }
    out.status = ActionStatus::defined;
    out.point = candidate;
    return out;
}

/// θ_g(ω) = ω, with ω required to lie in the domain of θ_g.
inline bool is_fixed(const GroupElement& g, const OmegaPoint& w) {
    auto r = partial_act(g, w);
    return r.status == ActionStatus::defined && same_point(*r.point, w);
}

// ---------------------------------------------------------------------------
// Boundary criteria
// ---------------------------------------------------------------------------

struct CriterionResult {
    bool passed = true;
    std::optional<SemigroupElement> witness;
    std::optional<Int> prime;
    Window window;
};

enum class BoundaryRelation { add, mult };

/// Checks the defining relation of Ω_add ((k,a) ∈ ω ⇒ (k+a,a) ∈ ω) or Ω_mult
/// ((j,a) ∈ ω ⇒ some (j+ak, ap) ∈ ω for k < p) on the window, primes up to max_a.
/// The multiplicative check tries primes with the smallest exponent in N first and
/// elements with the largest a first, so a failure reports a witness (m, a) with
/// a | N maximal and ap ∤ N.
inline CriterionResult relation_spectrum_check(const OmegaPoint& w, BoundaryRelation which, const Window& win) {
    CriterionResult out;
    out.window = win;
    if (which == BoundaryRelation::add) {
        for (Int a = 1; a <= win.max_a; ++a)
            for (Int k = 0; k <= win.max_k; ++k)
                if (contains(w, {k, a}) && !contains(w, {k + a, a})) {
                    out.passed = false;
                    out.witness = SemigroupElement(k, a);
                    return out;
                }
        return out;
    }
    const auto& n = modulus(w);
    auto primes = primes_up_to(win.max_a);
    std::stable_sort(primes.begin(), primes.end(),
                     [&](Int p, Int q) { return n.exponent(p) < n.exponent(q); });
    for (Int p : primes)
        for (Int a = win.max_a; a >= 1; --a)
            for (Int j = win.max_k; j >= 0; --j) {
                if (!contains(w, {j, a})) continue;
                bool found = false;
                for (Int k = 0; k < p && !found; ++k) found = contains(w, {j + a * k, a * p});
                if (!found) {
                    out.passed = false;
                    out.witness = SemigroupElement(j, a);
                    out.prime = p;
                    return out;
                }
            }
    return out;
}

// ---------------------------------------------------------------------------
// Basic open sets
// ---------------------------------------------------------------------------

/// V((m,c), K) = {ω : (m,c) ∈ ω and (m,c)h ∉ ω for h ∈ K}.
inline bool in_v_set(const OmegaPoint& w, const SemigroupElement& mc, std::span<const SemigroupElement> k) {
    for (auto& h : k)
        if (h.is_identity()) throw std::invalid_argument("V-set exclusions may not contain the identity");
    if (!contains(w, mc)) return false;
    return std::none_of(k.begin(), k.end(), [&](const SemigroupElement& h) { return contains(w, mc * h); });
}

/// W((k,a), F) = {ω : (k,a) ∈ ω and (k,a)(l,p) ∉ ω for p ∈ F, 0 ≤ l < p}.
inline bool in_w_set(const OmegaPoint& w, const SemigroupElement& ka, std::span<const Int> primes) {
    for (Int p : primes)
        if (!is_prime(p)) throw std::invalid_argument("W-set needs a set of primes");
    if (!contains(w, ka)) return false;
    for (Int p : primes)
        for (Int l = 0; l < p; ++l)
            if (contains(w, ka * SemigroupElement(l, p))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Convergence
// ---------------------------------------------------------------------------

struct ConvergenceResult {
    bool converged = true;
    std::optional<SemigroupElement> failing_generator;
    std::size_t tail_start = 0;
};

inline std::vector<SemigroupElement> generator_grid(Int max_k, Int max_a) {
    std::vector<SemigroupElement> out;
    for (Int a = 1; a <= max_a; ++a)
        for (Int k = 0; k <= max_k; ++k) out.emplace_back(k, a);
    return out;
}

/// For each generator x, 1_x(seq[n]) must equal 1_x(limit) for every n in the tail.
/// The tail starts at tail_start (default: the second half of the sequence).
inline ConvergenceResult converges(std::span<const OmegaPoint> seq, const OmegaPoint& limit,
                                   std::span<const SemigroupElement> gens,
                                   std::optional<std::size_t> tail_start = std::nullopt) {
    ConvergenceResult out;
    out.tail_start = tail_start.value_or(seq.size() / 2);
    for (auto& x : gens) {
        bool target = contains(limit, x);
        for (std::size_t n = out.tail_start; n < seq.size(); ++n)
            if (contains(seq[n], x) != target) {
                out.converged = false;
                out.failing_generator = x;
                return out;
            }
    }
    return out;
}

/// B(s_n, p_n M) for increasing primes p_n ∤ w (and p_n ∤ M), with s_n(M) = s.
/// The lifts s_n = s + nM keep the sequence non-constant.
inline std::vector<OmegaPoint> approximate_from_finite(const ProfiniteResidue& s, Int w, std::size_t count) {
    auto m = s.modulus().to_integer();
    if (!m) throw std::invalid_argument("approximation by primes needs a finite modulus");
    Int base = *s.integer_representative();
    std::vector<OmegaPoint> out;
    for (Int p = 2; out.size() < count; ++p) {
        if (!is_prime(p) || (w != 0 && w % p == 0) || *m % p == 0) continue;
        Int lift = base + static_cast<Int>(out.size()) * *m;
        out.push_back(make_b(lift, Supernatural(checked_mul(p, *m))));
    }
    return out;
}

/// B(s(M_n), M_n) with M_n = lcm{d <= n : d | M} for an infinite M, skipping any
/// M_n that divides w. Every finite divisor a of M divides M_n once n >= a.
/// Terms stop when M_n no longer fits in 64 bits or after `count` terms.
inline std::vector<OmegaPoint> approximate_from_infinite(const ProfiniteResidue& s, Int w, std::size_t count) {
    const auto& big = s.modulus();
    if (big.is_finite()) throw std::invalid_argument("exhaustion needs an infinite modulus");
    if (w == 0) throw std::invalid_argument("exhaustion needs w != 0");
    std::vector<OmegaPoint> out;
    Int mn = 1;
    for (Int n = 1; out.size() < count; ++n) {
        if (big.divisible_by(n)) {
            Int g = std::gcd(mn, n);
            if (__builtin_mul_overflow(mn / g, n, &mn)) break;
        }
        if (w % mn == 0) continue;
        out.push_back(PointB{s.reduce(Supernatural(mn))});
    }
    return out;
}

}  // namespace axb

#pragma once

// Coordinate models of the bimodules M_{L_a} and M_{K_a}. A vector is stored by its
// coordinates in the orthonormal basis {q_a(g^k) : 0 ≤ k < a}, g = ι or S, so the
// null space of the semi-inner product is quotiented away by construction.

#include <stdexcept>
#include <string>
#include <vector>

#include "axb/exel_calculus.hpp"

namespace axb {

struct LSystem {
    using Coef = LaurentPoly;
    static constexpr const char* name = "L";
    static Coef gen_power(Int k) { return LaurentPoly::monomial(k); }
    static Coef endo(Int a, const Coef& x) { return alpha(a, x); }
    static Coef transfer(Int a, const Coef& x) { return transfer_L(a, x); }
};

struct KSystem {
    using Coef = ToeplitzElement;
    static constexpr const char* name = "K";
    static Coef gen_power(Int k) { return ToeplitzElement::monomial(k, 0); }
    static Coef endo(Int a, const Coef& x) { return beta(a, x); }
    static Coef transfer(Int a, const Coef& x) { return transfer_K(a, x); }
};

template <class Sys>
struct ModuleVector {
    using Coef = typename Sys::Coef;
    Int a = 1;
    std::vector<Coef> coords;

    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
    friend ModuleVector operator+(ModuleVector x, const ModuleVector& y) {
        if (x.a != y.a) throw std::invalid_argument("sum of vectors in different fibres");
        for (std::size_t k = 0; k < x.coords.size(); ++k) x.coords[k] = x.coords[k] + y.coords[k];
        return x;
    }

    std::string to_string() const {
        std::string out = "M_" + std::string(Sys::name) + "_" + std::to_string(a) + "[";
        for (std::size_t k = 0; k < coords.size(); ++k) out += (k ? "; " : "") + coords[k].to_string();
        return out + "]";
    }
};

template <class Sys>
struct ModuleOperator {
    using Coef = typename Sys::Coef;
    Int a = 1;
    std::vector<std::vector<Coef>> entries;  // entries[i][j]: coefficient of basis_i in R(basis_j)

    static ModuleOperator zero(Int a) {
        return {a, std::vector<std::vector<Coef>>(static_cast<std::size_t>(a), std::vector<Coef>(static_cast<std::size_t>(a)))};
    }
    static ModuleOperator identity(Int a) {
        auto out = zero(a);
        for (Int i = 0; i < a; ++i) out.entries[i][i] = Coef(1);
        return out;
    }

    friend ModuleOperator operator+(ModuleOperator x, const ModuleOperator& y) {
        if (x.a != y.a) throw std::invalid_argument("operator dimension mismatch");
        for (Int i = 0; i < x.a; ++i)
            for (Int j = 0; j < x.a; ++j) x.entries[i][j] = x.entries[i][j] + y.entries[i][j];
        return x;
    }
    friend bool operator==(const ModuleOperator&, const ModuleOperator&) = default;
};

using ModuleVectorL = ModuleVector<LSystem>;
using ModuleVectorK = ModuleVector<KSystem>;
using ModuleOperatorL = ModuleOperator<LSystem>;
using ModuleOperatorK = ModuleOperator<KSystem>;

/// q_a(x): coordinate k is the transfer of (g^k)^* x.
template <class Sys>
ModuleVector<Sys> embed(Int a, const typename Sys::Coef& x) {
    if (a < 1) throw std::invalid_argument("fibre index must be positive");
    ModuleVector<Sys> out{a, {}};
    for (Int k = 0; k < a; ++k) out.coords.push_back(Sys::transfer(a, Sys::gen_power(k).adjoint() * x));
    return out;
}

template <class Sys>
ModuleVector<Sys> basis_vector(Int a, Int k) {
    return embed<Sys>(a, Sys::gen_power(k));
}

template <class Sys>
typename Sys::Coef inner(const ModuleVector<Sys>& x, const ModuleVector<Sys>& y) {
    if (x.a != y.a) throw std::invalid_argument("inner product of vectors in different fibres");
    typename Sys::Coef out;
    for (std::size_t k = 0; k < x.coords.size(); ++k) out = out + x.coords[k].adjoint() * y.coords[k];
    return out;
}

/// An algebra element whose image in the fibre is v: Σ_k g^k endo_a(v_k).
template <class Sys>
typename Sys::Coef lift(const ModuleVector<Sys>& v) {
    typename Sys::Coef out;
    for (Int k = 0; k < v.a; ++k) out = out + Sys::gen_power(k) * Sys::endo(v.a, v.coords[k]);
    return out;
}

/// Right action v · c = q_a(lift(v) endo_a(c)).
template <class Sys>
ModuleVector<Sys> right_act(const ModuleVector<Sys>& v, const typename Sys::Coef& c) {
    return embed<Sys>(v.a, lift(v) * Sys::endo(v.a, c));
}

/// Left action c · v = q_a(c lift(v)).
template <class Sys>
ModuleVector<Sys> left_act(const typename Sys::Coef& c, const ModuleVector<Sys>& v) {
    return embed<Sys>(v.a, c * lift(v));
}

/// q_a(f) q_b(g) = q_{ab}(f endo_a(g)).
template <class Sys>
ModuleVector<Sys> module_mult(const ModuleVector<Sys>& x, const ModuleVector<Sys>& y) {
    return embed<Sys>(checked_mul(x.a, y.a), lift(x) * Sys::endo(x.a, lift(y)));
}

template <class Sys>
ModuleVector<Sys> apply(const ModuleOperator<Sys>& r, const ModuleVector<Sys>& v) {
    if (r.a != v.a) throw std::invalid_argument("operator applied in the wrong fibre");
    ModuleVector<Sys> out{v.a, std::vector<typename Sys::Coef>(static_cast<std::size_t>(v.a))};
    for (Int i = 0; i < v.a; ++i)
        for (Int j = 0; j < v.a; ++j) out.coords[i] = out.coords[i] + r.entries[i][j] * v.coords[j];
    return out;
}

/// (x ∘ y): apply y first.
template <class Sys>
ModuleOperator<Sys> compose(const ModuleOperator<Sys>& x, const ModuleOperator<Sys>& y) {
    if (x.a != y.a) throw std::invalid_argument("operator dimension mismatch");
    auto out = ModuleOperator<Sys>::zero(x.a);
    for (Int i = 0; i < x.a; ++i)
        for (Int k = 0; k < x.a; ++k)
            for (Int j = 0; j < x.a; ++j) out.entries[i][k] = out.entries[i][k] + x.entries[i][j] * y.entries[j][k];
    return out;
}

/// Θ_{m,n}(v) = m ⟨n, v⟩.
template <class Sys>
ModuleOperator<Sys> rank_one(const ModuleVector<Sys>& m, const ModuleVector<Sys>& n) {
    if (m.a != n.a) throw std::invalid_argument("rank-one operator across fibres");
    auto out = ModuleOperator<Sys>::zero(m.a);
    for (Int i = 0; i < m.a; ++i)
        for (Int j = 0; j < m.a; ++j) out.entries[i][j] = m.coords[i] * n.coords[j].adjoint();
    return out;
}

/// φ_a(T) as Σ_k Θ_{q_a(T g^k), q_a(g^k)}.
template <class Sys>
ModuleOperator<Sys> phi(Int a, const typename Sys::Coef& t) {
    auto out = ModuleOperator<Sys>::zero(a);
    for (Int k = 0; k < a; ++k)
        out = out + rank_one(embed<Sys>(a, t * Sys::gen_power(k)), basis_vector<Sys>(a, k));
    return out;
}

/// φ_a(T) from the left action on basis vectors directly.
template <class Sys>
ModuleOperator<Sys> phi_direct(Int a, const typename Sys::Coef& t) {
    auto out = ModuleOperator<Sys>::zero(a);
    for (Int j = 0; j < a; ++j) {
        auto col = left_act(t, basis_vector<Sys>(a, j));
        for (Int i = 0; i < a; ++i) out.entries[i][j] = col.coords[i];
    }
    return out;
}

/// ι_a^{ab}(R), determined by ι(R)(m n) = (R m) n; the basis vector q_{ab}(g^{j+al})
/// of M_{ab} is the product q_a(g^j) q_b(g^l).
template <class Sys>
ModuleOperator<Sys> iota(Int a, Int b, const ModuleOperator<Sys>& r) {
    if (r.a != a) throw std::invalid_argument("iota: operator is not on the source fibre");
    Int ab = checked_mul(a, b);
    auto out = ModuleOperator<Sys>::zero(ab);
    for (Int j = 0; j < a; ++j)
        for (Int l = 0; l < b; ++l) {
            auto col = module_mult(apply(r, basis_vector<Sys>(a, j)), basis_vector<Sys>(b, l));
            for (Int i = 0; i < ab; ++i) out.entries[i][j + a * l] = col.coords[i];
        }
    return out;
}

/// ι_p^{pr}(Θ_{q_p(1),q_p(1)}) ι_r^{pr}(Θ_{q_r(1),q_r(1)}).
template <class Sys>
ModuleOperator<Sys> nica_pair(Int p, Int r) {
    if (!is_prime(p) || !is_prime(r) || p == r) throw std::invalid_argument("nica_pair needs distinct primes");
    using Coef = typename Sys::Coef;
    auto one_p = embed<Sys>(p, Coef(1));
    auto one_r = embed<Sys>(r, Coef(1));
    return compose(iota(p, r, rank_one(one_p, one_p)), iota(r, p, rank_one(one_r, one_r)));
}

// ---------------------------------------------------------------------------
// Identities in M_{K_a}
// ---------------------------------------------------------------------------

/// q_a(S^n S^j S^{*j}) = q_a(S^n β_a K_a(S^j S^{*j})).
inline bool lemma62_a(Int n, Int j, Int a) {
    auto sn = ToeplitzElement::monomial(n, 0);
    auto proj = ToeplitzElement::projection(j);
    return embed<KSystem>(a, sn * proj) == embed<KSystem>(a, sn * beta(a, transfer_K(a, proj)));
}

/// q_a(S^{*m}) = q_a(S^j S^{*j} S^{*m}) when m and m + j lie in the same (a(i-1), ai].
inline bool lemma62_b(Int m, Int j, Int a) {
    if (m < 0 || j < 0 || a < 1) throw std::invalid_argument("lemma62_b: bad parameters");
    if (ceil_div(m, a) != ceil_div(m + j, a))
        throw std::invalid_argument("lemma62_b: m and m+j lie in different blocks");
    auto sm = ToeplitzElement::monomial(0, m);
    return embed<KSystem>(a, sm) == embed<KSystem>(a, ToeplitzElement::projection(j) * sm);
}

/// q_{pr}(β_p K_p β_r K_r(T)) = q_{pr}(β_{pr} K_{pr}(T)).
inline bool lemma62_c(Int p, Int r, const ToeplitzElement& t) {
    if (!is_prime(p) || !is_prime(r) || p == r) throw std::invalid_argument("lemma62_c needs distinct primes");
    auto lhs = beta(p, transfer_K(p, beta(r, transfer_K(r, t))));
    auto rhs = beta(p * r, transfer_K(p * r, t));
    return embed<KSystem>(p * r, lhs) == embed<KSystem>(p * r, rhs);
}

// ---------------------------------------------------------------------------
// Morphisms induced by ρ
// ---------------------------------------------------------------------------

/// π_a(q_a(T)) = q_a(ρ(T)), i.e. ρ applied coordinatewise.
inline ModuleVectorL morphism_pi(const ModuleVectorK& v) {
    ModuleVectorL out{v.a, {}};
    for (auto& c : v.coords) out.coords.push_back(rho(c));
    return out;
}

/// μ_a(R) with μ(Θ_{m,n}) = Θ_{π(m),π(n)}: ρ applied entrywise.
inline ModuleOperatorL morphism_mu(const ModuleOperatorK& r) {
    auto out = ModuleOperatorL::zero(r.a);
    for (Int i = 0; i < r.a; ++i)
        for (Int j = 0; j < r.a; ++j) out.entries[i][j] = rho(r.entries[i][j]);
    return out;
}

}  // namespace axb

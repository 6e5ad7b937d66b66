#pragma once

// The dynamics σ_t(s) = s, σ_t(v_p) = p^{it} v_p; KMS and ground-state values on
// the projections s^k v_a v_a^* s^{*k}; factoring predicates for the two boundary
// quotients; and the commuting cube relating the quotients of the Toeplitz algebra
// of N ⋊ N^x to the Nica-Toeplitz and Cuntz-Pimsner algebras of the two Exel systems.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "axb/covariant_monomials.hpp"
#include "axb/exel_calculus.hpp"
#include "axb/product_modules.hpp"

namespace axb {

// ---------------------------------------------------------------------------
// Exact values Σ c ∏ p^{f_p} with rational c and f_p ∈ (0, 1)
// ---------------------------------------------------------------------------

/// A real number in Q[p^{1/n}]. Each term stores only the fractional parts of its
/// prime exponents; integer parts are folded into the rational coefficient, which
/// makes the representation canonical.
class KmsValue {
public:
    using Radical = std::map<Int, Rational>;

    KmsValue() = default;
    KmsValue(Rational c) { add({}, c); }  // NOLINT(google-explicit-constructor)

    /// c · ∏ p^{e_p}, where exponents may be any rationals.
    static KmsValue product(Rational c, const std::map<Int, Rational>& exponents) {
        Radical frac;
        for (auto& [p, e] : exponents) {
            if (!is_prime(p)) throw std::invalid_argument("radical base must be prime");
            Int whole = e.floor();
            Rational f = e - Rational(whole);
            if (!f.is_zero()) frac[p] = f;
            Rational scale = whole >= 0 ? Rational(ipow(p, static_cast<unsigned>(whole)))
                                        : Rational(1, ipow(p, static_cast<unsigned>(-whole)));
            c *= scale;
        }
        KmsValue out;
        out.add(frac, c);
        return out;
    }

    /// a^{-β} for a positive integer a and rational β.
    static KmsValue power_of(Int a, const Rational& exponent) {
        std::map<Int, Rational> e;
        for (auto [p, k] : factorize(a)) e[p] = exponent * Rational(k);
        return product(1, e);
    }

    const std::map<Radical, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return *this == KmsValue(1); }

    std::optional<Rational> as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
        return std::nullopt;
    }

    double to_double() const {
        double out = 0;
        for (auto& [r, c] : terms_) {
            double t = c.to_double();
            for (auto& [p, f] : r) t *= std::pow(static_cast<double>(p), f.to_double());
            out += t;
        }
        return out;
    }

    friend KmsValue operator+(KmsValue x, const KmsValue& y) {
        for (auto& [r, c] : y.terms_) x.add(r, c);
        return x;
    }
    friend KmsValue operator*(const KmsValue& x, const KmsValue& y) {
        KmsValue out;
        for (auto& [r1, c1] : x.terms_)
            for (auto& [r2, c2] : y.terms_) {
                std::map<Int, Rational> e = r1;
                for (auto& [p, f] : r2) e[p] += f;
                out = out + product(c1 * c2, e);
            }
        return out;
    }
    friend bool operator==(const KmsValue&, const KmsValue&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [r, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.to_string();
            for (auto& [p, f] : r) out += "*" + std::to_string(p) + "^(" + f.to_string() + ")";
        }
        return out;
    }

private:
    void add(const Radical& r, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Radical, Rational> terms_;
};

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

struct StateParams {
    enum class Kind { finite, infinity, ground };
    Kind kind = Kind::finite;
    Rational beta{1};

    static StateParams finite(Rational b) {
        if (b < Rational(1)) throw std::invalid_argument("KMS states are modelled for beta >= 1");
        return {Kind::finite, b};
    }
    static StateParams kms_infinity() { return {Kind::infinity, 0}; }
    static StateParams ground() { return {Kind::ground, 0}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::finite: return "beta=" + beta.to_string();
            case Kind::infinity: return "KMS_inf";
            case Kind::ground: return "ground";
        }
        return "?";
    }
};

/// σ_t(W_x W_y^*) = (a/b)^{it} W_x W_y^* for x = (m,a), y = (n,b).
inline Rational dynamics_scale(const std::optional<Monomial>& m) {
    if (!m) throw std::invalid_argument("dynamics scale of the zero monomial");
    return Rational(m->left.a, m->right.a);
}

struct KmsEvaluation {
    KmsValue value;
    bool uses_composite = false;  // a^{-β} for composite a extends the prime formula multiplicatively
};

/// Evaluates a state on a nonnegative combination of projections s^k v_a v_a^* s^{*k}.
inline KmsEvaluation kms_value(const StateParams& params, const OperatorExpr& e) {
    KmsEvaluation out;
    for (auto& [m, c] : e.terms()) {
        if (!m.is_projection())
            throw std::invalid_argument("not evaluable: " + m.to_string() + " is not of the form s^k v_a v_a* s*^k");
        if (c.is_negative()) throw std::invalid_argument("not evaluable: negative coefficient on " + m.to_string());
        Int a = m.left.a, k = m.left.m;
        KmsValue v;
        switch (params.kind) {
            case StateParams::Kind::finite:
                v = KmsValue::power_of(a, -params.beta);
                if (a > 1 && !is_prime(a)) out.uses_composite = true;
                break;
            case StateParams::Kind::infinity:
                v = a == 1 ? KmsValue(1) : KmsValue(0);
                break;
            case StateParams::Kind::ground:
                if (a == 1 && k > 0)
                    throw std::invalid_argument("not evaluable: ground states are not determined on s^k s*^k");
                v = a == 1 ? KmsValue(1) : KmsValue(0);
                break;
        }
        out.value = out.value + KmsValue(c) * v;
    }
    return out;
}

/// s^k v_p v_p^* s^{*k} as a monomial.
inline OperatorExpr kms_projection(Int k, Int a) {
    SemigroupElement x{k, a};
    return OperatorExpr(Monomial{x, x});
}

/// Σ_{k<p} s^k v_p v_p^* s^{*k}.
inline OperatorExpr prime_partition(Int p) {
    OperatorExpr out;
    for (Int k = 0; k < p; ++k) out = out + kms_projection(k, p);
    return out;
}

enum class Quotient { add, mult };

struct Predicate {
    enum class Truth { yes, no, conditional };
    Truth truth = Truth::no;
    std::string condition;
    std::optional<Int> witness_prime;

    std::string to_string() const {
        switch (truth) {
            case Truth::yes: return "true";
            case Truth::no: return "false";
            case Truth::conditional: return "conditional: " + condition;
        }
        return "?";
    }
};

/// Whether the states with these parameters factor through q_add (kernel generated by
/// 1 - ss^*) or q_mult (kernel generated by 1 - Σ_{k<p} s^k v_p v_p^* s^{*k}). For q_mult
/// the defining relation is tested on primes up to max_prime.
inline Predicate factors_through(const StateParams& params, Quotient q, Int max_prime = 100) {
    Predicate out;
    if (q == Quotient::add) {
        if (params.kind == StateParams::Kind::ground) {
            out.truth = Predicate::Truth::conditional;
            out.condition = "the ground state factors through q_add iff it is a KMS_inf state";
        } else {
            out.truth = Predicate::Truth::yes;
        }
        return out;
    }
    if (params.kind == StateParams::Kind::ground) {
        out.truth = Predicate::Truth::no;
        out.condition = "ground states vanish on every s^k v_p v_p* s*^k";
    }
    for (Int p : primes_up_to(max_prime)) {
        if (!kms_value(params, prime_partition(p)).value.is_one()) {
            out.truth = Predicate::Truth::no;
            out.witness_prime = p;
            return out;
        }
    }
    out.truth = Predicate::Truth::yes;
    return out;
}

// ---------------------------------------------------------------------------
// Algebra nodes and relation sets
// ---------------------------------------------------------------------------

enum class Node { T, T_add, T_mult, Q_N, NT_K, O_K, NT_L, O_L };

inline std::string to_string(Node n) {
    switch (n) {
        case Node::T: return "T(NxN*)";
        case Node::T_add: return "T_add";
        case Node::T_mult: return "T_mult";
        case Node::Q_N: return "Q_N";
        case Node::NT_K: return "NT(M_K)";
        case Node::O_K: return "O(M_K)";
        case Node::NT_L: return "NT(M_L)";
        case Node::O_L: return "O(M_L)";
    }
    return "?";
}

using RelationSet = std::set<Relation>;

/// The presenting relations; the module-algebra nodes carry the presentation of
/// the quotient they are isomorphic to.
inline RelationSet node_relations(Node n) {
    using R = Relation;
    switch (n) {
        case Node::T:
        case Node::NT_K: return {R::T1, R::T2, R::T3, R::T4, R::T5};
        case Node::T_add:
        case Node::NT_L: return {R::T1, R::T2, R::T3, R::T5, R::Q6};
        case Node::T_mult:
        case Node::O_K: return {R::T1, R::T2, R::T3, R::T4, R::Q5};
        case Node::Q_N:
        case Node::O_L: return {R::T1, R::T2, R::Q5, R::Q6};
    }
    return {};
}

/// Closes a relation set under the implications T1+Q6 ⇒ T4, Q5 ⇒ T5 and
/// T1+T2+Q5+Q6 ⇒ T3+T4.
inline RelationSet implication_closure(RelationSet s) {
    using R = Relation;
    bool changed = true;
    auto has = [&](R r) { return s.count(r) > 0; };
    while (changed) {
        auto before = s.size();
        if (has(R::T1) && has(R::Q6)) s.insert(R::T4);
        if (has(R::Q5)) s.insert(R::T5);
        if (has(R::T1) && has(R::T2) && has(R::Q5) && has(R::Q6)) {
            s.insert(R::T3);
            s.insert(R::T4);
        }
        changed = s.size() != before;
    }
    return s;
}

inline bool is_expression_node(Node n) {
    return n == Node::T || n == Node::T_add || n == Node::T_mult || n == Node::Q_N;
}

/// Imposes the node's extra relations on a normal form: with (Q6), s^m s^{*n} collapses
/// to a single power of s or s^*; with (Q5), a full partition Σ_{k<p} s^k v_p v_p^* s^{*k}
/// carrying a common coefficient is replaced by that multiple of 1.
inline OperatorExpr reduce_in_node(const OperatorExpr& e, Node n) {
    auto rel = implication_closure(node_relations(n));
    OperatorExpr out = e;
    if (rel.count(Relation::Q6)) {
        OperatorExpr next;
        for (auto& [m, c] : out.terms()) {
            if (m.left.a == 1 && m.right.a == 1) {
                Int d = m.left.m - m.right.m;
                next.add(d >= 0 ? Monomial{{d, 1}, {}} : Monomial{{}, {-d, 1}}, c);
            } else {
                next.add(m, c);
            }
        }
        out = next;
    }
    if (rel.count(Relation::Q5)) {
        std::set<Int> primes;
        for (auto& [m, c] : out.terms())
            if (m.is_projection() && is_prime(m.left.a)) primes.insert(m.left.a);
        for (Int p : primes) {
            auto it = out.terms().find(Monomial{{0, p}, {0, p}});
            if (it == out.terms().end()) continue;
            Rational c = it->second;
            bool full = true;
            for (Int k = 1; k < p && full; ++k) {
                auto jt = out.terms().find(Monomial{{k, p}, {k, p}});
                full = jt != out.terms().end() && jt->second == c;
            }
            if (!full) continue;
            out = out - c * prime_partition(p) + c * OperatorExpr::identity();
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The cube
// ---------------------------------------------------------------------------

struct CubeElement {
    Node node;
    std::variant<OperatorExpr, ModuleVectorK, ModuleVectorL> value;

    friend bool operator==(const CubeElement& x, const CubeElement& y) {
        return x.node == y.node && x.value == y.value;
    }

    std::string to_string() const {
        std::string body = std::visit([](const auto& v) { return v.to_string(); }, value);
        return axb::to_string(node) + ": " + body;
    }
};

enum class CubeMap { q_add, q_mult, q_add_to_Q, q_mult_to_Q, theta1, theta2, phi1, phi2, Q_K, Q_L, rho_NT, rho_O };

struct MapSignature {
    CubeMap map;
    const char* name;
    Node source;
    Node target;
};

inline const std::array<MapSignature, 12>& cube_maps() {
    static const std::array<MapSignature, 12> maps{{
        {CubeMap::q_add, "q_add", Node::T, Node::T_add},
        {CubeMap::q_mult, "q_mult", Node::T, Node::T_mult},
        {CubeMap::q_add_to_Q, "q_add->Q", Node::T_add, Node::Q_N},
        {CubeMap::q_mult_to_Q, "q_mult->Q", Node::T_mult, Node::Q_N},
        {CubeMap::theta1, "theta1", Node::T, Node::NT_K},
        {CubeMap::theta2, "theta2", Node::T_mult, Node::O_K},
        {CubeMap::phi1, "phi1", Node::T_add, Node::NT_L},
        {CubeMap::phi2, "phi2", Node::Q_N, Node::O_L},
        {CubeMap::Q_K, "Q_K", Node::NT_K, Node::O_K},
        {CubeMap::Q_L, "Q_L", Node::NT_L, Node::O_L},
        {CubeMap::rho_NT, "rho_NT", Node::NT_K, Node::NT_L},
        {CubeMap::rho_O, "rho_x_id", Node::O_K, Node::O_L},
    }};
    return maps;
}

inline const MapSignature& signature(CubeMap m) {
    for (auto& s : cube_maps())
        if (s.map == m) return s;
    throw std::invalid_argument("unknown cube map");
}

/// The image of a positive element w_x = s^m ∏ v_p^{e_p(a)} in a module algebra: the
/// product of the generator images s ↦ fibre-1 vector g and v_p ↦ q_p(1).
template <class Sys>
ModuleVector<Sys> positive_image(const SemigroupElement& x) {
    using Coef = typename Sys::Coef;
    auto out = embed<Sys>(1, Coef(1));
    for (auto& l : element_word(x)) {
        auto g = l.kind == Letter::Kind::s ? embed<Sys>(1, Sys::gen_power(1)) : embed<Sys>(l.prime, Coef(1));
        out = module_mult(out, g);
    }
    return out;
}

/// Splits an expression into a single positive monomial w_x with coefficient 1.
inline SemigroupElement positive_element(const OperatorExpr& e) {
    if (e.terms().size() != 1) throw std::invalid_argument("cube maps are evaluated on positive monomials only");
    auto& [m, c] = *e.terms().begin();
    if (c != Rational(1) || !m.right.is_identity())
        throw std::invalid_argument("cube maps are evaluated on positive monomials only");
    return m.left;
}

inline CubeElement apply_map(CubeMap map, const CubeElement& x) {
    const auto& sig = signature(map);
    if (x.node != sig.source)
        throw std::invalid_argument(std::string("cannot apply ") + sig.name + " to an element of " + to_string(x.node));
    switch (map) {
        case CubeMap::q_add:
        case CubeMap::q_mult:
        case CubeMap::q_add_to_Q:
        case CubeMap::q_mult_to_Q:
            return {sig.target, reduce_in_node(std::get<OperatorExpr>(x.value), sig.target)};
        case CubeMap::theta1:
        case CubeMap::theta2:
            return {sig.target, positive_image<KSystem>(positive_element(std::get<OperatorExpr>(x.value)))};
        case CubeMap::phi1:
        case CubeMap::phi2:
            return {sig.target, positive_image<LSystem>(positive_element(std::get<OperatorExpr>(x.value)))};
        case CubeMap::Q_K:
        case CubeMap::Q_L:
            return {sig.target, x.value};
        case CubeMap::rho_NT:
        case CubeMap::rho_O:
            return {sig.target, morphism_pi(std::get<ModuleVectorK>(x.value))};
    }
    throw std::invalid_argument("unknown cube map");
}

inline CubeElement apply_path(const std::vector<CubeMap>& path, CubeElement x) {
    for (auto m : path) x = apply_map(m, x);
    return x;
}

struct CubeFace {
    std::string name;
    Node source;
    std::vector<CubeMap> first;
    std::vector<CubeMap> second;
};

inline const std::vector<CubeFace>& cube_faces() {
    using M = CubeMap;
    static const std::vector<CubeFace> faces{
        {"top", Node::T, {M::q_mult, M::theta2}, {M::theta1, M::Q_K}},
        {"bottom", Node::T_add, {M::q_add_to_Q, M::phi2}, {M::phi1, M::Q_L}},
        {"left", Node::T, {M::q_add, M::q_add_to_Q}, {M::q_mult, M::q_mult_to_Q}},
        {"right", Node::NT_K, {M::Q_K, M::rho_O}, {M::rho_NT, M::Q_L}},
        {"front", Node::T, {M::theta1, M::rho_NT}, {M::q_add, M::phi1}},
        {"back", Node::T_mult, {M::theta2, M::rho_O}, {M::q_mult_to_Q, M::phi2}},
    };
    return faces;
}

inline std::optional<CubeFace> find_face(const std::string& name) {
    if (name == "identity") return CubeFace{"identity", Node::T, {}, {}};
    for (auto& f : cube_faces())
        if (f.name == name) return f;
    return std::nullopt;
}

/// Generators s, v_p and the positive words s v_p, v_p s, as elements of a node.
/// For module-algebra sources the generators are transported along θ_1.
inline std::vector<CubeElement> face_test_elements(Node source, std::span<const Int> primes) {
    std::vector<SemigroupElement> xs{{1, 1}};
    for (Int p : primes) {
        xs.emplace_back(0, p);
        xs.push_back(SemigroupElement(1, 1) * SemigroupElement(0, p));
        xs.push_back(SemigroupElement(0, p) * SemigroupElement(1, 1));
    }
    std::vector<CubeElement> out;
    for (auto& x : xs) {
        CubeElement e{Node::T, OperatorExpr(Monomial{x, {}})};
        if (source == Node::NT_K) e = apply_map(CubeMap::theta1, e);
        else if (source != Node::T) e = CubeElement{source, reduce_in_node(std::get<OperatorExpr>(e.value), source)};
        out.push_back(e);
    }
    return out;
}

struct FaceReport {
    std::string face;
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
    bool passed() const { return mismatches.empty(); }
};

inline FaceReport cube_face_check(const std::string& face_name, std::span<const Int> primes) {
    auto face = find_face(face_name);
    if (!face) throw std::invalid_argument("unknown cube face '" + face_name + "'");
    for (Int p : primes)
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    FaceReport rep;
    rep.face = face->name;
    for (auto& x : face_test_elements(face->source, primes)) {
        auto a = apply_path(face->first, x);
        auto b = apply_path(face->second, x);
        ++rep.checked;
        if (!(a == b)) rep.mismatches.push_back(x.to_string() + " -> " + a.to_string() + " vs " + b.to_string());
    }
    return rep;
}

/// Every map of the cube goes to a node whose relation closure contains the source's.
inline std::vector<std::string> relation_monotonicity_violations() {
    std::vector<std::string> out;
    for (auto& m : cube_maps()) {
        auto src = implication_closure(node_relations(m.source));
        auto tgt = implication_closure(node_relations(m.target));
        for (auto r : src)
            if (!tgt.count(r)) out.push_back(std::string(m.name) + " loses " + to_string(r));
    }
    return out;
}

}  // namespace axb

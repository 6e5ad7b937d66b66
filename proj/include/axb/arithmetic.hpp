#pragma once

// Exact arithmetic substrate: checked 64-bit integers, rationals in lowest
// terms, supernatural numbers with eventually constant exponent functions,
// and profinite residues r in Z/N queried at finite divisors of N.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace axb {

using Int = std::int64_t;

// ---------------------------------------------------------------------------
// Checked integer helpers
// ---------------------------------------------------------------------------

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow");
    return static_cast<Int>(v);
}

/// Remainder in [0, m) for m > 0.
inline Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int floor_div(Int a, Int m) {
    return (a - floor_mod(a, m)) / m;
}

inline Int ceil_div(Int a, Int m) {
    return -floor_div(-a, m);
}

inline Int lcm_checked(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

inline Int ipow(Int base, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

inline std::vector<Int> primes_up_to(Int n) {
    std::vector<Int> out;
    if (n < 2) return out;
    std::vector<char> sieve(static_cast<std::size_t>(n + 1), 1);
    for (Int p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (Int q = p * p; q <= n; q += p) sieve[q] = 0;
    }
    return out;
}

/// Prime factorisation of n >= 1 as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

/// Exponent of the prime p in n >= 1.
inline unsigned valuation(Int n, Int p) {
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

inline Int parse_int(std::string_view s) {
    Int v = 0;
    auto first = s.data();
    auto last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return v;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Exact rational, always in lowest terms with positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(Int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(Int n, Int d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        assign(n, d);
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(checked_sub(0, num_), den_); }
    Rational reciprocal() const { return Rational(den_, num_); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        __int128 n = static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_;
        __int128 d = static_cast<__int128>(x.den_) * y.den_;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
    friend Rational operator*(const Rational& x, const Rational& y) {
        __int128 n = static_cast<__int128>(x.num_) * y.num_;
        __int128 d = static_cast<__int128>(x.den_) * y.den_;
        return from_wide(n, d);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("division by zero rational");
        __int128 n = static_cast<__int128>(x.num_) * y.den_;
        __int128 d = static_cast<__int128>(x.den_) * y.num_;
        return from_wide(n, d);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        __int128 l = static_cast<__int128>(x.num_) * y.den_;
        __int128 r = static_cast<__int128>(y.num_) * x.den_;
        return l <=> r;
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p", "p/q", and decimal "x.y" forms.
    static Rational parse(std::string_view s) {
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            Int d = parse_int(s.substr(slash + 1));
            if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
            return Rational(parse_int(s.substr(0, slash)), d);
        }
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            auto whole = s.substr(0, dot);
            auto frac = s.substr(dot + 1);
            if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
                throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
            bool negative = !whole.empty() && whole.front() == '-';
            Int w = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_int(whole);
            Int scale = ipow(10, static_cast<unsigned>(frac.size()));
            Int f = parse_int(frac);
            Int n = checked_add(checked_mul(w < 0 ? -w : w, scale), f);
            return Rational(negative ? -n : n, scale);
        }
        return Rational(parse_int(s));
    }

private:
    static Rational from_wide(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    void assign(Int n, Int d) {
        if (d < 0) {
            n = checked_sub(0, n);
            d = checked_sub(0, d);
        }
        Int g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    Int num_ = 0;
    Int den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// Exponent in N ∪ {∞}
// ---------------------------------------------------------------------------

class Exponent {
public:
    constexpr Exponent() = default;
    constexpr Exponent(unsigned v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    static constexpr Exponent infinity() {
        Exponent e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return infinite_; }
    unsigned value() const {
        if (infinite_) throw std::domain_error("finite value requested from infinite exponent");
        return value_;
    }

    friend constexpr bool operator==(const Exponent& x, const Exponent& y) {
        return x.infinite_ == y.infinite_ && (x.infinite_ || x.value_ == y.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Exponent& x, const Exponent& y) {
        if (x.infinite_ || y.infinite_) return static_cast<int>(x.infinite_) <=> static_cast<int>(y.infinite_);
        return x.value_ <=> y.value_;
    }

    friend Exponent operator+(const Exponent& x, const Exponent& y) {
        if (x.infinite_ || y.infinite_) return infinity();
        return Exponent(x.value_ + y.value_);
    }
    /// ∞ − n = ∞; ∞ − ∞ and negative results are rejected.
    friend Exponent operator-(const Exponent& x, const Exponent& y) {
        if (y.infinite_) throw std::domain_error("subtraction of an infinite exponent");
        if (x.infinite_) return infinity();
        if (y.value_ > x.value_) throw std::domain_error("negative exponent");
        return Exponent(x.value_ - y.value_);
    }

    /// Adds a signed integer; nullopt when a finite result would be negative.
    std::optional<Exponent> shifted(long delta) const {
        if (infinite_) return infinity();
        long v = static_cast<long>(value_) + delta;
        if (v < 0) return std::nullopt;
        return Exponent(static_cast<unsigned>(v));
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    unsigned value_ = 0;
    bool infinite_ = false;
};

// ---------------------------------------------------------------------------
// Supernatural numbers
// ---------------------------------------------------------------------------

/// A supernatural number prod_p p^{e_p} whose exponent function is constant
/// (default_exponent) away from finitely many primes (the exceptions).
class Supernatural {
public:
    /// The supernatural 1.
    Supernatural() = default;

    /// A finite natural n >= 1.
    Supernatural(Int n) {  // NOLINT(google-explicit-constructor)
        if (n < 1) throw std::invalid_argument("supernatural from non-positive integer");
        for (auto [p, e] : factorize(n)) exceptions_[p] = Exponent(e);
    }

    static Supernatural nabla() { return uniform(Exponent::infinity()); }

    static Supernatural uniform(Exponent e) {
        Supernatural s;
        s.default_ = e;
        return s;
    }

    static Supernatural prime_power(Int p, Exponent e) {
        require_prime(p);
        Supernatural s;
        s.exceptions_[p] = e;
        s.normalize();
        return s;
    }

    static Supernatural from_exponents(Exponent default_exponent, const std::map<Int, Exponent>& exceptions) {
        Supernatural s;
        s.default_ = default_exponent;
        for (auto& [p, e] : exceptions) {
            require_prime(p);
            s.exceptions_[p] = e;
        }
        s.normalize();
        return s;
    }

    Exponent default_exponent() const { return default_; }
    const std::map<Int, Exponent>& exceptions() const { return exceptions_; }

    Exponent exponent(Int p) const {
        require_prime(p);
        auto it = exceptions_.find(p);
        return it == exceptions_.end() ? default_ : it->second;
    }

    bool is_finite() const {
        if (default_ != Exponent(0)) return false;
        return std::none_of(exceptions_.begin(), exceptions_.end(),
                            [](const auto& kv) { return kv.second.is_infinite(); });
    }

    bool is_nabla() const { return default_.is_infinite() && exceptions_.empty(); }

    std::optional<Int> to_integer() const {
        if (!is_finite()) return std::nullopt;
        Int n = 1;
        for (auto& [p, e] : exceptions_) n = checked_mul(n, ipow(p, e.value()));
        return n;
    }

    /// True iff the finite natural a divides this supernatural.
    bool divisible_by(Int a) const {
        if (a < 1) throw std::invalid_argument("divisibility test by non-positive integer");
        for (auto [p, e] : factorize(a))
            if (Exponent(e) > exponent(p)) return false;
        return true;
    }

    friend bool divides(const Supernatural& m, const Supernatural& n) {
        if (m.default_ > n.default_) return false;
        for (auto& [p, e] : m.exceptions_)
            if (e > n.exponent(p)) return false;
        for (auto& [p, e] : n.exceptions_)
            if (m.exponent(p) > e) return false;
        return true;
    }

    friend Supernatural lcm(const Supernatural& m, const Supernatural& n) {
        return combine(m, n, [](Exponent a, Exponent b) { return std::max(a, b); });
    }
    friend Supernatural gcd(const Supernatural& m, const Supernatural& n) {
        return combine(m, n, [](Exponent a, Exponent b) { return std::min(a, b); });
    }
    friend Supernatural operator*(const Supernatural& m, const Supernatural& n) {
        return combine(m, n, [](Exponent a, Exponent b) { return a + b; });
    }

    /// y·N for positive rational y, or nullopt when some exponent would be negative.
    std::optional<Supernatural> scaled(const Rational& y) const {
        if (!y.is_positive()) throw std::invalid_argument("scaling a supernatural by a non-positive rational");
        Supernatural out = *this;
        std::map<Int, long> delta;
        for (auto [p, e] : factorize(y.num())) delta[p] += static_cast<long>(e);
        for (auto [p, e] : factorize(y.den())) delta[p] -= static_cast<long>(e);
        for (auto [p, d] : delta) {
            auto shifted = exponent(p).shifted(d);
            if (!shifted) return std::nullopt;
            out.exceptions_[p] = *shifted;
        }
        out.normalize();
        return out;
    }

    /// All finite divisors a <= bound, ascending.
    std::vector<Int> divisors_up_to(Int bound) const {
        std::vector<Int> out;
        for (Int a = 1; a <= bound; ++a)
            if (divisible_by(a)) out.push_back(a);
        return out;
    }

    friend bool operator==(const Supernatural&, const Supernatural&) = default;

    std::string to_string() const {
        if (auto n = to_integer()) return std::to_string(*n);
        if (is_nabla()) return "nabla";
        if (default_ == Exponent(0)) return factor_list();
        std::string out = "all^" + default_.to_string();
        if (!exceptions_.empty()) out += "[" + factor_list() + "]";
        return out;
    }

    /// Parses "12", "nabla", "2^inf*3^2", and the general form "all^d[p^e*...]".
    static Supernatural parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s.push_back(c);
        if (s.empty()) throw std::invalid_argument("empty supernatural");
        if (s == "nabla") return nabla();
        if (s.rfind("all^", 0) == 0) {
            auto bracket = s.find('[');
            Exponent d = parse_exponent(s.substr(4, bracket == std::string::npos ? std::string::npos : bracket - 4));
            std::map<Int, Exponent> exc;
            if (bracket != std::string::npos) {
                if (s.back() != ']') throw std::invalid_argument("malformed supernatural '" + s + "'");
                exc = parse_factors(s.substr(bracket + 1, s.size() - bracket - 2), /*allow_merge=*/false);
            }
            return from_exponents(d, exc);
        }
        if (s.find_first_not_of("0123456789") == std::string::npos) {
            Int n = parse_int(s);
            if (n < 1) throw std::invalid_argument("supernatural must be positive");
            return Supernatural(n);
        }
        Supernatural out;
        for (auto& [p, e] : parse_factors(s, /*allow_merge=*/true)) out.exceptions_[p] = e;
        out.normalize();
        return out;
    }

private:
    static void require_prime(Int p) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    }

    static Exponent parse_exponent(std::string_view e) {
        if (e == "inf") return Exponent::infinity();
        Int v = parse_int(e);
        if (v < 0) throw std::invalid_argument("negative exponent");
        return Exponent(static_cast<unsigned>(v));
    }

    static std::map<Int, Exponent> parse_factors(const std::string& s, bool allow_merge) {
        std::map<Int, Exponent> out;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto star = s.find('*', pos);
            std::string f = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            if (f.empty()) throw std::invalid_argument("malformed supernatural '" + s + "'");
            auto caret = f.find('^');
            Int p = parse_int(f.substr(0, caret));
            Exponent e = caret == std::string::npos ? Exponent(1) : parse_exponent(f.substr(caret + 1));
            if (!is_prime(p)) {
                if (caret != std::string::npos || !allow_merge || p < 1)
                    throw std::invalid_argument("supernatural factor " + std::to_string(p) + " is not prime");
                for (auto [q, k] : factorize(p)) out[q] = out[q] + Exponent(k);
            } else if (auto it = out.find(p); it != out.end()) {
                if (!allow_merge) throw std::invalid_argument("repeated prime in supernatural");
                it->second = it->second + e;
            } else {
                out[p] = e;
            }
            if (star == std::string::npos) break;
            pos = star + 1;
        }
        return out;
    }

    template <class Op>
    static Supernatural combine(const Supernatural& m, const Supernatural& n, Op op) {
        Supernatural out;
        out.default_ = op(m.default_, n.default_);
        for (auto& [p, e] : m.exceptions_) out.exceptions_[p] = op(e, n.exponent(p));
        for (auto& [p, e] : n.exceptions_) out.exceptions_[p] = op(m.exponent(p), e);
        out.normalize();
        return out;
    }

    std::string factor_list() const {
        std::string out;
        for (auto& [p, e] : exceptions_) {
            if (!out.empty()) out += "*";
            out += std::to_string(p) + "^" + e.to_string();
        }
        return out.empty() ? "1" : out;
    }

    void normalize() {
        std::erase_if(exceptions_, [this](const auto& kv) { return kv.second == default_; });
    }

    Exponent default_{0};
    std::map<Int, Exponent> exceptions_;
};

inline std::ostream& operator<<(std::ostream& os, const Supernatural& s) { return os << s.to_string(); }

/// Solves x ≡ r1 (mod m1), x ≡ r2 (mod m2); returns (x mod lcm, lcm) or nullopt if inconsistent.
inline std::optional<std::pair<Int, Int>> crt(Int r1, Int m1, Int r2, Int m2) {
    r1 = floor_mod(r1, m1);
    r2 = floor_mod(r2, m2);
    // extended gcd on m1, m2
    __int128 old_r = m1, r = m2, old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    Int g = static_cast<Int>(old_r);
    if ((r2 - r1) % g != 0) return std::nullopt;
    Int l = lcm_checked(m1, m2);
    __int128 k = (static_cast<__int128>(r2 - r1) / g) * old_s % (m2 / g);
    __int128 x = static_cast<__int128>(r1) + k * m1;
    x %= l;
    if (x < 0) x += l;
    return std::make_pair(static_cast<Int>(x), l);
}

// ---------------------------------------------------------------------------
// Profinite residues
// ---------------------------------------------------------------------------

namespace detail {

class ResidueSource {
public:
    virtual ~ResidueSource() = default;
    /// r(a) in [0, a); a is a finite divisor of the modulus.
    virtual Int query(Int a) const = 0;
    virtual std::optional<Int> integer() const { return std::nullopt; }
    virtual std::string describe() const = 0;
};

class IntegerResidue final : public ResidueSource {
public:
    explicit IntegerResidue(Int m) : m_(m) {}
    Int query(Int a) const override { return floor_mod(m_, a); }
    std::optional<Int> integer() const override { return m_; }
    std::string describe() const override { return std::to_string(m_); }

private:
    Int m_;
};

class TableResidue final : public ResidueSource {
public:
    explicit TableResidue(std::vector<std::pair<Int, Int>> entries) : entries_(std::move(entries)) {}

    Int query(Int a) const override {
        Int value = 0, modulus = 1;
        for (auto [p, e] : factorize(a)) {
            Int pe = ipow(p, e);
            auto it = std::find_if(entries_.begin(), entries_.end(),
                                   [pe](const auto& kv) { return kv.first % pe == 0; });
            if (it == entries_.end())
                throw std::domain_error("residue table does not determine r(" + std::to_string(a) + ")");
            auto joined = crt(value, modulus, floor_mod(it->second, pe), pe);
            value = joined->first;
            modulus = joined->second;
        }
        return floor_mod(value, a);
    }

    std::string describe() const override {
        std::string out;
        for (auto& [a, r] : entries_) {
            if (!out.empty()) out += ",";
            out += std::to_string(a) + ":" + std::to_string(r);
        }
        return out;
    }

    const std::vector<std::pair<Int, Int>>& entries() const { return entries_; }

private:
    std::vector<std::pair<Int, Int>> entries_;
};

/// The residue w + y·r in Z/(yN), for y = u/v, defined when w + y·r(v) is integral.
class AffineImageResidue final : public ResidueSource {
public:
    AffineImageResidue(std::shared_ptr<const ResidueSource> base, Rational w, Rational y)
        : base_(std::move(base)), w_(w), y_(y) {}

    Int query(Int b) const override {
        Int u = y_.num(), v = y_.den();
        Int a = checked_mul(v, b / std::gcd(u, b));
        Rational image = w_ + y_ * Rational(base_->query(a));
        if (!image.is_integer()) throw std::domain_error("affine image residue is not integral");
        return floor_mod(image.num(), b);
    }

    std::string describe() const override {
        return "(" + w_.to_string() + ")+(" + y_.to_string() + ")*[" + base_->describe() + "]";
    }

private:
    std::shared_ptr<const ResidueSource> base_;
    Rational w_, y_;
};

}  // namespace detail

/// An element r of Z/N, accessed through its finite reductions r(a) for a | N.
/// Residues with finite modulus are always stored as their integer representative in [0, N).
class ProfiniteResidue {
public:
    static ProfiniteResidue from_integer(Int m, Supernatural modulus) {
        if (auto n = modulus.to_integer()) m = floor_mod(m, *n);
        return ProfiniteResidue(std::move(modulus), std::make_shared<detail::IntegerResidue>(m));
    }

    /// A coherent table {a_i: r_i}; every a_i must divide the modulus.
    /// When the modulus is finite the table must determine r(N).
    static ProfiniteResidue from_table(std::vector<std::pair<Int, Int>> entries, Supernatural modulus) {
        for (auto& [a, r] : entries) {
            if (a < 1 || !modulus.divisible_by(a))
                throw std::invalid_argument("table entry " + std::to_string(a) + " does not divide the modulus");
            r = floor_mod(r, a);
        }
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                Int g = std::gcd(entries[i].first, entries[j].first);
                if (floor_mod(entries[i].second, g) != floor_mod(entries[j].second, g))
                    throw std::invalid_argument("residue table is not coherent");
            }
        auto table = std::make_shared<detail::TableResidue>(std::move(entries));
        if (auto n = modulus.to_integer()) return from_integer(table->query(*n), std::move(modulus));
        return ProfiniteResidue(std::move(modulus), std::move(table));
    }

    const Supernatural& modulus() const { return modulus_; }

    Int residue(Int a) const {
        if (a < 1 || !modulus_.divisible_by(a))
            throw std::domain_error("residue queried at " + std::to_string(a) + ", which does not divide " +
                                    modulus_.to_string());
        return source_->query(a);
    }

    /// The image r(M) in Z/M for M | modulus.
    ProfiniteResidue reduce(const Supernatural& m) const {
        if (!divides(m, modulus_)) throw std::domain_error("reduction to a non-divisor of the modulus");
        if (auto n = m.to_integer()) return from_integer(residue(*n), m);
        return ProfiniteResidue(m, source_);
    }

    /// w + y·r in Z/(yN), or nullopt when yN is not a supernatural or the image is not integral.
    std::optional<ProfiniteResidue> affine_image(const Rational& w, const Rational& y) const {
        auto new_modulus = modulus_.scaled(y);
        if (!new_modulus) return std::nullopt;
        Rational probe = w + y * Rational(residue(y.den()));
        if (!probe.is_integer()) return std::nullopt;
        if (auto m = source_->integer()) {
            Rational image = w + y * Rational(*m);
            return from_integer(image.num(), *new_modulus);
        }
        auto source = std::make_shared<detail::AffineImageResidue>(source_, w, y);
        if (auto n = new_modulus->to_integer()) return from_integer(source->query(*n), *new_modulus);
        return ProfiniteResidue(*new_modulus, std::move(source));
    }

    /// The integer this residue embeds, when it is an integer embedding
    /// (always the case for finite modulus, where the value lies in [0, N)).
    std::optional<Int> integer_representative() const { return source_->integer(); }

    /// r(a), or nothing when a table source does not pin it down.
    std::optional<Int> try_residue(Int a) const {
        try {
            return residue(a);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }

    bool agrees_on(const ProfiniteResidue& other, std::span<const Int> divisors) const {
        return std::all_of(divisors.begin(), divisors.end(),
                           [&](Int a) { return residue(a) == other.residue(a); });
    }

    std::string to_string() const { return source_->describe(); }

private:
    ProfiniteResidue(Supernatural modulus, std::shared_ptr<const detail::ResidueSource> source)
        : modulus_(std::move(modulus)), source_(std::move(source)) {}

    Supernatural modulus_;
    std::shared_ptr<const detail::ResidueSource> source_;
};

}  // namespace axb

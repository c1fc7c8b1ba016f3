/*
   Copyright 2026 The convgoppa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONVGOPPA_GF_HPP
#define CONVGOPPA_GF_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convgoppa/error.hpp"

namespace convgoppa {

/// Packed field element: the base-p digits of the value are the coefficients
/// of its polynomial-basis representation, lowest degree first.
using elem_t = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Dense polynomial over GF(p), lowest degree first, no trailing zeros.
using PrimePoly = std::vector<unsigned>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly unpack(std::uint64_t v, unsigned p) {
    PrimePoly out;
    for (; v; v /= p) out.push_back(static_cast<unsigned>(v % p));
    return out;
}

inline std::uint64_t pack(const PrimePoly& a, unsigned p) {
    std::uint64_t v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * p + *it;
    return v;
}

inline unsigned inverse_mod(unsigned a, unsigned p) {
    // p is prime and small, Fermat is plenty fast
    unsigned long long r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

/// Remainder of a modulo m over GF(p); m must be nonzero.
inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, unsigned p) {
    trim(a);
    const unsigned lead_inv = inverse_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const unsigned c = static_cast<unsigned>(1ull * a.back() * lead_inv % p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<unsigned>((a[shift + i] + 1ull * (p - c) * m[i]) % p);
        trim(a);
    }
    return a;
}

inline PrimePoly poly_mul(const PrimePoly& a, const PrimePoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<unsigned>((r[i + j] + 1ull * a[i] * b[j]) % p);
    trim(r);
    return r;
}

/// Irreducibility by trial division against every monic polynomial of
/// degree at most deg(f)/2.
inline bool is_irreducible(const PrimePoly& f, unsigned p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t lo = 1;
        for (std::size_t i = 0; i < d; ++i) lo *= p;
        for (std::uint64_t v = lo; v < 2 * lo; ++v)
            if (poly_mod(f, unpack(v, p), p).empty()) return false;
    }
    return true;
}

struct DefaultModulus {
    unsigned p;
    unsigned m;
    std::uint32_t packed;  // base-p packing including the leading term
};

// Lowest packed value primitive polynomial per (p, m); for m = 1 the modulus x.
inline constexpr std::array<DefaultModulus, 27> kDefaultModuli{{
    {2, 1, 2},    {2, 2, 7},    {2, 3, 11},    {2, 4, 19},    {2, 5, 37},
    {2, 6, 67},   {2, 7, 131},  {2, 8, 285},   {3, 1, 3},     {3, 2, 14},
    {3, 3, 34},   {3, 4, 86},   {3, 5, 250},   {3, 6, 734},   {3, 7, 2203},
    {3, 8, 6590}, {5, 1, 5},    {5, 2, 32},    {5, 3, 142},   {5, 4, 662},
    {5, 5, 3147}, {5, 6, 15632}, {7, 1, 7},    {7, 2, 59},    {7, 3, 366},
    {7, 4, 2476}, {7, 5, 16818},
}};

inline void skip_space(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

inline std::string_view trim_view(std::string_view s) {
    skip_space(s);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool parse_uint(std::string_view s, std::uint64_t& out) {
    s = trim_view(s);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

/// GF(p^m) with log/antilog tables keyed by a fixed primitive element.
///
/// Elements are packed integers in [0, q). Addition uses XOR in
/// characteristic 2, residues for prime fields and Zech logarithms
/// otherwise, so every operation is a table lookup.
class FiniteField {
  public:
    /// `modulus_msb_first` lists c_m, ..., c_0 of a monic degree-m polynomial.
    static FieldPtr create(unsigned p, unsigned m, std::span<const unsigned> modulus_msb_first) {
        if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
        if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxFieldOrder)
                throw Error(ErrorKind::TooLarge, "field order exceeds 2^16");
        }
        if (modulus_msb_first.size() != m + 1)
            throw Error(ErrorKind::InvalidArgument, "modulus must have degree " + std::to_string(m));
        detail::PrimePoly f(modulus_msb_first.rbegin(), modulus_msb_first.rend());
        for (unsigned c : f)
            if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
        if (f.back() != 1) throw Error(ErrorKind::InvalidArgument, "modulus must be monic");
        if (!detail::is_irreducible(f, p))
            throw Error(ErrorKind::Reducible, "modulus is reducible over GF(" + std::to_string(p) + ")");
        return FieldPtr(new FiniteField(p, m, static_cast<std::uint32_t>(q), std::move(f)));
    }

    /// The shipped modulus for (p, m); orders outside the table fall back to
    /// the lowest packed primitive polynomial found by search.
    static std::vector<unsigned> default_modulus(unsigned p, unsigned m) {
        for (const auto& d : detail::kDefaultModuli)
            if (d.p == p && d.m == m) {
                auto c = detail::unpack(d.packed, p);
                return {c.rbegin(), c.rend()};
            }
        if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
        if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxFieldOrder) throw Error(ErrorKind::TooLarge, "field order exceeds 2^16");
        }
        if (m == 1) return {1, 0};
        const auto factors = detail::prime_factors(q - 1);
        for (std::uint64_t v = q; v < 2 * q; ++v) {
            auto f = detail::unpack(v, p);
            if (f[0] == 0 || !detail::is_irreducible(f, p)) continue;
            bool primitive = true;
            for (auto r : factors)
                if (x_power_is_one(f, p, (q - 1) / r)) { primitive = false; break; }
            if (primitive) return {f.rbegin(), f.rend()};
        }
        throw Error(ErrorKind::Internal, "no primitive polynomial found");
    }

    static FieldPtr standard(unsigned p, unsigned m) {
        const auto mod = default_modulus(p, m);
        return create(p, m, mod);
    }

    /// GF(q) with the shipped modulus; q must be a prime power.
    static FieldPtr of_order(std::uint64_t q) {
        if (q < 2) throw Error(ErrorKind::InvalidArgument, "field order must be at least 2");
        const auto f = detail::prime_factors(q);
        if (f.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
        unsigned m = 0;
        for (std::uint64_t r = q; r > 1; r /= f[0]) ++m;
        return standard(static_cast<unsigned>(f[0]), m);
    }

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Monic modulus, lowest degree first.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    elem_t generator() const noexcept { return generator_; }
    bool contains(elem_t a) const noexcept { return a < q_; }

    bool operator==(const FiniteField& o) const noexcept { return p_ == o.p_ && modulus_ == o.modulus_; }

    elem_t add(elem_t a, elem_t b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            const elem_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log_[a];
        std::uint32_t d = log_[b] + (q_ - 1) - la;
        if (d >= q_ - 1) d -= q_ - 1;
        const std::uint32_t z = zech_[d];
        return z == kNoLog ? 0 : exp_[la + z];
    }

    elem_t neg(elem_t a) const noexcept {
        if (p_ == 2 || a == 0) return a;
        if (m_ == 1) return p_ - a;
        return exp_[log_[a] + (q_ - 1) / 2];
    }

    elem_t sub(elem_t a, elem_t b) const noexcept { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    elem_t inv(elem_t a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        const std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }

    elem_t div(elem_t a, elem_t b) const {
        if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
        if (a == 0) return 0;
        return exp_[log_[a] + (q_ - 1) - log_[b]];
    }

    elem_t pow(elem_t a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
    }

    /// Discrete log base the generator; a must be nonzero.
    std::uint32_t log(elem_t a) const noexcept { return log_[a]; }
    /// generator^k, k reduced modulo q-1.
    elem_t exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }

    /// Image of an integer in the prime subfield.
    elem_t from_int(long long n) const noexcept {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<elem_t>(r);
    }

    /// Polynomial-basis coordinates, lowest degree first, always m of them.
    std::vector<unsigned> digits(elem_t a) const {
        std::vector<unsigned> d(m_, 0);
        for (unsigned i = 0; i < m_; ++i, a /= p_) d[i] = a % p_;
        return d;
    }

    /// All q elements: 0 first, then generator^0 ... generator^(q-2).
    const std::vector<elem_t>& elements() const noexcept { return elements_; }

    /// Position of a in elements().
    std::size_t index_of(elem_t a) const noexcept { return a == 0 ? 0 : log_[a] + 1; }

    /// Minimal polynomial of a over GF(p), lowest degree first, monic.
    std::vector<unsigned> minimal_polynomial(elem_t a) const {
        std::vector<elem_t> conj{a};
        for (elem_t c = pow(a, p_); c != a; c = pow(c, p_)) conj.push_back(c);
        std::vector<elem_t> poly{1};  // coefficients in this field
        for (elem_t c : conj) {
            std::vector<elem_t> next(poly.size() + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = add(next[i + 1], poly[i]);
                next[i] = sub(next[i], mul(c, poly[i]));
            }
            poly = std::move(next);
        }
        std::vector<unsigned> out;
        for (elem_t c : poly) {
            if (c >= p_) throw Error(ErrorKind::Internal, "minimal polynomial left the prime field");
            out.push_back(c);
        }
        return out;
    }

    /// Element text: integers for prime fields; 0, 1, a, a^k otherwise.
    std::string format(elem_t a) const {
        if (m_ == 1 || a <= 1) return std::to_string(a);
        const std::uint32_t k = log_[a];
        return k == 1 ? std::string("a") : "a^" + std::to_string(k);
    }

    /// Accepts 0, 1, integers (reduced mod p), a, a^k, each optionally negated.
    elem_t parse(std::string_view text) const {
        std::string_view s = detail::trim_view(text);
        bool negate = false;
        if (!s.empty() && s.front() == '-') {
            negate = true;
            s = detail::trim_view(s.substr(1));
        }
        elem_t v = 0;
        std::uint64_t n = 0;
        if (s == "a") {
            v = generator_;
        } else if (s.size() > 1 && s.front() == 'a' && detail::trim_view(s.substr(1)).starts_with('^')) {
            auto rest = detail::trim_view(s.substr(1)).substr(1);
            if (!detail::parse_uint(rest, n))
                throw Error(ErrorKind::Parse, "bad exponent in element '" + std::string(text) + "'");
            v = exp(n);
        } else if (detail::parse_uint(s, n)) {
            v = static_cast<elem_t>(n % p_);
        } else {
            throw Error(ErrorKind::Parse, "cannot parse field element '" + std::string(text) + "'");
        }
        return negate ? neg(v) : v;
    }

    /// `gf(q)` when the modulus is the shipped default, else the explicit form.
    std::string spec() const {
        const auto def = default_modulus(p_, m_);
        const std::vector<unsigned> msb(modulus_.rbegin(), modulus_.rend());
        if (msb == def) return "gf(" + std::to_string(q_) + ")";
        std::string s = "gf(" + std::to_string(p_) + "^" + std::to_string(m_) + "; modulus=";
        for (std::size_t i = 0; i < msb.size(); ++i) s += (i ? "," : "") + std::to_string(msb[i]);
        return s + ")";
    }

  private:
    static constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

    static bool x_power_is_one(const detail::PrimePoly& f, unsigned p, std::uint64_t e) {
        detail::PrimePoly r{1}, base{0, 1};
        for (; e; e >>= 1) {
            if (e & 1) r = detail::poly_mod(detail::poly_mul(r, base, p), f, p);
            base = detail::poly_mod(detail::poly_mul(base, base, p), f, p);
        }
        return r == detail::PrimePoly{1};
    }

    FiniteField(unsigned p, unsigned m, std::uint32_t q, std::vector<unsigned> modulus)
        : p_(p), m_(m), q_(q), modulus_(std::move(modulus)) {
        auto slow_mul = [&](elem_t a, elem_t b) {
            return static_cast<elem_t>(detail::pack(
                detail::poly_mod(detail::poly_mul(detail::unpack(a, p_), detail::unpack(b, p_), p_), modulus_, p_),
                p_));
        };
        auto slow_pow = [&](elem_t a, std::uint64_t e) {
            elem_t r = 1;
            for (; e; e >>= 1) {
                if (e & 1) r = slow_mul(r, a);
                a = slow_mul(a, a);
            }
            return r;
        };
        if (q_ == 2) {
            generator_ = 1;
        } else {
            const auto factors = detail::prime_factors(q_ - 1);
            generator_ = 0;
            for (elem_t c = 2; c < q_ && generator_ == 0; ++c) {
                bool ok = true;
                for (auto r : factors)
                    if (slow_pow(c, (q_ - 1) / r) == 1) { ok = false; break; }
                if (ok) generator_ = c;
            }
            if (generator_ == 0) throw Error(ErrorKind::Internal, "no primitive element");
        }
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, kNoLog);
        elem_t e = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            if (log_[e] != kNoLog) throw Error(ErrorKind::Internal, "generator order too small");
            exp_[i] = exp_[i + q_ - 1] = e;
            log_[e] = i;
            e = slow_mul(e, generator_);
        }
        log_[0] = 0;
        if (p_ != 2 && m_ > 1) {
            zech_.assign(q_ - 1, kNoLog);
            for (std::uint32_t k = 0; k < q_ - 1; ++k) {
                auto d = detail::unpack(exp_[k], p_);
                if (d.empty()) d.push_back(0);
                d[0] = (d[0] + 1) % p_;
                const auto s = static_cast<elem_t>(detail::pack(d, p_));
                zech_[k] = s == 0 ? kNoLog : log_[s];
            }
        }
        elements_.reserve(q_);
        elements_.push_back(0);
        for (std::uint32_t i = 0; i < q_ - 1; ++i) elements_.push_back(exp_[i]);
    }

    unsigned p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    elem_t generator_ = 1;
    std::vector<elem_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
    std::vector<elem_t> elements_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b)) throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
}

/// Parses `gf(q)`, `gf(p^m)` or `gf(p^m; modulus=c_m,...,c_0)`.
inline FieldPtr parse_field_spec(std::string_view text) {
    std::string_view s = detail::trim_view(text);
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::Parse, "bad field spec '" + std::string(text) + "': " + why);
    };
    if (!s.starts_with("gf(") || !s.ends_with(")")) throw fail("expected gf(...)");
    s = s.substr(3, s.size() - 4);
    std::string_view order = s, mod;
    if (auto semi = s.find(';'); semi != std::string_view::npos) {
        order = s.substr(0, semi);
        mod = detail::trim_view(s.substr(semi + 1));
        if (!mod.starts_with("modulus=")) throw fail("expected modulus=");
        mod.remove_prefix(8);
    }
    std::uint64_t p = 0, m = 1;
    if (auto caret = order.find('^'); caret != std::string_view::npos) {
        if (!detail::parse_uint(order.substr(0, caret), p) || !detail::parse_uint(order.substr(caret + 1), m))
            throw fail("bad order");
    } else {
        std::uint64_t q = 0;
        if (!detail::parse_uint(order, q) || q < 2) throw fail("bad order");
        const auto f = detail::prime_factors(q);
        if (f.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
        p = f[0];
        m = 0;
        for (std::uint64_t r = q; r > 1; r /= p) ++m;
    }
    if (m == 0 || m > 64) throw fail("bad extension degree");
    if (mod.empty()) {
        if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
        return FiniteField::standard(static_cast<unsigned>(p), static_cast<unsigned>(m));
    }
    std::vector<unsigned> coeffs;
    while (true) {
        auto comma = mod.find(',');
        std::uint64_t c = 0;
        if (!detail::parse_uint(mod.substr(0, comma), c)) throw fail("bad modulus coefficient");
        coeffs.push_back(static_cast<unsigned>(c));
        if (comma == std::string_view::npos) break;
        mod.remove_prefix(comma + 1);
    }
    return FiniteField::create(static_cast<unsigned>(p), static_cast<unsigned>(m), coeffs);
}

/// Value type pairing a packed element with its field.
class FieldElement {
  public:
    FieldElement(FieldPtr field, elem_t value) : field_(std::move(field)), value_(value) {
        if (!field_->contains(value_)) throw Error(ErrorKind::InvalidArgument, "element out of range");
    }

    static FieldElement zero(const FieldPtr& f) { return {f, 0}; }
    static FieldElement one(const FieldPtr& f) { return {f, 1}; }
    static FieldElement generator(const FieldPtr& f) { return {f, f->generator()}; }
    static FieldElement parse(const FieldPtr& f, std::string_view text) { return {f, f->parse(text)}; }

    const FieldPtr& field() const noexcept { return field_; }
    elem_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    /// Polynomial-basis residues, lowest degree first.
    std::vector<unsigned> coeffs() const { return field_->digits(value_); }
    std::string to_string() const { return field_->format(value_); }

    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        require_same_field(x.field_, y.field_);
        return {x.field_, x.field_->add(x.value_, y.value_)};
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        require_same_field(x.field_, y.field_);
        return {x.field_, x.field_->sub(x.value_, y.value_)};
    }
    friend FieldElement operator-(const FieldElement& x) { return {x.field_, x.field_->neg(x.value_)}; }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        require_same_field(x.field_, y.field_);
        return {x.field_, x.field_->mul(x.value_, y.value_)};
    }
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        require_same_field(x.field_, y.field_);
        return {x.field_, x.field_->div(x.value_, y.value_)};
    }
    friend bool operator==(const FieldElement& x, const FieldElement& y) noexcept {
        return x.value_ == y.value_ && same_field(x.field_, y.field_);
    }
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

  private:
    FieldPtr field_;
    elem_t value_;
};

/// All q elements in enumeration order.
inline std::vector<FieldElement> enumerate(const FieldPtr& f) {
    std::vector<FieldElement> out;
    out.reserve(f->order());
    for (elem_t e : f->elements()) out.emplace_back(f, e);
    return out;
}

/// Ring embedding GF(p^m) -> GF(p^M), m | M, fixed by where the source
/// generator goes: the first root, in target enumeration order, of its
/// minimal polynomial.
class FieldEmbedding {
  public:
    static FieldEmbedding create(FieldPtr source, FieldPtr target) {
        if (source->characteristic() != target->characteristic() || target->degree() % source->degree() != 0)
            throw Error(ErrorKind::FieldMismatch, "no embedding " + source->spec() + " -> " + target->spec());
        const auto minpoly = source->minimal_polynomial(source->generator());
        const FiniteField& t = *target;
        elem_t image = 0;
        bool found = false;
        for (elem_t x : t.elements()) {
            elem_t acc = 0;
            for (auto it = minpoly.rbegin(); it != minpoly.rend(); ++it) acc = t.add(t.mul(acc, x), *it);
            if (acc == 0) {
                image = x;
                found = true;
                break;
            }
        }
        if (!found) throw Error(ErrorKind::Internal, "minimal polynomial has no root in target");
        return FieldEmbedding(std::move(source), std::move(target), image);
    }

    const FieldPtr& source() const noexcept { return source_; }
    const FieldPtr& target() const noexcept { return target_; }
    FieldElement image_of_generator() const { return {target_, image_}; }

    elem_t map(elem_t x) const noexcept { return table_[x]; }

    FieldElement operator()(const FieldElement& x) const {
        if (!same_field(x.field(), source_))
            throw Error(ErrorKind::FieldMismatch, "element is not in the embedding source");
        return {target_, table_[x.value()]};
    }

  private:
    FieldEmbedding(FieldPtr source, FieldPtr target, elem_t image)
        : source_(std::move(source)), target_(std::move(target)), image_(image) {
        table_.assign(source_->order(), 0);
        for (std::uint32_t k = 0; k + 1 < source_->order(); ++k)
            table_[source_->exp(k)] = target_->pow(image_, k);
    }

    FieldPtr source_;
    FieldPtr target_;
    elem_t image_;
    std::vector<elem_t> table_;
};

inline FieldElement embed(const FieldEmbedding& e, const FieldElement& x) { return e(x); }

}  // namespace convgoppa

#endif

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

#ifndef CONVGOPPA_POLY_HPP
#define CONVGOPPA_POLY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convgoppa/gf.hpp"

namespace convgoppa {

/// Polynomial in z over a finite field. The zero polynomial has no
/// coefficients and degree() == std::nullopt, which stands for -infinity.
class FqPoly {
  public:
    explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
    FqPoly(FieldPtr field, std::vector<elem_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        for (elem_t x : c_)
            if (!field_->contains(x)) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
        trim();
    }

    static FqPoly constant(FieldPtr f, elem_t c) { return FqPoly(std::move(f), std::vector<elem_t>{c}); }
    static FqPoly monomial(FieldPtr f, elem_t c, std::size_t d) {
        std::vector<elem_t> v(d + 1, 0);
        v[d] = c;
        return FqPoly(std::move(f), std::move(v));
    }

    const FieldPtr& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    std::span<const elem_t> coeffs() const noexcept { return c_; }
    elem_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    elem_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    /// Number of nonzero coefficients.
    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (elem_t x : c_) w += x != 0;
        return w;
    }

    elem_t operator()(elem_t z) const noexcept {
        const FiniteField& f = *field_;
        elem_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f.add(f.mul(acc, z), *it);
        return acc;
    }

    FqPoly scaled(elem_t s) const {
        std::vector<elem_t> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], s);
        return FqPoly(field_, std::move(v));
    }

    /// this * z^d
    FqPoly shifted(std::size_t d) const {
        if (c_.empty()) return *this;
        std::vector<elem_t> v(d, 0);
        v.insert(v.end(), c_.begin(), c_.end());
        return FqPoly(field_, std::move(v));
    }

    FqPoly monic() const {
        if (c_.empty()) return *this;
        return scaled(field_->inv(c_.back()));
    }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b) {
        require_same_field(a.field_, b.field_);
        const FiniteField& f = *a.field_;
        std::vector<elem_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
        return FqPoly(a.field_, std::move(v));
    }

    friend FqPoly operator-(const FqPoly& a, const FqPoly& b) {
        require_same_field(a.field_, b.field_);
        const FiniteField& f = *a.field_;
        std::vector<elem_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
        return FqPoly(a.field_, std::move(v));
    }

    friend FqPoly operator*(const FqPoly& a, const FqPoly& b) {
        require_same_field(a.field_, b.field_);
        if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
        const FiniteField& f = *a.field_;
        std::vector<elem_t> v(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return FqPoly(a.field_, std::move(v));
    }

    friend bool operator==(const FqPoly& a, const FqPoly& b) noexcept {
        return a.c_ == b.c_ && same_field(a.field_, b.field_);
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<elem_t> c_;
};

/// Quotient and remainder of Euclidean division.
inline std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const FiniteField& f = *a.field();
    std::vector<elem_t> r(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    if (r.size() < bc.size()) return {FqPoly(a.field()), a};
    std::vector<elem_t> q(r.size() - db, 0);
    const elem_t lead_inv = f.inv(bc.back());
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        const elem_t c = f.mul(r[i], lead_inv);
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
    }
    return {FqPoly(a.field(), std::move(q)), FqPoly(a.field(), std::move(r))};
}

/// Monic gcd by Euclid.
inline FqPoly poly_gcd(FqPoly a, FqPoly b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monomials `c*z^d` in ascending degree joined by ` + `; "0" for zero.
inline std::string format_poly(const FqPoly& p) {
    if (p.is_zero()) return "0";
    const FiniteField& f = *p.field();
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t d = 0; d < c.size(); ++d) {
        if (c[d] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string zpart = d == 0 ? "" : d == 1 ? "z" : "z^" + std::to_string(d);
        if (d == 0)
            out += f.format(c[d]);
        else if (c[d] == 1)
            out += zpart;
        else
            out += f.format(c[d]) + "*" + zpart;
    }
    return out;
}

/// Inverse of format_poly; repeated degrees are summed, `-` separators
/// subtract.
inline FqPoly parse_poly(const FieldPtr& field, std::string_view text) {
    const FiniteField& f = *field;
    std::vector<elem_t> acc;
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::Parse, "bad polynomial '" + std::string(text) + "': " + why);
    };
    std::string_view s = detail::trim_view(text);
    if (s.empty()) throw fail("empty");
    bool negate = false;
    if (s.front() == '-') {
        negate = true;
        s.remove_prefix(1);
    }
    while (true) {
        std::size_t cut = s.find_first_of("+-");
        // a '-' right after '^' is never valid, so any +/- ends the monomial
        std::string_view mono = detail::trim_view(s.substr(0, cut));
        if (mono.empty()) throw fail("empty monomial");
        elem_t coeff = 1;
        std::size_t deg = 0;
        std::string_view zpart;
        if (auto star = mono.find('*'); star != std::string_view::npos) {
            coeff = f.parse(mono.substr(0, star));
            zpart = detail::trim_view(mono.substr(star + 1));
            if (!zpart.starts_with('z')) throw fail("expected z after '*'");
        } else if (mono.starts_with('z')) {
            zpart = mono;
        } else {
            coeff = f.parse(mono);
        }
        if (!zpart.empty()) {
            std::string_view rest = detail::trim_view(zpart.substr(1));
            deg = 1;
            if (!rest.empty()) {
                if (rest.front() != '^') throw fail("expected '^'");
                std::uint64_t d = 0;
                if (!detail::parse_uint(rest.substr(1), d) || d > 1'000'000) throw fail("bad exponent");
                deg = static_cast<std::size_t>(d);
            }
        }
        if (acc.size() <= deg) acc.resize(deg + 1, 0);
        acc[deg] = negate ? f.sub(acc[deg], coeff) : f.add(acc[deg], coeff);
        if (cut == std::string_view::npos) break;
        negate = s[cut] == '-';
        s.remove_prefix(cut + 1);
    }
    return FqPoly(field, std::move(acc));
}

}  // namespace convgoppa

#endif

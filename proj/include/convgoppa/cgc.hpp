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

#ifndef CONVGOPPA_CGC_HPP
#define CONVGOPPA_CGC_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "convgoppa/code.hpp"
#include "convgoppa/gf.hpp"
#include "convgoppa/polymat.hpp"

namespace convgoppa {

/// Point with affine coordinate a*z + b on the projective line.
struct Point {
    elem_t a;
    elem_t b;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// One-dimensional convolutional Goppa code data: points and s(t) = sum l_j t^j.
struct CgcSpec {
    FieldPtr field;
    std::vector<Point> points;
    std::vector<elem_t> lambda;

    std::size_t length() const noexcept { return points.size(); }
    std::size_t delta() const noexcept { return lambda.empty() ? 0 : lambda.size() - 1; }

    /// Throws InvalidArgument unless the points are distinct with a != 0,
    /// delta < n and lambda is nonzero.
    void validate() const {
        if (!field) throw Error(ErrorKind::InvalidArgument, "no field");
        if (points.empty()) throw Error(ErrorKind::InvalidArgument, "no points");
        if (lambda.empty()) throw Error(ErrorKind::InvalidArgument, "empty lambda");
        if (delta() >= length()) throw Error(ErrorKind::InvalidArgument, "delta must be smaller than the number of points");
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            if (!field->contains(p.a) || !field->contains(p.b))
                throw Error(ErrorKind::InvalidArgument, "point coordinate out of range");
            if (p.a == 0) throw Error(ErrorKind::InvalidArgument, "point " + std::to_string(i + 1) + " has a = 0");
            for (std::size_t j = 0; j < i; ++j)
                if (points[j] == p)
                    throw Error(ErrorKind::InvalidArgument, "points " + std::to_string(j + 1) + " and " +
                                                                std::to_string(i + 1) + " coincide");
        }
        for (elem_t x : lambda)
            if (!field->contains(x)) throw Error(ErrorKind::InvalidArgument, "lambda entry out of range");
        if (std::all_of(lambda.begin(), lambda.end(), [](elem_t x) { return x == 0; }))
            throw Error(ErrorKind::InvalidArgument, "lambda is zero");
    }
};

/// C(n, k) mod p by Lucas' theorem.
inline unsigned binomial_mod_p(std::uint64_t n, std::uint64_t k, unsigned p) {
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        std::uint64_t c = 1;
        for (std::uint64_t i = 0; i < ki; ++i) c = c * (ni - i) / (i + 1);
        result = result * (c % p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<unsigned>(result);
}

/// s^{(j)}(t0) = sum_{r >= j} C(r, j) l_r t0^{r-j}.
inline elem_t hasse_eval(const FiniteField& f, std::span<const elem_t> lambda, std::size_t j, elem_t t0) {
    elem_t acc = 0;
    for (std::size_t r = lambda.size(); r-- > j;) {
        const elem_t c = f.from_int(binomial_mod_p(r, j, f.characteristic()));
        acc = f.add(f.mul(acc, t0), f.mul(c, lambda[r]));
    }
    return acc;
}

inline elem_t hasse_eval(const CgcSpec& spec, std::size_t j, elem_t t0) {
    return hasse_eval(*spec.field, spec.lambda, j, t0);
}

/// No two entries s(a_i z + b_i), s(a_j z + b_j) share a root: for a_i != a_j
/// the shared point is t0 = (a_i b_j - a_j b_i)/(a_i - a_j), and s(t0) != 0
/// is tested in homogeneous form.
inline bool in_parameter_space(const CgcSpec& spec) {
    const FiniteField& f = *spec.field;
    const std::size_t d = spec.delta();
    for (std::size_t i = 0; i < spec.points.size(); ++i)
        for (std::size_t j = i + 1; j < spec.points.size(); ++j) {
            const auto& pi = spec.points[i];
            const auto& pj = spec.points[j];
            if (pi.a == pj.a) continue;
            const elem_t u = f.sub(f.mul(pi.a, pj.b), f.mul(pj.a, pi.b));
            const elem_t w = f.sub(pi.a, pj.a);
            elem_t sum = 0;
            for (std::size_t k = 0; k <= d; ++k)
                sum = f.add(sum, f.mul(spec.lambda[k], f.mul(f.pow(u, k), f.pow(w, d - k))));
            if (sum == 0) return false;
        }
    return true;
}

/// Entry i is s(a_i z + b_i) = sum_j a_i^j s^{(j)}(b_i) z^j.
inline PolyMatrix generator_matrix(const CgcSpec& spec) {
    spec.validate();
    const FiniteField& f = *spec.field;
    PolyMatrix g(spec.field, 1, spec.length());
    for (std::size_t i = 0; i < spec.length(); ++i) {
        std::vector<elem_t> c(spec.delta() + 1);
        for (std::size_t j = 0; j <= spec.delta(); ++j)
            c[j] = f.mul(f.pow(spec.points[i].a, j), hasse_eval(spec, j, spec.points[i].b));
        g.at(0, i) = FqPoly(spec.field, std::move(c));
    }
    return g;
}

inline ConvCode build(const CgcSpec& spec) {
    spec.validate();
    if (!in_parameter_space(spec))
        throw Error(ErrorKind::OutsideParameterSpace, "two entries of the generator share a root");
    return new_code(generator_matrix(spec));
}

/// With a common b: MDS iff s^{(j)}(b) != 0 for every j.
inline bool mds_criterion_equal_b(const CgcSpec& spec) {
    spec.validate();
    const elem_t b = spec.points.front().b;
    for (const auto& p : spec.points)
        if (p.b != b) throw Error(ErrorKind::PreconditionViolated, "points do not share b");
    for (std::size_t j = 0; j <= spec.delta(); ++j)
        if (hasse_eval(spec, j, b) == 0) return false;
    return true;
}

/// Representatives of P^dim with first nonzero coordinate 1, in
/// lexicographic order over the field enumeration.
inline std::vector<std::vector<elem_t>> projective_points(const FiniteField& f, std::size_t dim) {
    const auto& el = f.elements();
    const std::size_t len = dim + 1;
    std::vector<std::vector<elem_t>> out;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
        std::size_t lead = 0;
        while (lead < len && idx[lead] == 0) ++lead;
        if (lead < len && idx[lead] == 1) {
            std::vector<elem_t> v(len);
            for (std::size_t i = 0; i < len; ++i) v[i] = el[idx[i]];
            out.push_back(std::move(v));
        }
        std::size_t pos = len;
        while (pos > 0 && ++idx[pos - 1] == el.size()) idx[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

}  // namespace convgoppa

#endif

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

#ifndef CONVGOPPA_CODE_HPP
#define CONVGOPPA_CODE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "convgoppa/gf.hpp"
#include "convgoppa/poly.hpp"
#include "convgoppa/polymat.hpp"

namespace convgoppa {

namespace detail {

inline std::vector<FqPoly> nonzero_minors_or_throw(const PolyMatrix& g) {
    if (g.rows() == 0) throw Error(ErrorKind::ShapeError, "generator matrix has no rows");
    if (g.rows() > g.cols()) throw Error(ErrorKind::ShapeError, "more rows than columns");
    auto minors = maximal_minors(g);
    std::erase_if(minors, [](const FqPoly& p) { return p.is_zero(); });
    if (minors.empty()) throw Error(ErrorKind::RankDeficient, "generator matrix is not of full row rank");
    return minors;
}

}  // namespace detail

/// Basic: the maximal minors are coprime.
inline bool is_basic(const PolyMatrix& g) {
    const auto minors = detail::nonzero_minors_or_throw(g);
    FqPoly acc = minors.front();
    for (std::size_t i = 1; i < minors.size() && acc.degree().value_or(0) > 0; ++i) acc = poly_gcd(acc, minors[i]);
    return acc.degree() == std::size_t{0};
}

/// Reduced: the leading row coefficient matrix has full rank.
inline bool is_reduced(const PolyMatrix& g) {
    detail::nonzero_minors_or_throw(g);
    return scalar_rank(leading_row_matrix(g)) == g.rows();
}

/// Lowers row degrees by elementary row operations until the leading row
/// coefficient matrix has full rank. Each step strictly lowers the total
/// row degree, so the loop terminates.
inline PolyMatrix to_canonical(PolyMatrix g) {
    if (!is_basic(g)) throw Error(ErrorKind::NotBasic, "maximal minors share a common factor");
    const FiniteField& f = *g.field();
    const std::size_t k = g.rows(), n = g.cols();
    while (true) {
        const ScalarMatrix lead = leading_row_matrix(g);
        // Reduce [lead | I] to find c with c * lead = 0.
        ScalarMatrix aug(g.field(), k, n + k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = lead.at(r, c);
            aug.at(r, n + r) = 1;
        }
        row_reduce(aug);
        std::optional<std::size_t> dep;
        for (std::size_t r = 0; r < k && !dep; ++r) {
            bool zero_left = true;
            for (std::size_t c = 0; c < n && zero_left; ++c) zero_left = aug.at(r, c) == 0;
            if (zero_left) dep = r;
        }
        if (!dep) break;
        const auto combo = aug.row(*dep).subspan(n);
        std::size_t target = k;
        std::size_t target_deg = 0;
        for (std::size_t r = 0; r < k; ++r) {
            if (combo[r] == 0) continue;
            const std::size_t d = g.row_degree(r).value();
            if (target == k || d > target_deg) {
                target = r;
                target_deg = d;
            }
        }
        const elem_t scale = f.inv(combo[target]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == target || combo[r] == 0) continue;
            const std::size_t gap = target_deg - g.row_degree(r).value();
            const elem_t s = f.mul(combo[r], scale);
            for (std::size_t c = 0; c < n; ++c)
                g.at(target, c) = g.at(target, c) + g.at(r, c).scaled(s).shifted(gap);
        }
    }
    return g;
}

inline std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t delta) {
    return (n - k) * (delta / k + 1) + delta + 1;
}

struct ClassificationParams {
    std::size_t kappa;
    std::size_t mu_g;
};

/// Convolutional code with a validated canonical generator matrix.
class ConvCode {
  public:
    /// Canonicalizes `g` and caches the structural invariants.
    static ConvCode create(PolyMatrix g) {
        ConvCode c(to_canonical(std::move(g)));
        return c;
    }

    const PolyMatrix& generator() const noexcept { return gen_; }
    const FieldPtr& field() const noexcept { return gen_.field(); }
    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dimension() const noexcept { return gen_.rows(); }
    std::size_t degree() const noexcept { return delta_; }
    std::size_t memory() const noexcept { return memory_; }
    /// Row degrees of the canonical matrix, ascending.
    const std::vector<std::size_t>& forney_indices() const noexcept { return forney_; }
    /// Per-column max entry degree of the stored matrix (0 for a zero column).
    /// This is not the supremum over all canonical matrices of the code.
    const std::vector<std::size_t>& column_degrees() const noexcept { return column_degrees_; }

    std::size_t singleton_bound() const noexcept { return convgoppa::singleton_bound(length(), dimension(), delta_); }

    ClassificationParams classification_params() const noexcept {
        std::size_t mu = 0;
        for (auto d : column_degrees_) mu += d + 1;
        return {dimension() * (memory_ + 1) - delta_, mu};
    }

    friend bool operator==(const ConvCode& a, const ConvCode& b) noexcept { return a.gen_ == b.gen_; }

  private:
    explicit ConvCode(PolyMatrix g) : gen_(std::move(g)) {
        for (std::size_t r = 0; r < gen_.rows(); ++r) forney_.push_back(gen_.row_degree(r).value());
        std::sort(forney_.begin(), forney_.end());
        delta_ = std::accumulate(forney_.begin(), forney_.end(), std::size_t{0});
        memory_ = forney_.back();
        for (std::size_t c = 0; c < gen_.cols(); ++c) column_degrees_.push_back(gen_.column_degree(c).value_or(0));
        std::size_t minor_deg = 0;
        for (const auto& m : maximal_minors(gen_)) minor_deg = std::max(minor_deg, m.degree().value_or(0));
        if (minor_deg != delta_)
            throw Error(ErrorKind::Internal, "degree mismatch between Forney indices and maximal minors");
    }

    PolyMatrix gen_;
    std::size_t delta_ = 0;
    std::size_t memory_ = 0;
    std::vector<std::size_t> forney_;
    std::vector<std::size_t> column_degrees_;
};

inline ConvCode new_code(PolyMatrix g) { return ConvCode::create(std::move(g)); }

inline std::size_t singleton_bound(const ConvCode& c) { return c.singleton_bound(); }

inline ClassificationParams classification_params(const ConvCode& c) { return c.classification_params(); }

/// Entrywise image of a polynomial matrix under a field embedding.
inline PolyMatrix lift_matrix(const PolyMatrix& g, const FieldEmbedding& e) {
    if (!same_field(g.field(), e.source()))
        throw Error(ErrorKind::FieldMismatch, "matrix field is not the embedding source");
    PolyMatrix out(e.target(), g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) {
            std::vector<elem_t> v;
            for (elem_t x : g.at(r, c).coeffs()) v.push_back(e.map(x));
            out.at(r, c) = FqPoly(e.target(), std::move(v));
        }
    return out;
}

/// The same code read over the larger alphabet of `e.target()`.
inline ConvCode lift_code(const ConvCode& c, const FieldEmbedding& e) {
    return ConvCode::create(lift_matrix(c.generator(), e));
}

}  // namespace convgoppa

#endif

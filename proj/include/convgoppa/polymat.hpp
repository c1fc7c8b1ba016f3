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

#ifndef CONVGOPPA_POLYMAT_HPP
#define CONVGOPPA_POLYMAT_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "convgoppa/gf.hpp"
#include "convgoppa/poly.hpp"

namespace convgoppa {

/// Dense row-major matrix over a finite field.
class ScalarMatrix {
  public:
    ScalarMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    ScalarMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<elem_t> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error(ErrorKind::ShapeError, "data size does not match shape");
        for (elem_t x : data_)
            if (!field_->contains(x)) throw Error(ErrorKind::InvalidArgument, "entry out of range");
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    elem_t& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    elem_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::span<const elem_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<elem_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const elem_t> data() const noexcept { return data_; }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && same_field(a.field_, b.field_);
    }

  private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<elem_t> data_;
};

/// Reduced row echelon form in place; returns the rank.
inline std::size_t row_reduce(ScalarMatrix& m) {
    const FiniteField& f = *m.field();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const elem_t inv = f.inv(m.at(rank, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(rank, j) = f.mul(m.at(rank, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, c) == 0) continue;
            const elem_t s = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(s, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

inline std::size_t scalar_rank(ScalarMatrix m) { return row_reduce(m); }

/// The nonzero rows of the reduced echelon form: a basis of the row space.
inline ScalarMatrix row_basis(ScalarMatrix m) {
    const std::size_t r = row_reduce(m);
    std::vector<elem_t> d(m.data().begin(), m.data().begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
    return ScalarMatrix(m.field(), r, m.cols(), std::move(d));
}

inline elem_t scalar_determinant(ScalarMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
    const FiniteField& f = *m.field();
    elem_t det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(c, c));
        const elem_t inv = f.inv(m.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            const elem_t s = f.mul(m.at(i, c), inv);
            for (std::size_t j = c; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(s, m.at(c, j)));
        }
    }
    return det;
}

/// Matrix product of a row vector and a matrix.
inline std::vector<elem_t> row_times(std::span<const elem_t> v, const ScalarMatrix& m) {
    const FiniteField& f = *m.field();
    std::vector<elem_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
    }
    return out;
}

/// Stacks blocks vertically; all must share field and width.
inline ScalarMatrix vstack(std::span<const ScalarMatrix> blocks) {
    if (blocks.empty()) throw Error(ErrorKind::ShapeError, "nothing to stack");
    std::vector<elem_t> d;
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        require_same_field(b.field(), blocks[0].field());
        if (b.cols() != blocks[0].cols()) throw Error(ErrorKind::ShapeError, "column count mismatch");
        d.insert(d.end(), b.data().begin(), b.data().end());
        rows += b.rows();
    }
    return ScalarMatrix(blocks[0].field(), rows, blocks[0].cols(), std::move(d));
}

/// Total number of nonzero coefficients of a polynomial vector.
inline std::size_t weight(std::span<const FqPoly> v) {
    std::size_t w = 0;
    for (const auto& p : v) w += p.weight();
    return w;
}

/// k x n matrix of polynomials over one field.
class PolyMatrix {
  public:
    PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FqPoly(field_)) {}
    PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<FqPoly> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error(ErrorKind::ShapeError, "data size does not match shape");
        for (const auto& p : data_) require_same_field(p.field(), field_);
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FqPoly& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const FqPoly& at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::span<const FqPoly> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    /// Largest entry degree, nullopt for the zero matrix.
    std::optional<std::size_t> max_degree() const noexcept {
        std::optional<std::size_t> d;
        for (const auto& p : data_)
            if (auto pd = p.degree(); pd && (!d || *pd > *d)) d = pd;
        return d;
    }

    std::optional<std::size_t> row_degree(std::size_t r) const noexcept {
        std::optional<std::size_t> d;
        for (const auto& p : row(r))
            if (auto pd = p.degree(); pd && (!d || *pd > *d)) d = pd;
        return d;
    }

    std::optional<std::size_t> column_degree(std::size_t c) const noexcept {
        std::optional<std::size_t> d;
        for (std::size_t r = 0; r < rows_; ++r)
            if (auto pd = at(r, c).degree(); pd && (!d || *pd > *d)) d = pd;
        return d;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FqPoly> data_;
};

/// Square polynomial determinant by Laplace expansion along the first row.
inline FqPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return FqPoly::constant(m.field(), 1);
    if (n == 1) return m.at(0, 0);
    FqPoly det(m.field());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(m.field(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
        const FqPoly term = m.at(0, j) * det_cofactor(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Square polynomial determinant by fraction-free (Bareiss) elimination.
inline FqPoly det_bareiss(PolyMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeError, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const FieldPtr& f = m.field();
    if (n == 0) return FqPoly::constant(f, 1);
    bool negate = false;
    FqPoly prev = FqPoly::constant(f, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t i = k + 1;
            while (i < n && m.at(i, k).is_zero()) ++i;
            if (i == n) return FqPoly(f);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(i, j), m.at(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const FqPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                auto [quot, rem] = divmod(num, prev);
                if (!rem.is_zero()) throw Error(ErrorKind::Internal, "inexact Bareiss division");
                m.at(i, j) = std::move(quot);
            }
            m.at(i, k) = FqPoly(f);
        }
        prev = m.at(k, k);
    }
    FqPoly det = m.at(n - 1, n - 1);
    return negate ? FqPoly(f) - det : det;
}

/// Bareiss up to 6x6, cofactor expansion beyond.
inline FqPoly determinant(const PolyMatrix& m) {
    return m.rows() <= 6 ? det_bareiss(m) : det_cofactor(m);
}

/// All k x k minors in lexicographic order of the column subsets.
inline std::vector<FqPoly> maximal_minors(const PolyMatrix& m) {
    const std::size_t k = m.rows(), n = m.cols();
    if (k > n) throw Error(ErrorKind::ShapeError, "more rows than columns");
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    std::vector<FqPoly> out;
    while (true) {
        PolyMatrix sub(m.field(), k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(r, cols[c]);
        out.push_back(determinant(sub));
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return out;
}

inline ScalarMatrix eval_at(const PolyMatrix& m, elem_t z0) {
    ScalarMatrix s(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) s.at(r, c) = m.at(r, c)(z0);
    return s;
}

/// Coefficient matrices G_0..G_d with d the largest entry degree, padded
/// with zero matrices up to `min_blocks` entries.
inline std::vector<ScalarMatrix> decompose(const PolyMatrix& m, std::size_t min_blocks = 0) {
    const std::size_t len = std::max(m.max_degree().value_or(0) + 1, min_blocks);
    std::vector<ScalarMatrix> out(len, ScalarMatrix(m.field(), m.rows(), m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto co = m.at(r, c).coeffs();
            for (std::size_t i = 0; i < co.size(); ++i) out[i].at(r, c) = co[i];
        }
    return out;
}

/// Row r holds the coefficients of z^{deg row r} of row r; zero rows stay zero.
inline ScalarMatrix leading_row_matrix(const PolyMatrix& m) {
    ScalarMatrix s(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto d = m.row_degree(r);
        if (!d) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) s.at(r, c) = m.at(r, c).coeff(*d);
    }
    return s;
}

}  // namespace convgoppa

#endif

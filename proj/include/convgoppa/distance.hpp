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

#ifndef CONVGOPPA_DISTANCE_HPP
#define CONVGOPPA_DISTANCE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convgoppa/code.hpp"
#include "convgoppa/polymat.hpp"

namespace convgoppa {

inline constexpr std::uint64_t kDefaultCap = 100'000'000;
inline constexpr std::size_t kDefaultOracleStage = 12;

/// Stage-l sliding matrix: block (r, c) is G_{c-r} for 0 <= c-r <= delta.
inline ScalarMatrix sliding_matrix(const ConvCode& code, std::size_t l) {
    const std::size_t k = code.dimension(), n = code.length(), d = code.degree();
    const auto g = decompose(code.generator(), d + 1);
    ScalarMatrix s(code.field(), k * (l + 1), n * (d + l + 1));
    for (std::size_t br = 0; br <= l; ++br)
        for (std::size_t j = 0; j <= d; ++j)
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n; ++c) s.at(br * k + r, (br + j) * n + c) = g[j].at(r, c);
    return s;
}

/// (G_delta; ...; G_0) stacked vertically.
inline ScalarMatrix stacked_matrix(const ConvCode& code) {
    auto g = decompose(code.generator(), code.degree() + 1);
    g.resize(code.degree() + 1, ScalarMatrix(code.field(), code.dimension(), code.length()));
    std::reverse(g.begin(), g.end());
    return vstack(g);
}

struct SearchOptions {
    /// Maximum number of search-tree nodes; exceeding it throws EnumerationCap.
    std::uint64_t cap = kDefaultCap;
    /// Only weights strictly below this are reported.
    std::optional<std::size_t> upper_bound;
    /// Rows per message block, used by the block restrictions and by
    /// `future_bound`.
    std::size_t block_rows = 1;
    bool lead_block_nonzero = false;
    bool tail_block_nonzero = false;
    /// Lower bound on the weight of the columns that are not yet final,
    /// valid for every message with a nonzero row after the current block.
    std::size_t future_bound = 0;
    /// Leaf filter; must not depend on the scale of the message.
    std::function<bool(std::span<const elem_t>)> accept;
};

struct SearchResult {
    std::optional<std::size_t> weight;
    std::vector<elem_t> message;
    std::uint64_t nodes = 0;
};

namespace detail {

// Depth-first over messages in enumeration order with the first nonzero
// coordinate fixed to 1. Each message is scored once, at its last nonzero
// row. A column is final once its last nonzero row is assigned, so final
// columns plus `future_bound` bound every message that continues.
class WeightSearch {
  public:
    WeightSearch(const ScalarMatrix& s, const SearchOptions& opt)
        : s_(s), f_(*s.field()), opt_(opt), rows_(s.rows()), cols_(s.cols()),
          final_at_(s.rows()), cw_((s.rows() + 1) * s.cols(), 0), msg_(s.rows(), 0) {
        for (std::size_t c = 0; c < cols_; ++c)
            for (std::size_t r = rows_; r-- > 0;)
                if (s.at(r, c) != 0) {
                    final_at_[r].push_back(c);
                    break;
                }
        best_ = opt.upper_bound.value_or(cols_ + 1);
        block_ = std::max<std::size_t>(opt.block_rows, 1);
        lead_end_ = std::min(block_, rows_);
        tail_begin_ = rows_ >= block_ ? rows_ - block_ : 0;
    }

    SearchResult run() {
        if (rows_ == 0) throw Error(ErrorKind::ShapeError, "empty matrix");
        visit(0, 0, false);
        SearchResult res;
        res.nodes = nodes_;
        if (found_) {
            res.weight = best_;
            res.message = best_msg_;
        }
        return res;
    }

  private:
    void visit(std::size_t r, std::size_t lb, bool any) {
        const auto& elems = f_.elements();
        const bool lead_closes = opt_.lead_block_nonzero && r + 1 == lead_end_;
        const std::size_t first = !any && lead_closes ? 1 : 0;
        const std::size_t count = any ? elems.size() : 2;
        const auto& fin = final_at_[r];
        if (any && !fin.empty() && lb + fin.size() >= best_) {
            // Every value outside the column-zeroing set makes all final
            // columns nonzero and is pruned, so only those values are tried.
            const elem_t* prev = &cw_[r * cols_];
            const auto row = s_.row(r);
            std::vector<std::size_t> idx{0};
            for (std::size_t c : fin) idx.push_back(f_.index_of(f_.div(f_.neg(prev[c]), row[c])));
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            for (std::size_t i : idx)
                if (i >= first) try_value(r, lb, any, elems[i]);
        } else {
            for (std::size_t i = first; i < count; ++i) try_value(r, lb, any, elems[i]);
        }
        msg_[r] = 0;
    }

    void try_value(std::size_t r, std::size_t lb, bool any, elem_t v) {
        if (++nodes_ > opt_.cap)
            throw Error(ErrorKind::EnumerationCap, "search exceeded " + std::to_string(opt_.cap) + " nodes");
        const elem_t* prev = &cw_[r * cols_];
        elem_t* next = &cw_[(r + 1) * cols_];
        const auto row = s_.row(r);
        msg_[r] = v;
        if (v == 0) {
            std::copy(prev, prev + cols_, next);
        } else {
            for (std::size_t c = 0; c < cols_; ++c) next[c] = f_.add(prev[c], f_.mul(v, row[c]));
        }
        std::size_t w = lb;
        for (std::size_t c : final_at_[r]) w += next[c] != 0;
        if (w >= best_) return;
        if (v != 0 && (!opt_.tail_block_nonzero || r >= tail_begin_)) {
            // The message that stops here.
            std::size_t total = 0;
            for (std::size_t c = 0; c < cols_; ++c) total += next[c] != 0;
            if (total < best_ && (!opt_.accept || opt_.accept(msg_))) {
                best_ = total;
                best_msg_ = msg_;
                found_ = true;
            }
        }
        if (r + 1 == rows_) return;
        const bool any2 = any || v != 0;
        if (!any2 && opt_.lead_block_nonzero && r + 1 >= lead_end_) return;
        const bool boundary = (r + 1) % block_ == 0;
        if (w + (boundary ? opt_.future_bound : 0) >= best_) return;
        visit(r + 1, w, any2);
    }

    const ScalarMatrix& s_;
    const FiniteField& f_;
    const SearchOptions& opt_;
    std::size_t rows_, cols_;
    std::vector<std::vector<std::size_t>> final_at_;
    std::vector<elem_t> cw_;
    std::vector<elem_t> msg_;
    std::vector<elem_t> best_msg_;
    std::size_t best_ = 0;
    std::size_t block_ = 1, lead_end_ = 0, tail_begin_ = 0;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
};

}  // namespace detail

/// Minimum weight of m*S over admissible nonzero messages m, if any falls
/// below the upper bound.
inline SearchResult minimum_weight_search(const ScalarMatrix& s, const SearchOptions& opt = {}) {
    return detail::WeightSearch(s, opt).run();
}

/// Distance of the block code spanned by the rows of a full-rank matrix.
inline std::size_t block_distance(const ScalarMatrix& s, const SearchOptions& opt = {}) {
    const std::size_t rank = scalar_rank(s);
    if (rank < s.rows())
        throw Error(ErrorKind::RankDeficient,
                    "matrix has rank " + std::to_string(rank) + " < " + std::to_string(s.rows()) + " rows");
    const auto res = minimum_weight_search(s, opt);
    if (res.weight) return *res.weight;
    if (opt.upper_bound) return *opt.upper_bound;
    throw Error(ErrorKind::PreconditionViolated, "no message satisfies the restriction");
}

/// Minimum weight of a nonzero combination of the leading row coefficients.
/// The top codeword block is such a combination (predictable degree), so
/// this bounds the weight of any nonzero codeword's last block.
inline std::size_t top_block_bound(const ConvCode& code, std::uint64_t budget = 1'000'000) {
    SearchOptions opt;
    opt.cap = budget;
    try {
        return minimum_weight_search(leading_row_matrix(code.generator()), opt).weight.value_or(1);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::EnumerationCap) return 1;
        throw;
    }
}

/// Lower bound on the weight a codeword places at or after block e when its
/// message is nonzero somewhere at or after block e. The last w blocks are
/// searched exactly, w being the largest window whose search fits `budget`
/// nodes; the top-block bound is the fallback.
inline std::size_t future_weight_bound(const ConvCode& code, std::uint64_t budget = 1'000'000) {
    const std::size_t k = code.dimension(), n = code.length(), m = code.memory();
    const double q = static_cast<double>(code.field()->order());
    const std::size_t top = top_block_bound(code, budget);
    std::size_t w = 0;
    for (std::size_t cand = 1; cand <= m + 1; ++cand)
        if (std::pow(q, static_cast<double>(k * cand) - 1.0) <= static_cast<double>(budget)) w = cand;
    if (w == 0) return top;
    const auto g = decompose(code.generator(), m + 1);
    // Blocks e..e+m-w see beta_e in their window; if (G_m; ...; G_0) is
    // injective none of them can vanish.
    std::size_t extra = 0;
    if (w <= m) {
        std::vector<ScalarMatrix> blocks(g.rbegin(), g.rend());
        if (scalar_rank(vstack(blocks)) == k * (m + 1)) extra = m + 1 - w;
    }
    // Row block t is message block e-t; column block j is codeword block e+m-j.
    ScalarMatrix t(code.field(), k * w, n * w);
    for (std::size_t bt = 0; bt < w; ++bt)
        for (std::size_t bj = bt; bj < w; ++bj)
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n; ++c) t.at(bt * k + r, bj * n + c) = g[m - bj + bt].at(r, c);
    SearchOptions opt;
    opt.cap = 4 * budget;
    opt.block_rows = k;
    opt.lead_block_nonzero = true;
    try {
        return std::max(top, minimum_weight_search(t, opt).weight.value_or(0) + extra);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::EnumerationCap) return top;
        throw;
    }
}

inline std::size_t row_distance(const ConvCode& code, std::size_t l, std::uint64_t cap = kDefaultCap) {
    SearchOptions opt;
    opt.cap = cap;
    opt.block_rows = code.dimension();
    opt.future_bound = future_weight_bound(code);
    return block_distance(sliding_matrix(code, l), opt);
}

/// d^r_0 .. d^r_last. A stage-l message with a zero first or last block is
/// a stage-(l-1) codeword up to shift, so each stage only searches messages
/// with both end blocks nonzero.
inline std::vector<std::size_t> row_distance_sequence(const ConvCode& code, std::size_t last,
                                                      std::uint64_t cap = kDefaultCap) {
    const std::size_t bound = future_weight_bound(code);
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l <= last; ++l) {
        SearchOptions opt;
        opt.cap = cap;
        opt.block_rows = code.dimension();
        opt.future_bound = bound;
        if (l == 0) {
            out.push_back(block_distance(sliding_matrix(code, 0), opt));
            continue;
        }
        opt.upper_bound = out.back();
        opt.lead_block_nonzero = true;
        opt.tail_block_nonzero = true;
        out.push_back(minimum_weight_search(sliding_matrix(code, l), opt).weight.value_or(out.back()));
    }
    return out;
}

struct C0Code {
    std::size_t nu;
    std::size_t mu;
};

/// Dimension and distance of the block code spanned by (G_delta; ...; G_0).
inline C0Code c0_code(const ConvCode& code, std::uint64_t cap = kDefaultCap) {
    const ScalarMatrix basis = row_basis(stacked_matrix(code));
    SearchOptions opt;
    opt.cap = cap;
    return {basis.rows(), block_distance(basis, opt)};
}

inline std::size_t l_of_c(std::size_t n, std::size_t k, std::size_t delta, std::size_t mu) {
    if (mu == 0) throw Error(ErrorKind::InvalidArgument, "mu must be positive");
    const std::size_t q = singleton_bound(n, k, delta) / mu;
    return q > delta + 1 ? q - (delta + 1) : 0;
}

inline std::size_t l_of_c(const ConvCode& code, std::size_t mu) {
    return l_of_c(code.length(), code.dimension(), code.degree(), mu);
}

enum class DistanceMethod { Theorem, Oracle };

inline constexpr const char* to_string(DistanceMethod m) noexcept {
    return m == DistanceMethod::Theorem ? "theorem" : "oracle";
}

struct OracleResult {
    std::size_t dfree;
    std::vector<std::size_t> row_distances;
    /// The last delta+1 stages agree.
    bool stabilized;
};

/// Minimum over stages 0..max_stage of the full-enumeration row distance.
/// Uses no structural shortcut; each stage is searched over every message.
inline OracleResult free_distance_oracle(const ConvCode& code, std::size_t max_stage,
                                         std::uint64_t cap = kDefaultCap) {
    OracleResult res{0, {}, false};
    const std::size_t bound = future_weight_bound(code);
    for (std::size_t l = 0; l <= max_stage; ++l) {
        SearchOptions opt;
        opt.cap = cap;
        opt.block_rows = code.dimension();
        opt.future_bound = bound;
        if (!res.row_distances.empty()) opt.upper_bound = res.row_distances.back();
        res.row_distances.push_back(block_distance(sliding_matrix(code, l), opt));
    }
    res.dfree = res.row_distances.back();
    const std::size_t need = code.degree() + 1;
    const auto& d = res.row_distances;
    res.stabilized = d.size() >= need && std::all_of(d.end() - static_cast<std::ptrdiff_t>(need), d.end(),
                                                      [&](std::size_t x) { return x == d.back(); });
    return res;
}

struct DistanceProfile {
    std::size_t nu = 0;
    std::size_t mu = 0;
    bool hypothesis_ok = false;
    std::size_t l_of_c = 0;
    std::vector<std::size_t> row_distances;
    std::size_t dfree = 0;
    std::size_t singleton = 0;
    bool is_mds = false;
    DistanceMethod method = DistanceMethod::Theorem;
    /// Oracle only: whether the last delta+1 stages agree.
    bool stabilized = true;
    std::size_t max_stage = 0;
};

struct DistanceOptions {
    std::uint64_t cap = kDefaultCap;
    bool force_oracle = false;
    std::optional<std::size_t> max_stage;
};

/// Free distance: if nu = k(delta+1), d_free = d^r_{l(C)}; otherwise the
/// oracle up to a fixed stage, flagged by `stabilized`.
inline DistanceProfile free_distance(const ConvCode& code, const DistanceOptions& opt = {}) {
    DistanceProfile p;
    const auto c0 = c0_code(code, opt.cap);
    p.nu = c0.nu;
    p.mu = c0.mu;
    p.hypothesis_ok = c0.nu == code.dimension() * (code.degree() + 1);
    p.l_of_c = l_of_c(code, c0.mu);
    p.singleton = code.singleton_bound();
    if (p.hypothesis_ok && !opt.force_oracle) {
        p.method = DistanceMethod::Theorem;
        p.row_distances = row_distance_sequence(code, p.l_of_c, opt.cap);
        p.dfree = p.row_distances.back();
        p.max_stage = p.l_of_c;
    } else {
        p.method = DistanceMethod::Oracle;
        p.max_stage = opt.max_stage.value_or(p.hypothesis_ok ? p.l_of_c + 2 : kDefaultOracleStage);
        auto o = free_distance_oracle(code, p.max_stage, opt.cap);
        p.row_distances = std::move(o.row_distances);
        p.dfree = o.dfree;
        p.stabilized = o.stabilized;
    }
    p.is_mds = p.dfree == p.singleton;
    return p;
}

inline bool is_mds(const ConvCode& code, const DistanceOptions& opt = {}) { return free_distance(code, opt).is_mds; }

}  // namespace convgoppa

#endif

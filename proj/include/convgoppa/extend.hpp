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

#ifndef CONVGOPPA_EXTEND_HPP
#define CONVGOPPA_EXTEND_HPP

#include <array>
#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "convgoppa/cgc.hpp"
#include "convgoppa/distance.hpp"

namespace convgoppa {

using Triple = std::array<elem_t, 3>;

/// Coefficients of s(a z + b): F_j = s^{(j)}(b) a^j.
inline Triple eval_new_point(const CgcSpec& spec, Point p) {
    spec.validate();
    if (spec.delta() != 2) throw Error(ErrorKind::PreconditionViolated, "extension needs delta = 2");
    if (p.a == 0) throw Error(ErrorKind::DegeneratePoint, "new point has a = 0");
    if (!spec.field->contains(p.a) || !spec.field->contains(p.b))
        throw Error(ErrorKind::InvalidArgument, "point coordinate out of range");
    if (std::find(spec.points.begin(), spec.points.end(), p) != spec.points.end())
        throw Error(ErrorKind::DegeneratePoint, "new point coincides with an existing point");
    const FiniteField& f = *spec.field;
    Triple F{};
    for (std::size_t j = 0; j < 3; ++j) F[j] = f.mul(hasse_eval(spec, j, p.b), f.pow(p.a, j));
    return F;
}

/// (k+1) x (k+3) banded matrix with rows (.., F_0, F_1, F_2, ..).
inline ScalarMatrix f_sliding(const FieldPtr& field, const Triple& F, std::size_t k) {
    ScalarMatrix m(field, k + 1, k + 3);
    for (std::size_t r = 0; r <= k; ++r)
        for (std::size_t j = 0; j < 3; ++j) m.at(r, r + j) = F[j];
    return m;
}

/// h_0 .. h_upto, complete symmetric functions of the roots of
/// F_0 + F_1 z + F_2 z^2, from h_{-1} = 0, h_0 = 1 and
/// h_{k+1} = -h_k F_1/F_2 - h_{k-1} F_0/F_2.
inline std::vector<elem_t> h_sequence(const FiniteField& f, const Triple& F, std::size_t upto) {
    if (F[2] == 0) throw Error(ErrorKind::F2Zero, "F_2 is zero");
    const elem_t c1 = f.neg(f.div(F[1], F[2]));
    const elem_t c0 = f.neg(f.div(F[0], F[2]));
    std::vector<elem_t> h{1};
    elem_t prev = 0;
    while (h.size() <= upto) {
        const elem_t next = f.add(f.mul(c1, h.back()), f.mul(c0, prev));
        prev = h.back();
        h.push_back(next);
    }
    return h;
}

/// Determinant of F_k without its first and last column: tridiagonal with
/// F_1 on the diagonal, F_2 above and F_0 below.
inline elem_t banded_determinant(const FiniteField& f, const Triple& F, std::size_t k) {
    elem_t before = 1, cur = F[1];
    for (std::size_t i = 1; i <= k; ++i) {
        const elem_t next = f.sub(f.mul(F[1], cur), f.mul(f.mul(F[0], F[2]), before));
        before = cur;
        cur = next;
    }
    return cur;
}

struct ExtensionConditions {
    bool stacked_distance_ge_3 = false;
    bool a_nonzero = false;
    bool s0_at_b_nonzero = false;
    bool lambda2_nonzero = false;
    bool all_h_nonzero = false;
};

struct ExtensionReport {
    Point new_point{};
    Triple F{};
    std::vector<elem_t> h;
    /// h_0 .. h_{h_checked_upto} were tested.
    std::size_t h_checked_upto = 0;
    ExtensionConditions conditions;
    std::size_t base_dfree = 0;
    std::size_t base_mu = 0;
    std::size_t base_l = 0;
    std::size_t extended_mu = 0;
    std::size_t extended_l = 0;
    std::size_t k0 = 0;
    bool f_k0_full_rank = false;
    std::size_t f_k0_distance = 0;
    std::size_t dfree_lower_bound = 0;
    std::size_t extended_singleton = 0;
    /// Conclusion ii): extended stacked distance >= 3.
    bool stacked_extended_ge_3 = false;
    /// Conclusion iii): l of the extension <= l(C) + 1.
    bool l_growth_ok = false;
    /// All five hypotheses of the extension theorem hold.
    bool theorem_certified = false;
    /// The Lemma bound reaches the Singleton bound of the extension.
    bool lemma_certified = false;
    bool certified_mds = false;
    std::optional<ConvCode> extended;
};

/// Certificate for appending p = a z + b to an MDS [n,1,2] CGC.
inline ExtensionReport check_extension(const CgcSpec& spec, Point p, std::uint64_t cap = kDefaultCap) {
    spec.validate();
    if (spec.delta() != 2) throw Error(ErrorKind::PreconditionViolated, "extension needs delta = 2");
    if (spec.lambda[2] == 0) throw Error(ErrorKind::HypothesisFailed, "lambda2_nonzero");
    const FiniteField& f = *spec.field;
    ExtensionReport rep;
    rep.new_point = p;

    const ConvCode base = build(spec);
    DistanceOptions dopt;
    dopt.cap = cap;
    const auto prof = free_distance(base, dopt);
    if (!prof.is_mds) throw Error(ErrorKind::BaseNotMds, "base code has free distance " + std::to_string(prof.dfree) +
                                                              " below " + std::to_string(prof.singleton));
    rep.base_dfree = prof.dfree;
    rep.base_mu = prof.mu;
    rep.base_l = prof.l_of_c;

    rep.F = eval_new_point(spec, p);
    rep.h_checked_upto = rep.base_l + 2;
    rep.h = h_sequence(f, rep.F, rep.h_checked_upto);

    auto& c = rep.conditions;
    c.stacked_distance_ge_3 = prof.mu >= 3;
    c.a_nonzero = p.a != 0;
    c.s0_at_b_nonzero = hasse_eval(spec, 0, p.b) != 0;
    c.lambda2_nonzero = true;
    c.all_h_nonzero = std::all_of(rep.h.begin(), rep.h.end(), [](elem_t x) { return x != 0; });
    rep.theorem_certified =
        c.stacked_distance_ge_3 && c.a_nonzero && c.s0_at_b_nonzero && c.lambda2_nonzero && c.all_h_nonzero;

    CgcSpec ext = spec;
    ext.points.push_back(p);
    const ConvCode extended = build(ext);
    const auto c0 = c0_code(extended, cap);
    rep.extended_mu = c0.mu;
    rep.extended_l = l_of_c(extended, c0.mu);
    rep.extended_singleton = extended.singleton_bound();
    rep.stacked_extended_ge_3 = c0.mu >= 3;
    rep.l_growth_ok = rep.extended_l <= rep.base_l + 1;

    rep.k0 = std::max(rep.extended_l, rep.base_l);
    const ScalarMatrix fk = f_sliding(spec.field, rep.F, rep.k0);
    rep.f_k0_full_rank = scalar_rank(fk) == fk.rows();
    if (rep.f_k0_full_rank) {
        SearchOptions sopt;
        sopt.cap = cap;
        rep.f_k0_distance = block_distance(fk, sopt);
        rep.dfree_lower_bound = rep.base_dfree + rep.f_k0_distance;
    }
    rep.lemma_certified = rep.f_k0_full_rank && rep.dfree_lower_bound >= rep.extended_singleton;
    rep.certified_mds = rep.theorem_certified || rep.lemma_certified;
    rep.extended = extended;
    return rep;
}

struct EligibleResult {
    std::vector<Point> points;
    /// Empty when the base passes the theorem's gates.
    std::string diagnostic;
};

/// All new points a z + b for which the extension theorem certifies an
/// MDS extension.
inline EligibleResult eligible_points(const CgcSpec& spec, unsigned workers = 1, std::uint64_t cap = kDefaultCap) {
    spec.validate();
    EligibleResult res;
    if (spec.delta() != 2) {
        res.diagnostic = "delta is not 2";
        return res;
    }
    if (spec.lambda[2] == 0) {
        res.diagnostic = "lambda2 is zero";
        return res;
    }
    DistanceOptions dopt;
    dopt.cap = cap;
    const auto prof = free_distance(build(spec), dopt);
    if (!prof.is_mds) {
        res.diagnostic = "base code is not MDS";
        return res;
    }
    if (prof.mu < 3) {
        res.diagnostic = "stacked coefficient code has distance " + std::to_string(prof.mu) + " < 3";
        return res;
    }
    std::vector<Point> cand;
    for (elem_t a : spec.field->elements()) {
        if (a == 0) continue;
        for (elem_t b : spec.field->elements())
            if (std::find(spec.points.begin(), spec.points.end(), Point{a, b}) == spec.points.end())
                cand.push_back({a, b});
    }
    std::vector<char> ok(cand.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cand.size();) {
            try {
                ok[i] = check_extension(spec, cand[i], cap).theorem_certified;
            } catch (const Error& e) {
                // a candidate whose extension degenerates is simply not eligible
                const auto k = e.kind();
                if (k == ErrorKind::OutsideParameterSpace || k == ErrorKind::NotBasic) continue;
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cand.size())));
    if (n == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (ok[i]) res.points.push_back(cand[i]);
    return res;
}

}  // namespace convgoppa

#endif

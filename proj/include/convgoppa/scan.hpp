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

#ifndef CONVGOPPA_SCAN_HPP
#define CONVGOPPA_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "convgoppa/cgc.hpp"
#include "convgoppa/code.hpp"
#include "convgoppa/distance.hpp"
#include "convgoppa/expr.hpp"

namespace convgoppa {

using Tuple = std::vector<elem_t>;

/// A code-valued function on a finite set of parameter tuples.
struct Family {
    std::string description;
    FieldPtr field;
    std::vector<Tuple> domain;
    std::function<ConvCode(std::span<const elem_t>)> construct;
    /// Singleton bound of a generic member; a member is MDS iff its free
    /// distance reaches this value, so degree drops count as non-MDS.
    std::size_t nominal_singleton = 0;
};

enum class TupleStatus { Mds, NonMds, Excluded, Failed };

struct TupleOutcome {
    Tuple params;
    TupleStatus status = TupleStatus::Failed;
    std::size_t dfree = 0;
    std::string reason;
};

struct ScanReport {
    std::string description;
    std::size_t total = 0;
    std::vector<Tuple> mds_set;
    std::vector<Tuple> non_mds_set;
    /// Outside the parameter space or not basic.
    std::vector<TupleOutcome> excluded;
    /// Errors other than degeneration (e.g. enumeration cap).
    std::vector<TupleOutcome> failed;
    /// One entry per predicted condition: its zero set lies in the non-MDS
    /// or excluded part.
    std::vector<bool> condition_matched;
    /// Tuples where prediction and scan disagree.
    std::vector<Tuple> mismatches;
    std::optional<bool> matched_equations;
};

struct ScanOptions {
    DistanceOptions distance;
    unsigned workers = 1;
};

inline TupleOutcome evaluate_tuple(const Family& fam, const Tuple& t, const DistanceOptions& opt) {
    TupleOutcome out;
    out.params = t;
    try {
        const ConvCode code = fam.construct(t);
        const auto prof = free_distance(code, opt);
        out.dfree = prof.dfree;
        out.status = prof.dfree == fam.nominal_singleton ? TupleStatus::Mds : TupleStatus::NonMds;
    } catch (const Error& e) {
        const auto k = e.kind();
        const bool degenerate = k == ErrorKind::OutsideParameterSpace || k == ErrorKind::NotBasic ||
                                k == ErrorKind::RankDeficient || k == ErrorKind::InvalidArgument;
        out.status = degenerate ? TupleStatus::Excluded : TupleStatus::Failed;
        out.reason = e.what();
    }
    return out;
}

/// Evaluates every tuple, buckets by MDS status and, if conditions are
/// given, checks that the non-MDS part (with excluded tuples) is exactly
/// the union of their zero sets.
inline ScanReport scan_family(const Family& fam, std::span<const Condition> predicted = {},
                              const ScanOptions& opt = {}) {
    std::vector<TupleOutcome> outcomes(fam.domain.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(fam.domain.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < fam.domain.size(); ++i)
            outcomes[i] = evaluate_tuple(fam, fam.domain[i], opt.distance);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < fam.domain.size();)
                    outcomes[i] = evaluate_tuple(fam, fam.domain[i], opt.distance);
            });
        for (auto& t : pool) t.join();
    }

    ScanReport rep;
    rep.description = fam.description;
    rep.total = outcomes.size();
    for (auto& o : outcomes) {
        switch (o.status) {
            case TupleStatus::Mds: rep.mds_set.push_back(o.params); break;
            case TupleStatus::NonMds: rep.non_mds_set.push_back(o.params); break;
            case TupleStatus::Excluded: rep.excluded.push_back(o); break;
            case TupleStatus::Failed: rep.failed.push_back(o); break;
        }
    }
    if (!predicted.empty()) {
        rep.condition_matched.assign(predicted.size(), true);
        for (const auto& o : outcomes) {
            if (o.status == TupleStatus::Failed) continue;
            bool zero = false;
            for (std::size_t c = 0; c < predicted.size(); ++c)
                if (predicted[c](o.params) == 0) {
                    zero = true;
                    if (o.status == TupleStatus::Mds) rep.condition_matched[c] = false;
                }
            if (zero != (o.status != TupleStatus::Mds)) rep.mismatches.push_back(o.params);
        }
        rep.matched_equations = rep.mismatches.empty() && rep.failed.empty();
    }
    return rep;
}

/// Family of CGCs on fixed points, parametrized by lambda.
inline Family cgc_family(FieldPtr field, std::vector<Point> points, std::size_t delta, std::vector<Tuple> domain) {
    Family fam;
    fam.field = field;
    fam.domain = std::move(domain);
    fam.nominal_singleton = points.size() * (delta + 1);
    fam.description = "cgc n=" + std::to_string(points.size()) + " delta=" + std::to_string(delta) + " over " +
                      field->spec();
    fam.construct = [field, points = std::move(points)](std::span<const elem_t> l) {
        return build(CgcSpec{field, points, Tuple(l.begin(), l.end())});
    };
    return fam;
}

/// The 2 x 4 family over GF(2^r) with rows
/// (l + z, l + 1 + z, l z, 1 + (l + 1) z) and
/// (l^2 + (l + 1) z, 1 + z, l + (l + 1) z, (l + 1)^2 + l z).
inline PolyMatrix case_study_matrix(const FieldPtr& f, elem_t l) {
    if (f->characteristic() != 2) throw Error(ErrorKind::InvalidArgument, "the family is defined in characteristic 2");
    const FiniteField& F = *f;
    const elem_t l1 = F.add(l, 1);
    auto P = [&](elem_t c0, elem_t c1) { return FqPoly(f, {c0, c1}); };
    return PolyMatrix(f, 2, 4,
                      {P(l, 1), P(l1, 1), P(0, l), P(1, l1), P(F.mul(l, l), l1), P(1, 1), P(l, l1),
                       P(F.mul(l1, l1), l)});
}

/// The case-study family over the nonzero elements of a characteristic-2 field.
inline Family case_study_family(FieldPtr field) {
    Family fam;
    fam.field = field;
    fam.description = "case study 2x4 family over " + field->spec();
    for (elem_t x : field->elements())
        if (x != 0) fam.domain.push_back({x});
    fam.nominal_singleton = singleton_bound(4, 2, 2);
    fam.construct = [field](std::span<const elem_t> l) { return new_code(case_study_matrix(field, l[0])); };
    return fam;
}

}  // namespace convgoppa

#endif

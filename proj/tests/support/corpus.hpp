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

// Shared code corpus: the worked examples plus seeded random basic
// generators over GF(4), GF(5) and GF(8).
#ifndef CONVGOPPA_TESTS_CORPUS_HPP
#define CONVGOPPA_TESTS_CORPUS_HPP

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "convgoppa/convgoppa.hpp"

namespace corpus {

struct Entry {
    std::string name;
    convgoppa::ConvCode code;
};

inline convgoppa::CgcSpec three_point_gf8() {
    auto f = convgoppa::FiniteField::of_order(8);
    const convgoppa::elem_t a = f->generator();
    return {f, {{1, a}, {a, a}, {f->exp(2), a}}, {1, 1, 1}};
}

inline convgoppa::CgcSpec three_point_gf4() {
    auto f = convgoppa::FiniteField::of_order(4);
    const convgoppa::elem_t a = f->generator();
    return {f, {{1, a}, {a, a}, {f->exp(2), a}}, {1, a, 1}};
}

inline convgoppa::CgcSpec seven_point_gf8(convgoppa::elem_t l0, convgoppa::elem_t l1, convgoppa::elem_t l2) {
    auto f = convgoppa::FiniteField::of_order(8);
    std::vector<convgoppa::Point> pts;
    for (unsigned i = 0; i < 7; ++i) pts.push_back({f->exp(i), f->generator()});
    return {f, pts, {l0, l1, l2}};
}

inline convgoppa::CgcSpec four_point_gf5(std::vector<convgoppa::elem_t> lambda) {
    auto f = convgoppa::FiniteField::of_order(5);
    return {f, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}, std::move(lambda)};
}

inline std::vector<Entry> worked_examples() {
    using namespace convgoppa;
    auto f8 = FiniteField::of_order(8), f5 = FiniteField::of_order(5);
    const elem_t a = f8->generator(), a2 = f8->exp(2);
    std::vector<Entry> out;
    out.push_back({"case study l=a", new_code(case_study_matrix(f8, a))});
    out.push_back({"case study l=1", new_code(case_study_matrix(f8, 1))});
    out.push_back({"three-point gf8", build(three_point_gf8())});
    out.push_back({"three-point gf8 extended", check_extension(three_point_gf8(), {a2, f8->exp(4)}).extended.value()});
    out.push_back({"three-point gf4", build(three_point_gf4())});
    out.push_back({"seven-point gf8", build(seven_point_gf8(a2, a2, a2))});
    out.push_back({"four-point gf5", build(four_point_gf5({1, 1, 1, 1}))});
    out.push_back({"block gf5", new_code(PolyMatrix(f5, 1, 4, std::vector<FqPoly>(4, FqPoly::constant(f5, 1))))});
    return out;
}

/// A random k x n matrix whose rows have the given degrees; retried until
/// it is basic and full rank.
inline convgoppa::ConvCode random_code(const convgoppa::FieldPtr& f, std::mt19937& rng, std::size_t n,
                                       std::vector<std::size_t> row_degrees) {
    using namespace convgoppa;
    std::uniform_int_distribution<elem_t> d(0, f->order() - 1);
    const std::size_t k = row_degrees.size();
    while (true) {
        PolyMatrix g(f, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<elem_t> v(row_degrees[r] + 1);
                for (auto& x : v) x = d(rng);
                g.at(r, c) = FqPoly(f, std::move(v));
            }
        try {
            auto code = new_code(g);
            if (code.degree() == std::accumulate(row_degrees.begin(), row_degrees.end(), std::size_t{0})) return code;
        } catch (const Error&) {
        }
    }
}

/// Random 1 x n codes with n >= delta + 1 and 2 x n codes, delta <= 3.
inline std::vector<Entry> random_codes(unsigned seed = 20261019) {
    std::mt19937 rng(seed);
    std::vector<Entry> out;
    for (unsigned q : {4u, 5u, 8u}) {
        auto f = convgoppa::FiniteField::of_order(q);
        const std::string tag = "gf" + std::to_string(q);
        for (char rep : {'a', 'b'})
            for (std::size_t delta = 0; delta <= 3; ++delta)
                for (std::size_t n = std::max<std::size_t>(2, delta + 1); n <= 4; ++n)
                    out.push_back({"random " + tag + " 1x" + std::to_string(n) + " d" + std::to_string(delta) + rep,
                                   random_code(f, rng, n, {delta})});
        out.push_back({"random " + tag + " 2x3 d0", random_code(f, rng, 3, {0, 0})});
        out.push_back({"random " + tag + " 2x4 d0", random_code(f, rng, 4, {0, 0})});
        out.push_back({"random " + tag + " 2x3 d1", random_code(f, rng, 3, {0, 1})});
        out.push_back({"random " + tag + " 2x4 d2", random_code(f, rng, 4, {1, 1})});
        out.push_back({"random " + tag + " 2x4 d3", random_code(f, rng, 4, {1, 2})});
    }
    return out;
}

inline std::vector<Entry> all_codes() {
    auto out = worked_examples();
    for (auto& e : random_codes()) out.push_back(std::move(e));
    return out;
}

}  // namespace corpus

#endif

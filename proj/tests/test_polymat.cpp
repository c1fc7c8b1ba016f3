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

#include <catch_amalgamated.hpp>

#include <random>

#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace convgoppa;
using checks::pmat;

namespace {

FqPoly random_poly(const FieldPtr& f, std::mt19937& rng, std::size_t max_deg) {
    std::uniform_int_distribution<elem_t> d(0, f->order() - 1);
    std::vector<elem_t> c(max_deg + 1);
    for (auto& x : c) x = d(rng);
    return FqPoly(f, std::move(c));
}

PolyMatrix random_matrix(const FieldPtr& f, std::mt19937& rng, std::size_t k, std::size_t n, std::size_t max_deg) {
    PolyMatrix m(f, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_poly(f, rng, max_deg);
    return m;
}

}  // namespace

TEST_CASE("polynomial text round trip", "[polymat]") {
    auto f = FiniteField::of_order(8);
    const auto p = parse_poly(f, "1 + a*z + a^6*z^3");
    CHECK(p.degree() == 3);
    CHECK(p.weight() == 3);
    CHECK(format_poly(p) == "1 + a*z + a^6*z^3");
    CHECK(parse_poly(f, "z + z") .is_zero());
    CHECK(format_poly(FqPoly(f)) == "0");
    CHECK_FALSE(FqPoly(f).degree().has_value());
    CHECK_THROWS_KIND(parse_poly(f, "1 + + z"), Parse);
    CHECK_THROWS_KIND(parse_poly(f, "x"), Parse);
}

TEST_CASE("weight counts nonzero coefficients", "[polymat]") {
    auto f = FiniteField::of_order(5);
    CHECK(parse_poly(f, "1 + 2*z^4").weight() == 2);
    std::vector<FqPoly> v{parse_poly(f, "1 + z"), parse_poly(f, "3*z^2"), FqPoly(f)};
    CHECK(weight(std::span<const FqPoly>(v)) == 3);
}

TEST_CASE("division with remainder and gcd", "[polymat]") {
    std::mt19937 rng(11);
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        auto f = FiniteField::of_order(q);
        for (int t = 0; t < 50; ++t) {
            const auto a = random_poly(f, rng, 6), b = random_poly(f, rng, 3);
            if (b.is_zero()) continue;
            const auto [quo, rem] = divmod(a, b);
            CHECK(quo * b + rem == a);
            CHECK((rem.is_zero() || *rem.degree() < *b.degree()));
            const auto g = poly_gcd(a, b);
            CHECK(divmod(a, g).second.is_zero());
            CHECK(divmod(b, g).second.is_zero());
            CHECK(g.leading() == 1);
            std::vector<elem_t> ac(a.coeffs().begin(), a.coeffs().end()), bc(b.coeffs().begin(), b.coeffs().end());
            CHECK((g.degree() == std::optional<std::size_t>(0)) == oracle::coprime(*f, {ac, bc}));
        }
    }
}

TEST_CASE("scalar rank and determinant", "[polymat]") {
    auto f = FiniteField::of_order(4);
    ScalarMatrix m(f, 2, 3, {1, 2, 3, 2, f->mul(2, 2), f->mul(2, 3)});
    CHECK(scalar_rank(m) == 1);
    CHECK(row_basis(m).rows() == 1);
    std::mt19937 rng(3);
    for (unsigned q : {3u, 4u, 7u, 8u}) {
        auto g = FiniteField::of_order(q);
        std::uniform_int_distribution<elem_t> d(0, q - 1);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 1 + t % 5;
            ScalarMatrix s(g, n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) s.at(r, c) = d(rng);
            const elem_t det = scalar_determinant(s);
            CHECK(det == oracle::leibniz_det(s));
            CHECK((det != 0) == (scalar_rank(s) == n));
        }
    }
}

TEST_CASE("polynomial determinant agrees with pointwise Leibniz", "[polymat]") {
    std::mt19937 rng(17);
    auto f = FiniteField::of_order(16);
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto m = random_matrix(f, rng, n, n, 2);
        const auto det = determinant(m);
        CHECK((det.is_zero() || *det.degree() <= 2 * n));
        for (elem_t z0 : {0u, 1u, 5u, 11u}) CHECK(det(z0) == oracle::leibniz_det(eval_at(m, z0)));
    }
}

TEST_CASE("determinant is multilinear and alternating", "[polymat]") {
    std::mt19937 rng(23);
    auto f = FiniteField::of_order(9);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(f, rng, 3, 3, 2);
        const auto d = determinant(m);
        auto swapped = m;
        for (std::size_t c = 0; c < 3; ++c) std::swap(swapped.at(0, c), swapped.at(1, c));
        CHECK(determinant(swapped) == d.scaled(f->neg(1)));
        auto scaled = m;
        const auto s = random_poly(f, rng, 1);
        for (std::size_t c = 0; c < 3; ++c) scaled.at(2, c) = scaled.at(2, c) * s;
        CHECK(determinant(scaled) == d * s);
        auto dup = m;
        for (std::size_t c = 0; c < 3; ++c) dup.at(1, c) = dup.at(0, c);
        CHECK(determinant(dup).is_zero());
    }
}

TEST_CASE("maximal minors enumerate column subsets in order", "[polymat]") {
    auto f = FiniteField::of_order(8);
    const auto g = pmat(f, 2, 3, {"1", "0", "z", "0", "1", "z^2"});
    const auto minors = maximal_minors(g);
    REQUIRE(minors.size() == 3);
    CHECK(format_poly(minors[0]) == "1");
    CHECK(format_poly(minors[1]) == "z^2");
    CHECK(format_poly(minors[2]) == "z");  // det [[0,z],[1,z^2]] = -z
    CHECK_THROWS_KIND(maximal_minors(pmat(f, 2, 1, {"1", "z"})), ShapeError);
}

TEST_CASE("decompose reassembles the matrix", "[polymat]") {
    std::mt19937 rng(29);
    auto f = FiniteField::of_order(8);
    const auto g = random_matrix(f, rng, 2, 4, 3);
    const auto blocks = decompose(g);
    REQUIRE(blocks.size() == *g.max_degree() + 1);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t i = 0; i < blocks.size(); ++i) CHECK(blocks[i].at(r, c) == g.at(r, c).coeff(i));
    CHECK(decompose(g, 7).size() == 7);
    CHECK(decompose(PolyMatrix(f, 1, 2)).size() == 1);
}

TEST_CASE("leading row matrix takes each row's top coefficients", "[polymat]") {
    auto f = FiniteField::of_order(8);
    const auto g = pmat(f, 2, 3, {"1 + z", "a*z", "1", "a", "z^2", "a^2 + a^3*z^2"});
    const auto lead = leading_row_matrix(g);
    CHECK(lead.row(0)[0] == 1);
    CHECK(lead.row(0)[1] == f->generator());
    CHECK(lead.row(0)[2] == 0);
    CHECK(lead.row(1)[0] == 0);
    CHECK(lead.row(1)[1] == 1);
    CHECK(lead.row(1)[2] == f->exp(3));
    CHECK(g.row_degree(0) == 1u);
    CHECK(g.column_degree(2) == 2u);
}

TEST_CASE("shape and field checks", "[polymat]") {
    auto f = FiniteField::of_order(8), g = FiniteField::of_order(4);
    CHECK_THROWS_KIND(ScalarMatrix(f, 2, 2, {1, 2, 3}), ShapeError);
    CHECK_THROWS_KIND(PolyMatrix(f, 1, 1, {FqPoly::constant(g, 1)}), FieldMismatch);
    const ScalarMatrix blocks[] = {ScalarMatrix(f, 1, 2), ScalarMatrix(f, 1, 3)};
    CHECK_THROWS_KIND(vstack(blocks), ShapeError);
}

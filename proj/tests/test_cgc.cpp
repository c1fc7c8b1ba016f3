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

#include <algorithm>
#include <random>
#include <set>

#include "support/checks.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace convgoppa;

namespace {

std::set<Tuple> as_set(const std::vector<Tuple>& v) { return {v.begin(), v.end()}; }

std::set<Tuple> excluded_set(const ScanReport& r) {
    std::set<Tuple> out;
    for (const auto& o : r.excluded) out.insert(o.params);
    return out;
}

}  // namespace

TEST_CASE("Lucas binomials match exact binomials", "[cgc]") {
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (unsigned n = 0; n < 40; ++n)
            for (unsigned k = 0; k <= n + 1; ++k) CHECK(binomial_mod_p(n, k, p) == oracle::binomial_exact_mod(n, k, p));
}

TEST_CASE("Hasse derivatives on the GF(4) example", "[cgc]") {
    const auto spec = corpus::three_point_gf4();
    const elem_t a = spec.field->generator();
    CHECK(hasse_eval(spec, 0, a) == 1);
    CHECK(hasse_eval(spec, 1, a) == a);
    CHECK(hasse_eval(spec, 2, a) == 1);
}

TEST_CASE("Hasse derivative identities", "[cgc]") {
    std::mt19937 rng(61);
    for (unsigned q : {4u, 5u, 8u, 9u}) {
        auto f = FiniteField::of_order(q);
        std::uniform_int_distribution<elem_t> d(0, q - 1);
        for (int t = 0; t < 30; ++t) {
            std::vector<elem_t> lambda(1 + t % 5);
            for (auto& x : lambda) x = d(rng);
            const elem_t t0 = d(rng);
            const std::size_t delta = lambda.size() - 1;
            CHECK(hasse_eval(*f, lambda, delta, t0) == lambda[delta]);
            // s^{(0)} is plain evaluation
            CHECK(hasse_eval(*f, lambda, 0, t0) == FqPoly(f, lambda)(t0));
            // s(t0 + x) = sum_j s^{(j)}(t0) x^j
            const elem_t x = d(rng);
            elem_t taylor = 0;
            for (std::size_t j = 0; j <= delta; ++j)
                taylor = f->add(taylor, f->mul(hasse_eval(*f, lambda, j, t0), f->pow(x, j)));
            CHECK(taylor == FqPoly(f, lambda)(f->add(t0, x)));
        }
    }
}

TEST_CASE("Hasse derivative j = 1 over GF(5) at t0 = 1", "[cgc]") {
    auto f = FiniteField::of_order(5);
    for (const auto& l : projective_points(*f, 3)) {
        const elem_t expect = f->add(l[1], f->add(f->mul(2, l[2]), f->mul(3, l[3])));
        CHECK(hasse_eval(*f, l, 1, 1) == expect);
    }
}

TEST_CASE("GF(4) three-point code matches the printed matrix", "[cgc]") {
    const auto spec = corpus::three_point_gf4();
    const auto c = build(spec);
    const auto& g = c.generator();
    CHECK(format_poly(g.at(0, 0)) == "1 + a*z + z^2");
    CHECK(format_poly(g.at(0, 1)) == "1 + a^2*z + a^2*z^2");
    CHECK(format_poly(g.at(0, 2)) == "1 + z + a*z^2");
    CHECK(mds_criterion_equal_b(spec));
    CHECK(is_mds(c));
}

TEST_CASE("GF(8) three-point code matches the printed matrix", "[cgc]") {
    const auto c = build(corpus::three_point_gf8());
    const auto& g = c.generator();
    CHECK(format_poly(g.at(0, 0)) == "a^5 + z + z^2");
    CHECK(format_poly(g.at(0, 1)) == "a^5 + a*z + a^2*z^2");
    CHECK(format_poly(g.at(0, 2)) == "a^5 + a^2*z + a^4*z^2");
}

TEST_CASE("seven-point code coefficient matrices", "[cgc]") {
    auto f = FiniteField::of_order(8);
    const elem_t a2 = f->exp(2);
    const auto blocks = decompose(build(corpus::seven_point_gf8(a2, a2, a2)).generator());
    REQUIRE(blocks.size() == 3);
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(blocks[0].at(0, i) == 1);
        CHECK(blocks[1].at(0, i) == f->exp(i + 2));
        CHECK(blocks[2].at(0, i) == f->exp(2 * i + 2));
    }
}

TEST_CASE("equal-b criterion over GF(5) is the four printed conditions", "[cgc]") {
    auto f = FiniteField::of_order(5);
    for (const auto& l : projective_points(*f, 3)) {
        const auto spec = corpus::four_point_gf5(l);
        const bool expect = f->add(f->add(l[0], l[1]), f->add(l[2], l[3])) != 0 &&
                            f->add(l[1], f->add(f->mul(2, l[2]), f->mul(3, l[3]))) != 0 &&
                            f->add(l[2], f->mul(3, l[3])) != 0 && l[3] != 0;
        CHECK(mds_criterion_equal_b(spec) == expect);
    }
}

TEST_CASE("b = 0 criterion reduces to nonzero coefficients", "[cgc]") {
    auto f = FiniteField::of_order(8);
    CgcSpec spec{f, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}, {1, 1, 1}};
    CHECK(mds_criterion_equal_b(spec));
    CHECK(is_mds(build(spec)));
    spec.lambda = {1, 0, 1};
    CHECK_FALSE(mds_criterion_equal_b(spec));
    spec.points[1].b = 1;
    CHECK_THROWS_KIND(mds_criterion_equal_b(spec), PreconditionViolated);
}

TEST_CASE("equal-b criterion agrees with the free distance", "[cgc]") {
    std::mt19937 rng(67);
    int mds = 0, total = 0;
    for (unsigned q : {4u, 5u, 8u}) {
        auto f = FiniteField::of_order(q);
        std::uniform_int_distribution<elem_t> d(0, q - 1);
        for (int t = 0; t < 40; ++t) {
            const std::size_t delta = 1 + t % 3;
            const std::size_t n = delta + 1 + t % 2;
            if (n > q - 1) continue;
            const elem_t b = d(rng);
            std::vector<elem_t> as;
            for (elem_t x : f->elements())
                if (x != 0) as.push_back(x);
            std::shuffle(as.begin(), as.end(), rng);
            CgcSpec spec{f, {}, std::vector<elem_t>(delta + 1)};
            for (std::size_t i = 0; i < n; ++i) spec.points.push_back({as[i], b});
            for (auto& x : spec.lambda) x = d(rng);
            if (spec.lambda[delta] == 0) spec.lambda[delta] = 1;
            const bool crit = mds_criterion_equal_b(spec);
            try {
                const auto c = build(spec);
                CHECK(crit == is_mds(c));
                mds += crit;
                ++total;
            } catch (const Error& e) {
                // only a vanishing s(b) leaves the parameter space or breaks basicness
                CHECK_FALSE(crit);
                CHECK(hasse_eval(spec, 0, b) == 0);
            }
        }
    }
    CHECK(total > 60);
    CHECK(mds > 0);
}

TEST_CASE("parameter space", "[cgc]") {
    auto f = FiniteField::of_order(8);
    const elem_t a = f->generator();
    CHECK(in_parameter_space(corpus::three_point_gf8()));
    // only l_delta nonzero with a common b != 0: entries (a_i z + b)^2 share no root
    CgcSpec top{f, {{1, a}, {a, a}, {f->exp(2), a}}, {0, 0, 1}};
    CHECK(in_parameter_space(top));
    // s(t) = (t + t0)^2 with t0 the common value of z and a z + 1
    const elem_t t0 = f->div(1, f->sub(1, a));
    CgcSpec bad{f, {{1, 0}, {a, 1}, {f->exp(3), f->exp(5)}}, {f->mul(t0, t0), 0, 1}};
    CHECK_FALSE(in_parameter_space(bad));
    const auto g = generator_matrix(bad);
    CHECK(g.at(0, 0)(t0) == 0);
    CHECK(g.at(0, 1)(t0) == 0);
    CHECK_THROWS_KIND(build(bad), OutsideParameterSpace);
    // equal a imposes nothing
    CgcSpec same_a{f, {{1, 0}, {1, 1}}, {1, 1}};
    CHECK(in_parameter_space(same_a));
}

TEST_CASE("spec validation", "[cgc]") {
    auto f = FiniteField::of_order(8);
    CHECK_THROWS_KIND(build(CgcSpec{f, {{0, 1}, {1, 1}}, {1, 1}}), InvalidArgument);
    CHECK_THROWS_KIND(build(CgcSpec{f, {{1, 1}, {1, 1}, {2, 1}}, {1, 1}}), InvalidArgument);
    CHECK_THROWS_KIND(build(CgcSpec{f, {{1, 1}, {2, 1}}, {1, 1, 1}}), InvalidArgument);
    CHECK_THROWS_KIND(build(CgcSpec{f, {{1, 1}, {2, 1}}, {0, 0}}), InvalidArgument);
}

TEST_CASE("built codes have k = 1 and degree deg s", "[cgc]") {
    auto f = FiniteField::of_order(8);
    for (const auto& l : projective_points(*f, 2)) {
        try {
            const auto c = build(corpus::seven_point_gf8(l[0], l[1], l[2]));
            CHECK(c.dimension() == 1);
            CHECK(c.length() == 7);
            CHECK(c.degree() == (l[2] != 0 ? 2u : l[1] != 0 ? 1u : 0u));
            if (l[2] != 0 && is_mds(c)) CHECK(c.column_degrees() == std::vector<std::size_t>(7, 2));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::OutsideParameterSpace);
        }
    }
}

TEST_CASE("projective points", "[cgc]") {
    for (unsigned q : {2u, 3u, 4u, 5u, 8u})
        for (std::size_t dim = 0; dim <= 3; ++dim) {
            auto f = FiniteField::of_order(q);
            const auto pts = projective_points(*f, dim);
            std::size_t expect = 0;
            for (std::size_t i = 0, p = 1; i <= dim; ++i, p *= q) expect += p;
            CHECK(pts.size() == expect);
            CHECK(std::set<Tuple>(pts.begin(), pts.end()).size() == expect);
            for (const auto& v : pts) CHECK(*std::find_if(v.begin(), v.end(), [](elem_t x) { return x != 0; }) == 1);
        }
    CHECK(projective_points(*FiniteField::of_order(5), 3).size() == 156);
}

TEST_CASE("GF(5) four-point scan matches the printed conditions", "[cgc]") {
    auto f = FiniteField::of_order(5);
    const auto fam = cgc_family(f, corpus::four_point_gf5({1}).points, 3, projective_points(*f, 3));
    const auto conds = parse_conditions(f, "l0 + l1 + l2 + l3; l1 + 2*l2 + 3*l3; l2 + 3*l3; l3");
    const auto rep = scan_family(fam, conds);
    CHECK(rep.total == 156);
    CHECK(rep.failed.empty());
    CHECK(rep.mismatches.empty());
    CHECK(rep.matched_equations == true);
    CHECK(rep.mds_set.size() == 64);
    CHECK(rep.non_mds_set.size() + rep.excluded.size() == 92);
    CHECK(!rep.mds_set.empty());
    // a wrong prediction is reported
    const auto wrong = parse_conditions(f, "l0 + l1 + l2 + l3; l1 + 2*l2 + 3*l3; l3");
    const auto rep2 = scan_family(fam, wrong);
    CHECK(rep2.matched_equations == false);
    CHECK_FALSE(rep2.mismatches.empty());
}

TEST_CASE("case-study locus over GF(8) is {1, a^3, a^5, a^6}", "[cgc]") {
    auto f = FiniteField::of_order(8);
    const auto rep = scan_family(case_study_family(f));
    CHECK(rep.total == 7);
    CHECK(rep.failed.empty());
    std::set<Tuple> bad = as_set(rep.non_mds_set);
    for (const auto& t : excluded_set(rep)) bad.insert(t);
    const std::set<Tuple> expect{{1}, {f->exp(3)}, {f->exp(5)}, {f->exp(6)}};
    CHECK(bad == expect);
    // the locus polynomial, evaluated independently
    std::set<Tuple> roots;
    for (elem_t x : f->elements()) {
        const elem_t p1 = f->add(x, 1);
        const elem_t p2 = f->add(f->mul(x, x), p1);
        const elem_t p3 = f->add(f->pow(x, 3), f->add(f->mul(x, x), 1));
        if (f->mul(p1, f->mul(p2, p3)) == 0) roots.insert({x});
    }
    CHECK(roots == expect);
    const auto conds = parse_conditions(f, "l + 1; l^2 + l + 1; l^3 + l^2 + 1");
    CHECK(scan_family(case_study_family(f), conds).matched_equations == true);
}

TEST_CASE("case-study locus over GF(64) has at most six points", "[cgc]") {
    auto f = FiniteField::of_order(64);
    ScanOptions opt;
    opt.workers = 2;
    const auto conds = parse_conditions(f, "l + 1; l^2 + l + 1; l^3 + l^2 + 1");
    const auto rep = scan_family(case_study_family(f), conds, opt);
    CHECK(rep.total == 63);
    CHECK(rep.failed.empty());
    CHECK(rep.non_mds_set.size() + rep.excluded.size() == 6);
    CHECK(rep.matched_equations == true);
}

TEST_CASE("seven-point family locus", "[cgc]") {
    auto f = FiniteField::of_order(8);
    std::vector<Tuple> domain;
    for (const auto& l : projective_points(*f, 2))
        if (l[2] != 0) domain.push_back(l);
    std::vector<Point> pts = corpus::seven_point_gf8(1, 1, 1).points;
    const auto conds = parse_conditions(f, "l0 + l1*a + l2*a^2; l1");
    const auto rep = scan_family(cgc_family(f, pts, 2, domain), conds);
    CHECK(rep.total == 64);
    CHECK(rep.matched_equations == true);
    const elem_t a2 = f->exp(2);
    const Tuple rep_l{1, 1, 1};  // projective class of (a^2, a^2, a^2)
    CHECK(as_set(rep.mds_set).count(rep_l) == 1);
    CHECK(is_mds(build(corpus::seven_point_gf8(a2, a2, a2))));

    const auto all = cgc_family(f, pts, 2, projective_points(*f, 2));
    const auto with_top = parse_conditions(f, "l0 + l1*a + l2*a^2; l1; l2");
    CHECK(scan_family(all, with_top).matched_equations == true);
}

TEST_CASE("scaling lambda never changes MDS status", "[cgc]") {
    auto f = FiniteField::of_order(5);
    const auto pts = corpus::four_point_gf5({1}).points;
    for (const auto& l : projective_points(*f, 3)) {
        if (l[3] == 0) continue;
        std::optional<bool> first;
        for (elem_t s = 1; s < 5; ++s) {
            Tuple scaled(l);
            for (auto& x : scaled) x = f->mul(x, s);
            bool m = false;
            try {
                m = is_mds(build(CgcSpec{f, pts, scaled}));
            } catch (const Error&) {
            }
            if (!first) first = m;
            CHECK(*first == m);
        }
    }
}

TEST_CASE("condition expressions", "[cgc]") {
    auto f = FiniteField::of_order(8);
    const auto c = Condition::parse(f, "(l0 + a*l1)^2 - 3*l2");
    CHECK(c.arity() == 3);
    const Tuple t{1, 2, 3};
    const elem_t x = f->add(1, f->mul(f->generator(), 2));
    CHECK(c(t) == f->add(f->mul(x, x), 3));  // 3 = 1 in characteristic 2, and -1 = 1
    CHECK(Condition::parse(f, "l + 1")(Tuple{1}) == 0);
    CHECK_THROWS_KIND(c(Tuple{1}), InvalidArgument);
    CHECK_THROWS_KIND(Condition::parse(f, "l0 +"), Parse);
    CHECK_THROWS_KIND(Condition::parse(f, "q1"), Parse);
    CHECK(parse_conditions(f, "l0; l1; l2").size() == 3);
}

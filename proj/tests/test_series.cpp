#include "hertzinv/series.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using hertzinv::Int;
using hertzinv::MultiSeries;
using hertzinv::RationalExpr;
using hertzinv::validate_length_dominated;

namespace {

const std::vector<std::string> XY{"x", "y"};

MultiSeries random_poly(std::mt19937& rng, int max_exp, int max_coef) {
    std::uniform_int_distribution<int> exp_dist(0, max_exp);
    std::uniform_int_distribution<int> coef_dist(-max_coef, max_coef);
    MultiSeries out = MultiSeries::zero(XY, 8);
    for (int i = 0; i < 5; ++i)
        out += MultiSeries::monomial(XY, 8, {{"x", exp_dist(rng)}, {"y", exp_dist(rng)}},
                                     coef_dist(rng));
    return out;
}

}  // namespace

TEST_CASE("constructors and coefficient access") {
    const MultiSeries x = MultiSeries::variable(XY, 10, "x");
    const MultiSeries c = MultiSeries::constant(XY, 10, 7);
    CHECK(x.coeff({{"x", 1}}) == 1);
    CHECK(x.coeff({{"y", 1}}) == 0);
    CHECK(c.constant_term() == 7);
    CHECK(x.order() == 1);
    CHECK(c.order() == 0);
    CHECK(MultiSeries::zero(XY, 10).order() == MultiSeries::kUnbounded);
    const MultiSeries m = MultiSeries::monomial(XY, 10, {{"x", 2}, {"y", 3}}, -4);
    CHECK(m.coeff({{"x", 2}, {"y", 3}}) == -4);
    CHECK_THROWS_AS(MultiSeries::variable(XY, 10, "z"), std::invalid_argument);
    CHECK_THROWS_AS(MultiSeries::variable(XY, 10, "x", -1), std::invalid_argument);
}

TEST_CASE("arithmetic respects the length truncation") {
    const MultiSeries x = MultiSeries::variable(XY, 2, "x");
    const MultiSeries one = MultiSeries::constant(XY, 2, 1);
    CHECK((one + x) * (one - x) == one - x.pow(2));
    const MultiSeries s = x + x.pow(2);
    CHECK(s * s == x.pow(2));  // x^3 and x^4 fall past the truncation
    CHECK((x.pow(2) * x).is_zero());
}

TEST_CASE("zero coefficients are never stored") {
    const MultiSeries x = MultiSeries::variable(XY, 5, "x");
    CHECK((x - x).is_zero());
    CHECK((x - x).terms().empty());
}

TEST_CASE("ring identities on pseudo-random polynomials") {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 25; ++round) {
        const MultiSeries a = random_poly(rng, 3, 3);
        const MultiSeries b = random_poly(rng, 3, 3);
        const MultiSeries c = random_poly(rng, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (b + c) == (a + b) + c);
    }
}

TEST_CASE("reciprocal inverts unit series") {
    const MultiSeries one = MultiSeries::constant(XY, 5, 1);
    const MultiSeries x = MultiSeries::variable(XY, 5, "x");
    const MultiSeries geom = (one - x).reciprocal();
    for (int k = 0; k <= 5; ++k) CHECK(geom.coeff({{"x", k}}) == 1);

    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int round = 0; round < 100; ++round) {
        MultiSeries s = MultiSeries::constant(XY, 8, sign(rng) ? 1 : -1);
        MultiSeries tail = random_poly(rng, 4, 4);
        // push the tail to positive x-order so the inverse exists
        s += MultiSeries::variable(XY, 8, "x") * tail;
        CHECK(s.reciprocal() * s == MultiSeries::constant(XY, 8, 1));
    }
}

TEST_CASE("reciprocal rejects non-units") {
    const MultiSeries one = MultiSeries::constant(XY, 5, 1);
    const MultiSeries y = MultiSeries::variable(XY, 5, "y");
    CHECK_THROWS_AS(MultiSeries::constant(XY, 5, 2).reciprocal(), std::invalid_argument);
    CHECK_THROWS_AS(MultiSeries::constant(XY, MultiSeries::kUnbounded, 1).reciprocal(),
                    std::invalid_argument);
    CHECK_THROWS_AS((one - y).reciprocal(), std::invalid_argument);  // tail free of x
}

TEST_CASE("fibonacci reciprocal") {
    const std::vector<std::string> X{"x"};
    const MultiSeries one = MultiSeries::constant(X, 8, 1);
    const MultiSeries x = MultiSeries::variable(X, 8, "x");
    const MultiSeries f = (one - x - x.pow(2)).reciprocal();
    const std::vector<Int> expected{1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int k = 0; k <= 8; ++k) CHECK(f.coeff({{"x", k}}) == expected[static_cast<std::size_t>(k)]);
}

TEST_CASE("mapped_to embeds into a wider variable space") {
    const MultiSeries m = MultiSeries::monomial(XY, 6, {{"x", 2}, {"y", 1}}, 5);
    const MultiSeries wide = m.mapped_to({"x", "t", "y"});
    CHECK(wide.coeff({{"x", 2}, {"y", 1}}) == 5);
    CHECK(wide.coeff({{"x", 2}, {"t", 1}}) == 0);
    CHECK_THROWS_AS(m.mapped_to({"y", "x"}), std::invalid_argument);  // x must stay first
}

TEST_CASE("substitution") {
    const std::vector<std::string> X{"x"};
    const MultiSeries s =
        MultiSeries::monomial(XY, 6, {{"x", 1}, {"y", 1}}, 1);  // x*y
    const MultiSeries img = MultiSeries::constant(X, MultiSeries::kUnbounded, 1) +
                            MultiSeries::variable(X, MultiSeries::kUnbounded, "x");
    const MultiSeries out = s.substituted({{"y", img}}, X);
    CHECK(out.coeff({{"x", 1}}) == 1);
    CHECK(out.coeff({{"x", 2}}) == 1);

    // the truncation variable may only map to series of positive order
    CHECK_THROWS_AS(s.substituted({{"x", MultiSeries::constant(X, MultiSeries::kUnbounded, 1)}}, X),
                    std::invalid_argument);
    // unbound variables must exist in the target space
    CHECK_THROWS_AS(s.substituted({}, X), std::invalid_argument);
}

TEST_CASE("rational expressions expand exactly") {
    const std::vector<std::string> V{"x", "t", "u1"};
    auto mono = [&](int xe, int te, int ue) {
        return MultiSeries::monomial(V, MultiSeries::kUnbounded,
                                     {{"x", xe}, {"t", te}, {"u1", ue}}, 1);
    };
    const MultiSeries one = MultiSeries::constant(V, MultiSeries::kUnbounded, 1);
    const RationalExpr geom(mono(2, 2, 1), one - mono(1, 1, 1));
    const MultiSeries at4 = geom.expand(4);
    CHECK(at4 == mono(2, 2, 1).truncated(4) + mono(3, 3, 2).truncated(4) +
                     mono(4, 4, 3).truncated(4));
    // re-truncating a wider expansion matches expanding to the narrower order
    CHECK(geom.expand(6).truncated(4) == at4);

    CHECK_THROWS_AS(RationalExpr(one, mono(1, 0, 0)), std::invalid_argument);
    const RationalExpr sum = geom + RationalExpr::polynomial(mono(2, 0, 0));
    CHECK(sum.expand(3) == geom.expand(3) + mono(2, 0, 0).truncated(3));
    const RationalExpr prod = geom * RationalExpr::polynomial(mono(1, 0, 0));
    CHECK(prod.expand(4) == mono(3, 2, 1).truncated(4) + mono(4, 3, 2).truncated(4));
}

TEST_CASE("json round trip follows the schema") {
    const MultiSeries m = MultiSeries::monomial(XY, 6, {{"x", 4}, {"y", 2}}, Int("123456789012345678901"));
    const nlohmann::json j = m.to_json();
    CHECK(j["trunc"] == 6);
    CHECK(j["terms"][0]["coef"] == "123456789012345678901");
    CHECK(j["terms"][0]["exps"]["x"] == 4);
    CHECK(MultiSeries::from_json(j) == m);

    const MultiSeries unbounded = MultiSeries::constant(XY, MultiSeries::kUnbounded, 3);
    CHECK(unbounded.to_json()["trunc"].is_null());
    CHECK(MultiSeries::from_json(unbounded.to_json()) == unbounded);
}

TEST_CASE("length domination check") {
    CHECK_NOTHROW(validate_length_dominated(MultiSeries::monomial(XY, 6, {{"x", 2}, {"y", 2}}, 1)));
    CHECK_THROWS_AS(validate_length_dominated(MultiSeries::monomial(XY, 6, {{"y", 1}}, 1)),
                    std::logic_error);
}

TEST_CASE("pretty printing is stable") {
    const MultiSeries zero = MultiSeries::zero(XY, 4);
    CHECK(zero.to_pretty_string() == "0");
    const MultiSeries s = MultiSeries::monomial(XY, 4, {{"x", 2}, {"y", 1}}, 3) +
                          MultiSeries::constant(XY, 4, 1);
    CHECK(s.to_pretty_string() == s.to_pretty_string());
    CHECK(s.to_pretty_string().find("x^2") != std::string::npos);
}

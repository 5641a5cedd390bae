#include "hertzinv/permutation.hpp"

#include <stdexcept>

#include "doctest.h"

using hertzinv::Permutation;
using hertzinv::all_permutations;

TEST_CASE("construction validates the word") {
    CHECK(Permutation({2, 1, 4, 3}).size() == 4);
    CHECK(Permutation(std::vector<int>{}).size() == 0);
    CHECK_THROWS_AS(Permutation({1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("parse accepts compact and separated notation") {
    CHECK(Permutation::parse("2143") == Permutation({2, 1, 4, 3}));
    CHECK(Permutation::parse("2 1 4 3") == Permutation({2, 1, 4, 3}));
    CHECK(Permutation::parse("10 8 9 7 5 6 4 2 3 1").size() == 10);
    CHECK_THROWS_AS(Permutation::parse("122"), std::invalid_argument);
}

TEST_CASE("accessors are 1-based") {
    const Permutation p({3, 1, 2});
    CHECK(p.at(1) == 3);
    CHECK(p.at(3) == 2);
    CHECK_THROWS_AS(p.at(0), std::out_of_range);
    CHECK_THROWS_AS(p.at(4), std::out_of_range);
}

TEST_CASE("inverse and composition") {
    const Permutation p({2, 3, 1});
    CHECK(p.inverse() == Permutation({3, 1, 2}));
    CHECK(p.compose(p.inverse()) == Permutation::identity(3));
    CHECK(p.inverse().compose(p) == Permutation::identity(3));
    // (p o q)(i) = p(q(i))
    const Permutation q({1, 3, 2});
    CHECK(p.compose(q) == Permutation({2, 1, 3}));
}

TEST_CASE("involution recognition and cycle statistics") {
    CHECK(Permutation({2, 1, 4, 3}).is_involution());
    CHECK_FALSE(Permutation({2, 3, 1}).is_involution());
    const auto stats = Permutation({2, 1, 4, 3}).involution_stats();
    CHECK(stats.fixed_points == 0);
    CHECK(stats.two_cycles == 2);
    const auto stats2 = Permutation({1, 3, 2}).involution_stats();
    CHECK(stats2.fixed_points == 1);
    CHECK(stats2.two_cycles == 1);
    CHECK_THROWS_AS(Permutation({2, 3, 1}).involution_stats(), std::invalid_argument);
}

TEST_CASE("reverse complement") {
    CHECK(Permutation({2, 3, 1}).reverse_complement() == Permutation({3, 1, 2}));
    CHECK(Permutation({1, 3, 2}).reverse_complement() == Permutation({2, 1, 3}));
    CHECK(Permutation({1, 2, 3}).reverse_complement() == Permutation({1, 2, 3}));
    // applying it twice gives the original back
    const Permutation p = Permutation::parse("31452");
    CHECK(p.reverse_complement().reverse_complement() == p);
}

TEST_CASE("string rendering") {
    CHECK(Permutation({2, 1, 4, 3}).to_string() == "2 1 4 3");
    CHECK(Permutation({2, 1, 4, 3}).to_compact_string() == "2143");
    const Permutation big = Permutation::parse("10 8 9 7 5 6 4 2 3 1");
    CHECK(big.to_compact_string() == "10 8 9 7 5 6 4 2 3 1");
}

TEST_CASE("all_permutations is lexicographic and complete") {
    const auto perms = all_permutations(3);
    REQUIRE(perms.size() == 6);
    CHECK(perms.front() == Permutation({1, 2, 3}));
    CHECK(perms.back() == Permutation({3, 2, 1}));
    CHECK(all_permutations(0).size() == 1);
    for (std::size_t i = 1; i < perms.size(); ++i) CHECK(perms[i - 1] < perms[i]);
}

#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "eword/farey.hpp"
#include "eword/verify.hpp"

using eword::BigInt;
using eword::ContinuedFraction;
using eword::ExtRational;

namespace {

ExtRational R(std::int64_t p, std::int64_t q) { return ExtRational(p, q); }

// Brute force: every splitting p = m + r, q = n + s into canonical halves
// with |ms - rn| = 1, returned as (smaller, larger).
std::vector<std::pair<ExtRational, ExtRational>> splittings(std::int64_t p, std::int64_t q) {
    std::set<std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>> seen;
    std::vector<std::pair<ExtRational, ExtRational>> out;
    for (std::int64_t m = 0; m <= p; ++m) {
        for (std::int64_t n = 0; n <= q; ++n) {
            std::int64_t r = p - m, s = q - n;
            if ((m == 0 && n == 0) || (r == 0 && s == 0)) continue;
            if (std::gcd(m, n) != 1 || std::gcd(r, s) != 1) continue;
            if (std::abs(m * s - r * n) != 1) continue;
            ExtRational x(m, n), y(r, s);
            if (y < x) std::swap(x, y);
            if (seen.insert({{m, n}, {r, s}}).second && seen.insert({{r, s}, {m, n}}).second)
                out.emplace_back(x, y);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("normalize canonicalizes") {
    CHECK(eword::normalize(2, 4) == R(1, 2));
    CHECK(eword::normalize(3, -6) == R(-1, 2));
    CHECK(eword::normalize(5, 0) == ExtRational::infinity());
    CHECK(eword::normalize(-5, 0).num() == 1);
    CHECK(eword::normalize(0, -7) == R(0, 1));
    CHECK(eword::normalize(0, -7).den() == 1);
    CHECK_THROWS_AS(eword::normalize(0, 0), std::invalid_argument);
}

TEST_CASE("parse and print rationals") {
    CHECK(ExtRational::parse("68/13") == R(68, 13));
    CHECK(ExtRational::parse(" -3/1 ") == R(-3, 1));
    CHECK(ExtRational::parse("+6/4") == R(3, 2));
    CHECK(ExtRational::parse("7") == R(7, 1));
    CHECK(ExtRational::parse("inf") == ExtRational::infinity());
    CHECK(ExtRational::parse("1/0") == ExtRational::infinity());
    CHECK(ExtRational::infinity().to_string() == "1/0");
    CHECK_THROWS_AS(ExtRational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(ExtRational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(ExtRational::parse("0/0"), std::invalid_argument);
}

TEST_CASE("ordering puts infinity on top") {
    CHECK(R(1, 2) < R(2, 3));
    CHECK(R(-5, 1) < R(0, 1));
    CHECK(R(1000000, 1) < ExtRational::infinity());
    CHECK(R(-1000000, 1) < ExtRational::infinity());
}

TEST_CASE("farey neighbors") {
    CHECK(eword::is_farey_neighbor(R(1, 2), R(2, 3)));
    CHECK_FALSE(eword::is_farey_neighbor(R(1, 3), R(2, 3)));
    CHECK(eword::is_farey_neighbor(R(0, 1), ExtRational::infinity()));
}

TEST_CASE("farey sum") {
    CHECK(eword::farey_sum(R(1, 2), R(2, 3)) == R(3, 5));
    CHECK(eword::farey_sum(R(0, 1), ExtRational::infinity()) == R(1, 1));
    CHECK(eword::farey_sum(R(1, 2), R(1, 3)) == R(2, 5));
    CHECK_THROWS_AS(eword::farey_sum(R(1, 3), R(2, 3)), std::invalid_argument);
}

TEST_CASE("parents") {
    using P = std::pair<ExtRational, ExtRational>;
    CHECK(eword::parents(R(5, 1)) == P{R(4, 1), ExtRational::infinity()});
    CHECK(eword::parents(R(1, 4)) == P{R(0, 1), R(1, 3)});
    CHECK(eword::parents(R(-3, 1)) == P{ExtRational::infinity(), R(-2, 1)});
    CHECK(eword::parents(R(-1, 1)) == P{ExtRational::infinity(), R(0, 1)});
    CHECK(eword::parents(R(-1, 4)) == P{R(-1, 3), R(0, 1)});

    auto split = splittings(3, 5);
    REQUIRE(split.size() == 1);
    CHECK(eword::parents(R(3, 5)) == split.front());
    CHECK(split.front() == P{R(1, 2), R(2, 3)});

    CHECK_THROWS_WITH_AS(eword::parents(R(0, 1)), "orphan has no parents", std::invalid_argument);
    CHECK_THROWS_AS(eword::parents(ExtRational::infinity()), std::invalid_argument);
}

TEST_CASE("parents agree with brute-force splitting for positive rationals") {
    for (std::int64_t q = 1; q <= 25; ++q) {
        for (std::int64_t p = 1; p <= 25; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto split = splittings(p, q);
            REQUIRE(split.size() == 1);
            auto got = eword::parents(R(p, q));
            CAPTURE(p);
            CAPTURE(q);
            CHECK(got == split.front());
            CHECK(got.first < R(p, q));
            CHECK(R(p, q) < got.second);
        }
    }
}

TEST_CASE("parents of large rationals use exact arithmetic") {
    BigInt p("123456789012345678901234567890");
    BigInt q("98765432109876543210987654321");
    ExtRational x(p, q);
    auto [lo, hi] = eword::parents(x);
    CHECK(eword::is_farey_neighbor(lo, hi));
    CHECK(eword::farey_sum(lo, hi) == x);
    CHECK(lo < x);
    CHECK(x < hi);
}

TEST_CASE("continued fractions") {
    CHECK(eword::to_continued_fraction(R(68, 13)).to_string() == "[5;4,3]");
    CHECK(eword::to_continued_fraction(R(30, 7)).to_string() == "[4;3,2]");
    CHECK(eword::to_continued_fraction(R(4, 13)).to_string() == "[0;3,4]");
    CHECK(eword::to_continued_fraction(R(5, 1)).to_string() == "[5;]");
    CHECK(eword::to_continued_fraction(R(0, 1)).to_string() == "[0;]");

    CHECK(eword::from_continued_fraction(ContinuedFraction::parse("[5;4,3]")) == R(68, 13));
    CHECK(eword::from_continued_fraction(ContinuedFraction::parse("[9;]")) == R(9, 1));
    CHECK(eword::from_continued_fraction(ContinuedFraction::parse("[0;2]")) == R(1, 2));

    CHECK_THROWS_AS(eword::to_continued_fraction(R(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(eword::to_continued_fraction(ExtRational::infinity()), std::invalid_argument);
}

TEST_CASE("continued fraction parsing") {
    CHECK(ContinuedFraction::parse(" [ 5 ; 4 , 3 ] ").to_string() == "[5;4,3]");
    CHECK(ContinuedFraction::parse("[5]").to_string() == "[5;]");
    // trailing 1 folds into its predecessor
    CHECK(ContinuedFraction::parse("[0;3,3,1]") == ContinuedFraction::parse("[0;3,4]"));
    CHECK(ContinuedFraction::parse("[2;1]").to_string() == "[3;]");
    CHECK_THROWS_AS(ContinuedFraction::parse("[5;0,3]"), std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction::parse("[-1;2]"), std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction::parse("5;4,3"), std::invalid_argument);
    CHECK_THROWS_AS(ContinuedFraction::parse("[5;4,]"), std::invalid_argument);
}

TEST_CASE("continued fraction round trip on canonical sequences") {
    for (int a0 = 0; a0 <= 4; ++a0)
        for (int a1 = 1; a1 <= 4; ++a1)
            for (int a2 = 2; a2 <= 5; ++a2) {
                ContinuedFraction cf({BigInt(a0), BigInt(a1), BigInt(a2)});
                CHECK(eword::to_continued_fraction(eword::from_continued_fraction(cf)) == cf);
            }
}

TEST_CASE("farey level matches the mediant iteration") {
    CHECK(eword::farey_level(R(1, 1)) == 1);
    CHECK(eword::farey_level(R(3, 5)) == 4);
    CHECK(eword::farey_level(R(0, 1)) == 0);
    CHECK(eword::farey_level(ExtRational::infinity()) == 0);

    auto levels = eword::verify::oracle::stern_brocot_levels(30);
    CHECK(levels.at({1, 1}) == 1);
    CHECK(levels.at({3, 5}) == 4);
    for (const auto& [pq, level] : levels) CHECK(eword::farey_level(R(pq.first, pq.second)) == level);
}

TEST_CASE("mediant stays between neighbors and keeps neighbor relations") {
    auto xs = eword::verify::indices_up_to(14);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            const auto& x = xs[i];
            const auto& y = xs[j];
            if (!eword::is_farey_neighbor(x, y)) continue;
            auto m = eword::farey_sum(x, y);
            CHECK(eword::is_farey_neighbor(x, m));
            CHECK(eword::is_farey_neighbor(m, y));
            if (!x.is_infinite() && !y.is_infinite()) {
                CHECK(x < m);
                CHECK(m < y);
            }
        }
    }
}

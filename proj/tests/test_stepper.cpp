#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eword/enumeration.hpp"
#include "eword/stepper.hpp"
#include "eword/verify.hpp"

using eword::ESequence;
using eword::ExtRational;
using eword::FreeWord;
using eword::Generator;
using eword::GeneratorPair;
using eword::Side;

namespace {

ExtRational R(std::int64_t p, std::int64_t q) { return ExtRational(p, q); }
FreeWord W(const char* s) { return FreeWord::parse(s); }

GeneratorPair pair_of(const char* l, const char* r, ExtRational li, ExtRational ri) {
    return {W(l), W(r), li, ri};
}

}  // namespace

TEST_CASE("single steps follow the palindrome profile") {
    GeneratorPair p0 = eword::initial_pair();
    CHECK(p0 == pair_of("a", "b", R(0, 1), ExtRational::infinity()));
    CHECK(eword::profile_of(p0) == eword::PalindromeProfile::both_palindromes);

    GeneratorPair p1 = eword::step(p0, Side::right);
    CHECK(p1 == pair_of("b a", "b", R(1, 1), ExtRational::infinity()));
    CHECK(eword::profile_of(p1) == eword::PalindromeProfile::left_not);

    GeneratorPair p2 = eword::step(p1, Side::right);
    CHECK(p2 == pair_of("b a b", "b", R(2, 1), ExtRational::infinity()));

    GeneratorPair q1 = eword::step(p0, Side::left);
    CHECK(q1 == pair_of("a", "b a", R(0, 1), R(1, 1)));

    GeneratorPair bad = pair_of("a b", "b a", R(0, 1), R(1, 1));
    CHECK(eword::profile_of(bad) == eword::PalindromeProfile::neither);
    CHECK_THROWS_AS(eword::step(bad, Side::left), std::invalid_argument);
}

TEST_CASE("run_preserving equals repeated single steps") {
    std::vector<GeneratorPair> starts{
        eword::initial_pair(),
        pair_of("b^3 a b^2", "b", R(5, 1), ExtRational::infinity()),
        pair_of("b^3 a b^2", "b^3 a b^5 a b^3", R(5, 1), R(11, 2)),
        pair_of("a", "a b a^2", R(0, 1), R(1, 3)),
    };
    for (const auto& start : starts) {
        for (Side side : {Side::left, Side::right}) {
            GeneratorPair slow = start;
            for (std::int64_t n = 1; n <= 7; ++n) {
                slow = eword::step(slow, side);
                CHECK(eword::run_preserving(start, side, n) == slow);
            }
        }
    }
}

TEST_CASE("E-sequence parsing") {
    ESequence s = ESequence::parse("[5;4,3]");
    CHECK(s.entries() == std::vector<std::int64_t>{5, 4, 3});
    CHECK(s.depth() == 2);
    CHECK(s.is_canonical());
    CHECK(s.value() == R(68, 13));
    CHECK(s.to_string() == "[5;4,3]");
    CHECK(ESequence::parse("[2;]").to_string() == "[2;]");
    CHECK_FALSE(ESequence::parse("[0;3,3,1]").is_canonical());
    CHECK(ESequence::parse("[0;3,3,1]").value() == R(4, 13));
    CHECK(ESequence::preserved_at(0) == Side::right);
    CHECK(ESequence::preserved_at(1) == Side::left);
    CHECK_THROWS_AS(ESequence::parse("[1;0]"), std::invalid_argument);
    CHECK_THROWS_AS(ESequence::parse("[-1;2]"), std::invalid_argument);
    CHECK_THROWS_AS(ESequence::parse("hello"), std::invalid_argument);
}

TEST_CASE("worked example [4;3,2]") {
    auto trace = eword::run_esequence(ESequence::parse("[4;3,2]"));
    CHECK(trace.steps.size() == 9);
    CHECK(trace.final_pair().left == W("b^2 a b^4 a b^5 a b^4 a b^4 a b^5 a b^4 a b^2"));
    CHECK(trace.final_pair().right == W("b^2 a b^5 a b^4 a b^2"));
    CHECK(trace.last_changed == Side::left);
    CHECK(trace.last_changed_index() == R(30, 7));
    CHECK(eword::exponent_sum(trace.last_changed_word(), Generator::a) == 7);
    CHECK(eword::exponent_sum(trace.last_changed_word(), Generator::b) == 30);
}

TEST_CASE("worked example [0;3,4]") {
    auto trace = eword::run_esequence(ESequence::parse("[0;3,4]"));
    CHECK(trace.final_pair().left == W("a^2 b a^3 b a^3 b a^3 b a^2"));
    CHECK(trace.final_pair().right == W("a b a^2"));
    CHECK(trace.last_changed_index() == R(4, 13));
    CHECK(trace.final_pair().right_index == R(1, 3));
}

TEST_CASE("worked example [5;4,3]") {
    auto trace = eword::run_esequence(ESequence::parse("[5;4,3]"));
    REQUIRE(trace.steps.size() == 12);
    CHECK(trace.steps[4].pair.left == W("b^3 a b^2"));
    CHECK(trace.steps[8].pair.right == W("b^3 a b^5 a b^5 a b^5 a b^3"));
    CHECK(trace.steps[9].pair.left == W("b^3 a b^5 a b^5 a b^5 a b^5 a b^3"));
    CHECK(trace.last_changed_word() ==
          W("b^3 a b^5 a b^5 a b^5 a b^6 a b^5 a b^5 a b^5 a b^5 a b^6 a b^5 a b^5 a b^5 a b^3"));
    CHECK(eword::exponent_sum(trace.last_changed_word(), Generator::a) == 13);
    CHECK(eword::exponent_sum(trace.last_changed_word(), Generator::b) == 68);
}

TEST_CASE("[0;] performs no step") {
    CHECK_THROWS_AS(eword::run_esequence(ESequence::parse("[0;]")), std::invalid_argument);
}

TEST_CASE("tracked fractions are the approximants") {
    auto fr = eword::track_fractions(ESequence::parse("[5;4,3]"));
    REQUIRE(fr.size() == 3);
    CHECK(fr[0].p == 0);
    CHECK(*fr[0].r == 1);
    CHECK(fr[1].p == 5);
    CHECK(fr[1].q == 1);
    REQUIRE(fr[1].r.has_value());
    CHECK(*fr[1].r == 21);
    CHECK(*fr[1].s == 4);
    CHECK(fr[2].p == 68);
    CHECK(fr[2].q == 13);
    CHECK_FALSE(fr[2].r.has_value());

    auto apx = eword::approximants({5, 4, 3});
    REQUIRE(apx.size() == 3);
    CHECK(apx[0] == std::pair<eword::BigInt, eword::BigInt>{5, 1});
    CHECK(apx[1] == std::pair<eword::BigInt, eword::BigInt>{21, 4});
    CHECK(apx[2] == std::pair<eword::BigInt, eword::BigInt>{68, 13});
}

TEST_CASE("closed-form stopping pairs") {
    for (const char* text : {"[3;4]", "[4;1,3]", "[0;5,2]", "[0;2,1,3]", "[1;2]", "[0;1,2]"}) {
        ESequence seq = ESequence::parse(text);
        auto closed = eword::closed_form_stop(seq);
        REQUIRE(closed.has_value());
        CHECK(*closed == eword::run_esequence(seq).final_pair());
    }
    CHECK_FALSE(eword::closed_form_stop(ESequence::parse("[5;4,3]")).has_value());
    CHECK_FALSE(eword::closed_form_stop(ESequence::parse("[0;3,4,2,2]")).has_value());
}

TEST_CASE("exponent form") {
    ESequence seq = ESequence::parse("[5;4,3]");
    auto trace = eword::run_esequence(seq);
    CHECK(eword::exponent_form_check(trace.last_changed_word(), seq));
    CHECK_FALSE(eword::exponent_form_check(W("b^3 a b^7 a b^3"), seq));
    // only a^3 appears in the interior, never a^4
    CHECK_FALSE(eword::exponent_form_check(W("a^2 b a^3 b a^3 b a^3 b a^2"), ESequence::parse("[0;3,4]")));
    ESequence longer = ESequence::parse("[0;2,3,1,2]");
    CHECK(eword::exponent_form_check(eword::run_esequence(longer).last_changed_word(), longer));
    CHECK_THROWS_AS(eword::exponent_form_check(W("a"), ESequence::parse("[0;3,3,1]")), std::invalid_argument);
    CHECK_THROWS_AS(eword::exponent_form_check(W("a"), ESequence::parse("[0;]")), std::invalid_argument);
}

TEST_CASE("trace rendering") {
    auto trace = eword::run_esequence(ESequence::parse("[1;2]"));
    std::string text = eword::format_trace(trace);
    CHECK(text.find("(a, b) [indices: 0/1, 1/0]") != std::string::npos);
    CHECK(text.find("→ (b a, b) [preserved: R] [indices: 1/1, 1/0]") != std::string::npos);
    CHECK(text.find("index: 3/2") != std::string::npos);

    nlohmann::json j = eword::to_json(trace);
    CHECK(j.at("sequence") == "[1;2]");
    CHECK(j.at("last_changed_index") == "3/2");
    CHECK(j.at("steps").size() == 3);
}

TEST_CASE("every canonical sequence lands on the E-word of its value") {
    for (const auto& seq : eword::verify::canonical_sequences(4, 3)) {
        CAPTURE(seq.to_string());
        auto trace = eword::run_esequence(seq);
        CHECK(trace.last_changed_index() == seq.value());
        CHECK(trace.last_changed_word() == eword::e_word(seq.value()));
        const auto& fin = trace.final_pair();
        CHECK(fin.right == eword::e_word(fin.right_index));
        CHECK(fin.left == eword::e_word(fin.left_index));
        CHECK(eword::is_farey_neighbor(fin.left_index, fin.right_index));
    }
}

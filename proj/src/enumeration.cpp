#include "eword/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace eword {

namespace {

std::int64_t to_exponent(const BigInt& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("exponent " + n.str() + " does not fit in 64 bits");
    return n.convert_to<std::int64_t>();
}

bool odd(const BigInt& n) { return bit_test(abs(n), 0); }

struct Node {
    FreeWord word;
    std::size_t depth = 0;
};

class Evaluator {
public:
    Evaluator(TerminationMode mode, bool negative_side) : mode_(mode), negative_(negative_side) {}

    FreeWord run(const ExtRational& x, EvaluationStats& stats) {
        std::vector<ExtRational> stack{x};
        while (!stack.empty()) {
            ExtRational t = stack.back();
            if (memo_.contains(t)) {
                stack.pop_back();
                continue;
            }
            if (auto w = base_word(t)) {
                memo_.emplace(t, Node{std::move(*w), 0});
                stack.pop_back();
                continue;
            }
            auto [lo, hi] = parents(t);
            auto lo_it = memo_.find(lo);
            auto hi_it = memo_.find(hi);
            if (lo_it == memo_.end() || hi_it == memo_.end()) {
                if (lo_it == memo_.end()) stack.push_back(lo);
                if (hi_it == memo_.end()) stack.push_back(hi);
                continue;
            }
            const FreeWord& wl = lo_it->second.word;
            const FreeWord& wh = hi_it->second.word;
            bool pq_odd = odd(t.num()) && odd(t.den());
            // On the negative half-line the roles of lower and upper swap.
            bool upper_first = pq_odd != negative_;
            Node node{upper_first ? wh * wl : wl * wh,
                      1 + std::max(lo_it->second.depth, hi_it->second.depth)};
            ++stats.expansions;
            memo_.emplace(t, std::move(node));
            stack.pop_back();
        }
        stats.depth = memo_.at(x).depth;
        return memo_.at(x).word;
    }

private:
    std::optional<FreeWord> base_word(const ExtRational& t) const {
        if (t.is_infinite()) return FreeWord::generator(Generator::b);
        if (t.is_zero()) return FreeWord::generator(Generator::a, negative_ ? -1 : 1);
        if (mode_ == TerminationMode::shortcut) {
            if (t.is_integer()) return e_word_integer(t.num());
            if (t.is_reciprocal()) return e_word_reciprocal(t.num() * t.den());
        }
        return std::nullopt;
    }

    TerminationMode mode_;
    bool negative_;
    std::map<ExtRational, Node> memo_;
};

}  // namespace

TerminationMode parse_mode(std::string_view text) {
    if (text == "orphan") return TerminationMode::orphan;
    if (text == "shortcut") return TerminationMode::shortcut;
    throw std::invalid_argument("mode must be 'orphan' or 'shortcut'");
}

std::string_view to_string(TerminationMode mode) {
    return mode == TerminationMode::orphan ? "orphan" : "shortcut";
}

int sign_function(const BigInt& x) { return x < 0 ? 1 : -1; }

FreeWord e_word(const ExtRational& x, TerminationMode mode) {
    EvaluationStats stats;
    return e_word(x, mode, stats);
}

FreeWord e_word(const ExtRational& x, TerminationMode mode, EvaluationStats& stats) {
    stats = {};
    Evaluator ev(mode, x.is_negative());
    return ev.run(x, stats);
}

FreeWord e_word_integer(const BigInt& n) {
    BigInt mag = abs(n);
    std::int64_t floor_half = to_exponent(mag / 2);
    std::int64_t ceil_half = to_exponent((mag + 1) / 2);
    // A^s(n) with a = A^-1.
    std::int64_t a_exp = -sign_function(n);
    return FreeWord({{Generator::b, ceil_half}, {Generator::a, a_exp}, {Generator::b, floor_half}});
}

FreeWord e_word_reciprocal(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("e_word_reciprocal: n must be nonzero (1/0 is an orphan)");
    BigInt mag = abs(n);
    std::int64_t floor_half = to_exponent(mag / 2);
    std::int64_t ceil_half = to_exponent((mag + 1) / 2);
    std::int64_t s = -sign_function(n);
    return FreeWord({{Generator::a, s * floor_half}, {Generator::b, 1}, {Generator::a, s * ceil_half}});
}

std::vector<std::size_t> matching_parity_rows(const ExtRational& x, const ExtRational& y) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < kParityTable.size(); ++i) {
        const ParityRow& row = kParityTable[i];
        if (row.p_odd == odd(x.num()) && row.q_odd == odd(x.den()) && row.r_odd == odd(y.num()) &&
            row.s_odd == odd(y.den()))
            rows.push_back(i);
    }
    return rows;
}

std::pair<ExtRational, FreeWord> child_word(const ExtRational& x, const FreeWord& wx,
                                            const ExtRational& y, const FreeWord& wy) {
    if (x.is_negative() || y.is_negative())
        throw std::invalid_argument("child_word: indices must be nonnegative");
    if (!(x < y)) throw std::invalid_argument("child_word: expected x < y");
    ExtRational child = farey_sum(x, y);
    auto rows = matching_parity_rows(x, y);
    if (rows.size() != 1)
        throw std::logic_error("child_word: parity table does not cover " + x.to_string() + ", " +
                               y.to_string());
    const ParityRow& row = kParityTable[rows.front()];
    FreeWord w = row.order == ProductOrder::upper_lower ? wy * wx : wx * wy;
    return {std::move(child), std::move(w)};
}

}  // namespace eword

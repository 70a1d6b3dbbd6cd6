#pragma once

/**
 * @file farey.hpp
 * @brief Exact arithmetic on Q ∪ {∞}.
 *
 * Values are kept in lowest terms with a nonnegative denominator:
 *   - zero is 0/1
 *   - infinity is 1/0 (there is no -1/0)
 *
 * Ordering treats ∞ as the greatest element. The one place where ∞ sits on
 * the other end of the line is parents() of a negative rational, where the
 * pair is read on the negative half-line and ∞ comes first.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eword {

using BigInt = boost::multiprecision::cpp_int;

class ExtRational {
public:
    /// 0/1.
    ExtRational() = default;

    /// Canonicalizes p/q. Throws std::invalid_argument on 0/0.
    ExtRational(BigInt p, BigInt q);
    ExtRational(std::int64_t p, std::int64_t q) : ExtRational(BigInt(p), BigInt(q)) {}

    static ExtRational infinity() { return ExtRational(1, 0); }
    static ExtRational integer(BigInt n) { return ExtRational(std::move(n), BigInt(1)); }

    /// Accepts "p/q", "p", an optional sign, and "inf" / "∞" for 1/0.
    static ExtRational parse(std::string_view text);

    const BigInt& num() const noexcept { return p_; }
    const BigInt& den() const noexcept { return q_; }

    bool is_infinite() const noexcept { return q_ == 0; }
    bool is_zero() const noexcept { return p_ == 0; }
    bool is_negative() const noexcept { return p_ < 0; }
    bool is_orphan() const noexcept { return is_zero() || is_infinite(); }
    bool is_integer() const noexcept { return q_ == 1; }
    /// 1/n or -1/n for some n ≠ 0 (this includes ±1/1).
    bool is_reciprocal() const noexcept { return q_ != 0 && abs(p_) == 1; }

    ExtRational negated() const;

    /// "p/q"; ∞ renders as "1/0".
    std::string to_string() const;

    friend bool operator==(const ExtRational&, const ExtRational&) = default;
    friend std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y);

private:
    BigInt p_{0};
    BigInt q_{1};
};

std::ostream& operator<<(std::ostream& os, const ExtRational& x);

ExtRational normalize(const BigInt& p, const BigInt& q);

/// |ps - rq| == 1.
bool is_farey_neighbor(const ExtRational& x, const ExtRational& y);

/// (p+r)/(q+s). Throws std::invalid_argument if x and y are not neighbors.
ExtRational farey_sum(const ExtRational& x, const ExtRational& y);

/// The two lower-level neighbors whose Farey sum is x, as (lower, upper).
///
/// For x > 0 the pair is ordered by value with ∞ as the maximum. For x < 0
/// the pair mirrors parents(-x), so the parents of -n are (∞, -n+1) and the
/// parents of -1/n are (-1/(n-1), 0). Throws std::invalid_argument for the
/// orphans 0/1 and 1/0.
std::pair<ExtRational, ExtRational> parents(const ExtRational& x);

/// [a0; a1, ..., ak] with a0 >= 0, ai >= 1 and ak >= 2 when k >= 1.
class ContinuedFraction {
public:
    ContinuedFraction() : entries_{BigInt(0)} {}

    /// Validates the entries. A trailing 1 is folded into its predecessor
    /// ([n0; ..., nj, 1] becomes [n0; ..., nj+1]).
    explicit ContinuedFraction(std::vector<BigInt> entries);

    /// "[a0;a1,...,ak]", whitespace-tolerant. "[5;]" and "[5]" are both n/1.
    static ContinuedFraction parse(std::string_view text);

    const std::vector<BigInt>& entries() const noexcept { return entries_; }
    /// k, the number of entries after a0.
    std::size_t depth() const noexcept { return entries_.size() - 1; }

    std::string to_string() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<BigInt> entries_;
};

/// Splits "[a0;a1,...]" into raw integers without any canonical folding.
std::vector<BigInt> parse_bracket_sequence(std::string_view text);

/// Canonical expansion of a finite x >= 0. Throws std::invalid_argument
/// for negative or infinite input.
ContinuedFraction to_continued_fraction(const ExtRational& x);

/// Evaluates via the approximant recursion g_i = a_i g_{i-1} + g_{i-2}.
ExtRational from_continued_fraction(const ContinuedFraction& cf);

/// Convergents g_i/h_i for i = 0..k of any entry list (trailing 1 allowed).
std::vector<std::pair<BigInt, BigInt>> approximants(const std::vector<BigInt>& entries);

/// Number of mediant steps before x first appears starting from {0/1, 1/0};
/// the sum of the continued fraction entries. 0/1 and 1/0 have level 0.
/// Throws std::invalid_argument for negative input.
BigInt farey_level(const ExtRational& x);

}  // namespace eword

#pragma once

/**
 * @file enumeration.hpp
 * @brief The enumeration scheme x ↦ E_x from Q ∪ {∞} into the free group.
 *
 * E_{0/1} = a and E_{1/0} = b. For any other x = p/q with parents
 * m/n < x < r/s,
 *
 *     E_x = E_{r/s} E_{m/n}   if pq is odd,
 *     E_x = E_{m/n} E_{r/s}   if pq is even.
 *
 * Negative indices are the mirror image of the positive half-line: the
 * parents are read outward from 0 (see farey::parents), the orphan 0
 * contributes a^-1, and the product order flips. Equivalently
 * E_{-x} is E_x with a replaced by a^-1, which is exactly what the
 * closed forms for n/1 and 1/n give when n < 0.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "eword/farey.hpp"
#include "eword/word.hpp"

namespace eword {

enum class TerminationMode : std::uint8_t {
    /// Recurse until 0/1 or 1/0.
    orphan,
    /// Stop at n/1 and 1/n using the closed forms.
    shortcut,
};

TerminationMode parse_mode(std::string_view text);
std::string_view to_string(TerminationMode mode);

/// s(x) = 1 for x < 0 and -1 for x >= 0.
int sign_function(const BigInt& x);

struct EvaluationStats {
    /// Distinct indices that were split into parents.
    std::size_t expansions = 0;
    /// Longest chain of nested splits below the input (0 for a base case).
    std::size_t depth = 0;
};

FreeWord e_word(const ExtRational& x, TerminationMode mode = TerminationMode::orphan);
FreeWord e_word(const ExtRational& x, TerminationMode mode, EvaluationStats& stats);

/// b^⌈|n|/2⌉ a^-s(n) b^⌊|n|/2⌋, the word of n/1.
FreeWord e_word_integer(const BigInt& n);

/// a^(-s(n)⌊|n|/2⌋) b a^(-s(n)⌈|n|/2⌉), the word of 1/n. Throws
/// std::invalid_argument for n = 0.
FreeWord e_word_reciprocal(const BigInt& n);

enum class ProductOrder : std::uint8_t {
    /// E_{p/q} E_{r/s}
    lower_upper,
    /// E_{r/s} E_{p/q}
    upper_lower,
};

/// One row of the parity table for Farey neighbors p/q < r/s.
struct ParityRow {
    bool p_odd, q_odd, r_odd, s_odd;
    bool sum_product_odd;  // (p+r)(q+s)
    ProductOrder order;
};

inline constexpr std::array<ParityRow, 6> kParityTable{{
    {false, true, true, false, true, ProductOrder::upper_lower},
    {true, true, false, true, false, ProductOrder::lower_upper},
    {true, true, true, false, false, ProductOrder::lower_upper},
    {true, false, false, true, true, ProductOrder::upper_lower},
    {false, true, true, true, false, ProductOrder::lower_upper},
    {true, false, true, true, false, ProductOrder::lower_upper},
}};

/// Indices into kParityTable whose parity pattern matches (x, y).
std::vector<std::size_t> matching_parity_rows(const ExtRational& x, const ExtRational& y);

/// Given E_x and E_y for nonnegative neighbors x < y, returns the Farey sum
/// and its word, ordered by the parity table. Throws std::invalid_argument
/// for non-neighbors, misordered or negative inputs.
std::pair<ExtRational, FreeWord> child_word(const ExtRational& x, const FreeWord& wx,
                                            const ExtRational& y, const FreeWord& wy);

}  // namespace eword

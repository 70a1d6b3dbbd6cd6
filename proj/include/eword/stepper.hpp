#pragma once

/**
 * @file stepper.hpp
 * @brief The palindrome-aware generator-replacement algorithm on words.
 *
 * A step keeps one generator of the ordered pair (left, right) in place and
 * replaces the other by a product of the two:
 *
 *     profile                    keep left          keep right
 *     both palindromes           (l, r·l)           (r·l, r)
 *     left not a palindrome      (l, l·r)           (l·r, r)
 *     right not a palindrome     (l, l·r)           (l·r, r)
 *
 * An E-sequence [n0; n1, ..., nk] drives a run from (a, b): entry i is the
 * number of consecutive steps that keep the right generator (i even) or
 * the left generator (i odd). The last replaced generator is E_{p/q} with
 * p/q = [n0; n1, ..., nk].
 *
 * Everything here is symbolic; no matrices or traces are involved.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eword/farey.hpp"
#include "eword/word.hpp"

namespace eword {

enum class Side : std::uint8_t { left, right };

constexpr Side other(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }
/// "L" or "R".
std::string_view to_string(Side s);

struct GeneratorPair {
    FreeWord left;
    FreeWord right;
    ExtRational left_index;
    ExtRational right_index;

    const FreeWord& at(Side s) const { return s == Side::left ? left : right; }
    const ExtRational& index_at(Side s) const { return s == Side::left ? left_index : right_index; }

    friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
};

/// (a, b) with indices (0/1, 1/0).
GeneratorPair initial_pair();

/// Which of the two generators fail to be palindromes.
enum class PalindromeProfile : std::uint8_t { both_palindromes, left_not, right_not, neither };

PalindromeProfile profile_of(const GeneratorPair& pair);

/// One step keeping `preserve`. The replaced side's index becomes the Farey
/// sum of the two indices. Throws std::invalid_argument if neither
/// generator is a palindrome.
GeneratorPair step(const GeneratorPair& pair, Side preserve);

/// n consecutive steps keeping `preserve`, evaluated by the closed form for
/// the pair's palindrome profile:
///
///     profile                keep left              keep right
///     both palindromes       (l, E_{1/n}(l, r))     (E_n(l, r), r)
///     left not               (l, l^n r)             (E_{1/n}(r, l), r)
///     right not              (l, E_n(r, l))         (l r^n, r)
///
/// where E_n(x, y) and E_{1/n}(x, y) are the integer and reciprocal words
/// with a ↦ x and b ↦ y.
GeneratorPair run_preserving(const GeneratorPair& pair, Side preserve, std::int64_t n);

class ESequence {
public:
    /// n0 >= 0 and ni >= 1 for i >= 1. A trailing 1 is kept as given.
    explicit ESequence(std::vector<std::int64_t> entries);

    static ESequence parse(std::string_view text);
    static ESequence from_continued_fraction(const ContinuedFraction& cf);

    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
    std::int64_t operator[](std::size_t i) const { return entries_.at(i); }
    /// k.
    std::size_t depth() const noexcept { return entries_.size() - 1; }

    /// Last entry is at least 2 (or the sequence is [n0;]).
    bool is_canonical() const noexcept;

    /// Keep the right generator for even i, the left for odd i.
    static Side preserved_at(std::size_t i) noexcept { return i % 2 == 0 ? Side::right : Side::left; }

    ExtRational value() const;
    std::string to_string() const;

    friend bool operator==(const ESequence&, const ESequence&) = default;

private:
    std::vector<std::int64_t> entries_;
};

/// p_i/q_i is the left index after stage 2i-2 and r_i/s_i the right index
/// after stage 2i-1. The final r_i is absent when stage 2i-1 does not exist.
struct TrackedFractions {
    BigInt p, q;
    std::optional<BigInt> r, s;
};

struct TraceStep {
    GeneratorPair pair;
    Side preserved;
    /// Position in the E-sequence that produced this step.
    std::size_t stage;
};

struct StepTrace {
    ESequence sequence;
    GeneratorPair initial;
    std::vector<TraceStep> steps;
    std::vector<TrackedFractions> fractions;
    /// The generator replaced by the final step.
    Side last_changed;

    const GeneratorPair& final_pair() const { return steps.empty() ? initial : steps.back().pair; }
    const FreeWord& last_changed_word() const { return final_pair().at(last_changed); }
    const ExtRational& last_changed_index() const { return final_pair().index_at(last_changed); }
};

/// Runs the E-sequence from (a, b) one step at a time. Throws
/// std::invalid_argument for [0;], which performs no step.
StepTrace run_esequence(const ESequence& seq);

/// The p_i, q_i, r_i, s_i recursion on its own, starting from
/// (p_0, q_0, r_0, s_0) = (0, 1, 1, 0).
std::vector<TrackedFractions> track_fractions(const ESequence& seq);

/// Stopping pair by direct formula for the eight small shapes
/// [n0; n1], [n0; 1, n2] (n0 > 0) and [0; n1, n2], [0; n1, 1, n3].
/// Returns std::nullopt for any other shape.
std::optional<GeneratorPair> closed_form_stop(const ESequence& seq);

/// Whether `word` has the exponent shape that long sequences force:
/// for n0 > 0, b^k1 a b^k2 a ... a b^k(q+1) with k1, k(q+1) in {⌊n0/2⌋, ⌈n0/2⌉}
/// and the interior exponents forming exactly {n0, n0+1}; for n0 = 0 the
/// same with a and b swapped and n1 in place of n0. Throws
/// std::invalid_argument for non-canonical sequences and for [0;].
bool exponent_form_check(const FreeWord& word, const ESequence& seq);

nlohmann::json to_json(const GeneratorPair& pair, Alphabet alphabet = Alphabet::ab);
nlohmann::json to_json(const StepTrace& trace, Alphabet alphabet = Alphabet::ab);

/// One line per step: "→ (left, right) [preserved: L] [indices: j/k, m/n]".
std::string format_trace(const StepTrace& trace, Alphabet alphabet = Alphabet::ab);

}  // namespace eword

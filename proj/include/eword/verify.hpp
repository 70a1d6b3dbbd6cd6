#pragma once

// Exhaustive small-instance checks of the structural results, each run
// against an independent recomputation.
//
// The word oracle is the literal recursive definition with parents found by
// searching all splittings p = m + r, q = n + s. It shares no code path with
// the memoized evaluator in enumeration.cpp.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eword/farey.hpp"
#include "eword/stepper.hpp"
#include "eword/word.hpp"

namespace eword::verify {

struct Failure {
    std::string input;
    std::string expected;
    std::string got;
};

struct PropertyCheck {
    std::string name;
    std::size_t instances = 0;
    std::vector<Failure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

struct SweepReport {
    int bound = 0;
    std::vector<PropertyCheck> checks;

    bool ok() const noexcept;
    std::size_t failure_count() const noexcept;
    const PropertyCheck* find(std::string_view name) const;
};

using EWordTable = std::map<ExtRational, FreeWord>;

namespace oracle {

/// Plain fraction for the oracle; ∞ is {1, 0}.
struct Frac {
    std::int64_t p;
    std::int64_t q;
};

/// Parents of p/q > 0 by exhaustive splitting, as (lower, upper).
std::pair<Frac, Frac> split_parents(std::int64_t p, std::int64_t q);

/// Unmemoized recursive E-word. p/q must be in lowest terms with q >= 0.
FreeWord e_word(std::int64_t p, std::int64_t q);

/// First level at which each x > 0 with p + q <= bound appears in the mediant
/// iteration from {0/1, 1/0}, keyed by (p, q).
std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> stern_brocot_levels(int bound);

/// #{p : 0 < |p| < n, gcd(p, n) = 1}.
std::size_t phi_count(int n);

}  // namespace oracle

/// Every x with |p| + q <= bound (including 0/1 and 1/0), in increasing order.
std::vector<ExtRational> indices_up_to(int bound);

/// E-words of every index with |p| + q <= bound, from the oracle recursion.
EWordTable enumerate_ewords(int bound);

/// (|Φ|, number of enumerated E-words of length n).
std::pair<std::size_t, std::size_t> count_ewords_of_length(int n);
std::pair<std::size_t, std::size_t> count_ewords_of_length(int n, const EWordTable& table);

/// Canonical E-sequences [n0; n1..nk] with n0 <= max_entry, 1 <= ni <= max_entry,
/// k <= max_depth, last entry >= 2 when k >= 1; [0;] is excluded.
std::vector<ESequence> canonical_sequences(int max_entry, int max_depth);
/// Canonical expansions of every x > 0 with p + q <= bound.
std::vector<ESequence> sequences_up_to(int bound);

PropertyCheck check_parents(int bound);
PropertyCheck check_neighbor_parity(int bound);
/// Exactly one parity row per neighbor pair; child_word order against the oracle.
PropertyCheck check_parity_table(int bound);
PropertyCheck check_continued_fractions(int bound);
PropertyCheck check_farey_level(int bound);
PropertyCheck check_oracle_agreement(int bound);
PropertyCheck check_mode_equivalence(int bound);
PropertyCheck check_palindrome_parity(int bound);
PropertyCheck check_length(int bound);
PropertyCheck check_child_consistency(int bound);
PropertyCheck check_shortcut_depth(int bound);
PropertyCheck check_count_bijection(int lo, int hi);

/// stepper-vs-enumeration, tracked-fractions, step-ewordness,
/// step-structure and exponent-sums over the given sequences.
std::vector<PropertyCheck> check_stepper(const std::vector<ESequence>& sequences);

PropertyCheck check_closed_forms(int max_entry);
PropertyCheck check_run_preserving(int bound, int max_n);
PropertyCheck check_exponent_forms(int max_entry, int max_depth);

/// Runs every property at the given bound. Requires bound >= 2.
SweepReport sweep(int bound);

nlohmann::json to_json(const SweepReport& report);
std::string format_report(const SweepReport& report);

}  // namespace eword::verify

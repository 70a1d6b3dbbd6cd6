#pragma once

// Reduced words in the free group on {a, b}.
//
// Internally every word is over {a, b}. The {A, B} alphabet is a rendering
// of the same element with a = A^-1 and b = B.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace eword {

enum class Generator : std::uint8_t { a, b };

enum class Alphabet : std::uint8_t { ab, AB };

struct Run {
    Generator gen;
    std::int64_t exp;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Thrown by FreeWord::parse; position is a byte offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class FreeWord {
public:
    FreeWord() = default;

    /// Reduces the runs: merges equal neighbours and drops zero exponents.
    explicit FreeWord(std::vector<Run> runs);

    static FreeWord generator(Generator g, std::int64_t exp = 1);
    static FreeWord parse(std::string_view text, Alphabet alphabet = Alphabet::ab);

    const std::vector<Run>& runs() const noexcept { return runs_; }
    bool is_identity() const noexcept { return runs_.empty(); }

    /// Number of letters, i.e. the sum of |exponent|.
    std::int64_t length() const noexcept;

    std::string format(Alphabet alphabet = Alphabet::ab) const;

    friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
    std::vector<Run> runs_;
};

std::ostream& operator<<(std::ostream& os, const FreeWord& w);

FreeWord concat(const FreeWord& lhs, const FreeWord& rhs);
FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs);

FreeWord inverse(const FreeWord& w);
FreeWord reverse(const FreeWord& w);
/// w^n for any integer n; negative powers use the inverse.
FreeWord power(const FreeWord& w, std::int64_t n);

/// Replaces a by x and b by y.
FreeWord substitute(const FreeWord& w, const FreeWord& x, const FreeWord& y);

bool is_palindrome(const FreeWord& w);
std::int64_t exponent_sum(const FreeWord& w, Generator g);
std::int64_t factor_count(const FreeWord& w, Generator g);
bool has_negative_exponent(const FreeWord& w);

/// [[gen, exp], ...] in the requested alphabet.
nlohmann::json to_json(const FreeWord& w, Alphabet alphabet = Alphabet::ab);

std::string_view to_string(Generator g);
Alphabet parse_alphabet(std::string_view text);

}  // namespace eword

#include "eword/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include <nlohmann/json.hpp>

namespace eword {

namespace {

// Appends one run onto an already reduced run list.
void push_reduced(std::vector<Run>& out, Run r) {
    if (r.exp == 0) return;
    if (!out.empty() && out.back().gen == r.gen) {
        out.back().exp += r.exp;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back(r);
}

}  // namespace

FreeWord::FreeWord(std::vector<Run> runs) {
    runs_.reserve(runs.size());
    for (const Run& r : runs) push_reduced(runs_, r);
}

FreeWord FreeWord::generator(Generator g, std::int64_t exp) { return FreeWord({{g, exp}}); }

std::int64_t FreeWord::length() const noexcept {
    std::int64_t n = 0;
    for (const Run& r : runs_) n += std::abs(r.exp);
    return n;
}

FreeWord FreeWord::parse(std::string_view text, Alphabet alphabet) {
    std::vector<Run> runs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip_ws();
        if (i != text.size()) throw ParseError("unexpected text after identity '1'", i);
        return {};
    }
    const char lower_a = alphabet == Alphabet::ab ? 'a' : 'A';
    const char lower_b = alphabet == Alphabet::ab ? 'b' : 'B';
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        Generator g;
        if (text[i] == lower_a) {
            g = Generator::a;
        } else if (text[i] == lower_b) {
            g = Generator::b;
        } else {
            throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        }
        ++i;
        std::int64_t exp = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_ws();
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string_view digits = text.substr(start, i - start);
            if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
            if (ec != std::errc() || ptr != digits.data() + digits.size())
                throw ParseError("expected an integer exponent", start);
            if (exp == 0) throw ParseError("exponent must be nonzero", start);
        }
        // a = A^-1
        if (alphabet == Alphabet::AB && g == Generator::a) exp = -exp;
        runs.push_back({g, exp});
    }
    return FreeWord(std::move(runs));
}

std::string FreeWord::format(Alphabet alphabet) const {
    if (runs_.empty()) return "1";
    std::string out;
    for (const Run& r : runs_) {
        if (!out.empty()) out += ' ';
        std::int64_t e = r.exp;
        if (alphabet == Alphabet::AB) {
            out += r.gen == Generator::a ? 'A' : 'B';
            if (r.gen == Generator::a) e = -e;
        } else {
            out += r.gen == Generator::a ? 'a' : 'b';
        }
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << w.format(); }

FreeWord concat(const FreeWord& lhs, const FreeWord& rhs) {
    std::vector<Run> out = lhs.runs();
    out.reserve(out.size() + rhs.runs().size());
    // push_reduced cancels transitively at the seam.
    for (const Run& r : rhs.runs()) push_reduced(out, r);
    return FreeWord(std::move(out));
}

FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs) { return concat(lhs, rhs); }

FreeWord inverse(const FreeWord& w) {
    std::vector<Run> out(w.runs().rbegin(), w.runs().rend());
    for (Run& r : out) r.exp = -r.exp;
    return FreeWord(std::move(out));
}

FreeWord reverse(const FreeWord& w) {
    return FreeWord(std::vector<Run>(w.runs().rbegin(), w.runs().rend()));
}

FreeWord power(const FreeWord& w, std::int64_t n) {
    if (n < 0) return power(inverse(w), -n);
    FreeWord result;
    FreeWord base = w;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

FreeWord substitute(const FreeWord& w, const FreeWord& x, const FreeWord& y) {
    FreeWord out;
    for (const Run& r : w.runs()) out = out * power(r.gen == Generator::a ? x : y, r.exp);
    return out;
}

bool is_palindrome(const FreeWord& w) {
    const auto& r = w.runs();
    return std::equal(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(r.size() / 2), r.rbegin());
}

std::int64_t exponent_sum(const FreeWord& w, Generator g) {
    std::int64_t total = 0;
    for (const Run& r : w.runs())
        if (r.gen == g) total += r.exp;
    return total;
}

std::int64_t factor_count(const FreeWord& w, Generator g) {
    std::int64_t total = 0;
    for (const Run& r : w.runs())
        if (r.gen == g) total += std::abs(r.exp);
    return total;
}

bool has_negative_exponent(const FreeWord& w) {
    return std::any_of(w.runs().begin(), w.runs().end(), [](const Run& r) { return r.exp < 0; });
}

nlohmann::json to_json(const FreeWord& w, Alphabet alphabet) {
    auto out = nlohmann::json::array();
    for (const Run& r : w.runs()) {
        if (alphabet == Alphabet::AB) {
            bool is_a = r.gen == Generator::a;
            out.push_back({is_a ? "A" : "B", is_a ? -r.exp : r.exp});
        } else {
            out.push_back({std::string(to_string(r.gen)), r.exp});
        }
    }
    return out;
}

std::string_view to_string(Generator g) { return g == Generator::a ? "a" : "b"; }

Alphabet parse_alphabet(std::string_view text) {
    if (text == "ab") return Alphabet::ab;
    if (text == "AB") return Alphabet::AB;
    throw std::invalid_argument("alphabet must be 'ab' or 'AB'");
}

}  // namespace eword

#include "eword/stepper.hpp"

#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "eword/enumeration.hpp"

namespace eword {

namespace {

FreeWord a_pow(std::int64_t e) { return FreeWord::generator(Generator::a, e); }
FreeWord b_pow(std::int64_t e) { return FreeWord::generator(Generator::b, e); }

std::int64_t floor_half(std::int64_t n) { return n / 2; }
std::int64_t ceil_half(std::int64_t n) { return (n + 1) / 2; }

ExtRational add_scaled(const ExtRational& x, const ExtRational& y, std::int64_t n) {
    // x ⊕ y ⊕ ... ⊕ y, n times, on raw numerators and denominators.
    return ExtRational(x.num() + n * y.num(), x.den() + n * y.den());
}

}  // namespace

std::string_view to_string(Side s) { return s == Side::left ? "L" : "R"; }

GeneratorPair initial_pair() {
    return {a_pow(1), b_pow(1), ExtRational(0, 1), ExtRational::infinity()};
}

PalindromeProfile profile_of(const GeneratorPair& pair) {
    bool l = is_palindrome(pair.left);
    bool r = is_palindrome(pair.right);
    if (l && r) return PalindromeProfile::both_palindromes;
    if (r) return PalindromeProfile::left_not;
    if (l) return PalindromeProfile::right_not;
    return PalindromeProfile::neither;
}

GeneratorPair step(const GeneratorPair& pair, Side preserve) {
    PalindromeProfile profile = profile_of(pair);
    if (profile == PalindromeProfile::neither)
        throw std::invalid_argument("step: neither generator is a palindrome");
    FreeWord product = profile == PalindromeProfile::both_palindromes ? pair.right * pair.left
                                                                      : pair.left * pair.right;
    GeneratorPair next = pair;
    ExtRational child = farey_sum(pair.left_index, pair.right_index);
    if (preserve == Side::left) {
        next.right = std::move(product);
        next.right_index = std::move(child);
    } else {
        next.left = std::move(product);
        next.left_index = std::move(child);
    }
    return next;
}

GeneratorPair run_preserving(const GeneratorPair& pair, Side preserve, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("run_preserving: n must be nonnegative");
    if (n == 0) return pair;
    const FreeWord& l = pair.left;
    const FreeWord& r = pair.right;
    const FreeWord integer_word = e_word_integer(n);
    const FreeWord reciprocal_word = e_word_reciprocal(n);
    GeneratorPair next = pair;
    switch (profile_of(pair)) {
        case PalindromeProfile::both_palindromes:
            if (preserve == Side::left)
                next.right = substitute(reciprocal_word, l, r);
            else
                next.left = substitute(integer_word, l, r);
            break;
        case PalindromeProfile::left_not:
            if (preserve == Side::left)
                next.right = power(l, n) * r;
            else
                next.left = substitute(reciprocal_word, r, l);
            break;
        case PalindromeProfile::right_not:
            if (preserve == Side::left)
                next.right = substitute(integer_word, r, l);
            else
                next.left = l * power(r, n);
            break;
        case PalindromeProfile::neither:
            throw std::invalid_argument("run_preserving: neither generator is a palindrome");
    }
    if (preserve == Side::left)
        next.right_index = add_scaled(pair.right_index, pair.left_index, n);
    else
        next.left_index = add_scaled(pair.left_index, pair.right_index, n);
    return next;
}

ESequence::ESequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("E-sequence needs at least n0");
    if (entries_.front() < 0) throw std::invalid_argument("E-sequence n0 must be nonnegative");
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] < 1)
            throw std::invalid_argument("E-sequence entries after n0 must be positive");
    }
}

ESequence ESequence::parse(std::string_view text) {
    std::vector<std::int64_t> entries;
    for (const BigInt& v : parse_bracket_sequence(text)) {
        if (v > std::numeric_limits<std::int64_t>::max() || v < 0)
            throw std::invalid_argument("E-sequence entry " + v.str() + " out of range");
        entries.push_back(v.convert_to<std::int64_t>());
    }
    return ESequence(std::move(entries));
}

ESequence ESequence::from_continued_fraction(const ContinuedFraction& cf) {
    std::vector<std::int64_t> entries;
    for (const BigInt& v : cf.entries()) {
        if (v > std::numeric_limits<std::int64_t>::max())
            throw std::invalid_argument("continued fraction entry too large for a step count");
        entries.push_back(v.convert_to<std::int64_t>());
    }
    return ESequence(std::move(entries));
}

bool ESequence::is_canonical() const noexcept { return entries_.size() == 1 || entries_.back() >= 2; }

ExtRational ESequence::value() const {
    std::vector<BigInt> big(entries_.begin(), entries_.end());
    auto conv = approximants(big);
    return ExtRational(conv.back().first, conv.back().second);
}

std::string ESequence::to_string() const {
    std::string out = "[" + std::to_string(entries_.front()) + ";";
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + "]";
}

std::vector<TrackedFractions> track_fractions(const ESequence& seq) {
    std::vector<TrackedFractions> out;
    out.push_back({0, 1, BigInt(1), BigInt(0)});
    const std::size_t k = seq.depth();
    for (std::size_t i = 1; 2 * i - 2 <= k; ++i) {
        const TrackedFractions& prev = out.back();
        TrackedFractions cur;
        const BigInt n_even = seq[2 * i - 2];
        cur.p = n_even * *prev.r + prev.p;
        cur.q = n_even * *prev.s + prev.q;
        if (2 * i - 1 <= k) {
            const BigInt n_odd = seq[2 * i - 1];
            cur.r = n_odd * cur.p + *prev.r;
            cur.s = n_odd * cur.q + *prev.s;
        }
        out.push_back(std::move(cur));
    }
    return out;
}

StepTrace run_esequence(const ESequence& seq) {
    if (seq.depth() == 0 && seq[0] == 0)
        throw std::invalid_argument("E-sequence [0;] performs no step");
    StepTrace trace{seq, initial_pair(), {}, track_fractions(seq), Side::left};
    GeneratorPair pair = trace.initial;
    for (std::size_t stage = 0; stage <= seq.depth(); ++stage) {
        Side keep = ESequence::preserved_at(stage);
        for (std::int64_t t = 0; t < seq[stage]; ++t) {
            pair = step(pair, keep);
            trace.steps.push_back({pair, keep, stage});
        }
    }
    trace.last_changed = other(trace.steps.back().preserved);
    return trace;
}

std::optional<GeneratorPair> closed_form_stop(const ESequence& seq) {
    const std::size_t k = seq.depth();
    const FreeWord a = a_pow(1);
    const FreeWord b = b_pow(1);
    FreeWord left, right;
    if (seq[0] > 0 && (k == 1 || (k == 2 && seq[1] == 1))) {
        const std::int64_t n0 = seq[0];
        const std::int64_t m0 = floor_half(n0), M0 = ceil_half(n0);
        const bool odd = n0 % 2 == 1;
        if (k == 1) {
            const std::int64_t n1 = seq[1];
            if (odd) {
                left = b_pow(M0) * a * b_pow(m0);
                right = b_pow(M0) * power(a * b_pow(n0), n1 - 1) * a * b_pow(M0);
            } else {
                const std::int64_t m1 = floor_half(n1), M1 = ceil_half(n1);
                left = b_pow(m0) * a * b_pow(m0);
                right = b_pow(m0) * power(a * b_pow(n0), m1 - 1) * a * b_pow(n0 + 1) *
                        power(a * b_pow(n0), M1 - 1) * a * b_pow(m0);
            }
        } else {
            const std::int64_t n2 = seq[2];
            const std::int64_t m2 = floor_half(n2), M2 = ceil_half(n2);
            if (odd) {
                left = b_pow(M0) * power(a * b_pow(n0 + 1), m2) * a * b_pow(n0) *
                       power(a * b_pow(n0 + 1), M2 - 1) * a * b_pow(M0);
                right = b_pow(M0) * a * b_pow(M0);
            } else {
                left = b_pow(m0) * power(a * b_pow(n0 + 1), n2) * a * b_pow(m0);
                right = b_pow(m0 + 1) * a * b_pow(m0);
            }
        }
    } else if (seq[0] == 0 && (k == 2 || (k == 3 && seq[2] == 1))) {
        const std::int64_t n1 = seq[1];
        const std::int64_t m1 = floor_half(n1), M1 = ceil_half(n1);
        const bool odd = n1 % 2 == 1;
        if (k == 2) {
            const std::int64_t n2 = seq[2];
            if (odd) {
                left = a_pow(M1) * power(b * a_pow(n1), n2 - 1) * b * a_pow(M1);
                right = a_pow(m1) * b * a_pow(M1);
            } else {
                const std::int64_t m2 = floor_half(n2), M2 = ceil_half(n2);
                left = a_pow(m1) * power(b * a_pow(n1), M2 - 1) * b * a_pow(n1 + 1) *
                       power(b * a_pow(n1), m2 - 1) * b * a_pow(m1);
                right = a_pow(m1) * b * a_pow(m1);
            }
        } else {
            const std::int64_t n3 = seq[3];
            const std::int64_t m3 = floor_half(n3), M3 = ceil_half(n3);
            if (odd) {
                left = a_pow(M1) * b * a_pow(M1);
                right = a_pow(M1) * power(b * a_pow(n1 + 1), M3 - 1) * b * a_pow(n1) *
                        power(b * a_pow(n1 + 1), m3) * b * a_pow(M1);
            } else {
                left = a_pow(m1) * b * a_pow(m1 + 1);
                right = a_pow(m1) * power(b * a_pow(n1 + 1), n3) * b * a_pow(m1);
            }
        }
    } else {
        return std::nullopt;
    }
    auto fractions = track_fractions(seq);
    const TrackedFractions& last = fractions.back();
    const TrackedFractions& with_rs = last.r ? last : fractions[fractions.size() - 2];
    return GeneratorPair{std::move(left), std::move(right), ExtRational(last.p, last.q),
                         ExtRational(*with_rs.r, *with_rs.s)};
}

bool exponent_form_check(const FreeWord& word, const ESequence& seq) {
    if (!seq.is_canonical())
        throw std::invalid_argument("exponent_form_check: " + seq.to_string() +
                                    " is not a canonical continued fraction");
    if (seq[0] == 0 && seq.depth() == 0)
        throw std::invalid_argument("exponent_form_check: [0;] has no exponent form");
    const bool b_heavy = seq[0] > 0;
    const Generator big = b_heavy ? Generator::b : Generator::a;
    const std::int64_t n = b_heavy ? seq[0] : seq[1];
    const std::int64_t lo = floor_half(n), hi = ceil_half(n);

    // Exponents of `big` between consecutive single letters of the other generator.
    std::vector<std::int64_t> slots{0};
    for (const Run& r : word.runs()) {
        if (r.gen == big) {
            if (r.exp <= 0) return false;
            slots.back() += r.exp;
        } else {
            if (r.exp != 1) return false;
            slots.push_back(0);
        }
    }
    if (slots.size() < 2) return false;
    auto boundary_ok = [&](std::int64_t e) { return e == lo || e == hi; };
    if (!boundary_ok(slots.front()) || !boundary_ok(slots.back())) return false;
    std::set<std::int64_t> interior(slots.begin() + 1, slots.end() - 1);
    return interior == std::set<std::int64_t>{n, n + 1};
}

nlohmann::json to_json(const GeneratorPair& pair, Alphabet alphabet) {
    return {
        {"left", to_json(pair.left, alphabet)},
        {"right", to_json(pair.right, alphabet)},
        {"left_text", pair.left.format(alphabet)},
        {"right_text", pair.right.format(alphabet)},
        {"left_index", pair.left_index.to_string()},
        {"right_index", pair.right_index.to_string()},
    };
}

nlohmann::json to_json(const StepTrace& trace, Alphabet alphabet) {
    nlohmann::json steps = nlohmann::json::array();
    for (const TraceStep& s : trace.steps) {
        nlohmann::json j = to_json(s.pair, alphabet);
        j["preserved"] = std::string(to_string(s.preserved));
        j["stage"] = s.stage;
        steps.push_back(std::move(j));
    }
    nlohmann::json fractions = nlohmann::json::array();
    for (std::size_t i = 0; i < trace.fractions.size(); ++i) {
        const TrackedFractions& f = trace.fractions[i];
        fractions.push_back({
            {"i", i},
            {"p", f.p.str()},
            {"q", f.q.str()},
            {"r", f.r ? nlohmann::json(f.r->str()) : nlohmann::json(nullptr)},
            {"s", f.s ? nlohmann::json(f.s->str()) : nlohmann::json(nullptr)},
        });
    }
    const FreeWord& last = trace.last_changed_word();
    return {
        {"sequence", trace.sequence.to_string()},
        {"value", trace.sequence.value().to_string()},
        {"initial", to_json(trace.initial, alphabet)},
        {"steps", std::move(steps)},
        {"fractions", std::move(fractions)},
        {"final", to_json(trace.final_pair(), alphabet)},
        {"last_changed", std::string(to_string(trace.last_changed))},
        {"last_changed_word", last.format(alphabet)},
        {"last_changed_index", trace.last_changed_index().to_string()},
        {"exponent_sums",
         {{"a", exponent_sum(last, Generator::a)}, {"b", exponent_sum(last, Generator::b)}}},
    };
}

std::string format_trace(const StepTrace& trace, Alphabet alphabet) {
    std::ostringstream os;
    auto pair_text = [&](const GeneratorPair& p) {
        return "(" + p.left.format(alphabet) + ", " + p.right.format(alphabet) + ")";
    };
    auto indices = [](const GeneratorPair& p) {
        return "[indices: " + p.left_index.to_string() + ", " + p.right_index.to_string() + "]";
    };
    os << "  " << pair_text(trace.initial) << " " << indices(trace.initial) << "\n";
    for (const TraceStep& s : trace.steps) {
        os << "→ " << pair_text(s.pair) << " [preserved: " << to_string(s.preserved) << "] "
           << indices(s.pair) << "\n";
    }
    const FreeWord& last = trace.last_changed_word();
    os << "last changed: " << to_string(trace.last_changed) << " = " << last.format(alphabet) << "\n";
    os << "index: " << trace.last_changed_index() << "\n";
    os << "exponent sums: a=" << exponent_sum(last, Generator::a)
       << " b=" << exponent_sum(last, Generator::b) << "\n";
    return os.str();
}

}  // namespace eword

#include "eword/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "eword/enumeration.hpp"

namespace eword::verify {

namespace {

std::int64_t as_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

bool odd(const BigInt& v) { return bit_test(abs(v), 0); }

FreeWord oracle_word(const ExtRational& x) { return oracle::e_word(as_i64(x.num()), as_i64(x.den())); }

void expect(PropertyCheck& check, bool ok, std::string input, std::string expected, std::string got) {
    ++check.instances;
    if (!ok) check.failures.push_back({std::move(input), std::move(expected), std::move(got)});
}

std::string pair_text(const GeneratorPair& p) {
    return "(" + p.left.format() + ", " + p.right.format() + ") [" + p.left_index.to_string() + ", " +
           p.right_index.to_string() + "]";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

/// All Farey-neighbor pairs x < y among the given indices.
std::vector<std::pair<ExtRational, ExtRational>> neighbor_pairs(const std::vector<ExtRational>& xs) {
    std::vector<std::pair<ExtRational, ExtRational>> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (is_farey_neighbor(xs[i], xs[j])) out.emplace_back(xs[i], xs[j]);
    return out;
}

std::vector<ExtRational> nonnegative(const std::vector<ExtRational>& xs) {
    std::vector<ExtRational> out;
    std::copy_if(xs.begin(), xs.end(), std::back_inserter(out),
                 [](const ExtRational& x) { return !x.is_negative(); });
    return out;
}

}  // namespace

bool SweepReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.ok(); });
}

std::size_t SweepReport::failure_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures.size();
    return n;
}

const PropertyCheck* SweepReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<ExtRational> indices_up_to(int bound) {
    std::vector<ExtRational> out{ExtRational::infinity()};
    if (bound >= 1) out.emplace_back(0, 1);
    for (std::int64_t q = 1; q < bound; ++q) {
        for (std::int64_t p = 1; p + q <= bound; ++p) {
            if (std::gcd(p, q) != 1) continue;
            out.emplace_back(p, q);
            out.emplace_back(-p, q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

EWordTable enumerate_ewords(int bound) {
    if (bound < 1) throw std::invalid_argument("enumerate_ewords: bound must be >= 1");
    EWordTable table;
    for (const ExtRational& x : indices_up_to(bound)) table.emplace(x, oracle_word(x));
    return table;
}

std::pair<std::size_t, std::size_t> count_ewords_of_length(int n, const EWordTable& table) {
    std::size_t words = 0;
    for (const auto& [x, w] : table)
        if (w.length() == n) ++words;
    return {oracle::phi_count(n), words};
}

std::pair<std::size_t, std::size_t> count_ewords_of_length(int n) {
    if (n < 1) throw std::invalid_argument("count_ewords_of_length: n must be positive");
    return count_ewords_of_length(n, enumerate_ewords(n));
}

std::vector<ESequence> canonical_sequences(int max_entry, int max_depth) {
    std::vector<ESequence> out;
    std::vector<std::vector<std::int64_t>> frontier;
    for (std::int64_t n0 = 0; n0 <= max_entry; ++n0) frontier.push_back({n0});
    for (int depth = 0; depth <= max_depth; ++depth) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& e : frontier) {
            bool canonical = e.size() == 1 || e.back() >= 2;
            bool empty_run = e.size() == 1 && e.front() == 0;
            if (canonical && !empty_run) out.emplace_back(e);
            if (depth < max_depth) {
                for (std::int64_t v = 1; v <= max_entry; ++v) {
                    auto grown = e;
                    grown.push_back(v);
                    next.push_back(std::move(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<ESequence> sequences_up_to(int bound) {
    std::vector<ESequence> out;
    for (const ExtRational& x : indices_up_to(bound)) {
        if (x.is_negative() || x.is_orphan()) continue;
        out.push_back(ESequence::from_continued_fraction(to_continued_fraction(x)));
    }
    return out;
}

PropertyCheck check_parents(int bound) {
    PropertyCheck check{"parents"};
    for (const ExtRational& x : indices_up_to(bound)) {
        if (x.is_orphan()) continue;
        auto [lo, hi] = parents(x);
        std::string got = lo.to_string() + " " + hi.to_string();
        if (!x.is_negative()) {
            auto [olo, ohi] = oracle::split_parents(as_i64(x.num()), as_i64(x.den()));
            ExtRational elo(olo.p, olo.q), ehi(ohi.p, ohi.q);
            bool ok = lo == elo && hi == ehi && is_farey_neighbor(lo, hi) && farey_sum(lo, hi) == x &&
                      lo < x && x < hi;
            expect(check, ok, x.to_string(), elo.to_string() + " " + ehi.to_string(), got);
        } else if (x.is_integer()) {
            // parents of n < 0 are ∞ and n + 1
            ExtRational elo = ExtRational::infinity(), ehi = ExtRational::integer(x.num() + 1);
            expect(check, lo == elo && hi == ehi, x.to_string(), elo.to_string() + " " + ehi.to_string(),
                   got);
        } else if (x.is_reciprocal()) {
            // parents of 1/n, n < -1, are 1/(n + 1) and 0
            BigInt n = -x.den();
            ExtRational elo(BigInt(1), n + 1), ehi(0, 1);
            expect(check, lo == elo && hi == ehi, x.to_string(), elo.to_string() + " " + ehi.to_string(),
                   got);
        } else {
            auto [olo, ohi] = oracle::split_parents(-as_i64(x.num()), as_i64(x.den()));
            ExtRational elo(-ohi.p, ohi.q), ehi(-olo.p, olo.q);
            bool ok = lo == elo && hi == ehi && is_farey_neighbor(lo, hi) &&
                      ExtRational(lo.num() + hi.num(), lo.den() + hi.den()) == x;
            expect(check, ok, x.to_string(), elo.to_string() + " " + ehi.to_string(), got);
        }
    }
    return check;
}

PropertyCheck check_neighbor_parity(int bound) {
    PropertyCheck check{"neighbor-parity"};
    for (const auto& [x, y] : neighbor_pairs(indices_up_to(bound))) {
        bool p = odd(x.num()), q = odd(x.den()), r = odd(y.num()), s = odd(y.den());
        bool forbidden = (!p && !q) || (!r && !s) || (p && q && r && s) || (!p && !r && q && s) ||
                         (p && r && !q && !s);
        expect(check, !forbidden, x.to_string() + " " + y.to_string(), "allowed parity pattern",
               "forbidden parity pattern");
    }
    return check;
}

PropertyCheck check_parity_table(int bound) {
    PropertyCheck check{"parity-table"};
    for (const auto& [x, y] : neighbor_pairs(indices_up_to(bound))) {
        auto rows = matching_parity_rows(x, y);
        std::string input = x.to_string() + " " + y.to_string();
        expect(check, rows.size() == 1, input, "exactly one row", std::to_string(rows.size()) + " rows");
        if (rows.size() != 1) continue;
        const ParityRow& row = kParityTable[rows.front()];
        bool actual = odd(x.num() + y.num()) && odd(x.den() + y.den());
        expect(check, row.sum_product_odd == actual, input + " (p+r)(q+s) parity",
               bool_text(actual), bool_text(row.sum_product_odd));
        if (x.is_negative() || y.is_negative()) continue;
        ExtRational sum = farey_sum(x, y);
        FreeWord expected = oracle_word(sum);
        FreeWord got = child_word(x, oracle_word(x), y, oracle_word(y)).second;
        expect(check, got == expected, input + " child " + sum.to_string(), expected.format(),
               got.format());
    }
    return check;
}

PropertyCheck check_continued_fractions(int bound) {
    PropertyCheck check{"cf-roundtrip"};
    for (const ExtRational& x : indices_up_to(bound)) {
        if (x.is_negative() || x.is_infinite()) continue;
        ContinuedFraction cf = to_continued_fraction(x);
        ExtRational back = from_continued_fraction(cf);
        bool canonical = cf.depth() == 0 || cf.entries().back() >= 2;
        expect(check, back == x && canonical, x.to_string(), x.to_string(),
               back.to_string() + " via " + cf.to_string());
        // the other direction on the canonical expansion itself
        ContinuedFraction again = to_continued_fraction(back);
        expect(check, again == cf, cf.to_string(), cf.to_string(), again.to_string());
    }
    return check;
}

PropertyCheck check_farey_level(int bound) {
    PropertyCheck check{"farey-level"};
    auto levels = oracle::stern_brocot_levels(bound);
    for (const ExtRational& x : indices_up_to(bound)) {
        if (x.is_negative()) continue;
        std::int64_t expected = 0;
        if (!x.is_orphan()) expected = levels.at({as_i64(x.num()), as_i64(x.den())});
        BigInt got = farey_level(x);
        expect(check, got == expected, x.to_string(), std::to_string(expected), got.str());
    }
    return check;
}

PropertyCheck check_oracle_agreement(int bound) {
    PropertyCheck check{"oracle-agreement"};
    for (const ExtRational& x : indices_up_to(bound)) {
        FreeWord expected = oracle_word(x);
        FreeWord got = e_word(x, TerminationMode::orphan);
        expect(check, got == expected, x.to_string(), expected.format(), got.format());
    }
    return check;
}

PropertyCheck check_mode_equivalence(int bound) {
    PropertyCheck check{"mode-equivalence"};
    for (const ExtRational& x : indices_up_to(bound)) {
        FreeWord orphan = e_word(x, TerminationMode::orphan);
        FreeWord shortcut = e_word(x, TerminationMode::shortcut);
        expect(check, orphan == shortcut, x.to_string(), orphan.format(), shortcut.format());
    }
    return check;
}

PropertyCheck check_palindrome_parity(int bound) {
    PropertyCheck check{"palindrome-parity"};
    for (const ExtRational& x : indices_up_to(bound)) {
        FreeWord w = e_word(x);
        bool pq_even = !(odd(x.num()) && odd(x.den()));
        // direct reverse-and-compare, independent of is_palindrome
        bool pal = reverse(w).runs() == w.runs();
        expect(check, pal == pq_even && is_palindrome(w) == pal, x.to_string() + " " + w.format(),
               "palindrome=" + bool_text(pq_even), "palindrome=" + bool_text(pal));
    }
    return check;
}

PropertyCheck check_length(int bound) {
    PropertyCheck check{"length"};
    for (const ExtRational& x : indices_up_to(bound)) {
        FreeWord w = e_word(x);
        BigInt m = abs(x.num());
        const BigInt& n = x.den();
        bool ok = factor_count(w, Generator::b) == m && factor_count(w, Generator::a) == n &&
                  w.length() == m + n;
        expect(check, ok, x.to_string(), "b-factors=" + m.str() + " a-factors=" + n.str(),
               "b-factors=" + std::to_string(factor_count(w, Generator::b)) +
                   " a-factors=" + std::to_string(factor_count(w, Generator::a)));
    }
    return check;
}

PropertyCheck check_child_consistency(int bound) {
    PropertyCheck check{"child-consistency"};
    for (const auto& [x, y] : neighbor_pairs(nonnegative(indices_up_to(bound)))) {
        auto [child, w] = child_word(x, e_word(x), y, e_word(y));
        FreeWord expected = e_word(child);
        expect(check, child == farey_sum(x, y) && w == expected,
               x.to_string() + " " + y.to_string(), child.to_string() + " " + expected.format(),
               child.to_string() + " " + w.format());
    }
    return check;
}

PropertyCheck check_shortcut_depth(int bound) {
    PropertyCheck check{"shortcut-depth"};
    for (const ExtRational& x : indices_up_to(bound)) {
        if (x.is_orphan() || x.is_integer() || x.is_reciprocal()) continue;
        EvaluationStats orphan_stats, shortcut_stats;
        e_word(x, TerminationMode::orphan, orphan_stats);
        e_word(x, TerminationMode::shortcut, shortcut_stats);
        expect(check, shortcut_stats.depth < orphan_stats.depth, x.to_string(),
               "shortcut depth < " + std::to_string(orphan_stats.depth),
               std::to_string(shortcut_stats.depth));
    }
    return check;
}

PropertyCheck check_count_bijection(int lo, int hi) {
    PropertyCheck check{"count-bijection"};
    if (hi < lo) return check;
    EWordTable table = enumerate_ewords(hi);
    for (int n = lo; n <= hi; ++n) {
        auto [phi, words] = count_ewords_of_length(n, table);
        expect(check, phi == words, "n=" + std::to_string(n), std::to_string(phi), std::to_string(words));
    }
    return check;
}

std::vector<PropertyCheck> check_stepper(const std::vector<ESequence>& sequences) {
    PropertyCheck agreement{"stepper-vs-enumeration"};
    PropertyCheck fractions{"tracked-fractions"};
    PropertyCheck ewordness{"step-ewordness"};
    PropertyCheck structure{"step-structure"};
    PropertyCheck sums{"exponent-sums"};
    std::map<ExtRational, FreeWord> cache;
    auto word_of = [&](const ExtRational& x) -> const FreeWord& {
        auto it = cache.find(x);
        if (it == cache.end()) it = cache.emplace(x, e_word(x)).first;
        return it->second;
    };
    for (const ESequence& seq : sequences) {
        const std::string name = seq.to_string();
        StepTrace trace = run_esequence(seq);
        ExtRational value = seq.value();
        const FreeWord& expected = word_of(value);
        expect(agreement, trace.last_changed_word() == expected && trace.last_changed_index() == value,
               name, value.to_string() + " " + expected.format(),
               trace.last_changed_index().to_string() + " " + trace.last_changed_word().format());

        std::vector<BigInt> big(seq.entries().begin(), seq.entries().end());
        auto conv = approximants(big);
        for (std::size_t i = 1; i < trace.fractions.size(); ++i) {
            const TrackedFractions& f = trace.fractions[i];
            const auto& g_even = conv[2 * i - 2];
            expect(fractions, f.p == g_even.first && f.q == g_even.second,
                   name + " p_" + std::to_string(i) + "/q_" + std::to_string(i),
                   g_even.first.str() + "/" + g_even.second.str(), f.p.str() + "/" + f.q.str());
            if (2 * i - 1 < conv.size()) {
                const auto& g_odd = conv[2 * i - 1];
                bool ok = f.r && f.s && *f.r == g_odd.first && *f.s == g_odd.second;
                expect(fractions, ok, name + " r_" + std::to_string(i) + "/s_" + std::to_string(i),
                       g_odd.first.str() + "/" + g_odd.second.str(),
                       f.r ? f.r->str() + "/" + f.s->str() : "absent");
            }
        }

        GeneratorPair prev = trace.initial;
        for (const TraceStep& s : trace.steps) {
            const GeneratorPair& cur = s.pair;
            bool ok = cur.left == word_of(cur.left_index) && cur.right == word_of(cur.right_index) &&
                      cur.left_index < cur.right_index && is_farey_neighbor(cur.left_index, cur.right_index);
            expect(ewordness, ok, name + " " + pair_text(cur), "E-words of neighbor indices",
                   pair_text(cur));
            Side changed = other(s.preserved);
            const FreeWord& kept = cur.at(s.preserved);
            const FreeWord& made = cur.at(changed);
            bool retained = kept == prev.at(s.preserved);
            bool product = made == prev.left * prev.right || made == prev.right * prev.left;
            expect(structure, retained && product, name + " " + pair_text(prev) + " -> " + pair_text(cur),
                   "one generator kept, the other a product of both", pair_text(cur));
            prev = cur;
        }

        const FreeWord& last = trace.last_changed_word();
        bool ok = exponent_sum(last, Generator::b) == value.num() &&
                  exponent_sum(last, Generator::a) == value.den();
        expect(sums, ok, name, "a=" + value.den().str() + " b=" + value.num().str(),
               "a=" + std::to_string(exponent_sum(last, Generator::a)) +
                   " b=" + std::to_string(exponent_sum(last, Generator::b)));
    }
    return {agreement, fractions, ewordness, structure, sums};
}

PropertyCheck check_closed_forms(int max_entry) {
    PropertyCheck check{"closed-forms"};
    std::vector<ESequence> shapes;
    for (std::int64_t x = 1; x <= max_entry; ++x) {
        for (std::int64_t y = 1; y <= max_entry; ++y) {
            shapes.emplace_back(std::vector<std::int64_t>{x, y});     // [n0; n1]
            shapes.emplace_back(std::vector<std::int64_t>{x, 1, y});  // [n0; 1, n2]
            shapes.emplace_back(std::vector<std::int64_t>{0, x, y});  // [0; n1, n2]
            shapes.emplace_back(std::vector<std::int64_t>{0, x, 1, y});  // [0; n1, 1, n3]
        }
    }
    for (const ESequence& seq : shapes) {
        auto closed = closed_form_stop(seq);
        GeneratorPair run = run_esequence(seq).final_pair();
        expect(check, closed && *closed == run, seq.to_string(), pair_text(run),
               closed ? pair_text(*closed) : "no closed form");
    }
    return check;
}

PropertyCheck check_run_preserving(int bound, int max_n) {
    PropertyCheck check{"run-preserving"};
    std::set<std::pair<PalindromeProfile, Side>> covered;
    for (const auto& [x, y] : neighbor_pairs(nonnegative(indices_up_to(bound)))) {
        GeneratorPair start{e_word(x), e_word(y), x, y};
        for (Side side : {Side::left, Side::right}) {
            covered.emplace(profile_of(start), side);
            GeneratorPair iterated = start;
            for (int n = 1; n <= max_n; ++n) {
                iterated = step(iterated, side);
                GeneratorPair closed = run_preserving(start, side, n);
                expect(check, closed == iterated,
                       pair_text(start) + " keep " + std::string(to_string(side)) + " n=" + std::to_string(n),
                       pair_text(iterated), pair_text(closed));
            }
        }
    }
    for (auto profile : {PalindromeProfile::both_palindromes, PalindromeProfile::left_not,
                         PalindromeProfile::right_not}) {
        for (Side side : {Side::left, Side::right}) {
            expect(check, covered.contains({profile, side}),
                   "profile " + std::to_string(static_cast<int>(profile)) + " keep " +
                       std::string(to_string(side)),
                   "covered", "not covered");
        }
    }
    return check;
}

PropertyCheck check_exponent_forms(int max_entry, int max_depth) {
    PropertyCheck check{"exponent-forms"};
    for (const ESequence& seq : canonical_sequences(max_entry, max_depth)) {
        bool in_scope = (seq[0] > 0 && seq.depth() >= 3) || (seq[0] == 0 && seq.depth() >= 4);
        if (!in_scope) continue;
        FreeWord w = e_word(seq.value());
        expect(check, exponent_form_check(w, seq), seq.to_string() + " " + w.format(), "true", "false");
    }
    return check;
}

SweepReport sweep(int bound) {
    if (bound < 2) throw std::invalid_argument("sweep: bound must be >= 2");
    SweepReport report{bound, {}};
    auto& c = report.checks;
    c.push_back(check_parents(bound));
    c.push_back(check_neighbor_parity(bound));
    c.push_back(check_parity_table(bound));
    c.push_back(check_continued_fractions(bound));
    c.push_back(check_farey_level(bound));
    c.push_back(check_oracle_agreement(bound));
    c.push_back(check_mode_equivalence(bound));
    c.push_back(check_palindrome_parity(bound));
    c.push_back(check_length(bound));
    c.push_back(check_child_consistency(bound));
    c.push_back(check_shortcut_depth(bound));
    c.push_back(check_count_bijection(2, bound));
    for (auto& s : check_stepper(sequences_up_to(bound))) c.push_back(std::move(s));
    c.push_back(check_closed_forms(std::min(bound, 5)));
    c.push_back(check_run_preserving(std::min(bound, 12), 6));
    c.push_back(check_exponent_forms(3, 5));
    return report;
}

nlohmann::json to_json(const SweepReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const PropertyCheck& c : report.checks) {
        nlohmann::json failures = nlohmann::json::array();
        for (const Failure& f : c.failures)
            failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
        checks.push_back({{"name", c.name},
                          {"instances", c.instances},
                          {"failures", std::move(failures)},
                          {"ok", c.ok()}});
    }
    return {{"bound", report.bound},
            {"ok", report.ok()},
            {"failure_count", report.failure_count()},
            {"checks", std::move(checks)}};
}

std::string format_report(const SweepReport& report) {
    std::ostringstream os;
    std::size_t width = 8;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    os << "bound " << report.bound << "\n";
    for (const auto& c : report.checks) {
        os << (c.ok() ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size() + 2, ' ')
           << c.instances << " instances, " << c.failures.size() << " failures\n";
        for (const Failure& f : c.failures)
            os << "      " << f.input << ": expected " << f.expected << ", got " << f.got << "\n";
    }
    os << (report.ok() ? "all checks passed" : std::to_string(report.failure_count()) + " failures")
       << "\n";
    return os.str();
}

}  // namespace eword::verify

// eword: compute E-words, trace E-sequence runs, and run the verification sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <climits>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eword/enumeration.hpp"
#include "eword/farey.hpp"
#include "eword/stepper.hpp"
#include "eword/verify.hpp"
#include "eword/word.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct Options {
    std::string input;
    std::string mode = "orphan";
    std::string alphabet = "ab";
    std::string format = "plain";
    int bound = 20;
    int length = 2;
};

bool json_output(const Options& o) { return o.format == "json"; }

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_compute(const Options& o) {
    const eword::ExtRational x = eword::ExtRational::parse(o.input);
    const eword::Alphabet alphabet = eword::parse_alphabet(o.alphabet);
    const eword::TerminationMode mode = eword::parse_mode(o.mode);
    const eword::FreeWord w = eword::e_word(x, mode);
    const bool negative = eword::has_negative_exponent(w);
    if (json_output(o)) {
        print_json({{"index", x.to_string()},
                    {"mode", std::string(eword::to_string(mode))},
                    {"alphabet", o.alphabet},
                    {"word", eword::to_json(w, alphabet)},
                    {"text", w.format(alphabet)},
                    {"length", w.length()},
                    {"palindrome", eword::is_palindrome(w)},
                    {"negative_exponents", negative}});
    } else {
        std::cout << w.format(alphabet) << "\n";
        if (negative && alphabet == eword::Alphabet::ab)
            std::cerr << "note: negative exponents (index " << x << " is negative)\n";
    }
    return kOk;
}

int cmd_trace(const Options& o) {
    const eword::ESequence seq = eword::ESequence::parse(o.input);
    const eword::Alphabet alphabet = eword::parse_alphabet(o.alphabet);
    const eword::StepTrace trace = eword::run_esequence(seq);
    if (json_output(o))
        print_json(eword::to_json(trace, alphabet));
    else
        std::cout << eword::format_trace(trace, alphabet);
    return kOk;
}

int cmd_parents(const Options& o) {
    const eword::ExtRational x = eword::ExtRational::parse(o.input);
    auto [lo, hi] = eword::parents(x);
    if (json_output(o))
        print_json({{"index", x.to_string()}, {"lower", lo.to_string()}, {"upper", hi.to_string()}});
    else
        std::cout << lo << " " << hi << "\n";
    return kOk;
}

int cmd_cf(const Options& o) {
    const eword::ExtRational x = eword::ExtRational::parse(o.input);
    const eword::ContinuedFraction cf = eword::to_continued_fraction(x);
    if (json_output(o)) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& a : cf.entries()) entries.push_back(a.str());
        print_json({{"index", x.to_string()}, {"cf", cf.to_string()}, {"entries", entries}});
    } else {
        std::cout << cf.to_string() << "\n";
    }
    return kOk;
}

int cmd_level(const Options& o) {
    const eword::ExtRational x = eword::ExtRational::parse(o.input);
    const eword::BigInt level = eword::farey_level(x);
    if (json_output(o))
        print_json({{"index", x.to_string()}, {"level", level.str()}});
    else
        std::cout << level << "\n";
    return kOk;
}

int cmd_count(const Options& o) {
    auto [phi, words] = eword::verify::count_ewords_of_length(o.length);
    if (json_output(o))
        print_json({{"n", o.length}, {"phi", phi}, {"ewords", words}, {"ok", phi == words}});
    else
        std::cout << phi << " " << words << "\n";
    return phi == words ? kOk : kVerificationFailed;
}

int cmd_verify(const Options& o) {
    const eword::verify::SweepReport report = eword::verify::sweep(o.bound);
    if (json_output(o))
        print_json(eword::verify::to_json(report));
    else
        std::cout << eword::verify::format_report(report);
    return report.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"E-word calculator: palindromic primitive words indexed by Q ∪ {∞}", "eword"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"plain", "json"}))
            ->capture_default_str();
    };
    auto add_alphabet = [&](CLI::App* sub) {
        sub->add_option("--alphabet", opt.alphabet, "Render over {a,b} or over {A,B} with a = A^-1")
            ->check(CLI::IsMember({"ab", "AB"}))
            ->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "E-word of a rational (p/q, n, or inf)");
    compute->add_option("rational", opt.input, "Index, e.g. 68/13 or inf")->required();
    compute->add_option("--mode", opt.mode, "Recursion termination")
        ->check(CLI::IsMember({"orphan", "shortcut"}))
        ->capture_default_str();
    add_alphabet(compute);
    add_format(compute);

    auto* trace = app.add_subcommand("trace", "Run an E-sequence from (a, b)");
    trace->add_option("esequence", opt.input, "E-sequence, e.g. \"[5;4,3]\"")->required();
    add_alphabet(trace);
    add_format(trace);

    auto* parents = app.add_subcommand("parents", "Parents of a rational");
    parents->add_option("rational", opt.input)->required();
    add_format(parents);

    auto* cf = app.add_subcommand("cf", "Continued fraction of a nonnegative rational");
    cf->add_option("rational", opt.input)->required();
    add_format(cf);

    auto* level = app.add_subcommand("level", "Farey level of a nonnegative rational");
    level->add_option("rational", opt.input)->required();
    add_format(level);

    auto* count = app.add_subcommand("count", "Count E-words of length n against the arithmetic count");
    count->add_option("n", opt.length, "Word length")->required()->check(CLI::Range(1, INT_MAX));
    add_format(count);

    auto* verify = app.add_subcommand("verify", "Exhaustive checks of every property up to a bound");
    verify->add_option("--bound", opt.bound, "Largest |p| + q checked")
        ->check(CLI::Range(2, INT_MAX))
        ->capture_default_str();
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*compute) return cmd_compute(opt);
        if (*trace) return cmd_trace(opt);
        if (*parents) return cmd_parents(opt);
        if (*cf) return cmd_cf(opt);
        if (*level) return cmd_level(opt);
        if (*count) return cmd_count(opt);
        if (*verify) return cmd_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

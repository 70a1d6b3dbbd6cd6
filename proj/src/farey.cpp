#include "eword/farey.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

namespace eword {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view text, std::string_view what) {
    text = trim(text);
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw std::invalid_argument("expected an integer in " + std::string(what));
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("invalid integer '" + std::string(text) + "' in " +
                                        std::string(what));
    }
    // cpp_int rejects a leading '+'.
    if (text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text));
}

}  // namespace

ExtRational::ExtRational(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == 0 && q_ == 0) throw std::invalid_argument("0/0 is not an element of Q ∪ {∞}");
    if (q_ == 0) {
        p_ = 1;
        return;
    }
    if (p_ == 0) {
        q_ = 1;
        return;
    }
    if (q_ < 0) {
        p_ = -p_;
        q_ = -q_;
    }
    BigInt g = boost::multiprecision::gcd(p_, q_);
    if (g != 1) {
        p_ /= g;
        q_ /= g;
    }
}

ExtRational ExtRational::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s == "inf" || s == "∞" || s == "+inf" || s == "-inf") return infinity();
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return ExtRational(parse_integer(s, "rational"), BigInt(1));
    BigInt p = parse_integer(s.substr(0, slash), "rational numerator");
    BigInt q = parse_integer(s.substr(slash + 1), "rational denominator");
    return ExtRational(std::move(p), std::move(q));
}

ExtRational ExtRational::negated() const {
    if (is_infinite()) return *this;
    return ExtRational(-p_, q_);
}

std::string ExtRational::to_string() const { return p_.str() + "/" + q_.str(); }

std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y) {
    // Denominators are nonnegative, so cross multiplication orders the line
    // and puts 1/0 above every finite value.
    BigInt lhs = x.p_ * y.q_;
    BigInt rhs = y.p_ * x.q_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& x) { return os << x.to_string(); }

ExtRational normalize(const BigInt& p, const BigInt& q) { return ExtRational(p, q); }

bool is_farey_neighbor(const ExtRational& x, const ExtRational& y) {
    BigInt d = x.num() * y.den() - y.num() * x.den();
    return abs(d) == 1;
}

ExtRational farey_sum(const ExtRational& x, const ExtRational& y) {
    if (!is_farey_neighbor(x, y))
        throw std::invalid_argument("farey_sum: " + x.to_string() + " and " + y.to_string() +
                                    " are not Farey neighbors");
    return ExtRational(x.num() + y.num(), x.den() + y.den());
}

std::pair<ExtRational, ExtRational> parents(const ExtRational& x) {
    if (x.is_orphan()) throw std::invalid_argument("orphan has no parents");
    if (x.is_negative()) {
        auto [lo, hi] = parents(x.negated());
        return {hi.negated(), lo.negated()};
    }
    const BigInt& p = x.num();
    const BigInt& q = x.den();
    // Lower parent m/n solves p*n - q*m = 1 with 0 < n <= q.
    BigInt n;
    if (q == 1) {
        n = 1;
    } else {
        // Extended Euclid for p^{-1} mod q.
        BigInt r0 = q, r1 = p % q, t0 = 0, t1 = 1;
        while (r1 != 0) {
            BigInt quot = r0 / r1;
            BigInt r2 = r0 - quot * r1;
            BigInt t2 = t0 - quot * t1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        n = t0 % q;
        if (n <= 0) n += q;
    }
    BigInt m = (p * n - 1) / q;
    ExtRational lower(m, n);
    ExtRational upper(p - m, q - n);
    return {lower, upper};
}

ContinuedFraction::ContinuedFraction(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("continued fraction needs at least a0");
    if (entries_.front() < 0)
        throw std::invalid_argument("continued fraction a0 must be nonnegative");
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] < 1)
            throw std::invalid_argument("continued fraction entries after a0 must be >= 1");
    }
    if (entries_.size() >= 2 && entries_.back() == 1) {
        entries_.pop_back();
        entries_.back() += 1;
    }
}

std::vector<BigInt> parse_bracket_sequence(std::string_view text) {
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("expected '[a0;a1,...,ak]', got '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<BigInt> out;
    auto semi = s.find(';');
    out.push_back(parse_integer(s.substr(0, semi), "sequence entry 0"));
    if (semi == std::string_view::npos) return out;
    std::string_view rest = trim(s.substr(semi + 1));
    if (rest.empty()) return out;
    while (true) {
        auto comma = rest.find(',');
        out.push_back(parse_integer(rest.substr(0, comma),
                                    "sequence entry " + std::to_string(out.size())));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    return ContinuedFraction(parse_bracket_sequence(text));
}

std::string ContinuedFraction::to_string() const {
    std::string out = "[" + entries_.front().str() + ";";
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (i > 1) out += ",";
        out += entries_[i].str();
    }
    return out + "]";
}

ContinuedFraction to_continued_fraction(const ExtRational& x) {
    if (x.is_infinite()) throw std::invalid_argument("∞ has no finite continued fraction");
    if (x.is_negative())
        throw std::invalid_argument("continued fractions are defined here for x >= 0 only");
    BigInt num = x.num(), den = x.den();
    std::vector<BigInt> entries;
    while (den != 0) {
        BigInt a = num / den;
        BigInt r = num - a * den;
        entries.push_back(std::move(a));
        num = std::move(den);
        den = std::move(r);
    }
    // Euclid already ends with an entry >= 2 whenever k >= 1.
    return ContinuedFraction(std::move(entries));
}

std::vector<std::pair<BigInt, BigInt>> approximants(const std::vector<BigInt>& entries) {
    std::vector<std::pair<BigInt, BigInt>> out;
    out.reserve(entries.size());
    BigInt g_prev2 = 0, h_prev2 = 1;  // g_{-2}, h_{-2}
    BigInt g_prev1 = 1, h_prev1 = 0;  // g_{-1}, h_{-1}
    for (const BigInt& a : entries) {
        BigInt g = a * g_prev1 + g_prev2;
        BigInt h = a * h_prev1 + h_prev2;
        out.emplace_back(g, h);
        g_prev2 = std::move(g_prev1);
        h_prev2 = std::move(h_prev1);
        g_prev1 = std::move(g);
        h_prev1 = std::move(h);
    }
    return out;
}

ExtRational from_continued_fraction(const ContinuedFraction& cf) {
    auto conv = approximants(cf.entries());
    return ExtRational(conv.back().first, conv.back().second);
}

BigInt farey_level(const ExtRational& x) {
    if (x.is_infinite() || x.is_zero()) return 0;
    BigInt total = 0;
    const ContinuedFraction cf = to_continued_fraction(x);
    for (const BigInt& a : cf.entries()) total += a;
    return total;
}

}  // namespace eword

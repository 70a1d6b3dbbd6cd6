#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eword/verify.hpp"

namespace eword::verify::oracle {

namespace {

bool canonical(std::int64_t p, std::int64_t q) {
    if (q < 0) return false;
    if (q == 0) return p == 1;
    return std::gcd(p, q) == 1;
}

bool less(const Frac& x, const Frac& y) {
    // q >= 0 throughout, so this orders the line with 1/0 on top.
    return x.p * y.q < y.p * x.q;
}

bool odd(std::int64_t v) { return v % 2 != 0; }

}  // namespace

std::pair<Frac, Frac> split_parents(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0) throw std::invalid_argument("split_parents expects p/q > 0");
    std::vector<std::pair<Frac, Frac>> found;
    for (std::int64_t n = 0; n <= q; ++n) {
        const std::int64_t s = q - n;
        for (std::int64_t delta : {-1, 1}) {
            // |m*s - r*n| = |m*q - p*n| = 1
            const std::int64_t numer = p * n + delta;
            if (numer % q != 0) continue;
            const std::int64_t m = numer / q;
            const std::int64_t r = p - m;
            if (m < 0 || r < 0) continue;
            if (!canonical(m, n) || !canonical(r, s)) continue;
            Frac x{m, n}, y{r, s};
            if (less(y, x)) std::swap(x, y);
            bool duplicate = false;
            for (const auto& f : found)
                duplicate |= f.first.p == x.p && f.first.q == x.q && f.second.p == y.p &&
                             f.second.q == y.q;
            if (!duplicate) found.emplace_back(x, y);
        }
    }
    if (found.size() != 1)
        throw std::logic_error("split_parents: " + std::to_string(found.size()) +
                               " splittings for " + std::to_string(p) + "/" + std::to_string(q));
    return found.front();
}

FreeWord e_word(std::int64_t p, std::int64_t q) {
    if (!canonical(p, q)) throw std::invalid_argument("oracle::e_word expects lowest terms");
    if (q == 0) return FreeWord::generator(Generator::b);
    if (p < 0) {
        // Mirror image: same recursion on -x, read outward from 0, with a^-1 at 0.
        auto [lo, hi] = split_parents(-p, q);
        auto word_at = [](const Frac& f) {
            if (f.q == 0) return FreeWord::generator(Generator::b);
            if (f.p == 0) return FreeWord::generator(Generator::a, -1);
            return e_word(-f.p, f.q);
        };
        // Mirrored parents are (-hi, -lo) in increasing order.
        FreeWord lower = word_at(hi);
        FreeWord upper = word_at(lo);
        return odd(p) && odd(q) ? lower * upper : upper * lower;
    }
    if (p == 0) return FreeWord::generator(Generator::a);
    auto [lo, hi] = split_parents(p, q);
    FreeWord lower = e_word(lo.p, lo.q);
    FreeWord upper = e_word(hi.p, hi.q);
    return odd(p) && odd(q) ? upper * lower : lower * upper;
}

std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> stern_brocot_levels(int bound) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> level;
    std::vector<Frac> row{{0, 1}, {1, 0}};
    for (std::int64_t depth = 1;; ++depth) {
        std::vector<Frac> next;
        next.reserve(row.size() * 2);
        bool grew = false;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            next.push_back(row[i]);
            Frac mediant{row[i].p + row[i + 1].p, row[i].q + row[i + 1].q};
            if (mediant.p + mediant.q <= bound) {
                next.push_back(mediant);
                level.emplace(std::make_pair(mediant.p, mediant.q), depth);
                grew = true;
            }
        }
        next.push_back(row.back());
        row = std::move(next);
        if (!grew) break;
    }
    return level;
}

std::size_t phi_count(int n) {
    std::size_t count = 0;
    for (int p = -(n - 1); p <= n - 1; ++p) {
        if (p != 0 && std::gcd(std::abs(p), n) == 1) ++count;
    }
    return count;
}

}  // namespace eword::verify::oracle

#include "leosys/bracket.hpp"

#include <cstdlib>

namespace leosys {

FieldElement bracket(long n, const Beta& beta) {
    long m = std::labs(n);
    FieldElement prev, cur;  // [k-2], [k]
    long k;
    if (m % 2 == 0) {
        prev = FieldElement(0);  // [0]
        cur = FieldElement(1);   // [2]
        if (m == 0) return prev;
        k = 2;
    } else {
        prev = FieldElement(-1);  // [-1]
        cur = FieldElement(1);    // [1]
        k = 1;
    }
    while (k < m) {
        FieldElement next = beta.value * cur - prev;
        prev = cur;
        cur = next;
        k += 2;
    }
    return n < 0 ? -cur : cur;
}

FieldElement bracket_factorial(long n, const Beta& beta) {
    FieldElement acc(1);
    for (long k = 1; k <= n; ++k) acc = acc * bracket(k, beta);
    return acc;
}

FieldElement triple_bracket(long r, long s, long t, const std::optional<Beta>& beta) {
    if (r < 0 || s < 0 || t < 0) throw Error("triple bracket arguments must be nonnegative");
    if (r == 0 || s == 0 || t == 0) return FieldElement(1);
    if (!beta) throw Error("triple bracket with all parts positive requires beta");

    long total = r + s + t;
    std::vector<FieldElement> fact(static_cast<std::size_t>(total) + 1);
    fact[0] = FieldElement(1);
    for (long k = 1; k <= total; ++k) {
        FieldElement bk = bracket(k, *beta);
        if (bk.is_zero())
            throw ZeroBracketError("bracket [" + std::to_string(k) + "] vanishes");
        fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * bk;
    }
    FieldElement curve =
        (r % 2 && s % 2 && t % 2) ? beta->value + FieldElement(2) : FieldElement(1);
    auto f = [&](long k) { return fact[static_cast<std::size_t>(k)]; };
    return f(r + s) * f(r + t) * f(s + t) * curve / (f(r) * f(s) * f(t) * f(total));
}

bool check_brackets_nonzero(long d, const Beta& beta) {
    for (long i = 1; i <= d; ++i)
        if (bracket(i, beta).is_zero()) return false;
    return true;
}

std::optional<Beta> beta_from_sequence(const RecurrentSequence& sigma) {
    const auto& s = sigma.entries;
    long d = sigma.diameter();
    if (d <= 2) return std::nullopt;
    std::optional<FieldElement> ratio;
    for (long i = 2; i <= d - 1; ++i) {
        FieldElement den = s[static_cast<std::size_t>(i - 1)] - s[static_cast<std::size_t>(i)];
        if (den.is_zero()) throw Error("repeated consecutive entries in recurrent sequence");
        FieldElement r =
            (s[static_cast<std::size_t>(i - 2)] - s[static_cast<std::size_t>(i + 1)]) / den;
        if (ratio && !(*ratio == r)) throw Error("sequence ratio is not constant");
        ratio = r;
    }
    return Beta{*ratio - FieldElement(1)};
}

bool cross_ratio_identity_check(const RecurrentSequence& sigma, const Beta& beta) {
    const auto& sq = sigma.entries;
    long d = sigma.diameter();
    std::vector<FieldElement> br(static_cast<std::size_t>(2 * d) + 1);
    for (long n = -d; n <= d; ++n)
        br[static_cast<std::size_t>(n + d)] = bracket(n, beta);
    auto b = [&](long n) { return br[static_cast<std::size_t>(n + d)]; };
    auto at = [&](long i) { return sq[static_cast<std::size_t>(i)]; };
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= d; ++j)
            for (long r = 0; r <= d; ++r) {
                long s = i + j - r;
                if (s < 0 || s > d) continue;
                if (!(b(r - s) * (at(i) - at(j)) == b(i - j) * (at(r) - at(s)))) return false;
            }
    return true;
}

}  // namespace leosys

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace ramsey {

// twr_1(x) = x, twr_{h+1}(x) = 2^twr_h(x). Exact; refuses with
// CapacityError (message carries a digit estimate) once the result would
// exceed max_digits decimal digits.
mpz_class tower(int height, const mpz_class& x, std::uint64_t max_digits = 1000000);

// Symbolic tower value twr_height(argument), e.g. the instantiated side
// of a bound. Rendered as the plain value (height 1), "2^x" (height 2) or
// "twr_h(x)".
struct TowerExpr {
    int height = 1;
    double argument = 0;

    std::string text() const;
    // log10 of the value; +inf once it leaves double range.
    double log10_value() const;
    std::string digits_text() const;
};

struct BoundReport {
    std::string theorem;   // which statement the parameters fall under
    std::string formulas;  // symbolic description of both sides
    std::optional<TowerExpr> lower;
    std::optional<TowerExpr> upper;
    // 2^C(inner, k-1), the one-step recursion value, when inner was given.
    std::optional<std::string> recursion;
};

// Value of the on-line game bound s * alpha^-r * (1-alpha)^(r-m) for a
// builder strategy using s vertices, r red edges and m total edges, with
// 0 < alpha < 1/2. Returned as a height-2 tower expression (the argument
// is the exact log2 of the value), since the interesting instantiations
// overflow doubles.
TowerExpr online_game_bound(std::uint64_t s, std::uint64_t r, std::uint64_t m,
                            double alpha);

// Instantiates the published bound forms for r_k(k+1, t; n) with
// caller-supplied constants (the statements are existential; nothing is
// assumed silently):
//   t = 2          upper c' n^(k-1), no tower lower bound;
//   t = 3          2^(c n^(k-2)) <= r <= 2^(c' n^(k-2) log2 n);
//   4 <= t <= k-2  twr_{t-1}(c n^(k-t+1)) for even k-t,
//                  twr_{t-1}(c n^((k-t+1)/2)) for odd k-t,
//                  upper twr_{t-1}(c' n^(k-t+1) log2 n);
//   k-2 < t <= k+1 the upper form still applies; no lower is reported.
// `inner` = r_{k-1}(k, t-1; n-1), when known, adds the one-step
// recursion value 2^C(inner, k-1).
BoundReport bound_report(int k, int t, int n, double c, double c_prime,
                         std::optional<std::uint64_t> inner = std::nullopt);

}  // namespace ramsey

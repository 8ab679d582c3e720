#include "ramsey/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;

double bits_per_digit() { return std::log2(10.0); }

std::string approx(double v) {
    char buf[64];
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", v);
    }
    return buf;
}

}  // namespace

mpz_class tower(int height, const mpz_class& x, std::uint64_t max_digits) {
    if (height < 1) throw DomainError("tower: height must be >= 1");
    if (x < 0) throw DomainError("tower: negative argument");
    const auto max_bits = static_cast<std::uint64_t>(
        static_cast<double>(max_digits) * bits_per_digit()) + 1;

    mpz_class value = x;
    for (int level = 2; level <= height; ++level) {
        if (!value.fits_ulong_p() || value.get_ui() > max_bits) {
            // Estimate the digit count of the refused level for the message.
            const double exponent = value.fits_ulong_p()
                                        ? static_cast<double>(value.get_ui())
                                        : std::numeric_limits<double>::infinity();
            std::ostringstream msg;
            msg << "tower: level " << level << " of twr_" << height << " needs ~"
                << approx(exponent * kLog10Of2) << " digits, above the cap of "
                << max_digits;
            throw CapacityError(msg.str());
        }
        const unsigned long exponent = value.get_ui();
        mpz_class next = 0;
        mpz_setbit(next.get_mpz_t(), exponent);
        value = std::move(next);
    }
    return value;
}

std::string TowerExpr::text() const {
    if (height == 1) return approx(argument);
    if (height == 2) return "2^" + approx(argument);
    return "twr_" + std::to_string(height) + "(" + approx(argument) + ")";
}

double TowerExpr::log10_value() const {
    // log10 twr_h(x) = twr_{h-1}(x) * log10(2) for h >= 2.
    double log10v = argument > 0 ? std::log10(argument)
                                 : -std::numeric_limits<double>::infinity();
    for (int level = 2; level <= height; ++level) {
        if (log10v > 308.0) return std::numeric_limits<double>::infinity();
        log10v = std::pow(10.0, log10v) * kLog10Of2;
    }
    return log10v;
}

std::string TowerExpr::digits_text() const {
    const double log10v = log10_value();
    if (std::isinf(log10v)) return "more digits than a double can count";
    const double digits = std::floor(log10v) + 1;
    if (digits < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", digits);
        return std::string(buf) + " digits";
    }
    return "~" + approx(digits) + " digits";
}

TowerExpr online_game_bound(std::uint64_t s, std::uint64_t r, std::uint64_t m,
                            double alpha) {
    if (!(alpha > 0 && alpha < 0.5))
        throw DomainError("online_game_bound: alpha must lie in (0, 1/2)");
    if (s < 1) throw DomainError("online_game_bound: s must be >= 1");
    if (m < r) throw DomainError("online_game_bound: m must be >= r");
    const double log2_value = std::log2(static_cast<double>(s)) -
                              static_cast<double>(r) * std::log2(alpha) +
                              (static_cast<double>(r) - static_cast<double>(m)) *
                                  std::log2(1.0 - alpha);
    return TowerExpr{2, log2_value};
}

BoundReport bound_report(int k, int t, int n, double c, double c_prime,
                         std::optional<std::uint64_t> inner) {
    if (k < 3) throw DomainError("bound_report: k must be >= 3");
    if (t < 2 || t > k + 1) throw DomainError("bound_report: t must be in 2..k+1");
    if (n < 2) throw DomainError("bound_report: n must be >= 2");
    if (c <= 0 || c_prime <= 0) throw DomainError("bound_report: constants must be positive");

    BoundReport report;
    const double log2n = std::log2(static_cast<double>(n));

    if (t == 2) {
        report.theorem = "polynomial upper bound (t=2)";
        report.formulas = "r <= c' n^(k-1)";
        report.upper = TowerExpr{1, c_prime * std::pow(n, k - 1)};
    } else if (t == 3) {
        report.theorem = "exponential bounds (t=3)";
        report.formulas = "2^(c n^(k-2)) <= r <= 2^(c' n^(k-2) log2 n)";
        report.lower = TowerExpr{2, c * std::pow(n, k - 2)};
        report.upper = TowerExpr{2, c_prime * std::pow(n, k - 2) * log2n};
    } else if (t <= k - 2) {
        const bool even_gap = (k - t) % 2 == 0;
        report.theorem = even_gap ? "tower bounds (4<=t<=k-2, k-t even)"
                                  : "tower bounds (4<=t<=k-2, k-t odd)";
        const int full_exp = k - t + 1;
        if (even_gap) {
            report.formulas = "twr_{t-1}(c n^(k-t+1)) <= r <= twr_{t-1}(c' n^(k-t+1) log2 n)";
            report.lower = TowerExpr{t - 1, c * std::pow(n, full_exp)};
        } else {
            report.formulas =
                "twr_{t-1}(c n^((k-t+1)/2)) <= r <= twr_{t-1}(c' n^(k-t+1) log2 n)";
            report.lower = TowerExpr{t - 1, c * std::pow(n, full_exp / 2)};
        }
        report.upper = TowerExpr{t - 1, c_prime * std::pow(n, full_exp) * log2n};
    } else {
        report.theorem = "upper bound only (k-2 < t <= k+1)";
        report.formulas = "r <= twr_{t-1}(c' n^(k-t+1) log2 n); no lower-bound statement";
        report.upper = TowerExpr{t - 1, c_prime * std::pow(n, k - t + 1) * log2n};
    }

    if (inner) {
        // One step of the recursive upper bound: 2^C(inner, k-1).
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(*inner),
                     static_cast<unsigned long>(k - 1));
        std::ostringstream out;
        out << "2^" << binom.get_str();
        if (binom.fits_ulong_p()) {
            TowerExpr expr{2, static_cast<double>(binom.get_ui())};
            out << " (" << expr.digits_text() << ")";
        }
        report.recursion = out.str();
    }
    return report;
}

}  // namespace ramsey

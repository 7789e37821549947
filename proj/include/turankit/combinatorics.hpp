#pragma once

// Scalar combinatorial quantities shared by the bound and verification code.

#include "turankit/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turankit {

/// C(n, j); zero whenever j < 0 or j > n.
inline Integer binomial(long n, long j) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative, got " + std::to_string(n));
    if (j < 0 || j > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return out;
}

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// total! / (parts[0]! parts[1]! ...). Parts must be nonnegative and sum to total.
inline Integer multinomial(long total, std::span<const long> parts) {
    long sum = 0;
    Integer den = 1;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
        den *= factorial(p);
    }
    if (sum != total) throw std::invalid_argument("multinomial: parts do not sum to total");
    return factorial(total) / den;
}

/// x_{m,r} = 1 - C(m-1, k-1) / C(r-1, k-1), the factor of the product bound.
inline Rational xRatio(long k, long m, long r) {
    if (k < 2 || k > r) throw std::invalid_argument("xRatio: need 2 <= k <= r");
    if (m < k - 1 || m > r)
        throw std::invalid_argument("xRatio: m=" + std::to_string(m) + " outside [k-1, r] = [" +
                                    std::to_string(k - 1) + ", " + std::to_string(r) + "]");
    return Rational(1) - Rational(binomial(m - 1, k - 1), binomial(r - 1, k - 1));
}

/// Which value of the uniform error term replaces 1/((n-m) x_{m,r}).
///
/// PaperLiteral reproduces the printed constant (r-k)/((n-r+1)(k-1)).
/// Corrected uses the true maximum over m, (r-1)/((n-r+1)(k-1)) =
/// 1/((n-r+1) x_{r-1,r}); only this one dominates every row.
enum class EpsilonMode { PaperLiteral, Corrected };

inline std::string_view toString(EpsilonMode mode) {
    return mode == EpsilonMode::PaperLiteral ? "paper-literal" : "corrected";
}

inline EpsilonMode parseEpsilonMode(std::string_view text) {
    if (text == "paper-literal" || text == "paper" || text == "literal") return EpsilonMode::PaperLiteral;
    if (text == "corrected") return EpsilonMode::Corrected;
    throw std::invalid_argument("unknown epsilon mode '" + std::string(text) + "' (expected paper-literal|corrected)");
}

inline Rational epsilonValue(long k, long r, long n, EpsilonMode mode) {
    if (k < 2 || r <= k) throw std::invalid_argument("epsilonValue: need 2 <= k < r");
    if (n <= r) throw std::invalid_argument("epsilonValue: need n > r, got n=" + std::to_string(n));
    const Rational den = Rational((n - r + 1) * (k - 1));
    if (mode == EpsilonMode::PaperLiteral) return Rational(r - k) / den;
    return Rational(1) / (Rational(n - r + 1) * xRatio(k, r - 1, r));
}

}  // namespace turankit

/**
 * @file rational.hpp
 * @brief Exact rational scalar type used throughout the library.
 *
 * Wraps GMP's mpq_class so every Scalar is always stored in lowest terms
 * with a positive denominator.  All construction from raw numerator /
 * denominator pairs and all string parsing go through the helpers below,
 * which enforce canonicalization and reject zero denominators up front
 * (mpq canonicalization aborts on a zero denominator, so the check must
 * happen before the value reaches GMP).
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nxa {

/// Exact rational number, canonical form maintained by construction.
using Scalar = mpq_class;

/// Build the rational num/den in canonical form. Throws on den == 0.
inline Scalar frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("frac: zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

/// True if the token matches the accepted scalar grammar: -?digits(/digits)?
/// with an optional sign on the denominator as well.
inline bool is_scalar_token(const std::string& s) {
    std::size_t i = 0, n = s.size();
    auto digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < n && s[p] >= '0' && s[p] <= '9') ++p;
        return p > start;
    };
    if (i < n && s[i] == '-') ++i;
    if (!digits(i)) return false;
    if (i == n) return true;
    if (s[i] != '/') return false;
    ++i;
    if (i < n && s[i] == '-') ++i;
    return digits(i) && i == n;
}

/// Parse "p" or "p/q" into a canonical Scalar. Throws std::invalid_argument
/// on malformed tokens or q == 0.
inline Scalar parse_scalar(const std::string& token) {
    if (!is_scalar_token(token))
        throw std::invalid_argument("parse_scalar: malformed rational '" + token + "'");
    std::size_t slash = token.find('/');
    if (slash == std::string::npos) return Scalar(mpz_class(token));
    mpz_class num(token.substr(0, slash));
    mpz_class den(token.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("parse_scalar: zero denominator in '" + token + "'");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical decimal string: "p" when the denominator is 1, else "p/q".
inline std::string scalar_to_string(const Scalar& s) { return s.get_str(); }

}  // namespace nxa

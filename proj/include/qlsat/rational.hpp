#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qlsat/errors.hpp"

namespace qlsat {

// Exact arbitrary-precision rational. mpq_class keeps the canonical form
// (positive denominator, coprime with numerator) after every operation;
// only values built from raw parts need an explicit canonicalize().
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

/// Canonical text form: "n" for integers, "n/d" otherwise, sign on the
/// numerator.
inline std::string rational_to_text(const Rational& x) {
    return x.get_str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline bool valid_rational_text(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return all_digits(s);
    return all_digits(s.substr(0, slash)) && all_digits(s.substr(slash + 1));
}

}  // namespace detail

/// Parse "n" or "n/d". Rejects anything mpq would silently misread
/// (spaces, empty parts, a zero denominator).
inline Rational rational_from_text(std::string_view text) {
    if (!detail::valid_rational_text(text))
        throw error("bad rational literal: \"" + std::string(text) + "\"");
    Rational x{std::string(text)};
    if (x.get_den() == 0)
        throw error("zero denominator in rational literal: \"" + std::string(text) + "\"");
    x.canonicalize();
    return x;
}

}  // namespace qlsat

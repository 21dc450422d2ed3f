#pragma once

#include <string>
#include <string_view>

#include "qlsat/rational.hpp"

namespace qlsat {

/// Gaussian rational a + bi with exact rational parts. Supports the field
/// operations and the conjugation the inner product needs.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Gaussian(int r) : re(r), im(0) {}                  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (is_zero(n)) throw error("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    Gaussian& operator+=(const Gaussian& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& b) {
        re -= b.re;
        im -= b.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline bool is_zero(const Gaussian& x) { return is_zero(x.re) && is_zero(x.im); }
inline bool is_one(const Gaussian& x) { return is_one(x.re) && is_zero(x.im); }

/// Canonical text form keeps both parts explicit: "re+imi" or "re-imi",
/// e.g. "1/2+0i", "0-3/4i". One token, no spaces.
inline std::string gaussian_to_text(const Gaussian& x) {
    std::string s = rational_to_text(x.re);
    if (sgn(x.im) < 0) {
        s += '-';
        s += rational_to_text(Rational(-x.im));
    } else {
        s += '+';
        s += rational_to_text(x.im);
    }
    s += 'i';
    return s;
}

/// Accepts the canonical "a/b+c/di" form and, for convenience, a plain
/// rational (taken as imaginary part zero).
inline Gaussian gaussian_from_text(std::string_view text) {
    if (text.empty()) throw error("empty Gaussian literal");
    if (text.back() != 'i') return Gaussian(rational_from_text(text));
    std::string_view body = text.substr(0, text.size() - 1);
    // The separating sign is the first +/- past position 0; a leading
    // '-' belongs to the real part.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = 1; k < body.size(); ++k) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos)
        throw error("bad Gaussian literal (missing real part): \"" + std::string(text) + "\"");
    Rational re = rational_from_text(body.substr(0, split));
    Rational im = rational_from_text(body.substr(split + 1));
    if (body[split] == '-') im = -im;
    return {std::move(re), std::move(im)};
}

}  // namespace qlsat

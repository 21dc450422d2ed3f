#pragma once

#include <string>
#include <string_view>

#include "qlsat/gaussian.hpp"
#include "qlsat/rational.hpp"

namespace qlsat {

/// Runtime tag naming the exact coefficient field. The linear-algebra
/// kernel is templated on the scalar type; this tag is what certificates
/// and the CLI carry to pick the instantiation.
enum class FieldTag { Rat, Gauss };

inline const char* to_string(FieldTag f) { return f == FieldTag::Rat ? "RAT" : "GAUSS"; }

inline FieldTag field_from_string(std::string_view s) {
    if (s == "RAT" || s == "rat") return FieldTag::Rat;
    if (s == "GAUSS" || s == "gauss") return FieldTag::Gauss;
    throw error("unknown field tag: \"" + std::string(s) + "\"");
}

template <class S>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr FieldTag tag = FieldTag::Rat;
    static Rational conj(const Rational& x) { return x; }
    static std::string to_text(const Rational& x) { return rational_to_text(x); }
    static Rational from_text(std::string_view s) { return rational_from_text(s); }
};

template <>
struct field_traits<Gaussian> {
    static constexpr FieldTag tag = FieldTag::Gauss;
    static Gaussian conj(const Gaussian& x) { return {x.re, -x.im}; }
    static std::string to_text(const Gaussian& x) { return gaussian_to_text(x); }
    static Gaussian from_text(std::string_view s) { return gaussian_from_text(s); }
};

}  // namespace qlsat

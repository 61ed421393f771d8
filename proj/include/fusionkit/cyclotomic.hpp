#pragma once

#include "fusionkit/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <complex>
#include <optional>
#include <string>

namespace fusionkit {

/*
 * Exact arithmetic in the 72nd cyclotomic field Q(ζ), ζ = e^{2πi/72}.
 *
 * Values are stored in canonical form: a coordinate vector of exact
 * rationals over the power basis {ζ^k : 0 ≤ k < 24}, reduced modulo
 * Φ_72(x) = x^24 − x^12 + 1.  Equality of canonical vectors is equality
 * of field elements, so comparisons are decidable and exact.
 *
 * The conductor 72 = lcm(8, 36) is large enough for every root of unity
 * of order dividing 36 together with √2 = ζ_8 − ζ_8^3 (hence √18 = 3√2).
 */
class Cyclotomic {
public:
    static constexpr int conductor = 72;
    static constexpr int degree = 24; // φ(72)
    static constexpr int raw_size = conductor; // unreduced powers live in [0, 72)

    Cyclotomic() = default;                      // zero
    explicit Cyclotomic(const Rational& value);  // embedded rational
    explicit Cyclotomic(long long value);

    // e^{2πi·power/order}; `order` must divide the conductor.
    static Cyclotomic root_of_unity(int order, long long power);

    // Positive square root of a positive integer.  Supported arguments are
    // n = m^2 and n = 2·m^2 (√2 lies in Q(ζ_8) ⊂ Q(ζ_72)); anything else
    // throws NotRepresentable.
    static Cyclotomic sqrt_of(long long n);

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);

    Cyclotomic scaled(const Rational& factor) const;

    // Image under the field automorphism ζ ↦ ζ^{-1} (complex conjugation).
    Cyclotomic conjugate() const;

    // Exact multiplicative inverse, obtained by solving the 24-dimensional
    // rational linear system (this)·x = 1.  Throws DivisionByZero on zero.
    Cyclotomic inverse() const;

    bool operator==(const Cyclotomic& rhs) const = default;

    bool is_zero() const;
    bool is_rational() const;

    // The embedded rational value, when all non-constant coordinates vanish.
    std::optional<Rational> as_rational() const;

    // Floating approximation; for display and sanity checks only.
    std::complex<double> approx() const;

    const std::array<Rational, degree>& coeffs() const { return coeffs_; }
    const Rational& coeff(int k) const { return coeffs_[k]; }

    // Decomposition q·ζ72^k with q > 0 rational and 0 ≤ k < 72, when the
    // value is a rational multiple of a root of unity (zero excluded).
    std::optional<std::pair<Rational, int>> as_root_multiple() const;

    // Compact human-readable form.  Rational multiples of a single root of
    // unity print in polar style ("e^{5πi/9}", "-1", "3/2"); other values
    // fall back to the coordinate polynomial in ζ72.
    std::string to_string() const;

    nlohmann::ordered_json to_json() const;
    // Rejects a serialized value whose conductor differs from 72.
    static Cyclotomic from_json(const nlohmann::ordered_json& j);

private:
    std::array<Rational, degree> coeffs_{};

    static Cyclotomic from_reduction(std::array<Rational, raw_size>&& raw);
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& a) { return a.scaled(q); }

} // namespace fusionkit

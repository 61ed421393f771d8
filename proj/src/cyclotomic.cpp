#include "fusionkit/cyclotomic.hpp"

#include "fusionkit/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

namespace fusionkit {

namespace {

// Φ_72(x) = x^24 − x^12 + 1, so ζ^24 = ζ^12 − 1.  Folding one power at a
// time keeps the loop branch-free for any input degree below 2·24.
template <std::size_t N>
void fold_mod_phi72(std::array<Rational, N>& c) {
    static_assert(N >= Cyclotomic::degree);
    for (int k = int(N) - 1; k >= Cyclotomic::degree; --k) {
        if (c[k] == 0) continue;
        c[k - 12] += c[k];
        c[k - 24] -= c[k];
        c[k] = 0;
    }
}

} // namespace

Cyclotomic::Cyclotomic(const Rational& value) { coeffs_[0] = value; }

Cyclotomic::Cyclotomic(long long value) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::from_reduction(std::array<Rational, raw_size>&& raw) {
    fold_mod_phi72(raw);
    Cyclotomic out;
    for (int k = 0; k < degree; ++k) out.coeffs_[k] = std::move(raw[k]);
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(int order, long long power) {
    if (order <= 0 || conductor % order != 0)
        throw NonDivisorOrder("root order " + std::to_string(order) + " does not divide " +
                              std::to_string(conductor));
    long long p = power % order;
    if (p < 0) p += order;
    const int k = int(p) * (conductor / order);
    std::array<Rational, raw_size> raw{};
    raw[k] = 1;
    return from_reduction(std::move(raw));
}

Cyclotomic Cyclotomic::sqrt_of(long long n) {
    if (n <= 0) throw NotRepresentable("square root of non-positive " + std::to_string(n));
    long long square_part = 1;
    long long rest = n;
    for (long long d = 2; d * d <= rest; ++d) {
        while (rest % (d * d) == 0) {
            rest /= d * d;
            square_part *= d;
        }
    }
    if (rest == 1) return Cyclotomic(square_part);
    if (rest == 2) {
        // √2 = ζ_8 − ζ_8^3 = ζ^9 − ζ^27 = ζ^3 + ζ^9 − ζ^15.
        Cyclotomic s = root_of_unity(8, 1) - root_of_unity(8, 3);
        return s.scaled(square_part);
    }
    throw NotRepresentable("√" + std::to_string(n) + " does not lie in Q(ζ_72)");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    Cyclotomic out(*this);
    out += rhs;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    Cyclotomic out(*this);
    out -= rhs;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    for (int k = 0; k < degree; ++k)
        if (rhs.coeffs_[k] != 0) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    for (int k = 0; k < degree; ++k)
        if (rhs.coeffs_[k] != 0) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    // values in this artifact are very sparse; convolve support-by-support
    int ia[degree], ib[degree];
    int na = 0, nb = 0;
    for (int k = 0; k < degree; ++k)
        if (coeffs_[k] != 0) ia[na++] = k;
    if (na == 0) return {};
    for (int k = 0; k < degree; ++k)
        if (rhs.coeffs_[k] != 0) ib[nb++] = k;
    if (nb == 0) return {};

    std::array<Rational, raw_size> conv{};
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) conv[ia[a] + ib[b]] += coeffs_[ia[a]] * rhs.coeffs_[ib[b]];
    return from_reduction(std::move(conv));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    *this = *this * rhs;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out;
    for (int k = 0; k < degree; ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

Cyclotomic Cyclotomic::scaled(const Rational& factor) const {
    Cyclotomic out;
    for (int k = 0; k < degree; ++k)
        if (coeffs_[k] != 0) out.coeffs_[k] = coeffs_[k] * factor;
    return out;
}

Cyclotomic Cyclotomic::conjugate() const {
    // ζ^k ↦ ζ^{72−k}; the image powers 49..71 exceed the raw range, so apply
    // one folding step ζ^m = ζ^{m−12} − ζ^{m−24} inline.
    std::array<Rational, raw_size> acc{};
    acc[0] = coeffs_[0];
    for (int k = 1; k < degree; ++k) {
        if (coeffs_[k] == 0) continue;
        const int m = conductor - k; // 49..71
        acc[m - 12] += coeffs_[k];
        acc[m - 24] -= coeffs_[k];
    }
    return from_reduction(std::move(acc));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (int k = 1; k < degree; ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic value");
    if (is_rational()) {
        Cyclotomic out;
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }

    // Column j of M is (this)·ζ^j in the power basis; solve M·x = e_0.
    std::array<std::array<Rational, degree + 1>, degree> m{};
    Cyclotomic shifted(*this);
    const Cyclotomic zeta = root_of_unity(conductor, 1);
    for (int j = 0; j < degree; ++j) {
        for (int r = 0; r < degree; ++r) m[r][j] = shifted.coeffs_[r];
        if (j + 1 < degree) shifted *= zeta;
    }
    m[0][degree] = 1;

    // Exact Gauss–Jordan elimination.
    for (int col = 0; col < degree; ++col) {
        int pivot = -1;
        for (int r = col; r < degree; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw DivisionByZero("singular multiplication matrix"); // unreachable for a field
        std::swap(m[col], m[pivot]);
        const Rational inv_p = 1 / m[col][col];
        for (int c = col; c <= degree; ++c) m[col][c] *= inv_p;
        for (int r = 0; r < degree; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c = col; c <= degree; ++c) m[r][c] -= f * m[col][c];
        }
    }

    Cyclotomic out;
    for (int r = 0; r < degree; ++r) out.coeffs_[r] = std::move(m[r][degree]);
    return out;
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> z{0.0, 0.0};
    for (int k = 0; k < degree; ++k) {
        if (coeffs_[k] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * k / conductor;
        z += to_double(coeffs_[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::optional<std::pair<Rational, int>> Cyclotomic::as_root_multiple() const {
    // q·ζ^k reduces to one basis term (k < 24, with ζ^{k+36} = -ζ^k) or to
    // the two-term pattern c·ζ^{i+12} - c·ζ^i = c·ζ^{i+24}; recognize those
    // shapes instead of dividing by all 72 roots.
    int support[3];
    int n = 0;
    for (int k = 0; k < degree; ++k) {
        if (coeffs_[k] == 0) continue;
        if (n == 2) return std::nullopt;
        support[n++] = k;
    }
    if (n == 0) return std::nullopt;
    if (n == 1) {
        const int i = support[0];
        const Rational& c = coeffs_[i];
        if (c > 0) return std::make_pair(c, i);
        return std::make_pair(-c, i + 36);
    }
    const int i = support[0], j = support[1];
    if (j != i + 12 || coeffs_[i] != -coeffs_[j]) return std::nullopt;
    const Rational& c = coeffs_[j];
    if (c > 0) return std::make_pair(c, i + 24);
    return std::make_pair(-c, i + 60);
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";

    if (auto root = as_root_multiple()) {
        const auto& [coeff, power] = *root;
        if (power == 0) return fusionkit::to_string(coeff);
        if (power == 36) return fusionkit::to_string(-coeff);
        const int signed_power = power <= 35 ? power : power - conductor;
        const int g = std::gcd(std::abs(signed_power), 36);
        const int num = std::abs(signed_power) / g;
        const int den = 36 / g;
        std::string exp = "e^{";
        if (signed_power < 0) exp += "-";
        if (num != 1) exp += std::to_string(num);
        exp += "πi";
        if (den != 1) exp += "/" + std::to_string(den);
        exp += "}";
        if (coeff == 1) return exp;
        return fusionkit::to_string(coeff) + "·" + exp;
    }

    // General element: coordinate polynomial in ζ72.
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < degree; ++k) {
        if (coeffs_[k] == 0) continue;
        Rational c = coeffs_[k];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        if (k == 0) {
            os << fusionkit::to_string(c);
        } else {
            if (c != 1) os << fusionkit::to_string(c) << "·";
            os << "ζ72^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

nlohmann::ordered_json bigint_to_json(const BigInt& n) {
    if (n <= (std::numeric_limits<std::int64_t>::max)() && n >= (std::numeric_limits<std::int64_t>::min)())
        return n.convert_to<std::int64_t>();
    return n.str();
}

BigInt bigint_from_json(const nlohmann::ordered_json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

} // namespace

nlohmann::ordered_json Cyclotomic::to_json() const {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_)
        coeffs.push_back(nlohmann::ordered_json::array(
            {bigint_to_json(numerator(c)), bigint_to_json(denominator(c))}));
    const auto z = approx();
    return nlohmann::ordered_json{
        {"conductor", conductor}, {"coeffs", std::move(coeffs)}, {"approx", {z.real(), z.imag()}}};
}

Cyclotomic Cyclotomic::from_json(const nlohmann::ordered_json& j) {
    const int n = j.at("conductor").get<int>();
    if (n != conductor)
        throw ConductorMismatch("serialized conductor " + std::to_string(n) + ", expected " +
                                std::to_string(conductor));
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != degree)
        throw ConductorMismatch("expected " + std::to_string(degree) + " coordinates");
    Cyclotomic out;
    for (int k = 0; k < degree; ++k)
        out.coeffs_[k] = Rational(bigint_from_json(coeffs[k].at(0)), bigint_from_json(coeffs[k].at(1)));
    return out;
}

} // namespace fusionkit

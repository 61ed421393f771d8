#include "fusionkit/lattice.hpp"

#include "fusionkit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusionkit {

namespace {

bool exact_sqrt_available(int n) {
    if (Cyclotomic::conductor % n != 0) return false;
    int rest = n;
    for (int d = 2; d * d <= rest; ++d)
        while (rest % (d * d) == 0) rest /= d * d;
    return rest == 1 || rest == 2;
}

} // namespace

LatticeData::LatticeData(int half_norm) : k_(half_norm) {
    if (half_norm < 1) throw std::invalid_argument("half_norm must be positive");
    if (!s_supported()) return;

    // the whole exact S-matrix is small; build it once up front
    const int n = 2 * k_;
    const Cyclotomic inv_sqrt = Cyclotomic::sqrt_of(n).inverse();
    s00_inv_ = Cyclotomic::sqrt_of(n);
    s_.resize(n);
    for (int a = 0; a < n; ++a) {
        s_[a].resize(n);
        for (int b = 0; b < n; ++b)
            s_[a][b] = inv_sqrt * Cyclotomic::root_of_unity(n, -(long long)a * b);
    }
}

bool LatticeData::s_supported() const { return exact_sqrt_available(2 * k_); }

CosetLabel LatticeData::coset(long long j) const {
    const int n = 2 * k_;
    long long r = j % n;
    if (r < 0) r += n;
    return CosetLabel{int(r)};
}

Rational LatticeData::coset_weight(CosetLabel j) const {
    const int n = 2 * k_;
    const long long m = std::min(j.value, n - j.value);
    return Rational(m * m, 4 * k_);
}

const Cyclotomic& LatticeData::s_entry(CosetLabel a, CosetLabel b) const {
    if (s_.empty())
        throw NotRepresentable("lattice S-matrix for 2k = " + std::to_string(2 * k_) +
                               " does not lie in Q(ζ_72)");
    return s_[a.value][b.value];
}

CosetLabel LatticeData::fuse(CosetLabel a, CosetLabel b) const {
    return coset((long long)a.value + b.value);
}

long LatticeData::verlinde(CosetLabel a, CosetLabel b, CosetLabel c) const {
    const int n = 2 * k_;
    const CosetLabel c_dual = coset(-c.value); // (S^{-1})_{s,c} = S_{s,-c}
    Cyclotomic sum;
    for (int s = 0; s < n; ++s) {
        const CosetLabel ls{s};
        sum += s_entry(a, ls) * s_entry(b, ls) * s_entry(ls, c_dual);
    }
    sum *= s00_inv_; // every row-0 entry equals 1/√(2k)
    const auto q = sum.as_rational();
    long long v = 0;
    if (!q || !as_long(*q, v) || v < 0)
        throw NonIntegral("lattice Verlinde sum is not a nonnegative integer: " + sum.to_string());
    return long(v);
}

SquareCheckReport LatticeData::verify_s_squared() const {
    const int n = 2 * k_;
    SquareCheckReport report;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Cyclotomic acc;
            for (int t = 0; t < n; ++t)
                acc += s_entry(CosetLabel{a}, CosetLabel{t}) * s_entry(CosetLabel{t}, CosetLabel{b});
            const Cyclotomic expected((a + b) % n == 0 ? 1 : 0);
            if (!(acc == expected)) {
                report.passed = false;
                report.witnesses.push_back("(S²)_{" + std::to_string(a) + "," + std::to_string(b) +
                                           "} = " + acc.to_string());
            }
        }
    }
    return report;
}

} // namespace fusionkit

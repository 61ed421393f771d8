#pragma once

#include "fusionkit/cyclotomic.hpp"
#include "fusionkit/rational.hpp"

#include <string>
#include <vector>

namespace fusionkit {

// Residue modulo 2k, always stored reduced to [0, 2k).
struct CosetLabel {
    int value = 0;
    bool operator==(const CosetLabel&) const = default;
};

struct SquareCheckReport {
    bool passed = true;
    std::vector<std::string> witnesses; // failing (a,b) cells, if any
};

/*
 * Modular data of the rank-one even lattice Zγ with (γ,γ) = 2k.  The 2k
 * irreducible modules are the cosets λ_j = (j/2k)γ of the dual lattice,
 * with S-matrix S_{a,b} = (1/√(2k))·e^{−2πi·ab/(2k)}.
 *
 * Everything here is exact, which limits the supported 2k for S-matrix
 * work to values where both the root of unity and √(2k) live in Q(ζ_72):
 * 2k ∈ {2, 4, 8, 18, 36, 72}.  The artifact's main instance is 2k = 18;
 * the small instances serve as independent oracles.
 */
class LatticeData {
public:
    explicit LatticeData(int half_norm);

    int half_norm() const { return k_; }
    int module_count() const { return 2 * k_; }
    bool s_supported() const;

    CosetLabel coset(long long j) const;

    // Lowest conformal weight of the coset module: min(j, 2k−j)² / (4k).
    Rational coset_weight(CosetLabel j) const;

    // Exact S-matrix entry; throws NotRepresentable when unsupported.
    const Cyclotomic& s_entry(CosetLabel a, CosetLabel b) const;

    // Fusion of coset modules is addition of labels.
    CosetLabel fuse(CosetLabel a, CosetLabel b) const;

    // Exact Verlinde sum N_{a,b}^c = Σ_s S_{a,s}S_{b,s}S_{s,-c}/S_{0,s}.
    // Must come out as a nonnegative integer (NonIntegral otherwise);
    // the fusion rule above predicts [c ≡ a+b].
    long verlinde(CosetLabel a, CosetLabel b, CosetLabel c) const;

    // Confirms (S²)_{a,b} = [b ≡ −a], i.e. S² is charge conjugation.
    SquareCheckReport verify_s_squared() const;

private:
    int k_;
    std::vector<std::vector<Cyclotomic>> s_; // built in the constructor when supported
    Cyclotomic s00_inv_;                     // √(2k) = 1/S_{0,s}
};

} // namespace fusionkit

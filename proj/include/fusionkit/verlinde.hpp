#pragma once

#include "fusionkit/catalog.hpp"
#include "fusionkit/smatrix.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fusionkit {

// Module ids whose S-matrix rows and columns are fully determined.
inline constexpr std::array<int, 13> computable_ids = {0, 6, 7, 8, 9, 10, 11,
                                                       12, 13, 14, 15, 16, 17};

bool computable(int id);

struct DualityCheck {
    bool passed = true;
    std::vector<std::string> witnesses;
};

/*
 * Exact evaluation of N_{i,j}^k = Σ_s S_{i,s} S_{j,s} (S^{-1})_{s,k} / S_{0,s}
 * over the computable index set.  The inverse S-matrix column is never
 * formed: (S^{-1})_{s,k} = S_{s,k'} with k' the dual of k.  Since row 0 is
 * rational (qdim/(4√18)), each term reduces to a rational multiple of a
 * product of three normalized entries, and the whole sum stays in Q(ζ_72).
 */
class VerlindeEngine {
public:
    explicit VerlindeEngine(const PartialSMatrix& s);

    // One coefficient; i, j, k must all be computable ids.
    long coefficient(int i, int j, int k) const;

    // All computable targets for one pair, in computable_ids order.
    std::array<long, 13> target_row(int i, int j) const;

    // The full 13×13×13 block.
    std::map<std::pair<int, int>, std::array<long, 13>> twisted_block_table() const;

    // N_{i,j}^0 must be the duality pairing δ_{j,i'}.
    DualityCheck duality_check() const;

private:
    // normalized rows √18·S_{i,·} for i in the computable set
    std::map<int, std::array<Cyclotomic, module_count>> rows_;

    const std::array<Cyclotomic, module_count>& row(int id) const;
    long reduce(const Cyclotomic& sum, int i, int j, int k) const;
};

} // namespace fusionkit

#include "fusionkit/fusion.hpp"

#include "fusionkit/errors.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace fusionkit;

namespace {

FusionVector vec(std::initializer_list<std::pair<int, long>> terms) {
    FusionVector v;
    for (const auto& [k, n] : terms) v[k] = n;
    return v;
}

} // namespace

TEST_CASE("printed products") {
    CHECK(fuse(3, 3) == vec({{0, 1}, {1, 1}, {2, 1}, {3, 2}}));
    CHECK(fuse(4, 4) ==
          vec({{18, 1}, {19, 1}, {20, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}}));
    CHECK(fuse(4, 5) == vec({{18, 1}, {19, 1}, {20, 1}, {3, 2}, {4, 2}, {5, 2}}));
    for (int j = 0; j < module_count; ++j) {
        FusionVector unit;
        unit[j] = 1;
        CHECK(fuse(0, j) == unit);
    }

    CHECK(n_coeff(3, 4, 5) == 2);
    CHECK(n_coeff(3, 4, 4) == 1);
    CHECK(n_coeff(1, 1, 2) == 1);
    CHECK(n_coeff(0, 5, 5) == 1);
}

TEST_CASE("twisted squares and mixed products") {
    CHECK(fuse(6, 6) == vec({{12, 1}, {13, 1}, {14, 1}, {15, 1}}));
    CHECK(fuse(6, 7) == vec({{12, 1}, {13, 1}, {14, 1}, {16, 1}}));
    CHECK(fuse(9, 9) == vec({{12, 1}, {13, 1}, {14, 1}, {16, 1}}));
    CHECK(fuse(9, 10) == vec({{12, 1}, {13, 1}, {14, 1}, {15, 1}}));
    CHECK(fuse(6, 9) == vec({{12, 1}, {15, 1}, {16, 1}, {17, 1}}));
    CHECK(fuse(6, 10) == vec({{13, 1}, {15, 1}, {16, 1}, {17, 1}}));

    // σ² copies are the duals of the σ ones
    CHECK(fuse(12, 12) == vec({{6, 1}, {7, 1}, {8, 1}, {9, 1}}));
    CHECK(fuse(12, 15) == vec({{6, 1}, {9, 1}, {10, 1}, {11, 1}}));
}

TEST_CASE("cross-power products") {
    // same type: one unit-orbit member plus the fixed tail
    CHECK(fuse(6, 12) == vec({{0, 1}, {3, 1}, {4, 1}, {5, 1}}));
    CHECK(fuse(6, 13) == vec({{1, 1}, {3, 1}, {4, 1}, {5, 1}}));
    CHECK(fuse(9, 16) == vec({{2, 1}, {3, 1}, {4, 1}, {5, 1}})); // r=2, l-k=1 -> exponent 2
    // opposite types: two quarter-lattice members
    CHECK(fuse(6, 15) == vec({{18, 1}, {19, 1}, {4, 1}, {5, 1}}));
    CHECK(fuse(9, 12) == vec({{18, 1}, {20, 1}, {4, 1}, {5, 1}})); // r=2: exponents 0 and -1
}

TEST_CASE("fusion with the permutation orbit") {
    CHECK(fuse(1, 6) == vec({{8, 1}}));
    CHECK(fuse(1, 9) == vec({{10, 1}}));
    CHECK(fuse(1, 12) == vec({{13, 1}}));
    CHECK(fuse(1, 15) == vec({{17, 1}}));
    CHECK(fuse(1, 18) == vec({{19, 1}}));
    CHECK(fuse(2, 19) == vec({{18, 1}}));
}

TEST_CASE("rule families partition the pairs") {
    std::map<std::string, int> counts;
    for (int i = 0; i < module_count; ++i)
        for (int j = i; j < module_count; ++j) ++counts[rule_family(i, j)];
    int total = 0;
    for (const auto& [tag, n] : counts) total += n;
    CHECK(total == 231);
    CHECK(counts.size() == 20);
    CHECK(counts["1.1"] == 6);
    CHECK(counts["1.4"] == 36);
    CHECK(counts["4.4-3"] == 12);  // two powers × 6 unordered pairs
    CHECK(counts["4.4-5"] == 18);  // two powers × 9 cross pairs
    CHECK(counts["4.4-1"] == 18);
    CHECK(counts["4.4-2"] == 18);
    CHECK(counts["6.6-1"] == 2);
    CHECK(counts["6.6-2"] == 1);
}

TEST_CASE("symmetry of the encoding") {
    for (int i = 0; i < module_count; ++i)
        for (int j = 0; j < module_count; ++j) CHECK(fuse(i, j) == fuse(j, i));
}

TEST_CASE("duals extracted from the table match the catalog") {
    for (int i = 0; i < module_count; ++i) CHECK(dual_from_table(i) == dual_of(i));
    CHECK(dual_from_table(1) == 2);
    CHECK(dual_from_table(6) == 12);
    CHECK(dual_from_table(0) == 0);
}

TEST_CASE("ring axioms") {
    const auto report = verify_ring_axioms();
    CHECK(report.passed());
    CHECK(report.commutativity.checked == 441);
    CHECK(report.unit.checked == 21);
    CHECK(report.duality.checked == 21 * 21 * 21);
    CHECK(report.associativity.checked == 21L * 21 * 21 * 21);
    CHECK(report.vacuum_pairing.checked == 441);
    CHECK(report.associativity.violations.empty());
}

TEST_CASE("quantum dimension homomorphism") {
    const auto report = verify_qdim_homomorphism();
    CHECK(report.passed());
    CHECK(report.checked == 441);
    CHECK(fuse(3, 3).qdim_mass() == 9);
    CHECK(fuse(6, 6).qdim_mass() == 16);
}

TEST_CASE("simple currents permute the simples") {
    const auto report = verify_simple_currents();
    CHECK(report.passed());
    CHECK(report.checked == 3); // ids 0, 1, 2

    // the i=1 permutation in cycle form, read off the table
    std::map<int, int> image;
    for (int j = 0; j < module_count; ++j)
        for (int k = 0; k < module_count; ++k)
            if (fuse(1, j)[k] == 1) image[j] = k;
    CHECK(image[0] == 1);
    CHECK(image[1] == 2);
    CHECK(image[2] == 0);
    CHECK(image[3] == 3);
    CHECK(image[4] == 4);
    CHECK(image[5] == 5);
    // i=2 inverts it
    for (int j = 0; j < module_count; ++j) {
        int back = -1;
        for (int k = 0; k < module_count; ++k)
            if (fuse(2, image[j])[k] == 1) back = k;
        CHECK(back == j);
    }
}

TEST_CASE("verlinde cross-check on the computable block") {
    static const PartialSMatrix m = build_partial_s();
    const VerlindeEngine engine(m);
    const auto report = cross_check_verlinde(engine);
    CHECK(report.passed());
    CHECK(report.checked == 13 * 13 * 13);
}

TEST_CASE("fusion with the mass-three module spreads over orbits") {
    for (int id = 6; id <= 17; ++id) {
        const auto t = twisted_params(id);
        FusionVector expected;
        for (int s = 0; s < 3; ++s) expected[twisted_id(t.power, t.type, s)] = 1;
        CHECK(fuse(3, id) == expected);
    }
}

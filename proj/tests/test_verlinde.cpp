#include "fusionkit/verlinde.hpp"

#include "fusionkit/errors.hpp"

#include <doctest.h>

#include <set>

using namespace fusionkit;

namespace {

const VerlindeEngine& engine() {
    static const PartialSMatrix m = build_partial_s();
    static const VerlindeEngine e(m);
    return e;
}

std::set<int> nonzero_targets(int i, int j) {
    std::set<int> out;
    const auto row = engine().target_row(i, j);
    for (std::size_t t = 0; t < computable_ids.size(); ++t)
        if (row[t] != 0) out.insert(computable_ids[t]);
    return out;
}

} // namespace

TEST_CASE("single coefficients") {
    CHECK(engine().coefficient(6, 6, 12) == 1);
    CHECK(engine().coefficient(6, 6, 9) == 0);
    CHECK(engine().coefficient(6, 12, 0) == 1);
    CHECK(engine().coefficient(6, 6, 0) == 0);
    CHECK(engine().coefficient(0, 0, 0) == 1);
}

TEST_CASE("rows of the twisted block") {
    CHECK(nonzero_targets(6, 6) == std::set<int>{12, 13, 14, 15});
    CHECK(nonzero_targets(9, 9) == std::set<int>{12, 13, 14, 16});
    CHECK(nonzero_targets(0, 6) == std::set<int>{6});

    // hand-evaluated 21-term sums: the fourth summand of the type-1 square
    // moves with k+l, not against it
    CHECK(engine().coefficient(6, 7, 16) == 1);
    CHECK(engine().coefficient(6, 7, 17) == 0);
    // and the type-2 square moves with 1-(k+l)
    CHECK(engine().coefficient(9, 10, 15) == 1);
    CHECK(engine().coefficient(9, 10, 17) == 0);
    // mixed products put the odd summand in the type-1 family at l-k
    CHECK(nonzero_targets(6, 9) == std::set<int>{12, 15, 16, 17});
    CHECK(nonzero_targets(6, 10) == std::set<int>{13, 15, 16, 17});
    CHECK(nonzero_targets(7, 9) == std::set<int>{14, 15, 16, 17});
}

TEST_CASE("ids outside the computable set are refused") {
    CHECK_THROWS_AS(engine().coefficient(1, 6, 6), NotComputable);
    CHECK_THROWS_AS(engine().coefficient(6, 6, 18), NotComputable);
    CHECK_THROWS_AS(engine().target_row(4, 6), NotComputable);
}

TEST_CASE("full block: integral, small, symmetric") {
    const auto table = engine().twisted_block_table();
    CHECK(table.size() == 13 * 13);
    for (const auto& [pair, row] : table) {
        for (long v : row) {
            CHECK(v >= 0);
            CHECK(v <= 2);
        }
        CHECK(row == table.at({pair.second, pair.first}));
    }
}

TEST_CASE("duality pairing") {
    const auto check = engine().duality_check();
    CHECK(check.passed);
    CHECK(check.witnesses.empty());
}

TEST_CASE("quantum dimension mass inside the block") {
    // both factors twisted by the same power: the product lands entirely in
    // the computable set, so the masses agree exactly
    for (int i : {6, 9})
        for (int j : {7, 10, 11}) {
            const auto row = engine().target_row(i, j);
            long mass = 0;
            for (std::size_t t = 0; t < computable_ids.size(); ++t)
                mass += row[t] * qdim_of(computable_ids[t]);
            CHECK(mass == qdim_of(i) * qdim_of(j));
        }
}

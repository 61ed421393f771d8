#include "fusionkit/verlinde.hpp"

#include "fusionkit/errors.hpp"

#include <algorithm>

namespace fusionkit {

bool computable(int id) {
    return std::find(computable_ids.begin(), computable_ids.end(), id) != computable_ids.end();
}

VerlindeEngine::VerlindeEngine(const PartialSMatrix& s) {
    for (int id : computable_ids) {
        auto& row = rows_[id];
        for (int col = 0; col < module_count; ++col) row[col] = s.normalized(id, col);
    }
}

const std::array<Cyclotomic, module_count>& VerlindeEngine::row(int id) const {
    const auto it = rows_.find(id);
    if (it == rows_.end())
        throw NotComputable("module " + std::to_string(id) +
                            " lies outside the computable index set");
    return it->second;
}

long VerlindeEngine::reduce(const Cyclotomic& sum, int i, int j, int k) const {
    const auto q = sum.as_rational();
    long long value = 0;
    if (!q || !as_long(*q, value) || value < 0)
        throw NonIntegral("Verlinde sum N(" + std::to_string(i) + "," + std::to_string(j) +
                          ")^" + std::to_string(k) + " = " + sum.to_string() +
                          " is not a nonnegative integer");
    return long(value);
}

long VerlindeEngine::coefficient(int i, int j, int k) const {
    const auto& ri = row(i);
    const auto& rj = row(j);
    const auto& rk = row(dual_of(k)); // column k' of S, via symmetry

    // With T = √18·S and T_{0,s} = qdim_s/4:
    //   N = (1/18) Σ_s (4/qdim_s) · T_{i,s} T_{j,s} T_{k',s}
    Cyclotomic sum;
    for (int s = 0; s < module_count; ++s)
        sum += (ri[s] * rj[s] * rk[s]).scaled(Rational(4, qdim_of(s)));
    return reduce(sum.scaled(Rational(1, 18)), i, j, k);
}

std::array<long, 13> VerlindeEngine::target_row(int i, int j) const {
    const auto& ri = row(i);
    const auto& rj = row(j);

    std::array<Cyclotomic, module_count> pair;
    for (int s = 0; s < module_count; ++s)
        pair[s] = (ri[s] * rj[s]).scaled(Rational(4, qdim_of(s)));

    std::array<long, 13> out{};
    for (std::size_t t = 0; t < computable_ids.size(); ++t) {
        const int k = computable_ids[t];
        const auto& rk = row(dual_of(k));
        Cyclotomic sum;
        for (int s = 0; s < module_count; ++s) sum += pair[s] * rk[s];
        out[t] = reduce(sum.scaled(Rational(1, 18)), i, j, k);
    }
    return out;
}

std::map<std::pair<int, int>, std::array<long, 13>> VerlindeEngine::twisted_block_table() const {
    std::map<std::pair<int, int>, std::array<long, 13>> table;
    for (int i : computable_ids)
        for (int j : computable_ids) {
            if (i > j) {
                table[{i, j}] = table.at({j, i}); // symmetry in (i,j)
                continue;
            }
            table[{i, j}] = target_row(i, j);
        }
    return table;
}

DualityCheck VerlindeEngine::duality_check() const {
    DualityCheck check;
    for (int i : computable_ids)
        for (int j : computable_ids) {
            const long n = coefficient(i, j, 0);
            const long expected = (j == dual_of(i)) ? 1 : 0;
            if (n != expected) {
                check.passed = false;
                check.witnesses.push_back("N(" + std::to_string(i) + "," + std::to_string(j) +
                                          ")^0 = " + std::to_string(n));
            }
        }
    return check;
}

} // namespace fusionkit

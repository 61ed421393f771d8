#pragma once

#include "fusionkit/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fusionkit {

enum class Sector { untwisted, sigma, sigma2 };

std::string to_string(Sector s);

// Parameters of a twisted module W_{σ^power, type}^{sup} (ids 6..17).
struct TwistedParams {
    int power; // 1 or 2
    int type;  // 1 or 2
    int sup;   // 0, 1, 2
};

struct CatalogEntry {
    int id;                  // 0..20
    std::string name;        // compact ASCII-ish name, e.g. "W_s1^0"
    std::string latex;       // display form for LaTeX output
    Sector sector;
    Rational weight;         // lowest conformal weight
    int qdim;                // quantum dimension (integral for every module here)
    int dual;                // id of the contragredient module
    std::vector<int> cosets; // cosets of Zγ (2k = 18) containing this module
};

inline constexpr int module_count = 21;

const std::array<CatalogEntry, module_count>& catalog();
const CatalogEntry& entry(int id);

int dual_of(int id);
int qdim_of(int id);
const Rational& weight_of(int id);

bool is_twisted(int id);
TwistedParams twisted_params(int id);       // requires is_twisted(id)
int twisted_id(int power, int type, int sup);

// Direct summands of the coset module V_{Zγ+λ_j}, 0 ≤ j < 18, as a sorted
// multiset of module ids.
const std::vector<int>& decomposition(int coset);

// Σ qdim² over the whole catalog (the global dimension).
long qdim_squared_sum();

// Accepts ids ("14"), M-names ("M14"), and the compact module names
// ("V+0", "V-", "V1/8", "W_s1^0", "W_s21^2", "V1/4^1", also with comma:
// "W_s2,1^0" for the σ²-twisted family).
std::optional<int> parse_module_name(const std::string& text);

} // namespace fusionkit

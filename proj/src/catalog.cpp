#include "fusionkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fusionkit {

std::string to_string(Sector s) {
    switch (s) {
    case Sector::untwisted: return "untwisted";
    case Sector::sigma: return "sigma";
    default: return "sigma2";
    }
}

namespace {

CatalogEntry make(int id, std::string name, std::string latex, Sector sector, Rational weight,
                  int qdim, int dual, std::vector<int> cosets) {
    return CatalogEntry{id, std::move(name), std::move(latex), sector, std::move(weight),
                        qdim, dual, std::move(cosets)};
}

std::array<CatalogEntry, module_count> build_catalog() {
    const Sector u = Sector::untwisted, s1 = Sector::sigma, s2 = Sector::sigma2;
    return {
        make(0, "V+0", "(V_{\\mathbb{Z}\\beta}^{+})^{0}", u, Rational(0), 1, 0, {0}),
        make(1, "V+1", "(V_{\\mathbb{Z}\\beta}^{+})^{1}", u, Rational(4), 1, 2, {6}),
        make(2, "V+2", "(V_{\\mathbb{Z}\\beta}^{+})^{2}", u, Rational(4), 1, 1, {12}),
        make(3, "V-", "V_{\\mathbb{Z}\\beta}^{-}", u, Rational(1), 3, 3, {0, 6, 12}),
        make(4, "V1/8", "V_{\\mathbb{Z}\\beta+\\frac{1}{8}\\beta}", u, Rational(1, 16), 6, 4, {}),
        make(5, "V3/8", "V_{\\mathbb{Z}\\beta+\\frac{3}{8}\\beta}", u, Rational(9, 16), 6, 5, {}),
        make(6, "W_s1^0", "W_{\\sigma,1}^{0}", s1, Rational(1, 36), 4, 12, {1}),
        make(7, "W_s1^1", "W_{\\sigma,1}^{1}", s1, Rational(25, 36), 4, 13, {13}),
        make(8, "W_s1^2", "W_{\\sigma,1}^{2}", s1, Rational(49, 36), 4, 14, {7}),
        make(9, "W_s2^0", "W_{\\sigma,2}^{0}", s1, Rational(1, 9), 4, 15, {16}),
        make(10, "W_s2^1", "W_{\\sigma,2}^{1}", s1, Rational(4, 9), 4, 16, {4}),
        make(11, "W_s2^2", "W_{\\sigma,2}^{2}", s1, Rational(16, 9), 4, 17, {10}),
        make(12, "W_s21^0", "W_{\\sigma^{2},1}^{0}", s2, Rational(1, 36), 4, 6, {17}),
        make(13, "W_s21^1", "W_{\\sigma^{2},1}^{1}", s2, Rational(25, 36), 4, 7, {5}),
        make(14, "W_s21^2", "W_{\\sigma^{2},1}^{2}", s2, Rational(49, 36), 4, 8, {11}),
        make(15, "W_s22^0", "W_{\\sigma^{2},2}^{0}", s2, Rational(1, 9), 4, 9, {2}),
        make(16, "W_s22^1", "W_{\\sigma^{2},2}^{1}", s2, Rational(4, 9), 4, 10, {14}),
        make(17, "W_s22^2", "W_{\\sigma^{2},2}^{2}", s2, Rational(16, 9), 4, 11, {8}),
        make(18, "V1/4^0", "V_{\\mathbb{Z}\\beta+\\frac{1}{4}\\beta}^{0}", u, Rational(1, 4), 2, 18, {3, 15}),
        make(19, "V1/4^1", "V_{\\mathbb{Z}\\beta+\\frac{1}{4}\\beta}^{1}", u, Rational(9, 4), 2, 20, {3, 9}),
        make(20, "V1/4^2", "V_{\\mathbb{Z}\\beta+\\frac{1}{4}\\beta}^{2}", u, Rational(9, 4), 2, 19, {9, 15}),
    };
}

std::array<std::vector<int>, 18> build_decomposition() {
    std::array<std::vector<int>, 18> table;
    for (const auto& e : catalog())
        for (int c : e.cosets) table[c].push_back(e.id);
    for (auto& ids : table) std::sort(ids.begin(), ids.end());
    return table;
}

} // namespace

const std::array<CatalogEntry, module_count>& catalog() {
    static const auto table = build_catalog();
    return table;
}

const CatalogEntry& entry(int id) {
    if (id < 0 || id >= module_count) throw std::out_of_range("module id out of range");
    return catalog()[id];
}

int dual_of(int id) { return entry(id).dual; }
int qdim_of(int id) { return entry(id).qdim; }
const Rational& weight_of(int id) { return entry(id).weight; }

bool is_twisted(int id) { return id >= 6 && id <= 17; }

TwistedParams twisted_params(int id) {
    if (!is_twisted(id)) throw std::out_of_range("not a twisted module id");
    const int t = id - 6;
    return {t / 6 + 1, (t % 6) / 3 + 1, t % 3};
}

int twisted_id(int power, int type, int sup) {
    return 6 + (power - 1) * 6 + (type - 1) * 3 + sup;
}

const std::vector<int>& decomposition(int coset) {
    static const auto table = build_decomposition();
    if (coset < 0 || coset >= 18) throw std::out_of_range("coset out of range");
    return table[coset];
}

long qdim_squared_sum() {
    long total = 0;
    for (const auto& e : catalog()) total += long(e.qdim) * e.qdim;
    return total;
}

std::optional<int> parse_module_name(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) return std::nullopt;

    // bare id or "M<id>"
    std::string digits = t;
    if (t[0] == 'M' || t[0] == 'm') digits = t.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        const int id = std::stoi(digits);
        if (id >= 0 && id < module_count) return id;
        return std::nullopt;
    }

    // canonical names, with the comma-form alias for twisted modules
    std::string folded = t;
    const auto comma = folded.find(',');
    if (comma != std::string::npos) folded.erase(comma, 1); // "W_s2,1^0" -> "W_s21^0"
    for (const auto& e : catalog())
        if (e.name == folded) return e.id;
    return std::nullopt;
}

} // namespace fusionkit

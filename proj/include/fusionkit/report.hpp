#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fusionkit {

enum class CheckStatus { pass, fail, expected_discrepancy };

std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckRecord> checks;

    int passed() const;
    int failed() const;
    int expected() const;
    bool ok() const { return failed() == 0; }

    void add(std::string id, CheckStatus status, std::string detail);
};

struct VerificationReport {
    std::vector<SuiteReport> suites;

    bool ok() const;
    int exit_status() const { return ok() ? 0 : 1; }

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

// One entry of the discrepancy ledger: a known defect of the published
// tables, with the printed form quoted and the resolution (or the decision
// not to resolve) recorded.  Checks that rediscover a ledgered defect
// report it as an expected discrepancy instead of a failure.
struct ErratumRecord {
    std::string id;
    std::string kind;     // "smatrix-cell", "fusion-rule", "class-sum"
    std::string printed;  // the printed form, quoted
    std::string resolved; // what the artifact uses instead
    std::string witness;  // the evidence
    std::string note;
    int row = -1, col = -1; // for smatrix-cell
    std::string family;     // for fusion-rule
    std::string cls;        // for class-sum
};

// Ledger resolution order: $FUSIONKIT_LEDGER, then ./data/errata.json,
// then the built-in copy of the shipped file.
const std::vector<ErratumRecord>& errata();
std::vector<ErratumRecord> parse_errata(const nlohmann::json& j);
const char* default_errata_text();

const ErratumRecord* find_erratum_cell(int row, int col);
const ErratumRecord* find_erratum_family(const std::string& family);
const ErratumRecord* find_erratum_class(const std::string& cls);

} // namespace fusionkit

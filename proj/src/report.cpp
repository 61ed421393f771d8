#include "fusionkit/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fusionkit {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "expected-discrepancy";
    }
}

int SuiteReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::pass;
    return n;
}

int SuiteReport::failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::fail;
    return n;
}

int SuiteReport::expected() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::expected_discrepancy;
    return n;
}

void SuiteReport::add(std::string id, CheckStatus status, std::string detail) {
    checks.push_back({std::move(id), status, std::move(detail)});
}

bool VerificationReport::ok() const {
    for (const auto& s : suites)
        if (!s.ok()) return false;
    return true;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json suites_json = nlohmann::ordered_json::array();
    int passed = 0, failed = 0, expected = 0;
    for (const auto& s : suites) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
        suites_json.push_back({{"name", s.name},
                               {"passed", s.passed()},
                               {"failed", s.failed()},
                               {"expected_discrepancies", s.expected()},
                               {"checks", std::move(checks)}});
        passed += s.passed();
        failed += s.failed();
        expected += s.expected();
    }
    return nlohmann::ordered_json{
        {"report", "verification"},
        {"suites", std::move(suites_json)},
        {"summary",
         {{"passed", passed}, {"failed", failed}, {"expected_discrepancies", expected}}},
        {"exit_status", exit_status()}};
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    int passed = 0, failed = 0, expected = 0;
    for (const auto& s : suites) {
        for (const auto& c : s.checks) {
            os << "[" << s.name << "] " << to_string(c.status) << "  " << c.id;
            if (!c.detail.empty()) os << ": " << c.detail;
            os << "\n";
        }
        passed += s.passed();
        failed += s.failed();
        expected += s.expected();
    }
    os << "summary: " << passed << " pass, " << expected << " expected-discrepancy, " << failed
       << " fail\n";
    return os.str();
}

std::vector<ErratumRecord> parse_errata(const nlohmann::json& j) {
    std::vector<ErratumRecord> out;
    for (const auto& e : j.at("errata")) {
        ErratumRecord r;
        r.id = e.at("id").get<std::string>();
        r.kind = e.at("kind").get<std::string>();
        r.printed = e.value("printed", "");
        r.resolved = e.value("resolved", "");
        r.witness = e.value("witness", "");
        r.note = e.value("note", "");
        r.row = e.value("row", -1);
        r.col = e.value("col", -1);
        r.family = e.value("family", "");
        r.cls = e.value("class", "");
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

std::vector<ErratumRecord> load_ledger() {
    std::string text;
    if (const char* env = std::getenv("FUSIONKIT_LEDGER")) {
        std::ifstream in(env);
        if (!in) throw std::runtime_error(std::string("cannot open ledger file ") + env);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else if (std::ifstream in{"data/errata.json"}) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = default_errata_text();
    }
    return parse_errata(nlohmann::json::parse(text));
}

} // namespace

const std::vector<ErratumRecord>& errata() {
    static const std::vector<ErratumRecord> ledger = load_ledger();
    return ledger;
}

const ErratumRecord* find_erratum_cell(int row, int col) {
    for (const auto& e : errata())
        if (e.kind == "smatrix-cell" && e.row == row && e.col == col) return &e;
    return nullptr;
}

const ErratumRecord* find_erratum_family(const std::string& family) {
    for (const auto& e : errata())
        if (e.kind == "fusion-rule" && e.family == family) return &e;
    return nullptr;
}

const ErratumRecord* find_erratum_class(const std::string& cls) {
    for (const auto& e : errata())
        if (e.kind == "class-sum" && e.cls == cls) return &e;
    return nullptr;
}

} // namespace fusionkit

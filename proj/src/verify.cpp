#include "fusionkit/verify.hpp"

#include "fusionkit/errors.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/lattice.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace fusionkit {

namespace {

std::string pos(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

CheckRecord from_erratum(const ErratumRecord& e, const std::string& observed) {
    return {e.id, CheckStatus::expected_discrepancy,
            observed + " | printed: " + e.printed + " | resolved: " + e.resolved +
                " | witness: " + e.witness};
}

// --- appendix ---------------------------------------------------------------

SuiteReport suite_appendix(const VerifyContext& ctx) {
    SuiteReport suite{"appendix", {}};
    const auto found = compare_with_appendix(ctx.matrix);

    std::set<std::string> consumed;
    for (const auto& d : found) {
        const std::string observed = "cell " + pos(d.row, d.col) + ": printed " +
                                     d.printed.to_string() + ", rebuilt " + d.computed.to_string() +
                                     ", printed partner " + pos(d.col, d.row) + " = " +
                                     d.witness_printed.to_string();
        if (const ErratumRecord* e = find_erratum_cell(d.row, d.col)) {
            suite.checks.push_back(from_erratum(*e, observed));
            consumed.insert(e->id);
        } else {
            suite.add("appendix-cell-" + std::to_string(d.row) + "-" + std::to_string(d.col),
                      CheckStatus::fail, "unledgered symmetry-witnessed mismatch: " + observed);
        }
    }
    for (const auto& e : errata())
        if (e.kind == "smatrix-cell" && !consumed.count(e.id))
            suite.add(e.id, CheckStatus::fail, "ledgered cell no longer differs (stale erratum)");

    const int cells = 18 * 13;
    suite.add("appendix-reproduction", CheckStatus::pass,
              std::to_string(cells - int(found.size())) + "/" + std::to_string(cells) +
                  " printed cells reproduced exactly over rows 0..17");
    return suite;
}

// --- class sums --------------------------------------------------------------

SuiteReport suite_class_sum(const VerifyContext& ctx) {
    SuiteReport suite{"class-sum", {}};
    const auto report = class_sum_check(ctx.matrix);

    int failing = 0;
    for (const auto& c : report.checks)
        if (!c.passed) {
            ++failing;
            suite.add("class-sum-row" + std::to_string(c.row) + "-" + c.cls, CheckStatus::fail,
                      "lhs " + c.lhs + " != rhs " + c.rhs);
        }
    suite.add("class-sums", failing == 0 ? CheckStatus::pass : CheckStatus::fail,
              std::to_string(report.checks.size() - failing) + "/" +
                  std::to_string(report.checks.size()) +
                  " decomposition sums match over the twisted rows");

    // the two excluded classes: report the tension, do not arbitrate
    for (const std::string cls : {"{18}", "{19,20}"}) {
        int rows_in_tension = 0, rows_total = 0;
        std::string sample;
        for (const auto& c : report.excluded) {
            if (c.cls != cls) continue;
            ++rows_total;
            if (!c.passed) ++rows_in_tension;
            if (c.row == 6) sample = "row 6: printed side " + c.lhs + ", coset side " + c.rhs;
        }
        const ErratumRecord* e = find_erratum_class(cls);
        if (!e) {
            suite.add("class-sum-excluded-" + cls, CheckStatus::fail,
                      "unledgered tension in class " + cls);
        } else if (rows_in_tension != rows_total) {
            suite.add(e->id, CheckStatus::fail,
                      "ledgered tension partially vanished: " + std::to_string(rows_in_tension) +
                          "/" + std::to_string(rows_total) + " rows still differ");
        } else {
            suite.checks.push_back(from_erratum(
                *e, "class " + cls + " differs on all " + std::to_string(rows_total) +
                        " twisted rows; " + sample));
        }
    }
    return suite;
}

// --- charge conjugation -------------------------------------------------------

SuiteReport suite_conjugation(const VerifyContext& ctx) {
    SuiteReport suite{"conjugation", {}};
    int checked = 0, bad = 0;
    std::string witness;
    for (int i : computable_ids)
        for (int j : computable_ids) {
            Cyclotomic acc;
            for (int s = 0; s < module_count; ++s)
                acc += ctx.matrix.normalized(i, s) * ctx.matrix.normalized(s, j);
            const Cyclotomic expected(j == dual_of(i) ? 18 : 0); // normalized by (√18)²
            ++checked;
            if (!(acc == expected)) {
                ++bad;
                if (witness.empty())
                    witness = " first at " + pos(i, j) + " = " + acc.scaled(Rational(1, 18)).to_string();
            }
        }
    suite.add("charge-conjugation", bad == 0 ? CheckStatus::pass : CheckStatus::fail,
              std::to_string(checked - bad) + "/" + std::to_string(checked) +
                  " identities Σ_s S_{i,s}S_{s,j} = δ_{j,i'}" + witness);
    return suite;
}

// --- quantum dimensions from column 0 ----------------------------------------

SuiteReport suite_qdim(const VerifyContext& ctx) {
    SuiteReport suite{"qdim", {}};
    const Cyclotomic s00_inv = ctx.matrix.normalized(0, 0).inverse();
    int bad = 0;
    for (int i = 0; i < module_count; ++i) {
        const Cyclotomic ratio = ctx.matrix.normalized(i, 0) * s00_inv;
        if (!(ratio == Cyclotomic(qdim_of(i)))) {
            ++bad;
            suite.add("qdim-" + std::to_string(i), CheckStatus::fail,
                      "S_{i,0}/S_{0,0} = " + ratio.to_string() + ", catalog says " +
                          std::to_string(qdim_of(i)));
        }
    }
    suite.add("qdim-column", bad == 0 ? CheckStatus::pass : CheckStatus::fail,
              std::to_string(module_count - bad) + "/21 quantum dimensions recovered from column 0");
    return suite;
}

// --- global dimension ----------------------------------------------------------

SuiteReport suite_global(const VerifyContext&) {
    SuiteReport suite{"global", {}};
    const long glob = qdim_squared_sum();
    const bool ok = glob == 288 && glob == 144 * 2;
    suite.add("global-dimension", ok ? CheckStatus::pass : CheckStatus::fail,
              "Σ qdim² = " + std::to_string(glob) + " (|A4|²·glob of the unorbifolded algebra = 288)");
    return suite;
}

// --- ring axioms ----------------------------------------------------------------

void add_sweep(SuiteReport& suite, const std::string& id, const SweepReport& r) {
    std::string detail = std::to_string(r.checked - long(r.violations.size())) + "/" +
                         std::to_string(r.checked) + " checks";
    if (!r.passed()) {
        detail += "; first violations:";
        for (std::size_t i = 0; i < r.violations.size() && i < 3; ++i)
            detail += " " + r.violations[i];
    }
    suite.add(id, r.passed() ? CheckStatus::pass : CheckStatus::fail, detail);
}

SuiteReport suite_ring(const VerifyContext&) {
    SuiteReport suite{"ring", {}};
    const auto r = verify_ring_axioms();
    add_sweep(suite, "commutativity", r.commutativity);
    add_sweep(suite, "unit", r.unit);
    add_sweep(suite, "duality-symmetry", r.duality);
    add_sweep(suite, "associativity", r.associativity);
    add_sweep(suite, "vacuum-pairing", r.vacuum_pairing);
    return suite;
}

SuiteReport suite_hom(const VerifyContext&) {
    SuiteReport suite{"hom", {}};
    add_sweep(suite, "qdim-homomorphism", verify_qdim_homomorphism());
    return suite;
}

SuiteReport suite_currents(const VerifyContext&) {
    SuiteReport suite{"currents", {}};
    add_sweep(suite, "simple-currents", verify_simple_currents());
    return suite;
}

// --- verlinde block and rule arbitrations ---------------------------------------

// The printed reading of one same-power product, used to certify that the
// ledgered arbitrations are still real differences against the engine.
FusionVector printed_form(const std::string& family, int power, int k, int l) {
    const auto mod3 = [](long x) { return int(((x % 3) + 3) % 3); };
    FusionVector v;
    const int opp = 3 - power;
    if (family == "4.4-3") {
        for (int s = 0; s < 3; ++s) v[twisted_id(opp, 1, s)] = 1;
        v[twisted_id(opp, 2, mod3(-long(power) * (k + l)))] += 1;
    } else if (family == "4.4-4") {
        for (int s = 0; s < 3; ++s) v[twisted_id(opp, 1, s)] = 1;
        v[twisted_id(opp, 2, mod3(1 + long(power) * (k + l)))] += 1;
    } else { // 4.4-5 as printed: a fourth type-2 summand
        for (int s = 0; s < 3; ++s) v[twisted_id(opp, 2, s)] = 1;
        v[twisted_id(opp, 2, mod3(long(power) * (l - k)))] += 1;
    }
    return v;
}

long associativity_violations(const std::function<FusionVector(int, int)>& table, long cap) {
    std::array<std::array<FusionVector, module_count>, module_count> N;
    for (int i = 0; i < module_count; ++i)
        for (int j = 0; j < module_count; ++j) N[i][j] = table(i, j);
    long bad = 0;
    for (int i = 0; i < module_count; ++i)
        for (int j = 0; j < module_count; ++j)
            for (int k = 0; k < module_count; ++k)
                for (int l = 0; l < module_count; ++l) {
                    long lhs = 0, rhs = 0;
                    for (int m = 0; m < module_count; ++m) {
                        lhs += N[i][j][m] * N[m][k][l];
                        rhs += N[j][k][m] * N[i][m][l];
                    }
                    if (lhs != rhs && ++bad >= cap) return bad;
                }
    return bad;
}

SuiteReport suite_verlinde(const VerifyContext& ctx) {
    SuiteReport suite{"verlinde", {}};

    const auto duality = ctx.engine.duality_check();
    suite.add("verlinde-duality", duality.passed ? CheckStatus::pass : CheckStatus::fail,
              duality.passed ? "N(i,j)^0 = δ_{j,i'} over the computable block"
                             : duality.witnesses.front());

    const auto table = ctx.engine.twisted_block_table();
    long coeffs = 0;
    bool in_range = true;
    for (const auto& [key, row] : table) {
        (void)key;
        for (long v : row) {
            ++coeffs;
            in_range = in_range && v >= 0 && v <= 2;
        }
    }
    suite.add("verlinde-integrality", in_range ? CheckStatus::pass : CheckStatus::fail,
              std::to_string(coeffs) + " exact coefficients, all in {0,1,2}");

    add_sweep(suite, "verlinde-vs-table", cross_check_verlinde(ctx.engine));

    // ledgered arbitrations of the twisted-product displays: confirm that the
    // printed reading still contradicts the engine exactly where recorded,
    // and nowhere else does the encoded table deviate from it
    for (const std::string family : {"4.4-3", "4.4-4", "4.4-5"}) {
        const ErratumRecord* e = find_erratum_family(family);
        int differing = 0, instances = 0;
        for (int power : {1, 2})
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    int lhs, rhs;
                    if (family == "4.4-3") {
                        lhs = twisted_id(power, 1, k);
                        rhs = twisted_id(power, 1, l);
                    } else if (family == "4.4-4") {
                        lhs = twisted_id(power, 2, k);
                        rhs = twisted_id(power, 2, l);
                    } else {
                        lhs = twisted_id(power, 1, k);
                        rhs = twisted_id(power, 2, l);
                    }
                    ++instances;
                    const auto engine_row = ctx.engine.target_row(lhs, rhs);
                    const FusionVector printed = printed_form(family, power, k, l);
                    bool matches = true;
                    for (std::size_t t = 0; t < computable_ids.size(); ++t)
                        matches = matches && printed[computable_ids[t]] == engine_row[t];
                    if (!matches) ++differing;
                }
        if (!e) {
            suite.add("arbitration-" + family,
                      differing == 0 ? CheckStatus::pass : CheckStatus::fail,
                      differing == 0 ? "printed display agrees with the Verlinde block"
                                     : "unledgered disagreement in " + std::to_string(differing) +
                                           " instances");
        } else if (differing == 0) {
            suite.add(e->id, CheckStatus::fail, "ledgered arbitration no longer needed (stale)");
        } else {
            suite.checks.push_back(from_erratum(
                *e, "printed display differs from the exact Verlinde block in " +
                        std::to_string(differing) + " of " + std::to_string(instances) +
                        " instances; encoded table matches the block everywhere"));
        }
    }

    // cross-power family: Verlinde sees only the vacuum column, so the two
    // printed readings are separated by associativity instead
    if (const ErratumRecord* e = find_erratum_family("4.4-1")) {
        const auto proof_line_table = [](int i, int j) {
            FusionVector v = fuse(i, j);
            if (rule_family(i, j) == "4.4-1") {
                const auto p = twisted_params(i), q = twisted_params(j);
                if (p.type == 2) {
                    const int k = (p.power == 1) ? p.sup : q.sup;
                    const int l = (p.power == 1) ? q.sup : p.sup;
                    v[0] = v[1] = v[2] = 0;
                    v[(((l - k) % 3) + 3) % 3] = 1; // exponent l-k instead of 2(l-k)
                }
            }
            return v;
        };
        const long with_statement = associativity_violations(
            [](int i, int j) { return fuse(i, j); }, 1);
        const long with_proof_line = associativity_violations(proof_line_table, 1);
        if (with_statement == 0 && with_proof_line > 0) {
            suite.checks.push_back(from_erratum(
                *e, "statement form is associative, proof-line form violates associativity"));
        } else {
            suite.add(e->id, CheckStatus::fail,
                      "arbitration evidence did not reproduce (statement violations " +
                          std::to_string(with_statement) + ", proof-line violations " +
                          std::to_string(with_proof_line) + ")");
        }
    }
    return suite;
}

// --- lattice oracles --------------------------------------------------------------

SuiteReport suite_lattice(const VerifyContext&) {
    SuiteReport suite{"lattice", {}};
    for (int k : {1, 2, 9}) {
        const LatticeData lat(k);
        const int n = lat.module_count();

        const auto square = lat.verify_s_squared();
        suite.add("lattice-2k" + std::to_string(n) + "-s-squared",
                  square.passed ? CheckStatus::pass : CheckStatus::fail,
                  square.passed ? "S² is the charge-conjugation permutation"
                                : square.witnesses.front());

        long bad = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const long expected = (a + b - c) % n == 0 ? 1 : 0;
                    if (lat.verlinde(lat.coset(a), lat.coset(b), lat.coset(c)) != expected) ++bad;
                }
        suite.add("lattice-2k" + std::to_string(n) + "-verlinde",
                  bad == 0 ? CheckStatus::pass : CheckStatus::fail,
                  std::to_string(long(n) * n * n - bad) + "/" + std::to_string(long(n) * n * n) +
                      " Verlinde sums equal [c ≡ a+b]");
    }

    // conformal weights of the 2k = 18 cosets against the module catalog
    const LatticeData lat(9);
    int bad = 0;
    for (int j = 0; j < 18; ++j) {
        const Rational base = lat.coset_weight(lat.coset(j));
        Rational lowest = weight_of(decomposition(j).front());
        bool integral_gaps = true;
        for (int id : decomposition(j)) {
            lowest = std::min(lowest, weight_of(id));
            const Rational gap = weight_of(id) - base;
            integral_gaps = integral_gaps && denominator(gap) == 1 && gap >= 0;
        }
        if (!(lowest == base) || !integral_gaps) ++bad;
    }
    suite.add("coset-weights", bad == 0 ? CheckStatus::pass : CheckStatus::fail,
              std::to_string(18 - bad) + "/18 cosets have matching minimal weight and integral gaps");
    return suite;
}

} // namespace

VerifyContext::VerifyContext() : matrix(build_partial_s()), engine(matrix) {}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "appendix", "class-sum", "conjugation", "qdim",     "global",
        "ring",     "hom",       "currents",    "verlinde", "lattice"};
    return names;
}

SuiteReport run_suite(const VerifyContext& ctx, const std::string& name) {
    if (name == "appendix") return suite_appendix(ctx);
    if (name == "class-sum") return suite_class_sum(ctx);
    if (name == "conjugation") return suite_conjugation(ctx);
    if (name == "qdim") return suite_qdim(ctx);
    if (name == "global") return suite_global(ctx);
    if (name == "ring") return suite_ring(ctx);
    if (name == "hom") return suite_hom(ctx);
    if (name == "currents") return suite_currents(ctx);
    if (name == "verlinde") return suite_verlinde(ctx);
    if (name == "lattice") return suite_lattice(ctx);
    throw std::invalid_argument("unknown suite: " + name);
}

VerificationReport run_verification(const std::string& suite) {
    VerifyContext ctx;
    VerificationReport report;
    if (suite == "all") {
        for (const auto& name : suite_names()) report.suites.push_back(run_suite(ctx, name));
    } else {
        report.suites.push_back(run_suite(ctx, suite));
    }
    return report;
}

} // namespace fusionkit

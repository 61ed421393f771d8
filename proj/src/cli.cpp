#include "fusionkit/cli.hpp"

#include "fusionkit/catalog.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/lattice.hpp"
#include "fusionkit/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace fusionkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string latex_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    BigInt num = numerator(q);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    return sign + "\\frac{" + num.str() + "}{" + denominator(q).str() + "}";
}

// LaTeX form of a table cell, in the polar style of the printed tables.
std::string latex_cell(const Cyclotomic& v) {
    if (v.is_zero()) return "0";
    const auto root = v.as_root_multiple();
    if (!root) {
        std::string poly;
        for (int k = 0; k < Cyclotomic::degree; ++k) {
            if (v.coeff(k) == 0) continue;
            if (!poly.empty() && v.coeff(k) > 0) poly += "+";
            poly += latex_rational(v.coeff(k)) + "\\zeta_{72}^{" + std::to_string(k) + "}";
        }
        return poly;
    }
    const auto& [coeff, power] = *root;
    if (power == 0) return latex_rational(coeff);
    if (power == 36) return latex_rational(-coeff);
    const int signed_power = power <= 35 ? power : power - Cyclotomic::conductor;
    const int g = std::gcd(std::abs(signed_power), 36);
    const int num = std::abs(signed_power) / g;
    const int den = 36 / g;
    std::string exp = std::string(signed_power < 0 ? "-" : "") +
                      (num == 1 ? "" : std::to_string(num)) + "\\pi i";
    std::string body = den == 1 ? exp : "\\frac{" + exp + "}{" + std::to_string(den) + "}";
    std::string head = coeff == 1 ? "" : latex_rational(coeff) + "\\cdot ";
    return head + "e^{" + body + "}";
}

int parse_module_or_throw(const std::string& text) {
    const auto id = parse_module_name(text);
    if (!id) throw CLI::ValidationError("module", "unknown module name '" + text + "'");
    return *id;
}

// ---- catalog ----------------------------------------------------------------

void print_catalog(std::ostream& out, const std::string& format) {
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& e : catalog()) {
            ordered_json cosets = ordered_json::array();
            for (int c : e.cosets) cosets.push_back(c);
            rows.push_back({{"id", e.id},
                            {"name", e.name},
                            {"latex", e.latex},
                            {"sector", to_string(e.sector)},
                            {"weight", to_string(e.weight)},
                            {"qdim", e.qdim},
                            {"dual", e.dual},
                            {"cosets", std::move(cosets)}});
        }
        out << ordered_json{{"modules", std::move(rows)}}.dump(2) << "\n";
        return;
    }
    if (format == "latex") {
        out << "\\begin{tabular}{|c|c|c|c|c|c|}\n\\hline\n";
        out << "$M^i$ & module & weight & qdim & dual & cosets\\\\\n\\hline\n";
        for (const auto& e : catalog()) {
            out << "$M^{" << e.id << "}$ & $" << e.latex << "$ & $" << latex_rational(e.weight)
                << "$ & " << e.qdim << " & $M^{" << e.dual << "}$ & ";
            for (std::size_t i = 0; i < e.cosets.size(); ++i)
                out << (i ? "," : "") << e.cosets[i];
            out << "\\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n";
        return;
    }
    out << " id  name      sector     weight  qdim  dual  cosets\n";
    for (const auto& e : catalog()) {
        std::ostringstream cosets;
        for (std::size_t i = 0; i < e.cosets.size(); ++i)
            cosets << (i ? "," : "") << e.cosets[i];
        out << std::setw(3) << e.id << "  " << std::left << std::setw(8) << e.name << "  "
            << std::setw(9) << to_string(e.sector) << "  " << std::right << std::setw(6)
            << to_string(e.weight) << "  " << std::setw(4) << e.qdim << "  " << std::setw(4)
            << e.dual << "  " << cosets.str() << "\n";
    }
}

// ---- smatrix ----------------------------------------------------------------

void print_smatrix(std::ostream& out, const std::string& format, bool normalized) {
    const PartialSMatrix m = build_partial_s();
    const auto cell = [&](int i, int j) {
        return normalized ? m.normalized(i, j) : m.entry(i, j);
    };

    if (format == "json") {
        ordered_json mask = ordered_json::array();
        ordered_json entries = ordered_json::array();
        for (int i = 0; i < module_count; ++i) {
            ordered_json mask_row = ordered_json::array();
            ordered_json row = ordered_json::array();
            for (int j = 0; j < module_count; ++j) {
                mask_row.push_back(m.known(i, j));
                if (m.known(i, j))
                    row.push_back(cell(i, j).to_json());
                else
                    row.push_back(nullptr);
            }
            mask.push_back(std::move(mask_row));
            entries.push_back(std::move(row));
        }
        out << ordered_json{{"matrix", normalized ? "sqrt18*S" : "S"},
                            {"conductor", Cyclotomic::conductor},
                            {"known_mask", std::move(mask)},
                            {"entries", std::move(entries)}}
                   .dump(2)
            << "\n";
        return;
    }

    if (format == "latex") {
        // the printed-table shape: all rows, the determined columns
        const std::vector<int> cols = {0, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17};
        out << "\\begin{tabular}{|c|" << std::string(cols.size(), 'c') << "|}\n\\hline\n";
        out << (normalized ? "$\\sqrt{18}S_{i,j}$" : "$S_{i,j}$");
        for (int j : cols) out << " & " << j;
        out << "\\\\\n\\hline\n";
        for (int i = 0; i < module_count; ++i) {
            out << i;
            for (int j : cols) out << " & $" << latex_cell(cell(i, j)) << "$";
            out << "\\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n";
        return;
    }

    std::array<std::array<std::string, module_count>, module_count> text;
    std::size_t width = 1;
    for (int i = 0; i < module_count; ++i)
        for (int j = 0; j < module_count; ++j) {
            text[i][j] = m.known(i, j) ? cell(i, j).to_string() : "·";
            width = std::max(width, text[i][j].size());
        }
    out << (normalized ? "sqrt18*S" : "S") << " (rows/columns 0..20, '·' = undetermined)\n";
    for (int i = 0; i < module_count; ++i) {
        for (int j = 0; j < module_count; ++j) {
            // UTF-8 aware padding: count code points, not bytes
            std::size_t glyphs = 0;
            for (char ch : text[i][j])
                glyphs += (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
            out << text[i][j] << std::string(width - glyphs + 2, ' ');
        }
        out << "\n";
    }
}

// ---- fuse ---------------------------------------------------------------------

void print_fuse(std::ostream& out, const std::string& format, int i, int j) {
    const FusionVector v = fuse(i, j);
    if (format == "json") {
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k < module_count; ++k) coeffs.push_back(v[k]);
        out << ordered_json{{"i", i},
                            {"j", j},
                            {"family", rule_family(i, j)},
                            {"coefficients", std::move(coeffs)},
                            {"text", v.to_text()}}
                   .dump(2)
            << "\n";
        return;
    }
    if (format == "latex") {
        out << "$" << entry(i).latex << " \\boxtimes " << entry(j).latex << " = " << v.to_latex()
            << "$\n";
        return;
    }
    out << v.to_text() << "\n";
}

// ---- verlinde -------------------------------------------------------------------

void print_verlinde(std::ostream& out, const std::string& format, const VerifyContext& ctx,
                    int i, int j, std::optional<int> k) {
    if (k) {
        const long n = ctx.engine.coefficient(i, j, *k);
        if (format == "json")
            out << ordered_json{{"i", i}, {"j", j}, {"k", *k}, {"n", n}}.dump(2) << "\n";
        else
            out << n << "\n";
        return;
    }
    const auto row = ctx.engine.target_row(i, j);
    if (format == "json") {
        ordered_json targets = ordered_json::array();
        for (std::size_t t = 0; t < computable_ids.size(); ++t)
            targets.push_back({{"k", computable_ids[t]}, {"n", row[t]}});
        out << ordered_json{{"i", i}, {"j", j}, {"targets", std::move(targets)}}.dump(2) << "\n";
        return;
    }
    out << "N(" << entry(i).name << ", " << entry(j).name << ") over the computable targets:\n";
    for (std::size_t t = 0; t < computable_ids.size(); ++t) {
        const int id = computable_ids[t];
        out << "  " << std::setw(2) << id << " " << std::left << std::setw(8) << entry(id).name
            << std::right << " : " << row[t] << "\n";
    }
}

// ---- lattice ---------------------------------------------------------------------

int print_lattice(std::ostream& out, const std::string& format, int half_norm, bool check) {
    const LatticeData lat(half_norm);
    const int n = lat.module_count();
    bool ok = true;
    std::string check_message;
    if (check) {
        if (!lat.s_supported()) throw NotRepresentable("lattice checks need a supported 2k");
        const auto square = lat.verify_s_squared();
        long bad = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (lat.verlinde(lat.coset(a), lat.coset(b), lat.coset(c)) !=
                        ((a + b - c) % n == 0 ? 1 : 0))
                        ++bad;
        ok = square.passed && bad == 0;
        check_message = std::string("s-squared ") + (square.passed ? "pass" : "fail") +
                        ", verlinde sweep " + (bad == 0 ? "pass" : "fail");
    }

    if (format == "json") {
        ordered_json weights = ordered_json::array();
        for (int j = 0; j < n; ++j)
            weights.push_back(to_string(lat.coset_weight(lat.coset(j))));
        ordered_json doc{{"half_norm", half_norm},
                         {"modules", n},
                         {"s_supported", lat.s_supported()},
                         {"weights", std::move(weights)}};
        if (check) doc["check"] = check_message;
        out << doc.dump(2) << "\n";
    } else {
        out << "rank-one even lattice, (γ,γ) = " << n << ", " << n << " coset modules\n";
        out << "exact S-matrix available: " << (lat.s_supported() ? "yes" : "no") << "\n";
        for (int j = 0; j < n; ++j)
            out << "  λ_" << std::setw(2) << j << "  weight " << to_string(lat.coset_weight(lat.coset(j)))
                << "\n";
        if (check) out << check_message << "\n";
    }
    return ok ? 0 : 1;
}

// ---- verify -----------------------------------------------------------------------

int print_verify(std::ostream& out, const std::string& format, const std::string& suite) {
    const VerificationReport report = run_verification(suite);
    if (format == "json")
        out << report.to_json().dump(2) << "\n";
    else
        out << report.to_text();
    return report.exit_status();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact modular data and fusion ring of the A4 orbifold of the "
                 "rank-one lattice algebra at (α,α)=2"};
    app.name("fusionkit");
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* cmd, bool latex = true) {
        auto choices = latex ? std::vector<std::string>{"text", "json", "latex"}
                             : std::vector<std::string>{"text", "json"};
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };

    auto* cmd_catalog = app.add_subcommand("catalog", "print the 21-module table");
    add_format(cmd_catalog);

    auto* cmd_smatrix = app.add_subcommand("smatrix", "print the partial S-matrix");
    add_format(cmd_smatrix);
    bool normalized = true;
    cmd_smatrix->add_flag("--normalized,!--raw", normalized,
                          "print sqrt18*S (default) or S itself");

    auto* cmd_fuse = app.add_subcommand("fuse", "fusion product of two modules");
    add_format(cmd_fuse);
    std::string left, right;
    cmd_fuse->add_option("left", left, "module name or id")->required();
    cmd_fuse->add_option("right", right, "module name or id")->required();

    auto* cmd_verlinde =
        app.add_subcommand("verlinde", "exact Verlinde coefficients on the computable set");
    add_format(cmd_verlinde, false);
    std::string vi, vj, vk;
    cmd_verlinde->add_option("i", vi, "module")->required();
    cmd_verlinde->add_option("j", vj, "module")->required();
    cmd_verlinde->add_option("k", vk, "target module (omit for the full vector)");

    auto* cmd_lattice = app.add_subcommand("lattice", "rank-one lattice modular data");
    add_format(cmd_lattice, false);
    int half_norm = 9;
    bool check = false;
    cmd_lattice->add_option("--half-norm", half_norm, "k with (γ,γ) = 2k")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_lattice->add_flag("--check", check, "run the S² and Verlinde oracles");

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    add_format(cmd_verify, false);
    std::string suite = "all";
    {
        std::vector<std::string> choices = suite_names();
        choices.insert(choices.begin(), "all");
        cmd_verify->add_option("--suite", suite, "suite to run")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_catalog->parsed()) {
            print_catalog(out, format);
            return 0;
        }
        if (cmd_smatrix->parsed()) {
            print_smatrix(out, format, normalized);
            return 0;
        }
        if (cmd_fuse->parsed()) {
            print_fuse(out, format, parse_module_or_throw(left), parse_module_or_throw(right));
            return 0;
        }
        if (cmd_verlinde->parsed()) {
            const VerifyContext ctx;
            std::optional<int> target;
            if (!vk.empty()) target = parse_module_or_throw(vk);
            print_verlinde(out, format, ctx, parse_module_or_throw(vi), parse_module_or_throw(vj),
                           target);
            return 0;
        }
        if (cmd_lattice->parsed()) return print_lattice(out, format, half_norm, check);
        if (cmd_verify->parsed()) return print_verify(out, format, suite);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotComputable& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotRepresentable& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace fusionkit

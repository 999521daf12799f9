#include "ihrep/cli.hpp"

#include "ihrep/basis_cache.hpp"
#include "ihrep/exterior.hpp"
#include "ihrep/groebner.hpp"
#include "ihrep/ih_assembly.hpp"
#include "ihrep/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace ihrep::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::int64_t genus = 0;
    std::int64_t k = 0;
    std::int64_t order = 0;
    std::int64_t unsafe_cap = 0;
    std::string route = "closed";
    std::string format = "text";
    CLI::Option* genus_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* order_opt = nullptr;
    CLI::Option* cap_opt = nullptr;
};

/// What a command produced, before rendering.
struct Result {
    std::optional<unsigned> genus;
    std::string command;
    Json data = Json::object();
    std::vector<CheckRecord> checks;
    std::string text;
    std::string latex;
};

Result start(std::optional<unsigned> genus, std::string command) {
    Result r;
    r.genus = genus;
    r.command = std::move(command);
    return r;
}

// --- value formatting ----------------------------------------------------------

Json rational_json(const Rational& r) { return Json{{"num", r.numerator_string()}, {"den", r.denominator_string()}}; }

Json polynomial_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients())
        out.push_back(rational_json(c));
    return out;
}

std::string rational_latex(const Rational& r) {
    if (r.is_integer())
        return r.to_string();
    const std::string sign = r.sign() < 0 ? "-" : "";
    return sign + "\\frac{" + r.abs().numerator_string() + "}{" + r.denominator_string() + "}";
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '_':
        case '&':
        case '%':
        case '#':
        case '$':
        case '{':
        case '}':
            out += '\\';
            out += ch;
            break;
        case '^':
            out += "\\^{}";
            break;
        case '~':
            out += "\\~{}";
            break;
        case '\\':
            out += "\\textbackslash{}";
            break;
        default:
            out += ch;
        }
    }
    return out;
}

std::vector<Rational> as_rationals(const std::vector<std::uint64_t>& values) {
    std::vector<Rational> out;
    for (auto v : values)
        out.emplace_back(static_cast<std::int64_t>(v));
    return out;
}

std::string join(const std::vector<std::uint64_t>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i == 0 ? "" : sep) + std::to_string(values[i]);
    return out;
}

std::vector<std::uint64_t> dimensions(const TruncatedSeries& s, const std::string& what) {
    std::vector<std::uint64_t> out;
    for (std::size_t d = 0; d <= s.order(); ++d) {
        if (!s[d].is_integer() || s[d].sign() < 0)
            throw ComputationError(what + ": coefficient of t^" + std::to_string(d) + " is " + s[d].to_string());
        out.push_back(static_cast<std::uint64_t>(s[d].to_int64()));
    }
    return out;
}

std::string series_with_remainder(const TruncatedSeries& s, TextStyle style) {
    const std::string next = std::to_string(s.order() + 1);
    if (style == TextStyle::latex)
        return s.to_string(style) + " + O(t^{" + next + "})";
    return s.to_string(style) + " + O(t^" + next + ")";
}

std::string e_monomial_string(const EMonomial& e, TextStyle style) {
    std::vector<std::string> parts;
    auto factor = [&](unsigned exponent, const char* plain, const char* latex) {
        if (exponent == 0)
            return;
        std::string f = style == TextStyle::latex ? latex : plain;
        if (exponent > 1)
            f += style == TextStyle::latex ? "^{" + std::to_string(exponent) + "}" : "^" + std::to_string(exponent);
        parts.push_back(f);
    };
    factor(e.i, "alpha", "\\alpha");
    factor(e.j, "beta", "\\beta");
    factor(e.k, "xi", "\\xi");
    if (parts.empty())
        return "1";
    std::string out;
    for (std::size_t p = 0; p < parts.size(); ++p)
        out += (p == 0 || style == TextStyle::latex ? "" : "*") + parts[p];
    return out;
}

// --- validation ----------------------------------------------------------------

unsigned require_genus(const Config& c) {
    if (c.genus_opt == nullptr || c.genus_opt->count() == 0)
        throw UsageError("--genus is required");
    if (c.genus < 2)
        throw UsageError("--genus must be at least 2, got " + std::to_string(c.genus));
    if (c.genus > kMaxGenus)
        throw UsageError("--genus is limited to " + std::to_string(kMaxGenus));
    return static_cast<unsigned>(c.genus);
}

unsigned require_k(const Config& c) {
    if (c.k < 0)
        throw UsageError("--k must be nonnegative, got " + std::to_string(c.k));
    if (c.k > kMaxK)
        throw UsageError("--k is limited to " + std::to_string(kMaxK));
    return static_cast<unsigned>(c.k);
}

std::optional<std::size_t> optional_order(const Config& c, std::size_t minimum) {
    if (c.order_opt == nullptr || c.order_opt->count() == 0)
        return std::nullopt;
    if (c.order < 0 || static_cast<std::size_t>(c.order) < minimum)
        throw UsageError("--order must be at least " + std::to_string(minimum) + ", got " + std::to_string(c.order));
    if (static_cast<std::size_t>(c.order) > kMaxOrder)
        throw UsageError("--order is limited to " + std::to_string(kMaxOrder));
    return static_cast<std::size_t>(c.order);
}

unsigned groebner_cap(const Config& c) {
    if (c.cap_opt == nullptr || c.cap_opt->count() == 0)
        return kGroebnerGenusCap;
    if (c.unsafe_cap < 2 || c.unsafe_cap > kMaxK)
        throw UsageError("--unsafe-genus-cap must lie in 2.." + std::to_string(kMaxK));
    return static_cast<unsigned>(c.unsafe_cap);
}

// --- commands ------------------------------------------------------------------

Result cmd_betti(const Config& c) {
    const unsigned g = require_genus(c);
    const auto order = optional_order(c, 6 * std::size_t{g} - 6);
    const bool structural = c.route == "structural";
    const BettiTable table = structural ? ih_series_structural(g) : ip_series_closed(g, order.value_or(default_order(g)));

    Result r = start(g, "betti");
    r.data["route"] = to_string(table.route);
    r.data["top_degree"] = table.top_degree();
    r.data["betti"] = table.coefficients;
    r.data["total_dimension"] = table.total_dimension();
    r.data["palindromic"] = table.is_palindromic();

    CheckRecord palindrome{"palindrome", g, table.is_palindromic() ? CheckStatus::pass : CheckStatus::fail,
                           table.is_palindromic() ? "table is symmetric about degree " +
                                                        std::to_string(table.top_degree() / 2)
                                                  : "table is not symmetric",
                           std::nullopt};
    r.checks.push_back(palindrome);

    const auto coeffs = as_rationals(table.coefficients);
    std::ostringstream text;
    text << "genus: " << g << "\n"
         << "route: " << to_string(table.route) << "\n"
         << "betti: " << join(table.coefficients, ",") << "\n"
         << "series: " << format_univariate(coeffs) << "\n"
         << "total dimension: " << table.total_dimension() << "\n"
         << "palindromic: " << (table.is_palindromic() ? "yes" : "no") << "\n";
    r.text = text.str();

    std::ostringstream latex;
    latex << "% genus " << g << ", " << to_string(table.route) << " route\n"
          << "\\[ IP_t = " << format_univariate(coeffs, TextStyle::latex) << " \\]\n"
          << "\\begin{tabular}{r" << std::string(table.coefficients.size(), 'r') << "}\n"
          << "degree";
    for (std::size_t d = 0; d < table.coefficients.size(); ++d)
        latex << " & " << d;
    latex << " \\\\\n\\hline\n$b_d$";
    for (auto b : table.coefficients)
        latex << " & " << b;
    latex << " \\\\\n\\end{tabular}\n";
    r.latex = latex.str();
    return r;
}

Result cmd_ring(const Config& c) {
    const unsigned k = require_k(c);
    const std::size_t order = optional_order(c, 0).value_or(24);
    const auto cache = BasisCache::from_environment();
    const auto basis = cache->get(k);
    const RationalFunctionT hilbert = hilbert_series_quotient(leading_term_ideal(*basis)).reduced();
    const TruncatedSeries expansion = series_expand(hilbert, order);

    Result r = start(std::nullopt, "ring");
    r.data["k"] = k;
    r.data["monomial_order"] = std::string(GroebnerBasis::order_name());
    Json gens = Json::array();
    for (const auto& g : basis->generators())
        gens.push_back(g.to_string());
    r.data["generators"] = gens;
    r.data["canonical_text"] = basis->to_canonical_text();
    r.data["hilbert_series"] = {{"rational_function", hilbert.to_string()},
                                {"numerator", polynomial_json(hilbert.numerator())},
                                {"denominator", polynomial_json(hilbert.denominator())}};
    r.data["order"] = order;
    r.data["expansion"] = dimensions(expansion, "Hilbert series");

    std::ostringstream text;
    text << basis->to_canonical_text() << "hilbert series: " << hilbert.to_string() << "\n"
         << "expansion: " << series_with_remainder(expansion, TextStyle::plain) << "\n";
    r.text = text.str();

    std::ostringstream latex;
    latex << "% reduced Groebner basis of I_" << k << ", " << GroebnerBasis::order_name() << "\n"
          << "\\begin{align*}\n";
    for (std::size_t i = 0; i < basis->size(); ++i)
        latex << "g_{" << i + 1 << "} &= " << basis->generators()[i].to_string(TextStyle::latex)
              << (i + 1 < basis->size() ? " \\\\\n" : "\n");
    latex << "\\end{align*}\n"
          << "\\[ H(t) = " << hilbert.to_string(TextStyle::latex) << " = "
          << series_with_remainder(expansion, TextStyle::latex) << " \\]\n";
    r.latex = latex.str();
    return r;
}

Result cmd_pairing(const Config& c) {
    const unsigned g = require_genus(c);
    const auto entries = pairing_matrix(g);

    Result r = start(g, "pairing");
    Json rows = Json::array();
    std::ostringstream text;
    std::ostringstream latex;
    text << "genus: " << g << "\n"
         << "pairing <alpha^i beta^j, alpha^k beta^l> with m = i+k, n = j+l\n"
         << "i j k l m n value\n";
    latex << "% pairing at genus " << g << "\n"
          << "\\begin{tabular}{rrrrrrr}\n"
          << "$i$ & $j$ & $k$ & $l$ & $m$ & $n$ & $\\langle \\alpha^i\\beta^j, \\alpha^k\\beta^l \\rangle$ \\\\\n"
          << "\\hline\n";
    for (const auto& e : entries) {
        rows.push_back({{"left", {{"alpha", e.left.first}, {"beta", e.left.second}}},
                        {"right", {{"alpha", e.right.first}, {"beta", e.right.second}}},
                        {"m", e.m},
                        {"n", e.n},
                        {"value", rational_json(e.value)}});
        text << e.left.first << ' ' << e.left.second << ' ' << e.right.first << ' ' << e.right.second << ' ' << e.m
             << ' ' << e.n << ' ' << e.value.to_string() << "\n";
        latex << e.left.first << " & " << e.left.second << " & " << e.right.first << " & " << e.right.second
              << " & " << e.m << " & " << e.n << " & $" << rational_latex(e.value) << "$ \\\\\n";
    }
    latex << "\\end{tabular}\n";
    r.data["entries"] = rows;
    r.text = text.str();
    r.latex = latex.str();
    return r;
}

Result cmd_eq_series(const Config& c) {
    const unsigned g = require_genus(c);
    const std::size_t order = optional_order(c, 6 * std::size_t{g} - 6).value_or(default_order(g));
    const bool structural = c.route == "structural";
    const unsigned cap = groebner_cap(c);
    if (structural && g > cap)
        throw UsageError("the structural route needs Groebner bases up to I_" + std::to_string(g) +
                         "; genus exceeds the cap " + std::to_string(cap) + " (see --unsafe-genus-cap)");

    TruncatedSeries series(order);
    if (structural) {
        const auto cache = BasisCache::from_environment();
        series = equivariant_series_structural(g, order, *cache);
    } else {
        series = equivariant_series_closed(g, order);
    }
    const auto coeffs = dimensions(series, "equivariant series");

    Result r = start(g, "eq-series");
    r.data["route"] = to_string(structural ? Route::structural : Route::closed_form);
    r.data["order"] = order;
    r.data["rational_function"] = equivariant_rational_function(g).reduced().to_string();
    r.data["coefficients"] = coeffs;

    std::ostringstream text;
    text << "genus: " << g << "\n"
         << "route: " << to_string(structural ? Route::structural : Route::closed_form) << "\n"
         << "rational function: " << equivariant_rational_function(g).reduced().to_string() << "\n"
         << "coefficients: " << join(coeffs, ",") << "\n"
         << "series: " << series_with_remainder(series, TextStyle::plain) << "\n";
    r.text = text.str();
    r.latex = "% equivariant Poincare series, genus " + std::to_string(g) + "\n\\[ P^{G}_t = " +
              series_with_remainder(series, TextStyle::latex) + " \\]\n";
    return r;
}

Result e_basis_single(const Config& c) {
    const unsigned m = require_k(c);
    const unsigned cap = groebner_cap(c);
    const auto monomials = e_basis(m);
    const auto hilbert = e_hilbert(m);

    Result r = start(std::nullopt, "e-basis");
    r.data["m"] = m;
    r.data["size"] = monomials.size();
    Json list = Json::array();
    for (const auto& e : monomials)
        list.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"degree", e.degree()}});
    r.data["monomials"] = list;
    r.data["hilbert"] = dimensions(hilbert, "E_m generating polynomial");

    CheckRecord check{"e-independence", m, CheckStatus::skipped, "", std::nullopt};
    if (m > cap) {
        check.details = "m " + std::to_string(m) + " exceeds the Groebner cap " + std::to_string(cap);
    } else {
        const auto cache = BasisCache::from_environment();
        const auto v = e_basis_independence(m, *cache, cap);
        check.status = v.passed() ? CheckStatus::pass : CheckStatus::fail;
        check.first_mismatch_degree = v.failing_degree;
        check.details = v.passed() ? "normal forms modulo I_" + std::to_string(m) + " have rank " +
                                         std::to_string(v.rank)
                                   : "dependent in degree " + std::to_string(v.failing_degree.value_or(0)) +
                                         " (rank " + std::to_string(v.rank) + " of " + std::to_string(v.size) + ")";
    }
    r.checks.push_back(check);

    std::ostringstream text;
    std::ostringstream latex;
    text << "m: " << m << "\n"
         << "size: " << monomials.size() << "\n";
    latex << "% E_" << m << " = {alpha^i beta^j xi^k}\n\\[ E_{" << m << "} = \\{";
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        text << "degree " << monomials[i].degree() << ": " << e_monomial_string(monomials[i], TextStyle::plain)
             << "\n";
        latex << (i == 0 ? " " : ", ") << e_monomial_string(monomials[i], TextStyle::latex);
    }
    text << "generating polynomial: " << hilbert.to_string() << "\n";
    latex << " \\} \\]\n\\[ \\sum_{e \\in E_{" << m << "}} t^{\\deg e} = " << hilbert.to_string(TextStyle::latex)
          << " \\]\n";
    r.text = text.str();
    r.latex = latex.str();
    return r;
}

Result e_basis_decomposition(const Config& c) {
    const unsigned g = require_genus(c);
    const BettiTable table = ih_series_structural(g);

    Result r = start(g, "e-basis");
    Json blocks = Json::array();
    std::ostringstream text;
    std::ostringstream latex;
    text << "genus: " << g << "\n"
         << "l prim_l |E_{g-l}| shift\n";
    latex << "% IH decomposition into Prim_l (x) E_{g-l}, genus " << g << "\n"
          << "\\begin{tabular}{rrrr}\n$l$ & $\\dim \\mathrm{Prim}_l$ & $|E_{g-l}|$ & shift \\\\\n\\hline\n";
    for (unsigned l = 0; l <= g; ++l) {
        const auto prim = prim_dimension_formula(g, l);
        const auto size = e_basis(g - l).size();
        blocks.push_back({{"l", l}, {"prim_dimension", prim}, {"e_size", size}, {"shift", 3 * l}});
        text << l << ' ' << prim << ' ' << size << ' ' << 3 * l << "\n";
        latex << l << " & " << prim << " & " << size << " & " << 3 * l << " \\\\\n";
    }
    latex << "\\end{tabular}\n\\[ IP_t = " << format_univariate(as_rationals(table.coefficients), TextStyle::latex)
          << " \\]\n";
    text << "betti: " << join(table.coefficients, ",") << "\n";
    r.data["blocks"] = blocks;
    r.data["betti"] = table.coefficients;
    r.text = text.str();
    r.latex = latex.str();
    return r;
}

Result cmd_e_basis(const Config& c) {
    const bool by_genus = c.genus_opt != nullptr && c.genus_opt->count() > 0;
    const bool by_k = c.k_opt != nullptr && c.k_opt->count() > 0;
    if (by_genus == by_k)
        throw UsageError("e-basis takes exactly one of --genus or --k");
    return by_genus ? e_basis_decomposition(c) : e_basis_single(c);
}

Result cmd_verify(const Config& c) {
    const unsigned g = require_genus(c);
    VerificationOptions options;
    options.order = optional_order(c, 6 * std::size_t{g} - 6);
    options.groebner_cap = groebner_cap(c);
    const auto cache = BasisCache::from_environment();
    const auto report = run_verification(g, options, *cache);

    Result r = start(g, "verify");
    r.data["overall"] = report.passed() ? "pass" : "fail";
    r.data["order"] = options.order.value_or(default_order(g));
    r.data["groebner_cap"] = options.groebner_cap;
    r.checks = report.checks;
    r.text = "genus: " + std::to_string(g) + "\n";
    r.latex = "% verification report, genus " + std::to_string(g) + "\n";
    return r;
}

// --- rendering -----------------------------------------------------------------

bool any_failed(const Result& r) {
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

std::string render_json(const Result& r) {
    Json doc;
    doc["genus"] = r.genus ? Json(*r.genus) : Json(nullptr);
    doc["command"] = r.command;
    doc["data"] = r.data;
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"genus", c.genus},
                          {"status", to_string(c.status)},
                          {"details", c.details},
                          {"first_mismatch_degree",
                           c.first_mismatch_degree ? Json(*c.first_mismatch_degree) : Json(nullptr)}});
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

std::string render_text(const Result& r) {
    std::string out = r.text;
    if (!r.checks.empty()) {
        out += "checks:\n";
        for (const auto& c : r.checks)
            out += "  [" + to_string(c.status) + "] " + c.name + ": " + c.details + "\n";
    }
    if (r.command == "verify")
        out += std::string("overall: ") + (any_failed(r) ? "fail" : "pass") + "\n";
    return out;
}

std::string render_latex(const Result& r) {
    std::string out = r.latex;
    if (!r.checks.empty()) {
        out += "\\begin{tabular}{lll}\ncheck & status & details \\\\\n\\hline\n";
        for (const auto& c : r.checks)
            out += "\\texttt{" + latex_escape(c.name) + "} & " + to_string(c.status) + " & " +
                   latex_escape(c.details) + " \\\\\n";
        out += "\\end{tabular}\n";
    }
    return out;
}

void add_format(CLI::App* sub, Config& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
}

void add_genus(CLI::App* sub, Config& c, bool required) {
    auto* opt = sub->add_option("--genus", c.genus, "Genus g >= 2");
    if (required)
        opt->required();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection cohomology of the SU(2) character variety: Betti numbers, relation ideals, "
                 "pairings and cross-checks.",
                 "ihrep"};
    app.require_subcommand(1);
    Config c;

    struct Command {
        CLI::App* app;
        Result (*run)(const Config&);
    };
    std::vector<Command> commands;
    auto route_option = [&](CLI::App* sub) {
        sub->add_option("--route", c.route, "closed or structural")->check(CLI::IsMember({"closed", "structural"}));
    };
    auto order_option = [&](CLI::App* sub) {
        sub->add_option("--order", c.order, "Truncation order (at least 6g-6)");
    };
    auto cap_option = [&](CLI::App* sub) {
        sub->add_option("--unsafe-genus-cap", c.unsafe_cap, "Raise the genus cap on Groebner checks");
    };

    // Options are bound per subcommand; only the selected one is parsed, so they
    // can share storage.
    {
        auto* sub = app.add_subcommand("betti", "Intersection Betti numbers");
        add_genus(sub, c, true);
        route_option(sub);
        order_option(sub);
        add_format(sub, c);
        commands.push_back({sub, cmd_betti});
    }
    {
        auto* sub = app.add_subcommand("ring", "Groebner basis and Hilbert series of the relation ideal I_k");
        sub->add_option("--k", c.k, "Ideal index k >= 0")->required();
        order_option(sub);
        add_format(sub, c);
        commands.push_back({sub, cmd_ring});
    }
    {
        auto* sub = app.add_subcommand("pairing", "Intersection pairing on alpha^i beta^j");
        add_genus(sub, c, true);
        add_format(sub, c);
        commands.push_back({sub, cmd_pairing});
    }
    {
        auto* sub = app.add_subcommand("eq-series", "Equivariant Poincare series");
        add_genus(sub, c, true);
        route_option(sub);
        order_option(sub);
        cap_option(sub);
        add_format(sub, c);
        commands.push_back({sub, cmd_eq_series});
    }
    {
        auto* sub = app.add_subcommand("e-basis", "The spanning sets E_m");
        add_genus(sub, c, false);
        sub->add_option("--k", c.k, "Print E_m for m = k");
        cap_option(sub);
        add_format(sub, c);
        commands.push_back({sub, cmd_e_basis});
    }
    {
        auto* sub = app.add_subcommand("verify", "Run every cross-check at one genus");
        add_genus(sub, c, true);
        order_option(sub);
        cap_option(sub);
        add_format(sub, c);
        commands.push_back({sub, cmd_verify});
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ihrep: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        for (const auto& cmd : commands) {
            if (!cmd.app->parsed())
                continue;
            c.genus_opt = cmd.app->get_option_no_throw("--genus");
            c.k_opt = cmd.app->get_option_no_throw("--k");
            c.order_opt = cmd.app->get_option_no_throw("--order");
            c.cap_opt = cmd.app->get_option_no_throw("--unsafe-genus-cap");
            const Result r = cmd.run(c);
            if (c.format == "json")
                out << render_json(r);
            else if (c.format == "latex")
                out << render_latex(r);
            else
                out << render_text(r);
            return any_failed(r) ? kExitCheckFailed : kExitOk;
        }
    } catch (const UsageError& e) {
        err << "ihrep: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ComputationError& e) {
        err << "ihrep: computation failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "ihrep: error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    err << "ihrep: no command selected\n";
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace ihrep::cli

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weylcheb/genfunc.hpp"
#include "weylcheb/numeric.hpp"
#include "weylcheb/recurrence.hpp"

namespace weylcheb::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void validate(const CliConfig& c) {
    if (c.max_m < 0 || c.max_n < 0) throw UsageError("--max-m and --max-n must be nonnegative");
    if (c.max_m > kMaxIndex || c.max_n > kMaxIndex)
        throw UsageError("--max-m and --max-n are limited to " + std::to_string(kMaxIndex));
    if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
    if (c.samples == 0) throw UsageError("--samples must be positive");
}

PolynomialTable make_table(const CliConfig& c, bool via_recurrence) {
    VariableBasis basis(build_root_system(c.algebra), c.kind);
    PolynomialTable t{c.algebra, c.kind, c.max_m, rank_of(c.algebra) == 1 ? 0 : c.max_n, {}};
    t.polys = via_recurrence ? recurrence_table(basis, t.max_m, t.max_n) : polynomial_table(basis, t.max_m, t.max_n);
    return t;
}

std::string render_genfunc(const RationalGF& gf, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::Json) {
        os << to_json(gf).dump(2) << '\n';
        return os.str();
    }
    const bool latex = fmt == OutputFormat::Latex;
    const PolyFormat pf = latex ? PolyFormat::Latex : PolyFormat::Plain;
    const char* params = "pq";
    if (latex) os << "\\begin{align*}\n";
    for (std::size_t k = 0; k < gf.denominators.size(); ++k) {
        os << 'P' << (k + 1) << (latex ? " &= " : " = ");
        bool first = true;
        for (std::size_t i = 0; i < gf.denominators[k].size(); ++i) {
            if (gf.denominators[k][i].is_zero()) continue;
            os << (first ? "" : " + ") << '(' << format_poly(gf.denominators[k][i], pf) << ')';
            if (i > 0) os << (latex ? "" : "*") << params[k] << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        os << (latex ? "\\\\\n" : "\n");
    }
    for (const auto& [ij, poly] : gf.numerator) {
        os << "K_{";
        for (std::size_t t = 0; t < ij.size(); ++t) os << ij[t];
        os << '}' << (latex ? " &= " : " = ") << format_poly(poly, pf) << (latex ? "\\\\\n" : "\n");
    }
    if (latex) os << "\\end{align*}\n";
    return os.str();
}

std::string run_verify(const CliConfig& c, bool& all_passed) {
    VariableBasis basis(build_root_system(c.algebra), c.kind);
    const std::int64_t max_n = basis.rank() == 1 ? 0 : c.max_n;
    const auto table = polynomial_table(basis, c.max_m, max_n);
    all_passed = true;
    auto reports = nlohmann::json::array();
    std::ostringstream plain;
    for (const auto& [idx, poly] : table) {
        const VerificationReport r = c.kind == Kind::Second
                                         ? verify_ratio(basis, idx, poly, c.samples, c.tol, c.seed)
                                         : verify_orbit_sum(basis, idx, poly, c.samples, c.tol, c.seed);
        nlohmann::json rec = to_json(r);
        bool ok = r.passed();
        plain << "index " << idx << ": max_abs_error=" << r.max_abs_error << " skipped=" << r.skipped;
        if (c.kind == Kind::Second) {
            const auto [left, right] = dimension_check(basis, idx, poly);
            rec["dimension"] = {left.get_str(), right.get_str()};
            ok = ok && left == right;
            plain << " dimension=" << left << "/" << right;
        }
        rec["ok"] = ok;
        plain << (ok ? " ok" : " FAIL") << '\n';
        all_passed = all_passed && ok;
        reports.push_back(std::move(rec));
    }
    if (c.format == OutputFormat::Json) {
        nlohmann::json j{{"schema", 1},
                         {"algebra", std::string(to_string(c.algebra))},
                         {"kind", std::string(to_string(c.kind))},
                         {"seed", c.seed},
                         {"samples", c.samples},
                         {"tol", c.tol},
                         {"passed", all_passed},
                         {"reports", std::move(reports)}};
        return j.dump(2) + "\n";
    }
    plain << (all_passed ? "all checks passed" : "verification FAILED") << '\n';
    return plain.str();
}

void emit(const CliConfig& c, const std::string& text, std::ostream& out) {
    if (!c.output_path) {
        out << text;
        return;
    }
    std::ofstream f(*c.output_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + *c.output_path);
    f << text;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::Table:
                emit(config, render_table(make_table(config, false), config.format), out);
                return kOk;
            case Command::RecurrenceTable:
                if (config.kind != Kind::Second) throw UsageError("recurrence-table supports --kind second only");
                emit(config, render_table(make_table(config, true), config.format), out);
                return kOk;
            case Command::GenFunc: {
                VariableBasis basis(build_root_system(config.algebra), config.kind);
                emit(config, render_genfunc(closed_form_gf(basis), config.format), out);
                return kOk;
            }
            case Command::Verify: {
                bool passed = false;
                emit(config, run_verify(config, passed), out);
                return passed ? kOk : kCheckFailed;
            }
            case Command::CrossCheck: {
                if (config.kind != Kind::Second) throw UsageError("crosscheck supports --kind second only");
                const std::string direct = render_table(make_table(config, false), config.format);
                const std::string recurrent = render_table(make_table(config, true), config.format);
                const bool same = direct == recurrent;
                std::ostringstream os;
                os << "crosscheck " << to_string(config.algebra) << " " << config.max_m << "x" << config.max_n << ": "
                   << (same ? "identical" : "MISMATCH") << " (" << direct.size() << " bytes)\n";
                emit(config, os.str(), out);
                return same ? kOk : kCheckFailed;
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig config;
    if (const char* env = std::getenv("WEYLCHEB_SEED")) {
        try {
            config.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: WEYLCHEB_SEED is not an unsigned integer\n";
            return kUsage;
        }
    } else {
        config.seed = kDefaultSeed;
    }

    CLI::App app{"Multivariate Chebyshev polynomials of rank-2 Lie algebras", "weylcheb"};
    app.require_subcommand(1);

    std::string algebra = "g2", kind = "second", format = "json", output;
    const std::map<std::string, Command> commands{{"table", Command::Table},
                                                  {"genfunc", Command::GenFunc},
                                                  {"verify", Command::Verify},
                                                  {"recurrence-table", Command::RecurrenceTable},
                                                  {"crosscheck", Command::CrossCheck}};
    const std::map<std::string, std::string> help{
        {"table", "polynomial table from the generating-function route"},
        {"genfunc", "closed-form generating function P1, P2 and numerator K"},
        {"verify", "numerical ratio and dimension checks"},
        {"recurrence-table", "polynomial table from the multiplication-rule recurrence"},
        {"crosscheck", "compare table and recurrence-table byte for byte"}};
    for (const auto& [name, cmd] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--algebra", algebra, "a1, a2, c2 or g2")->check(CLI::IsMember({"a1", "a2", "c2", "g2"}));
        sub->add_option("--kind", kind, "first or second")->check(CLI::IsMember({"first", "second"}));
        sub->add_option("--max-m", config.max_m, "largest first index");
        sub->add_option("--max-n", config.max_n, "largest second index");
        sub->add_option("--format", format, "json, latex or plain")->check(CLI::IsMember({"json", "latex", "plain"}));
        sub->add_option("--seed", config.seed, "random seed (default from WEYLCHEB_SEED)");
        sub->add_option("--samples", config.samples, "random angle samples per index");
        sub->add_option("--tol", config.tol, "absolute error tolerance");
        sub->add_option("--output,-o", output, "write to a file instead of stdout");
        sub->callback([&config, cmd = cmd] { config.command = cmd; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    config.algebra = *parse_algebra(algebra);
    config.kind = *parse_kind(kind);
    config.format = *parse_format(format);
    if (!output.empty()) config.output_path = output;
    return run(config, out, err);
}

}  // namespace weylcheb::cli

#include "p3fox/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "p3fox/asymptotics.hpp"
#include "p3fox/errors.hpp"
#include "p3fox/expansion.hpp"
#include "p3fox/verify.hpp"

namespace p3fox::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double parse_decimal(const std::string& text, const std::string& whole) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + whole + "'");
    }
    if (pos != text.size()) throw UsageError("not a number: '" + whole + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

json to_json(cplx z) {
    if (z.imag() == 0.0) return z.real();
    return json::array({z.real(), z.imag()});
}

json to_json(const Rational& r) { return r.to_double(); }

std::string rational_text(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

double relative_diff(cplx a, cplx b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

const char* chart_name(Chart c) { return c == Chart::U ? "U" : "V"; }

const char* status_name(PointStatus s) {
    switch (s) {
        case PointStatus::ok: return "ok";
        case PointStatus::pole: return "pole";
        case PointStatus::failed: return "failed";
    }
    return "failed";
}

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

json regime_json(const Regime& r) {
    json j;
    j["case"] = r.case_label;
    j["j"] = r.j;
    j["r_c"] = r.r_c;
    j["exponent"] = to_json(r.exponent);
    j["coefficient"] = to_json(r.coefficient);
    return j;
}

void csv_regime(std::ostream& out, const char* subject, const Regime& r) {
    out << subject << ',' << r.case_label << ',' << r.j << ',' << r.r_c << ',' << number(r.exponent.real()) << ','
        << number(r.exponent.imag()) << ',' << number(r.coefficient.real()) << ','
        << number(r.coefficient.imag()) << '\n';
}

int run_eval(const RunConfig& c, std::ostream& out) {
    const SolutionParams& p = c.params;
    const cplx x = *c.x;
    const JetPoint det = u_n_determinant(p, x);
    const JetPoint bac = u_n_backlund(p, x);
    const JetPoint rec = u_n_recurrence(p, x);
    const double d_db = relative_diff(det.u, bac.u);
    const double d_dr = relative_diff(det.u, rec.u);
    const double d_br = relative_diff(bac.u, rec.u);
    std::optional<cplx> ratio;
    if (c.compare_asym) ratio = det.u / u_leading(p, x);

    if (format_or(c, Format::json) == Format::json) {
        json j;
        j["n"] = p.n;
        j["alpha"] = to_json(p.alpha);
        j["d1"] = to_json(p.d.d1);
        j["d2"] = to_json(p.d.d2);
        j["x"] = to_json(x);
        j["u"] = {{"determinant", to_json(det.u)}, {"backlund", to_json(bac.u)}, {"recurrence", to_json(rec.u)}};
        j["du"] = {{"determinant", to_json(det.du)}, {"backlund", to_json(bac.du)}, {"recurrence", to_json(rec.du)}};
        j["diff"] = {{"determinant_backlund", d_db}, {"determinant_recurrence", d_dr}, {"backlund_recurrence", d_br}};
        if (ratio) j["asym_ratio"] = to_json(*ratio);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "quantity,re,im\n";
    auto row = [&](const char* name, cplx v) { out << name << ',' << number(v.real()) << ',' << number(v.imag()) << '\n'; };
    row("u_determinant", det.u);
    row("u_backlund", bac.u);
    row("u_recurrence", rec.u);
    row("du_determinant", det.du);
    row("du_backlund", bac.du);
    row("du_recurrence", rec.du);
    row("diff_determinant_backlund", d_db);
    row("diff_determinant_recurrence", d_dr);
    row("diff_backlund_recurrence", d_br);
    if (ratio) row("asym_ratio", *ratio);
    return 0;
}

int run_asym_scan(const RunConfig& c, std::ostream& out) {
    const auto samples = exponent_scan(c.params.n, c.scan->lo, c.scan->hi, c.scan->step);
    if (format_or(c, Format::csv) == Format::json) {
        json arr = json::array();
        for (const auto& s : samples) {
            json j;
            j["alpha"] = to_json(s.alpha);
            j["alpha_exact"] = rational_text(s.alpha);
            j["boundary"] = s.boundary;
            if (!s.boundary) {
                j["r_c"] = s.r_c;
                j["delta_exponent"] = to_json(s.delta_exponent);
                j["u_exponent"] = to_json(s.u_exponent);
            }
            arr.push_back(j);
        }
        out << arr.dump(2) << '\n';
        return 0;
    }
    out << "alpha,boundary,r_c,delta_exponent,u_exponent\n";
    for (const auto& s : samples) {
        out << number(s.alpha.to_double()) << ',' << (s.boundary ? 1 : 0) << ',';
        if (s.boundary)
            out << ",,\n";
        else
            out << s.r_c << ',' << number(s.delta_exponent.to_double()) << ','
                << number(s.u_exponent.to_double()) << '\n';
    }
    return 0;
}

int run_asym(const RunConfig& c, std::ostream& out) {
    if (c.scan) return run_asym_scan(c, out);
    const Regime u = u_regime(c.params);
    const Regime delta = delta_leading(c.params);
    if (format_or(c, Format::json) == Format::json) {
        json j;
        j["n"] = c.params.n;
        j["alpha"] = to_json(c.params.alpha);
        j["subject"] = "u";
        j.update(regime_json(u));
        if (c.alpha_exact) {
            // The exact form applies only when the generic piecewise exponent is in force.
            const Rational e = exponent_e(*c.alpha_exact, c.params.n);
            if (std::abs(e.to_double() - u.exponent) < 1e-12) j["exponent_exact"] = rational_text(e);
        }
        j["delta"] = regime_json(delta);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "subject,case,j,r_c,exp_re,exp_im,coef_re,coef_im\n";
    csv_regime(out, "u", u);
    csv_regime(out, "delta", delta);
    return 0;
}

int run_expand(const RunConfig& c, std::ostream& out) {
    const ExpansionResult r = expand_u_detailed(c.params, c.budget);
    const auto terms = r.series.ordered();
    if (format_or(c, Format::csv) == Format::json) {
        json j;
        j["n"] = c.params.n;
        j["alpha"] = to_json(c.params.alpha);
        j["budget"] = c.budget;
        j["p"] = to_json(r.series.p());
        j["g_limit"] = r.g_limit;
        j["max_residual"] = r.max_residual;
        json arr = json::array();
        for (const auto& [k, coef] : terms)
            arr.push_back({{"m", k.m}, {"l", k.l}, {"exponent", to_json(r.series.exponent(k))},
                           {"coefficient", to_json(coef)}});
        j["terms"] = arr;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "m,l,exp_re,exp_im,coef_re,coef_im\n";
    for (const auto& [k, coef] : terms) {
        const cplx e = r.series.exponent(k);
        out << k.m << ',' << k.l << ',' << number(e.real()) << ',' << number(e.imag()) << ','
            << number(coef.real()) << ',' << number(coef.imag()) << '\n';
    }
    return 0;
}

int run_trace(const RunConfig& c, std::ostream& out) {
    const Seed seed = seed_state(c.params, c.x0, c.budget);
    TraceOptions opts;
    opts.tol = c.tol;
    const Trajectory t = trace(seed.state, c.path, opts);
    if (format_or(c, Format::csv) == Format::json) {
        json j;
        j["seed_error"] = seed.error_estimate;
        j["seed_from_expansion"] = seed.from_expansion;
        j["accepted"] = t.accepted;
        j["rejected"] = t.rejected;
        j["switches"] = t.switches;
        json arr = json::array();
        for (const auto& s : t.samples) {
            const JetPoint jet = to_u_jet(s);
            arr.push_back({{"x", to_json(jet.x)}, {"u", to_json(jet.u)}, {"chart", chart_name(s.chart)}});
        }
        j["samples"] = arr;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "x_re,x_im,u_re,u_im,chart\n";
    for (const auto& s : t.samples) {
        const JetPoint jet = to_u_jet(s);
        out << number(jet.x.real()) << ',' << number(jet.x.imag()) << ',' << number(jet.u.real()) << ','
            << number(jet.u.imag()) << ',' << chart_name(s.chart) << '\n';
    }
    return 0;
}

int run_grid(const RunConfig& c, std::ostream& out) {
    const GridResult g = grid(c.params, *c.rect, c.tol);
    const bool as_json = format_or(c, Format::csv) == Format::json;
    json arr = json::array();
    if (!as_json) out << "x_re,x_im,u_re,u_im,status\n";
    for (int iy = 0; iy < g.spec.ny; ++iy)
        for (int ix = 0; ix < g.spec.nx; ++ix) {
            const cplx x = g.point(ix, iy);
            const std::size_t i = g.index(ix, iy);
            const cplx u = g.values[i];
            if (as_json)
                arr.push_back({{"x", to_json(x)}, {"u", to_json(u)}, {"status", status_name(g.status[i])}});
            else
                out << number(x.real()) << ',' << number(x.imag()) << ',' << number(u.real()) << ','
                    << number(u.imag()) << ',' << status_name(g.status[i]) << '\n';
        }
    if (as_json) out << arr.dump(2) << '\n';
    return 0;
}

int run_verify_command(const RunConfig& c, std::ostream& out) {
    VerifyOptions opts = verify_options_from_env();
    opts.seed = c.seed;
    const VerifyReport report = run_verify(opts);
    const int failed = report.failures();
    const int passed = static_cast<int>(report.checks.size()) - failed;
    if (format_or(c, Format::csv) == Format::json) {
        json j;
        j["seed"] = report.seed;
        j["fast"] = opts.fast;
        j["passed"] = passed;
        j["failed"] = failed;
        json arr = json::array();
        for (const auto& r : report.checks)
            arr.push_back({{"module", r.module}, {"check", r.name}, {"value", r.value}, {"tolerance", r.tolerance},
                           {"passed", r.passed}});
        j["checks"] = arr;
        out << j.dump(2) << '\n';
    } else {
        out << "# seed=" << report.seed << (opts.fast ? " fast" : "") << '\n';
        out << "module,check,value,tolerance,status\n";
        for (const auto& r : report.checks)
            out << r.module << ',' << r.name << ',' << number(r.value) << ',' << number(r.tolerance) << ','
                << (r.passed ? "pass" : "FAIL") << '\n';
        out << "# passed=" << passed << " failed=" << failed << '\n';
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

double parse_real(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw UsageError("empty number");
    double v;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const double num = parse_decimal(trim(text.substr(0, slash)), text);
        const double den = parse_decimal(trim(text.substr(slash + 1)), text);
        if (den == 0.0) throw UsageError("zero denominator in '" + text + "'");
        v = num / den;
    } else {
        v = parse_decimal(text, text);
    }
    if (!std::isfinite(v)) throw UsageError("number is not finite: '" + text + "'");
    return v;
}

cplx parse_complex(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw UsageError("empty complex literal");
    if (text.back() != 'i' && text.back() != 'j') return parse_real(text);
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    const std::string re = split_at == std::string::npos ? "" : body.substr(0, split_at);
    const std::string im = split_at == std::string::npos ? body : body.substr(split_at);
    double imag;
    if (im.empty() || im == "+")
        imag = 1.0;
    else if (im == "-")
        imag = -1.0;
    else
        imag = parse_real(im);
    return {re.empty() ? 0.0 : parse_real(re), imag};
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Special-function solutions of Painleve III: evaluation, asymptotics, expansion, continuation"};
    app.name("p3fox");
    app.require_subcommand(1, 1);
    const std::pair<const char*, const char*> commands[] = {
        {"eval", "u_n at --x by the determinant, Backlund and recurrence paths"},
        {"asym", "small-x regime of Delta_n and u_n, or an exponent scan"},
        {"expand", "coefficients of the small-x series of u_n"},
        {"trace", "continue u_n from --x0 along --x1 or --path"},
        {"grid", "u_n on a rectangle of the complex plane"},
        {"verify", "run the property suites; exit 0 iff all pass"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    RunConfig c;
    int n = 0;
    std::string alpha = "0", d1 = "1", d2 = "0", x, x0, x1, path, rect, tol, budget, scan, format;
    int nx = 41, ny = 41;
    app.add_option("--n", n, "solution index n >= 0");
    app.add_option("--alpha", alpha, "alpha, complex 'a+bi' or rational 'p/q'");
    app.add_option("--d1", d1, "coefficient of J in C = d1 J + d2 Y");
    app.add_option("--d2", d2, "coefficient of Y");
    app.add_option("--x", x, "evaluation point (eval)");
    app.add_option("--x0", x0, "seed point (trace), default 0.05");
    app.add_option("--x1", x1, "trace end point");
    app.add_option("--path", path, "trace waypoints 'x1,x2,...'");
    app.add_option("--rect", rect, "grid rectangle 'xmin,xmax,ymin,ymax'");
    app.add_option("--nx", nx, "grid columns");
    app.add_option("--ny", ny, "grid rows");
    app.add_option("--tol", tol, "integration tolerance, default 1e-9");
    app.add_option("--budget", budget, "series budget, default 12");
    app.add_option("--alpha-scan", scan, "exponent scan 'a:b:step' (asym)");
    app.add_flag("--compare-asym", c.compare_asym, "also print u_n / leading term (eval)");
    app.add_option("--format", format, "csv or json");
    app.add_option("--output", c.output, "output file, default stdout");
    app.add_option("--seed", c.seed, "seed for the randomized verify checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "eval") c.command = Command::eval;
    else if (command == "asym") c.command = Command::asym;
    else if (command == "expand") c.command = Command::expand;
    else if (command == "trace") c.command = Command::trace;
    else if (command == "grid") c.command = Command::grid;
    else c.command = Command::verify;
    auto given = [&](const char* flag) { return app.count(flag) > 0; };

    if (n < 0) throw UsageError("--n must be non-negative");
    c.params = {n, parse_complex(alpha), Cylinder{parse_complex(d1), parse_complex(d2)}};
    if (c.params.alpha.imag() == 0.0) {
        try {
            c.alpha_exact = Rational::parse(trim(alpha));
        } catch (const std::exception&) {
            // decimal or exponent forms beyond the exact parser
        }
    }
    if (given("--x")) c.x = parse_complex(x);
    if (given("--x0")) c.x0 = parse_complex(x0);
    if (given("--tol")) c.tol = parse_real(tol);
    if (given("--budget")) c.budget = parse_real(budget);
    if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
    if (!(c.budget > 0.0)) throw UsageError("--budget must be positive");
    if (given("--x1") && given("--path")) throw UsageError("--x1 and --path are exclusive");
    if (given("--x1")) c.path = {parse_complex(x1)};
    if (given("--path"))
        for (const auto& item : split(path, ',')) c.path.push_back(parse_complex(item));
    if (given("--rect")) {
        const auto parts = split(rect, ',');
        if (parts.size() != 4) throw UsageError("--rect needs 'xmin,xmax,ymin,ymax'");
        if (nx < 1 || ny < 1) throw UsageError("--nx and --ny must be positive");
        c.rect = GridSpec{parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]), parse_real(parts[3]), nx, ny};
        if (!(c.rect->x_min <= c.rect->x_max && c.rect->y_min <= c.rect->y_max))
            throw UsageError("--rect needs xmin <= xmax and ymin <= ymax");
    }
    if (given("--alpha-scan")) {
        const auto parts = split(scan, ':');
        if (parts.size() != 3) throw UsageError("--alpha-scan needs 'a:b:step'");
        try {
            c.scan = AlphaScan{Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
        } catch (const std::exception& e) {
            throw UsageError(std::string("--alpha-scan: ") + e.what());
        }
        if (c.scan->step <= Rational(0) || c.scan->hi < c.scan->lo)
            throw UsageError("--alpha-scan needs a <= b and step > 0");
    }
    if (given("--format")) {
        if (format == "csv") c.format = Format::csv;
        else if (format == "json") c.format = Format::json;
        else throw UsageError("--format must be csv or json");
    }

    switch (c.command) {
        case Command::eval:
            if (!c.x) throw UsageError("eval needs --x");
            break;
        case Command::asym:
            if (!given("--alpha") && !c.scan) throw UsageError("asym needs --alpha or --alpha-scan");
            break;
        case Command::trace:
            if (c.path.empty()) throw UsageError("trace needs --x1 or --path");
            break;
        case Command::grid:
            if (!c.rect) throw UsageError("grid needs --rect");
            break;
        default: break;
    }
    return c;
}

int run(const RunConfig& config, std::ostream& out) {
    switch (config.command) {
        case Command::eval: return run_eval(config, out);
        case Command::asym: return run_asym(config, out);
        case Command::expand: return run_expand(config, out);
        case Command::trace: return run_trace(config, out);
        case Command::grid: return run_grid(config, out);
        case Command::verify: return run_verify_command(config, out);
    }
    return 2;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig config = parse_args(std::vector<std::string>(argv + 1, argv + argc));
        // Buffer so that a failing run leaves no partial output file.
        std::ostringstream buffer;
        const int code = run(config, buffer);
        if (config.output.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(config.output);
            if (!file) throw UsageError("cannot open output file '" + config.output + "'");
            file << buffer.str();
        }
        return code;
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const Error& e) {
        err << "p3fox: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::usage: return 2;
            case ErrorKind::domain: return 3;
            case ErrorKind::numerical: return 4;
        }
    } catch (const std::exception& e) {
        err << "p3fox: " << e.what() << '\n';
    }
    return 4;
}

}  // namespace p3fox::cli

#include "wpv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wpv/growth.hpp"
#include "wpv/intersect.hpp"
#include "wpv/kernel.hpp"
#include "wpv/mcshane.hpp"
#include "wpv/quadrature.hpp"
#include "wpv/recursion.hpp"
#include "wpv/render.hpp"
#include "wpv/serialize.hpp"
#include "wpv/zograf.hpp"

namespace wpv::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
public:
    using Error::Error;
};

enum class Format { plain, json, latex };

struct Options {
    std::string cache;
    std::string format = "plain";
    bool latex = false;
    unsigned jobs = 1;

    int g = -1;
    int n = -1;
    std::string eval;
    unsigned digits = 30;
    std::string exponents;
    std::string ambient;
    std::string curve;

    int max_n0 = 8;
    int max_n1 = 6;
    int max_dim = 5;
    int max_k = 6;
    double tol = 0;
    double tol2 = 1e-6;
    std::string trace = "3,3,3";
    int depth = 25;
    int max_complexity = 6;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

int parse_int(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + s + "'");
    }
    if (used != s.size()) throw UsageError("invalid " + what + ": '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what)
{
    if (s.empty()) throw UsageError(what + " must not be empty");
    std::vector<int> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_int(item, what));
    return out;
}

double parse_double(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + s + "'");
    }
    if (used != s.size()) throw UsageError("invalid " + what + ": '" + s + "'");
    return v;
}

std::string numeric(const BigFloat& x, unsigned digits)
{
    std::ostringstream s;
    s << std::setprecision(static_cast<int>(digits)) << x;
    return s.str();
}

std::string sci(double x)
{
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << x;
    return s.str();
}

std::string summary(bool ok, std::size_t failed, std::size_t total, const std::string& noun)
{
    if (ok) return "PASS (" + std::to_string(total) + " " + noun + ")";
    return "FAIL (" + std::to_string(failed) + " of " + std::to_string(total) + " " + noun + ")";
}

std::string render(const GradedPoly& p, Format f)
{
    return f == Format::latex ? render_latex(p) : render_plain(p);
}

class Session {
public:
    Session(Options opt, Format format, std::ostream& out, std::ostream& err)
        : opt_(std::move(opt)), format_(format), out_(out), err_(err)
    {
    }

    void open_cache(const std::filesystem::path& path)
    {
        path_ = path;
        if (!std::filesystem::exists(path_)) return;
        try {
            cache_.load(path_);
            loaded_ = true;
        } catch (const Error& e) {
            err_ << "warning: " << e.what() << "; recomputing from scratch\n";
            cache_.clear();
            rewrite_ = true;
        }
    }

    void close_cache(RunStats* stats)
    {
        if (stats) {
            stats->computed = cache_.computed_count();
            stats->cache_loaded = loaded_;
        }
        if (path_.empty() || !(cache_.dirty() || rewrite_)) return;
        try {
            cache_.save(path_);
            if (stats) stats->cache_saved = true;
        } catch (const std::exception& e) {
            err_ << "warning: " << e.what() << '\n';
        }
    }

    int volume_cmd()
    {
        if (!is_stable(opt_.g, opt_.n) || opt_.n < 1)
            throw UsageError("(g,n) = (" + std::to_string(opt_.g) + "," + std::to_string(opt_.n) +
                             ") is not a stable type with n >= 1");
        std::vector<Rational> lengths;
        if (!opt_.eval.empty()) {
            for (const auto& s : split(opt_.eval, ',')) lengths.push_back(parse_rational(s));
            if (static_cast<int>(lengths.size()) != opt_.n)
                throw UsageError("--eval needs " + std::to_string(opt_.n) + " lengths");
            if (std::any_of(lengths.begin(), lengths.end(), [](const Rational& b) { return b < 0; }))
                throw UsageError("boundary lengths must be non-negative");
        }
        const auto v = volume(opt_.g, opt_.n, cache_);
        std::optional<GradedPoly> value;
        if (!lengths.empty()) value = volume_at(opt_.g, opt_.n, lengths, cache_);

        if (format_ == Format::json) {
            json j = volume_to_json(*v);
            if (value) {
                json ls = json::array();
                for (const auto& b : lengths) ls.push_back(to_string(b));
                j["eval"] = {{"lengths", ls},
                             {"terms", terms_to_json(*value)},
                             {"numeric", numeric(evaluate(*value, {}, opt_.digits), opt_.digits)}};
            }
            out_ << j.dump() << '\n';
            return kOk;
        }
        out_ << render(v->poly(), format_) << '\n';
        if (value) {
            std::vector<std::string> ls;
            for (const auto& b : lengths) ls.push_back(to_string(b));
            std::string at;
            for (const auto& s : ls) at += (at.empty() ? "" : ",") + s;
            const std::string approx = format_ == Format::latex ? " \\approx " : " ~ ";
            out_ << "V(" << at << ") = " << render(*value, format_) << approx
                 << numeric(evaluate(*value, {}, opt_.digits), opt_.digits) << '\n';
        }
        return kOk;
    }

    int tau_cmd()
    {
        std::vector<int> a = parse_int_list(opt_.exponents, "exponent list");
        if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }))
            throw UsageError("exponents must be non-negative");
        TauVector t = opt_.g >= 0 ? TauVector{a, opt_.g} : make_tau(a);
        const Rational value = tau_bracket(t, cache_);
        if (format_ == Format::json) {
            out_ << json{{"g", t.g}, {"a", t.a}, {"value", to_string(value)}}.dump() << '\n';
        } else {
            out_ << render(GradedPoly(value), format_) << '\n';
        }
        return kOk;
    }

    int mixed_cmd()
    {
        if (opt_.g < 0) throw UsageError("mixed needs -g");
        std::vector<int> a = parse_int_list(opt_.exponents, "exponent list");
        int sum = 0;
        for (int x : a) sum += x;
        const int k = 3 * opt_.g - 3 + static_cast<int>(a.size()) - sum;
        const GradedPoly value = mixed_number({a, opt_.g, k}, cache_);
        if (format_ == Format::json) {
            out_ << json{{"g", opt_.g}, {"a", a}, {"omega_power", k}, {"terms", terms_to_json(value)}}.dump()
                 << '\n';
        } else {
            out_ << render(value, format_) << '\n';
        }
        return kOk;
    }

    int growth_cmd()
    {
        const auto gn = parse_int_list(opt_.ambient, "ambient type");
        if (gn.size() != 2) throw UsageError("--ambient takes g,n");
        const CurveClass c = parse_curve(gn[0], gn[1]);
        const GrowthResult r = growth(c, cache_);

        const GradedPoly leading = r.c_gamma * GradedPoly::var(kSlotL, r.exponent / 2);
        if (format_ == Format::json) {
            out_ << json{{"curve", c.describe()},
                         {"level_poly", {{"x_factor", 1}, {"terms", terms_to_json(r.level_poly)}}},
                         {"P", terms_to_json(r.P)},
                         {"exponent", r.exponent},
                         {"c_gamma", terms_to_json(r.c_gamma)},
                         {"symmetric_class", r.symmetric_class}}
                        .dump()
                 << '\n';
            return kOk;
        }
        if (format_ == Format::latex) {
            out_ << "\\mathrm{Vol} = x\\left(" << render_latex(r.level_poly) << "\\right)\n";
            out_ << "P(L) = " << render_latex(leading) << "+\\dots\n";
            out_ << "c(\\gamma) = " << render_latex(r.c_gamma) << '\n';
        } else {
            out_ << "curve: " << c.describe() << '\n';
            out_ << "level: x*(" << render_plain(r.level_poly) << ")\n";
            out_ << "P(L) leading term: " << render_plain(leading) << '\n';
            out_ << "c(gamma) = " << render_plain(r.c_gamma) << '\n';
        }
        if (r.symmetric_class)
            err_ << "note: the curve class is symmetric; c(gamma) carries no symmetry correction\n";
        return kOk;
    }

    int check_zograf()
    {
        const auto report = crosscheck(opt_.max_n0, opt_.max_n1, cache_);
        std::size_t failed = 0;
        for (const auto& row : report.rows) {
            if (!row.agree()) ++failed;
            if (format_ != Format::json)
                out_ << "V_{" << row.g << "," << row.n << "}(0) = " << render(row.engine, format_)
                     << (row.agree() ? "  ok" : "  MISMATCH zograf " + render(row.zograf, format_)) << '\n';
        }
        return finish(report.ok(), failed, report.checked(), "identities");
    }

    int check_virasoro()
    {
        const auto r = wpv::check_virasoro(opt_.max_dim, cache_, opt_.jobs);
        std::size_t failed = 0;
        for (const auto* part : {&r.string_eq, &r.dilaton, &r.kdv, &r.coeff_recursion}) {
            failed += part->failures.size();
            if (format_ != Format::json) {
                out_ << part->name << ": " << part->checked << " checked, " << part->failures.size()
                     << " failed";
                if (part->skipped) out_ << ", " << part->skipped << " base-case normalizations skipped";
                out_ << '\n';
            }
            for (const auto& f : part->failures) err_ << "  " << f << '\n';
        }
        return finish(r.ok(), failed, r.checked(), "identities");
    }

    int check_kernel()
    {
        const double tol = opt_.tol > 0 ? opt_.tol : 1e-8;
        std::size_t total = 0;
        std::size_t failed = 0;
        const auto report = [&](const std::string& label, double closed, double quad, double limit) {
            const double rel = std::abs(closed - quad) / std::abs(closed);
            const bool ok = rel <= limit;
            ++total;
            if (!ok) ++failed;
            if (format_ != Format::json)
                out_ << label << " closed=" << std::setprecision(15) << closed << " quad=" << quad
                     << " rel=" << sci(rel) << (ok ? "" : "  FAIL") << '\n';
        };
        const std::vector<Rational> bs{Rational(1, 2), Rational(1), Rational(2)};
        for (int k = 0; k <= opt_.max_k; ++k) {
            for (const auto& b : bs) {
                const double closed = evaluate(F_poly(k).poly, {{1, b}}, 30).convert_to<double>();
                report("F k=" + std::to_string(k) + " b=" + to_string(b), closed,
                       numeric::F_moment(k, b.get_d()), tol);
            }
        }
        for (int s = 0; s <= std::min(3, opt_.max_k); ++s) {
            for (int i = 0; i <= s; ++i) {
                const int j = s - i;
                const GradedPoly p = double_reduce(i, j) * F_poly(i + j + 1).poly;
                const double closed = evaluate(p, {{1, Rational(1)}}, 30).convert_to<double>();
                report("double i=" + std::to_string(i) + " j=" + std::to_string(j) + " b=1", closed,
                       numeric::double_moment(i, j, 1.0), opt_.tol2);
            }
        }
        const bool zeta_ok = Rational(2) * odd_moment(1) == GradedPoly::term(Rational(1, 6), Monomial::pi2_power(1));
        ++total;
        if (!zeta_ok) ++failed;
        if (format_ != Format::json)
            out_ << "2*odd_moment(1) = " << render(Rational(2) * odd_moment(1), format_) << (zeta_ok ? "" : "  FAIL") << '\n';
        return finish(failed == 0, failed, total, "comparisons");
    }

    int check_mcshane()
    {
        std::vector<double> t;
        for (const auto& s : split(opt_.trace, ',')) t.push_back(parse_double(s, "trace"));
        if (t.size() != 3) throw UsageError("--trace takes x,y,z");
        if (opt_.depth < 0) throw UsageError("--depth must be non-negative");
        const double tol = opt_.tol > 0 ? opt_.tol : 1e-6;
        const TorusPoint p(t[0], t[1], t[2]);
        const McShaneReport r = verify_torus_identity(p, opt_.depth, tol);
        if (format_ == Format::json) {
            out_ << json{{"partial_sums", r.partial_sums}, {"gap", r.gap},          {"monotone", r.monotone},
                         {"bounded", r.bounded},           {"converged", r.converged}, {"terms", r.terms},
                         {"pruned_bound", r.pruned_bound}, {"max_markoff_residual", r.max_markoff_residual}}
                        .dump()
                 << '\n';
        } else {
            for (std::size_t d = 0; d < r.partial_sums.size(); ++d)
                out_ << "depth " << d << ": S = " << std::setprecision(15) << r.partial_sums[d] << '\n';
            out_ << "1 - S = " << sci(r.gap) << ", terms = " << r.terms << ", pruned <= " << sci(r.pruned_bound)
                 << ", max Markoff residual = " << sci(r.max_markoff_residual) << '\n';
            out_ << "monotone: " << (r.monotone ? "yes" : "no") << ", bounded: " << (r.bounded ? "yes" : "no")
                 << '\n';
        }
        if (r.pass()) return finish(true, 0, 1, "identity");
        out_ << "FAIL (" << (r.converged ? "" : "not converged ") << (r.monotone ? "" : "not monotone ")
             << (r.bounded ? "" : "exceeds 1") << ")\n";
        return kCheckFailed;
    }

    int check_invariants()
    {
        std::vector<std::pair<int, int>> types;
        for (int g = 0; 2 * g - 1 <= opt_.max_complexity; ++g)
            for (int n = 1; 2 * g - 2 + n <= opt_.max_complexity; ++n)
                if (is_stable(g, n)) types.emplace_back(g, n);
        for (const auto& [g, n] : types) volume(g, n, cache_);

        std::vector<std::future<InvariantReport>> reports;
        for (const auto& [g, n] : types) {
            const auto v = cache_.find(g, n);
            reports.push_back(std::async(opt_.jobs > 1 ? std::launch::async : std::launch::deferred,
                                         [v] { return check_volume_invariants(*v); }));
        }
        std::size_t failed = 0;
        for (std::size_t i = 0; i < types.size(); ++i) {
            const auto r = reports[i].get();
            if (!r.ok()) ++failed;
            if (format_ != Format::json) {
                out_ << "V_{" << types[i].first << "," << types[i].second << "}: "
                     << cache_.find(types[i].first, types[i].second)->poly().size() << " terms, "
                     << (r.ok() ? "ok" : "FAIL " + r.violations.front()) << '\n';
            }
        }
        return finish(failed == 0, failed, types.size(), "volumes");
    }

private:
    CurveClass parse_curve(int g, int n)
    {
        if (opt_.curve == "nonsep") return CurveClass::nonseparating(g, n);
        const auto parts = split(opt_.curve, ':');
        if (parts.size() != 3 || parts[0] != "sep")
            throw UsageError("--curve takes nonsep or sep:g1:I1 (I1 comma separated, possibly empty)");
        std::vector<int> I1;
        if (!parts[2].empty()) I1 = parse_int_list(parts[2], "boundary set");
        return CurveClass::separating(g, n, parse_int(parts[1], "piece genus"), I1);
    }

    int finish(bool ok, std::size_t failed, std::size_t total, const std::string& noun)
    {
        if (format_ == Format::json) {
            out_ << json{{"pass", ok}, {"checked", total}, {"failed", failed}}.dump() << '\n';
        } else {
            out_ << summary(ok, failed, total, noun) << '\n';
        }
        return ok ? kOk : kCheckFailed;
    }

    Options opt_;
    Format format_;
    std::ostream& out_;
    std::ostream& err_;
    RecursionCache cache_;
    std::filesystem::path path_;
    bool loaded_ = false;
    bool rewrite_ = false;
};

}  // namespace

std::filesystem::path default_cache_path()
{
    if (const char* env = std::getenv("WPV_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "wpv" / "volumes.json";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".local" / "share" / "wpv" / "volumes.json";
    return std::filesystem::path("wpv-volumes.json");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunStats* stats)
{
    Options opt;
    CLI::App app{"Weil-Petersson volume polynomials and related checks", "wpv"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--cache", opt.cache, "Cache file (default: $WPV_CACHE or the user data directory)");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
    app.add_flag("--latex", opt.latex, "Same as --format latex");
    app.add_option("--jobs", opt.jobs, "Worker threads for check suites")->check(CLI::Range(1u, 256u));

    auto* vol = app.add_subcommand("volume", "The volume polynomial V_{g,n}");
    vol->add_option("-g", opt.g, "Genus")->required();
    vol->add_option("-n", opt.n, "Number of boundary components")->required();
    vol->add_option("--eval", opt.eval, "Evaluate at exact lengths b1,b2,... (p/q syntax)");
    vol->add_option("--digits", opt.digits, "Significant digits of numeric values")->check(CLI::Range(5u, 1000u));

    auto* tau = app.add_subcommand("tau", "Intersection number <tau_a1 ... tau_an>_g");
    tau->add_option("exponents", opt.exponents, "a1,a2,...")->required();
    tau->add_option("-g", opt.g, "Genus (inferred when omitted)");

    auto* mixed = app.add_subcommand("mixed", "Mixed psi/omega intersection number");
    mixed->add_option("exponents", opt.exponents, "a1,a2,...")->required();
    mixed->add_option("-g", opt.g, "Genus")->required();

    auto* grow = app.add_subcommand("growth", "Level-set volume and growth constant of a simple closed curve");
    grow->add_option("--ambient", opt.ambient, "g,n")->required();
    grow->add_option("--curve", opt.curve, "nonsep or sep:g1:I1")->required();

    auto* check = app.add_subcommand("check", "Verification suites");
    check->require_subcommand(1);
    auto* zog = check->add_subcommand("zograf", "Cusped volumes against the genus 0 and 1 recursions");
    zog->add_option("--max-n0", opt.max_n0)->check(CLI::Range(3, 20));
    zog->add_option("--max-n1", opt.max_n1)->check(CLI::Range(0, 20));
    auto* vir = check->add_subcommand("virasoro", "String, dilaton, KdV and coefficient identities");
    vir->add_option("--max-dim", opt.max_dim, "Bound on 2g-2+n")->check(CLI::Range(1, 12));
    auto* ker = check->add_subcommand("kernel", "Closed-form kernels against quadrature");
    ker->add_option("--max-k", opt.max_k)->check(CLI::Range(0, 12));
    ker->add_option("--tol", opt.tol, "Relative tolerance for single moments (default 1e-8)");
    ker->add_option("--tol2", opt.tol2, "Relative tolerance for double moments");
    auto* mcs = check->add_subcommand("mcshane", "Partial sums of the punctured-torus identity");
    mcs->add_option("--trace", opt.trace, "Markoff triple x,y,z");
    mcs->add_option("--depth", opt.depth)->check(CLI::Range(0, 60));
    mcs->add_option("--tol", opt.tol, "Bound on 1 - S (default 1e-6)");
    auto* inv = check->add_subcommand("invariants", "Homogeneity, positivity and symmetry of volumes");
    inv->add_option("--max-complexity", opt.max_complexity, "Bound on 2g-2+n")->check(CLI::Range(1, 12));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kUsage;
    }

    const Format format = opt.latex ? Format::latex
                          : opt.format == "json"  ? Format::json
                          : opt.format == "latex" ? Format::latex
                                                  : Format::plain;
    const bool needs_cache = !(ker->parsed() || mcs->parsed());
    Session session(opt, format, out, err);
    try {
        if (needs_cache) session.open_cache(opt.cache.empty() ? default_cache_path() : std::filesystem::path(opt.cache));
        int code = kOk;
        if (vol->parsed()) code = session.volume_cmd();
        else if (tau->parsed()) code = session.tau_cmd();
        else if (mixed->parsed()) code = session.mixed_cmd();
        else if (grow->parsed()) code = session.growth_cmd();
        else if (zog->parsed()) code = session.check_zograf();
        else if (vir->parsed()) code = session.check_virasoro();
        else if (ker->parsed()) code = session.check_kernel();
        else if (mcs->parsed()) code = session.check_mcshane();
        else if (inv->parsed()) code = session.check_invariants();
        session.close_cache(stats);
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        session.close_cache(stats);
        return kUsage;
    }
}

}  // namespace wpv::cli

#include "lacunary/cli.hpp"

#include "lacunary/asymptotics.hpp"
#include "lacunary/boundary_profile.hpp"
#include "lacunary/botcher.hpp"
#include "lacunary/closed_forms.hpp"
#include "lacunary/formal_series.hpp"
#include "lacunary/measure_blowup.hpp"
#include "lacunary/series_eval.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

namespace lacunary::cli {

cplx parse_complex(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex number");
    auto number = [&](const std::string& t) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad complex number '" + text + "'");
        }
        if (used != t.size()) throw std::invalid_argument("bad complex number '" + text + "'");
        return v;
    };
    bool imag = s.back() == 'i' || s.back() == 'j';
    if (!imag) return number(s);
    s.pop_back();
    // split at the last sign that is not leading and not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto coef = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return number(t);
    };
    if (split == std::string::npos) return {0, coef(s)};
    return {number(s.substr(0, split)), coef(s.substr(split))};
}

namespace {

// Fixed 15 significant digits everywhere.
std::string num(double v)
{
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

class Json {
public:
    Json& field(const std::string& k, double v) { return raw(k, num(v)); }
    Json& field(const std::string& k, long long v) { return raw(k, std::to_string(v)); }
    Json& field(const std::string& k, int v) { return raw(k, std::to_string(v)); }
    Json& field(const std::string& k, bool v) { return raw(k, v ? "true" : "false"); }
    Json& field(const std::string& k, const std::string& v) { return raw(k, "\"" + v + "\""); }
    Json& field(const std::string& k, const char* v) { return field(k, std::string(v)); }
    Json& complex(const std::string& k, cplx v)
    {
        field(k + "_re", v.real());
        return field(k + "_im", v.imag());
    }
    Json& raw(const std::string& k, const std::string& v)
    {
        body_ += (body_.empty() ? "" : ", ") + ("\"" + k + "\": ") + v;
        return *this;
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

Growth parse_growth(const std::string& text, int start)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("growth must look like power:B or geometric:A");
    std::string kind = text.substr(0, colon);
    double p = 0;
    try {
        p = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad growth parameter in '" + text + "'");
    }
    if (kind == "power") return Growth::power(p, start < 0 ? 1 : start);
    if (kind == "geometric") return Growth::geometric(p, false, start < 0 ? 0 : start);
    throw std::invalid_argument("unknown growth kind '" + kind + "'");
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number '" + item + "' in list");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

// Self-test bookkeeping: one line per example.
struct SelfTest {
    std::ostream& out;
    int failed = 0;
    void check(const std::string& name, bool ok, double detail)
    {
        out << (ok ? "PASS " : "FAIL ") << name << " (" << num(detail) << ")\n";
        if (!ok) ++failed;
    }
    int code() const { return failed ? 1 : 0; }
};

struct Common {
    std::string out_path;
    std::string format;
    bool selftest = false;
};

void add_common(CLI::App* sc, Common& c, const std::string& default_format)
{
    sc->add_option("--out", c.out_path, "output file (default stdout)");
    c.format = default_format;
    sc->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sc->add_flag("--selftest", c.selftest, "run the module examples");
}

void emit(const Common& c, const std::string& text, std::ostream& out)
{
    if (c.out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + c.out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::vector<double> default_profile_grid()
{
    return {1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lacunary series toolkit"};
    app.require_subcommand(1);

    // eval
    Common ce;
    std::string growth = "power:2", zs = "1";
    double tol = 1e-13;
    int start = -1;
    auto* eval = app.add_subcommand("eval", "direct summation of sum exp(-z g(k))");
    eval->add_option("--growth", growth, "power:B or geometric:A");
    eval->add_option("--start", start, "first index (default 1 for power, 0 for geometric)");
    eval->add_option("--z", zs, "evaluation point a+bi");
    eval->add_option("--tol", tol, "absolute tolerance");
    add_common(eval, ce, "json");

    // asympt
    Common ca;
    std::string bs = "3";
    int terms = 6;
    std::string az;
    auto* asympt = app.add_subcommand("asympt", "small-z power series coefficients");
    asympt->add_option("--b", bs, "exponent as p/q or decimal");
    asympt->add_option("--terms", terms, "number of coefficients");
    asympt->add_option("--z", az, "optional evaluation point");
    add_common(asympt, ca, "json");

    // theta
    Common ct;
    std::string tz = "1";
    auto* theta = app.add_subcommand("theta", "b = 2 through the theta transformation");
    theta->add_option("--z", tz, "evaluation point");
    add_common(theta, ct, "json");

    // geometric
    Common cg;
    double ga = 2;
    std::string gz = "1";
    auto* geo = app.add_subcommand("geometric", "Fourier representation for g(k) = a^k");
    geo->add_option("--a", ga, "base a > 1");
    geo->add_option("--z", gz, "evaluation point");
    add_common(geo, cg, "json");

    // transseries
    Common cts;
    std::string tb = "3";
    int sigma = -1, blocks = 2, order = 3;
    auto* trans = app.add_subcommand("transseries", "power series plus exponential blocks");
    trans->add_option("--b", tb, "3 or 3/2");
    trans->add_option("--sigma", sigma, "-1 or 1");
    trans->add_option("--blocks", blocks, "number of k blocks");
    trans->add_option("--order", order, "terms per series");
    add_common(trans, cts, "json");

    // borel
    Common cb;
    std::string bb = "3", bz = "0.5";
    int bk = 4;
    double btol = 1e-12;
    std::optional<double> ray_minus, ray_plus;
    auto* borel = app.add_subcommand("borel", "Borel-Laplace evaluation");
    borel->add_option("--b", bb, "exponent as p/q");
    borel->add_option("--z", bz, "evaluation point");
    borel->add_option("--K", bk, "k terms summed pointwise");
    borel->add_option("--tol", btol, "tolerance");
    borel->add_option("--ray-minus", ray_minus, "Laplace ray angle, sigma = -1");
    borel->add_option("--ray-plus", ray_plus, "Laplace ray angle, sigma = +1");
    add_common(borel, cb, "json");

    // profile
    Common cp;
    double pb = 3;
    long pm = 1, pn = 9;
    std::string pxs;
    auto* profile = app.add_subcommand("profile", "scaled boundary values at 2 pi m/n");
    profile->add_option("--b", pb, "exponent (1.5 uses the three-halves boundary point)");
    profile->add_option("--m", pm, "numerator");
    profile->add_option("--n", pn, "denominator");
    profile->add_option("--xs", pxs, "decreasing comma-separated distances");
    add_common(profile, cp, "csv");

    // duality
    Common cd;
    long dm = 1, dn = 1;
    auto* duality = app.add_subcommand("duality", "b = 3/2 versus b = 3 boundary values");
    duality->add_option("--m", dm, "numerator");
    duality->add_option("--n", dn, "denominator");
    add_common(duality, cd, "json");

    // measure
    Common cm;
    std::string mg = "power:2", mxs = "0.2,0.1,0.05,0.02";
    double beta0 = 0, beta1 = 1;
    int mpoints = 1 << 14;
    auto* measure = app.add_subcommand("measure", "windowed L2 ratio scan");
    measure->add_option("--growth", mg, "power:B or geometric:A");
    measure->add_option("--beta0", beta0, "window start in y/(2 pi)");
    measure->add_option("--beta1", beta1, "window end in y/(2 pi)");
    measure->add_option("--points", mpoints, "minimum quadrature points");
    measure->add_option("--xs", mxs, "decreasing comma-separated x values");
    add_common(measure, cm, "csv");

    // julia
    Common cj;
    std::string jl = "0.3";
    int jorder = 8, jres = 512, jiter = 200;
    std::size_t jsamples = 4096;
    unsigned long long jdeg = 0;
    double jradius = 100;
    std::string jcloud;
    auto* julia = app.add_subcommand("julia", "Julia curve from the Bottcher series");
    julia->add_option("--lambda", jl, "multiplier, |lambda| < 1");
    julia->add_option("--order", jorder, "lambda order K");
    julia->add_option("--degree", jdeg, "degree cap D (default 2^{K+2})");
    julia->add_option("--samples", jsamples, "points on the curve");
    julia->add_option("--cloud", jcloud, "also write the escape-time boundary cloud here");
    julia->add_option("--resolution", jres, "escape-time grid resolution");
    julia->add_option("--max-iter", jiter, "escape-time iterations");
    julia->add_option("--radius", jradius, "escape radius");
    add_common(julia, cj, "csv");

    // qplot
    Common cq;
    long qmax = 100;
    auto* qplot = app.add_subcommand("qplot", "standard function Q on [0, 1]");
    qplot->add_option("--qmax", qmax, "largest denominator");
    add_common(qplot, cq, "csv");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (eval->parsed()) {
            if (ce.selftest) {
                SelfTest t{out};
                double v = direct_sum(Growth::power(2), 1.0).value.real();
                t.check("power:2 at z=1", std::abs(v - 0.386318602413326) < 1e-14, v);
                double w = direct_sum(Growth::geometric(2), 1.0).value.real();
                t.check("geometric:2 from k=0 at z=1", std::abs(w - 0.521865938459879) < 1e-14, w);
                auto r = direct_sum(Growth::power(3), cplx(0.3, 0), 1e-10);
                t.check("tail bound below tol", r.tail_bound < 1e-10, r.tail_bound);
                return t.code();
            }
            auto r = direct_sum(parse_growth(growth, start), parse_complex(zs), tol);
            emit(ce, Json().complex("value", r.value).field("terms", r.terms_used).field("tail_bound", r.tail_bound).str(), out);
            return 0;
        }
        if (asympt->parsed()) {
            if (ca.selftest) {
                SelfTest t{out};
                auto s = asymptotic_coeffs(Rational(3), 4);
                t.check("b=3 z coefficient -1/120", std::abs(s.coeff[0] + 1.0 / 120) < 1e-12, s.coeff[0].real());
                t.check("b=3 z^3 coefficient 1/792", std::abs(s.coeff[2] - 1.0 / 792) < 1e-12, s.coeff[2].real());
                auto h = asymptotic_coeffs(Rational(3, 2), 3);
                t.check("b=3/2 z^2 coefficient 1/240", std::abs(h.coeff[1] - 1.0 / 240) < 1e-12, h.coeff[1].real());
                return t.code();
            }
            if (terms < 1) throw std::invalid_argument("--terms must be >= 1");
            Rational b = parse_rational(bs);
            auto s = asymptotic_coeffs(b, terms);
            std::string arr = "[";
            for (int j = 0; j < terms; ++j)
                arr += (j ? ", " : "") + Json().field("j", j + 1).complex("c", s.coeff[j]).str();
            arr += "]";
            Json j;
            j.field("b", b.str()).field("leading", gamma_function(1 + 1 / b.value())).raw("coeffs", arr);
            if (!az.empty()) j.complex("series", s.eval(parse_complex(az)));
            emit(ca, j.str(), out);
            return 0;
        }
        if (theta->parsed()) {
            if (ct.selftest) {
                SelfTest t{out};
                double v = theta_identity_eval(1.0).real();
                t.check("theta at z=1", std::abs(v - 0.386318602413326) < 1e-14, v);
                double d = std::abs(theta_identity_eval(cplx(0.05, 0.5)) - direct_sum(Growth::power(2), cplx(0.05, 0.5)).value);
                t.check("theta vs direct at 0.05+0.5i", d < 1e-10, d);
                return t.code();
            }
            cplx z = parse_complex(tz);
            cplx v = theta_identity_eval(z), d = direct_sum(Growth::power(2), z).value;
            emit(ct, Json().complex("value", v).complex("direct", d).field("residual", std::abs(v - d)).str(), out);
            return 0;
        }
        if (geo->parsed()) {
            if (cg.selftest) {
                SelfTest t{out};
                for (double a : {2.0, 3.0}) {
                    auto rep = make_geometric_rep(a);
                    double d = std::abs(geometric_rep_eval(rep, cplx(0.5, 0.3)) - direct_sum(Growth::geometric(a), cplx(0.5, 0.3)).value);
                    t.check("representation vs direct, a=" + num(a), d < 1e-8, d);
                }
                cplx fz = direct_sum(Growth::geometric(2), cplx(0.4, 0.1)).value;
                cplx faz = direct_sum(Growth::geometric(2), cplx(0.8, 0.2)).value;
                double r = std::abs(fz - faz - std::exp(-cplx(0.4, 0.1)));
                t.check("f(z) - f(2z) = exp(-z)", r < 1e-12, r);
                return t.code();
            }
            auto rep = make_geometric_rep(ga);
            cplx z = parse_complex(gz);
            cplx v = geometric_rep_eval(rep, z), d = direct_sum(Growth::geometric(ga), z).value;
            emit(cg, Json().field("a", ga).complex("value", v).complex("direct", d).field("residual", std::abs(v - d))
                         .field("fourier_terms", fourier_terms_needed(rep, z)).field("c0", rep.c0).str(), out);
            return 0;
        }
        if (trans->parsed()) {
            if (cts.selftest) {
                SelfTest t{out};
                auto r = assemble_transseries(Rational(3), -1, 1, 2);
                double d = std::abs(r.blocks[0].series.coeffs[0] - std::pow(cplx(0, pi / 6), 0.25));
                t.check("b=3 first block prefactor (pi i/6)^{1/4}", d < 1e-12, d);
                auto h = assemble_transseries(Rational(3, 2), -1, 1, 2);
                double e = std::abs(h.blocks[0].series.coeffs[0] - 4 * std::sqrt(2.0) * pi / 3 / std::sqrt(I));
                t.check("b=3/2 first block prefactor", e < 1e-11, e);
                return t.code();
            }
            if (sigma != -1 && sigma != 1) throw std::invalid_argument("--sigma must be -1 or 1");
            emit(cts, assemble_transseries(parse_rational(tb), sigma, blocks, order).to_json(), out);
            return 0;
        }
        if (borel->parsed()) {
            if (cb.selftest) {
                SelfTest t{out};
                for (Rational b : {Rational(3), Rational(3, 2)}) {
                    double z = 0.5;
                    cplx f = gamma_function(1 + 1 / b.value()) * std::pow(z, -1 / b.value()) - 0.5 + borel_eval(b, z);
                    double d = std::abs(f - direct_sum(Growth::power(b.value()), z).value);
                    t.check("Borel sum vs direct, b=" + b.str(), d < 1e-8, d);
                }
                double s = std::abs(saddle_term_quadrature(Rational(3), 1, 0.4) -
                                    (borel_block(Rational(3), 1, -1, 0.4) + borel_block(Rational(3), 1, 1, 0.4)));
                t.check("saddle quadrature vs k=1 block", s < 1e-8, s);
                return t.code();
            }
            Rational b = parse_rational(bb);
            cplx z = parse_complex(bz);
            BorelOptions opt{ray_minus, ray_plus};
            cplx lap = borel_eval(b, z, bk, btol, opt);
            cplx f = gamma_function(1 + 1 / b.value()) * std::pow(z, -1 / b.value()) - 0.5 + lap;
            cplx d = direct_sum(Growth::power(b.value()), z).value;
            auto rays = borel_rays(b, z);
            emit(cb, Json().field("b", b.str()).complex("value", f).complex("laplace", lap).complex("direct", d)
                         .field("relative_residual", std::abs(f - d) / std::abs(d))
                         .field("ray_minus", ray_minus.value_or(rays.first)).field("ray_plus", ray_plus.value_or(rays.second)).str(), out);
            return 0;
        }
        if (profile->parsed()) {
            if (cp.selftest) {
                SelfTest t{out};
                auto g = default_profile_grid();
                auto e0 = profile_limit(Growth::power(3), 3, 0, g);
                double d0 = std::abs(e0.extrapolated_value - gamma_function(4.0 / 3));
                t.check("x^{1/3} f(x) -> Gamma(4/3)", d0 < 1e-4, d0);
                auto e9 = profile_limit(Growth::power(3), 3, 2 * pi / 9, g);
                cplx target = gamma_function(4.0 / 3) * gauss_profile(3, {1, 9});
                double d9 = std::abs(e9.extrapolated_value - target) / std::abs(target);
                t.check("profile at 1/9", d9 < 0.01, d9);
                return t.code();
            }
            RationalPoint p(pm, pn);
            std::vector<double> xs = pxs.empty() ? default_profile_grid() : parse_list(pxs);
            ProfileEstimate e = pb == 1.5 ? three_halves_profile(p, xs)
                                          : profile_limit(Growth::power(pb), pb, 2 * pi * p.value(), xs);
            if (cp.format == "json") {
                Json j;
                j.field("b", pb).field("m", static_cast<long long>(p.m)).field("n", static_cast<long long>(p.n)).field("y", e.y)
                    .complex("extrapolated", e.extrapolated_value).field("convergence_indicator", e.convergence_indicator);
                if (pb == 1.5) j.complex("target", three_halves_target(p));
                else if (pb == std::round(pb)) j.complex("target", gamma_function(1 + 1 / pb) * gauss_profile(static_cast<int>(pb), p));
                emit(cp, j.str(), out);
            } else {
                emit(cp, e.to_csv(), out);
            }
            return 0;
        }
        if (duality->parsed()) {
            if (cd.selftest) {
                SelfTest t{out};
                for (RationalPoint p : {RationalPoint(1, 1), RationalPoint(1, 2), RationalPoint(2, 3)}) {
                    double r = duality_residual(p);
                    t.check("duality at " + std::to_string(p.m) + "/" + std::to_string(p.n), r < 1e-12, r);
                }
                return t.code();
            }
            RationalPoint p(dm, dn);
            emit(cd, Json().field("m", static_cast<long long>(p.m)).field("n", static_cast<long long>(p.n))
                         .complex("boundary_value", three_halves_target(p)).field("residual", duality_residual(p))
                         .field("printed_residual", duality_printed_residual(p)).str(), out);
            return 0;
        }
        if (measure->parsed()) {
            if (cm.selftest) {
                SelfTest t{out};
                auto g = Growth::power(2);
                double d = diagonal_term(g, 0.5);
                t.check("diagonal at x=0.5", std::abs(d - 0.3863186024133) < 1e-12, d);
                double r = window_l2(g, 0.05, {0, 1, 1 << 14}) / diagonal_term(g, 0.05);
                t.check("window ratio at x=0.05 in [0.9, 1.1]", r >= 0.9 && r <= 1.1, r);
                double o1 = offdiagonal_bound(g, 0.1, 1).ratio, o2 = offdiagonal_bound(g, 0.1, 2).ratio;
                t.check("off-diagonal ratio < 1 and decreasing in m", o1 < 1 && o2 < o1, o1);
                return t.code();
            }
            WindowSpec w{beta0, beta1, mpoints};
            auto rows = measure_ratio_scan(parse_growth(mg, -1), w, parse_list(mxs));
            if (cm.format == "json") {
                std::string arr = "[";
                for (std::size_t i = 0; i < rows.size(); ++i)
                    arr += (i ? ", " : "") + Json().field("x", rows[i].x).field("ratio", rows[i].ratio)
                                                 .field("offdiag_ratio", rows[i].offdiag_ratio).str();
                emit(cm, Json().raw("rows", arr + "]").str(), out);
            } else {
                emit(cm, measure_scan_csv(rows), out);
            }
            return 0;
        }
        if (julia->parsed()) {
            if (cj.selftest) {
                SelfTest t{out};
                auto s = psi_series(8, 256);
                t.check("binary lacunarity k <= 8", s.binary_lacunary(), s.max_coefficient());
                double r = functional_residual(s, 0.3, 0.7);
                t.check("functional residual at lambda=0.3, z=0.7", r < 1e-6, r);
                auto curve = julia_curve(s, 0.3, 512);
                auto cloud = escape_time_oracle(0.3, 256, 200, 100, curve_box(curve));
                double dist = curve_to_cloud_distance(curve, cloud);
                t.check("curve within 2 cells of the escape boundary", dist < 2, dist);
                return t.code();
            }
            if (jorder < 1 || jorder > 30) throw std::invalid_argument("--order must be in [1, 30]");
            cplx lambda = parse_complex(jl);
            auto s = psi_series(jorder, jdeg);
            auto curve = julia_curve(s, lambda, jsamples);
            if (!jcloud.empty()) {
                auto cloud = escape_time_oracle(lambda, static_cast<std::size_t>(jres), jiter, jradius, curve_box(curve));
                std::ofstream f(jcloud, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open cloud file " + jcloud);
                f << points_csv(cloud.points);
            }
            if (cj.format == "json") {
                std::string arr = "[";
                for (std::size_t i = 0; i < curve.size(); ++i) arr += (i ? ", " : "") + ("[" + num(curve[i].x) + ", " + num(curve[i].y) + "]");
                emit(cj, Json().complex("lambda", lambda).field("K", jorder).raw("points", arr + "]").str(), out);
            } else {
                emit(cj, points_csv(curve), out);
            }
            return 0;
        }
        if (qplot->parsed()) {
            if (cq.selftest) {
                SelfTest t{out};
                t.check("Q(1/2) = 1/2", standard_Q(0.5, 10) == 0.5, standard_Q(0.5, 10));
                t.check("Q(1/sqrt 2) = 0", standard_Q(1 / std::sqrt(2.0), 100) == 0, standard_Q(1 / std::sqrt(2.0), 100));
                t.check("Q(3/7) = 1/7", std::abs(standard_Q(3.0 / 7, 10) - 1.0 / 7) < 1e-15, standard_Q(3.0 / 7, 10));
                return t.code();
            }
            if (qmax < 1 || qmax > 5000) throw std::invalid_argument("--qmax must be in [1, 5000]");
            // every reduced p/q in [0, 1], sorted by position
            std::vector<std::pair<double, long>> pts;
            for (long q = 1; q <= qmax; ++q)
                for (long p = 0; p <= q; ++p)
                    if (std::gcd(p, q) == 1) pts.push_back({static_cast<double>(p) / static_cast<double>(q), q});
            std::sort(pts.begin(), pts.end());
            if (cq.format == "json") {
                std::string arr = "[";
                for (std::size_t i = 0; i < pts.size(); ++i) arr += (i ? ", " : "") + ("[" + num(pts[i].first) + ", " + num(1.0 / static_cast<double>(pts[i].second)) + "]");
                emit(cq, Json().field("qmax", static_cast<long long>(qmax)).raw("points", arr + "]").str(), out);
            } else {
                std::ostringstream os;
                os << "x,Q\n";
                for (const auto& [x, q] : pts) os << num(x) << ',' << num(1.0 / static_cast<double>(q)) << '\n';
                emit(cq, os.str(), out);
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace lacunary::cli

#include "ckx/fueter.hpp"
#include "ckx/json_io.hpp"
#include "ckx/numeric.hpp"
#include "ckx/parse.hpp"
#include "ckx/planewave.hpp"
#include "ckx/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ckx;

std::string sci(double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::scientific << v;
    return os.str();
}

std::vector<double> parse_point(const std::string& text, unsigned m) {
    std::vector<double> point;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) point.push_back(std::stod(item));
    if (point.size() != m + 1)
        throw CLI::ValidationError("--point", "expected " + std::to_string(m + 1) +
                                                  " comma-separated coordinates");
    return point;
}

std::vector<Rational> parse_rational_point(const std::string& text, unsigned m) {
    std::vector<Rational> point;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // Accept decimals with up to 6 places as exact rationals.
        auto dot = item.find('.');
        if (dot == std::string::npos) {
            point.push_back(Rational::from_string(item));
        } else {
            std::string digits = item.substr(0, dot) + item.substr(dot + 1);
            unsigned places = static_cast<unsigned>(item.size() - dot - 1);
            if (places > 6) throw CLI::ValidationError("--point", "too many decimal places");
            BigInt den = 1;
            for (unsigned i = 0; i < places; ++i) den *= 10;
            point.push_back(Rational(BigInt(digits), den));
        }
    }
    if (point.size() != m + 1)
        throw CLI::ValidationError("--point", "expected " + std::to_string(m + 1) +
                                                  " comma-separated coordinates");
    return point;
}

UnivariatePoly univariate_arg(const std::string& text, unsigned m, const char* flag) {
    try {
        return UnivariatePoly::from_polynomial(parse_polynomial(text, m));
    } catch (const std::exception& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << "\n";
    }
}

std::string family_csv(FamilyKind kind, unsigned k, unsigned m) {
    std::ostringstream os;
    os << "s,coefficient,monomial-expansion\n";
    if (kind == FamilyKind::Q || kind == FamilyKind::P) {
        CoeffKind ck = kind == FamilyKind::Q ? CoeffKind::appell : CoeffKind::harmonic;
        for (unsigned s = 0; s <= k; ++s) {
            CliffordPolynomial term =
                variable_power(VarBase::x, k - s, m) * variable_power(VarBase::xbar, s, m);
            os << s << "," << family_coeff(ck, k, s, m).str() << ",\""
               << print_polynomial(term) << "\"\n";
        }
    } else {
        os << 0 << ",1,\"" << print_polynomial(family_poly(kind, k, m)) << "\"\n";
    }
    return os.str();
}

int cmd_family(FamilyKind kind, unsigned k, unsigned m, const std::string& format,
               const std::string& out) {
    CliffordPolynomial p = family_poly(kind, k, m);
    if (format == "csv") {
        std::string csv = family_csv(kind, k, m);
        if (out.empty())
            std::cout << csv;
        else
            std::ofstream(out) << csv;
        return 0;
    }
    nlohmann::json j = polynomial_to_json(p);
    j["text"] = print_polynomial(p);
    emit(j, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Clifford-analysis toolkit: CK extensions, harmonic polynomial "
                 "families, Fueter-Sce diagram checks, plane-wave decompositions"};
    app.require_subcommand(1);

    // --- family ---------------------------------------------------------
    auto* fam = app.add_subcommand("family", "Generate a polynomial family member");
    std::string fam_kind = "Q";
    unsigned fam_m = 3, fam_k = 0;
    std::string fam_format = "json", fam_out;
    fam->add_option("--kind", fam_kind, "Q | P | H0 | H1")->check(CLI::IsMember({"Q", "P", "H0", "H1"}));
    fam->add_option("--m", fam_m, "dimension (>= 2)")->required();
    fam->add_option("--k", fam_k, "degree index")->required();
    fam->add_option("--format", fam_format)->check(CLI::IsMember({"json", "csv"}));
    fam->add_option("--out", fam_out, "write to file instead of stdout");

    // --- ck ---------------------------------------------------------------
    auto* ck = app.add_subcommand("ck", "CK-extension engines");
    auto* ck_ext = ck->add_subcommand("extend", "Extend initial data");
    std::string ck_kind = "hgck", ck_a0 = "0", ck_a1 = "0", ck_f0, ck_format = "json", ck_out;
    unsigned ck_m = 3;
    ck_ext->add_option("--kind", ck_kind, "hgck | gck")->check(CLI::IsMember({"hgck", "gck"}));
    ck_ext->add_option("--m", ck_m)->required();
    ck_ext->add_option("--a0", ck_a0, "first initial function (polynomial in x0)");
    ck_ext->add_option("--a1", ck_a1, "second initial function (hgck only)");
    ck_ext->add_option("--f0", ck_f0, "initial function (gck; defaults to --a0)");
    ck_ext->add_option("--format", ck_format)->check(CLI::IsMember({"json", "text"}));
    ck_ext->add_option("--out", ck_out);
    auto* ck_rec = ck->add_subcommand("recover", "Recover initial data of an axially harmonic polynomial");
    std::string rec_expr;
    unsigned rec_m = 3;
    ck_rec->add_option("--m", rec_m)->required();
    ck_rec->add_option("--expr", rec_expr)->required();

    // --- verify -----------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "Run identity verification suites");
    std::string ver_suite = "all";
    std::vector<unsigned> ver_m;
    VerifyOptions opt;
    std::string ver_report = "json", ver_out, ver_mutate;
    {
        std::vector<std::string> names = suite_names();
        names.push_back("all");
        ver->add_option("--suite", ver_suite, "suite name or 'all'")->check(CLI::IsMember(names));
    }
    ver->add_option("--m", ver_m, "dimension list (default: per-suite sweep)")->delimiter(',');
    ver->add_option("--kmax", opt.kmax, "degree cap (default: per-suite)");
    ver->add_option("--seed", opt.seed, "seed for the randomized property checks (default 0)");
    ver->add_option("--threads", opt.threads, "worker cap (default: CK_THREADS env or hardware)");
    ver->add_option("--samples", opt.mc_samples, "Monte-Carlo samples (default 100000)");
    ver->add_option("--tol-bessel", opt.tol_bessel, "Bessel closed-form tolerance (default 1e-10)");
    ver->add_option("--tol-ex31", opt.tol_ex31, "example 1 residual tolerance (default 1e-10)");
    ver->add_option("--tol-ex32", opt.tol_ex32, "example 2 residual tolerance (default 1e-8)");
    ver->add_option("--tol-ex33", opt.tol_ex33, "example 3 residual tolerance (default 1e-8)");
    ver->add_option("--tol-riesz", opt.tol_riesz, "Riesz partial-sum tolerance (default 1e-8)");
    ver->add_option("--n", opt.numeric_n, "series truncation for the numeric examples (default 25)");
    ver->add_option("--report", ver_report, "report format")->check(CLI::IsMember({"json"}));
    ver->add_option("--out", ver_out, "write the report to a file");
    ver->add_option("--mutate", ver_mutate,
                    "inject a coefficient perturbation kind:k:s:m:delta (sensitivity hook)");

    // --- planewave ----------------------------------------------------------
    auto* pw = app.add_subcommand("planewave", "Plane-wave reconstruction of HGCK");
    unsigned pw_m = 3;
    std::string pw_a0 = "0", pw_a1 = "0", pw_point, pw_out;
    bool pw_mc = false;
    std::uint64_t pw_samples = 100000, pw_seed = 0;
    pw->add_option("--m", pw_m)->required();
    pw->add_option("--a0", pw_a0);
    pw->add_option("--a1", pw_a1);
    pw->add_flag("--mc", pw_mc, "run the Monte-Carlo witness");
    pw->add_option("--samples", pw_samples);
    pw->add_option("--seed", pw_seed);
    pw->add_option("--point", pw_point, "evaluation point x0,x1,...,xm (MC mode)");
    pw->add_option("--out", pw_out);

    // --- examples -------------------------------------------------------------
    auto* ex = app.add_subcommand("examples", "Transcendental example residuals");
    std::string ex_which = "ex31", ex_point = "0.5,0.5,0,0", ex_out;
    unsigned ex_m = 3, ex_n = 25;
    std::string ex_reading = "physicists";
    ex->add_option("--which", ex_which)->check(CLI::IsMember({"ex31", "ex32", "ex33"}));
    ex->add_option("--m", ex_m);
    ex->add_option("--point", ex_point);
    ex->add_option("--n", ex_n, "truncation (default 25)");
    ex->add_option("--reading", ex_reading, "Hermite normalization for ex32/ex33 closed forms")
        ->check(CLI::IsMember({"physicists", "probabilists"}));
    ex->add_option("--out", ex_out);

    // --- eval --------------------------------------------------------------
    auto* ev = app.add_subcommand("eval", "Parse, transform and evaluate a polynomial");
    std::string ev_expr, ev_op, ev_at, ev_out, ev_format = "json";
    unsigned ev_m = 3;
    ev->add_option("--m", ev_m)->required();
    ev->add_option("--expr", ev_expr)->required();
    ev->add_option("--op", ev_op, "dx0 | dirac | cr | crbar | laplacian | laplacian^N");
    ev->add_option("--at", ev_at, "evaluation point of m+1 rational coordinates");
    ev->add_option("--format", ev_format)->check(CLI::IsMember({"json", "text"}));
    ev->add_option("--out", ev_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (fam->parsed()) {
            FamilyKind kind = fam_kind == "Q"    ? FamilyKind::Q
                              : fam_kind == "P"  ? FamilyKind::P
                              : fam_kind == "H0" ? FamilyKind::H0
                                                 : FamilyKind::H1;
            return cmd_family(kind, fam_k, fam_m, fam_format, fam_out);
        }

        if (ck->parsed()) {
            if (ck_ext->parsed()) {
                CliffordPolynomial result(ck_m);
                if (ck_kind == "hgck") {
                    result = hgck_extend(univariate_arg(ck_a0, ck_m, "--a0"),
                                         univariate_arg(ck_a1, ck_m, "--a1"), ck_m);
                } else {
                    const std::string& f0 = ck_f0.empty() ? ck_a0 : ck_f0;
                    result = gck_extend(univariate_arg(f0, ck_m, "--f0"), ck_m);
                }
                if (ck_format == "text") {
                    std::cout << print_polynomial(result) << "\n";
                } else {
                    nlohmann::json j = polynomial_to_json(result);
                    j["text"] = print_polynomial(result);
                    try {
                        j["axial"] = axial_to_json(axial_decompose(result));
                    } catch (const NotAxial&) {
                        // Clifford-valued seeds can leave grade >= 2 parts;
                        // the profile view only exists for paravector output.
                    }
                    emit(j, ck_out);
                }
                return 0;
            }
            if (ck_rec->parsed()) {
                CliffordPolynomial p = parse_polynomial(rec_expr, rec_m);
                auto [a0, a1] = recover_initial(p, rec_m);
                nlohmann::json j;
                j["a0"] = univariate_to_json(a0);
                j["a0_text"] = a0.str();
                j["a1"] = univariate_to_json(a1);
                j["a1_text"] = a1.str();
                emit(j, "");
                return 0;
            }
            std::cerr << "ck: expected a subcommand (extend | recover)\n";
            return 2;
        }

        if (ver->parsed()) {
            if (!ver_mutate.empty()) {
                std::stringstream ss(ver_mutate);
                std::string kind, ks, ss_, ms, ds;
                std::getline(ss, kind, ':');
                std::getline(ss, ks, ':');
                std::getline(ss, ss_, ':');
                std::getline(ss, ms, ':');
                std::getline(ss, ds, ':');
                testing::set_coeff_mutation(testing::CoeffMutation{
                    kind == "appell" ? CoeffKind::appell : CoeffKind::harmonic,
                    static_cast<unsigned>(std::stoul(ks)), static_cast<unsigned>(std::stoul(ss_)),
                    static_cast<unsigned>(std::stoul(ms)), Rational::from_string(ds)});
            }
            opt.m_list = ver_m;
            VerificationReport rep = run_suite(ver_suite, opt);
            rep.params["suite"] = ver_suite;
            rep.params["kmax"] = std::to_string(opt.kmax);
            rep.params["samples"] = std::to_string(opt.mc_samples);
            rep.params["n"] = std::to_string(opt.numeric_n);
            rep.params["tol_bessel"] = sci(opt.tol_bessel);
            rep.params["tol_ex31"] = sci(opt.tol_ex31);
            rep.params["tol_ex32"] = sci(opt.tol_ex32);
            rep.params["tol_ex33"] = sci(opt.tol_ex33);
            rep.params["tol_riesz"] = sci(opt.tol_riesz);
            if (!ver_mutate.empty()) rep.params["mutate"] = ver_mutate;
            {
                std::string mlist;
                for (unsigned m : ver_m) mlist += (mlist.empty() ? "" : ",") + std::to_string(m);
                rep.params["m"] = mlist.empty() ? "default" : mlist;
            }
            std::string json = rep.to_json();
            if (ver_out.empty())
                std::cout << json << "\n";
            else
                std::ofstream(ver_out) << json << "\n";
            std::cerr << "suites: " << rep.passes() << " pass, " << rep.failures() << " fail\n";
            return rep.failures() == 0 ? 0 : 1;
        }

        if (pw->parsed()) {
            UnivariatePoly a0 = univariate_arg(pw_a0, pw_m, "--a0");
            UnivariatePoly a1 = univariate_arg(pw_a1, pw_m, "--a1");
            CliffordPolynomial rec = planewave_reconstruct(a0, a1, pw_m);
            CliffordPolynomial ref = hgck_extend(a0, a1, pw_m);
            nlohmann::json j;
            j["reconstruction"] = polynomial_to_json(rec);
            j["text"] = print_polynomial(rec);
            j["matches_hgck"] = (rec == ref);
            if (pw_mc) {
                if (pw_point.empty())
                    throw CLI::ValidationError("--point", "required with --mc");
                std::vector<double> point = parse_point(pw_point, pw_m);
                McResult mc = planewave_mc(a0, a1, pw_m, pw_samples, pw_seed, point);
                CliffordElement exact = evaluate(ref, parse_rational_point(pw_point, pw_m));
                nlohmann::json jm;
                jm["samples"] = pw_samples;
                jm["seed"] = pw_seed;
                nlohmann::json est = nlohmann::json::object(), se = nlohmann::json::object();
                for (BladeMask mask = 0; mask < (1u << pw_m); ++mask) {
                    if (mc.estimate.coeff[mask] != 0.0 || mc.stderr_.coeff[mask] != 0.0) {
                        est[blade_token(mask)] = mc.estimate.coeff[mask];
                        se[blade_token(mask)] = mc.stderr_.coeff[mask];
                    }
                }
                jm["estimate"] = est;
                jm["stderr"] = se;
                jm["exact"] = blades_to_json(exact);
                jm["max_abs_error"] = mc.estimate.max_abs_diff(FloatMultivector::from_exact(exact));
                j["mc"] = jm;
            }
            emit(j, pw_out);
            return j["matches_hgck"].get<bool>() ? 0 : 1;
        }

        if (ex->parsed()) {
            NumericExample which = ex_which == "ex31"   ? NumericExample::ex31
                                   : ex_which == "ex32" ? NumericExample::ex32
                                                        : NumericExample::ex33;
            HermiteReading reading =
                ex_reading == "probabilists" ? HermiteReading::probabilists
                                                             : HermiteReading::physicists;
            std::vector<double> point = parse_point(ex_point, ex_m);
            double residual = example_residual(which, ex_m, point, ex_n, reading);
            FloatMultivector closed = example_closed_form(which, ex_m, point, ex_n, reading);
            FloatMultivector series = example_series_value(which, ex_m, point, ex_n);
            nlohmann::json j;
            j["which"] = ex_which;
            j["m"] = ex_m;
            j["n"] = ex_n;
            j["reading"] = ex_reading;
            j["residual"] = residual;
            nlohmann::json jc = nlohmann::json::object(), js = nlohmann::json::object();
            for (BladeMask mask = 0; mask < (1u << ex_m); ++mask) {
                if (closed.coeff[mask] != 0.0) jc[blade_token(mask)] = closed.coeff[mask];
                if (series.coeff[mask] != 0.0) js[blade_token(mask)] = series.coeff[mask];
            }
            j["closed_form"] = jc;
            j["series"] = js;
            emit(j, ex_out);
            return 0;
        }

        if (ev->parsed()) {
            CliffordPolynomial p = parse_polynomial(ev_expr, ev_m);
            if (!ev_op.empty()) {
                if (ev_op == "dx0") p = partial(p, 0);
                else if (ev_op == "dirac") p = dirac(p);
                else if (ev_op == "cr") p = cauchy_riemann(p);
                else if (ev_op == "crbar") p = cauchy_riemann_bar(p);
                else if (ev_op == "laplacian") p = laplacian(p);
                else if (ev_op.rfind("laplacian^", 0) == 0)
                    p = laplacian_power(p, static_cast<unsigned>(std::stoul(ev_op.substr(10))));
                else throw CLI::ValidationError("--op", "unknown operator '" + ev_op + "'");
            }
            if (ev_format == "text" && ev_at.empty()) {
                std::cout << print_polynomial(p) << "\n";
                return 0;
            }
            nlohmann::json j = polynomial_to_json(p);
            j["text"] = print_polynomial(p);
            if (!ev_at.empty()) {
                CliffordElement v = evaluate(p, parse_rational_point(ev_at, ev_m));
                j["value"] = element_to_json(v);
                j["value_text"] = v.str();
            }
            emit(j, ev_out);
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

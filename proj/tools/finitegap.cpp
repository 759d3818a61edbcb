// finitegap: command-line front end for spectral curves, covers, periods and theta reduction.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fg/covers.hpp"
#include "fg/lame.hpp"
#include "fg/theta.hpp"

using nlohmann::json;
using namespace fg;

namespace {

constexpr unsigned kDefaultSeed = 7;

struct Report {
    std::string command;
    json parameters = json::object();
    json tolerances = json::object();
    json outputs = json::object();
    json assertions = json::array();
    json info = json::array();

    bool check(const std::string& name, double value, double threshold) {
        bool ok = std::isfinite(value) && value < threshold;
        assertions.push_back({{"name", name}, {"value", value}, {"threshold", threshold}, {"pass", ok}});
        return ok;
    }
    bool check_exact(const std::string& name, bool ok, const std::string& detail = "") {
        assertions.push_back({{"name", name}, {"value", detail.empty() ? (ok ? "holds" : "fails") : detail}, {"threshold", "exact"}, {"pass", ok}});
        return ok;
    }
    bool passed() const {
        for (auto& a : assertions)
            if (!a["pass"].get<bool>()) return false;
        return true;
    }
    json to_json(double seconds) const {
        return {{"command", command},   {"parameters", parameters}, {"tolerances", tolerances},
                {"outputs", outputs},   {"assertions", assertions}, {"info", info},
                {"pass", passed()},     {"wall_clock_s", seconds}};
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

Eigen::VectorXcd parse_vector(const std::string& s) {
    if (!s.empty() && s.front() == '[') {
        json j = json::parse(s);
        Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
        for (std::size_t i = 0; i < j.size(); ++i)
            v(static_cast<Eigen::Index>(i)) = j[i].is_array() ? complex_from_json(j[i]) : cplx(j[i].get<double>(), 0);
        return v;
    }
    auto d = parse_doubles(s);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = d[i];
    return v;
}

CMatrix read_tau(const std::string& path) {
    json j = read_json_file(path);
    return matrix_from_json(j.is_object() ? j.at("tau") : j);
}

IntMatrix read_m(const std::string& path) {
    json j = read_json_file(path);
    return IntMatrix::from_json(j.is_object() ? j.at("m") : j);
}

CMatrix halphen_tau_display() {
    const cplx r = rho();
    CMatrix t(3, 3);
    t << 62.0 * r - 13.0, 17.0 * r + 13.0, -5.0 * r + 38.0, 17.0 * r + 13.0, 62.0 * r - 13.0, 5.0 * r - 38.0,
        -5.0 * r + 38.0, 5.0 * r - 38.0, 45.0 * r + 53.0;
    return t / 79.0;
}

// ----------------------------------------------------------------- commands

void cmd_lame(Report& rep, int n, const std::string& format, bool json_out) {
    rep.parameters = {{"n", n}, {"format", format}};
    rep.tolerances = {{"band_edge", 1e-9}};
    auto res = lame_curve(n);
    rep.outputs = res.to_json();
    // roots of the expanded curve against numeric band edges at (g2, g3) = (4, 1)
    const std::map<std::string, cplx> at{{"g2", 4.0}, {"g3", 1.0}};
    auto roots = numeric_roots(res.expanded, "z", at);
    auto edges = numeric_band_edges(n, 4.0, 1.0);
    double worst = roots.size() == edges.size() ? 0.0 : INFINITY;
    for (auto r : roots) {
        double best = INFINITY;
        for (auto e : edges) best = std::min(best, std::abs(r - e));
        worst = std::max(worst, best / std::max(1.0, std::abs(r)));
    }
    rep.check("expanded roots vs band edges at (4,1)", worst, 1e-9);
    if (!json_out) std::cout << (format == "latex" ? res.latex() : res.to_json().dump(2)) << "\n";
}

void cmd_covers_verify(Report& rep, const std::string& id, bool all) {
    rep.parameters = {{"case", id}, {"all", all}};
    const CoverCatalog cat = CoverCatalog::load(default_catalog_path(), false);
    std::vector<std::string> ids = all ? cat.ids() : std::vector<std::string>{id};
    if (!all && !cat.contains(id)) throw CLI::ValidationError("--case", "unknown catalog entry '" + id + "'");
    json rows = json::array();
    for (auto& e : ids) {
        const CoverMap& c = cat.lookup(e);
        auto v1 = verify_cover(c);
        auto v2 = verify_differential(c);
        rep.check_exact(e + ": verify_cover", v1.ok, v1.message);
        rep.check_exact(e + ": verify_differential", v2.ok, v2.message);
        rows.push_back({{"id", e}, {"cover", v1.ok}, {"differential", v2.ok}});
    }
    rep.outputs = {{"entries", rows}, {"count", ids.size()}};
    if (all) rep.check("catalog size shortfall (13 - count)", std::max(0.0, 13.0 - static_cast<double>(ids.size())), 0.5);
}

void cmd_covers_search(Report& rep, const std::string& file, const std::string& templ, int max_degree,
                       const std::string& g3) {
    rep.parameters = {{"curve", file}, {"template", templ}, {"max_degree", max_degree}, {"g3", g3}};
    json cj = read_json_file(file);
    PlaneCurve pc = PlaneCurve::from_json(cj.contains("curve") ? cj["curve"] : cj);
    if (!g3.empty()) pc.p = pc.p.subs("g3", MultiPoly(parse_rational(g3)));
    auto curve = std::make_shared<const PlaneCurve>(pc);
    auto found = search_cover(curve, templ, SearchBounds{max_degree});
    json rows = json::array();
    for (auto& c : found) {
        rows.push_back(c.to_json());
        rep.check_exact(c.id + ": verified", verify_cover(c).ok && verify_differential(c).ok);
    }
    rep.outputs = {{"covers", rows}, {"count", found.size()}};
}

void cmd_periods_genus2(Report& rep, const std::vector<double>& xi) {
    if (xi.size() != 3) throw CLI::ValidationError("--xi", "expects three values a,b,c");
    rep.parameters = {{"xi", xi}};
    rep.tolerances = {{"pipeline", 1e-9}, {"omega22", 1e-11}, {"shape", 1e-9}};
    auto P = genus2_periods(xi[0], xi[1], xi[2]);
    rep.outputs = P.to_json();
    rep.check("pipeline gap", P.pipeline_gap, 1e-9);
    rep.check("|Omega_22|", std::abs(P.data.A(1, 1)), 1e-11);
    rep.check("block shape residual", P.shape_residual, 1e-9);
    rep.check("tau symmetry", P.data.residuals.symmetry, 1e-9);
    rep.check("-min eig Im tau", -P.data.residuals.positivity, 0.0);
}

void cmd_periods_halphen(Report& rep, double l1, double l2) {
    rep.parameters = {{"lambda1", l1}, {"lambda2", l2}, {"ratio", l2 * l2 / (l1 * l1)}};
    rep.tolerances = {{"ij_relation", 1e-10}, {"x_relations", 1e-10}, {"bilinear", 1e-9}, {"tau", 1e-8}};
    auto P = genus3_periods(l1, l2);
    rep.outputs = P.to_json();
    rep.check("x-vector relations", P.xrel_residual, 1e-10);
    rep.check("Riemann bilinear", P.data.residuals.bilinear, 1e-9);
    rep.check("tau symmetry", P.data.residuals.symmetry, 1e-9);
    rep.check("-min eig Im tau", -P.data.residuals.positivity, 0.0);
    rep.check("I + J(1+2rho)/3", P.ij_ratio_residual, 1e-10);
    rep.check("tau vs closed form", max_abs(P.data.tau - halphen_tau_display()), 1e-8);
}

void cmd_theta_eval(Report& rep, const std::string& vs, const std::string& tau_file, const std::string& ch,
                    double eps) {
    rep.parameters = {{"v", vs}, {"tau_file", tau_file}, {"char", ch}};
    rep.tolerances = {{"eps", eps}};
    CMatrix tau = read_tau(tau_file);
    Eigen::VectorXcd v = parse_vector(vs);
    ThetaChar c = ch.empty() ? ThetaChar::zero(static_cast<int>(tau.rows())) : ThetaChar::parse(ch);
    cplx val = theta(v, tau, c, eps, Exec::parallel);
    cplx ref = theta(v, tau, c, eps, Exec::serial);
    rep.outputs = {{"value", complex_json(val)}, {"radius", theta_radius(v, tau, eps)}, {"char", c.str()}};
    rep.check("parallel vs serial", std::abs(val - ref) / std::max(1.0, std::abs(ref)), 1e-12);
}

void cmd_reduce(Report& rep, const std::string& m_file, const std::string& tau_file) {
    rep.parameters = {{"m_file", m_file}, {"tau_file", tau_file}};
    rep.tolerances = {{"relation", 1e-8}};
    IntMatrix m = read_m(m_file);
    CMatrix tau = read_tau(tau_file);
    auto cert = reduce(tau, m);
    rep.outputs = cert.to_json();
    rep.check_exact("standard form", is_standard_form(cert.standard_form), cert.standard_form.str());
    rep.check("relation residual", cert.relation_residual, 1e-8);
}

void cmd_check_all(Report& rep, unsigned seed, double eps) {
    rep.parameters = {{"seed", seed}};
    rep.tolerances = {{"eps", eps}, {"identity", 1e-10}, {"periods", 1e-9}};
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= 5; ++n) {
        Report sub;
        cmd_lame(sub, n, "json", true);
        for (auto& a : sub.assertions) rep.assertions.push_back({{"name", "lame n=" + std::to_string(n) + ": " + a["name"].get<std::string>()},
                                                                  {"value", a["value"]}, {"threshold", a["threshold"]}, {"pass", a["pass"]}});
    }
    {
        Report sub;
        cmd_covers_verify(sub, "", true);
        for (auto& a : sub.assertions) rep.assertions.push_back(a);
    }
    auto P = genus2_periods(1, 2, 3);
    rep.check("genus2 pipeline gap", P.pipeline_gap, 1e-9);
    rep.check("genus2 block shape", P.shape_residual, 1e-9);
    auto red = verify_genus2_reduction(1, 2, 3, 100, eps, seed);
    rep.check("genus2 theta identity", red.max_residual, 1e-10);
    auto H = genus3_periods(std::sqrt(27.0), std::sqrt(5.0));
    rep.check("halphen x-relations", H.xrel_residual, 1e-10);
    rep.check("halphen bilinear", H.data.residuals.bilinear, 1e-9);
    // the relation M holds where lambda2^2 / lambda1^2 = 27/5
    auto Hc = genus3_periods(std::sqrt(5.0), std::sqrt(27.0));
    auto chain = genus3_reduction_chain(Hc.data.tau);
    rep.check_exact("genus3 stage-1 standard form", is_standard_form(chain.certificates[0].standard_form),
                    chain.certificates[0].standard_form.str());
    rep.check("genus3 stage-1 relation", chain.certificates[0].relation_residual, 1e-8);
    // theta evenness and quasi-periodicity on seeded random samples
    std::uniform_real_distribution<double> u(-1, 1);
    double even = 0, quasi = 0;
    for (int s = 0; s < 100; ++s) {
        const int g = 1 + s % 3;
        CMatrix X(g, g), Y(g, g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) X(i, j) = u(rng), Y(i, j) = u(rng) * 0.3;
        CMatrix tau = (X + X.transpose()) / 2.0 + cplx(0, 1) * ((Y * Y.adjoint()).real().cast<cplx>() + CMatrix::Identity(g, g));
        Eigen::VectorXcd v(g);
        for (int i = 0; i < g; ++i) v(i) = cplx(u(rng), 0.3 * u(rng));
        ThetaChar z = ThetaChar::zero(g);
        cplx t = theta(v, tau, z, eps, Exec::serial);
        even = std::max(even, std::abs(t - theta(-v, tau, z, eps, Exec::serial)) / std::max(1.0, std::abs(t)));
        const int k = s % g;
        Eigen::VectorXcd v1 = v + tau.col(k);
        cplx f = std::exp(cplx(0, -std::numbers::pi) * tau(k, k) - cplx(0, 2 * std::numbers::pi) * v(k));
        quasi = std::max(quasi, std::abs(theta(v1, tau, z, eps, Exec::serial) - f * t) / std::max(1.0, std::abs(t)));
    }
    rep.check("theta evenness", even, 1e-10);
    rep.check("theta quasi-periodicity", quasi, 1e-10);
    rep.info.push_back({{"halphen I + J(1+2rho)/3 at ratio 5/27", H.ij_ratio_residual}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finitegap: spectral curves, elliptic covers, periods and theta reduction"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false;
    app.add_flag("--json", json_out, "write the run report as JSON to stdout");
    double eps = 1e-14;
    app.add_option("--eps", eps, "theta truncation tolerance")->capture_default_str();

    int n = 0;
    std::string format = "json";
    auto* lame = app.add_subcommand("lame", "Lame spectral curve factors");
    lame->add_option("--n", n, "Lame index")->required()->check(CLI::Range(1, kMaxLameN));
    lame->add_option("--format", format, "json or latex")->check(CLI::IsMember({"json", "latex"}));

    auto* covers = app.add_subcommand("covers", "elliptic cover catalog and search");
    covers->require_subcommand(1);
    std::string case_id;
    bool all = false;
    auto* cverify = covers->add_subcommand("verify", "verify catalog entries");
    auto* opt_case = cverify->add_option("--case", case_id, "catalog id");
    auto* opt_all = cverify->add_flag("--all", all, "every entry");
    opt_case->excludes(opt_all);
    std::string curve_file, templ, g3;
    int max_degree = 4;
    auto* csearch = covers->add_subcommand("search", "template search for covers");
    csearch->add_option("--curve", curve_file, "curve JSON file")->required()->check(CLI::ExistingFile);
    csearch->add_option("--template", templ, "cubic-in-z, linear-in-w or rational-z")
        ->required()
        ->check(CLI::IsMember({"cubic-in-z", "linear-in-w", "rational-z"}));
    csearch->add_option("--max-degree", max_degree, "degree bound")->capture_default_str()->check(CLI::NonNegativeNumber);
    csearch->add_option("--g3", g3, "substitute a rational value for g3");

    auto* periods = app.add_subcommand("periods", "period matrices");
    periods->require_subcommand(1);
    std::string xi = "1,2,3";
    auto* pg2 = periods->add_subcommand("genus2", "genus-2 cover of the Lame n=2 family");
    pg2->add_option("--xi", xi, "xi1,xi2,xi3")->capture_default_str();
    double l1 = std::sqrt(27.0), l2 = std::sqrt(5.0);
    std::string hg3;
    auto* phal = periods->add_subcommand("halphen", "trigonal genus-3 curve");
    phal->add_option("--lambda1", l1, "real branch points +-lambda1")->capture_default_str();
    phal->add_option("--lambda2", l2, "imaginary branch points +-i lambda2")->capture_default_str();
    phal->add_option("--g3", hg3, "use the Halphen curve with this g3 instead of lambda1, lambda2");

    auto* th = app.add_subcommand("theta", "Riemann theta functions");
    th->require_subcommand(1);
    std::string v, tau_file, ch;
    auto* teval = th->add_subcommand("eval", "evaluate theta[a;b](v, tau)");
    teval->add_option("--v", v, "comma list of reals or JSON [[re,im],...]")->required();
    teval->add_option("--tau-file", tau_file, "tau JSON")->required()->check(CLI::ExistingFile);
    teval->add_option("--char", ch, "characteristic a1,..;b1,..");

    std::string m_file;
    auto* red = app.add_subcommand("reduce", "Martens reduction of tau by a relation m");
    red->add_option("--m-file", m_file, "relation JSON")->required()->check(CLI::ExistingFile);
    red->add_option("--tau-file", tau_file, "tau JSON")->required()->check(CLI::ExistingFile);

    auto* chk = app.add_subcommand("check", "self-checks");
    chk->require_subcommand(1);
    unsigned seed = kDefaultSeed;
    auto* chkall = chk->add_subcommand("all", "run every consistency check");
    chkall->add_option("--seed", seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    Report rep;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*lame) {
            rep.command = "lame";
            cmd_lame(rep, n, format, json_out);
        } else if (*cverify) {
            rep.command = "covers verify";
            if (!all && case_id.empty()) throw CLI::ValidationError("covers verify", "needs --case ID or --all");
            cmd_covers_verify(rep, case_id, all);
        } else if (*csearch) {
            rep.command = "covers search";
            cmd_covers_search(rep, curve_file, templ, max_degree, g3);
        } else if (*pg2) {
            rep.command = "periods genus2";
            cmd_periods_genus2(rep, parse_doubles(xi));
        } else if (*phal) {
            rep.command = "periods halphen";
            if (!hg3.empty()) {
                const double g = std::stod(hg3);
                if (g <= 0) throw CLI::ValidationError("--g3", "must be positive");
                l1 = std::sqrt(135 * g) / 2;
                l2 = 5 * std::sqrt(g) / 2;
            }
            cmd_periods_halphen(rep, l1, l2);
        } else if (*teval) {
            rep.command = "theta eval";
            cmd_theta_eval(rep, v, tau_file, ch, eps);
        } else if (*red) {
            rep.command = "reduce";
            cmd_reduce(rep, m_file, tau_file);
        } else if (*chkall) {
            rep.command = "check all";
            cmd_check_all(rep, seed, eps);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        rep.check_exact("run", false, e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (json_out) {
        std::cout << rep.to_json(secs).dump(2) << "\n";
    } else {
        if (rep.command != "lame") std::cout << rep.outputs.dump(2) << "\n";
        for (auto& a : rep.assertions)
            std::cout << (a["pass"].get<bool>() ? "PASS " : "FAIL ") << a["name"].get<std::string>() << ": "
                      << a["value"].dump() << " (threshold " << a["threshold"].dump() << ")\n";
    }
    return rep.passed() ? 0 : 1;
}

// dtnlab command-line front end.  Talks to the shared library exclusively
// through the C API in dtnlab/dtnlab.h and emits deterministic CSV/JSON
// (17-significant-digit decimals, LF endings, stable key order).
//
// Exit codes: 0 success, 2 configuration error, 3 mathematical identity
// violation (bs-check inequality).

#include <dtnlab/dtnlab.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIdentity = 3;
constexpr double kPi = 3.14159265358979323846;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check(dtnlab_status s) {
    if (s == DTNLAB_OK) return;
    std::string msg = dtnlab_status_message(s);
    const char* detail = dtnlab_last_error();
    if (detail && *detail) msg += std::string(": ") + detail;
    throw ConfigError(msg);
}

struct DomainSpec {
    std::string name = "disk";
    double radius = 1.0;
    double l1 = 1.0;
    double l2 = 1.0;

    using Handle = std::unique_ptr<dtnlab_domain, void (*)(dtnlab_domain*)>;
    Handle make() const {
        dtnlab_domain* d = nullptr;
        if (name == "disk")
            d = dtnlab_domain_disk(radius);
        else if (name == "ball")
            d = dtnlab_domain_ball(radius);
        else if (name == "rect" || name == "rectangle")
            d = dtnlab_domain_rectangle(l1, l2);
        else if (name == "hemisphere")
            d = dtnlab_domain_hemisphere();
        else
            throw ConfigError("unknown domain: " + name);
        if (!d) throw ConfigError(std::string("domain construction failed: ") + dtnlab_last_error());
        return Handle(d, &dtnlab_domain_free);
    }
    json echo() const {
        json j{{"domain", name}};
        if (name == "disk" || name == "ball") j["radius"] = radius;
        if (name == "rect" || name == "rectangle") {
            j["l1"] = l1;
            j["l2"] = l2;
        }
        return j;
    }
};

struct WindowSpec {
    std::vector<double> a;      // --a1 --a2
    std::vector<double> theta;  // --theta1 --theta2
    bool use_theta = false;

    void resolve() {
        if (!theta.empty() && !a.empty())
            throw ConfigError("give either --a1/--a2 or --theta1/--theta2, not both");
        use_theta = !theta.empty();
    }
};

struct Output {
    std::string path;
    void write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ConfigError("cannot open output file: " + path);
        out << payload;
    }
};

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string render_json(json doc) {
    return doc.dump(2) + "\n";
}

json base_doc(const json& config) {
    return json{{"config", config},
                {"result", json::object()},
                {"references", json::object()},
                {"diagnostics", json::object()}};
}

// ---- kappa ----

int run_kappa(int dim, double a1, double a2, int steps, bool with_halfline, double tol_rel,
              const std::string& format, const Output& out) {
    if (steps < 1) throw ConfigError("--steps must be >= 1");
    if (steps == 1 && a1 != a2) throw ConfigError("--steps 1 requires --a1 == --a2");
    if (a1 > a2) throw ConfigError("--a1 must be <= --a2");
    Stopwatch clock;

    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = steps == 1 ? a1 : a1 + (a2 - a1) * i / (steps - 1);

    struct Row {
        double a, quadrature, closed = 0.0, halfline = 0.0;
    };
    std::vector<Row> rows;
    for (const double a : grid) {
        Row r{a, 0.0, 0.0, 0.0};
        check(dtnlab_kappa_quadrature(a, dim, tol_rel, &r.quadrature));
        if (dim == 3) check(dtnlab_kappa_closed_form_d3(a, &r.closed));
        if (with_halfline) check(dtnlab_kappa_halfline(a, dim, 0.05, &r.halfline));
        rows.push_back(r);
    }

    const json config{{"command", "kappa"},   {"dim", dim},
                      {"a1", a1},             {"a2", a2},
                      {"steps", steps},       {"halfline", with_halfline},
                      {"tol_rel", tol_rel},   {"format", format}};
    if (format == "csv") {
        std::string s = "# dtnlab " + std::string(dtnlab_version()) + "\n";
        s += "# config: command=kappa dim=" + std::to_string(dim) + " a1=" + fmt17(a1) +
             " a2=" + fmt17(a2) + " steps=" + std::to_string(steps) +
             " halfline=" + (with_halfline ? std::string("1") : std::string("0")) +
             " tol_rel=" + fmt17(tol_rel) + "\n";
        s += "a,kappa_quadrature";
        if (dim == 3) s += ",kappa_closed_d3";
        if (with_halfline) s += ",kappa_halfline";
        s += "\n";
        for (const Row& r : rows) {
            s += fmt17(r.a) + "," + fmt17(r.quadrature);
            if (dim == 3) s += "," + fmt17(r.closed);
            if (with_halfline) s += "," + fmt17(r.halfline);
            s += "\n";
        }
        out.write(s);
        return kExitOk;
    }
    json doc = base_doc(config);
    json table = json::array();
    for (const Row& r : rows) {
        json jr{{"a", r.a}, {"kappa_quadrature", r.quadrature}};
        if (dim == 3) jr["kappa_closed_d3"] = r.closed;
        if (with_halfline) jr["kappa_halfline"] = r.halfline;
        table.push_back(jr);
    }
    doc["result"]["rows"] = table;
    doc["diagnostics"] = {{"pole_warnings", 0}, {"runtime_ms", clock.ms()}};
    out.write(render_json(doc));
    return kExitOk;
}

// ---- spectrum ----

int run_spectrum(const DomainSpec& dom, double lambda, int n_max, const std::string& format,
                 const Output& out) {
    Stopwatch clock;
    auto domain = dom.make();
    dtnlab_spectrum* spec = nullptr;
    check(dtnlab_spectrum_compute(domain.get(), lambda, n_max, &spec));
    std::unique_ptr<dtnlab_spectrum, void (*)(dtnlab_spectrum*)> guard(spec,
                                                                       &dtnlab_spectrum_free);

    const json config{{"command", "spectrum"}, {"domain", dom.echo()},
                      {"lambda", lambda},      {"n_max", n_max},
                      {"format", format}};
    const long size = dtnlab_spectrum_size(spec);
    if (format == "csv") {
        std::string s = "# dtnlab " + std::string(dtnlab_version()) + "\n";
        s += "# config: command=spectrum domain=" + dom.name + " lambda=" + fmt17(lambda) +
             " n_max=" + std::to_string(n_max) + "\n";
        s += "index,multiplicity,beta\n";
        for (long i = 0; i < size; ++i) {
            int index = 0, mult = 0, pole = 0;
            double beta = 0.0;
            check(dtnlab_spectrum_branch(spec, i, &index, &mult, &beta, &pole));
            s += std::to_string(index) + "," + std::to_string(mult) + "," +
                 (pole ? std::string("POLE") : fmt17(beta)) + "\n";
        }
        out.write(s);
        return kExitOk;
    }
    json doc = base_doc(config);
    json rows = json::array();
    for (long i = 0; i < size; ++i) {
        int index = 0, mult = 0, pole = 0;
        double beta = 0.0;
        check(dtnlab_spectrum_branch(spec, i, &index, &mult, &beta, &pole));
        json row{{"index", index}, {"multiplicity", mult}};
        if (pole)
            row["beta"] = "POLE";
        else
            row["beta"] = beta;
        rows.push_back(row);
    }
    doc["result"]["branches"] = rows;
    doc["diagnostics"] = {{"pole_warnings", 0}, {"runtime_ms", clock.ms()}};
    out.write(render_json(doc));
    return kExitOk;
}

// ---- count ----

int run_count(const DomainSpec& dom, const std::vector<double>& lambdas, WindowSpec window,
              const Output& out) {
    window.resolve();
    if (lambdas.empty()) throw ConfigError("--lambda required");
    Stopwatch clock;
    auto domain = dom.make();

    json config{{"command", "count"}, {"domain", dom.echo()}, {"lambda", lambdas}};
    if (window.use_theta)
        config["window"] = {{"theta1", window.theta[0]}, {"theta2", window.theta[1]}};
    else
        config["window"] = {{"a1", window.a[0]}, {"a2", window.a[1]}};

    json doc = base_doc(config);
    json reports = json::array();
    int warnings = 0;
    for (const double lambda : lambdas) {
        dtnlab_count_report rep{};
        if (window.use_theta)
            check(dtnlab_count_cayley(domain.get(), lambda, window.theta[0], window.theta[1],
                                      &rep));
        else
            check(dtnlab_count_window(domain.get(), lambda, window.a[0], window.a[1], &rep));
        warnings += rep.pole_warnings;
        reports.push_back(json{{"lambda", lambda},
                               {"lambda_used", rep.lambda_used},
                               {"count", rep.count},
                               {"weyl_prediction", rep.weyl_prediction},
                               {"rel_discrepancy", rep.rel_discrepancy}});
    }
    doc["result"]["reports"] = reports;
    doc["references"]["weyl_prediction"] =
        "(kappa(a2) - kappa(a1)) * vol'(boundary) * lambda^(d-1)";
    doc["diagnostics"] = {{"pole_warnings", warnings}, {"runtime_ms", clock.ms()}};
    out.write(render_json(doc));
    return kExitOk;
}

// ---- bs-check ----

int run_bs_check(const DomainSpec& dom, double lambda, WindowSpec window, const Output& out) {
    window.resolve();
    Stopwatch clock;
    auto domain = dom.make();
    double a1, a2;
    if (window.use_theta) {
        a1 = dtnlab_cayley_a_from_theta(window.theta[0]);
        a2 = dtnlab_cayley_a_from_theta(window.theta[1]);
    } else {
        a1 = window.a[0];
        a2 = window.a[1];
    }
    dtnlab_bs_report rep{};
    check(dtnlab_birman_schwinger_check(domain.get(), lambda, a1, a2, &rep));

    json doc = base_doc(json{{"command", "bs-check"},
                             {"domain", dom.echo()},
                             {"lambda", lambda},
                             {"window", {{"a1", a1}, {"a2", a2}}}});
    doc["result"] = {{"lhs", rep.lhs}, {"rhs", rep.rhs}, {"equal", rep.equal != 0}};
    doc["references"]["identity"] = "N(lambda; a1, a2) = N_h^-(a2) - N_h^-(a1), h = 1/lambda";
    doc["diagnostics"] = {{"pole_warnings", rep.pole_warnings}, {"runtime_ms", clock.ms()}};
    out.write(render_json(doc));
    return rep.equal ? kExitOk : kExitIdentity;
}

// ---- weyl-fit ----

int run_weyl_fit(const DomainSpec& dom, const std::vector<double>& lambdas, WindowSpec window,
                 bool robin_mode, double robin_a, const Output& out) {
    Stopwatch clock;
    auto domain = dom.make();
    if (robin_mode) {
        if (lambdas.size() != 1)
            throw ConfigError("--robin-a mode expects a single --lambda center");
        double estimate = 0.0, reference = 0.0;
        check(dtnlab_robin_second_term(domain.get(), robin_a, lambdas[0], 11, 0.05, &estimate,
                                       &reference));
        double bulk_ratio = 0.0;
        check(dtnlab_robin_bulk_ratio(domain.get(), robin_a, 1.0 / lambdas[0], &bulk_ratio));
        json doc = base_doc(json{{"command", "weyl-fit"},
                                 {"domain", dom.echo()},
                                 {"mode", "robin"},
                                 {"a", robin_a},
                                 {"lambda", lambdas[0]}});
        doc["result"] = {{"second_term", estimate}, {"bulk_ratio", bulk_ratio}};
        doc["references"] = {{"second_term", reference},
                             {"bulk_ratio", 1.0},
                             {"note", "window-averaged (11 samples, +-5%) bulk-subtracted term"}};
        doc["diagnostics"] = {{"pole_warnings", 0}, {"runtime_ms", clock.ms()}};
        out.write(render_json(doc));
        return kExitOk;
    }

    window.resolve();
    double a1, a2;
    if (window.use_theta) {
        a1 = dtnlab_cayley_a_from_theta(window.theta[0]);
        a2 = dtnlab_cayley_a_from_theta(window.theta[1]);
    } else {
        if (window.a.empty()) throw ConfigError("--a1/--a2 or --theta1/--theta2 required");
        a1 = window.a[0];
        a2 = window.a[1];
    }
    dtnlab_weyl_fit_report rep{};
    check(dtnlab_weyl_fit(domain.get(), a1, a2, lambdas.data(), lambdas.size(), &rep));
    json doc = base_doc(json{{"command", "weyl-fit"},
                             {"domain", dom.echo()},
                             {"mode", "dtn"},
                             {"lambda", lambdas},
                             {"window", {{"a1", a1}, {"a2", a2}}}});
    doc["result"] = {{"fitted_power", rep.fitted_power},
                     {"fitted_coefficient", rep.fitted_coefficient}};
    doc["references"] = {{"power", rep.reference_power},
                         {"coefficient", rep.reference_coefficient}};
    doc["diagnostics"] = {{"pole_warnings", 0}, {"runtime_ms", clock.ms()}};
    out.write(render_json(doc));
    return kExitOk;
}

// ---- measure ----

int run_measure(const DomainSpec& dom, double lambda, int bins, double theta1, double theta2,
                const Output& out) {
    Stopwatch clock;
    auto domain = dom.make();
    std::vector<double> masses(bins > 0 ? bins : 1), references(bins > 0 ? bins : 1);
    check(dtnlab_measure_histogram(domain.get(), lambda, theta1, theta2, bins, masses.data(),
                                   references.data()));
    json doc = base_doc(json{{"command", "measure"},
                             {"domain", dom.echo()},
                             {"lambda", lambda},
                             {"bins", bins},
                             {"theta1", theta1},
                             {"theta2", theta2}});
    json rows = json::array();
    for (int i = 0; i < bins; ++i) {
        const double lo = theta1 + (theta2 - theta1) * i / bins;
        const double hi = theta1 + (theta2 - theta1) * (i + 1) / bins;
        rows.push_back(json{{"theta_lo", lo},
                            {"theta_hi", hi},
                            {"mass", masses[i]},
                            {"reference", references[i]}});
    }
    doc["result"]["bins"] = rows;
    doc["references"]["reference_density"] =
        "(2 pi)^(d-1) * vol'(boundary) * d(kappa-tilde)";
    doc["diagnostics"] = {{"pole_warnings", 0}, {"runtime_ms", clock.ms()}};
    out.write(render_json(doc));
    return kExitOk;
}

// ---- dirichlet-limit ----

int run_dirichlet_limit(const DomainSpec& dom, double h, double a_proxy, const Output& out) {
    Stopwatch clock;
    auto domain = dom.make();
    dtnlab_dirichlet_report rep{};
    check(dtnlab_dirichlet_limit_check(domain.get(), h, a_proxy, &rep));
    json doc = base_doc(json{{"command", "dirichlet-limit"},
                             {"domain", dom.echo()},
                             {"h", h},
                             {"a_proxy", a_proxy}});
    doc["result"] = {{"robin_count", rep.robin_count},
                     {"dirichlet_count", rep.dirichlet_count},
                     {"equal", rep.equal != 0}};
    doc["references"]["identity"] =
        "lim_{a -> -inf} N_h^-(a) = #{lambda_j <= 1/h Dirichlet frequencies}";
    doc["diagnostics"] = {{"pole_warnings", rep.threshold_warning ? 1 : 0},
                          {"runtime_ms", clock.ms()}};
    out.write(render_json(doc));
    return rep.equal ? kExitOk : kExitIdentity;
}

void add_domain_flags(CLI::App* cmd, DomainSpec& dom) {
    cmd->add_option("--domain", dom.name, "disk|ball|rect|hemisphere")->capture_default_str();
    cmd->add_option("--radius", dom.radius, "disk/ball radius")->capture_default_str();
    cmd->add_option("--l1", dom.l1, "rectangle side 1")->capture_default_str();
    cmd->add_option("--l2", dom.l2, "rectangle side 2")->capture_default_str();
}

void add_window_flags(CLI::App* cmd, WindowSpec& window) {
    cmd->add_option("--a1", [&window](const CLI::results_t& res) {
           window.a.resize(2);
           return CLI::detail::lexical_cast(res[0], window.a[0]);
       },
       "window lower endpoint (real line)");
    cmd->add_option("--a2", [&window](const CLI::results_t& res) {
           if (window.a.size() < 2) window.a.resize(2);
           return CLI::detail::lexical_cast(res[0], window.a[1]);
       },
       "window upper endpoint (real line)");
    cmd->add_option("--theta1", [&window](const CLI::results_t& res) {
           window.theta.resize(2);
           return CLI::detail::lexical_cast(res[0], window.theta[0]);
       },
       "window lower endpoint (circle, radians)");
    cmd->add_option("--theta2", [&window](const CLI::results_t& res) {
           if (window.theta.size() < 2) window.theta.resize(2);
           return CLI::detail::lexical_cast(res[0], window.theta[1]);
       },
       "window upper endpoint (circle, radians)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dtnlab: semiclassical Dirichlet-to-Neumann spectral asymptotics"};
    app.require_subcommand(1);

    // kappa
    auto* kappa_cmd = app.add_subcommand("kappa", "tabulate the two-term Weyl coefficient");
    int dim = 3, steps = 41;
    double ka1 = -2.0, ka2 = 2.0, tol_rel = 1e-10;
    bool with_halfline = false, regen_golden = false;
    std::string format = "csv", out_path;
    kappa_cmd->add_option("--dim", dim, "manifold dimension (>= 2)")->capture_default_str();
    kappa_cmd->add_option("--a1", ka1, "grid start")->capture_default_str();
    kappa_cmd->add_option("--a2", ka2, "grid end")->capture_default_str();
    kappa_cmd->add_option("--steps", steps, "grid size")->capture_default_str();
    kappa_cmd->add_flag("--with-halfline", with_halfline,
                        "append the half-line boundary-layer column");
    kappa_cmd->add_flag("--regen-golden", regen_golden,
                        "use the canonical golden-grid configuration (d=3, [-2,2], 41 steps)");
    kappa_cmd->add_option("--tol-rel", tol_rel, "quadrature relative tolerance")
        ->capture_default_str();
    kappa_cmd->add_option("--format", format, "csv|json")->capture_default_str();
    kappa_cmd->add_option("--out", out_path, "output path (default stdout)");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "enumerate DtN branches");
    DomainSpec sp_dom;
    double sp_lambda = 1.0;
    int sp_nmax = 8;
    std::string sp_format = "csv", sp_out;
    add_domain_flags(spectrum_cmd, sp_dom);
    spectrum_cmd->add_option("--lambda", sp_lambda, "frequency")->capture_default_str();
    spectrum_cmd->add_option("--n-max", sp_nmax, "largest angular index")->capture_default_str();
    spectrum_cmd->add_option("--format", sp_format, "csv|json")->capture_default_str();
    spectrum_cmd->add_option("--out", sp_out, "output path");

    // count
    auto* count_cmd = app.add_subcommand("count", "DtN window counts with Weyl references");
    DomainSpec ct_dom;
    std::vector<double> ct_lambdas;
    WindowSpec ct_window;
    std::string ct_out;
    add_domain_flags(count_cmd, ct_dom);
    count_cmd->add_option("--lambda", ct_lambdas, "frequency (repeatable)");
    add_window_flags(count_cmd, ct_window);
    count_cmd->add_option("--out", ct_out, "output path");

    // bs-check
    auto* bs_cmd = app.add_subcommand("bs-check", "exact DtN/Robin counting identity");
    DomainSpec bs_dom;
    double bs_lambda = 1.0;
    WindowSpec bs_window;
    std::string bs_out;
    add_domain_flags(bs_cmd, bs_dom);
    bs_cmd->add_option("--lambda", bs_lambda, "frequency")->capture_default_str();
    add_window_flags(bs_cmd, bs_window);
    bs_cmd->add_option("--out", bs_out, "output path");

    // weyl-fit
    auto* wf_cmd = app.add_subcommand("weyl-fit", "power-law fit / Robin second term");
    DomainSpec wf_dom;
    std::vector<double> wf_lambdas;
    WindowSpec wf_window;
    double wf_robin_a = 0.0;
    bool wf_robin_set = false;
    std::string wf_out;
    add_domain_flags(wf_cmd, wf_dom);
    wf_cmd->add_option("--lambda", wf_lambdas, "frequencies (repeatable; >= 4 for the fit)");
    add_window_flags(wf_cmd, wf_window);
    wf_cmd->add_option("--robin-a", [&wf_robin_a, &wf_robin_set](const CLI::results_t& res) {
        wf_robin_set = true;
        return CLI::detail::lexical_cast(res[0], wf_robin_a);
    },
    "extract the Robin second term at this boundary parameter");
    wf_cmd->add_option("--out", wf_out, "output path");

    // measure
    auto* ms_cmd = app.add_subcommand("measure", "limiting-measure histogram");
    DomainSpec ms_dom;
    double ms_lambda = 100.0, ms_theta1 = 0.3, ms_theta2 = 2.0 * kPi - 0.3;
    int ms_bins = 32;
    std::string ms_out;
    add_domain_flags(ms_cmd, ms_dom);
    ms_cmd->add_option("--lambda", ms_lambda, "frequency")->capture_default_str();
    ms_cmd->add_option("--bins", ms_bins, "number of bins (>= 8)")->capture_default_str();
    ms_cmd->add_option("--theta1", ms_theta1, "histogram start angle")->capture_default_str();
    ms_cmd->add_option("--theta2", ms_theta2, "histogram end angle")->capture_default_str();
    ms_cmd->add_option("--out", ms_out, "output path");

    // dirichlet-limit
    auto* dl_cmd = app.add_subcommand("dirichlet-limit", "a -> -inf versus Dirichlet count");
    DomainSpec dl_dom;
    double dl_h = 0.2, dl_proxy = -1e6;
    std::string dl_out;
    dl_cmd->set_help_flag("--help", "print help");  // frees -h/--h for the parameter
    add_domain_flags(dl_cmd, dl_dom);
    dl_cmd->add_option("--h", dl_h, "semiclassical parameter")->capture_default_str();
    dl_cmd->add_option("--a-proxy", dl_proxy, "finite stand-in for a = -inf")
        ->capture_default_str();
    dl_cmd->add_option("--out", dl_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (kappa_cmd->parsed()) {
            if (regen_golden) {
                dim = 3;
                ka1 = -2.0;
                ka2 = 2.0;
                steps = 41;
                format = "csv";
                with_halfline = false;
            }
            return run_kappa(dim, ka1, ka2, steps, with_halfline, tol_rel, format,
                             Output{out_path});
        }
        if (spectrum_cmd->parsed())
            return run_spectrum(sp_dom, sp_lambda, sp_nmax, sp_format, Output{sp_out});
        if (count_cmd->parsed()) return run_count(ct_dom, ct_lambdas, ct_window, Output{ct_out});
        if (bs_cmd->parsed()) return run_bs_check(bs_dom, bs_lambda, bs_window, Output{bs_out});
        if (wf_cmd->parsed())
            return run_weyl_fit(wf_dom, wf_lambdas, wf_window, wf_robin_set, wf_robin_a,
                                Output{wf_out});
        if (ms_cmd->parsed())
            return run_measure(ms_dom, ms_lambda, ms_bins, ms_theta1, ms_theta2, Output{ms_out});
        if (dl_cmd->parsed()) return run_dirichlet_limit(dl_dom, dl_h, dl_proxy, Output{dl_out});
    } catch (const ConfigError& e) {
        std::cerr << "dtnlab: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "dtnlab: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}

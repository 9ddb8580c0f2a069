#pragma once

// Command-line front end: each subcommand reproduces one family of tables
// or figures as CSV (optionally with a companion SVG plot).
//
// Exit codes: 0 success, 2 configuration/validation, 3 grid sufficiency,
// 4 quadrature failure.

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "floquet/csv.hpp"
#include "floquet/decay.hpp"
#include "floquet/dispersion.hpp"
#include "floquet/evolution.hpp"
#include "floquet/exceptional.hpp"
#include "floquet/spectral_field.hpp"
#include "floquet/stationary_phase.hpp"
#include "floquet/svg.hpp"
#include "floquet/wavepacket.hpp"

namespace floquet::cli {

inline constexpr const char* kVersion = "floquet 1.0.0";

namespace detail {

inline std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct OutputOpts {
    std::string out;
    std::string format = "csv";
    bool no_timestamp = false;
    std::string config_path;
};

inline void add_output_opts(CLI::App* sub, OutputOpts& o, const std::string& default_out) {
    o.out = default_out;
    sub->add_option("--out", o.out, "output CSV path")->capture_default_str();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "csv+svg"}))
        ->capture_default_str();
    sub->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp footer");
    sub->add_option("--config", o.config_path, "plain key = value configuration file");
}

// key = value lines; '#' comments; blank lines ignored.
inline std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config: cannot open " + path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("config: empty key in '" + line + "'");
        entries.emplace_back(key, val);
    }
    return entries;
}

// Expand "--config FILE" into "--key=value" arguments placed right after
// the subcommand name; keys already present on the command line are
// skipped, so explicit flags override the file.
inline std::vector<std::string> expand_config_args(std::vector<std::string> args) {
    if (args.empty() || args.front().empty() || args.front()[0] == '-') return args;
    std::string config_path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;

    std::vector<std::string> out;
    out.push_back(args.front());
    for (const auto& [key, val] : read_config(config_path)) {
        const std::string flag = "--" + key;
        bool given = false;
        for (std::size_t i = 1; i < args.size(); ++i)
            if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) given = true;
        if (!given) out.push_back(flag + "=" + val);
    }
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

inline std::string svg_path(const std::string& csv_path) {
    const auto dot = csv_path.find_last_of('.');
    const auto slash = csv_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return csv_path + ".svg";
    return csv_path.substr(0, dot) + ".svg";
}

inline void finalize(CsvTable& table, const CLI::App& sub, const OutputOpts& o,
                     const std::string& command_line) {
    table.footers.push_back("command: " + command_line);
    table.footers.push_back(std::string("version: ") + kVersion);
    std::string cfg = "config:";
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string& name = opt->get_lnames().front();
        if (name == "config" || name == "help") continue;
        std::string val = opt->count() ? opt->results().front() : opt->get_default_str();
        if (opt->get_expected_min() == 0) val = opt->count() ? "true" : "false";
        if (val.empty()) continue;
        cfg += " " + name + "=" + val;
    }
    table.footers.push_back(cfg);
    if (!o.no_timestamp) table.footers.push_back("timestamp: " + iso_timestamp());
    table.write_file(o.out);
}

inline void write_svg(const OutputOpts& o, const std::vector<SvgSeries>& series,
                      const SvgOptions& opt) {
    if (o.format != "csv+svg") return;
    std::ofstream os(svg_path(o.out), std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + svg_path(o.out));
    os << render_svg(series, opt);
}

inline std::vector<double> column(const CsvTable& t, std::size_t j) {
    std::vector<double> v;
    v.reserve(t.rows.size());
    for (const auto& r : t.rows) v.push_back(r[j]);
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------- dispersion

struct DispersionArgs {
    std::string scan = "mass";
    double m = 1.0;
    double m_min = 0.01, m_max = 27.0;
    double xi_min = 0.0, xi_max = 60.0;
    std::size_t samples = 2700;
    detail::OutputOpts out;
};

inline CsvTable run_dispersion(const DispersionArgs& a) {
    CsvTable t;
    if (a.samples < 2) throw std::invalid_argument("dispersion: need at least 2 samples");
    if (a.scan == "mass") {
        if (!(a.m_min > 0.0) || !(a.m_max > a.m_min))
            throw std::invalid_argument("dispersion: empty mass range");
        t.header = {"m", "theta3_at_0", "theta5_at_0"};
        std::vector<double> grid(a.samples);
        for (std::size_t i = 0; i < a.samples; ++i)
            grid[i] = a.m_min + (a.m_max - a.m_min) * static_cast<double>(i) /
                                    static_cast<double>(a.samples - 1);
        for (const auto& [m, d3] : theta3_curve(grid)) t.add_row({m, d3, theta5_at_zero(m)});
    } else {
        if (!(a.m > 0.0)) throw std::invalid_argument("dispersion: mass must be positive");
        if (!(a.xi_max > a.xi_min) || !(a.xi_min >= 0.0))
            throw std::invalid_argument("dispersion: empty xi range");
        t.header = {"xi", "theta2", "theta3"};
        for (std::size_t i = 0; i < a.samples; ++i) {
            const double xi = a.xi_min + (a.xi_max - a.xi_min) * static_cast<double>(i) /
                                             static_cast<double>(a.samples - 1);
            if (xi == 0.0) {
                t.add_row({xi, 0.0, theta_derivs_at_zero(a.m).d3});
                continue;
            }
            t.add_row({xi, theta_derivative(xi, a.m, 2), theta_derivative(xi, a.m, 3)});
        }
    }
    return t;
}

// -------------------------------------------------------------------- masses

struct MassesArgs {
    double m_max = 27.0;
    detail::OutputOpts out;
};

inline CsvTable run_masses(const MassesArgs& a) {
    const ExceptionalMassSet set = find_exceptional_masses(a.m_max);
    CsvTable t;
    t.header = {"k", "m_k", "residual", "scaled_d5", "asymptotic_gap"};
    for (const auto& e : set.masses)
        t.add_row({static_cast<double>(e.k), e.m_k, e.residual, e.scaled_d5, e.asymptotic_gap});
    t.footers.push_back("k0=" + std::to_string(set.k0));
    return t;
}

// -------------------------------------------------------------------- evolve

struct EvolveArgs {
    std::string model = "switching";
    double m = 1.0;
    double drive = 1.0;
    double delta = 0.5;
    double xi_center = 0.0;
    std::string envelope = "bump";
    double w1re = 1.0, w1im = 0.0, w2re = 0.0, w2im = 0.0;
    long periods = -1;
    double time = -1.0;
    double xi_extent = 0.0;  // 0 = auto
    std::size_t grid_n = 0;  // 0 = auto
    bool skip_grid_check = false;
    std::string space = "physical";
    detail::OutputOpts out;
};

inline MassModel parse_model(const std::string& name, double m, double drive) {
    if (name == "constant") return MassModel::constant(m);
    if (name == "switching") return MassModel::switching(m);
    if (name == "rotating") return MassModel::rotating(m, drive);
    throw std::invalid_argument("unknown model: " + name);
}

inline Wavepacket parse_packet(const std::string& envelope, double delta, double xi_center,
                               double w1re, double w1im, double w2re, double w2im) {
    const Envelope env = envelope == "bump" ? Envelope::Bump
                         : envelope == "gauss"
                             ? Envelope::TruncatedGaussian
                             : throw std::invalid_argument("unknown envelope: " + envelope);
    return Wavepacket(env, delta, xi_center,
                      Vec2c{complexd{w1re, w1im}, complexd{w2re, w2im}});
}

inline CsvTable run_evolve(const EvolveArgs& a) {
    const MassModel model = parse_model(a.model, a.m, a.drive);
    const Wavepacket packet =
        parse_packet(a.envelope, a.delta, a.xi_center, a.w1re, a.w1im, a.w2re, a.w2im);
    Extent ext;
    if (model.kind == MassKind::Switching) {
        if (a.periods < 0) throw std::invalid_argument("evolve: switching model needs --periods");
        ext = Extent::periods(a.periods);
    } else {
        if (a.time < 0.0) throw std::invalid_argument("evolve: model needs --time");
        ext = Extent::time(a.time);
    }
    SpectralGrid grid = a.grid_n ? SpectralGrid{a.xi_extent, a.grid_n}
                                 : auto_grid(packet, ext.duration());
    if (a.grid_n && !(a.xi_extent > 0.0))
        throw std::invalid_argument("evolve: --grid-n requires --xi-extent");
    if (!a.skip_grid_check) check_grid_sufficiency(packet, model, ext, grid);

    const SpectralField evolved = evolve(make_wavepacket(packet, grid), model, ext);
    CsvTable t;
    if (a.space == "spectral") {
        t.header = {"xi", "re_a1", "im_a1", "re_a2", "im_a2"};
        for (std::size_t j = 0; j < evolved.values.size(); ++j) {
            const Vec2c& v = evolved.values[j];
            t.add_row({grid.xi(j), v.a.real(), v.a.imag(), v.b.real(), v.b.imag()});
        }
    } else {
        const PhysicalField phys = to_physical(evolved);
        t.header = {"x", "re_a1", "im_a1", "re_a2", "im_a2"};
        for (std::size_t k = 0; k < phys.values.size(); ++k) {
            const Vec2c& v = phys.values[k];
            t.add_row({phys.x(k), v.a.real(), v.a.imag(), v.b.real(), v.b.imag()});
        }
    }
    t.footers.push_back("l2_norm=" + format_value(l2_norm(evolved)));
    t.footers.push_back("grid: xi_extent=" + format_value(grid.xi_extent) +
                        " n=" + std::to_string(grid.n));
    return t;
}

// ----------------------------------------------------------------- decay-fit

struct DecayFitArgs {
    std::string model = "switching";
    double m = 1.0;
    double drive = 1.0;
    double delta = 0.0;  // 0 = model-dependent default
    double xi_center = 0.0;
    std::string envelope = "bump";
    std::string probe = "auto";
    std::vector<double> n_list;
    detail::OutputOpts out;
};

inline CsvTable run_decay_fit(const DecayFitArgs& a) {
    const MassModel model = parse_model(a.model, a.m, a.drive);
    const bool switching = model.kind == MassKind::Switching;
    const double delta = a.delta > 0.0 ? a.delta : (switching ? 2.0 : 4.0);
    const Wavepacket packet = parse_packet(a.envelope, delta, a.xi_center, 1.0, 0.0, 0.0, 0.0);

    std::vector<double> extents = a.n_list;
    if (extents.empty()) {
        double v = switching ? 128.0 : 16.0;
        const double top = switching ? 16384.0 : 4096.0;
        for (; v <= top; v *= 2.0) extents.push_back(v);
    }
    Probe probe;
    if (a.probe == "auto")
        probe = switching ? Probe::PeakAtXn : Probe::SupNorm;
    else if (a.probe == "peak")
        probe = Probe::PeakAtXn;
    else if (a.probe == "sup")
        probe = Probe::SupNorm;
    else
        throw std::invalid_argument("unknown probe: " + a.probe);

    const DecayFit fit = fit_decay(model, packet, extents, probe);
    CsvTable t;
    t.header = {"n", "amplitude", "predicted"};
    for (std::size_t i = 0; i < fit.extents.size(); ++i)
        t.add_row({fit.extents[i], fit.amplitudes[i], fit.predicted[i]});
    t.footers.push_back("exponent=" + format_value(fit.exponent) +
                        " stderr=" + format_value(fit.stderr_slope) +
                        " r2=" + format_value(fit.r_squared));
    t.footers.push_back("fit_window: dropped " + std::to_string(fit.window_start) +
                        " smallest extents");
    t.footers.push_back("effective_delta=" + format_value(delta));
    return t;
}

// ---------------------------------------------------------------- airy-check

struct AiryCheckArgs {
    int order = 3;
    std::vector<double> omega_list;
    detail::OutputOpts out;
};

inline CsvTable run_airy_check(const AiryCheckArgs& a) {
    if (a.order != 3 && a.order != 5)
        throw std::invalid_argument("airy-check: order must be 3 or 5");
    std::vector<double> omegas = a.omega_list;
    if (omegas.empty()) omegas = {1e2, 1e3, 1e4};
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (!(omegas[i] > 0.0)) throw std::invalid_argument("airy-check: omegas must be positive");
        if (i && !(omegas[i] > omegas[i - 1]))
            throw std::invalid_argument("airy-check: omegas must increase");
    }

    const Wavepacket chi{Envelope::Bump, 1.0, 0.0, Vec2c{complexd{1.0, 0.0}, {}}};
    CsvTable t;
    t.header = {"omega", "quadrature_abs", "asymptotic_abs", "rel_error"};
    for (const double w : omegas) {
        auto phase = [&](double z) { return a.order == 3 ? z * z * z / 6.0 : std::pow(z, 5) / 120.0; };
        auto f = [&](double z) { return std::polar(chi.envelope_value(z), w * phase(z)); };
        QuadratureOptions opt;
        opt.initial_panels = panels_for_phase(w * std::max(phase(1.0), -phase(-1.0)));
        const double quad = std::abs(integrate_adaptive(f, -1.0, 1.0, opt));
        const complexd one{1.0, 0.0};
        const double asym =
            a.order == 3
                ? std::abs(airy_leading(PhaseProfile::order3(0.0, 1.0), one, w))
                : std::abs(quintic_leading(PhaseProfile::order5(0.0, 1.0), one, w));
        t.add_row({w, quad, asym, std::abs(quad - asym) / quad});
    }
    return t;
}

// --------------------------------------------------------------- inflections

struct InflectionsArgs {
    double m = 1.0;
    double xi_max = 200.0;
    std::size_t count = 1000000;
    detail::OutputOpts out;
};

inline CsvTable run_inflections(const InflectionsArgs& a) {
    const InflectionScan scan = inflection_scan(a.m, a.xi_max, a.count);
    CsvTable t;
    t.header = {"l", "xi_l", "theta2_residual", "theta3_at_root"};
    for (const auto& p : scan.points)
        t.add_row({static_cast<double>(p.l), p.xi, p.theta2_residual, p.d3});
    if (scan.slope_valid)
        t.footers.push_back("slope=" + format_value(scan.slope) +
                            " r2=" + format_value(scan.slope_r2));
    t.footers.push_back(std::string("truncated=") + (scan.truncated ? "true" : "false"));
    return t;
}

// ----------------------------------------------------------------------- run

inline int run(int argc, const char* const* argv) {
    CLI::App app{"Fourier-exact evolution and dispersive-decay analysis of "
                 "time-periodic 1D Dirac models"};
    app.require_subcommand(1);

    DispersionArgs da;
    auto* sub_disp = app.add_subcommand("dispersion", "theta derivative scans (mass or xi)");
    sub_disp->add_option("--scan", da.scan, "scan variable")
        ->check(CLI::IsMember({"mass", "xi"}))
        ->capture_default_str();
    sub_disp->add_option("--m", da.m, "mass (xi scan)")->capture_default_str();
    sub_disp->add_option("--m-min", da.m_min, "mass range start")->capture_default_str();
    sub_disp->add_option("--m-max", da.m_max, "mass range end")->capture_default_str();
    sub_disp->add_option("--xi-min", da.xi_min, "xi range start")->capture_default_str();
    sub_disp->add_option("--xi-max", da.xi_max, "xi range end")->capture_default_str();
    sub_disp->add_option("--samples", da.samples, "grid points")->capture_default_str();
    detail::add_output_opts(sub_disp, da.out, "dispersion.csv");

    MassesArgs ma;
    auto* sub_mass = app.add_subcommand("masses", "exceptional mass set");
    sub_mass->add_option("--m-max", ma.m_max, "search limit")->capture_default_str();
    detail::add_output_opts(sub_mass, ma.out, "masses.csv");

    EvolveArgs ea;
    auto* sub_evo = app.add_subcommand("evolve", "physical-space snapshot");
    sub_evo->add_option("--model", ea.model, "mass model")
        ->check(CLI::IsMember({"constant", "switching", "rotating"}))
        ->capture_default_str();
    sub_evo->add_option("--m", ea.m, "mass")->capture_default_str();
    sub_evo->add_option("--drive", ea.drive, "rotation frequency")->capture_default_str();
    sub_evo->add_option("--delta", ea.delta, "Fourier support half-width")->capture_default_str();
    sub_evo->add_option("--xi-center", ea.xi_center, "Fourier support center")
        ->capture_default_str();
    sub_evo->add_option("--envelope", ea.envelope, "envelope kind")
        ->check(CLI::IsMember({"bump", "gauss"}))
        ->capture_default_str();
    sub_evo->add_option("--w1re", ea.w1re, "weight 1 (re)")->capture_default_str();
    sub_evo->add_option("--w1im", ea.w1im, "weight 1 (im)")->capture_default_str();
    sub_evo->add_option("--w2re", ea.w2re, "weight 2 (re)")->capture_default_str();
    sub_evo->add_option("--w2im", ea.w2im, "weight 2 (im)")->capture_default_str();
    sub_evo->add_option("--periods", ea.periods, "whole periods (switching)");
    sub_evo->add_option("--time", ea.time, "evolution time (constant/rotating)");
    sub_evo->add_option("--xi-extent", ea.xi_extent, "grid half-extent (with --grid-n)");
    sub_evo->add_option("--grid-n", ea.grid_n, "grid size (power of two; 0 = auto)");
    sub_evo->add_flag("--no-check-grid", ea.skip_grid_check, "skip the doubling check");
    sub_evo->add_option("--space", ea.space, "snapshot domain")
        ->check(CLI::IsMember({"physical", "spectral"}))
        ->capture_default_str();
    detail::add_output_opts(sub_evo, ea.out, "evolve.csv");

    DecayFitArgs fa;
    auto* sub_fit = app.add_subcommand("decay-fit", "decay-exponent regression");
    sub_fit->add_option("--model", fa.model, "mass model")
        ->check(CLI::IsMember({"constant", "switching", "rotating"}))
        ->capture_default_str();
    sub_fit->add_option("--m", fa.m, "mass")->capture_default_str();
    sub_fit->add_option("--drive", fa.drive, "rotation frequency")->capture_default_str();
    sub_fit->add_option("--delta", fa.delta, "support half-width (0 = per-model default)")
        ->capture_default_str();
    sub_fit->add_option("--xi-center", fa.xi_center, "support center")->capture_default_str();
    sub_fit->add_option("--envelope", fa.envelope, "envelope kind")
        ->check(CLI::IsMember({"bump", "gauss"}))
        ->capture_default_str();
    sub_fit->add_option("--probe", fa.probe, "amplitude probe")
        ->check(CLI::IsMember({"auto", "peak", "sup"}))
        ->capture_default_str();
    sub_fit->add_option("--n-list", fa.n_list, "extent sweep (periods or times)")
        ->delimiter(',');
    detail::add_output_opts(sub_fit, fa.out, "decay_fit.csv");

    AiryCheckArgs aa;
    auto* sub_airy = app.add_subcommand("airy-check", "asymptotics vs quadrature");
    sub_airy->add_option("--order", aa.order, "degeneracy order (3 or 5)")
        ->capture_default_str();
    sub_airy->add_option("--omega-list", aa.omega_list, "frequency sweep")->delimiter(',');
    detail::add_output_opts(sub_airy, aa.out, "airy_check.csv");

    InflectionsArgs ia;
    auto* sub_infl = app.add_subcommand("inflections", "theta'' roots and theta''' decay");
    sub_infl->add_option("--m", ia.m, "mass")->capture_default_str();
    sub_infl->add_option("--xi-max", ia.xi_max, "scan limit")->capture_default_str();
    sub_infl->add_option("--count", ia.count, "maximum roots")->capture_default_str();
    detail::add_output_opts(sub_infl, ia.out, "inflections.csv");

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        args = detail::expand_config_args(std::move(args));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::vector<const char*> cargv;
    cargv.push_back(argc > 0 ? argv[0] : "floquet");
    for (const auto& s : args) cargv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command_line = "floquet";
    for (int i = 1; i < argc; ++i) command_line += std::string(" ") + argv[i];

    try {
        if (sub_disp->parsed()) {
            CsvTable t = run_dispersion(da);
            detail::finalize(t, *sub_disp, da.out, command_line);
            detail::write_svg(da.out,
                              {{detail::column(t, 0), detail::column(t, 1), "#1f6fb2", true, false},
                               {detail::column(t, 0), detail::column(t, 2), "#d1495b", true, false}},
                              {720, 520, "dispersion scan", t.header[0],
                               t.header[1] + ", " + t.header[2], false, false});
        } else if (sub_mass->parsed()) {
            CsvTable t = run_masses(ma);
            detail::finalize(t, *sub_mass, ma.out, command_line);
            std::vector<double> absd5 = detail::column(t, 3);
            for (auto& v : absd5) v = std::abs(v);
            detail::write_svg(ma.out, {{detail::column(t, 1), absd5, "#1f6fb2", false, true}},
                              {720, 520, "scaled fifth derivative at exceptional masses", "m_k",
                               "|m_k^3 theta5|", true, true});
        } else if (sub_evo->parsed()) {
            CsvTable t = run_evolve(ea);
            detail::finalize(t, *sub_evo, ea.out, command_line);
            std::vector<double> mag(t.rows.size());
            for (std::size_t i = 0; i < t.rows.size(); ++i)
                mag[i] = std::sqrt(t.rows[i][1] * t.rows[i][1] + t.rows[i][2] * t.rows[i][2] +
                                   t.rows[i][3] * t.rows[i][3] + t.rows[i][4] * t.rows[i][4]);
            detail::write_svg(ea.out, {{detail::column(t, 0), mag, "#1f6fb2", true, false}},
                              {720, 520, "field magnitude", "x", "|alpha|", false, false});
        } else if (sub_fit->parsed()) {
            CsvTable t = run_decay_fit(fa);
            detail::finalize(t, *sub_fit, fa.out, command_line);
            detail::write_svg(fa.out,
                              {{detail::column(t, 0), detail::column(t, 1), "#1f6fb2", true, true},
                               {detail::column(t, 0), detail::column(t, 2), "#d1495b", true, false}},
                              {720, 520, "peak decay", "n", "amplitude", true, true});
        } else if (sub_airy->parsed()) {
            CsvTable t = run_airy_check(aa);
            detail::finalize(t, *sub_airy, aa.out, command_line);
            detail::write_svg(aa.out,
                              {{detail::column(t, 0), detail::column(t, 1), "#1f6fb2", true, true},
                               {detail::column(t, 0), detail::column(t, 2), "#d1495b", true, false}},
                              {720, 520, "stationary phase vs quadrature", "omega", "|integral|",
                               true, true});
        } else if (sub_infl->parsed()) {
            CsvTable t = run_inflections(ia);
            detail::finalize(t, *sub_infl, ia.out, command_line);
            std::vector<double> absd3 = detail::column(t, 3);
            for (auto& v : absd3) v = std::abs(v);
            detail::write_svg(ia.out, {{detail::column(t, 1), absd3, "#1f6fb2", false, true}},
                              {720, 520, "theta''' at inflection points", "xi_l", "|theta'''|",
                               true, true});
        }
    } catch (const GridError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const QuadratureError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

inline int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.push_back("floquet");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace floquet::cli

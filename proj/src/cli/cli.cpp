#include "deit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "deit/bloch.hpp"
#include "deit/presets.hpp"
#include "deit/susceptibility.hpp"
#include "deit/units.hpp"

namespace deit {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNoSwitch = 3;
constexpr int kExitUnstable = 4;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 2 || !(lo < hi)) {
        throw InvalidParameterError("sweep axis requires points >= 2 and min < max");
    }
    std::vector<double> xs(static_cast<std::size_t>(points));
    const double span = hi - lo;
    for (int i = 0; i < points; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + span * static_cast<double>(i) / (points - 1);
    }
    xs.back() = hi;
    return xs;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers; results land by index.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += threads) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// ----------------------------------------------------------------------
// option plumbing: preset defaults < config file < command-line flags

template <typename T>
struct is_optional : std::false_type {};
template <typename T>
struct is_optional<std::optional<T>> : std::true_type {};

struct ConfigBinder {
    struct Entry {
        CLI::Option* option;
        std::function<void(const json&)> apply;
    };
    std::vector<Entry> entries;

    template <typename T>
    CLI::Option* bind(CLI::App* app, const std::string& flag, T& target,
                      const std::string& help) {
        CLI::Option* opt = app->add_option(flag, target, help);
        const std::string key = flag.substr(2);  // strip leading --
        entries.push_back({opt, [&target, key](const json& cfg) {
                               if (!cfg.contains(key)) return;
                               if constexpr (is_optional<T>::value) {
                                   target = cfg.at(key).get<typename T::value_type>();
                               } else {
                                   target = cfg.at(key).get<T>();
                               }
                           }});
        return opt;
    }

    void apply_config(const json& cfg) const {
        for (const auto& e : entries) {
            if (e.option->count() == 0) e.apply(cfg);
        }
    }
};

struct CommonOpts {
    std::string preset = "charge";
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::string normalize = "none";
    int threads = 0;

    // physical overrides, boundary units
    std::optional<double> w0_ghz, eta_ghz, t1_ns, t2_ns, temp_mk, oc_ghz;
};

void add_common(CLI::App* app, CommonOpts& c, ConfigBinder& bind) {
    bind.bind(app, "--preset", c.preset, "parameter preset: charge|phase|flux");
    app->add_option("--config", c.config_path, "JSON config file mirroring the flag names");
    bind.bind(app, "--out", c.out_path, "output file (default stdout)");
    bind.bind(app, "--format", c.format, "csv|json");
    bind.bind(app, "--normalize", c.normalize, "none|max");
    bind.bind(app, "--threads", c.threads, "sweep parallelism (0 = hardware)");
    bind.bind(app, "--w0-ghz", c.w0_ghz, "resonator frequency override (GHz)");
    bind.bind(app, "--eta-ghz", c.eta_ghz, "qubit-resonator coupling override (GHz)");
    bind.bind(app, "--t1-ns", c.t1_ns, "undressed relaxation time override (ns)");
    bind.bind(app, "--t2-ns", c.t2_ns, "undressed dephasing time override (ns)");
    bind.bind(app, "--temp-mk", c.temp_mk, "temperature override (mK)");
    bind.bind(app, "--oc-ghz", c.oc_ghz, "control Rabi amplitude override (GHz)");
}

PresetValues effective_preset(const CommonOpts& c) {
    PresetValues v = load_preset(c.preset);
    if (c.w0_ghz) v.omega0_ghz = *c.w0_ghz;
    if (c.eta_ghz) v.eta_ghz = *c.eta_ghz;
    if (c.t1_ns) v.t1_ns = *c.t1_ns;
    if (c.t2_ns) v.t2_ns = *c.t2_ns;
    if (c.temp_mk) v.temperature_mk = *c.temp_mk;
    if (c.oc_ghz) v.omega_c_ghz = *c.oc_ghz;
    return v;
}

json parameter_block(const PresetValues& v) {
    return json{{"preset", v.name},          {"w0-ghz", v.omega0_ghz},
                {"eta-ghz", v.eta_ghz},      {"t1-ns", v.t1_ns},
                {"t2-ns", v.t2_ns},          {"temp-mk", v.temperature_mk},
                {"oc-ghz", v.omega_c_ghz}};
}

class OutputSink {
  public:
    OutputSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw InvalidParameterError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

  private:
    std::ofstream file_;
    std::ostream& fallback_;
};

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw InvalidParameterError("cannot open config file: " + path);
    json cfg;
    in >> cfg;
    if (!cfg.is_object()) throw InvalidParameterError("config file must hold a JSON object");
    return cfg;
}

// ----------------------------------------------------------------------
// spectrum

struct SpectrumOpts {
    CommonOpts common;
    std::optional<double> wq_ghz;
    std::optional<double> delta_min_ghz, delta_max_ghz;
    int points = 1001;
};

int cmd_spectrum(const SpectrumOpts& o, std::ostream& out_stream) {
    const PresetValues v = effective_preset(o.common);
    const double wq_ghz = o.wq_ghz.value_or(v.omega0_ghz / 2.0);
    const double dmin = o.delta_min_ghz.value_or(v.delta_min_ghz);
    const double dmax = o.delta_max_ghz.value_or(v.delta_max_ghz);

    const SystemParams params = v.system_params(wq_ghz);
    const NoiseModel noise = v.noise_model();
    DriveFields drives;
    drives.omega_c_rabi = v.omega_c_rabi();
    const ThreeLevelSystem system = build_three_level(params, drives);
    const DressedRates rates = dressed_rates(noise, system.theta0, system.theta1);

    const std::vector<double> deltas = linspace(dmin, dmax, o.points);
    std::vector<Susceptibility> values(deltas.size());
    parallel_for(static_cast<int>(deltas.size()), o.common.threads, [&](int i) {
        values[static_cast<std::size_t>(i)] =
            chi(system, rates, ghz_to_rad_ns(deltas[static_cast<std::size_t>(i)]));
    });

    double scale = 1.0;
    if (o.common.normalize == "max") {
        double peak = 0.0;
        for (const auto& s : values) {
            peak = std::max({peak, std::abs(s.chi_re), std::abs(s.chi_im)});
        }
        if (peak > 0.0) scale = 1.0 / peak;
    }

    OutputSink sink(o.common.out_path, out_stream);
    std::ostream& out = sink.stream();
    if (o.common.format == "json") {
        json doc;
        doc["parameters"] = parameter_block(v);
        doc["parameters"]["wq-ghz"] = wq_ghz;
        doc["parameters"]["delta-min-ghz"] = dmin;
        doc["parameters"]["delta-max-ghz"] = dmax;
        doc["parameters"]["points"] = o.points;
        doc["columns"] = {"delta_ghz", "chi_re", "chi_im"};
        json rows = json::array();
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            rows.push_back({deltas[i], values[i].chi_re * scale, values[i].chi_im * scale});
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << "\n";
    } else {
        out << "delta_ghz,chi_re,chi_im\n";
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            out << fmt12(deltas[i]) << ',' << fmt12(values[i].chi_re * scale) << ','
                << fmt12(values[i].chi_im * scale) << "\n";
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------------
// map

struct AxisSpec {
    std::string name;  // delta | omega_q | omega_c
    double min = 0.0;
    double max = 0.0;
    int points = 0;
};

struct MapOpts {
    CommonOpts common;
    AxisSpec axis1, axis2;
    std::optional<double> wq_ghz;
};

void validate_axis(const AxisSpec& a) {
    if (a.name != "delta" && a.name != "omega_q" && a.name != "omega_c") {
        throw InvalidParameterError("axis must be one of delta|omega_q|omega_c");
    }
    if (a.points < 2 || !(a.min < a.max)) {
        throw InvalidParameterError("axis requires points >= 2 and min < max");
    }
}

int cmd_map(const MapOpts& o, std::ostream& out_stream) {
    validate_axis(o.axis1);
    validate_axis(o.axis2);
    if (o.axis1.name == o.axis2.name) {
        throw InvalidParameterError("map axes must differ");
    }
    const PresetValues v = effective_preset(o.common);
    const NoiseModel noise = v.noise_model();
    const double default_wq = o.wq_ghz.value_or(v.omega0_ghz / 2.0);

    const std::vector<double> a1 = linspace(o.axis1.min, o.axis1.max, o.axis1.points);
    const std::vector<double> a2 = linspace(o.axis2.min, o.axis2.max, o.axis2.points);
    const int n1 = static_cast<int>(a1.size());
    const int n2 = static_cast<int>(a2.size());
    std::vector<double> grid(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));

    auto pick = [&](const std::string& axis, double x1, double x2, double fallback) {
        if (o.axis1.name == axis) return x1;
        if (o.axis2.name == axis) return x2;
        return fallback;
    };

    parallel_for(n1, o.common.threads, [&](int i) {
        const double x1 = a1[static_cast<std::size_t>(i)];
        for (int j = 0; j < n2; ++j) {
            const double x2 = a2[static_cast<std::size_t>(j)];
            const double wq_ghz = pick("omega_q", x1, x2, default_wq);
            const double oc_ghz = pick("omega_c", x1, x2, v.omega_c_ghz);
            const double delta_ghz = pick("delta", x1, x2, 0.0);

            const SystemParams params = v.system_params(wq_ghz);
            DriveFields drives;
            drives.omega_c_rabi = ghz_to_rad_ns(oc_ghz);
            const ThreeLevelSystem system = build_three_level(params, drives);
            const DressedRates rates = dressed_rates(noise, system.theta0, system.theta1);
            grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(n2) +
                 static_cast<std::size_t>(j)] =
                chi(system, rates, ghz_to_rad_ns(delta_ghz)).chi_im;
        }
    });

    double scale = 1.0;
    if (o.common.normalize == "max") {
        double peak = 0.0;
        for (double g : grid) peak = std::max(peak, std::abs(g));
        if (peak > 0.0) scale = 1.0 / peak;
    }

    OutputSink sink(o.common.out_path, out_stream);
    std::ostream& out = sink.stream();
    const std::string c1 = o.axis1.name + "_ghz";
    const std::string c2 = o.axis2.name + "_ghz";
    if (o.common.format == "json") {
        json doc;
        doc["parameters"] = parameter_block(v);
        doc["parameters"]["wq-ghz"] = default_wq;
        doc["columns"] = {c1, c2, "chi_im"};
        json rows = json::array();
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n2; ++j) {
                rows.push_back({a1[static_cast<std::size_t>(i)], a2[static_cast<std::size_t>(j)],
                                grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(n2) +
                                     static_cast<std::size_t>(j)] *
                                    scale});
            }
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << "\n";
    } else {
        out << c1 << ',' << c2 << ",chi_im\n";
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n2; ++j) {
                out << fmt12(a1[static_cast<std::size_t>(i)]) << ','
                    << fmt12(a2[static_cast<std::size_t>(j)]) << ','
                    << fmt12(grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(n2) +
                                  static_cast<std::size_t>(j)] *
                             scale)
                    << "\n";
            }
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------------
// critical

struct CriticalOpts {
    CommonOpts common;
    std::optional<double> wq_min_ghz, wq_max_ghz;
    bool analytic_only = false;
};

int cmd_critical(const CriticalOpts& o, std::ostream& out_stream, std::ostream& err) {
    const PresetValues v = effective_preset(o.common);
    const NoiseModel noise = v.noise_model();
    const SystemParams params = v.system_params(v.omega0_ghz / 2.0);
    const auto lambdas = critical_spacings(noise, v.omega_c_rabi(), params);

    json doc;
    doc["parameters"] = parameter_block(v);
    doc["analytic_lambda_c_minus_ghz"] = rad_ns_to_ghz(lambdas.first);
    doc["analytic_lambda_c_plus_ghz"] = rad_ns_to_ghz(lambdas.second);

    int exit_code = kExitOk;
    if (!o.analytic_only) {
        const double lo = ghz_to_rad_ns(o.wq_min_ghz.value_or(v.wq_min_ghz));
        const double hi = ghz_to_rad_ns(o.wq_max_ghz.value_or(v.omega0_ghz / 2.0));
        try {
            const double sw = numeric_switching_frequency(noise, v.omega_c_rabi(), params, lo, hi);
            doc["numeric_switch_ghz"] = rad_ns_to_ghz(sw);
        } catch (const NoSignChangeError& e) {
            doc["numeric_switch_ghz"] = nullptr;
            doc["numeric_error"] = e.what();
            err << json{{"error", e.what()}, {"exit_code", kExitNoSwitch}}.dump() << "\n";
            exit_code = kExitNoSwitch;
        }
    }

    OutputSink sink(o.common.out_path, out_stream);
    sink.stream() << doc.dump(2) << "\n";
    return exit_code;
}

// ----------------------------------------------------------------------
// trap

struct TrapOpts {
    CommonOpts common;
    std::optional<double> op_ghz;
    std::optional<double> t_max_ns, dt_ns;
};

int cmd_trap(const TrapOpts& o, std::ostream& out_stream) {
    const PresetValues v = effective_preset(o.common);
    DriveFields drives;
    drives.omega_c_rabi = v.omega_c_rabi();
    drives.omega_p_rabi = o.op_ghz ? ghz_to_rad_ns(*o.op_ghz) : drives.omega_c_rabi;
    if (!(drives.omega_c_rabi > 0.0)) {
        throw InvalidParameterError("trap requires Omega_c > 0");
    }

    SystemParams params = v.system_params(v.omega0_ghz / 2.0);
    params.omega_q = trapping_spacing(drives, params);

    const ThreeLevelSystem probe_system = build_three_level(params, drives);
    const double scale = stiffness_scale(probe_system, DressedRates{}, drives, Frame::rotating);

    IntegrationConfig config;
    config.t_max = o.t_max_ns.value_or(1000.0 / drives.omega_p_rabi);
    config.dt = o.dt_ns.value_or(std::min(0.04 / scale, config.t_max / 100.0));
    const double max_rho11 = trapping_check(drives, params, config);

    json doc;
    doc["parameters"] = parameter_block(v);
    doc["parameters"]["op-ghz"] = rad_ns_to_ghz(drives.omega_p_rabi);
    doc["trapping_wq_ghz"] = rad_ns_to_ghz(params.omega_q);
    doc["max_rho_11"] = max_rho11;
    doc["t_max_ns"] = config.t_max;
    doc["dt_ns"] = config.dt;

    OutputSink sink(o.common.out_path, out_stream);
    sink.stream() << doc.dump(2) << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------------
// bloch

struct BlochOpts {
    CommonOpts common;
    std::optional<double> wq_ghz;
    double delta_ghz = 0.0;
    std::optional<double> op_ghz;
    double t_max_ns = 100.0;
    std::optional<double> dt_ns;
    int stride = 1;
    std::string initial = "ground";
    std::string frame = "rotating";
    std::string mode = "full";
    bool no_decay = false;
};

int cmd_bloch(const BlochOpts& o, std::ostream& out_stream, std::ostream& err) {
    const PresetValues v = effective_preset(o.common);
    const double wq_ghz = o.wq_ghz.value_or(v.omega0_ghz / 2.0);
    const SystemParams params = v.system_params(wq_ghz);
    const NoiseModel noise = v.noise_model();

    DriveFields drives;
    drives.omega_c_rabi = v.omega_c_rabi();
    drives.omega_p_rabi = o.op_ghz ? ghz_to_rad_ns(*o.op_ghz) : drives.omega_c_rabi / 100.0;
    ThreeLevelSystem system = build_three_level(params, drives);
    drives.omega_c = system.omega_c;
    drives.omega_p = system.probe_transition() - ghz_to_rad_ns(o.delta_ghz);
    if (!drives.weak_probe()) {
        err << "warning: probe is not weak (Omega_p > Omega_c/10); first-order results "
               "are advisory\n";
    }

    DressedRates rates = dressed_rates(noise, system.theta0, system.theta1);
    if (o.no_decay) rates = DressedRates{};

    Frame frame = Frame::rotating;
    if (o.frame == "lab") {
        frame = Frame::lab;
    } else if (o.frame != "rotating") {
        throw InvalidParameterError("frame must be rotating|lab");
    }

    IntegrationConfig config;
    config.t_max = o.t_max_ns;
    const double scale = stiffness_scale(system, rates, drives, frame);
    config.dt = o.dt_ns.value_or(std::min(0.04 / scale, config.t_max / 100.0));
    config.record_stride = o.stride;

    OutputSink sink(o.common.out_path, out_stream);
    std::ostream& out = sink.stream();

    if (o.mode == "first-order") {
        const auto series =
            integrate_first_order(system, rates, drives, ghz_to_rad_ns(o.delta_ghz), config);
        out << "t_ns,re_rho_mu1,im_rho_mu1,re_rho_munu,im_rho_munu\n";
        for (const auto& s : series) {
            out << fmt12(s.t) << ',' << fmt12(s.rho_mu1.real()) << ',' << fmt12(s.rho_mu1.imag())
                << ',' << fmt12(s.rho_munu.real()) << ',' << fmt12(s.rho_munu.imag()) << "\n";
        }
        return kExitOk;
    }
    if (o.mode != "full") {
        throw InvalidParameterError("mode must be full|first-order");
    }

    DensityState initial = DensityState::ground();
    if (o.initial == "dark") {
        initial = DensityState::dark_superposition();
    } else if (o.initial != "ground") {
        throw InvalidParameterError("initial must be ground|dark");
    }

    const auto series = integrate(initial, config, system, rates, drives, frame);
    out << "t_ns,rho_mumu,rho_nunu,rho_11,re_rho_mu1,im_rho_mu1,re_rho_nu1,im_rho_nu1,"
           "re_rho_munu,im_rho_munu\n";
    for (const auto& s : series) {
        out << fmt12(s.t) << ',' << fmt12(s.state.rho_mumu) << ',' << fmt12(s.state.rho_nunu)
            << ',' << fmt12(s.state.rho_11) << ',' << fmt12(s.state.rho_mu1.real()) << ','
            << fmt12(s.state.rho_mu1.imag()) << ',' << fmt12(s.state.rho_nu1.real()) << ','
            << fmt12(s.state.rho_nu1.imag()) << ',' << fmt12(s.state.rho_munu.real()) << ','
            << fmt12(s.state.rho_munu.imag()) << "\n";
    }
    return kExitOk;
}

// ----------------------------------------------------------------------
// presets

int cmd_presets(const CommonOpts& common, std::ostream& out_stream) {
    OutputSink sink(common.out_path, out_stream);
    std::ostream& out = sink.stream();
    if (common.format == "json") {
        json doc = json::array();
        for (const QubitPreset& p : preset_table()) {
            doc.push_back(parameter_block(load_preset(p.name)));
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "name,w0_ghz,eta_ghz,t1_ns,t2_ns,temp_mk,oc_ghz,wq_min_ghz,wq_max_ghz,"
               "delta_min_ghz,delta_max_ghz\n";
        for (const QubitPreset& p : preset_table()) {
            out << p.name << ',' << p.omega0_ghz << ',' << p.eta_ghz << ',' << p.t1_ns << ','
                << p.t2_ns << ',' << p.temperature_mk << ',' << p.omega_c_ghz << ','
                << p.wq_min_ghz << ',' << p.wq_max_ghz << ',' << p.delta_min_ghz << ','
                << p.delta_max_ghz << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"dressed-qubit EIT/EIA simulator"};
    app.require_subcommand(1);

    SpectrumOpts spectrum;
    ConfigBinder spectrum_bind;
    CLI::App* sub_spectrum =
        app.add_subcommand("spectrum", "susceptibility vs probe detuning at fixed omega_q");
    add_common(sub_spectrum, spectrum.common, spectrum_bind);
    spectrum_bind.bind(sub_spectrum, "--wq-ghz", spectrum.wq_ghz, "qubit level spacing (GHz)");
    spectrum_bind.bind(sub_spectrum, "--delta-min-ghz", spectrum.delta_min_ghz,
                       "probe detuning sweep start (GHz)");
    spectrum_bind.bind(sub_spectrum, "--delta-max-ghz", spectrum.delta_max_ghz,
                       "probe detuning sweep end (GHz)");
    spectrum_bind.bind(sub_spectrum, "--points", spectrum.points, "sweep points");

    MapOpts map;
    ConfigBinder map_bind;
    CLI::App* sub_map = app.add_subcommand("map", "chi'' over a two-axis sweep, long format");
    add_common(sub_map, map.common, map_bind);
    map_bind.bind(sub_map, "--axis1", map.axis1.name, "outer axis: delta|omega_q|omega_c");
    map_bind.bind(sub_map, "--axis1-min", map.axis1.min, "outer axis start (GHz)");
    map_bind.bind(sub_map, "--axis1-max", map.axis1.max, "outer axis end (GHz)");
    map_bind.bind(sub_map, "--axis1-points", map.axis1.points, "outer axis points");
    map_bind.bind(sub_map, "--axis2", map.axis2.name, "inner axis: delta|omega_q|omega_c");
    map_bind.bind(sub_map, "--axis2-min", map.axis2.min, "inner axis start (GHz)");
    map_bind.bind(sub_map, "--axis2-max", map.axis2.max, "inner axis end (GHz)");
    map_bind.bind(sub_map, "--axis2-points", map.axis2.points, "inner axis points");
    map_bind.bind(sub_map, "--wq-ghz", map.wq_ghz, "fixed qubit spacing when not an axis (GHz)");

    CriticalOpts critical;
    ConfigBinder critical_bind;
    CLI::App* sub_critical =
        app.add_subcommand("critical", "analytic and numeric EIT/EIA switching frequencies");
    add_common(sub_critical, critical.common, critical_bind);
    critical_bind.bind(sub_critical, "--wq-min-ghz", critical.wq_min_ghz,
                       "bisection bracket start (GHz)");
    critical_bind.bind(sub_critical, "--wq-max-ghz", critical.wq_max_ghz,
                       "bisection bracket end (GHz)");
    sub_critical->add_flag("--analytic-only", critical.analytic_only,
                           "skip the numeric bisection");

    TrapOpts trap;
    ConfigBinder trap_bind;
    CLI::App* sub_trap =
        app.add_subcommand("trap", "coherent-trapping spacing and residual excited population");
    add_common(sub_trap, trap.common, trap_bind);
    trap_bind.bind(sub_trap, "--op-ghz", trap.op_ghz, "probe Rabi amplitude (GHz)");
    trap_bind.bind(sub_trap, "--t-max-ns", trap.t_max_ns, "integration horizon (ns)");
    trap_bind.bind(sub_trap, "--dt-ns", trap.dt_ns, "integrator step (ns)");

    BlochOpts bloch;
    ConfigBinder bloch_bind;
    CLI::App* sub_bloch = app.add_subcommand("bloch", "density-matrix trajectory as CSV");
    add_common(sub_bloch, bloch.common, bloch_bind);
    bloch_bind.bind(sub_bloch, "--wq-ghz", bloch.wq_ghz, "qubit level spacing (GHz)");
    bloch_bind.bind(sub_bloch, "--delta-ghz", bloch.delta_ghz, "probe detuning (GHz)");
    bloch_bind.bind(sub_bloch, "--op-ghz", bloch.op_ghz, "probe Rabi amplitude (GHz)");
    bloch_bind.bind(sub_bloch, "--t-max-ns", bloch.t_max_ns, "integration horizon (ns)");
    bloch_bind.bind(sub_bloch, "--dt-ns", bloch.dt_ns, "integrator step (ns)");
    bloch_bind.bind(sub_bloch, "--stride", bloch.stride, "steps per recorded sample");
    bloch_bind.bind(sub_bloch, "--initial", bloch.initial, "initial state: ground|dark");
    bloch_bind.bind(sub_bloch, "--frame", bloch.frame, "rotating|lab");
    bloch_bind.bind(sub_bloch, "--mode", bloch.mode, "full|first-order");
    sub_bloch->add_flag("--no-decay", bloch.no_decay, "zero all dressed rates");

    CommonOpts presets_common;
    ConfigBinder presets_bind;
    CLI::App* sub_presets = app.add_subcommand("presets", "list the built-in parameter sets");
    add_common(sub_presets, presets_common, presets_bind);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", e.what()}, {"exit_code", kExitInvalid}}.dump() << "\n";
        return kExitInvalid;
    }

    try {
        if (sub_spectrum->parsed()) {
            spectrum_bind.apply_config(load_config(spectrum.common.config_path));
            return cmd_spectrum(spectrum, out);
        }
        if (sub_map->parsed()) {
            map_bind.apply_config(load_config(map.common.config_path));
            return cmd_map(map, out);
        }
        if (sub_critical->parsed()) {
            critical_bind.apply_config(load_config(critical.common.config_path));
            return cmd_critical(critical, out, err);
        }
        if (sub_trap->parsed()) {
            trap_bind.apply_config(load_config(trap.common.config_path));
            return cmd_trap(trap, out);
        }
        if (sub_bloch->parsed()) {
            bloch_bind.apply_config(load_config(bloch.common.config_path));
            return cmd_bloch(bloch, out, err);
        }
        if (sub_presets->parsed()) {
            presets_bind.apply_config(load_config(presets_common.config_path));
            return cmd_presets(presets_common, out);
        }
        err << json{{"error", "no subcommand"}, {"exit_code", kExitInvalid}}.dump() << "\n";
        return kExitInvalid;
    } catch (const StabilityError& e) {
        err << json{{"error", e.what()},
                    {"suggested_dt_ns", e.suggested_dt},
                    {"exit_code", kExitUnstable}}
                   .dump()
            << "\n";
        return kExitUnstable;
    } catch (const NoSignChangeError& e) {
        err << json{{"error", e.what()}, {"exit_code", kExitNoSwitch}}.dump() << "\n";
        return kExitNoSwitch;
    } catch (const std::exception& e) {
        err << json{{"error", e.what()}, {"exit_code", kExitInvalid}}.dump() << "\n";
        return kExitInvalid;
    }
}

}  // namespace deit

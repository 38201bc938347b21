// Command-line front end: every analysis as a subcommand emitting CSV.
// Determinism contract: a given effective config produces byte-identical
// output, independent of --threads.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "jjline/band_structure.hpp"
#include "jjline/cavity.hpp"
#include "jjline/constants.hpp"
#include "jjline/errors.hpp"
#include "jjline/harmonics.hpp"
#include "jjline/numerics.hpp"
#include "jjline/scattering.hpp"
#include "jjline/transfer_matrix.hpp"

namespace {

using jjline::cplx;

std::string fmt(double v, int prec) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                      prec);
    return std::string(buf, res.ptr);
}

double parse_num(const std::string& name, const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(name + ": not a number: '" + s + "'");
    }
}

long parse_int(const std::string& name, const std::string& s) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(name + ": not an integer: '" + s + "'");
    }
}

// value | min:max | min:max:steps (inclusive endpoints, steps = the
// number of grid points)
struct Range {
    double lo = 0, hi = 0;
    std::size_t steps = 1;
    bool scalar = false;
    bool has_steps = false;
};

Range parse_range(const std::string& name, const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    Range r;
    if (parts.size() == 1) {
        r.lo = r.hi = parse_num(name, parts[0]);
        r.scalar = true;
        return r;
    }
    if (parts.size() > 3)
        throw std::invalid_argument(name + ": expected value, min:max or "
                                           "min:max:steps, got '" + s + "'");
    r.lo = parse_num(name, parts[0]);
    r.hi = parse_num(name, parts[1]);
    if (!(r.hi >= r.lo))
        throw std::invalid_argument(name + ": max must be >= min");
    if (parts.size() == 3) {
        const long n = parse_int(name, parts[2]);
        if (n < 1) throw std::invalid_argument(name + ": steps must be >= 1");
        r.steps = static_cast<std::size_t>(n);
        r.has_steps = true;
    }
    return r;
}

std::vector<double> range_grid(const std::string& name, const Range& r) {
    if (r.scalar) return {r.lo};
    if (!r.has_steps)
        throw std::invalid_argument(name + ": grid needs min:max:steps");
    return jjline::num::linspace(r.lo, r.hi, r.steps);
}

std::vector<int> parse_int_list(const std::string& name,
                                const std::string& s) {
    std::vector<int> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, ','))
        out.push_back(static_cast<int>(parse_int(name, cur)));
    if (out.empty()) throw std::invalid_argument(name + ": empty list");
    return out;
}

struct Common {
    std::string output;
    std::string config;
    std::string precision = "17";
    std::string threads = "1";
    bool dump = false;
};

// Every value option is a bound string registered here; the registry is the
// single source of truth for --config keys and --dump-config lines, so a
// dumped file always reads back unchanged.
struct OptReg {
    std::vector<std::pair<std::string, std::string*>> items;

    void add(CLI::App* sub, const std::string& flag, std::string& var,
             const std::string& help) {
        items.emplace_back(flag.substr(2), &var);
        sub->add_option(flag, var, help)->capture_default_str();
    }
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void apply_config(CLI::App* sub, const std::string& path,
                  const OptReg& reg) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("--config: cannot open '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--config: line " +
                                        std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        const auto it = std::find_if(
            reg.items.begin(), reg.items.end(),
            [&](const auto& kv) { return kv.first == key; });
        if (it == reg.items.end())
            throw std::invalid_argument("--config: unknown key '" + key +
                                        "' (line " + std::to_string(lineno) +
                                        ")");
        // command-line flags win over file values
        if (sub->count("--" + key) == 0) *it->second = value;
    }
}

void dump_config(std::ostream& os, const OptReg& reg) {
    for (const auto& [key, var] : reg.items)
        os << key << " = \"" << *var << "\"\n";
}

struct Sink {
    std::ostream* os = nullptr;
    std::ofstream file;
};

Sink open_sink(const std::string& path) {
    Sink s;
    if (path.empty()) {
        s.os = &std::cout;
        return s;
    }
    s.file.open(path);
    if (!s.file)
        throw std::invalid_argument("--output: cannot open '" + path + "'");
    s.os = &s.file;
    return s;
}

// Rows are computed index-parallel, then emitted in index order, so the
// byte stream never depends on the thread count.
template <typename RowFn>
std::vector<std::string> build_rows(std::size_t n, unsigned threads,
                                    const RowFn& row_fn) {
    std::vector<std::string> rows(n);
    std::exception_ptr err;
    std::mutex err_mutex;
    jjline::num::parallel_for(n, threads, [&](std::size_t i) {
        try {
            rows[i] = row_fn(i);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(err_mutex);
            if (!err) err = std::current_exception();
        }
    });
    if (err) std::rethrow_exception(err);
    return rows;
}

// The sink is opened only once every row exists: a failing run writes
// nothing, it never leaves a header or a truncated table behind.
void write_csv(const Common& common, const std::string& header,
               const std::vector<std::string>& rows) {
    Sink sink = open_sink(common.output);
    *sink.os << header << '\n';
    for (const std::string& r : rows) *sink.os << r << '\n';
}

int checked_precision(const Common& c) {
    const long p = parse_int("--precision", c.precision);
    if (p < 1 || p > 17)
        throw std::invalid_argument("--precision: must be in [1, 17]");
    return static_cast<int>(p);
}

unsigned checked_threads(const Common& c) {
    const long t = parse_int("--threads", c.threads);
    if (t < 1 || t > 512)
        throw std::invalid_argument("--threads: must be in [1, 512]");
    return static_cast<unsigned>(t);
}

void add_common(CLI::App* sub, Common& c, OptReg& reg) {
    reg.add(sub, "--precision", c.precision,
            "significant digits for CSV floats, 1..17");
    reg.add(sub, "--threads", c.threads,
            "worker threads for grid sweeps (output is identical for any "
            "value)");
    sub->add_option("--output", c.output, "write CSV here instead of stdout");
    sub->add_option("--config", c.config,
                    "read options from a 'key = value' file ('#' comments); "
                    "command-line flags override file values");
    sub->add_flag("--dump-config", c.dump,
                  "print the effective configuration and exit");
}

// ---------------------------------------------------------------- single
struct SingleCfg {
    Common common;
    std::string z = "1.25", gamma = "0.01", n = "1", omega = "0.5:2.0:600";
};

void run_single(const SingleCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const unsigned threads = checked_threads(cfg.common);
    const jjline::JunctionSpec spec{
        parse_num("--z", cfg.z), parse_num("--gamma", cfg.gamma),
        static_cast<int>(parse_int("--n", cfg.n))};
    const auto grid = range_grid("--omega", parse_range("--omega", cfg.omega));
    const auto rows = build_rows(grid.size(), threads, [&](std::size_t i) {
        const double w = grid[i];
        const auto [r, t] = jjline::scatter(spec, w);
        const double leak = 1.0 - std::norm(r) - std::norm(t);
        std::string row = fmt(w, prec);
        for (double v : {r.real(), r.imag(), t.real(), t.imag(), std::norm(r),
                         std::norm(t), std::arg(r), std::arg(t), leak})
            row += "," + fmt(v, prec);
        return row;
    });
    write_csv(cfg.common,
              "omega,re_r,im_r,re_t,im_t,abs_r2,abs_t2,arg_r,arg_t,leak",
              rows);
}

// ---------------------------------------------------------------- mirror
struct MirrorCfg {
    Common common;
    std::string z = "1.25", gamma = "0.01", n_list = "1,2,4,8",
                omega = "0.5:1.5:601";
};

void run_mirror(const MirrorCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const unsigned threads = checked_threads(cfg.common);
    const double z = parse_num("--z", cfg.z);
    const double gamma = parse_num("--gamma", cfg.gamma);
    const auto ns = parse_int_list("--n-list", cfg.n_list);
    const auto grid = range_grid("--omega", parse_range("--omega", cfg.omega));
    const std::size_t total = ns.size() * grid.size();
    const auto rows = build_rows(total, threads, [&](std::size_t idx) {
        const int n = ns[idx / grid.size()];
        const double w = grid[idx % grid.size()];
        const auto [r, t] = jjline::scatter({z, gamma, n}, w);
        std::string row = std::to_string(n);
        for (double v : {w, std::norm(r), std::norm(t),
                         1.0 - std::norm(r) - std::norm(t)})
            row += "," + fmt(v, prec);
        return row;
    });
    write_csv(cfg.common, "n,omega,abs_r2,abs_t2,leak", rows);
}

// --------------------------------------------------------------- leakage
struct LeakCfg {
    Common common;
    std::string z = "1.25", gamma = "0.01", n = "1", omega = "0.5:2.0:600",
                a_phi = "1.0", z0 = "1.0";
};

void run_leakage(const LeakCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const unsigned threads = checked_threads(cfg.common);
    const jjline::JunctionSpec spec{
        parse_num("--z", cfg.z), parse_num("--gamma", cfg.gamma),
        static_cast<int>(parse_int("--n", cfg.n))};
    const double a_phi = parse_num("--a-phi", cfg.a_phi);
    const double z0 = parse_num("--z0", cfg.z0);
    const auto grid = range_grid("--omega", parse_range("--omega", cfg.omega));
    const auto rows = build_rows(grid.size(), threads, [&](std::size_t i) {
        const double w = grid[i];
        const auto [r, t] = jjline::scatter(spec, w);
        const double leak = 1.0 - std::norm(r) - std::norm(t);
        const double p = jjline::average_power(spec, w, a_phi, z0);
        return fmt(w, prec) + "," + fmt(std::norm(r), prec) + "," +
               fmt(leak, prec) + "," + fmt(p, prec);
    });
    write_csv(cfg.common, "omega,abs_r2,leak,power", rows);
}

// ---------------------------------------------------------------- cavity
struct CavityCfg {
    Common common;
    std::string z = "0.2", d = "3.141592653589793", omega = "0.5:2.5",
                q_gamma = "0.01";
};

void run_cavity(const CavityCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const double z = parse_num("--z", cfg.z);
    const double q_gamma = parse_num("--q-gamma", cfg.q_gamma);
    const Range d_r = parse_range("--d", cfg.d);
    const Range w_r = parse_range("--omega", cfg.omega);
    if (d_r.scalar == w_r.scalar)
        throw std::invalid_argument(
            "cavity: exactly one of --d / --omega must be a window "
            "(min:max); the other is the fixed value");

    jjline::ResonanceSet set;
    double fixed_omega = 0;  // only meaningful on the length axis
    if (!w_r.scalar) {
        set = jjline::cavity_resonances_in_frequency(z, d_r.lo, w_r.lo,
                                                     w_r.hi);
    } else {
        set = jjline::cavity_resonances_in_length(z, w_r.lo, d_r.lo, d_r.hi);
        fixed_omega = w_r.lo;
    }
    const auto condition = [z](double w, double d) {
        return std::tan(d * w) - (2.0 * z / w) * (1.0 - w * w);
    };
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < set.roots.size(); ++i) {
        const double root = set.roots[i];
        const bool freq_axis = set.axis == jjline::ScanAxis::frequency;
        const double w = freq_axis ? root : fixed_omega;
        const double d = freq_axis ? d_r.lo : root;
        const double resid = std::abs(condition(w, d));
        const cplx r_mirror = jjline::scatter({z, q_gamma, 1}, w).r;
        const double q = jjline::quality_factor(w, d, r_mirror);
        rows.push_back(std::to_string(i) + "," + fmt(root, prec) + "," +
                       fmt(resid, prec) + "," + fmt(q, prec));
    }
    write_csv(cfg.common, "index,root,residual,q", rows);
}

// --------------------------------------------------------------- coupled
struct CoupledCfg {
    Common common;
    std::string z = "0.1", z_in = "0.1", d = "2.6", gamma = "1e-4",
                omega = "1.05:1.32", points = "16384";
};

void run_coupled(const CoupledCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const Range w_r = parse_range("--omega", cfg.omega);
    if (w_r.scalar)
        throw std::invalid_argument("--omega: need a window min:max");
    const long points = parse_int("--points", cfg.points);
    if (points < 4096)
        throw std::invalid_argument("--points: must be >= 4096");
    const auto res = jjline::coupled_cavity_coupling(
        parse_num("--z", cfg.z), parse_num("--z-in", cfg.z_in),
        parse_num("--d", cfg.d), parse_num("--gamma", cfg.gamma), w_r.lo,
        w_r.hi, static_cast<std::size_t>(points));
    write_csv(cfg.common, "omega_minus,omega_plus,g,omega0",
              {fmt(res.omega_minus, prec) + "," + fmt(res.omega_plus, prec) +
               "," + fmt(res.g, prec) + "," + fmt(res.omega0, prec)});
}

// ----------------------------------------------------------------- bands
struct BandsCfg {
    Common common;
    std::string z = "0.1", d = "3.141592653589793", omega = "0.1:4.0:8192";
};

void run_bands(const BandsCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const Range w_r = parse_range("--omega", cfg.omega);
    if (w_r.scalar || !w_r.has_steps)
        throw std::invalid_argument("--omega: need min:max:steps");
    const auto diagram = jjline::allowed_bands(
        parse_num("--z", cfg.z), parse_num("--d", cfg.d), w_r.lo, w_r.hi,
        w_r.steps);
    std::vector<std::string> rows;
    for (std::size_t b = 0; b < diagram.bands.size(); ++b)
        for (const auto& pt : diagram.bands[b].points)
            rows.push_back(std::to_string(b) + "," + fmt(pt.k, prec) + "," +
                           fmt(pt.omega, prec));
    write_csv(cfg.common, "band_index,k,omega", rows);
}

// ------------------------------------------------------------- nonlinear
struct NonlinCfg {
    Common common;
    std::string z = "1.25", omega = "0.85:1.05:41", amp = "0.0:0.1:26";
    bool shift_only = false;
};

void run_nonlinear(const NonlinCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const unsigned threads = checked_threads(cfg.common);
    const auto amps = range_grid("--amp", parse_range("--amp", cfg.amp));
    if (cfg.shift_only) {
        const auto rows = build_rows(amps.size(), threads, [&](std::size_t i) {
            const double a = amps[i];
            return fmt(a, prec) + "," + fmt(jjline::pendulum_period(a), prec) +
                   "," + fmt(jjline::resonance_shift(a), prec);
        });
        write_csv(cfg.common, "amp,period,omega_res", rows);
        return;
    }
    const double z = parse_num("--z", cfg.z);
    const auto ws = range_grid("--omega", parse_range("--omega", cfg.omega));
    const std::size_t total = ws.size() * amps.size();
    const auto rows = build_rows(total, threads, [&](std::size_t idx) {
        const double w = ws[idx / amps.size()];
        const double a = amps[idx % amps.size()];
        const auto h = jjline::harmonic_balance({w, a, z});
        return fmt(w, prec) + "," + fmt(a, prec) + "," +
               fmt(std::norm(h.r1), prec) + "," + fmt(std::norm(h.r3), prec) +
               "," + fmt(std::norm(h.r5), prec) + "," +
               (h.converged ? "1" : "0");
    });
    write_csv(cfg.common, "omega,amp,abs_r1_2,abs_r3_2,abs_r5_2,converged",
              rows);
}

// ----------------------------------------------------------------- squid
struct SquidCfg {
    Common common;
    std::string ic = "1e-6", cj = "1e-12", l0 = "4e-7", c0 = "1.6e-10",
                resistance = "5000", flux_ratio = "0.0:0.45:10";
};

void run_squid(const SquidCfg& cfg) {
    const int prec = checked_precision(cfg.common);
    const unsigned threads = checked_threads(cfg.common);
    const double ic = parse_num("--ic", cfg.ic);
    const double cj = parse_num("--cj", cfg.cj);
    const double l0 = parse_num("--l0", cfg.l0);
    const double c0 = parse_num("--c0", cfg.c0);
    const double res = parse_num("--resistance", cfg.resistance);
    const auto fluxes =
        range_grid("--flux-ratio", parse_range("--flux-ratio", cfg.flux_ratio));
    const auto rows = build_rows(fluxes.size(), threads, [&](std::size_t i) {
        const double f = fluxes[i];
        const auto sq = jjline::squid_spec(ic, cj, l0, c0, f, res);
        return fmt(f, prec) + "," + fmt(sq.spec.z, prec) + "," +
               fmt(sq.spec.gamma, prec) + "," + fmt(sq.omega_p, prec) + "," +
               fmt(sq.l_j, prec);
    });
    write_csv(cfg.common, "flux_ratio,z,gamma,omega_p,l_j", rows);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Microwave scattering on junction-loaded transmission lines. "
        "All frequencies are in units of the plasma frequency w_p, lengths "
        "in units of v/w_p (propagation phase = omega * d)."};
    app.require_subcommand(1);

    SingleCfg single_cfg;
    OptReg single_reg;
    CLI::App* single = app.add_subcommand(
        "single", "r, t of one mirror over a frequency grid");
    single_reg.add(single, "--z", single_cfg.z,
                   "impedance ratio Z0/Z_J (dimensionless)");
    single_reg.add(single, "--gamma", single_cfg.gamma,
                   "loss rate Z_J/R (dimensionless)");
    single_reg.add(single, "--n", single_cfg.n, "junctions in the mirror");
    single_reg.add(single, "--omega", single_cfg.omega,
                   "frequency grid min:max:steps (units of w_p)");
    add_common(single, single_cfg.common, single_reg);

    MirrorCfg mirror_cfg;
    OptReg mirror_reg;
    CLI::App* mirror = app.add_subcommand(
        "mirror", "mirror spectra for a family of junction counts");
    mirror_reg.add(mirror, "--z", mirror_cfg.z,
                   "impedance ratio Z0/Z_J (dimensionless)");
    mirror_reg.add(mirror, "--gamma", mirror_cfg.gamma,
                   "loss rate Z_J/R (dimensionless)");
    mirror_reg.add(mirror, "--n-list", mirror_cfg.n_list,
                   "comma list of junction counts");
    mirror_reg.add(mirror, "--omega", mirror_cfg.omega,
                   "frequency grid min:max:steps (units of w_p)");
    add_common(mirror, mirror_cfg.common, mirror_reg);

    LeakCfg leak_cfg;
    OptReg leak_reg;
    CLI::App* leakage = app.add_subcommand(
        "leakage", "absorbed power fraction and cycle-averaged power");
    leak_reg.add(leakage, "--z", leak_cfg.z,
                 "impedance ratio Z0/Z_J (dimensionless)");
    leak_reg.add(leakage, "--gamma", leak_cfg.gamma,
                 "loss rate Z_J/R (dimensionless)");
    leak_reg.add(leakage, "--n", leak_cfg.n, "junctions in the mirror");
    leak_reg.add(leakage, "--omega", leak_cfg.omega,
                 "frequency grid min:max:steps (units of w_p)");
    leak_reg.add(leakage, "--a-phi", leak_cfg.a_phi,
                 "incident flux amplitude (caller units)");
    leak_reg.add(leakage, "--z0", leak_cfg.z0,
                 "line impedance for the power scale (caller units)");
    add_common(leakage, leak_cfg.common, leak_reg);

    CavityCfg cavity_cfg;
    OptReg cavity_reg;
    CLI::App* cavity = app.add_subcommand(
        "cavity", "two-mirror resonances; scans frequency or length");
    cavity_reg.add(cavity, "--z", cavity_cfg.z,
                   "impedance ratio Z0/Z_J (dimensionless)");
    cavity_reg.add(cavity, "--d", cavity_cfg.d,
                   "mirror separation (units of v/w_p); value or window "
                   "min:max");
    cavity_reg.add(cavity, "--omega", cavity_cfg.omega,
                   "frequency (units of w_p); value or window min:max");
    cavity_reg.add(cavity, "--q-gamma", cavity_cfg.q_gamma,
                   "mirror loss used for the q column");
    add_common(cavity, cavity_cfg.common, cavity_reg);

    CoupledCfg coupled_cfg;
    OptReg coupled_reg;
    CLI::App* coupled = app.add_subcommand(
        "coupled", "doublet splitting of two coupled cavities");
    coupled_reg.add(coupled, "--z", coupled_cfg.z,
                    "outer mirror impedance ratio (dimensionless)");
    coupled_reg.add(coupled, "--z-in", coupled_cfg.z_in,
                    "inner mirror impedance ratio (dimensionless)");
    coupled_reg.add(coupled, "--d", coupled_cfg.d,
                    "mirror separation (units of v/w_p)");
    coupled_reg.add(coupled, "--gamma", coupled_cfg.gamma,
                    "loss rate of every mirror (dimensionless)");
    coupled_reg.add(coupled, "--omega", coupled_cfg.omega,
                    "search window min:max (units of w_p)");
    coupled_reg.add(coupled, "--points", coupled_cfg.points,
                    "dense-scan points, >= 4096");
    add_common(coupled, coupled_cfg.common, coupled_reg);

    BandsCfg bands_cfg;
    OptReg bands_reg;
    CLI::App* bands = app.add_subcommand(
        "bands", "Bloch bands of the infinite array (lossless)");
    bands_reg.add(bands, "--z", bands_cfg.z,
                  "impedance ratio Z0/Z_J (dimensionless)");
    bands_reg.add(bands, "--d", bands_cfg.d, "array period (units of v/w_p)");
    bands_reg.add(bands, "--omega", bands_cfg.omega,
                  "scan window min:max:steps (units of w_p)");
    add_common(bands, bands_cfg.common, bands_reg);

    NonlinCfg nonlin_cfg;
    OptReg nonlin_reg;
    CLI::App* nonlinear = app.add_subcommand(
        "nonlinear", "harmonic response |r1|^2, |r3|^2, |r5|^2 over a "
                     "(frequency, amplitude) grid");
    nonlin_reg.add(nonlinear, "--z", nonlin_cfg.z,
                   "impedance ratio Z0/Z_J (dimensionless)");
    nonlin_reg.add(nonlinear, "--omega", nonlin_cfg.omega,
                   "frequency grid min:max:steps (units of w_p)");
    nonlin_reg.add(nonlinear, "--amp", nonlin_cfg.amp,
                   "reduced flux amplitude grid min:max:steps");
    nonlinear->add_flag("--shift-only", nonlin_cfg.shift_only,
                        "emit amp,period,omega_res instead of the grid");
    add_common(nonlinear, nonlin_cfg.common, nonlin_reg);

    SquidCfg squid_cfg;
    OptReg squid_reg;
    CLI::App* squid = app.add_subcommand(
        "squid", "flux-tunable junction mapped to line parameters");
    squid_reg.add(squid, "--ic", squid_cfg.ic, "critical current (A)");
    squid_reg.add(squid, "--cj", squid_cfg.cj, "junction capacitance (F)");
    squid_reg.add(squid, "--l0", squid_cfg.l0,
                  "line inductance per length (H/m)");
    squid_reg.add(squid, "--c0", squid_cfg.c0,
                  "line capacitance per length (F/m)");
    squid_reg.add(squid, "--resistance", squid_cfg.resistance,
                  "subgap resistance (ohm)");
    squid_reg.add(squid, "--flux-ratio", squid_cfg.flux_ratio,
                  "external flux / flux quantum; value or min:max:steps");
    add_common(squid, squid_cfg.common, squid_reg);

    try {
        app.parse(argc, argv);

        // resolves config-file values, honors --dump-config; returns true
        // when the subcommand body should run
        const auto finish = [](CLI::App* sub, Common& c,
                               const OptReg& reg) -> bool {
            if (!c.config.empty()) apply_config(sub, c.config, reg);
            if (c.dump) {
                Sink s = open_sink(c.output);
                dump_config(*s.os, reg);
                return false;
            }
            return true;
        };

        if (single->parsed() && finish(single, single_cfg.common, single_reg))
            run_single(single_cfg);
        if (mirror->parsed() && finish(mirror, mirror_cfg.common, mirror_reg))
            run_mirror(mirror_cfg);
        if (leakage->parsed() && finish(leakage, leak_cfg.common, leak_reg))
            run_leakage(leak_cfg);
        if (cavity->parsed() && finish(cavity, cavity_cfg.common, cavity_reg))
            run_cavity(cavity_cfg);
        if (coupled->parsed() &&
            finish(coupled, coupled_cfg.common, coupled_reg))
            run_coupled(coupled_cfg);
        if (bands->parsed() && finish(bands, bands_cfg.common, bands_reg))
            run_bands(bands_cfg);
        if (nonlinear->parsed() &&
            finish(nonlinear, nonlin_cfg.common, nonlin_reg))
            run_nonlinear(nonlin_cfg);
        if (squid->parsed() && finish(squid, squid_cfg.common, squid_reg))
            run_squid(squid_cfg);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        // numerical failures: singularities, unresolved doublets, ...
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

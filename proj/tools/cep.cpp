#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cep/asymptotics.hpp"
#include "cep/bounds.hpp"
#include "cep/constellation.hpp"
#include "cep/detector.hpp"
#include "cep/exact1d.hpp"
#include "cep/io.hpp"
#include "cep/montecarlo.hpp"
#include "cep/presets.hpp"

namespace {

struct SourceOptions {
    std::string file;
    std::string generator;
    double p1 = 0.22;
    std::size_t order = 4;
};

struct SweepOptions {
    std::string detector = "map";
    std::string error = "sep";
    std::string snr;  // "start:stop:step" in dB of Es/sigma^2
};

void add_source_options(CLI::App& cmd, SourceOptions& src) {
    auto* file = cmd.add_option("--file", src.file, "Constellation file (JSON)")
                     ->check(CLI::ExistingFile);
    auto* gen = cmd.add_option("--gen", src.generator, "Built-in constellation")
                    ->check(CLI::IsMember({"asymmetric3", "symmetric3", "pam", "ring16"}));
    cmd.add_option("--p1", src.p1, "Per-point prior for symmetric3/ring16 generators");
    cmd.add_option("--order", src.order, "Constellation size for the pam generator");
    file->excludes(gen);
    gen->excludes(file);
}

cep::Bundle make_bundle(const SourceOptions& src) {
    if (!src.file.empty()) return cep::load_constellation(src.file);
    if (src.generator == "asymmetric3") return cep::presets::asymmetric_threepoint();
    if (src.generator == "symmetric3") return cep::presets::symmetric_threepoint(src.p1);
    if (src.generator == "pam") return cep::presets::uniform_pam(src.order);
    if (src.generator == "ring16") return cep::presets::ring_4_12(src.p1);
    throw CLI::ValidationError("--file or --gen is required");
}

cep::DetectorKind parse_detector(const std::string& s) {
    return s == "map" ? cep::DetectorKind::map : cep::DetectorKind::ml;
}

cep::ErrorKind parse_error_kind(const std::string& s) {
    return s == "sep" ? cep::ErrorKind::sep : cep::ErrorKind::bep;
}

std::vector<double> parse_snr_grid(const std::string& text) {
    double start = 0, stop = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof())
        throw CLI::ValidationError("--snr expects start:stop:step in dB");
    if (step <= 0.0) throw CLI::ValidationError("--snr step must be positive");
    if (stop < start) throw CLI::ValidationError("--snr stop must not be below start");
    std::vector<double> grid;
    const double slack = step * 1e-9;
    for (double v = start; v <= stop + slack; v += step) grid.push_back(v);
    return grid;
}

// Output sink: --out PATH or stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string csv_cell(std::optional<double> v) {
    return v ? cep::format_full(*v) : std::string{};
}

int run_analyze(const SourceOptions& src, const std::string& out_path) {
    const cep::Bundle bundle = make_bundle(src);
    const cep::AsymptoticSummary summary = cep::summarize_asymptotics(bundle);
    const double es = cep::average_energy(bundle);
    const auto geometry = cep::lb_geometry(bundle, cep::NoiseModel(1.0));

    Output out(out_path);
    auto& os = out.stream();
    os << "key,value\n";
    os << "name," << bundle.name << "\n";
    os << "M," << bundle.size() << "\n";
    os << "N," << bundle.dimension() << "\n";
    os << "med," << cep::format_full(bundle.med.med) << "\n";
    os << "med_pair_count," << bundle.med.med_pairs.size() << "\n";
    os << "avg_energy," << cep::format_full(es) << "\n";
    os << "neighbor_counts,";
    for (std::size_t i = 0; i < bundle.size(); ++i)
        os << (i ? " " : "") << bundle.med.neighbor_counts[i];
    os << "\n";
    os << "B_map_sep," << cep::format_full(summary.B_map_sep) << "\n";
    os << "B_ml_sep," << cep::format_full(summary.B_ml_sep) << "\n";
    os << "R_sep," << cep::format_full(summary.R_sep) << "\n";
    if (summary.R_bep) {
        os << "B_map_bep," << cep::format_full(*summary.B_map_bep) << "\n";
        os << "B_ml_bep," << cep::format_full(*summary.B_ml_bep) << "\n";
        os << "R_bep," << cep::format_full(*summary.R_bep) << "\n";
    }
    os << "min_tau," << cep::format_full(geometry.min_tau) << "\n";
    os << "lb_onset_snr_db," << cep::format_full(cep::snr_db_from_sigma(es, geometry.min_tau))
       << "\n";
    return 0;
}

int run_bounds(const SourceOptions& src, const SweepOptions& sw, const std::string& out_path) {
    const cep::Bundle bundle = make_bundle(src);
    const cep::ErrorSpec spec{parse_detector(sw.detector), parse_error_kind(sw.error)};
    const double es = cep::average_energy(bundle);

    // Compute every row before emitting anything, so errors cannot leave
    // a truncated document behind.
    std::vector<std::string> rows;
    for (double snr_db : parse_snr_grid(sw.snr)) {
        const cep::NoiseModel noise(cep::sigma_from_snr_db(es, snr_db));
        rows.push_back(cep::format_full(snr_db) + ',' + cep::format_full(noise.sigma) + ',' +
                       cep::format_full(cep::error_ub(bundle, spec, noise)) + ',' +
                       csv_cell(cep::error_lb(bundle, spec, noise)) + ',' +
                       cep::format_full(cep::asymptotic_approx(bundle, spec, noise)));
    }

    Output out(out_path);
    auto& os = out.stream();
    os << "snr_db,sigma,ub,lb,asym\n";
    for (const auto& row : rows) os << row << "\n";
    return 0;
}

int run_exact(const SourceOptions& src, const SweepOptions& sw, const std::string& out_path) {
    const cep::Bundle bundle = make_bundle(src);
    const cep::ErrorSpec spec{parse_detector(sw.detector), parse_error_kind(sw.error)};
    const double es = cep::average_energy(bundle);

    std::vector<std::string> rows;
    for (double snr_db : parse_snr_grid(sw.snr)) {
        const cep::NoiseModel noise(cep::sigma_from_snr_db(es, snr_db));
        rows.push_back(cep::format_full(snr_db) + ',' + cep::format_full(noise.sigma) + ',' +
                       cep::format_full(cep::error_exact(bundle, spec, noise)));
    }

    Output out(out_path);
    auto& os = out.stream();
    os << "snr_db,sigma,exact\n";
    for (const auto& row : rows) os << row << "\n";
    return 0;
}

int run_simulate(const SourceOptions& src, const SweepOptions& sw, const cep::SimConfig& base,
                 const std::string& out_path) {
    const cep::Bundle bundle = make_bundle(src);
    cep::SimConfig config = base;
    config.detector = parse_detector(sw.detector);
    config.error = parse_error_kind(sw.error);
    const std::vector<double> grid = parse_snr_grid(sw.snr);
    const auto points = cep::sweep(bundle, grid, config);

    double min_errors = -1.0;
    Output out(out_path);
    auto& os = out.stream();
    os << "snr_db,sigma,ub,lb,asym,sim_estimate,sim_stderr\n";
    for (const auto& pt : points) {
        os << cep::format_full(pt.snr_db) << ',' << cep::format_full(pt.sigma) << ','
           << cep::format_full(pt.ub) << ',' << csv_cell(pt.lb) << ','
           << cep::format_full(pt.asym) << ',' << cep::format_full(pt.sim.estimate) << ','
           << cep::format_full(pt.sim.std_error) << "\n";
        if (min_errors < 0.0 || pt.sim.errors_observed < min_errors)
            min_errors = pt.sim.errors_observed;
    }
    if (min_errors < 100.0) {
        std::cerr << "warning: fewest errors observed at one sweep point is " << min_errors
                  << "; standard errors are unreliable below ~100 observed errors\n";
    }
    return 0;
}

int run_regions(const SourceOptions& src, const std::string& detector, double sigma2,
                const std::string& window_text, std::size_t resolution,
                const std::string& out_path) {
    const cep::Bundle bundle = make_bundle(src);

    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(window_text);
    if (!(in >> x0 >> c1 >> x1 >> c2 >> y0 >> c3 >> y1) || c1 != ':' || c2 != ':' ||
        c3 != ':' || !in.eof())
        throw CLI::ValidationError("--window expects xmin:xmax:ymin:ymax");
    if (!(x0 < x1) || !(y0 < y1))
        throw CLI::ValidationError("--window bounds must satisfy xmin<xmax and ymin<ymax");

    const cep::NoiseModel noise = cep::NoiseModel::from_variance(sigma2);
    const cep::RasterWindow window{x0, x1, y0, y1};
    const auto grid =
        cep::rasterize_regions(bundle, parse_detector(detector), noise, window, resolution);

    Output out(out_path);
    auto& os = out.stream();
    os << "x,y,region\n";
    const double dx = (x1 - x0) / static_cast<double>(resolution);
    const double dy = (y1 - y0) / static_cast<double>(resolution);
    for (std::size_t row = 0; row < resolution; ++row) {
        const double y = y0 + (static_cast<double>(row) + 0.5) * dy;
        for (std::size_t col = 0; col < resolution; ++col) {
            const double x = x0 + (static_cast<double>(col) + 0.5) * dx;
            os << cep::format_full(x) << ',' << cep::format_full(y) << ','
               << grid[row * resolution + col] + 1 << "\n";  // 1-based point indices
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Error probabilities of multidimensional constellations on the AWGN channel"};
    app.require_subcommand(1);

    SourceOptions src;
    SweepOptions sw;
    cep::SimConfig sim_config;
    std::string out_path;
    std::string detector = "map";
    double sigma2 = 1.0;
    std::string window_text = "-2:2:-2:2";
    std::size_t resolution = 256;

    auto add_detector_error = [&](CLI::App* cmd) {
        cmd->add_option("--detector", sw.detector, "Detection rule")
            ->check(CLI::IsMember({"map", "ml"}));
        cmd->add_option("--error", sw.error, "Error probability kind")
            ->check(CLI::IsMember({"sep", "bep"}));
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Output file (default: stdout)");
    };

    auto* analyze = app.add_subcommand(
        "analyze", "MED graph, energy, and asymptotic constants as key,value rows");
    add_source_options(*analyze, src);
    add_out(analyze);

    auto* bounds = app.add_subcommand(
        "bounds", "Upper/lower bounds and the asymptote over an SNR grid");
    add_source_options(*bounds, src);
    add_detector_error(bounds);
    bounds->add_option("--snr", sw.snr, "Es/sigma^2 grid, start:stop:step in dB")->required();
    add_out(bounds);

    auto* exact = app.add_subcommand(
        "exact", "Exact error probability over an SNR grid (1-D constellations)");
    add_source_options(*exact, src);
    add_detector_error(exact);
    exact->add_option("--snr", sw.snr, "Es/sigma^2 grid, start:stop:step in dB")->required();
    add_out(exact);

    auto* simulate = app.add_subcommand(
        "simulate", "Monte Carlo sweep with bounds and asymptote per point");
    add_source_options(*simulate, src);
    add_detector_error(simulate);
    simulate->add_option("--snr", sw.snr, "Es/sigma^2 grid, start:stop:step in dB")->required();
    simulate->add_option("--trials", sim_config.trials, "Trials per sweep point");
    simulate->add_option("--seed", sim_config.seed, "Simulation seed");
    simulate->add_option("--workers", sim_config.workers, "Parallel trial blocks");
    add_out(simulate);

    auto* regions = app.add_subcommand(
        "regions", "Rasterized decision regions of a 2-D constellation");
    add_source_options(*regions, src);
    regions->add_option("--detector", detector, "Detection rule")
        ->check(CLI::IsMember({"map", "ml"}));
    regions->add_option("--sigma2", sigma2, "Per-dimension noise variance (MAP regions)");
    regions->add_option("--window", window_text, "Raster window xmin:xmax:ymin:ymax");
    regions->add_option("--resolution", resolution, "Cells per axis");
    add_out(regions);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(src, out_path);
        if (bounds->parsed()) return run_bounds(src, sw, out_path);
        if (exact->parsed()) return run_exact(src, sw, out_path);
        if (simulate->parsed()) return run_simulate(src, sw, sim_config, out_path);
        if (regions->parsed())
            return run_regions(src, detector, sigma2, window_text, resolution, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

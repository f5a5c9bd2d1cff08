// Command-line frontend: per-atom complexity reports, Z-range scans,
// logarithmic fits, series comparison, and SVG charts.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdlmc/density.hpp"
#include "sdlmc/errors.hpp"
#include "sdlmc/scan.hpp"
#include "sdlmc/svg.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

constexpr int kZSupportedMin = 1;
constexpr int kZSupportedMax = 54;

struct UsageError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sdlmc::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sdlmc::Error("cannot write '" + path + "'");
    out << content;
}

std::vector<sdlmc::GammaParams> gammas_from_flags(const std::vector<std::string>& specs) {
    if (specs.empty()) return sdlmc::default_gamma_params();
    std::vector<sdlmc::GammaParams> out;
    for (const std::string& s : specs) {
        double a = 0, b = 0;
        char tail = 0;
        if (std::sscanf(s.c_str(), "%lf,%lf%c", &a, &b, &tail) != 2)
            throw UsageError{"--gamma expects 'alpha,beta', got '" + s + "'"};
        out.emplace_back(a, b);
    }
    return out;
}

sdlmc::BasisLibrary load_library(const std::string& path) {
    sdlmc::BasisLibrary lib = sdlmc::parse_basis_library(read_file(path));
    for (const std::string& w : lib.warnings) std::cerr << "warning: " << w << "\n";
    return lib;
}

sdlmc::ScanTable load_table(const std::string& path) {
    return sdlmc::table_from_csv(read_file(path));
}

void require_column(const sdlmc::ScanTable& table, const std::string& column) {
    const std::vector<std::string> cols = sdlmc::table_columns(table);
    if (std::find(cols.begin(), cols.end(), column) != cols.end()) return;
    std::string valid;
    for (const std::string& c : cols) valid += (valid.empty() ? "" : ", ") + c;
    throw UsageError{"unknown column '" + column + "'; valid columns: " + valid};
}

void print_measures(const sdlmc::MeasureSet& m) {
    auto row = [](const char* name, double v) { std::printf("%-12s %.10g\n", name, v); };
    std::printf("%-12s %d\n", "Z", m.Z);
    std::printf("%-12s %s\n", "symbol", m.symbol.c_str());
    row("S_r", m.S_r);
    row("S_k", m.S_k);
    row("S", m.S);
    row("E_r", m.E_r);
    row("E_k", m.E_k);
    row("D", m.D);
    row("O", m.O);
    row("r2", m.r2);
    row("T", m.T);
    row("S_r_min", m.bounds.s_r_min);
    row("S_r_max", m.bounds.s_r_max);
    row("S_k_min", m.bounds.s_k_min);
    row("S_k_max", m.bounds.s_k_max);
    row("S_min", m.bounds.s_min);
    row("S_max", m.bounds.s_max);
    row("Delta", m.delta);
    row("Omega", m.omega);
    for (const sdlmc::GammaValue& g : m.gammas) row(g.params.label().c_str(), g.value);
    row("C", m.C);
}

std::vector<std::pair<int, double>> filter_range(std::vector<std::pair<int, double>> s, int lo,
                                                 int hi) {
    std::erase_if(s, [&](const auto& p) { return p.first < lo || p.first > hi; });
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"SDL and LMC complexity measures of atomic electron densities"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Report all measures for one atom");
    int c_z = 0;
    std::string c_basis;
    bool c_hydrogenic = false;
    std::vector<std::string> c_gamma;
    double c_tol = 1e-10;
    compute->add_option("--z", c_z, "Atomic number")->required();
    compute->add_option("--basis", c_basis, "Basis library file");
    compute->add_flag("--hydrogenic", c_hydrogenic, "Use the exact one-electron basis for Z");
    compute->add_option("--gamma", c_gamma, "Gamma exponents 'alpha,beta' (repeatable)");
    compute->add_option("--tol", c_tol, "Quadrature relative tolerance");

    // scan
    auto* scan = app.add_subcommand("scan", "Scan a Z range into a CSV table");
    int s_zmin = 2, s_zmax = 54;
    std::string s_basis, s_out;
    std::vector<std::string> s_gamma;
    double s_tol = 1e-10;
    unsigned s_jobs = 0;
    scan->add_option("--z-min", s_zmin, "First atomic number")->required();
    scan->add_option("--z-max", s_zmax, "Last atomic number")->required();
    scan->add_option("--basis", s_basis, "Basis library file")->required();
    scan->add_option("--out", s_out, "Output CSV path")->required();
    scan->add_option("--gamma", s_gamma, "Gamma exponents 'alpha,beta' (repeatable)");
    scan->add_option("--tol", s_tol, "Quadrature relative tolerance");
    scan->add_option("--jobs", s_jobs, "Worker threads (0 = hardware)");

    // fit
    auto* fit = app.add_subcommand("fit", "Least-squares fit value = a + b ln Z");
    std::string f_column, f_in;
    int f_zmin = 2, f_zmax = 54;
    fit->add_option("--column", f_column, "Column to fit")->required();
    fit->add_option("--in", f_in, "Input CSV from 'scan'")->required();
    fit->add_option("--z-min", f_zmin, "Fit range lower bound (default 2)");
    fit->add_option("--z-max", f_zmax, "Fit range upper bound (default 54)");

    // compare
    auto* compare = app.add_subcommand("compare", "Similarity of two columns");
    std::string p_a, p_b, p_in;
    compare->add_option("--a", p_a, "First column")->required();
    compare->add_option("--b", p_b, "Second column")->required();
    compare->add_option("--in", p_in, "Input CSV from 'scan'")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "SVG line chart of table columns");
    std::string l_in, l_out;
    std::vector<std::string> l_series;
    int l_width = 960, l_height = 600;
    bool l_gnuplot = false;
    plot->add_option("--in", l_in, "Input CSV from 'scan'")->required();
    plot->add_option("--series", l_series, "Column to plot, 'NAME' or 'NAME:scale' (repeatable)")
        ->required();
    plot->add_option("--out", l_out, "Output SVG path")->required();
    plot->add_option("--width", l_width, "SVG width in pixels");
    plot->add_option("--height", l_height, "SVG height in pixels");
    plot->add_flag("--gnuplot", l_gnuplot, "Also write a gnuplot script next to the SVG");

    // validate
    auto* validate = app.add_subcommand("validate", "Parse a basis file and report residuals");
    std::string v_basis;
    validate->add_option("--basis", v_basis, "Basis library file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (compute->parsed()) {
        if (c_z < kZSupportedMin || c_z > kZSupportedMax)
            throw UsageError{"Z out of supported range [1,54]"};
        if (c_basis.empty() && !c_hydrogenic)
            throw UsageError{"compute needs --basis or --hydrogenic"};
        sdlmc::AtomBasis atom;
        if (c_hydrogenic) {
            atom = sdlmc::hydrogenic_basis(c_z);
        } else {
            const sdlmc::BasisLibrary lib = load_library(c_basis);
            const sdlmc::AtomBasis* found = lib.find(c_z);
            if (!found) {
                int lo = 0, hi = 0;
                for (const sdlmc::AtomBasis& a : lib.atoms) {
                    lo = lo == 0 ? a.Z : std::min(lo, a.Z);
                    hi = std::max(hi, a.Z);
                }
                throw sdlmc::Error("Z=" + std::to_string(c_z) + " not in '" + c_basis +
                                   "' (available Z range " + std::to_string(lo) + ".." +
                                   std::to_string(hi) + ")");
            }
            atom = *found;
        }
        sdlmc::MeasureOptions opt;
        opt.rel_tol = c_tol;
        print_measures(sdlmc::compute_atom_measures(atom, gammas_from_flags(c_gamma), opt));
        return 0;
    }

    if (scan->parsed()) {
        const sdlmc::BasisLibrary lib = load_library(s_basis);
        sdlmc::MeasureOptions opt;
        opt.rel_tol = s_tol;
        const sdlmc::ScanTable table =
            sdlmc::scan_range(lib.atoms, s_zmin, s_zmax, gammas_from_flags(s_gamma), s_jobs, opt);
        write_file(s_out, sdlmc::table_to_csv(table));
        std::printf("wrote %zu rows to %s\n", table.rows.size(), s_out.c_str());
        return 0;
    }

    if (fit->parsed()) {
        const sdlmc::ScanTable table = load_table(f_in);
        require_column(table, f_column);
        const auto series = filter_range(sdlmc::column_series(table, f_column), f_zmin, f_zmax);
        const sdlmc::FitResult r = sdlmc::fit_log(series);
        std::printf("%s(Z) = a + b ln Z over Z in [%d,%d] (%zu points)\n", f_column.c_str(),
                    f_zmin, f_zmax, series.size());
        std::printf("a            %.10g\n", r.a);
        std::printf("b            %.10g\n", r.b);
        std::printf("rms_residual %.10g\n", r.rms_residual);
        return 0;
    }

    if (compare->parsed()) {
        const sdlmc::ScanTable table = load_table(p_in);
        require_column(table, p_a);
        require_column(table, p_b);
        const sdlmc::SimilarityReport rep =
            sdlmc::similarity(sdlmc::column_series(table, p_a), sdlmc::column_series(table, p_b));
        std::printf("scale        %.10g\n", rep.scale);
        std::printf("pearson_r    %.10g\n", rep.pearson_r);
        auto list = [](const std::vector<int>& zs) {
            std::string s;
            for (int z : zs) s += (s.empty() ? "" : " ") + std::to_string(z);
            return s.empty() ? std::string("(none)") : s;
        };
        std::printf("shared_minima %s\n", list(rep.shared_minima).c_str());
        std::printf("shared_maxima %s\n", list(rep.shared_maxima).c_str());
        return 0;
    }

    if (plot->parsed()) {
        const sdlmc::ScanTable table = load_table(l_in);
        sdlmc::PlotSpec spec;
        spec.width = l_width;
        spec.height = l_height;
        for (const std::string& s : l_series) {
            sdlmc::PlotSeries ps;
            const std::size_t colon = s.rfind(':');
            if (colon == std::string::npos) {
                ps.column = s;
            } else {
                ps.column = s.substr(0, colon);
                char* endp = nullptr;
                ps.scale = std::strtod(s.c_str() + colon + 1, &endp);
                if (endp == s.c_str() + colon + 1 || *endp != '\0')
                    throw UsageError{"bad series scale in '" + s + "'"};
            }
            require_column(table, ps.column);
            spec.series.push_back(std::move(ps));
        }
        write_file(l_out, sdlmc::render_line_chart(table, spec));
        if (l_gnuplot) {
            const std::string gp_path = l_out + ".gp";
            write_file(gp_path, sdlmc::render_gnuplot_script(table, spec, l_in));
            std::printf("wrote %s and %s\n", l_out.c_str(), gp_path.c_str());
        } else {
            std::printf("wrote %s\n", l_out.c_str());
        }
        return 0;
    }

    if (validate->parsed()) {
        const sdlmc::BasisLibrary lib = load_library(v_basis);
        std::printf("%zu atoms parsed from %s\n", lib.atoms.size(), v_basis.c_str());
        std::printf("%-4s %-7s %-8s %s\n", "Z", "symbol", "orbital", "norm_residual");
        double worst = 0.0;
        for (const sdlmc::OrbitalDiagnostic& d : lib.diagnostics) {
            std::printf("%-4d %-7s %-8s %.3e\n", d.Z, d.atom_symbol.c_str(),
                        d.orbital_label.c_str(), d.norm_residual);
            worst = std::max(worst, d.norm_residual);
        }
        std::printf("worst residual %.3e\n", worst);
        return 0;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const sdlmc::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const sdlmc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}

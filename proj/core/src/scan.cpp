#include "sdlmc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include "sdlmc/density.hpp"
#include "sdlmc/errors.hpp"

namespace sdlmc {

namespace {

template <typename F>
auto run_stage(int z, const char* stage, F&& f) -> decltype(f()) {
    const auto prefix = [&](const char* what) {
        return "Z=" + std::to_string(z) + " stage " + stage + ": " + what;
    };
    try {
        return f();
    } catch (const BoundViolation& e) {
        throw BoundViolation(prefix(e.what()));
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(prefix(e.what()), e.achieved_error());
    } catch (const Error& e) {
        throw Error(prefix(e.what()));
    }
}

} // namespace

std::vector<GammaParams> default_gamma_params() {
    return {GammaParams(1, 1), GammaParams(1, 0.25), GammaParams(0.25, 0), GammaParams(0, 4)};
}

MeasureSet compute_atom_measures(const AtomBasis& atom, const std::vector<GammaParams>& gammas,
                                 const MeasureOptions& options) {
    const int z = atom.Z;
    MeasureSet m;
    m.Z = z;
    m.symbol = atom.symbol;

    auto spec_for = [&options](const RadialDensity& d) {
        QuadratureSpec spec;
        spec.rel_tol = options.rel_tol;
        spec.tail_scale = d.tail_scale;
        return spec;
    };

    const RadialDensity rho = run_stage(z, "position_density", [&] { return position_density(atom); });
    m.S_r = run_stage(z, "S_r", [&] { return shannon_radial(rho, spec_for(rho)); });
    m.E_r = run_stage(z, "E_r", [&] { return onicescu_radial(rho, spec_for(rho)); });

    const RadialDensity nk = run_stage(z, "momentum_density", [&] { return momentum_density(atom); });
    m.S_k = run_stage(z, "S_k", [&] { return shannon_radial(nk, spec_for(nk)); });
    m.E_k = run_stage(z, "E_k", [&] { return onicescu_radial(nk, spec_for(nk)); });

    const Moments mom = run_stage(z, "moments", [&] { return atom_moments(atom); });
    m.r2 = mom.r2;
    m.T = mom.kinetic;
    m.bounds = run_stage(z, "bounds", [&] { return entropy_bounds(m.r2, m.T); });

    m.S = m.S_r + m.S_k;
    const OrderDisorder od =
        run_stage(z, "order_disorder", [&] { return order_disorder(m.S, m.bounds.s_max); });
    m.delta = od.delta;
    m.omega = od.omega;

    for (const GammaParams& gp : gammas) {
        const double g = run_stage(z, "sdl_gamma", [&] { return sdl_gamma(m.delta, gp); });
        m.gammas.push_back({gp, g});
    }

    m.D = m.E_r * m.E_k;
    m.O = 1.0 / m.D;
    m.C = run_stage(z, "lmc", [&] { return lmc_complexity(m.S, m.E_r, m.E_k); });
    return m;
}

ScanTable scan_range(const std::vector<AtomBasis>& library, int z_min, int z_max,
                     const std::vector<GammaParams>& gammas, unsigned jobs,
                     const MeasureOptions& options) {
    if (z_min < 1 || z_max < z_min)
        throw DomainError("scan_range: need 1 <= z_min <= z_max");

    std::vector<const AtomBasis*> atoms;
    std::string missing;
    for (int z = z_min; z <= z_max; ++z) {
        const AtomBasis* found = nullptr;
        for (const AtomBasis& a : library)
            if (a.Z == z) {
                found = &a;
                break;
            }
        if (found) {
            atoms.push_back(found);
        } else {
            if (!missing.empty()) missing += ", ";
            missing += std::to_string(z);
        }
    }
    if (!missing.empty())
        throw DomainError("basis library is missing atoms with Z = {" + missing + "}");

    const std::size_t n = atoms.size();
    std::vector<std::optional<MeasureSet>> slots(n);
    std::vector<std::exception_ptr> errors(n);

    unsigned workers = jobs == 0 ? std::thread::hardware_concurrency() : jobs;
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                slots[i] = compute_atom_measures(*atoms[i], gammas, options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (std::size_t i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);

    ScanTable table;
    table.gamma_params = gammas;
    for (std::size_t i = 0; i < n; ++i) table.rows.push_back(std::move(*slots[i]));
    return table;
}

std::vector<std::string> table_columns(const ScanTable& table) {
    std::vector<std::string> cols = {"S_r", "S_k", "S", "E_r", "E_k", "D", "O",
                                     "r2", "T", "S_min", "S_max", "Delta", "Omega"};
    for (const GammaParams& gp : table.gamma_params) cols.push_back(gp.label());
    cols.push_back("C");
    return cols;
}

double measure_field(const MeasureSet& row, const std::string& column) {
    if (column == "S_r") return row.S_r;
    if (column == "S_k") return row.S_k;
    if (column == "S") return row.S;
    if (column == "E_r") return row.E_r;
    if (column == "E_k") return row.E_k;
    if (column == "D") return row.D;
    if (column == "O") return row.O;
    if (column == "r2") return row.r2;
    if (column == "T") return row.T;
    if (column == "S_min") return row.bounds.s_min;
    if (column == "S_max") return row.bounds.s_max;
    if (column == "Delta") return row.delta;
    if (column == "Omega") return row.omega;
    if (column == "C") return row.C;
    for (const GammaValue& g : row.gammas)
        if (g.params.label() == column) return g.value;
    throw DomainError("unknown column '" + column + "'");
}

std::vector<std::pair<int, double>> column_series(const ScanTable& table,
                                                  const std::string& column) {
    std::vector<std::pair<int, double>> out;
    out.reserve(table.rows.size());
    for (const MeasureSet& row : table.rows) out.emplace_back(row.Z, measure_field(row, column));
    return out;
}

FitResult fit_log(const ScanTable& table, const std::string& column) {
    return fit_log(column_series(table, column));
}

FitResult fit_log(const std::vector<std::pair<int, double>>& series) {
    const std::size_t n = series.size();
    if (n < 3) throw DomainError("fit_log: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [z, y] : series) {
        if (!std::isfinite(y)) throw DomainError("fit_log: non-finite value at Z=" + std::to_string(z));
        const double x = std::log(static_cast<double>(z));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-12 * (sxx * n + 1.0))
        throw DomainError("fit_log: degenerate design (all Z equal)");
    FitResult fit;
    fit.b = (n * sxy - sx * sy) / den;
    fit.a = (sy - fit.b * sx) / static_cast<double>(n);
    double ssr = 0;
    for (const auto& [z, y] : series) {
        const double r = y - (fit.a + fit.b * std::log(static_cast<double>(z)));
        ssr += r * r;
    }
    fit.rms_residual = std::sqrt(ssr / static_cast<double>(n));
    return fit;
}

Extrema local_extrema(const std::vector<std::pair<int, double>>& series) {
    if (series.size() < 3) throw DomainError("local_extrema: need at least 3 points");
    for (std::size_t i = 1; i < series.size(); ++i)
        if (series[i].first <= series[i - 1].first)
            throw DomainError("local_extrema: Z must be strictly increasing");
    Extrema e;
    for (std::size_t i = 1; i + 1 < series.size(); ++i) {
        const double prev = series[i - 1].second;
        const double cur = series[i].second;
        const double nxt = series[i + 1].second;
        if (cur < prev && cur < nxt) e.minima.push_back(series[i].first);
        if (cur > prev && cur > nxt) e.maxima.push_back(series[i].first);
    }
    return e;
}

SimilarityReport similarity(const std::vector<std::pair<int, double>>& series_a,
                            const std::vector<std::pair<int, double>>& series_b) {
    if (series_a.size() != series_b.size() || series_a.size() < 3)
        throw DomainError("similarity: series must share >= 3 aligned points");
    for (std::size_t i = 0; i < series_a.size(); ++i)
        if (series_a[i].first != series_b[i].first)
            throw DomainError("similarity: Z grids differ at index " + std::to_string(i));

    const double n = static_cast<double>(series_a.size());
    double sab = 0, sbb = 0, sa = 0, sb = 0, saa = 0;
    for (std::size_t i = 0; i < series_a.size(); ++i) {
        const double a = series_a[i].second, b = series_b[i].second;
        sab += a * b;
        sbb += b * b;
        saa += a * a;
        sa += a;
        sb += b;
    }
    SimilarityReport rep;
    if (sbb == 0.0) throw DomainError("similarity: second series is identically zero");
    rep.scale = sab / sbb;

    const double var_a = saa - sa * sa / n;
    const double var_b = sbb - sb * sb / n;
    if (var_a <= 0.0 || var_b <= 0.0)
        throw DomainError("similarity: zero-variance series has no correlation");
    rep.pearson_r = (sab - sa * sb / n) / std::sqrt(var_a * var_b);

    const Extrema ea = local_extrema(series_a);
    const Extrema eb = local_extrema(series_b);
    std::set_intersection(ea.minima.begin(), ea.minima.end(), eb.minima.begin(), eb.minima.end(),
                          std::back_inserter(rep.shared_minima));
    std::set_intersection(ea.maxima.begin(), ea.maxima.end(), eb.maxima.begin(), eb.maxima.end(),
                          std::back_inserter(rep.shared_maxima));
    return rep;
}

std::string table_to_csv(const ScanTable& table) {
    std::string out = "Z,symbol";
    for (const std::string& c : table_columns(table)) out += "," + c;
    out += "\n";
    char buf[32];
    for (const MeasureSet& row : table.rows) {
        out += std::to_string(row.Z);
        out += ",";
        out += row.symbol;
        for (const std::string& c : table_columns(table)) {
            std::snprintf(buf, sizeof buf, ",%.9e", measure_field(row, c));
            out += buf;
        }
        out += "\n";
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    return out;
}

} // namespace

ScanTable table_from_csv(std::string_view csv) {
    std::istringstream is{std::string(csv)};
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty CSV", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 16 || header[0] != "Z" || header[1] != "symbol" || header.back() != "C")
        throw ParseError("unexpected CSV header '" + line + "'", 1);

    static const std::vector<std::string> kFixed = {"S_r", "S_k", "S", "E_r", "E_k", "D", "O",
                                                    "r2", "T", "S_min", "S_max", "Delta", "Omega"};
    for (std::size_t i = 0; i < kFixed.size(); ++i)
        if (header[2 + i] != kFixed[i])
            throw ParseError("CSV column " + std::to_string(2 + i) + " is '" + header[2 + i] +
                                 "', expected '" + kFixed[i] + "'",
                             1);

    ScanTable table;
    for (std::size_t i = 2 + kFixed.size(); i + 1 < header.size(); ++i) {
        const std::string& name = header[i];
        double a = 0, b = 0;
        if (std::sscanf(name.c_str(), "Gamma_%lf_%lf", &a, &b) != 2)
            throw ParseError("unexpected gamma column '" + name + "'", 1);
        table.gamma_params.push_back(GammaParams(a, b));
    }

    long line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != header.size())
            throw ParseError("row has " + std::to_string(f.size()) + " fields, expected " +
                                 std::to_string(header.size()),
                             line_no);
        auto num = [&](std::size_t idx) {
            char* endp = nullptr;
            const double v = std::strtod(f[idx].c_str(), &endp);
            if (endp == f[idx].c_str() || *endp != '\0')
                throw ParseError("bad number '" + f[idx] + "' in column " + header[idx], line_no);
            return v;
        };
        MeasureSet row;
        row.Z = static_cast<int>(num(0));
        row.symbol = f[1];
        std::size_t i = 2;
        row.S_r = num(i++);
        row.S_k = num(i++);
        row.S = num(i++);
        row.E_r = num(i++);
        row.E_k = num(i++);
        row.D = num(i++);
        row.O = num(i++);
        row.r2 = num(i++);
        row.T = num(i++);
        const double s_min = num(i++);
        const double s_max = num(i++);
        row.delta = num(i++);
        row.omega = num(i++);
        // The r/k bound splits are not CSV columns; rebuild them from the
        // stored moments and keep the stored totals verbatim.
        row.bounds = entropy_bounds(row.r2, row.T);
        row.bounds.s_min = s_min;
        row.bounds.s_max = s_max;
        for (const GammaParams& gp : table.gamma_params) {
            row.gammas.push_back({gp, num(i++)});
        }
        row.C = num(i++);
        if (!table.rows.empty() && row.Z <= table.rows.back().Z)
            throw ParseError("rows must be in ascending Z order", line_no);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace sdlmc

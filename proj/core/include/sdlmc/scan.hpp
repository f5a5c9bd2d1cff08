#ifndef SDLMC_SCAN_HPP
#define SDLMC_SCAN_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdlmc/measures.hpp"
#include "sdlmc/sto.hpp"

namespace sdlmc {

/// Ordered sequence of per-atom measure records over a Z range. Every row
/// carries values for the same list of gamma exponent pairs.
struct ScanTable {
    std::vector<MeasureSet> rows; // ascending Z
    std::vector<GammaParams> gamma_params;
};

/// The (alpha, beta) pairs used throughout the reports:
/// (1,1), (1,1/4), (1/4,0), (0,4).
std::vector<GammaParams> default_gamma_params();

/// Pipeline tuning; rel_tol overrides the quadrature relative tolerance of
/// the four entropy/energy integrals (the CLI --tol flag).
struct MeasureOptions {
    double rel_tol = 1e-10;
};

/// Full per-atom pipeline: densities, entropies, information energies,
/// moments, bounds, disorder/order, every requested Gamma, and C.
/// Failures carry the atom's Z and the stage name.
MeasureSet compute_atom_measures(const AtomBasis& atom, const std::vector<GammaParams>& gammas,
                                 const MeasureOptions& options = {});

/// One row per Z in [z_min, z_max], computed concurrently (jobs = 0 picks the
/// hardware thread count) and assembled in Z order. Atoms absent from the
/// library are an error listing the missing Z values.
ScanTable scan_range(const std::vector<AtomBasis>& library, int z_min, int z_max,
                     const std::vector<GammaParams>& gammas, unsigned jobs = 0,
                     const MeasureOptions& options = {});

/// Names accepted as column selectors for the table, in CSV order.
std::vector<std::string> table_columns(const ScanTable& table);

/// Numeric field by column name; throws DomainError for unknown names.
double measure_field(const MeasureSet& row, const std::string& column);

/// (Z, value) pairs for one column.
std::vector<std::pair<int, double>> column_series(const ScanTable& table,
                                                  const std::string& column);

/// Ordinary least squares of value against ln Z: value = a + b ln Z.
struct FitResult {
    double a = 0;            // intercept, nats
    double b = 0;            // slope vs ln Z, nats
    double rms_residual = 0; // nats
};
FitResult fit_log(const ScanTable& table, const std::string& column);
FitResult fit_log(const std::vector<std::pair<int, double>>& series);

/// Strict interior local extrema; plateaus and ties yield no extremum.
struct Extrema {
    std::vector<int> minima;
    std::vector<int> maxima;
};
Extrema local_extrema(const std::vector<std::pair<int, double>>& series);

/// Least-squares scale between two aligned series (a ~ scale * b), their
/// Pearson correlation, and the extrema they share.
struct SimilarityReport {
    double scale = 0;
    double pearson_r = 0;
    std::vector<int> shared_minima;
    std::vector<int> shared_maxima;
};
SimilarityReport similarity(const std::vector<std::pair<int, double>>& series_a,
                            const std::vector<std::pair<int, double>>& series_b);

/// CSV with the fixed header
/// Z,symbol,S_r,S_k,S,E_r,E_k,D,O,r2,T,S_min,S_max,Delta,Omega,<Gamma...>,C
/// and values in scientific notation with 10 significant digits.
std::string table_to_csv(const ScanTable& table);
ScanTable table_from_csv(std::string_view csv);

} // namespace sdlmc

#endif

#ifndef SDLMC_SVG_HPP
#define SDLMC_SVG_HPP

#include <string>
#include <vector>

#include "sdlmc/scan.hpp"

namespace sdlmc {

struct PlotSeries {
    std::string column;
    double scale = 1.0; // plotted value = scale * column value
};

struct PlotSpec {
    std::vector<PlotSeries> series; // at least one
    int width = 960;
    int height = 600;

    void validate() const;
};

/// Standalone SVG line chart over Z: axes with ticks, one polyline per
/// series, round markers at strict local extrema (filled = minimum,
/// hollow = maximum), and a legend. Deterministic output bytes.
std::string render_line_chart(const ScanTable& table, const PlotSpec& spec);

/// gnuplot script plotting the same columns straight from the CSV file.
std::string render_gnuplot_script(const ScanTable& table, const PlotSpec& spec,
                                  const std::string& csv_path);

} // namespace sdlmc

#endif

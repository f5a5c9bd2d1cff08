#include "sdlmc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sdlmc/errors.hpp"

namespace sdlmc {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

// Round tick spacing to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
    const double raw = span / std::max(target_ticks, 2);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double nice = 10.0;
    if (frac <= 1.0) nice = 1.0;
    else if (frac <= 2.0) nice = 2.0;
    else if (frac <= 5.0) nice = 5.0;
    return nice * mag;
}

std::string num_label(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

void PlotSpec::validate() const {
    if (series.empty()) throw DomainError("plot needs at least one series");
    for (const PlotSeries& s : series)
        if (!(s.scale > 0.0)) throw DomainError("series scale factors must be positive");
    if (width < 100 || height < 100) throw DomainError("plot dimensions too small");
}

std::string render_line_chart(const ScanTable& table, const PlotSpec& spec) {
    spec.validate();
    if (table.rows.size() < 2) throw DomainError("plot needs at least two rows");

    struct Data {
        std::vector<std::pair<int, double>> points;
        std::string label;
    };
    std::vector<Data> data;
    double ymin = 0, ymax = 0;
    bool first = true;
    for (const PlotSeries& s : spec.series) {
        Data d;
        d.points = column_series(table, s.column);
        for (auto& [z, v] : d.points) v *= s.scale;
        d.label = s.scale == 1.0 ? s.column : num_label(s.scale) + " x " + s.column;
        for (const auto& [z, v] : d.points) {
            if (first || v < ymin) ymin = v;
            if (first || v > ymax) ymax = v;
            first = false;
        }
        data.push_back(std::move(d));
    }
    const int zmin = table.rows.front().Z;
    const int zmax = table.rows.back().Z;
    if (ymax == ymin) {
        ymax += 1.0;
        ymin -= 1.0;
    }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double ml = 72, mr = 16, mt = 18, mb = 46;
    const double pw = spec.width - ml - mr;
    const double ph = spec.height - mt - mb;
    auto X = [&](double z) { return ml + pw * (z - zmin) / std::max(1.0, double(zmax - zmin)); };
    auto Y = [&](double v) { return mt + ph * (1.0 - (v - ymin) / (ymax - ymin)); };

    std::string svg;
    svg += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
               "viewBox=\"0 0 %.0f %.0f\">\n",
               double(spec.width), double(spec.height), double(spec.width), double(spec.height));
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";

    // frame
    svg += fmt("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
               "stroke=\"black\"/>\n",
               ml, mt, pw, ph);

    // x ticks at integer Z
    const double xstep = std::max(1.0, nice_step(zmax - zmin, 8));
    for (double z = std::ceil(zmin / xstep) * xstep; z <= zmax + 1e-9; z += xstep) {
        const double x = X(z);
        svg += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", x,
                   mt + ph, x, mt + ph + 5);
        svg += fmt("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">", x, mt + ph + 20);
        svg += num_label(z);
        svg += "</text>\n";
    }
    svg += fmt("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">Z</text>\n", ml + pw / 2,
               mt + ph + 38);

    // y ticks
    const double ystep = nice_step(ymax - ymin, 6);
    for (double v = std::ceil(ymin / ystep) * ystep; v <= ymax + 1e-9 * ystep; v += ystep) {
        const double y = Y(v);
        svg += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                   ml - 5, y, ml, y);
        svg += fmt("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">", ml - 8, y + 4);
        svg += num_label(v);
        svg += "</text>\n";
    }

    for (std::size_t si = 0; si < data.size(); ++si) {
        const char* color = kPalette[si % kPaletteSize];
        std::string pts;
        for (const auto& [z, v] : data[si].points)
            pts += fmt("%.2f,%.2f ", X(z), Y(v));
        if (!pts.empty()) pts.pop_back();
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        svg += pts;
        svg += "\"/>\n";

        const Extrema ex = local_extrema(data[si].points);
        auto value_at = [&](int z) {
            for (const auto& [zz, v] : data[si].points)
                if (zz == z) return v;
            return 0.0;
        };
        for (int z : ex.minima)
            svg += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"", X(z), Y(value_at(z))) +
                   color + "\"/>\n";
        for (int z : ex.maxima)
            svg += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"white\" stroke=\"", X(z),
                       Y(value_at(z))) +
                   color + "\"/>\n";

        // legend
        const double ly = mt + 16 + 18 * double(si);
        svg += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"", ml + pw - 150,
                   ly - 4, ml + pw - 126, ly - 4) +
               color + "\" stroke-width=\"1.5\"/>\n";
        svg += fmt("<text x=\"%.2f\" y=\"%.2f\">", ml + pw - 120, ly);
        svg += data[si].label;
        svg += "</text>\n";
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

std::string render_gnuplot_script(const ScanTable& table, const PlotSpec& spec,
                                  const std::string& csv_path) {
    spec.validate();
    const std::vector<std::string> cols = table_columns(table);
    std::string gp = "set datafile separator \",\"\nset key top left\nset xlabel \"Z\"\n";
    gp += "plot ";
    bool first = true;
    for (const PlotSeries& s : spec.series) {
        const auto it = std::find(cols.begin(), cols.end(), s.column);
        if (it == cols.end()) throw DomainError("unknown column '" + s.column + "'");
        const long idx = 3 + (it - cols.begin()); // 1-based; Z,symbol lead
        if (!first) gp += ", \\\n     ";
        first = false;
        gp += "\"" + csv_path + "\" using 1:(" + num_label(s.scale) + "*$" + std::to_string(idx) +
              ") with lines title \"" +
              (s.scale == 1.0 ? s.column : num_label(s.scale) + " x " + s.column) + "\"";
    }
    gp += "\n";
    return gp;
}

} // namespace sdlmc

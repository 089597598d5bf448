#pragma once

#include <string>
#include <vector>

#include "eigenflow/common.hpp"
#include "eigenflow/homotopy.hpp"

namespace eigenflow::render {

struct Window {
    double re_min = -2.1;
    double re_max = 0.9;
    double im_min = -1.25;
    double im_max = 1.25;
    int width_px = 600;
    int height_px = 500;
};

struct Raster {
    Window window;
    int max_iter = 0;
    std::vector<int> counts;   // row-major, row 0 at im_max

    int at(int row, int col) const {
        return counts[static_cast<std::size_t>(row) * window.width_px + col];
    }
};

struct MarkerStyle {
    double radius_px = 1.5;
    std::string color = "#d40000";
};

struct Figure {
    std::string filename;
    std::string svg;
    long dropped = 0;   // points outside the window
};

// Escape-time raster over pixel centers; rows render in parallel.
Raster render_mandelbrot(const Window& w, int max_iter = 1000, double radius = 2.0);

// Deterministic SVG: run-length grayscale background plus one circle marker
// per in-window point. Floats are printed with exactly 6 decimals and the
// text carries no timestamps, so identical inputs give identical bytes.
Figure overlay_points(const Raster& r, const std::vector<Complex>& points,
                      const MarkerStyle& style = {});

// One figure per t over the deformed point set; filenames <kind>_t<percent>.svg.
std::vector<Figure> snapshot_series(const homotopy::HomotopySpec& spec,
                                    const std::vector<Complex>& points,
                                    const std::vector<double>& ts, const Window& w,
                                    int max_iter = 400);

std::string snapshot_filename(const homotopy::HomotopySpec& spec, double t);

void write_pgm(const Raster& r, const std::string& path);

}  // namespace eigenflow::render

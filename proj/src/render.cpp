#include "eigenflow/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "eigenflow/dynamics.hpp"
#include "eigenflow/threads.hpp"

namespace eigenflow::render {

namespace {

void check_window(const Window& w) {
    if (!(w.re_min < w.re_max) || !(w.im_min < w.im_max))
        throw InvalidArgument("window must have positive area");
    if (w.width_px < 1 || w.height_px < 1)
        throw InvalidArgument("window must span at least one pixel");
}

void append_fixed6(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out += buf;
}

void append_int(std::string& out, long v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%ld", v);
    out += buf;
}

int shade_of(int count, int max_iter) {
    if (count >= max_iter) return 0;   // interior: black
    return static_cast<int>((255L * count) / max_iter);
}

void append_hex_gray(std::string& out, int shade) {
    static const char* digits = "0123456789abcdef";
    const char hi = digits[(shade >> 4) & 0xF];
    const char lo = digits[shade & 0xF];
    out += '#';
    out += hi;
    out += lo;
    out += hi;
    out += lo;
    out += hi;
    out += lo;
}

}  // namespace

Raster render_mandelbrot(const Window& w, int max_iter, double radius) {
    check_window(w);
    if (max_iter < 1) throw InvalidArgument("max_iter must be >= 1");

    Raster r;
    r.window = w;
    r.max_iter = max_iter;
    r.counts.assign(static_cast<std::size_t>(w.width_px) * w.height_px, 0);

    const double dre = (w.re_max - w.re_min) / w.width_px;
    const double dim = (w.im_max - w.im_min) / w.height_px;
    parallel_for(static_cast<std::size_t>(w.height_px), [&](std::size_t row) {
        const double im = w.im_max - (static_cast<double>(row) + 0.5) * dim;
        for (int col = 0; col < w.width_px; ++col) {
            const double re = w.re_min + (col + 0.5) * dre;
            const auto esc = dynamics::mandelbrot_escape(Complex(re, im), max_iter, radius);
            r.counts[row * static_cast<std::size_t>(w.width_px) + col] = esc.iterations;
        }
    });
    return r;
}

Figure overlay_points(const Raster& r, const std::vector<Complex>& points,
                      const MarkerStyle& style) {
    check_window(r.window);
    const Window& w = r.window;

    Figure fig;
    std::string& svg = fig.svg;
    svg.reserve(1 << 16);
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    append_int(svg, w.width_px);
    svg += "\" height=\"";
    append_int(svg, w.height_px);
    svg += "\" viewBox=\"0 0 ";
    append_int(svg, w.width_px);
    svg += " ";
    append_int(svg, w.height_px);
    svg += "\">\n";

    // Background: run-length merged grayscale rects, one row band at a time.
    for (int row = 0; row < w.height_px; ++row) {
        int col = 0;
        while (col < w.width_px) {
            const int shade = shade_of(r.at(row, col), r.max_iter);
            int run = 1;
            while (col + run < w.width_px && shade_of(r.at(row, col + run), r.max_iter) == shade)
                ++run;
            svg += "<rect x=\"";
            append_int(svg, col);
            svg += "\" y=\"";
            append_int(svg, row);
            svg += "\" width=\"";
            append_int(svg, run);
            svg += "\" height=\"1\" fill=\"";
            append_hex_gray(svg, shade);
            svg += "\"/>\n";
            col += run;
        }
    }

    const double sx = w.width_px / (w.re_max - w.re_min);
    const double sy = w.height_px / (w.im_max - w.im_min);
    for (const Complex& p : points) {
        if (p.real() < w.re_min || p.real() > w.re_max || p.imag() < w.im_min ||
            p.imag() > w.im_max) {
            ++fig.dropped;
            continue;
        }
        svg += "<circle cx=\"";
        append_fixed6(svg, (p.real() - w.re_min) * sx);
        svg += "\" cy=\"";
        append_fixed6(svg, (w.im_max - p.imag()) * sy);
        svg += "\" r=\"";
        append_fixed6(svg, style.radius_px);
        svg += "\" fill=\"";
        svg += style.color;
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return fig;
}

std::string snapshot_filename(const homotopy::HomotopySpec& spec, double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_t%03d.svg", homotopy::kind_name(spec.kind),
                  static_cast<int>(std::lround(t * 100.0)));
    return buf;
}

std::vector<Figure> snapshot_series(const homotopy::HomotopySpec& spec,
                                    const std::vector<Complex>& points,
                                    const std::vector<double>& ts, const Window& w,
                                    int max_iter) {
    for (double t : ts)
        if (!(t >= 0.0 && t <= 1.0)) throw RangeError("snapshot t values must lie in [0, 1]");

    // One shared backdrop; only the markers move between frames.
    const Raster backdrop = render_mandelbrot(w, max_iter);
    std::vector<Figure> figures;
    figures.reserve(ts.size());
    for (double t : ts) {
        std::vector<Complex> moved;
        moved.reserve(points.size());
        for (const Complex& p : points) moved.push_back(spec.apply(p, t));
        Figure fig = overlay_points(backdrop, moved);
        fig.filename = snapshot_filename(spec, t);
        figures.push_back(std::move(fig));
    }
    return figures;
}

void write_pgm(const Raster& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "P5\n" << r.window.width_px << " " << r.window.height_px << "\n255\n";
    for (int row = 0; row < r.window.height_px; ++row)
        for (int col = 0; col < r.window.width_px; ++col)
            out.put(static_cast<char>(shade_of(r.at(row, col), r.max_iter)));
    if (!out) throw Error("failed writing " + path);
}

}  // namespace eigenflow::render

#pragma once

// Dependency-light SVG 1.1 scatter/line rendering.  CSV is the data
// contract; these plots are best-effort visual companions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "floquet/csv.hpp"

namespace floquet {

struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f6fb2";
    bool line = true;
    bool markers = false;
};

struct SvgOptions {
    int width = 720;
    int height = 520;
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
};

inline std::string render_svg(const std::vector<SvgSeries>& series, const SvgOptions& opt) {
    const double ml = 70, mr = 20, mt = opt.title.empty() ? 20 : 44, mb = 52;
    const double pw = opt.width - ml - mr, ph = opt.height - mt - mb;

    auto tx = [&](double v) { return opt.log_x ? std::log10(v) : v; };
    auto ty = [&](double v) { return opt.log_y ? std::log10(std::abs(v)) : v; };

    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
    double y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (opt.log_x && !(s.x[i] > 0.0)) continue;
            if (opt.log_y && s.y[i] == 0.0) continue;
            x0 = std::min(x0, tx(s.x[i]));
            x1 = std::max(x1, tx(s.x[i]));
            y0 = std::min(y0, ty(s.y[i]));
            y1 = std::max(y1, ty(s.y[i]));
        }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    const double xpad = 0.04 * (x1 - x0), ypad = 0.06 * (y1 - y0);
    x0 -= xpad;
    x1 += xpad;
    y0 -= ypad;
    y1 += ypad;

    auto px = [&](double v) { return ml + (tx(v) - x0) / (x1 - x0) * pw; };
    auto py = [&](double v) { return mt + ph - (ty(v) - y0) / (y1 - y0) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opt.width) + "\" height=\"" + std::to_string(opt.height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<rect x=\"" + format_value(ml) + "\" y=\"" + format_value(mt) + "\" width=\"" +
         format_value(pw) + "\" height=\"" + format_value(ph) +
         "\" fill=\"none\" stroke=\"#555\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double fx = x0 + (x1 - x0) * i / 5.0;
        const double fy = y0 + (y1 - y0) * i / 5.0;
        const double gx = ml + pw * i / 5.0;
        const double gy = mt + ph - ph * i / 5.0;
        const double lx = opt.log_x ? std::pow(10.0, fx) : fx;
        const double ly = opt.log_y ? std::pow(10.0, fy) : fy;
        char lab[40];
        std::snprintf(lab, sizeof(lab), "%.3g", lx);
        s += "<text x=\"" + format_value(gx) + "\" y=\"" + format_value(mt + ph + 18) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + lab + "</text>\n";
        std::snprintf(lab, sizeof(lab), "%.3g", ly);
        s += "<text x=\"" + format_value(ml - 6) + "\" y=\"" + format_value(gy + 4) +
             "\" font-size=\"11\" text-anchor=\"end\">" + lab + "</text>\n";
    }
    if (!opt.title.empty())
        s += "<text x=\"" + std::to_string(opt.width / 2) +
             "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" + opt.title + "</text>\n";
    if (!opt.x_label.empty())
        s += "<text x=\"" + std::to_string(opt.width / 2) + "\" y=\"" +
             std::to_string(opt.height - 10) + "\" font-size=\"12\" text-anchor=\"middle\">" +
             opt.x_label + "</text>\n";
    if (!opt.y_label.empty())
        s += "<text x=\"16\" y=\"" + std::to_string(opt.height / 2) +
             "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
             std::to_string(opt.height / 2) + ")\">" + opt.y_label + "</text>\n";

    for (const auto& ser : series) {
        if (ser.line && ser.x.size() > 1) {
            std::string pts;
            for (std::size_t i = 0; i < ser.x.size(); ++i) {
                if (opt.log_x && !(ser.x[i] > 0.0)) continue;
                if (opt.log_y && ser.y[i] == 0.0) continue;
                pts += format_value(px(ser.x[i])) + "," + format_value(py(ser.y[i])) + " ";
            }
            s += "<polyline fill=\"none\" stroke=\"" + ser.color +
                 "\" stroke-width=\"1.4\" points=\"" + pts + "\"/>\n";
        }
        if (ser.markers || !ser.line) {
            for (std::size_t i = 0; i < ser.x.size(); ++i) {
                if (opt.log_x && !(ser.x[i] > 0.0)) continue;
                if (opt.log_y && ser.y[i] == 0.0) continue;
                s += "<circle cx=\"" + format_value(px(ser.x[i])) + "\" cy=\"" +
                     format_value(py(ser.y[i])) + "\" r=\"2.6\" fill=\"" + ser.color + "\"/>\n";
            }
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace floquet

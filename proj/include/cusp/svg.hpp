#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cusp {

// Minimal SVG 1.1 writer for curve families: one polyline per series, an
// optional marker dot per series (the image of t = 0) and a text legend.
// The viewBox is fitted to the sampled points with a 5% margin. The y axis
// is flipped on output so the picture matches mathematical orientation.
class SvgPlot {
public:
    struct Series {
        std::string label;
        std::string color;
        std::vector<std::array<double, 2>> points;
        std::optional<std::array<double, 2>> marker;
    };

    void add_series(Series s) { series_.push_back(std::move(s)); }
    void add_comment(std::string c) { comments_.push_back(std::move(c)); }

    static const char* color(int i) {
        static const char* palette[] = {"#d62728", "#2ca02c", "#ff7f0e", "#1f77b4",
                                        "#9467bd", "#17becf", "#8c564b", "#e377c2"};
        return palette[i % 8];
    }

    std::string render() const {
        double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
        bool any = false;
        auto grow = [&](double x, double y) {
            if (!any) {
                lo_x = hi_x = x;
                lo_y = hi_y = y;
                any = true;
            } else {
                lo_x = std::min(lo_x, x);
                hi_x = std::max(hi_x, x);
                lo_y = std::min(lo_y, y);
                hi_y = std::max(hi_y, y);
            }
        };
        for (const auto& s : series_) {
            for (const auto& p : s.points) grow(p[0], -p[1]);
            if (s.marker) grow((*s.marker)[0], -(*s.marker)[1]);
        }
        double w = hi_x - lo_x, h = hi_y - lo_y;
        if (w <= 0) w = 1;
        if (h <= 0) h = 1;
        const double mx = 0.05 * w, my = 0.05 * h;
        lo_x -= mx;
        lo_y -= my;
        w += 2 * mx;
        h += 2 * my;
        const double diag = std::hypot(w, h);

        std::ostringstream os;
        os.precision(10);
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"640\" "
              "viewBox=\""
           << lo_x << " " << lo_y << " " << w << " " << h << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
        for (const auto& c : comments_) os << "<!-- " << escape(c) << " -->\n";
        for (const auto& s : series_) {
            os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"" << diag * 0.004
               << "\" points=\"";
            for (std::size_t i = 0; i < s.points.size(); ++i) {
                if (i) os << " ";
                os << s.points[i][0] << "," << -s.points[i][1];
            }
            os << "\"/>\n";
        }
        for (const auto& s : series_) {
            if (!s.marker) continue;
            os << "<circle cx=\"" << (*s.marker)[0] << "\" cy=\"" << -(*s.marker)[1] << "\" r=\""
               << diag * 0.008 << "\" fill=\"" << s.color << "\"/>\n";
        }
        const double fs = diag * 0.03;
        double ty = lo_y + my * 0.4 + fs;
        for (const auto& s : series_) {
            os << "<text x=\"" << lo_x + mx * 0.4 << "\" y=\"" << ty << "\" font-size=\"" << fs
               << "\" fill=\"" << s.color << "\">" << escape(s.label) << "</text>\n";
            ty += fs * 1.2;
        }
        os << "</svg>\n";
        return os.str();
    }

private:
    static std::string escape(const std::string& s) {
        std::string r;
        for (char c : s) {
            switch (c) {
                case '<': r += "&lt;"; break;
                case '>': r += "&gt;"; break;
                case '&': r += "&amp;"; break;
                case '-': r += (r.size() && r.back() == '-') ? " -" : "-"; break;
                default: r += c;
            }
        }
        return r;
    }

    std::vector<Series> series_;
    std::vector<std::string> comments_;
};

} // namespace cusp

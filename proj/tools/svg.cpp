#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace parma::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 320;
constexpr double kMargin = 40;

struct Frame {
    double lo;
    double hi;
    std::size_t n;

    double x(double i) const { return kMargin + (kWidth - 2 * kMargin) * i / std::max<double>(1.0, double(n) - 1); }
    double y(double v) const { return kHeight - kMargin - (kHeight - 2 * kMargin) * (v - lo) / (hi - lo); }
};

Frame frame_for(const std::vector<double>& y, double extra) {
    double lo = -extra;
    double hi = extra;
    for (double v : y) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == lo) {
        hi = lo + 1;
    }
    return {lo, hi, y.size()};
}

std::string open(const std::string& title) {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << title << "</text>\n";
    return s.str();
}

}  // namespace

std::string svg_line_plot(const std::vector<double>& y, const std::string& title) {
    const Frame f = frame_for(y, 0.0);
    std::ostringstream s;
    s << open(title) << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < y.size(); ++i) {
        s << f.x(double(i)) << ',' << f.y(y[i]) << ' ';
    }
    s << "\"/>\n</svg>\n";
    return s.str();
}

std::string svg_stem_plot(const std::vector<double>& y, double band, const std::string& title) {
    Frame f = frame_for(y, band);
    f.n = y.size() + 1;
    std::ostringstream s;
    s << open(title);
    s << "<line x1=\"" << f.x(0) << "\" x2=\"" << f.x(double(y.size())) << "\" y1=\"" << f.y(0) << "\" y2=\""
      << f.y(0) << "\" stroke=\"black\"/>\n";
    for (double b : {band, -band}) {
        s << "<line x1=\"" << f.x(0) << "\" x2=\"" << f.x(double(y.size())) << "\" y1=\"" << f.y(b) << "\" y2=\""
          << f.y(b) << "\" stroke=\"gray\" stroke-dasharray=\"4,3\"/>\n";
    }
    for (std::size_t k = 0; k < y.size(); ++k) {
        const double x = f.x(double(k + 1));
        s << "<line x1=\"" << x << "\" x2=\"" << x << "\" y1=\"" << f.y(0) << "\" y2=\"" << f.y(y[k])
          << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace parma::cli

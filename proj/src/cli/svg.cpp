#include "robin/cli/svg.hpp"

#include "robin/cli/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace robin::cli {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string svg_plot(const std::vector<Series>& series, const PlotOptions& options) {
    const double left = 70, right = 20, top = 40, bottom = 50;
    const double pw = options.width - left - right;
    const double ph = options.height - top - bottom;
    auto tx = [&](double x) { return options.log_x ? std::log10(x) : x; };

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Series& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i]) || (options.log_x && !(s.x[i] > 0))) continue;
            xmin = std::min(xmin, tx(s.x[i]));
            xmax = std::max(xmax, tx(s.x[i]));
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    for (double y : options.horizontal_lines) {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (!(xmax > xmin)) { xmin -= 0.5; xmax += 0.5; }
    if (!(ymax > ymin)) { ymin -= 0.5; ymax += 0.5; }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return left + (tx(x) - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << options.width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(options.title) << "</text>\n";
    o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5;
        const double xpix = left + pw * i / 5;
        const double label = options.log_x ? std::pow(10.0, xv) : xv;
        o << "<line x1=\"" << xpix << "\" y1=\"" << top + ph << "\" x2=\"" << xpix << "\" y2=\"" << top + ph + 5
          << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << xpix << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\" font-size=\"11\">"
          << fmt(round9(label)) << "</text>\n";
        const double yv = ymin + (ymax - ymin) * i / 5;
        const double ypix = top + ph - ph * i / 5;
        o << "<line x1=\"" << left - 5 << "\" y1=\"" << ypix << "\" x2=\"" << left << "\" y2=\"" << ypix
          << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << left - 8 << "\" y=\"" << ypix + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
          << fmt(std::round(yv * 1e4) / 1e4) << "</text>\n";
    }
    o << "<text x=\"" << left + pw / 2 << "\" y=\"" << options.height - 10
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(options.x_label) << "</text>\n";
    o << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << top + ph / 2 << ")\">" << escape(options.y_label) << "</text>\n";

    for (double y : options.horizontal_lines) {
        o << "<line x1=\"" << left << "\" y1=\"" << py(y) << "\" x2=\"" << left + pw << "\" y2=\"" << py(y)
          << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
    }
    int row = 0;
    for (const Series& s : series) {
        o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i]) || (options.log_x && !(s.x[i] > 0))) continue;
            o << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i])) << ' ';
        }
        o << "\"/>\n";
        if (!s.label.empty()) {
            const double ly = top + 16 + 16 * row++;
            o << "<line x1=\"" << left + pw - 120 << "\" y1=\"" << ly << "\" x2=\"" << left + pw - 100 << "\" y2=\"" << ly
              << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
            o << "<text x=\"" << left + pw - 94 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << escape(s.label)
              << "</text>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace robin::cli

#include "perspec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace perspec::report {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void include(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (!(lo < hi)) {
            lo -= 1.0;
            hi += 1.0;
        }
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    }
};

std::vector<double> ticks(const Range& r, int target = 6) {
    const double span = r.hi - r.lo;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    std::vector<double> out;
    for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-12 * span; v += step)
        out.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
    return out;
}

class Mapper {
  public:
    Mapper(const Range& x, const Range& y) : x_(x), y_(y) {}
    double px(double x) const {
        return kMarginLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        return kHeight - kMarginBottom -
               (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - kMarginTop - kMarginBottom);
    }

  private:
    Range x_;
    Range y_;
};

void open_svg(std::ostringstream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_axes(std::ostringstream& out, const Mapper& m, const Range& xr, const Range& yr,
               const std::string& title, const std::string& x_label, const std::string& y_label) {
    out << "<g stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n";
    out << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop) << "\" width=\""
        << fmt(kWidth - kMarginLeft - kMarginRight) << "\" height=\""
        << fmt(kHeight - kMarginTop - kMarginBottom) << "\"/>\n";
    out << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (double t : ticks(xr)) {
        const double x = m.px(t);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kHeight - kMarginBottom) << "\" x2=\""
            << fmt(x) << "\" y2=\"" << fmt(kHeight - kMarginBottom + 5) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kHeight - kMarginBottom + 18)
            << "\" text-anchor=\"middle\">" << fmt_tick(t) << "</text>\n";
    }
    for (double t : ticks(yr)) {
        const double y = m.py(t);
        out << "<line x1=\"" << fmt(kMarginLeft - 5) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(kMarginLeft) << "\" y2=\"" << fmt(y) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\">" << fmt_tick(t) << "</text>\n";
    }
    out << "<text x=\"" << fmt((kMarginLeft + kWidth - kMarginRight) / 2) << "\" y=\""
        << fmt(kHeight - 12) << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << fmt((kMarginTop + kHeight - kMarginBottom) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << fmt((kMarginTop + kHeight - kMarginBottom) / 2) << ")\">" << y_label << "</text>\n";
    out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << title << "</text>\n</g>\n";
}

}  // namespace

std::string render_line_plot(const std::vector<LineSeries>& series, const std::string& title,
                             const std::string& x_label, const std::string& y_label) {
    if (series.empty()) throw std::invalid_argument("render_line_plot: no series");
    Range xr, yr;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("render_line_plot: x/y size mismatch in series " + s.label);
        for (double v : s.x) xr.include(v);
        for (double v : s.y) yr.include(v);
    }
    xr.pad();
    yr.pad();
    const Mapper m(xr, yr);

    std::ostringstream out;
    open_svg(out);
    draw_axes(out, m, xr, yr, title, x_label, y_label);
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i > 0) out << ' ';
            out << fmt(m.px(s.x[i])) << ',' << fmt(m.py(s.y[i]));
        }
        out << "\"/>\n";
    }
    double legend_y = kMarginTop + 16.0;
    out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (const auto& s : series) {
        out << "<line x1=\"" << fmt(kMarginLeft + 10) << "\" y1=\"" << fmt(legend_y - 4)
            << "\" x2=\"" << fmt(kMarginLeft + 34) << "\" y2=\"" << fmt(legend_y - 4)
            << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"/>\n";
        out << "<text x=\"" << fmt(kMarginLeft + 40) << "\" y=\"" << fmt(legend_y) << "\">"
            << s.label << "</text>\n";
        legend_y += 16.0;
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_contour_map(const std::vector<double>& xs, const std::vector<double>& ys,
                               const Eigen::MatrixXd& values, const std::vector<double>& levels,
                               const std::string& title) {
    if (xs.size() < 2 || ys.size() < 2) throw std::invalid_argument("render_contour_map: grid too small");
    if (values.rows() != static_cast<Eigen::Index>(ys.size()) ||
        values.cols() != static_cast<Eigen::Index>(xs.size()))
        throw std::invalid_argument("render_contour_map: grid shape mismatch");

    Range xr, yr, vr;
    for (double v : xs) xr.include(v);
    for (double v : ys) yr.include(v);
    for (Eigen::Index j = 0; j < values.rows(); ++j)
        for (Eigen::Index i = 0; i < values.cols(); ++i) vr.include(values(j, i));
    xr.pad();
    yr.pad();
    const Mapper m(xr, yr);

    std::ostringstream out;
    open_svg(out);

    // Value-shaded background cells.
    const double vspan = (vr.hi > vr.lo) ? vr.hi - vr.lo : 1.0;
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double v = values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
            if (!std::isfinite(v)) continue;
            const int shade = 255 - static_cast<int>(165.0 * (v - vr.lo) / vspan);
            const double x0 = m.px(xs[i]);
            const double y1 = m.py(ys[j]);  // SVG y grows downward
            const double x1 = m.px(xs[i + 1]);
            const double y0 = m.py(ys[j + 1]);
            out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\""
                << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0) << "\" fill=\"rgb(" << shade
                << ',' << shade << ",255)\"/>\n";
        }
    }

    // Marching-squares isolines.
    const auto interp = [](double va, double vb, double pa, double pb, double level) {
        return pa + (level - va) / (vb - va) * (pb - pa);
    };
    out << "<g stroke=\"#b03030\" stroke-width=\"1\" fill=\"none\">\n";
    for (double level : levels) {
        std::ostringstream segs;
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
                const double v00 = values(j, i), v10 = values(j, i + 1);
                const double v01 = values(j + 1, i), v11 = values(j + 1, i + 1);
                if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) ||
                    !std::isfinite(v11))
                    continue;
                struct Pt {
                    double x, y;
                };
                std::vector<Pt> pts;
                // Edge crossings: bottom, top, left, right of the cell.
                if ((v00 < level) != (v10 < level))
                    pts.push_back({interp(v00, v10, xs[i], xs[i + 1], level), ys[j]});
                if ((v01 < level) != (v11 < level))
                    pts.push_back({interp(v01, v11, xs[i], xs[i + 1], level), ys[j + 1]});
                if ((v00 < level) != (v01 < level))
                    pts.push_back({xs[i], interp(v00, v01, ys[j], ys[j + 1], level)});
                if ((v10 < level) != (v11 < level))
                    pts.push_back({xs[i + 1], interp(v10, v11, ys[j], ys[j + 1], level)});
                if (pts.size() == 2) {
                    segs << "<line x1=\"" << fmt(m.px(pts[0].x)) << "\" y1=\"" << fmt(m.py(pts[0].y))
                         << "\" x2=\"" << fmt(m.px(pts[1].x)) << "\" y2=\"" << fmt(m.py(pts[1].y))
                         << "\"/>\n";
                }
            }
        }
        out << segs.str();
    }
    out << "</g>\n";

    Range tick_x = xr, tick_y = yr;
    draw_axes(out, m, tick_x, tick_y, title, "x", "y");
    out << "</svg>\n";
    return out.str();
}

}  // namespace perspec::report

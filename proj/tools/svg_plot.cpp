#include "svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "likert/format.hpp"

namespace likert::cli {

namespace {

constexpr double kWidth = 760.0;
constexpr double kMarginLeft = 52.0;
constexpr double kMarginRight = 16.0;
constexpr double kPanelGap = 34.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

class SvgBuilder {
public:
    void open(double width, double height) {
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                 "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                 num(height) + "\">\n";
        body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& fill) {
        body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
                 "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0) {
        body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                 "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
                 num(width) + "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& points, const std::string& stroke,
                  double width = 1.5) {
        body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) +
                 "\" points=\"";
        for (const auto& [x, y] : points) {
            body_ += num(x) + "," + num(y) + " ";
        }
        body_ += "\"/>\n";
    }

    void circle(double cx, double cy, double r, const std::string& fill) {
        body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
                 "\" fill=\"" + fill + "\"/>\n";
    }

    void text(double x, double y, const std::string& s, double size = 12.0,
              const std::string& anchor = "start") {
        body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
                 "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\">" + s +
                 "</text>\n";
    }

    std::string finish() { return body_ + "</svg>\n"; }

private:
    std::string body_;
};

std::string rating_fill(int rating, int scale_max) {
    if (rating == 0) return "white";  // missing
    const double t = static_cast<double>(rating) / static_cast<double>(scale_max);
    const int r = static_cast<int>(245.0 - 215.0 * t);
    const int g = static_cast<int>(248.0 - 170.0 * t);
    const int b = 250;
    return "rgb(" + std::to_string(r) + "," + std::to_string(g) + "," + std::to_string(b) + ")";
}

void heat_panel(SvgBuilder& svg, const AnnotationMatrix& matrix, double top, double height,
                const std::string& title) {
    const std::size_t m = matrix.annotators();
    const std::size_t n = matrix.datapoints();
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double cell_w = plot_w / static_cast<double>(n);
    const double cell_h = height / static_cast<double>(m);

    svg.text(kMarginLeft, top - 8.0, title, 13.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            svg.rect(kMarginLeft + cell_w * static_cast<double>(j),
                     top + cell_h * static_cast<double>(i), cell_w, cell_h,
                     rating_fill(matrix(i, j), matrix.scale_max()));
        }
    }
    svg.line(kMarginLeft, top, kMarginLeft, top + height, "black");
    svg.line(kMarginLeft, top + height, kMarginLeft + plot_w, top + height, "black");
    svg.text(kMarginLeft - 6.0, top + cell_h * 0.5 + 4.0, matrix.annotator_ids().front(), 10.0,
             "end");
    svg.text(kMarginLeft - 6.0, top + height - cell_h * 0.5 + 4.0, matrix.annotator_ids().back(),
             10.0, "end");
}

// Score panel: both curves on a shared [1, K] axis over positions 1..n.
void score_panel(SvgBuilder& svg, double top, double height, int scale_max,
                 const std::vector<double>& blue, const std::vector<double>& red,
                 const std::string& title, bool red_as_markers) {
    const std::size_t n = blue.size();
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double k = static_cast<double>(scale_max);

    auto sx = [&](std::size_t j) {
        return kMarginLeft + plot_w * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
    };
    auto sy = [&](double score) { return top + height - height * (score - 1.0) / (k - 1.0); };

    svg.text(kMarginLeft, top - 8.0, title, 13.0);
    for (int tick = 1; tick <= scale_max; ++tick) {
        const double y = sy(tick);
        svg.line(kMarginLeft, y, kMarginLeft + plot_w, y, "rgb(228,228,228)", 0.5);
        svg.text(kMarginLeft - 6.0, y + 4.0, std::to_string(tick), 10.0, "end");
    }
    svg.line(kMarginLeft, top, kMarginLeft, top + height, "black");
    svg.line(kMarginLeft, top + height, kMarginLeft + plot_w, top + height, "black");

    std::vector<std::pair<double, double>> pts;
    pts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) pts.emplace_back(sx(j), sy(blue[j]));
    svg.polyline(pts, "rgb(40,90,200)");

    if (red_as_markers) {
        for (std::size_t j = 0; j < n; ++j) svg.circle(sx(j), sy(red[j]), 2.2, "rgb(200,40,40)");
    } else {
        pts.clear();
        for (std::size_t j = 0; j < n; ++j) pts.emplace_back(sx(j), sy(red[j]));
        svg.polyline(pts, "rgb(200,40,40)");
    }

    svg.text(kMarginLeft + plot_w - 180.0, top + 14.0, "mean (blue), denoised (red)", 11.0);
}

std::vector<std::size_t> order_by(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return order;
}

std::vector<double> gather(const std::vector<double>& values,
                           const std::vector<std::size_t>& order) {
    std::vector<double> out(values.size());
    for (std::size_t p = 0; p < order.size(); ++p) out[p] = values[order[p]];
    return out;
}

}  // namespace

std::string denoise_figure(const AnnotationMatrix& matrix, const BaselineScores& baseline,
                           const DenoisedResult& result) {
    const double heat_h = std::clamp(18.0 * static_cast<double>(matrix.annotators()), 40.0, 220.0);
    const double curve_h = 150.0;
    const double top0 = 30.0;
    const double total_h = top0 + heat_h + kPanelGap + curve_h + kPanelGap + curve_h + 20.0;

    SvgBuilder svg;
    svg.open(kWidth, total_h);

    heat_panel(svg, matrix, top0, heat_h,
               "annotation matrix (" + std::to_string(matrix.annotators()) + " x " +
                   std::to_string(matrix.datapoints()) + ", white = missing)");

    const auto by_mean = order_by(baseline.means);
    double y1 = top0 + heat_h + kPanelGap;
    score_panel(svg, y1, curve_h, matrix.scale_max(), gather(baseline.means, by_mean),
                gather(result.presentation_scores, by_mean), "scores sorted by mean", true);

    const auto by_denoised = order_by(result.presentation_scores);
    double y2 = y1 + curve_h + kPanelGap;
    score_panel(svg, y2, curve_h, matrix.scale_max(),
                gather(baseline.means, by_denoised),
                gather(result.presentation_scores, by_denoised), "scores sorted by denoised value",
                false);

    return svg.finish();
}

std::string evaluate_figure(const AnnotationMatrix& matrix, const BaselineScores& baseline,
                            const DenoisedResult& result) {
    const double curve_h = 190.0;
    const double top0 = 30.0;

    SvgBuilder svg;
    svg.open(kWidth, top0 + curve_h + 24.0);

    std::vector<double> means_sorted = baseline.means;
    std::sort(means_sorted.begin(), means_sorted.end());
    std::vector<double> denoised_sorted = result.presentation_scores;
    std::sort(denoised_sorted.begin(), denoised_sorted.end());

    score_panel(svg, top0, curve_h, matrix.scale_max(), means_sorted, denoised_sorted,
                "sorted score curves (each method sorted independently)", false);
    return svg.finish();
}

}  // namespace likert::cli

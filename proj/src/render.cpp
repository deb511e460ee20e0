#include "thetapark/render.hpp"

#include <sstream>

namespace thetapark {

namespace {

std::vector<std::pair<int, int>> path_points(const std::string& path) {
    std::vector<std::pair<int, int>> pts{{0, 0}};
    int x = 0, y = 0;
    for (char c : path) {
        if (c == 'E') ++x;
        else ++y;
        pts.emplace_back(x, y);
    }
    return pts;
}

void emit_polyline(std::ostream& out, const std::vector<std::pair<int, int>>& pts) {
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out << " -- ";
        out << '(' << pts[i].first << ',' << pts[i].second << ')';
    }
}

bool has_labels(const PathPair& p) {
    return !p.labels.empty() && static_cast<int>(p.labels.size()) == p.height();
}

} // namespace

std::string render_tikz(const PathPair& p) {
    std::ostringstream out;
    out << "\\begin{tikzpicture}[scale=1]\n";
    if (!p.top.empty() && !p.bottom.empty()) {
        const int m = p.width(), n = p.height();
        out << "  \\draw[gray!60, thin] (0,0) grid (" << m << ',' << n << ");\n";
        auto bottom_pts = path_points(p.bottom);
        auto top_pts = path_points(p.top);
        out << "  \\filldraw[yellow, opacity=0.3] ";
        std::vector<std::pair<int, int>> region = bottom_pts;
        region.insert(region.end(), top_pts.rbegin(), top_pts.rend());
        emit_polyline(out, region);
        out << " -- cycle;\n";
        out << "  \\draw[red, line width=1.6pt] ";
        emit_polyline(out, top_pts);
        out << ";\n";
        out << "  \\draw[green, line width=1.6pt] ";
        emit_polyline(out, bottom_pts);
        out << ";\n";
        if (has_labels(p)) {
            int x = 0, y = 0;
            size_t i = 0;
            for (char c : p.top) {
                if (c == 'N') {
                    out << "  \\node at (" << x << ".5," << y << ".5) {$" << p.labels[i++] << "$};\n";
                    ++y;
                } else {
                    ++x;
                }
            }
            for (const auto& [mx, my] : pruned_east_steps(p))
                out << "  \\node at (" << mx << ".5," << my << ") {\\Huge $\\times$};\n";
        }
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

std::string render_svg(const PathPair& p) {
    const int scale = 24;
    const int m = p.top.empty() ? 0 : p.width();
    const int n = p.top.empty() ? 0 : p.height();
    auto X = [&](double x) { return x * scale + 1; };
    auto Y = [&](double y) { return (n - y) * scale + 1; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m * scale + 2 << "\" height=\""
        << n * scale + 2 << "\">\n";
    if (!p.top.empty() && !p.bottom.empty()) {
        auto polyline = [&](const std::string& path, const char* color) {
            out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
            auto pts = path_points(path);
            for (size_t i = 0; i < pts.size(); ++i) {
                if (i) out << ' ';
                out << X(pts[i].first) << ',' << Y(pts[i].second);
            }
            out << "\"/>\n";
        };
        out << "  <polygon fill=\"yellow\" fill-opacity=\"0.3\" stroke=\"none\" points=\"";
        auto bottom_pts = path_points(p.bottom);
        auto top_pts = path_points(p.top);
        std::vector<std::pair<int, int>> region = bottom_pts;
        region.insert(region.end(), top_pts.rbegin(), top_pts.rend());
        for (size_t i = 0; i < region.size(); ++i) {
            if (i) out << ' ';
            out << X(region[i].first) << ',' << Y(region[i].second);
        }
        out << "\"/>\n";
        for (int x = 0; x <= m; ++x)
            out << "  <line stroke=\"lightgray\" x1=\"" << X(x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(x)
                << "\" y2=\"" << Y(n) << "\"/>\n";
        for (int y = 0; y <= n; ++y)
            out << "  <line stroke=\"lightgray\" x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(m)
                << "\" y2=\"" << Y(y) << "\"/>\n";
        polyline(p.top, "red");
        polyline(p.bottom, "green");
        if (has_labels(p)) {
            int x = 0, y = 0;
            size_t i = 0;
            for (char c : p.top) {
                if (c == 'N') {
                    out << "  <text x=\"" << X(x + 0.5) << "\" y=\"" << Y(y + 0.3)
                        << "\" text-anchor=\"middle\" font-size=\"" << scale / 2 << "\">" << p.labels[i++]
                        << "</text>\n";
                    ++y;
                } else {
                    ++x;
                }
            }
            for (const auto& [mx, my] : pruned_east_steps(p))
                out << "  <text x=\"" << X(mx + 0.5) << "\" y=\"" << Y(my - 0.3)
                    << "\" text-anchor=\"middle\" font-size=\"" << scale / 2 << "\">x</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace thetapark

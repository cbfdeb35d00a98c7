#include "planepart/render.hpp"

#include <algorithm>
#include <sstream>

namespace planepart {

namespace {

int cell_width(const PlanePartition& pp) {
    int w = 1;
    for (const auto& row : pp.rows())
        for (int v : row) w = std::max(w, static_cast<int>(std::to_string(v).size()));
    return w;
}

std::string pad(const std::string& s, int width) {
    return std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_ascii(const PlanePartition& pp, const ComponentAnalysis& analysis) {
    std::ostringstream out;
    if (pp.empty()) {
        out << "(empty)  k=0\n";
        return out.str();
    }
    const int w = cell_width(pp);
    auto comp = [&](int i, int j) {
        return pp.in_support(i, j) ? analysis.component_id[i - 1][j - 1] : -1;
    };

    out << "entries (| and --- mark component boundaries):\n";
    for (int i = 1; i <= pp.row_count(); ++i) {
        std::ostringstream line, sep;
        for (int j = 1; pp.in_support(i, j); ++j) {
            line << pad(std::to_string(pp.entry(i, j)), w);
            line << (comp(i, j) != comp(i, j + 1) ? " | " : "   ");
            const bool boundary_below = comp(i, j) != comp(i + 1, j);
            sep << std::string(w, boundary_below ? '-' : ' ') << "   ";
        }
        out << line.str() << "\n";
        if (pp.in_support(i + 1, 1)) out << sep.str() << "\n";
    }

    out << "levels:\n";
    for (int i = 1; i <= pp.row_count(); ++i) {
        for (int j = 1; pp.in_support(i, j); ++j)
            out << pad(std::to_string(analysis.level[i - 1][j - 1]), w) << " ";
        out << "\n";
    }

    out << "component ids:\n";
    for (int i = 1; i <= pp.row_count(); ++i) {
        for (int j = 1; pp.in_support(i, j); ++j)
            out << pad(std::to_string(comp(i, j)), w) << " ";
        out << "\n";
    }

    out << "k=" << analysis.k << "\n";
    return out.str();
}

std::string render_svg(const PlanePartition& pp, const ComponentAnalysis& analysis) {
    const int cell = 44;
    const int width = std::max(1, pp.col_count()) * cell + 2;
    const int height = std::max(1, pp.row_count()) * cell + 2;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    auto comp = [&](int i, int j) {
        return pp.in_support(i, j) ? analysis.component_id[i - 1][j - 1] : -1;
    };
    for (int i = 1; i <= pp.row_count(); ++i) {
        for (int j = 1; pp.in_support(i, j); ++j) {
            const int x = (j - 1) * cell + 1, y = (i - 1) * cell + 1;
            const int hue = (comp(i, j) * 53) % 360;
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"hsl(" << hue
                << ",55%,82%)\" stroke=\"#999\" stroke-width=\"1\"/>\n";
            out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
                << "\" text-anchor=\"middle\" font-size=\"16\">" << pp.entry(i, j)
                << "</text>\n";
            out << "  <text x=\"" << x + cell - 6 << "\" y=\"" << y + cell - 5
                << "\" text-anchor=\"end\" font-size=\"9\" fill=\"#444\">h"
                << analysis.level[i - 1][j - 1] << "</text>\n";
        }
    }
    // bold segments on component boundaries
    out << "  <g stroke=\"#000\" stroke-width=\"3\" stroke-linecap=\"square\">\n";
    for (int i = 1; i <= pp.row_count() + 1; ++i) {
        for (int j = 1; j <= pp.col_count() + 1; ++j) {
            const int x = (j - 1) * cell + 1, y = (i - 1) * cell + 1;
            if ((pp.in_support(i, j) || pp.in_support(i, j - 1)) &&
                comp(i, j) != comp(i, j - 1))
                out << "    <line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x
                    << "\" y2=\"" << y + cell << "\"/>\n";
            if ((pp.in_support(i, j) || pp.in_support(i - 1, j)) &&
                comp(i, j) != comp(i - 1, j))
                out << "    <line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x + cell
                    << "\" y2=\"" << y << "\"/>\n";
        }
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

}  // namespace planepart

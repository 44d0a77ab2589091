#include "gridtri/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace gridtri::svg {

namespace {
constexpr int kScale = 40;
constexpr int kMargin = 20;
}  // namespace

std::string render_svg(const Triangulation& t,
                       const std::optional<regularity::Configuration>& highlight) {
    auto rep = validate(t);
    if (!rep.valid) throw std::invalid_argument("render_svg: invalid triangulation");
    const GridSpec& g = t.grid;
    int w = 2 * kMargin + kScale * g.m;
    int h = 2 * kMargin + kScale * g.n;
    auto px = [&](const LatticePoint& p) { return kMargin + kScale * p.x; };
    auto py = [&](const LatticePoint& p) { return kMargin + kScale * (g.n - p.y); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    if (highlight) {
        for (const auto& tr : highlight->triangles) {
            os << "<polygon points=\"";
            for (int i = 0; i < 3; ++i) {
                if (i) os << " ";
                os << px(tr.v[i]) << "," << py(tr.v[i]);
            }
            os << "\" fill=\"#f4a582\" stroke=\"none\"/>\n";
        }
    }
    for (const auto& e : t.edges()) {
        os << "<line x1=\"" << px(e.a) << "\" y1=\"" << py(e.a) << "\" x2=\"" << px(e.b)
           << "\" y2=\"" << py(e.b) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (int y = 0; y <= g.n; ++y) {
        for (int x = 0; x <= g.m; ++x) {
            LatticePoint p{x, y};
            os << "<circle cx=\"" << px(p) << "\" cy=\"" << py(p)
               << "\" r=\"3\" fill=\"black\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace gridtri::svg

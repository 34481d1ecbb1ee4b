#include "kuramoto/render.hpp"

#include "kuramoto/text.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace kuramoto {

namespace {

constexpr double cx = 300.0;
constexpr double cy = 300.0;
constexpr double radius = 250.0;

// clockwise from east on screen coordinates (y grows downward)
double node_x(double theta) { return cx + radius * std::cos(theta); }
double node_y(double theta) { return cy + radius * std::sin(theta); }

} // namespace

void render_circle_diagram(const Network& net, const std::vector<double>& theta,
                           std::ostream& out) {
    if (static_cast<int>(theta.size()) != net.size())
        throw std::invalid_argument("render_circle_diagram: dimensions do not match network");

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    out << "<circle cx=\"" << fmt_f3(cx) << "\" cy=\"" << fmt_f3(cy) << "\" r=\""
        << fmt_f3(radius) << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    for (auto [i, j] : net.edges()) {
        out << "<line x1=\"" << fmt_f3(node_x(theta[i])) << "\" y1=\"" << fmt_f3(node_y(theta[i]))
            << "\" x2=\"" << fmt_f3(node_x(theta[j])) << "\" y2=\"" << fmt_f3(node_y(theta[j]))
            << "\" stroke=\"#336699\" stroke-width=\"1.5\"/>\n";
    }
    for (int i = 0; i < net.size(); ++i) {
        out << "<circle cx=\"" << fmt_f3(node_x(theta[i])) << "\" cy=\""
            << fmt_f3(node_y(theta[i])) << "\" r=\"6\" fill=\"#222222\"/>\n";
        double lx = cx + (radius + 22.0) * std::cos(theta[i]);
        double ly = cy + (radius + 22.0) * std::sin(theta[i]) + 5.0;
        out << "<text x=\"" << fmt_f3(lx) << "\" y=\"" << fmt_f3(ly)
            << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
               "fill=\"#222222\">"
            << i << "</text>\n";
    }
    out << "</svg>\n";
}

void render_circle_diagram_file(const Network& net, const std::vector<double>& theta,
                                const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    render_circle_diagram(net, theta, out);
}

} // namespace kuramoto

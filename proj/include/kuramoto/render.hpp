#ifndef KURAMOTO_RENDER_HPP
#define KURAMOTO_RENDER_HPP

#include "kuramoto/network.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace kuramoto {

/// Circle diagram: node i sits on a unit circle (drawn at radius 250 in a
/// 600x600 viewport) at angle theta_i measured clockwise from east, with a
/// chord for every edge. Output is byte-deterministic: fixed element order
/// (edges then nodes, by index) and 3-decimal coordinates.
void render_circle_diagram(const Network& net, const std::vector<double>& theta,
                           std::ostream& out);

void render_circle_diagram_file(const Network& net, const std::vector<double>& theta,
                                const std::string& path);

} // namespace kuramoto

#endif

#include "kuramoto/network.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kuramoto {

namespace {

int parse_node_id(const std::string& token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw std::invalid_argument("edge list: bad node id '" + token + "'");
    return value;
}

} // namespace

Network::Network(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), degree_(n, 0) {}

Network Network::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("network: node count must be non-negative");
    Network net(n);
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("network: self-loops are not allowed");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("network: node id out of range");
        net.adj_[static_cast<std::size_t>(a) * n + b] = 1;
        net.adj_[static_cast<std::size_t>(b) * n + a] = 1;
    }
    for (int i = 0; i < n; ++i) {
        int deg = 0;
        for (int j = 0; j < n; ++j) {
            if (net.adj_[static_cast<std::size_t>(i) * n + j]) {
                ++deg;
                if (i < j) net.edges_.emplace_back(i, j);
            }
        }
        net.degree_[i] = deg;
    }
    return net;
}

Network Network::complete(int n) {
    if (n < 1) throw std::invalid_argument("complete network: n must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, edges);
}

Network Network::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle network: n must be at least 3");
    return circulant(n, {1});
}

Network Network::circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw std::invalid_argument("circulant network: n must be at least 3");
    if (offsets.empty()) throw std::invalid_argument("circulant network: need at least one offset");
    std::vector<std::pair<int, int>> edges;
    for (int s : offsets) {
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("circulant network: offset " + std::to_string(s) +
                                        " outside [1, n/2]");
        for (int i = 0; i < n; ++i) {
            int j = (i + s) % n;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    return from_edges(n, edges);
}

Network Network::load_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a >> b) || (tokens >> extra))
            throw std::invalid_argument("edge list: expected two node ids per line, got '" + line + "'");
        int i = parse_node_id(a);
        int j = parse_node_id(b);
        if (i == j) throw std::invalid_argument("edge list: self-loop at node " + std::to_string(i));
        edges.emplace_back(i, j);
        max_id = std::max({max_id, i, j});
    }
    return from_edges(max_id + 1, edges);
}

Network Network::load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
    return load_edge_list(in);
}

void Network::save_edge_list(std::ostream& out) const {
    for (auto [i, j] : edges_) out << i << ' ' << j << '\n';
}

int Network::min_degree() const {
    if (n_ == 0) return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

int Network::max_degree() const {
    if (n_ == 0) return 0;
    return *std::max_element(degree_.begin(), degree_.end());
}

bool Network::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
            if (adjacent(v, u) && !seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

} // namespace kuramoto

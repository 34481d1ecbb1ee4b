#ifndef KURAMOTO_NETWORK_HPP
#define KURAMOTO_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kuramoto {

/// Undirected simple graph over nodes 0..n-1. Immutable once built; the
/// adjacency matrix, edge list and degree table always describe the same
/// edge set. Edges are stored as (i, j) with i < j, sorted.
class Network {
public:
    /// Every distinct pair adjacent. n >= 1.
    static Network complete(int n);

    /// Ring: i adjacent to (i +- 1) mod n. n >= 3.
    static Network cycle(int n);

    /// Ring with jumps: i adjacent to (i +- s) mod n for each offset s.
    /// Offsets must lie in [1, n/2]; n >= 3.
    static Network circulant(int n, const std::vector<int>& offsets);

    /// Explicit edge list over n nodes. Duplicate edges collapse; self-loops
    /// and out-of-range ids are rejected. Isolated nodes are allowed.
    static Network from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Parse "i j" lines (0-based ids). Blank lines and lines starting with
    /// '#' are skipped; CRLF accepted. Node count is max id + 1.
    static Network load_edge_list(std::istream& in);
    static Network load_edge_list_file(const std::string& path);

    /// One "i j" line per edge, sorted; round-trips through load_edge_list.
    void save_edge_list(std::ostream& out) const;

    int size() const { return n_; }
    bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    int degree(int i) const { return degree_[i]; }
    const std::vector<int>& degrees() const { return degree_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int min_degree() const;
    int max_degree() const;
    bool connected() const;

private:
    explicit Network(int n);

    int n_ = 0;
    std::vector<std::uint8_t> adj_; // n*n, row-major
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
};

} // namespace kuramoto

#endif

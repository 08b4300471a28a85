#ifndef GLIDECX_HYPERGRAPH_HPP
#define GLIDECX_HYPERGRAPH_HPP

#include "glidecx/bits.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace glidecx {

enum class Mode { graph, hypergraph };

// Finite hypergraph (E, V, boundary). Graph mode restricts every boundary to
// exactly two vertices (multiple edges allowed, loops not). Edge order is
// fixed at construction and defines the bit positions of every edge set.
// Instances are immutable; all operations below are pure functions.
class Hypergraph {
public:
    static Hypergraph make(Mode mode,
                           std::vector<std::string> vertex_ids,
                           std::vector<std::string> edge_ids,
                           std::vector<std::vector<std::string>> boundaries);

    Mode mode() const { return mode_; }
    std::size_t vertex_count() const { return vertex_ids_.size(); }
    std::size_t edge_count() const { return edge_ids_.size(); }

    const std::string& vertex_id(std::uint32_t v) const { return vertex_ids_[v]; }
    const std::string& edge_id(std::uint32_t e) const { return edge_ids_[e]; }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<std::string>& edge_ids() const { return edge_ids_; }

    std::optional<std::uint32_t> vertex_index(const std::string& id) const;
    std::optional<std::uint32_t> edge_index(const std::string& id) const;

    // Sorted vertex indices of an edge.
    const std::vector<std::uint32_t>& boundary(std::uint32_t e) const { return boundary_[e]; }
    const Bits& boundary_bits(std::uint32_t e) const { return boundary_bits_[e]; }
    // Sorted edge indices incident to a vertex.
    const std::vector<std::uint32_t>& incident_edges(std::uint32_t v) const { return incidence_[v]; }

    Bits empty_edge_set() const { return Bits(edge_count()); }
    Bits empty_vertex_set() const { return Bits(vertex_count()); }

    // Union of boundaries of the edges in s.
    Bits vertex_support(const Bits& s) const;

    // Edge set from edge ids; throws ValidationError on unknown ids.
    Bits edge_set(const std::vector<std::string>& ids) const;
    Bits vertex_set(const std::vector<std::string>& ids) const;
    std::vector<std::string> edge_names(const Bits& s) const;
    std::vector<std::string> vertex_names(const Bits& s) const;

private:
    Mode mode_ = Mode::graph;
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::vector<std::vector<std::uint32_t>> boundary_;
    std::vector<Bits> boundary_bits_;
    std::vector<std::vector<std::uint32_t>> incidence_;
    std::unordered_map<std::string, std::uint32_t> vertex_index_;
    std::unordered_map<std::string, std::uint32_t> edge_index_;
};

// Tagged disjoint copies; ids get "1." / "2." prefixes, boundaries preserved.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

// n(e) per edge; the subdivision inserts 2n(e) new vertices inside edge e.
struct SubdivisionProfile {
    std::vector<std::uint32_t> counts; // indexed by edge, may be empty for n == 0

    std::uint32_t at(std::uint32_t e) const {
        return e < counts.size() ? counts[e] : 0;
    }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

struct SubdivisionResult {
    Hypergraph graph;
    // edge_paths[e] lists the 2n(e)+1 sub-edge indices of the new graph in
    // path order, starting at the smaller-indexed endpoint of e.
    std::vector<std::vector<std::uint32_t>> edge_paths;
};

// Graph mode only; an edge with n(e)=0 keeps its id and is its own path.
SubdivisionResult subdivide(const Hypergraph& g, const SubdivisionProfile& p);

// Removes the edges of the given cycles, their vertices, and every edge
// incident to those vertices. Isolated surviving vertices are kept. The cycle
// sets must be pairwise independent (disjoint vertex supports).
Hypergraph delete_odd_support(const Hypergraph& g, std::span<const Bits> cycle_edge_sets);

} // namespace glidecx

#endif

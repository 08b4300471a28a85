#include "glidecx/hypergraph.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace glidecx {

Hypergraph Hypergraph::make(Mode mode,
                            std::vector<std::string> vertex_ids,
                            std::vector<std::string> edge_ids,
                            std::vector<std::vector<std::string>> boundaries) {
    if (edge_ids.size() != boundaries.size())
        throw ValidationError("edge list and boundary list differ in length");

    Hypergraph h;
    h.mode_ = mode;
    h.vertex_ids_ = std::move(vertex_ids);
    h.edge_ids_ = std::move(edge_ids);

    for (std::uint32_t v = 0; v < h.vertex_ids_.size(); ++v) {
        if (!h.vertex_index_.emplace(h.vertex_ids_[v], v).second)
            throw ValidationError("duplicate vertex id '" + h.vertex_ids_[v] + "'");
    }
    for (std::uint32_t e = 0; e < h.edge_ids_.size(); ++e) {
        if (!h.edge_index_.emplace(h.edge_ids_[e], e).second)
            throw ValidationError("duplicate edge id '" + h.edge_ids_[e] + "'");
    }

    h.boundary_.resize(boundaries.size());
    h.boundary_bits_.reserve(boundaries.size());
    h.incidence_.resize(h.vertex_ids_.size());
    for (std::uint32_t e = 0; e < boundaries.size(); ++e) {
        const auto& names = boundaries[e];
        if (names.empty())
            throw ValidationError("empty boundary on edge '" + h.edge_ids_[e] + "'");
        std::unordered_set<std::string> seen;
        Bits bb(h.vertex_ids_.size());
        for (const auto& name : names) {
            if (!seen.insert(name).second)
                throw ValidationError("repeated vertex '" + name + "' in boundary of edge '" +
                                      h.edge_ids_[e] + "'");
            auto it = h.vertex_index_.find(name);
            if (it == h.vertex_index_.end())
                throw ValidationError("unknown vertex '" + name + "' in boundary of edge '" +
                                      h.edge_ids_[e] + "'");
            h.boundary_[e].push_back(it->second);
            bb.set(it->second);
        }
        if (mode == Mode::graph && h.boundary_[e].size() != 2)
            throw ValidationError("graph mode requires exactly 2 boundary vertices on edge '" +
                                  h.edge_ids_[e] + "'");
        std::sort(h.boundary_[e].begin(), h.boundary_[e].end());
        h.boundary_bits_.push_back(std::move(bb));
        for (auto v : h.boundary_[e]) h.incidence_[v].push_back(e);
    }
    return h;
}

std::optional<std::uint32_t> Hypergraph::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> Hypergraph::edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

Bits Hypergraph::vertex_support(const Bits& s) const {
    Bits out = empty_vertex_set();
    s.for_each([&](std::uint32_t e) { out |= boundary_bits_[e]; });
    return out;
}

Bits Hypergraph::edge_set(const std::vector<std::string>& ids) const {
    Bits out = empty_edge_set();
    for (const auto& id : ids) {
        auto idx = edge_index(id);
        if (!idx) throw ValidationError("unknown edge id '" + id + "'");
        out.set(*idx);
    }
    return out;
}

Bits Hypergraph::vertex_set(const std::vector<std::string>& ids) const {
    Bits out = empty_vertex_set();
    for (const auto& id : ids) {
        auto idx = vertex_index(id);
        if (!idx) throw ValidationError("unknown vertex id '" + id + "'");
        out.set(*idx);
    }
    return out;
}

std::vector<std::string> Hypergraph::edge_names(const Bits& s) const {
    std::vector<std::string> out;
    s.for_each([&](std::uint32_t e) { out.push_back(edge_ids_[e]); });
    return out;
}

std::vector<std::string> Hypergraph::vertex_names(const Bits& s) const {
    std::vector<std::string> out;
    s.for_each([&](std::uint32_t v) { out.push_back(vertex_ids_[v]); });
    return out;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    Mode mode = (a.mode() == Mode::graph && b.mode() == Mode::graph) ? Mode::graph
                                                                     : Mode::hypergraph;
    std::vector<std::string> verts, edges;
    std::vector<std::vector<std::string>> bnd;
    auto add = [&](const Hypergraph& h, const std::string& tag) {
        for (const auto& v : h.vertex_ids()) verts.push_back(tag + v);
        for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
            edges.push_back(tag + h.edge_id(e));
            std::vector<std::string> names;
            for (auto v : h.boundary(e)) names.push_back(tag + h.vertex_id(v));
            bnd.push_back(std::move(names));
        }
    };
    add(a, "1.");
    add(b, "2.");
    return Hypergraph::make(mode, std::move(verts), std::move(edges), std::move(bnd));
}

SubdivisionResult subdivide(const Hypergraph& g, const SubdivisionProfile& p) {
    if (g.mode() != Mode::graph)
        throw ValidationError("subdivide requires a graph");
    if (p.counts.size() > g.edge_count())
        throw ValidationError("subdivision profile mentions unknown edges");

    std::vector<std::string> verts = g.vertex_ids();
    std::vector<std::string> edges;
    std::vector<std::vector<std::string>> bnd;
    std::vector<std::vector<std::uint32_t>> paths(g.edge_count());

    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        const std::uint32_t n = p.at(e);
        const auto& b = g.boundary(e); // sorted pair
        if (n == 0) {
            paths[e].push_back(static_cast<std::uint32_t>(edges.size()));
            edges.push_back(g.edge_id(e));
            bnd.push_back({g.vertex_id(b[0]), g.vertex_id(b[1])});
            continue;
        }
        // Path of 2n+1 sub-edges through 2n fresh vertices, from the
        // smaller-indexed endpoint to the larger.
        std::vector<std::string> chain;
        chain.push_back(g.vertex_id(b[0]));
        for (std::uint32_t k = 0; k < 2 * n; ++k) {
            std::string vid = g.edge_id(e) + ".v" + std::to_string(k);
            verts.push_back(vid);
            chain.push_back(std::move(vid));
        }
        chain.push_back(g.vertex_id(b[1]));
        for (std::uint32_t k = 0; k + 1 < chain.size(); ++k) {
            paths[e].push_back(static_cast<std::uint32_t>(edges.size()));
            edges.push_back(g.edge_id(e) + "." + std::to_string(k));
            bnd.push_back({chain[k], chain[k + 1]});
        }
    }
    return {Hypergraph::make(Mode::graph, std::move(verts), std::move(edges), std::move(bnd)),
            std::move(paths)};
}

Hypergraph delete_odd_support(const Hypergraph& g, std::span<const Bits> cycle_edge_sets) {
    Bits dead_vertices = g.empty_vertex_set();
    for (std::size_t i = 0; i < cycle_edge_sets.size(); ++i) {
        Bits vi = g.vertex_support(cycle_edge_sets[i]);
        for (std::size_t j = i + 1; j < cycle_edge_sets.size(); ++j) {
            if (!vi.disjoint(g.vertex_support(cycle_edge_sets[j])))
                throw ValidationError("cycles are not pairwise independent");
        }
        dead_vertices |= vi;
    }

    std::vector<std::string> verts;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (!dead_vertices.test(v)) verts.push_back(g.vertex_id(v));

    std::vector<std::string> edges;
    std::vector<std::vector<std::string>> bnd;
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        if (!g.boundary_bits(e).disjoint(dead_vertices)) continue;
        edges.push_back(g.edge_id(e));
        std::vector<std::string> names;
        for (auto v : g.boundary(e)) names.push_back(g.vertex_id(v));
        bnd.push_back(std::move(names));
    }
    return Hypergraph::make(g.mode(), std::move(verts), std::move(edges), std::move(bnd));
}

} // namespace glidecx

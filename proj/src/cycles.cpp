#include "glidecx/cycles.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>
#include <queue>

namespace glidecx {

namespace {

// Degrees within s of every vertex touched by s; -1 marks a violation.
bool degrees_ok(const Hypergraph& h, const Bits& s, std::vector<std::uint8_t>& deg) {
    deg.assign(h.vertex_count(), 0);
    bool ok = true;
    s.for_each([&](std::uint32_t e) {
        for (auto v : h.boundary(e)) {
            if (++deg[v] > 2) ok = false;
        }
    });
    if (!ok) return false;
    for (std::uint32_t v = 0; v < h.vertex_count(); ++v)
        if (deg[v] == 1) return false;
    return true;
}

void sort_cycles(std::vector<Cycle>& out) {
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        std::size_t ca = a.edges.count(), cb = b.edges.count();
        if (ca != cb) return ca < cb;
        return Bits::lex_less(a.edges, b.edges);
    });
}

// Rotation walk: for each start vertex v0 the simple closed paths whose
// minimal vertex is v0, traversed so that the first edge index is below the
// closing edge index.
void enumerate_graph_cycles(const Hypergraph& h, std::size_t max_cycles,
                            std::vector<Cycle>& out) {
    const std::size_t nv = h.vertex_count();
    std::vector<std::uint8_t> visited(nv, 0);
    std::vector<std::uint32_t> path_edges;

    auto other_end = [&](std::uint32_t e, std::uint32_t v) {
        const auto& b = h.boundary(e);
        return b[0] == v ? b[1] : b[0];
    };

    std::uint32_t v0 = 0;
    auto dfs = [&](auto&& self, std::uint32_t u) -> void {
        for (auto e : h.incident_edges(u)) {
            std::uint32_t w = other_end(e, u);
            if (w == v0) {
                if (path_edges.size() >= 1 && e > path_edges.front()) {
                    if (out.size() >= max_cycles)
                        throw BudgetError("cycle enumeration exceeded the configured limit of " +
                                          std::to_string(max_cycles));
                    Bits edges = h.empty_edge_set();
                    for (auto pe : path_edges) edges.set(pe);
                    edges.set(e);
                    out.push_back(make_cycle(h, edges));
                }
                continue;
            }
            if (w < v0 || visited[w]) continue;
            visited[w] = 1;
            path_edges.push_back(e);
            self(self, w);
            path_edges.pop_back();
            visited[w] = 0;
        }
    };

    for (v0 = 0; v0 < nv; ++v0) {
        visited[v0] = 1;
        dfs(dfs, v0);
        visited[v0] = 0;
    }
}

// Branch-and-prune over connected edge subsets with seed = minimal edge,
// keeping every vertex degree at most 2. A connected subset in which every
// touched vertex has degree exactly 2 is a cycle and has no cyclic proper
// supersets, so recursion stops there.
void enumerate_hypergraph_cycles(const Hypergraph& h, std::size_t max_cycles,
                                 std::vector<Cycle>& out) {
    const std::size_t ne = h.edge_count();
    std::vector<std::uint8_t> deg(h.vertex_count(), 0);
    std::vector<std::uint8_t> in_set(ne, 0), banned(ne, 0);
    std::vector<std::uint32_t> members;
    std::uint32_t seed = 0;

    auto open_count = [&]() {
        std::uint32_t open = 0;
        for (auto e : members)
            for (auto v : h.boundary(e))
                if (deg[v] == 1) ++open;
        return open;
    };

    auto dfs = [&](auto&& self) -> void {
        if (open_count() == 0) {
            if (out.size() >= max_cycles)
                throw BudgetError("cycle enumeration exceeded the configured limit of " +
                                  std::to_string(max_cycles));
            Bits edges = h.empty_edge_set();
            for (auto e : members) edges.set(e);
            out.push_back(make_cycle(h, edges));
            return;
        }
        // Candidates: edges adjacent to the current set, above the seed,
        // unbanned, and not pushing any vertex past degree 2.
        std::vector<std::uint32_t> cands;
        for (auto e : members) {
            for (auto v : h.boundary(e)) {
                for (auto f : h.incident_edges(v)) {
                    if (f <= seed || in_set[f] || banned[f]) continue;
                    bool fits = true;
                    for (auto w : h.boundary(f))
                        if (deg[w] >= 2) { fits = false; break; }
                    if (fits && std::find(cands.begin(), cands.end(), f) == cands.end())
                        cands.push_back(f);
                }
            }
        }
        std::sort(cands.begin(), cands.end());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            std::uint32_t f = cands[i];
            in_set[f] = 1;
            members.push_back(f);
            for (auto v : h.boundary(f)) ++deg[v];
            self(self);
            for (auto v : h.boundary(f)) --deg[v];
            members.pop_back();
            in_set[f] = 0;
            banned[f] = 1;
        }
        for (std::size_t i = 0; i < cands.size(); ++i) banned[cands[i]] = 0;
    };

    for (seed = 0; seed < ne; ++seed) {
        in_set[seed] = 1;
        members.push_back(seed);
        for (auto v : h.boundary(seed)) ++deg[v];
        dfs(dfs);
        for (auto v : h.boundary(seed)) --deg[v];
        members.pop_back();
        in_set[seed] = 0;
    }
}

} // namespace

bool is_cyclic(const Hypergraph& h, const Bits& s) {
    std::vector<std::uint8_t> deg;
    return degrees_ok(h, s, deg);
}

Cycle make_cycle(const Hypergraph& h, const Bits& edges) {
    return Cycle{edges, h.vertex_support(edges)};
}

std::vector<Cycle> decompose(const Hypergraph& h, const Bits& s) {
    if (!is_cyclic(h, s))
        throw ValidationError("edge set is not cyclic");
    std::vector<Cycle> out;
    auto members = s.indices();
    std::unordered_map<std::uint32_t, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < members.size(); ++i) pos[members[i]] = i;

    std::vector<std::uint8_t> seen(members.size(), 0);
    for (std::uint32_t i = 0; i < members.size(); ++i) {
        if (seen[i]) continue;
        Bits comp = h.empty_edge_set();
        std::queue<std::uint32_t> q;
        q.push(i);
        seen[i] = 1;
        while (!q.empty()) {
            std::uint32_t e = members[q.front()];
            q.pop();
            comp.set(e);
            for (auto v : h.boundary(e)) {
                for (auto f : h.incident_edges(v)) {
                    if (!s.test(f)) continue;
                    std::uint32_t j = pos[f];
                    if (!seen[j]) { seen[j] = 1; q.push(j); }
                }
            }
        }
        out.push_back(make_cycle(h, comp));
    }
    sort_cycles(out);
    return out;
}

std::vector<Cycle> enumerate_cycles(const Hypergraph& h, std::size_t max_cycles) {
    std::vector<Cycle> out;
    if (h.mode() == Mode::graph)
        enumerate_graph_cycles(h, max_cycles, out);
    else
        enumerate_hypergraph_cycles(h, max_cycles, out);
    sort_cycles(out);
    return out;
}

std::optional<EvenCycleData> even_data(const Hypergraph& h, const Cycle& s) {
    auto members = s.edges.indices();
    if (members.empty()) return std::nullopt;
    std::unordered_map<std::uint32_t, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < members.size(); ++i) pos[members[i]] = i;

    // 2-color the auxiliary multigraph: one adjacency per shared vertex.
    std::vector<std::int8_t> color(members.size(), -1);
    std::queue<std::uint32_t> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        std::uint32_t i = q.front();
        q.pop();
        std::uint32_t e = members[i];
        for (auto v : h.boundary(e)) {
            for (auto f : h.incident_edges(v)) {
                if (f == e || !s.edges.test(f)) continue;
                std::uint32_t j = pos[f];
                if (color[j] < 0) { color[j] = 1 - color[i]; q.push(j); }
                else if (color[j] == color[i]) return std::nullopt;
            }
        }
    }
    for (auto c : color)
        if (c < 0) throw ValidationError("edge set is not a single cycle");

    EvenCycleData data;
    data.cycle = s;
    data.edge_halves = {h.empty_edge_set(), h.empty_edge_set()};
    for (std::uint32_t i = 0; i < members.size(); ++i)
        data.edge_halves[static_cast<std::size_t>(color[i])].set(members[i]);
    if (!data.edge_halves[0].test(members[0]))
        std::swap(data.edge_halves[0], data.edge_halves[1]);

    if (h.mode() == Mode::graph) {
        // Alternating vertex classes: 2-color the circle subgraph.
        auto vs = s.verts.indices();
        std::unordered_map<std::uint32_t, std::uint32_t> vpos;
        for (std::uint32_t i = 0; i < vs.size(); ++i) vpos[vs[i]] = i;
        std::vector<std::int8_t> vcolor(vs.size(), -1);
        std::queue<std::uint32_t> vq;
        vcolor[0] = 0;
        vq.push(0);
        while (!vq.empty()) {
            std::uint32_t i = vq.front();
            vq.pop();
            std::uint32_t v = vs[i];
            for (auto e : h.incident_edges(v)) {
                if (!s.edges.test(e)) continue;
                const auto& b = h.boundary(e);
                std::uint32_t w = b[0] == v ? b[1] : b[0];
                std::uint32_t j = vpos[w];
                if (vcolor[j] < 0) { vcolor[j] = 1 - vcolor[i]; vq.push(j); }
                else if (vcolor[j] == vcolor[i]) return std::nullopt;
            }
        }
        data.vertex_halves = {h.empty_vertex_set(), h.empty_vertex_set()};
        for (std::uint32_t i = 0; i < vs.size(); ++i)
            data.vertex_halves[static_cast<std::size_t>(vcolor[i])].set(vs[i]);
        if (!data.vertex_halves[0].test(vs[0]))
            std::swap(data.vertex_halves[0], data.vertex_halves[1]);
    }
    return data;
}

bool independent(const Cycle& s, const Cycle& t) {
    return s.verts.disjoint(t.verts);
}

CycleSystem build_cycle_system(const Hypergraph& h, std::size_t max_cycles) {
    CycleSystem sys;
    sys.cycles = enumerate_cycles(h, max_cycles);
    sys.even_slot.assign(sys.cycles.size(), -1);
    for (std::uint32_t id = 0; id < sys.cycles.size(); ++id) {
        if (auto data = even_data(h, sys.cycles[id])) {
            sys.even_slot[id] = static_cast<std::int32_t>(sys.even_ids.size());
            sys.even_ids.push_back(id);
            sys.even.push_back(std::move(*data));
        }
    }
    return sys;
}

Hypergraph delete_odd_support(const Hypergraph& g, const std::vector<Cycle>& cycles) {
    std::vector<Bits> sets;
    sets.reserve(cycles.size());
    for (const auto& c : cycles) sets.push_back(c.edges);
    return delete_odd_support(g, std::span<const Bits>(sets));
}

} // namespace glidecx

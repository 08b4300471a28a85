#include "glidecx/dimer.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>

namespace glidecx {

bool is_dimer_covering(const Hypergraph& h, const Bits& a) {
    std::vector<std::uint8_t> deg(h.vertex_count(), 0);
    bool ok = true;
    a.for_each([&](std::uint32_t e) {
        for (auto v : h.boundary(e))
            if (++deg[v] > 1) ok = false;
    });
    if (!ok) return false;
    for (std::uint32_t v = 0; v < h.vertex_count(); ++v)
        if (deg[v] != 1) return false;
    return true;
}

std::vector<Bits> enumerate_dimer_coverings(const Hypergraph& h) {
    std::vector<Bits> out;
    Bits covered = h.empty_vertex_set();
    Bits chosen = h.empty_edge_set();

    auto dfs = [&](auto&& self) -> void {
        std::uint32_t v = UINT32_MAX;
        for (std::uint32_t u = 0; u < h.vertex_count(); ++u)
            if (!covered.test(u)) { v = u; break; }
        if (v == UINT32_MAX) {
            out.push_back(chosen);
            return;
        }
        for (auto e : h.incident_edges(v)) {
            if (!h.boundary_bits(e).disjoint(covered)) continue;
            chosen.set(e);
            covered |= h.boundary_bits(e);
            self(self);
            covered ^= h.boundary_bits(e);
            chosen.reset(e);
        }
    };
    dfs(dfs);
    std::sort(out.begin(), out.end(), BitsLexLess{});
    return out;
}

DimerComplex dimer_complex(const Hypergraph& h, const BuildOptions& opts,
                           std::size_t max_cycles) {
    DimerComplex dcx{h, build_cycle_system(h, max_cycles), {}, {}};
    dcx.system = make_even_cycle_system(h, dcx.cycles);
    dcx.complex = build_complex(dcx.system, enumerate_dimer_coverings(h), opts);
    return dcx;
}

Cube hull(const DimerComplex& dcx, std::uint32_t state_a, std::uint32_t state_b) {
    const auto& states = dcx.complex.states();
    if (state_a >= states.size() || state_b >= states.size())
        throw ValidationError("hull endpoints must be coverings of the complex");
    if (state_a == state_b)
        return Cube{state_a, {}, {state_a}};

    Bits diff = states[state_a] ^ states[state_b];
    auto parts = decompose(dcx.graph, diff);

    std::vector<std::uint32_t> glide_ids;
    for (const auto& cyc : parts) {
        std::int32_t found = -1;
        for (std::uint32_t g = 0; g < dcx.system.size(); ++g)
            if (dcx.system.glides[g] == cyc.edges) { found = static_cast<std::int32_t>(g); break; }
        if (found < 0)
            throw std::logic_error("difference of coverings decomposed into a non-even cycle");
        glide_ids.push_back(static_cast<std::uint32_t>(found));
    }
    std::sort(glide_ids.begin(), glide_ids.end());

    // Locate the canonical cube: base = least vertex among the 2^k products.
    std::uint32_t k = static_cast<std::uint32_t>(glide_ids.size());
    std::uint32_t base = state_a;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Bits v = states[state_a] ^ subset_product(dcx.system, glide_ids, mask);
        auto idx = dcx.complex.state_index(v);
        if (!idx)
            throw std::logic_error("hull vertex is not a dimer covering");
        base = std::min(base, *idx);
    }
    auto cube_idx = dcx.complex.find_cube(k, base, glide_ids);
    if (!cube_idx)
        throw std::logic_error("hull cube missing from the complex");
    return dcx.complex.cube(k, *cube_idx);
}

bool is_face_of(const Cube& small, const Cube& big) {
    if (!std::includes(big.glide_ids.begin(), big.glide_ids.end(),
                       small.glide_ids.begin(), small.glide_ids.end()))
        return false;
    return std::find(big.vertices.begin(), big.vertices.end(), small.base_state) !=
           big.vertices.end();
}

bool is_flat(const Hypergraph& h, const Bits& a, const Bits& b, const Bits& c) {
    auto edge_at = [&](const Bits& cov) {
        std::vector<std::uint32_t> at(h.vertex_count(), UINT32_MAX);
        cov.for_each([&](std::uint32_t e) {
            for (auto v : h.boundary(e)) at[v] = e;
        });
        return at;
    };
    auto av = edge_at(a), bv = edge_at(b), cv = edge_at(c);
    for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
        if (av[v] == UINT32_MAX || bv[v] == UINT32_MAX || cv[v] == UINT32_MAX)
            throw ValidationError("flatness requires dimer coverings");
        if (av[v] != bv[v] && av[v] != cv[v] && bv[v] != cv[v]) return false;
    }
    return true;
}

bool is_dimer_labeling(const Hypergraph& h, const DimerLabeling& l) {
    if (l.labels.size() != h.edge_count()) return false;
    for (const auto& x : l.labels)
        if (x < Rational(0) || x > Rational(1)) return false;
    for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
        Rational sum(0);
        int nonzero = 0;
        for (auto e : h.incident_edges(v)) {
            sum += l.labels[e];
            if (l.labels[e] != Rational(0)) ++nonzero;
        }
        if (sum != Rational(1) || nonzero > 2) return false;
    }
    return true;
}

DimerLabeling evaluate(const DimerComplex& dcx, const ComplexPoint& p) {
    const auto& states = dcx.complex.states();
    if (p.base_state >= states.size())
        throw ValidationError("complex point base is not a covering");
    if (p.coords.size() != p.glide_ids.size())
        throw ValidationError("coordinate list does not match glide set");
    if (!std::is_sorted(p.glide_ids.begin(), p.glide_ids.end()) ||
        std::adjacent_find(p.glide_ids.begin(), p.glide_ids.end()) != p.glide_ids.end())
        throw ValidationError("glide ids must be sorted and distinct");
    for (std::size_t i = 0; i < p.glide_ids.size(); ++i) {
        if (p.glide_ids[i] >= dcx.system.size())
            throw ValidationError("unknown glide id");
        for (std::size_t j = i + 1; j < p.glide_ids.size(); ++j)
            if (!dcx.system.independent(p.glide_ids[i], p.glide_ids[j]))
                throw ValidationError("glide set of a complex point must be independent");
        if (p.coords[i] < Rational(0) || p.coords[i] > Rational(1))
            throw ValidationError("cube coordinates must lie in [0,1]");
    }
    for (std::uint32_t mask = 1; mask < (1u << p.glide_ids.size()); ++mask)
        if (!dcx.complex.state_index(states[p.base_state] ^
                                     subset_product(dcx.system, p.glide_ids, mask)))
            throw ValidationError("cube vertex of a complex point is not a covering");

    const Bits& a = states[p.base_state];
    DimerLabeling out;
    out.labels.assign(dcx.graph.edge_count(), Rational(0));
    a.for_each([&](std::uint32_t e) { out.labels[e] = Rational(1); });
    for (std::size_t i = 0; i < p.glide_ids.size(); ++i) {
        const Bits& s = dcx.system.glides[p.glide_ids[i]];
        s.for_each([&](std::uint32_t e) {
            out.labels[e] = a.test(e) ? Rational(1) - p.coords[i] : p.coords[i];
        });
    }
    return out;
}

std::vector<LabelingComponent> labeling_components(const Hypergraph& g,
                                                   const BuildOptions& opts,
                                                   std::size_t max_cycles) {
    if (g.mode() != Mode::graph)
        throw ValidationError("labeling components are defined for graphs");
    auto cs = build_cycle_system(g, max_cycles);
    std::vector<std::uint32_t> odd;
    for (std::uint32_t id = 0; id < cs.cycles.size(); ++id)
        if (!cs.is_even(id)) odd.push_back(id);

    std::vector<LabelingComponent> out;
    std::vector<std::uint32_t> chosen;

    auto emit = [&]() {
        std::vector<Cycle> cycles;
        for (auto id : chosen) cycles.push_back(cs.cycles[id]);
        Hypergraph sub = delete_odd_support(g, cycles);
        DimerComplex dcx = dimer_complex(sub, opts, max_cycles);
        if (!dcx.coverings().empty())
            out.push_back(LabelingComponent{chosen, std::move(dcx)});
    };

    // Independent subsets of odd cycles in ascending id-list order.
    auto rec = [&](auto&& self, std::size_t from) -> void {
        emit();
        for (std::size_t i = from; i < odd.size(); ++i) {
            bool ok = true;
            for (auto id : chosen)
                if (!independent(cs.cycles[id], cs.cycles[odd[i]])) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(odd[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace glidecx

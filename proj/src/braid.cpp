#include "glidecx/braid.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>

namespace glidecx {

MarkedCovering canonical_marking(const Hypergraph& h, const Bits& covering) {
    MarkedCovering m;
    m.covering = covering;
    m.mark_of_edge.assign(h.edge_count(), 0);
    std::uint32_t next = 1;
    covering.for_each([&](std::uint32_t e) { m.mark_of_edge[e] = next++; });
    return m;
}

std::string Permutation::one_line() const {
    std::string s = "(";
    const bool wide = image_of.size() > 9;
    for (std::size_t i = 0; i < image_of.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(image_of[i]);
    }
    return s + ")";
}

std::string Permutation::cycle_string() const {
    const std::size_t n = image_of.size();
    std::vector<std::uint8_t> seen(n, 0);
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i] || image_of[i] == i + 1) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) s += " ";
            s += std::to_string(j + 1);
            first = false;
            j = image_of[j] - 1;
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

Permutation identity_permutation(std::size_t n) {
    Permutation p;
    p.image_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.image_of[i] = static_cast<std::uint32_t>(i + 1);
    return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    Permutation out;
    out.image_of.resize(f.image_of.size());
    for (std::size_t i = 0; i < out.image_of.size(); ++i)
        out.image_of[i] = f.image_of[g.image_of[i] - 1];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out;
    out.image_of.resize(p.image_of.size());
    for (std::size_t i = 0; i < p.image_of.size(); ++i)
        out.image_of[p.image_of[i] - 1] = static_cast<std::uint32_t>(i + 1);
    return out;
}

MarkedCovering glide_marked(const DimerComplex& dcx, const MarkedCovering& m,
                            std::uint32_t cycle_id, const VOrientation& vo) {
    const Hypergraph& h = dcx.graph;
    if (h.mode() != Mode::graph)
        throw ValidationError("marked glidings are defined for graphs");
    if (cycle_id >= dcx.cycles.cycles.size() || !dcx.cycles.is_even(cycle_id))
        throw ValidationError("marked gliding requires an even cycle");
    const std::uint32_t slot = static_cast<std::uint32_t>(dcx.cycles.even_slot[cycle_id]);
    if (vo.vhalf.size() != dcx.cycles.even_ids.size())
        throw ValidationError("v-orientation does not match the even-cycle list");

    const auto& data = dcx.cycles.even[slot];
    const Bits& s = data.cycle.edges;
    if (!dcx.complex.state_index(m.covering ^ s))
        throw ValidationError("gliding along cycle " + std::to_string(cycle_id) +
                              " does not yield a covering");
    const Bits& dvh = data.vertex_halves[vo.vhalf[slot]];

    MarkedCovering out;
    out.covering = m.covering ^ s;
    out.mark_of_edge.assign(h.edge_count(), 0);
    for (std::uint32_t e = 0; e < h.edge_count(); ++e)
        if (m.mark_of_edge[e] && !s.test(e)) out.mark_of_edge[e] = m.mark_of_edge[e];

    Bits moved = m.covering & s;
    moved.for_each([&](std::uint32_t e) {
        if (!m.mark_of_edge[e]) return;
        // The endpoint of e in the distinguished v-half; exactly one by
        // alternation.
        const auto& b = h.boundary(e);
        const bool b0 = dvh.test(b[0]), b1 = dvh.test(b[1]);
        if (b0 == b1)
            throw ValidationError("v-half incidence violated on edge " + h.edge_id(e));
        const std::uint32_t v = b0 ? b[0] : b[1];
        std::uint32_t target = UINT32_MAX;
        for (auto f : h.incident_edges(v))
            if (f != e && s.test(f)) { target = f; break; }
        if (target == UINT32_MAX)
            throw std::logic_error("cycle vertex without a second cycle edge");
        if (out.mark_of_edge[target])
            throw std::logic_error("mark transport collision");
        out.mark_of_edge[target] = m.mark_of_edge[e];
    });
    return out;
}

Permutation braid_permutation(const DimerComplex& dcx, const GlideLoop& loop,
                              const VOrientation& vo) {
    validate_loop(dcx, loop);
    MarkedCovering initial = canonical_marking(dcx.graph, loop.base);
    MarkedCovering current = initial;
    for (auto cycle_id : loop.steps) current = glide_marked(dcx, current, cycle_id, vo);

    Permutation p;
    p.image_of.resize(loop.base.count());
    loop.base.for_each([&](std::uint32_t e) {
        p.image_of[initial.mark_of_edge[e] - 1] = current.mark_of_edge[e];
    });
    return p;
}

Permutation theta_n_permutation(const DimerComplex& dcx, const GlideLoop& loop,
                                const SubdivisionProfile& profile, const VOrientation& vo,
                                const BuildOptions& opts, std::size_t max_cycles) {
    const Hypergraph& h = dcx.graph;
    if (h.mode() != Mode::graph)
        throw ValidationError("subdivision transport is defined for graphs");
    if (vo.vhalf.size() != dcx.cycles.even_ids.size())
        throw ValidationError("v-orientation does not match the even-cycle list");
    validate_loop(dcx, loop);

    auto sub = subdivide(h, profile);
    const Hypergraph& hn = sub.graph;
    DimerComplex dcxn = dimer_complex(hn, opts, max_cycles);

    // Canonical covering bijection: a covering edge maps to the odd
    // positions of its path, a non-covering edge to the even positions.
    auto map_covering = [&](const Bits& a) {
        Bits out(hn.edge_count());
        for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
            const auto& path = sub.edge_paths[e];
            for (std::size_t k = a.test(e) ? 0 : 1; k < path.size(); k += 2)
                out.set(path[k]);
        }
        return out;
    };
    auto map_edges = [&](const Bits& s) {
        Bits out(hn.edge_count());
        s.for_each([&](std::uint32_t e) {
            for (auto f : sub.edge_paths[e]) out.set(f);
        });
        return out;
    };

    // Subdivision is a bijection on cycles preserving parity.
    if (dcxn.cycles.cycles.size() != dcx.cycles.cycles.size())
        throw std::logic_error("subdivision changed the cycle count");
    std::vector<std::int32_t> cycle_map(dcx.cycles.cycles.size(), -1);
    for (std::uint32_t id = 0; id < dcx.cycles.cycles.size(); ++id) {
        Bits image = map_edges(dcx.cycles.cycles[id].edges);
        for (std::uint32_t jd = 0; jd < dcxn.cycles.cycles.size(); ++jd)
            if (dcxn.cycles.cycles[jd].edges == image) { cycle_map[id] = static_cast<std::int32_t>(jd); break; }
        if (cycle_map[id] < 0)
            throw std::logic_error("subdivided cycle missing from the subdivision");
    }

    // Induced v-orientation: the v-half containing the original
    // distinguished v-half (original vertices keep their indices).
    VOrientation von;
    von.vhalf.assign(dcxn.cycles.even_ids.size(), 0);
    for (std::uint32_t slot = 0; slot < dcx.cycles.even_ids.size(); ++slot) {
        const std::uint32_t id = dcx.cycles.even_ids[slot];
        const std::uint32_t jd = static_cast<std::uint32_t>(cycle_map[id]);
        const std::int32_t nslot = dcxn.cycles.even_slot[jd];
        if (nslot < 0) throw std::logic_error("subdivision changed cycle parity");
        const Bits& dvh = dcx.cycles.even[slot].vertex_halves[vo.vhalf[slot]];
        Bits widened(hn.vertex_count());
        dvh.for_each([&](std::uint32_t v) { widened.set(v); });
        const auto& halves = dcxn.cycles.even[static_cast<std::uint32_t>(nslot)].vertex_halves;
        if (widened.subset_of(halves[0]))
            von.vhalf[static_cast<std::uint32_t>(nslot)] = 0;
        else if (widened.subset_of(halves[1]))
            von.vhalf[static_cast<std::uint32_t>(nslot)] = 1;
        else
            throw std::logic_error("distinguished v-half split by subdivision");
    }

    GlideLoop mapped;
    mapped.base = map_covering(loop.base);
    for (auto id : loop.steps)
        mapped.steps.push_back(static_cast<std::uint32_t>(cycle_map[id]));
    return braid_permutation(dcxn, mapped, von);
}

} // namespace glidecx

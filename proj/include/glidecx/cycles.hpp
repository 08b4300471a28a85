#ifndef GLIDECX_CYCLES_HPP
#define GLIDECX_CYCLES_HPP

#include "glidecx/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace glidecx {

// A cycle: minimal non-empty cyclic edge set, with its vertex support.
struct Cycle {
    Bits edges;
    Bits verts;
};

// An even cycle together with its two edge halves and, in graph mode, its two
// vertex halves. Half 0 contains the smallest-index edge (resp. vertex).
struct EvenCycleData {
    Cycle cycle;
    std::array<Bits, 2> edge_halves;
    std::array<Bits, 2> vertex_halves; // empty universes in hypergraph mode
};

// True iff every vertex meets 0 or 2 edges of s.
bool is_cyclic(const Hypergraph& h, const Bits& s);

// Unique partition of a cyclic set into pairwise independent cycles: the
// connected components of e ~ f iff their boundaries intersect.
std::vector<Cycle> decompose(const Hypergraph& h, const Bits& s);

// Cycles enumerated deterministically by (size, lexicographic bit order).
// Graph mode walks simple closed paths; hypergraph mode branches over edge
// subsets under the degree-in-{0,2} constraint. Throws BudgetError when more
// than max_cycles cycles are found.
std::vector<Cycle> enumerate_cycles(const Hypergraph& h,
                                    std::size_t max_cycles = 1'000'000);

// None iff the cycle is odd. Evenness is bipartiteness of the auxiliary
// multigraph on the cycle's edges with one adjacency per shared vertex;
// halves are the bipartition classes.
std::optional<EvenCycleData> even_data(const Hypergraph& h, const Cycle& s);

// Disjoint vertex supports.
bool independent(const Cycle& s, const Cycle& t);

Cycle make_cycle(const Hypergraph& h, const Bits& edges);

// All cycles plus the even sub-list; cycle ids are positions in `cycles` and
// are the stable identifiers used by loops, orientations and glide systems.
struct CycleSystem {
    std::vector<Cycle> cycles;
    std::vector<std::uint32_t> even_ids;        // ascending cycle ids
    std::vector<EvenCycleData> even;            // parallel to even_ids
    std::vector<std::int32_t> even_slot;        // cycle id -> slot in even_ids, or -1

    bool is_even(std::uint32_t cycle_id) const { return even_slot[cycle_id] >= 0; }
};

CycleSystem build_cycle_system(const Hypergraph& h, std::size_t max_cycles = 1'000'000);

Hypergraph delete_odd_support(const Hypergraph& g, const std::vector<Cycle>& cycles);

} // namespace glidecx

#endif

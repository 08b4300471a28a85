#ifndef GLIDECX_DIMER_HPP
#define GLIDECX_DIMER_HPP

#include "glidecx/glide_complex.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

namespace glidecx {

using Rational = boost::rational<long long>;

// All dimer coverings (edge sets whose boundaries partition the vertex set),
// sorted lexicographically. Exact-cover backtracking over vertices.
std::vector<Bits> enumerate_dimer_coverings(const Hypergraph& h);

bool is_dimer_covering(const Hypergraph& h, const Bits& a);

// The dimer complex of a hypergraph: the glide complex of the even-cycle
// gliding system with the dimer coverings as states. Bundles the cycle
// machinery so downstream operations can resolve cycle ids.
struct DimerComplex {
    Hypergraph graph;
    CycleSystem cycles;
    GlidingSystem system;
    CubeComplex complex;

    const std::vector<Bits>& coverings() const { return complex.states(); }
};

DimerComplex dimer_complex(const Hypergraph& h, const BuildOptions& opts = {},
                           std::size_t max_cycles = 1'000'000);

// The minimal cube containing both coverings: based at A on the cycle
// decomposition of the symmetric difference AB.
Cube hull(const DimerComplex& dcx, std::uint32_t state_a, std::uint32_t state_b);

// Face test on canonical cubes: the glide set is contained and the base is
// a vertex of the bigger cube.
bool is_face_of(const Cube& small, const Cube& big);

// At every vertex at least two of the three covering edges through it agree.
bool is_flat(const Hypergraph& h, const Bits& a, const Bits& b, const Bits& c);

// Edge labels in [0,1]; exact rationals.
struct DimerLabeling {
    std::vector<Rational> labels; // indexed by edge
};

bool is_dimer_labeling(const Hypergraph& h, const DimerLabeling& l);

// A point of the complex: base covering, cubic glide set, cube coordinates.
struct ComplexPoint {
    std::uint32_t base_state = 0;
    std::vector<std::uint32_t> glide_ids; // sorted glide indices
    std::vector<Rational> coords;         // parallel to glide_ids, in [0,1]
};

// The evaluation map: x(s) off the base covering, 1-x(s) on it, and the
// characteristic labeling elsewhere.
DimerLabeling evaluate(const DimerComplex& dcx, const ComplexPoint& p);

// One connected component of the labeling space: a set of pairwise
// independent odd cycles, the subgraph left after deleting their support,
// and that subgraph's dimer complex.
struct LabelingComponent {
    std::vector<std::uint32_t> odd_cycle_ids;
    DimerComplex complex;
};

// Graph mode only. Components are keyed by independent sets of odd cycles;
// sets whose residual subgraph has no dimer covering contribute nothing.
std::vector<LabelingComponent> labeling_components(const Hypergraph& g,
                                                   const BuildOptions& opts = {},
                                                   std::size_t max_cycles = 1'000'000);

} // namespace glidecx

#endif

#ifndef GLIDECX_GLIDE_COMPLEX_HPP
#define GLIDECX_GLIDE_COMPLEX_HPP

#include "glidecx/cycles.hpp"
#include "glidecx/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace glidecx {

// Set-like gliding system over the power group of an edge universe: glides
// are non-empty edge sets, independent glides are disjoint, independent
// glides commute (automatic under symmetric difference).
struct GlidingSystem {
    std::size_t edge_universe = 0;
    std::vector<Bits> glides;
    std::vector<Bits> indep;               // indep[i] over glide ids
    std::vector<std::int32_t> cycle_ids;   // global cycle id per glide, -1 if none

    std::size_t size() const { return glides.size(); }
    bool independent(std::uint32_t i, std::uint32_t j) const { return indep[i].test(j); }
    std::int32_t glide_of_cycle(std::uint32_t cycle_id) const;

    // Checks the gliding-system axioms plus the set-like condition.
    void validate() const;
};

// Even cycles as glides, independence = disjoint vertex supports.
GlidingSystem make_even_cycle_system(const Hypergraph& h, const CycleSystem& cs);

// Arbitrary glides with independence = disjointness as edge sets.
GlidingSystem make_power_system(std::size_t edge_universe, std::vector<Bits> glides);

Bits glide(const Bits& state, const Bits& s);

// Pairwise independent with pairwise distinct subset products.
bool is_cubic(const GlidingSystem& sys, const std::vector<std::uint32_t>& glide_ids);

// [T] for the subset of glide_ids selected by mask bits.
Bits subset_product(const GlidingSystem& sys, const std::vector<std::uint32_t>& glide_ids,
                    std::uint32_t mask);

struct BasedCube {
    Bits base;
    std::vector<std::uint32_t> glide_ids; // sorted
};

// Throws unless the glide set is pairwise independent and cubic.
void validate_based_cube(const GlidingSystem& sys, const BasedCube& cube);

// The vertex [T]A selected by the mask over the cube's glide list.
Bits based_cube_vertex(const GlidingSystem& sys, const BasedCube& cube, std::uint32_t mask);

// Canonical cube: base is the lexicographically least vertex (valid because
// every glide is self-inverse, so equivalence moves only the base).
struct Cube {
    std::uint32_t base_state = 0;
    std::vector<std::uint32_t> glide_ids;   // sorted, size = dimension
    std::vector<std::uint32_t> vertices;    // 2^dim state indices, mask order
};

struct BuildOptions {
    std::optional<std::uint32_t> max_dim;
    std::size_t max_cubes = 5'000'000;
    std::size_t max_states = 1'000'000;
    unsigned jobs = 1;
};

struct LinkComplex {
    std::vector<std::uint32_t> vertices;                  // glide ids
    std::vector<std::vector<std::uint32_t>> simplices;    // sorted glide-id sets
};

class CubeComplex {
public:
    CubeComplex() = default;

    const GlidingSystem& system() const { return sys_; }
    const std::vector<Bits>& states() const { return states_; }
    std::optional<std::uint32_t> state_index(const Bits& s) const;

    // k >= 1; 0-cubes are the states.
    const std::vector<std::vector<Cube>>& cubes() const { return cubes_; }
    const Cube& cube(std::uint32_t k, std::uint32_t idx) const { return cubes_[k - 1][idx]; }
    std::size_t cube_count(std::uint32_t k) const;

    int dimension() const;
    std::vector<std::size_t> f_vector() const;
    long long euler() const;
    std::vector<std::vector<std::uint32_t>> components() const;

    std::optional<std::uint32_t> find_cube(std::uint32_t k, std::uint32_t base_state,
                                           const std::vector<std::uint32_t>& glide_ids) const;

    // The 2k facets of a k-cube as (k-1)-cube indices; for k = 1 the two
    // endpoint state indices.
    const std::vector<std::uint32_t>& facets(std::uint32_t k, std::uint32_t idx) const;

    LinkComplex link(std::uint32_t state) const;

    friend CubeComplex build_complex(const GlidingSystem& sys, std::vector<Bits> states,
                                     const BuildOptions& opts);

private:
    GlidingSystem sys_;
    std::vector<Bits> states_;
    std::unordered_map<Bits, std::uint32_t, BitsHash> state_index_;
    std::vector<std::vector<Cube>> cubes_;
    std::vector<std::vector<std::vector<std::uint32_t>>> facets_;
};

// All cubes of X_E whose vertices lie in `states`, canonically deduplicated:
// each cube is emitted once, from its lexicographically least vertex.
CubeComplex build_complex(const GlidingSystem& sys, std::vector<Bits> states,
                          const BuildOptions& opts = {});

bool check_square(const GlidingSystem& sys, const std::vector<Bits>& states);
// Square condition of `inner` relative to `outer`.
bool check_square_rel(const GlidingSystem& sys, const std::vector<Bits>& inner,
                      const std::vector<Bits>& outer);
bool check_3cube(const GlidingSystem& sys, const std::vector<Bits>& states);
bool check_regular(const GlidingSystem& sys, const std::vector<Bits>& states);

bool check_simple(const CubeComplex& x);

struct FlagViolation {
    std::uint32_t state;
    std::vector<std::uint32_t> clique_glides;
};

struct FlagReport {
    bool ok = true;
    std::optional<FlagViolation> violation;
};

FlagReport check_flag(const CubeComplex& x);

// Both sides of the curvature criterion: (regular and 3-cube) on the state
// set, and (simple and flag links) on the built complex.
struct NpcReport {
    bool regular = false;
    bool cube3 = false;
    bool simple = false;
    bool flag = false;
    std::optional<FlagViolation> flag_violation;

    bool npc_by_conditions() const { return regular && cube3; }
    bool npc_by_links() const { return simple && flag; }
    bool consistent() const { return npc_by_conditions() == npc_by_links(); }
};

// With assert_consistent, a disagreement between the two sides throws
// std::logic_error (internal-consistency failure).
NpcReport npc_verdict(const GlidingSystem& sys, const std::vector<Bits>& states,
                      const BuildOptions& opts = {}, bool assert_consistent = true);

// Maximal cliques of a symmetric adjacency relation, ascending vertex order.
void for_each_maximal_clique(std::size_t n, const std::vector<Bits>& adj,
                             const std::function<void(const std::vector<std::uint32_t>&)>& fn);

} // namespace glidecx

#endif

#ifndef GLIDECX_BRAID_HPP
#define GLIDECX_BRAID_HPP

#include "glidecx/words.hpp"

#include <string>
#include <vector>

namespace glidecx {

// A covering with its edges marked 1..N; mark_of_edge[e] = 0 off the
// covering.
struct MarkedCovering {
    Bits covering;
    std::vector<std::uint32_t> mark_of_edge;
};

// Marks 1..N in ascending edge order.
MarkedCovering canonical_marking(const Hypergraph& h, const Bits& covering);

// One-line images: image_of[i-1] is the mark replacing mark i at its
// starting edge after the loop.
struct Permutation {
    std::vector<std::uint32_t> image_of;

    std::string one_line() const;       // "(231)"
    std::string cycle_string() const;   // "(1 2 3)"
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_of == b.image_of;
    }
};

Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& f, const Permutation& g); // f after g
Permutation inverse(const Permutation& p);

// Glide a marked covering along an even cycle: marks outside the cycle stay,
// each mark inside is pushed through its endpoint in the distinguished
// vertex half onto the adjacent cycle edge. Graph mode only.
MarkedCovering glide_marked(const DimerComplex& dcx, const MarkedCovering& m,
                            std::uint32_t cycle_id, const VOrientation& vo);

// Transport of the canonical marking around the loop; the permutation
// compares final to initial marks. Composition convention:
// braid_permutation(a then b) = compose(braid_permutation(a),
// braid_permutation(b)).
Permutation braid_permutation(const DimerComplex& dcx, const GlideLoop& loop,
                              const VOrientation& vo);

// The loop transported through the canonical covering bijection onto the
// subdivided graph, with the induced vertex orientation; N + |n| marks.
Permutation theta_n_permutation(const DimerComplex& dcx, const GlideLoop& loop,
                                const SubdivisionProfile& profile, const VOrientation& vo,
                                const BuildOptions& opts = {},
                                std::size_t max_cycles = 1'000'000);

} // namespace glidecx

#endif

#ifndef GLIDECX_WORDS_HPP
#define GLIDECX_WORDS_HPP

#include "glidecx/dimer.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace glidecx {

// Letter +-(g+1) is generator g or its inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline std::uint32_t letter_gen(Letter l) { return static_cast<std::uint32_t>(std::abs(l)) - 1; }
Word word_inverse(const Word& w);
Word free_reduce(const Word& w);

// Right-angled Artin group: generators with a symmetric irreflexive
// commutation relation.
struct RAAGSpec {
    std::vector<std::string> generators;
    std::vector<Bits> commuting; // commuting[i] over generator ids

    bool commute(std::uint32_t i, std::uint32_t j) const { return commuting[i].test(j); }
    void validate() const;
};

// Canonical normal form: full cancellation (delete a letter pair whenever
// everything between commutes with it), then the lexicographically least
// shuffle. Empty iff the word represents the identity.
Word raag_normal_form(const Word& w, const RAAGSpec& spec);

// A(G): one generator per even cycle, commuting iff the cycles are
// independent. Generator order = glide order of the system.
RAAGSpec glide_raag(const DimerComplex& dcx);

// B: one generator per edge, commuting iff the edges share no vertex.
RAAGSpec edge_raag(const Hypergraph& h);

// A choice of edge half per even cycle (index into EvenCycleData halves,
// positions follow CycleSystem::even_ids). Determines the orientation of
// every 1-cell: towards the endpoint containing the chosen half.
struct Orientation {
    std::vector<std::uint8_t> half;
};

Orientation canonical_orientation(const CycleSystem& cs);

// A choice of vertex half per even cycle; graph mode only.
struct VOrientation {
    std::vector<std::uint8_t> vhalf;
};

VOrientation canonical_vorientation(const CycleSystem& cs);

// A loop of glidings: base covering plus even-cycle ids; every prefix
// product must be a covering and the total product returns to the base.
struct GlideLoop {
    Bits base;
    std::vector<std::uint32_t> steps; // global cycle ids
};

// Throws ValidationError if the loop leaves the covering set or fails to
// close; returns the state indices visited (length steps+1).
std::vector<std::uint32_t> validate_loop(const DimerComplex& dcx, const GlideLoop& loop);

// The image of the loop in A(G): one signed letter per gliding, positive
// iff the arrival covering contains the chosen half of the step cycle.
Word typing_word(const DimerComplex& dcx, const GlideLoop& loop, const Orientation& o);

// Substitution homomorphism u: A -> B determined by the chosen halves;
// u(g_s) multiplies inverse edge generators over the unchosen half and
// edge generators over the chosen one.
Word u_word(const Word& w, const DimerComplex& dcx, const Orientation& o);

} // namespace glidecx

#endif

#ifndef GLIDECX_PRESENTATION_HPP
#define GLIDECX_PRESENTATION_HPP

#include "glidecx/dimer.hpp"
#include "glidecx/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace glidecx {

using BigInt = boost::multiprecision::cpp_int;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    void validate() const; // relators reference declared generators only
};

// Presentation from pair generators and cube triples: generators y_{A,B}
// over ordered state pairs, a relator y_{A,B} y_{B,C} y_{A,C}^-1 for every
// ordered triple of vertices of a common cube (degenerate repeats included),
// and y_{base,A} = 1 for all A unless groupoid mode (then generators are
// named z and no basepoint relators are added).
//
// check_hulls verifies that every 2-element state subset has a hull (the
// hypothesis of the presentation theorem); dimer complexes satisfy it
// automatically and may skip the scan.
Presentation cube_presentation(const CubeComplex& x, std::uint32_t base_state,
                               bool groupoid, bool check_hulls);

Presentation dimer_presentation(const DimerComplex& dcx, std::uint32_t base_state,
                                bool groupoid = false);

// Independent route: spanning-tree edge-path presentation of the component
// of the basepoint, generators = non-tree 1-cubes, relators = boundary words
// of 2-cubes.
Presentation pi1_spanning_tree(const CubeComplex& x, std::uint32_t base_state);

// Eliminates generators defined by relators of length <= 2 and free- and
// cyclically reduces relators; preserves the isomorphism class.
Presentation tietze_reduce(const Presentation& p);

struct AbelianInvariants {
    std::size_t betti = 0;
    std::vector<BigInt> torsion; // invariant factors > 1, each dividing the next

    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.betti == b.betti && a.torsion == b.torsion;
    }
};

// Invariant factors of the abelianized group (integer Smith normal form of
// the relator exponent matrix).
AbelianInvariants abelianization(const Presentation& p);

// Smith normal form diagonal (non-negative, each dividing the next) of an
// integer matrix given as rows.
std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m);

} // namespace glidecx

#endif

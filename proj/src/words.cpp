#include "glidecx/words.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>

namespace glidecx {

Word word_inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l = -l;
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    for (auto l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

void RAAGSpec::validate() const {
    if (commuting.size() != generators.size())
        throw ValidationError("commutation relation size mismatch");
    for (std::uint32_t i = 0; i < generators.size(); ++i) {
        if (commuting[i].test(i))
            throw ValidationError("commutation relation must be irreflexive");
        for (std::uint32_t j = 0; j < generators.size(); ++j)
            if (commuting[i].test(j) != commuting[j].test(i))
                throw ValidationError("commutation relation must be symmetric");
    }
}

Word raag_normal_form(const Word& w, const RAAGSpec& spec) {
    const std::uint32_t n = static_cast<std::uint32_t>(spec.generators.size());
    for (auto l : w)
        if (l == 0 || letter_gen(l) >= n)
            throw ValidationError("word references an unknown generator");

    // One left-to-right pass keeps the prefix fully reduced: a new letter
    // cancels against the rightmost partner it can shuffle up to.
    Word out;
    for (auto l : w) {
        const std::uint32_t g = letter_gen(l);
        bool cancelled = false;
        for (std::size_t j = out.size(); j-- > 0;) {
            const std::uint32_t gj = letter_gen(out[j]);
            if (gj == g) {
                if (out[j] == -l) {
                    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
                    cancelled = true;
                }
                break;
            }
            if (!spec.commute(gj, g)) break;
        }
        if (!cancelled) out.push_back(l);
    }

    // Lexicographically least representative: repeatedly emit the smallest
    // front-movable letter (one whose generator commutes with everything
    // before it). Only the first occurrence of a generator can be movable,
    // so the choice is unambiguous.
    Word nf;
    nf.reserve(out.size());
    while (!out.empty()) {
        std::size_t best = out.size();
        for (std::size_t p = 0; p < out.size(); ++p) {
            const std::uint32_t g = letter_gen(out[p]);
            bool movable = true;
            for (std::size_t q = 0; q < p; ++q)
                if (!spec.commute(letter_gen(out[q]), g)) { movable = false; break; }
            if (movable && (best == out.size() || g < letter_gen(out[best]))) best = p;
        }
        nf.push_back(out[best]);
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return nf;
}

RAAGSpec glide_raag(const DimerComplex& dcx) {
    RAAGSpec spec;
    const auto& sys = dcx.system;
    for (std::uint32_t g = 0; g < sys.size(); ++g)
        spec.generators.push_back("g" + std::to_string(sys.cycle_ids[g]));
    spec.commuting = sys.indep;
    spec.validate();
    return spec;
}

RAAGSpec edge_raag(const Hypergraph& h) {
    RAAGSpec spec;
    for (std::uint32_t e = 0; e < h.edge_count(); ++e)
        spec.generators.push_back("h" + h.edge_id(e));
    spec.commuting.assign(h.edge_count(), Bits(h.edge_count()));
    for (std::uint32_t e = 0; e < h.edge_count(); ++e)
        for (std::uint32_t f = e + 1; f < h.edge_count(); ++f)
            if (h.boundary_bits(e).disjoint(h.boundary_bits(f))) {
                spec.commuting[e].set(f);
                spec.commuting[f].set(e);
            }
    spec.validate();
    return spec;
}

Orientation canonical_orientation(const CycleSystem& cs) {
    return Orientation{std::vector<std::uint8_t>(cs.even_ids.size(), 0)};
}

VOrientation canonical_vorientation(const CycleSystem& cs) {
    return VOrientation{std::vector<std::uint8_t>(cs.even_ids.size(), 0)};
}

std::vector<std::uint32_t> validate_loop(const DimerComplex& dcx, const GlideLoop& loop) {
    auto base = dcx.complex.state_index(loop.base);
    if (!base) throw ValidationError("loop base is not a dimer covering of the graph");
    std::vector<std::uint32_t> visited{*base};
    Bits current = loop.base;
    for (auto cycle_id : loop.steps) {
        if (cycle_id >= dcx.cycles.cycles.size())
            throw ValidationError("loop step references an unknown cycle");
        if (!dcx.cycles.is_even(cycle_id))
            throw ValidationError("loop step cycle " + std::to_string(cycle_id) + " is odd");
        current ^= dcx.cycles.cycles[cycle_id].edges;
        auto idx = dcx.complex.state_index(current);
        if (!idx)
            throw ValidationError("loop leaves the set of dimer coverings");
        visited.push_back(*idx);
    }
    if (visited.back() != *base)
        throw ValidationError("loop does not return to its base covering");
    return visited;
}

Word typing_word(const DimerComplex& dcx, const GlideLoop& loop, const Orientation& o) {
    if (o.half.size() != dcx.cycles.even_ids.size())
        throw ValidationError("orientation does not match the even-cycle list");
    validate_loop(dcx, loop);

    Word out;
    Bits current = loop.base;
    for (auto cycle_id : loop.steps) {
        const std::uint32_t slot = static_cast<std::uint32_t>(dcx.cycles.even_slot[cycle_id]);
        const auto& data = dcx.cycles.even[slot];
        current ^= data.cycle.edges;
        const Bits& chosen = data.edge_halves[o.half[slot]];
        const Bits arrival_half = data.cycle.edges & current;
        Letter l = static_cast<Letter>(slot) + 1;
        out.push_back(arrival_half == chosen ? l : -l);
    }
    return out;
}

Word u_word(const Word& w, const DimerComplex& dcx, const Orientation& o) {
    if (o.half.size() != dcx.cycles.even_ids.size())
        throw ValidationError("orientation does not match the even-cycle list");
    Word out;
    for (auto l : w) {
        const std::uint32_t slot = letter_gen(l);
        if (slot >= dcx.cycles.even.size())
            throw ValidationError("word references an unknown cycle generator");
        const auto& data = dcx.cycles.even[slot];
        const Bits& chosen = data.edge_halves[o.half[slot]];
        const Bits other = data.cycle.edges - chosen;
        Word piece;
        other.for_each([&](std::uint32_t e) { piece.push_back(-(static_cast<Letter>(e) + 1)); });
        chosen.for_each([&](std::uint32_t e) { piece.push_back(static_cast<Letter>(e) + 1); });
        if (l < 0) piece = word_inverse(piece);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

} // namespace glidecx

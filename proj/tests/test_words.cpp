#include "glidecx/errors.hpp"
#include "glidecx/words.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace glidecx;
using helpers::load;

namespace {

RAAGSpec two_generators(bool commute) {
    RAAGSpec spec;
    spec.generators = {"x", "y"};
    spec.commuting.assign(2, Bits(2));
    if (commute) {
        spec.commuting[0].set(1);
        spec.commuting[1].set(0);
    }
    return spec;
}

RAAGSpec random_raag(std::mt19937_64& rng, unsigned n) {
    RAAGSpec spec;
    for (unsigned i = 0; i < n; ++i) spec.generators.push_back("g" + std::to_string(i));
    spec.commuting.assign(n, Bits(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if (rng() & 1) {
                spec.commuting[i].set(j);
                spec.commuting[j].set(i);
            }
    return spec;
}

Word random_word(std::mt19937_64& rng, unsigned n, unsigned len) {
    Word w;
    for (unsigned i = 0; i < len; ++i) {
        Letter l = static_cast<Letter>(rng() % n) + 1;
        w.push_back(rng() & 1 ? l : -l);
    }
    return w;
}

} // namespace

TEST_CASE("normal form basics") {
    auto commuting = two_generators(true);
    auto free2 = two_generators(false);
    Word commutator = {1, 2, -1, -2};
    CHECK(raag_normal_form(commutator, commuting).empty());
    CHECK(raag_normal_form(commutator, free2).size() == 4);
    CHECK(raag_normal_form({}, free2).empty());
    CHECK(raag_normal_form({1, -1}, free2).empty());
    CHECK_THROWS_AS(raag_normal_form({5}, free2), ValidationError);

    // The canonical form piles commuting letters in generator order.
    CHECK(raag_normal_form({2, 1}, commuting) == Word{1, 2});
    CHECK(raag_normal_form({2, 1}, free2) == Word{2, 1});
}

TEST_CASE("normal form is canonical across shuffle-blocked orders") {
    // Path commutation a-b-c (a and c do not commute): cab and bca are the
    // same element but neither admits a decreasing adjacent swap.
    RAAGSpec spec;
    spec.generators = {"a", "b", "c"};
    spec.commuting.assign(3, Bits(3));
    spec.commuting[0].set(1);
    spec.commuting[1].set(0);
    spec.commuting[1].set(2);
    spec.commuting[2].set(1);
    Word cab = {3, 1, 2};
    Word bca = {2, 3, 1};
    CHECK(raag_normal_form(cab, spec) == raag_normal_form(bca, spec));
    CHECK(raag_normal_form(cab, spec) == Word{2, 3, 1});
}

TEST_CASE("normal form is invariant under random legal rewrites") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 2 + rng() % 4; // up to 5 generators
        RAAGSpec spec;
        for (unsigned i = 0; i < n; ++i) spec.generators.push_back("g" + std::to_string(i));
        spec.commuting.assign(n, Bits(n));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (rng() & 1) {
                    spec.commuting[i].set(j);
                    spec.commuting[j].set(i);
                }
        Word u = random_word(rng, n, 1 + rng() % 10);
        Word v = u;
        // Apply a chain of element-preserving rewrites: commuting adjacent
        // swaps, free insertions and free cancellations.
        for (int k = 0; k < 12; ++k) {
            unsigned move = rng() % 3;
            if (move == 0 && v.size() >= 2) {
                std::size_t i = rng() % (v.size() - 1);
                auto g1 = letter_gen(v[i]), g2 = letter_gen(v[i + 1]);
                if (g1 != g2 && spec.commute(g1, g2)) std::swap(v[i], v[i + 1]);
            } else if (move == 1) {
                std::size_t i = rng() % (v.size() + 1);
                Letter l = static_cast<Letter>(rng() % n) + 1;
                if (rng() & 1) l = -l;
                v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), {l, -l});
            } else {
                for (std::size_t i = 0; i + 1 < v.size(); ++i)
                    if (v[i] == -v[i + 1]) {
                        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                                v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                        break;
                    }
            }
        }
        CHECK(raag_normal_form(u, spec) == raag_normal_form(v, spec));
    }
}

TEST_CASE("normal form agrees with the rewriting search") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned n = 2 + rng() % 3; // up to 4 generators
        auto spec = random_raag(rng, n);
        Word u = random_word(rng, n, rng() % 9);
        CHECK(raag_normal_form(u, spec).empty() == oracles::raag_trivial_by_search(u, spec));
    }
    // Canonicity: equal normal forms exactly for equal elements.
    for (int trial = 0; trial < 120; ++trial) {
        unsigned n = 2 + rng() % 2;
        auto spec = random_raag(rng, n);
        Word u = random_word(rng, n, 2 + rng() % 3);
        Word v = random_word(rng, n, 2 + rng() % 3);
        Word uv1 = u;
        Word vinv = word_inverse(v);
        uv1.insert(uv1.end(), vinv.begin(), vinv.end());
        CHECK((raag_normal_form(u, spec) == raag_normal_form(v, spec)) ==
              oracles::raag_trivial_by_search(uv1, spec));
    }
}

TEST_CASE("glide and edge Artin groups of a graph") {
    auto dcx = dimer_complex(load("ladder.json"));
    auto a = glide_raag(dcx);
    CHECK(a.generators.size() == 3); // two squares and the hexagon
    // No two ladder cycles are independent.
    for (const auto& row : a.commuting) CHECK(row.empty());

    auto b = edge_raag(dcx.graph);
    CHECK(b.generators.size() == 7);
    // ad and cf share no vertex, ad and ab do.
    auto ad = *dcx.graph.edge_index("ad");
    auto cf = *dcx.graph.edge_index("cf");
    auto ab = *dcx.graph.edge_index("ab");
    CHECK(b.commute(ad, cf));
    CHECK_FALSE(b.commute(ad, ab));
}

TEST_CASE("loop validation") {
    auto dcx = dimer_complex(load("ladder.json"));
    auto a = dcx.graph.edge_set({"ad", "be", "cf"});

    GlideLoop empty{a, {}};
    CHECK(validate_loop(dcx, empty).size() == 1);

    GlideLoop bad{a, {1, 1, 1}}; // back, forth, and away
    CHECK_THROWS_AS(validate_loop(dcx, bad), ValidationError);

    GlideLoop off{dcx.graph.edge_set({"ad", "be"}), {}};
    CHECK_THROWS_AS(validate_loop(dcx, off), ValidationError);

    GlideLoop t{a, {0, 2, 1}};
    CHECK(validate_loop(dcx, t).size() == 4);
}

TEST_CASE("typing words") {
    auto dcx = dimer_complex(load("ladder.json"));
    auto cs = dcx.cycles;
    auto o = canonical_orientation(cs);
    auto a = dcx.graph.edge_set({"ad", "be", "cf"});

    SUBCASE("constant loop gives the empty word") {
        CHECK(typing_word(dcx, GlideLoop{a, {}}, o).empty());
    }

    SUBCASE("back and forth cancels in the normal form") {
        auto w = typing_word(dcx, GlideLoop{a, {1, 1}}, o);
        CHECK(w.size() == 2);
        CHECK(raag_normal_form(w, glide_raag(dcx)).empty());
    }

    SUBCASE("the three-step loop reads one letter per cycle") {
        // Canonical halves: s1 -> {ad,be}, s12 -> {ad,bc,ef}, s2 -> {be,cf}.
        // Arrivals: s1A misses {ad,be}; s12s1A equals {bc,ef,ad}; A contains
        // {be,cf}.
        auto w = typing_word(dcx, GlideLoop{a, {0, 2, 1}}, o);
        CHECK(w == Word{-1, 3, 2});
    }

    SUBCASE("flipping one distinguished half inverts exactly that letter") {
        auto w = typing_word(dcx, GlideLoop{a, {0, 2, 1}}, o);
        Orientation flipped = o;
        flipped.half[2] = 1; // the hexagon
        auto w2 = typing_word(dcx, GlideLoop{a, {0, 2, 1}}, flipped);
        REQUIRE(w.size() == w2.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (letter_gen(w[i]) == 2)
                CHECK(w2[i] == -w[i]);
            else
                CHECK(w2[i] == w[i]);
        }
    }
}

TEST_CASE("typing words are invariant under homotopy rewrites") {
    std::mt19937_64 rng(777);
    for (const char* file : {"theta4.json", "ladder.json", "c4c4.json"}) {
        auto dcx = dimer_complex(load(file));
        if (dcx.coverings().empty()) continue;
        auto spec = glide_raag(dcx);
        auto o = canonical_orientation(dcx.cycles);
        for (int trial = 0; trial < 30; ++trial) {
            auto loop = helpers::random_loop(dcx, rng);
            auto nf = raag_normal_form(typing_word(dcx, loop, o), spec);

            // Insert a back-and-forth step at a random position.
            auto visited = validate_loop(dcx, loop);
            std::size_t pos = rng() % visited.size();
            Bits state = dcx.coverings()[visited[pos]];
            std::vector<std::uint32_t> apps;
            for (std::uint32_t g = 0; g < dcx.system.size(); ++g)
                if (dcx.complex.state_index(state ^ dcx.system.glides[g])) apps.push_back(g);
            if (!apps.empty()) {
                auto cycle =
                    static_cast<std::uint32_t>(dcx.system.cycle_ids[apps[rng() % apps.size()]]);
                GlideLoop longer = loop;
                longer.steps.insert(longer.steps.begin() + static_cast<std::ptrdiff_t>(pos),
                                    {cycle, cycle});
                CHECK(raag_normal_form(typing_word(dcx, longer, o), spec) == nf);
            }

            // Swap a consecutive independent pair if one exists.
            for (std::size_t i = 0; i + 1 < loop.steps.size(); ++i) {
                auto g1 = dcx.system.glide_of_cycle(loop.steps[i]);
                auto g2 = dcx.system.glide_of_cycle(loop.steps[i + 1]);
                if (g1 < 0 || g2 < 0 || g1 == g2) continue;
                if (!dcx.system.independent(static_cast<std::uint32_t>(g1),
                                            static_cast<std::uint32_t>(g2)))
                    continue;
                GlideLoop swapped = loop;
                std::swap(swapped.steps[i], swapped.steps[i + 1]);
                CHECK(raag_normal_form(typing_word(dcx, swapped, o), spec) == nf);
                break;
            }
        }
    }
}

TEST_CASE("u-words") {
    auto dcx = dimer_complex(load("ladder.json"));
    auto o = canonical_orientation(dcx.cycles);

    SUBCASE("empty word maps to the empty word") {
        CHECK(u_word({}, dcx, o).empty());
    }

    SUBCASE("a 2-cycle generator substitutes to two letters") {
        auto t3 = dimer_complex(helpers::theta_graph(3));
        auto ot = canonical_orientation(t3.cycles);
        // Cycle 0 is {e1,e2}; the canonical half is {e1}.
        auto w = u_word({1}, t3, ot);
        REQUIRE(w.size() == 2);
        auto e1 = static_cast<Letter>(*t3.graph.edge_index("e1")) + 1;
        auto e2 = static_cast<Letter>(*t3.graph.edge_index("e2")) + 1;
        CHECK(w == Word{-e2, e1});
    }

    SUBCASE("u of mu is trivial for the three-step loop") {
        auto a = dcx.graph.edge_set({"ad", "be", "cf"});
        auto mu = typing_word(dcx, GlideLoop{a, {0, 2, 1}}, o);
        auto u = u_word(mu, dcx, o);
        CHECK(raag_normal_form(u, edge_raag(dcx.graph)).empty());
    }
}

TEST_CASE("u of mu vanishes on random loops") {
    std::mt19937_64 rng(20250811);
    for (const auto& file : helpers::corpus_files()) {
        auto dcx = dimer_complex(load(file));
        if (dcx.coverings().empty() || dcx.system.size() == 0) continue;
        auto o = canonical_orientation(dcx.cycles);
        auto b = edge_raag(dcx.graph);
        for (int trial = 0; trial < 25; ++trial) {
            auto loop = helpers::random_loop(dcx, rng);
            auto w = u_word(typing_word(dcx, loop, o), dcx, o);
            CHECK(raag_normal_form(w, b).empty());
        }
    }
}

TEST_CASE("u of mu vanishes for every shared half choice") {
    std::mt19937_64 rng(314159);
    for (const char* file : {"ladder.json", "theta4.json", "c4c4.json", "hyper3u.json"}) {
        auto dcx = dimer_complex(load(file));
        auto b = edge_raag(dcx.graph);
        for (int trial = 0; trial < 15; ++trial) {
            Orientation o;
            o.half.resize(dcx.cycles.even_ids.size());
            for (auto& bit : o.half) bit = rng() & 1;
            auto loop = helpers::random_loop(dcx, rng);
            auto w = u_word(typing_word(dcx, loop, o), dcx, o);
            CHECK(raag_normal_form(w, b).empty());
        }
    }

    // Sanity: mismatched half choices between mu and u break the identity
    // (the ladder loop acquires non-zero exponent sums).
    auto dcx = dimer_complex(load("ladder.json"));
    auto o = canonical_orientation(dcx.cycles);
    Orientation flipped = o;
    flipped.half[2] = 1;
    auto mu = typing_word(dcx, GlideLoop{dcx.graph.edge_set({"ad", "be", "cf"}), {0, 2, 1}}, o);
    auto w = u_word(mu, dcx, flipped);
    CHECK_FALSE(raag_normal_form(w, edge_raag(dcx.graph)).empty());
}

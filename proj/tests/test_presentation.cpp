#include "glidecx/errors.hpp"
#include "glidecx/presentation.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace glidecx;
using helpers::load;

namespace {

AbelianInvariants free_abelian(std::size_t betti) { return AbelianInvariants{betti, {}}; }

}

TEST_CASE("smith normal form") {
    CHECK(smith_normal_form({{2, 4}, {6, 8}}) == std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form({{1, 0}, {0, 0}}) == std::vector<BigInt>{1});
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).empty());
    CHECK(smith_normal_form({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
    auto diag = smith_normal_form({{6, 10}, {10, 6}});
    REQUIRE(diag.size() == 2);
    CHECK(diag[0] == 2);
    CHECK(diag[1] == 32); // |det| = 64, d1*d2 = 64
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) CHECK(diag[i + 1] % diag[i] == 0);
}

TEST_CASE("abelianization of simple presentations") {
    Presentation free3;
    free3.generators = {"a", "b", "c"};
    CHECK(abelianization(free3) == free_abelian(3));

    Presentation z2;
    z2.generators = {"x"};
    z2.relators = {{1, 1}};
    auto inv = abelianization(z2);
    CHECK(inv.betti == 0);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 2);

    Presentation klein; // <a,b | abab^-1> has H1 = Z + Z/2
    klein.generators = {"a", "b"};
    klein.relators = {{1, 2, 1, -2}};
    auto k = abelianization(klein);
    CHECK(k.betti == 1);
    REQUIRE(k.torsion.size() == 1);
    CHECK(k.torsion[0] == 2);
}

TEST_CASE("tietze reduction") {
    SUBCASE("irreducible input is unchanged") {
        Presentation p;
        p.generators = {"a", "b"};
        p.relators = {{1, 1, 2, 2}};
        auto q = tietze_reduce(p);
        CHECK(q.generators == p.generators);
        CHECK(q.relators == p.relators);
    }

    SUBCASE("torsion relators survive") {
        Presentation p;
        p.generators = {"x"};
        p.relators = {{1, 1}};
        auto q = tietze_reduce(p);
        CHECK(q.generators.size() == 1);
        REQUIRE(q.relators.size() == 1);
        CHECK(q.relators[0].size() == 2);
    }

    SUBCASE("length-1 and length-2 eliminations") {
        Presentation p;
        p.generators = {"a", "b", "c"};
        p.relators = {{1}, {2, 3}}; // a = 1, c = b^-1
        auto q = tietze_reduce(p);
        CHECK(q.generators == std::vector<std::string>{"b"});
        CHECK(q.relators.empty());
    }

    SUBCASE("reduction preserves the abelianization on dimer presentations") {
        for (const char* file : {"theta3.json", "theta4.json", "ladder.json", "c4c4.json",
                                 "hyper3u.json"}) {
            auto dcx = dimer_complex(load(file));
            auto p = dimer_presentation(dcx, 0);
            CHECK(abelianization(p) == abelianization(tietze_reduce(p)));
        }
    }
}

TEST_CASE("dimer presentations of the named graphs") {
    SUBCASE("theta3 reduces to one free generator") {
        auto dcx = dimer_complex(helpers::theta_graph(3));
        auto q = tietze_reduce(dimer_presentation(dcx, 0));
        CHECK(q.generators.size() == 1);
        CHECK(q.relators.empty());
    }

    SUBCASE("theta graphs are free of rank (n-1)(n-2)/2") {
        for (unsigned n = 2; n <= 6; ++n) {
            auto dcx = dimer_complex(helpers::theta_graph(n));
            auto q = tietze_reduce(dimer_presentation(dcx, 0));
            CHECK(q.generators.size() == (n - 1) * (n - 2) / 2);
            CHECK(q.relators.empty());
        }
    }

    SUBCASE("the ladder group is infinite cyclic") {
        auto dcx = dimer_complex(load("ladder.json"));
        auto inv = abelianization(dimer_presentation(dcx, 0));
        CHECK(inv == free_abelian(1));
        auto q = tietze_reduce(dimer_presentation(dcx, 0));
        CHECK(q.generators.size() == 1);
        CHECK(q.relators.empty());
    }

    SUBCASE("contractible complexes give the trivial group") {
        for (const char* file : {"c4.json", "c6.json", "c4c4.json"}) {
            auto dcx = dimer_complex(load(file));
            auto q = tietze_reduce(dimer_presentation(dcx, 0));
            CHECK(q.generators.empty());
            CHECK(q.relators.empty());
        }
    }

    SUBCASE("no coverings presents the trivial group") {
        auto dcx = dimer_complex(load("c3.json"));
        auto p = dimer_presentation(dcx, 0);
        CHECK(p.generators.empty());
    }

    SUBCASE("groupoid mode drops the basepoint relations") {
        auto dcx = dimer_complex(helpers::theta_graph(3));
        auto p = dimer_presentation(dcx, 0, true);
        CHECK(p.generators[0].substr(0, 1) == "z");
        for (const auto& r : p.relators) CHECK(r.size() == 3);
        // The groupoid abelianization has one extra free rank per extra
        // object: 3 objects, group rank 1 -> betti 3.
        CHECK(abelianization(tietze_reduce(p)).betti == 3);
    }

    SUBCASE("groupoid homology exceeds group homology by objects minus one") {
        for (const char* file : {"theta4.json", "ladder.json", "c4c4.json", "c6.json",
                                 "hyper3u.json"}) {
            auto dcx = dimer_complex(load(file));
            auto group = abelianization(dimer_presentation(dcx, 0, false));
            auto gpd = abelianization(dimer_presentation(dcx, 0, true));
            CHECK(gpd.betti == group.betti + dcx.coverings().size() - 1);
            CHECK(gpd.torsion == group.torsion);
        }
    }

    SUBCASE("degenerate triples force y_AA = 1 and inverse symmetry") {
        auto dcx = dimer_complex(helpers::theta_graph(2));
        auto p = dimer_presentation(dcx, 0);
        // 4 generators y_ij; everything collapses.
        CHECK(p.generators.size() == 4);
        auto q = tietze_reduce(p);
        CHECK(q.generators.empty());
    }
}

TEST_CASE("spanning-tree presentations") {
    SUBCASE("theta complexes are graphs with no squares") {
        for (unsigned n = 2; n <= 6; ++n) {
            auto dcx = dimer_complex(helpers::theta_graph(n));
            auto p = pi1_spanning_tree(dcx.complex, 0);
            CHECK(p.generators.size() == (n - 1) * (n - 2) / 2);
            CHECK(p.relators.empty());
        }
    }

    SUBCASE("one square kills the one non-tree edge") {
        auto dcx = dimer_complex(load("c4c4.json"));
        auto p = pi1_spanning_tree(dcx.complex, 0);
        CHECK(p.generators.size() == 1);
        REQUIRE(p.relators.size() == 1);
        CHECK(abelianization(p) == free_abelian(0));
    }

    SUBCASE("tree skeletons are trivial") {
        auto dcx = dimer_complex(load("c4.json"));
        auto p = pi1_spanning_tree(dcx.complex, 0);
        CHECK(p.generators.empty());
    }

    SUBCASE("basepoint must be a vertex") {
        auto dcx = dimer_complex(load("c4.json"));
        CHECK_THROWS_AS(pi1_spanning_tree(dcx.complex, 99), ValidationError);
    }
}

TEST_CASE("the two presentation routes agree on homology") {
    for (const auto& file : helpers::corpus_files()) {
        auto dcx = dimer_complex(load(file));
        if (dcx.coverings().empty()) continue;
        for (std::uint32_t base : {0u, static_cast<std::uint32_t>(dcx.coverings().size() - 1)}) {
            auto via_flat = abelianization(dimer_presentation(dcx, base));
            auto via_tree = abelianization(pi1_spanning_tree(dcx.complex, base));
            CHECK(via_flat == via_tree);
        }
    }

    // Medium-size inputs: longer ladders have higher-dimensional cubes and
    // thousands of raw relators.
    for (unsigned k : {4u, 5u, 6u}) {
        auto dcx = dimer_complex(helpers::ladder_graph(k));
        auto via_flat = abelianization(dimer_presentation(dcx, 0));
        auto via_tree = abelianization(pi1_spanning_tree(dcx.complex, 0));
        CHECK(via_flat == via_tree);
        CHECK(via_flat.torsion.empty());
    }
}

TEST_CASE("complexes without 2-cubes have free H1 of rank E - V + C") {
    for (const char* file : {"theta3.json", "theta5.json", "ladder.json"}) {
        auto dcx = dimer_complex(load(file));
        const auto f = dcx.complex.f_vector();
        REQUIRE(f.size() == 2);
        auto inv = abelianization(pi1_spanning_tree(dcx.complex, 0));
        CHECK(inv.torsion.empty());
        CHECK(inv.betti == f[1] - f[0] + dcx.complex.components().size());
    }
}

TEST_CASE("the generic pair presentation requires hulls") {
    // Corner of a square with the far vertex but no 2-cube: connected, yet
    // the diagonal pair lies in no common cube.
    auto h = helpers::parallel_pairs(2);
    auto cs = build_cycle_system(h);
    auto sys = make_even_cycle_system(h, cs);
    auto covs = enumerate_dimer_coverings(h);
    REQUIRE(covs.size() == 4);
    Bits a = covs[0];
    std::vector<Bits> corner = {a, a ^ sys.glides[0], a ^ sys.glides[1],
                                a ^ sys.glides[0] ^ sys.glides[1]};
    auto full = build_complex(sys, corner);
    CHECK_NOTHROW(cube_presentation(full, 0, false, true));

    std::vector<Bits> lshape = {a, a ^ sys.glides[0], a ^ sys.glides[0] ^ sys.glides[1]};
    auto x = build_complex(sys, lshape);
    REQUIRE(x.components().size() == 1);
    CHECK_THROWS_AS(cube_presentation(x, 0, false, true), ValidationError);
}

TEST_CASE("disconnected complexes are rejected") {
    auto h = helpers::parallel_pairs(2);
    auto cs = build_cycle_system(h);
    auto sys = make_even_cycle_system(h, cs);
    auto covs = enumerate_dimer_coverings(h);
    std::vector<Bits> separated = {covs[0], covs[0] ^ sys.glides[0] ^ sys.glides[1]};
    auto x = build_complex(sys, separated);
    REQUIRE(x.components().size() == 2);
    CHECK_THROWS_AS(cube_presentation(x, 0, false, false), ValidationError);
}

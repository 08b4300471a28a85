#include "glidecx/presentation.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <set>

namespace glidecx {

void Presentation::validate() const {
    for (const auto& r : relators)
        for (auto l : r)
            if (l == 0 || letter_gen(l) >= generators.size())
                throw ValidationError("relator references an unknown generator");
}

namespace {

Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(w);
    }
    return w;
}

// Hull scan for the presentation hypothesis: some cube containing the pair
// must be a face of every cube containing the pair.
void check_pair_hulls(const CubeComplex& x) {
    const std::size_t n = x.states().size();
    std::vector<std::vector<const Cube*>> containing(n * n);
    for (const auto& level : x.cubes())
        for (const auto& c : level)
            for (auto a : c.vertices)
                for (auto b : c.vertices)
                    if (a < b) containing[a * n + b].push_back(&c);

    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) {
            const auto& cubes = containing[a * n + b];
            if (cubes.empty())
                throw ValidationError("no cube contains the state pair (" + std::to_string(a) +
                                      "," + std::to_string(b) + "); the pair has no hull");
            const Cube* hull = nullptr;
            for (const Cube* cand : cubes) {
                bool face_of_all = true;
                for (const Cube* other : cubes)
                    if (!is_face_of(*cand, *other)) { face_of_all = false; break; }
                if (face_of_all) { hull = cand; break; }
            }
            if (!hull)
                throw ValidationError("state pair (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") has no hull; the pair-generator "
                                      "presentation does not apply");
        }
}

} // namespace

Presentation cube_presentation(const CubeComplex& x, std::uint32_t base_state,
                               bool groupoid, bool check_hulls) {
    const std::size_t n = x.states().size();
    Presentation p;
    if (n == 0) return p; // empty complex presents the trivial group

    if (base_state >= n)
        throw ValidationError("basepoint is not a vertex of the complex");
    if (x.components().size() != 1)
        throw ValidationError("complex is disconnected");
    if (check_hulls) check_pair_hulls(x);

    const char* prefix = groupoid ? "z" : "y";
    p.generators.reserve(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            p.generators.push_back(std::string(prefix) + "_" + std::to_string(i) + "_" +
                                   std::to_string(j));
    auto gen = [&](std::uint32_t i, std::uint32_t j) {
        return static_cast<Letter>(i * n + j) + 1;
    };

    std::set<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t i = 0; i < n; ++i) triples.insert({i, i, i});
    for (const auto& level : x.cubes())
        for (const auto& c : level)
            for (auto a : c.vertices)
                for (auto b : c.vertices)
                    for (auto d : c.vertices) triples.insert({a, b, d});

    for (const auto& t : triples)
        p.relators.push_back({gen(t[0], t[1]), gen(t[1], t[2]), -gen(t[0], t[2])});
    if (!groupoid)
        for (std::uint32_t j = 0; j < n; ++j)
            p.relators.push_back({gen(base_state, j)});
    return p;
}

Presentation dimer_presentation(const DimerComplex& dcx, std::uint32_t base_state,
                                bool groupoid) {
    // Every 2-element covering subset has a hull, so the scan is skipped.
    return cube_presentation(dcx.complex, base_state, groupoid, false);
}

Presentation pi1_spanning_tree(const CubeComplex& x, std::uint32_t base_state) {
    Presentation p;
    const std::size_t n = x.states().size();
    if (n == 0) return p;
    if (base_state >= n)
        throw ValidationError("basepoint is not a vertex of the complex");

    const std::size_t n1 = x.cube_count(1);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(n); // (edge, neighbor)
    for (std::uint32_t i = 0; i < n1; ++i) {
        const Cube& c = x.cube(1, i);
        adj[c.vertices[0]].push_back({i, c.vertices[1]});
        adj[c.vertices[1]].push_back({i, c.vertices[0]});
    }

    // Breadth-first spanning tree of the basepoint's component.
    std::vector<std::uint8_t> in_comp(n, 0);
    std::vector<std::uint8_t> tree_edge(n1, 0);
    std::queue<std::uint32_t> q;
    q.push(base_state);
    in_comp[base_state] = 1;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto [e, w] : adj[u]) {
            if (in_comp[w]) continue;
            in_comp[w] = 1;
            tree_edge[e] = 1;
            q.push(w);
        }
    }

    std::vector<std::int32_t> gen_of(n1, -1);
    for (std::uint32_t i = 0; i < n1; ++i) {
        const Cube& c = x.cube(1, i);
        if (tree_edge[i] || !in_comp[c.vertices[0]]) continue;
        gen_of[i] = static_cast<std::int32_t>(p.generators.size());
        p.generators.push_back("x" + std::to_string(p.generators.size()));
    }

    auto edge_between = [&](std::uint32_t a, std::uint32_t b, std::uint32_t glide) {
        auto idx = x.find_cube(1, std::min(a, b), {glide});
        if (!idx) throw std::logic_error("missing 1-cube on square boundary");
        return *idx;
    };

    for (std::uint32_t i = 0; i < x.cube_count(2); ++i) {
        const Cube& c = x.cube(2, i);
        if (!in_comp[c.vertices[0]]) continue;
        const std::uint32_t s = c.glide_ids[0], t = c.glide_ids[1];
        const std::uint32_t v00 = c.vertices[0], v10 = c.vertices[1], v01 = c.vertices[2],
                            v11 = c.vertices[3];
        // Boundary loop v00 -s- v10 -t- v11 -s- v01 -t- v00.
        const std::array<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, 4> walk{
            std::tuple{v00, v10, s}, {v10, v11, t}, {v11, v01, s}, {v01, v00, t}};
        Word rel;
        for (auto [a, b, g] : walk) {
            auto e = edge_between(a, b, g);
            if (gen_of[e] < 0) continue;
            Letter l = gen_of[e] + 1;
            rel.push_back(a < b ? l : -l);
        }
        rel = free_reduce(rel);
        if (!rel.empty()) p.relators.push_back(std::move(rel));
    }
    return p;
}

Presentation tietze_reduce(const Presentation& p) {
    p.validate();
    const std::size_t n = p.generators.size();

    // Signed substitution forest: repl[g] is the letter g rewrites to
    // (+(g+1) = unresolved root), or 0 once g maps to the identity. Chains
    // always point to smaller generator indices, so resolution terminates.
    constexpr Letter kIdentity = 0;
    std::vector<Letter> repl(n);
    for (std::uint32_t g = 0; g < n; ++g) repl[g] = static_cast<Letter>(g) + 1;

    auto resolve = [&](Letter l) -> Letter {
        bool positive = l > 0;
        std::uint32_t g = letter_gen(l);
        for (;;) {
            Letter r = repl[g];
            if (r == kIdentity) return kIdentity;
            if (letter_gen(r) == g) break;
            if (r < 0) positive = !positive;
            g = letter_gen(r);
        }
        return positive ? static_cast<Letter>(g) + 1 : -(static_cast<Letter>(g) + 1);
    };
    auto resolve_word = [&](const Word& w) {
        Word out;
        out.reserve(w.size());
        for (auto l : w) {
            Letter r = resolve(l);
            if (r != kIdentity) out.push_back(r);
        }
        return cyclic_reduce(out);
    };

    std::vector<Word> rels;
    for (const auto& r : p.relators) {
        Word w = cyclic_reduce(r);
        if (!w.empty()) rels.push_back(std::move(w));
    }

    // Per pass: rewrite every relator through the current substitutions and
    // harvest new ones from relators of length <= 2.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Word> kept;
        for (auto& r : rels) {
            Word w = resolve_word(r);
            if (w.empty()) continue;
            if (w.size() == 1) {
                repl[letter_gen(w[0])] = kIdentity;
                changed = true;
                continue;
            }
            if (w.size() == 2 && letter_gen(w[0]) != letter_gen(w[1])) {
                // a^x b^y = 1  =>  a = b^(-y*x); eliminate the larger index.
                Letter a = w[0], b = w[1];
                if (letter_gen(a) < letter_gen(b)) std::swap(a, b);
                repl[letter_gen(a)] = (a > 0) ? -b : b;
                changed = true;
                continue;
            }
            kept.push_back(std::move(w));
        }
        rels = std::move(kept);
    }

    std::set<Word> seen;
    std::vector<Word> unique_rels;
    for (auto& w : rels) {
        Word key = std::min(w, word_inverse(w));
        if (seen.insert(key).second) unique_rels.push_back(std::move(w));
    }

    Presentation out;
    std::vector<std::int32_t> remap(n, -1);
    for (std::uint32_t g = 0; g < n; ++g)
        if (repl[g] == static_cast<Letter>(g) + 1) {
            remap[g] = static_cast<std::int32_t>(out.generators.size());
            out.generators.push_back(p.generators[g]);
        }
    for (const auto& r : unique_rels) {
        Word w;
        for (auto l : r) {
            std::int32_t m = remap[letter_gen(l)];
            if (m < 0) throw std::logic_error("eliminated generator survived substitution");
            w.push_back(l > 0 ? m + 1 : -(m + 1));
        }
        out.relators.push_back(std::move(w));
    }
    return out;
}

std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    auto abs_of = [](const BigInt& x) { return x < 0 ? BigInt(-x) : x; };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi == rows || abs_of(m[i][j]) < abs_of(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                while (m[i][t] != 0) {
                    BigInt q = m[i][t] / m[t][t];
                    for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) {
                        std::swap(m[t], m[i]);
                        dirty = true;
                    }
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                while (m[t][j] != 0) {
                    BigInt q = m[t][j] / m[t][t];
                    for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                        dirty = true;
                    }
                }
            }
        }

        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
            for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }

    std::vector<BigInt> diag;
    for (std::size_t i = 0; i < t; ++i) diag.push_back(abs_of(m[i][i]));
    return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
    p.validate();
    const std::size_t g = p.generators.size();
    std::vector<std::vector<BigInt>> m;
    m.reserve(p.relators.size());
    for (const auto& r : p.relators) {
        std::vector<BigInt> row(g, 0);
        for (auto l : r) row[letter_gen(l)] += (l > 0 ? 1 : -1);
        m.push_back(std::move(row));
    }
    auto diag = smith_normal_form(std::move(m));

    AbelianInvariants inv;
    std::size_t rank = 0;
    for (const auto& d : diag)
        if (d != 0) {
            ++rank;
            if (d > 1) inv.torsion.push_back(d);
        }
    inv.betti = g - rank;
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

} // namespace glidecx

#ifndef GLIDECX_TESTS_HELPERS_HPP
#define GLIDECX_TESTS_HELPERS_HPP

#include "glidecx/io.hpp"
#include "glidecx/words.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace helpers {

using namespace glidecx;

inline std::string data_path(const std::string& name) {
    return std::string(GLIDECX_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Hypergraph load(const std::string& name) {
    return parse_hypergraph(slurp(data_path(name)));
}

inline Hypergraph cycle_graph(unsigned n) {
    std::vector<std::string> verts;
    std::vector<std::string> edges;
    std::vector<std::vector<std::string>> bnd;
    for (unsigned i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    for (unsigned i = 0; i < n; ++i) {
        edges.push_back("g" + std::to_string(i));
        bnd.push_back({verts[i], verts[(i + 1) % n]});
    }
    return Hypergraph::make(Mode::graph, verts, edges, bnd);
}

inline Hypergraph theta_graph(unsigned n) {
    std::vector<std::string> edges;
    std::vector<std::vector<std::string>> bnd;
    for (unsigned i = 1; i <= n; ++i) {
        edges.push_back("e" + std::to_string(i));
        bnd.push_back({"a", "b"});
    }
    return Hypergraph::make(Mode::graph, {"a", "b"}, edges, bnd);
}

// k-rung ladder: two rails of k-1 edges joined by k rungs; rungs first so
// the all-rungs covering is canonically marked 1..k left to right.
inline Hypergraph ladder_graph(unsigned k) {
    std::vector<std::string> verts, edges;
    std::vector<std::vector<std::string>> bnd;
    for (unsigned i = 0; i < k; ++i) verts.push_back("t" + std::to_string(i));
    for (unsigned i = 0; i < k; ++i) verts.push_back("b" + std::to_string(i));
    for (unsigned i = 0; i < k; ++i) {
        edges.push_back("r" + std::to_string(i));
        bnd.push_back({"t" + std::to_string(i), "b" + std::to_string(i)});
    }
    for (unsigned i = 0; i + 1 < k; ++i) {
        edges.push_back("t" + std::to_string(i) + std::to_string(i + 1));
        bnd.push_back({"t" + std::to_string(i), "t" + std::to_string(i + 1)});
        edges.push_back("b" + std::to_string(i) + std::to_string(i + 1));
        bnd.push_back({"b" + std::to_string(i), "b" + std::to_string(i + 1)});
    }
    return Hypergraph::make(Mode::graph, verts, edges, bnd);
}

// k disjoint pairs of parallel edges (a union of theta-2 graphs); the 2-cycles
// are pairwise independent glides.
inline Hypergraph parallel_pairs(unsigned k) {
    std::vector<std::string> verts, edges;
    std::vector<std::vector<std::string>> bnd;
    for (unsigned i = 0; i < k; ++i) {
        std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        verts.push_back(a);
        verts.push_back(b);
        for (int j = 0; j < 2; ++j) {
            edges.push_back("p" + std::to_string(i) + std::to_string(j));
            bnd.push_back({a, b});
        }
    }
    return Hypergraph::make(Mode::graph, verts, edges, bnd);
}

// Random loop of glidings based at the given covering: a random walk in the
// 1-skeleton that either happens to return or is closed by walking the
// reverse path.
inline GlideLoop random_loop_at(const DimerComplex& dcx, std::uint32_t base,
                                std::mt19937_64& rng, unsigned max_out = 8) {
    GlideLoop loop;
    loop.base = dcx.coverings()[base];
    Bits cur = loop.base;
    std::vector<std::uint32_t> glide_steps;
    const unsigned len = 1 + static_cast<unsigned>(rng() % max_out);
    for (unsigned i = 0; i < len; ++i) {
        std::vector<std::uint32_t> apps;
        for (std::uint32_t g = 0; g < dcx.system.size(); ++g)
            if (dcx.complex.state_index(cur ^ dcx.system.glides[g])) apps.push_back(g);
        if (apps.empty()) break;
        std::uint32_t g = apps[rng() % apps.size()];
        glide_steps.push_back(g);
        cur ^= dcx.system.glides[g];
        if (cur == loop.base && (rng() & 1)) break;
    }
    if (!(cur == loop.base)) {
        std::vector<std::uint32_t> back(glide_steps.rbegin(), glide_steps.rend());
        glide_steps.insert(glide_steps.end(), back.begin(), back.end());
    }
    for (auto g : glide_steps)
        loop.steps.push_back(static_cast<std::uint32_t>(dcx.system.cycle_ids[g]));
    return loop;
}

inline GlideLoop random_loop(const DimerComplex& dcx, std::mt19937_64& rng,
                             unsigned max_out = 8) {
    return random_loop_at(dcx, static_cast<std::uint32_t>(rng() % dcx.coverings().size()), rng,
                          max_out);
}

inline const std::vector<std::string>& corpus_graph_files() {
    static const std::vector<std::string> files = {
        "c3.json",  "c4.json",    "c5.json",    "c6.json",     "theta2.json", "theta3.json",
        "theta4.json", "theta5.json", "theta6.json", "c4c4.json", "c3c4.json", "ladder.json"};
    return files;
}

inline const std::vector<std::string>& corpus_files() {
    static const std::vector<std::string> files = [] {
        auto v = corpus_graph_files();
        v.push_back("hyper3u.json");
        return v;
    }();
    return files;
}

} // namespace helpers

#endif

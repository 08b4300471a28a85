#ifndef GLIDECX_IO_HPP
#define GLIDECX_IO_HPP

#include "glidecx/braid.hpp"
#include "glidecx/dimer.hpp"
#include "glidecx/presentation.hpp"
#include "glidecx/words.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace glidecx {

using Json = nlohmann::ordered_json;

// Schema: {"mode":"graph"|"hypergraph","vertices":["a",...],
//          "edges":[{"id":"e1","boundary":["a","b"]},...]}.
// Edge bit positions follow file order.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph parse_hypergraph_json(const Json& j);
Json hypergraph_json(const Hypergraph& h);
std::string serialize_hypergraph(const Hypergraph& h);

struct StatesInput {
    Hypergraph graph;
    std::vector<Bits> states;
};

// {"graph": {...}, "states": [["e1","e2"],...]}; glides are the graph's
// even cycles.
StatesInput parse_states_file(const std::string& text);
bool looks_like_states_file(const std::string& text);

// {"base": ["e1",...], "steps": [cycleId or ["e1",...], ...]}.
GlideLoop parse_loop_json(const Json& j, const Hypergraph& h, const CycleSystem& cs);

// Object mapping cycle id to a chosen half, e.g. {"0": ["e1","e3"]};
// unspecified cycles take half 0.
Orientation parse_halves_json(const Json& j, const Hypergraph& h, const CycleSystem& cs);
VOrientation parse_vhalves_json(const Json& j, const Hypergraph& h, const CycleSystem& cs);

SubdivisionProfile parse_subdivision_spec(const std::string& spec, const Hypergraph& h);

std::string rational_string(const Rational& r);

Json labeling_json(const Hypergraph& h, const DimerLabeling& l);

// Sorted edge-id list; even cycles add their halves and v-halves.
Json cycle_json(const Hypergraph& h, const CycleSystem& cs, std::uint32_t cycle_id);
Json presentation_json(const Presentation& p);
Json word_json(const Word& w, const std::vector<std::string>& generator_names);
Json cubes_json(const CubeComplex& x, const Hypergraph& h);

// 1-skeleton with vertices labelled by edge-id sets.
std::string dot_skeleton(const CubeComplex& x, const Hypergraph& h);

} // namespace glidecx

#endif

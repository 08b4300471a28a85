#include "glidecx/io.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>
#include <sstream>

namespace glidecx {

namespace {

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array())
        throw ValidationError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw ValidationError(std::string(what) + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

// A step is either a cycle id or an explicit edge list resolved against the
// enumerated cycles.
std::uint32_t resolve_cycle(const Json& j, const Hypergraph& h, const CycleSystem& cs) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        auto id = j.get<std::int64_t>();
        if (id < 0 || static_cast<std::size_t>(id) >= cs.cycles.size())
            throw ValidationError("cycle id " + std::to_string(id) + " out of range");
        return static_cast<std::uint32_t>(id);
    }
    if (j.is_array()) {
        Bits edges = h.edge_set(string_list(j, "cycle edge list"));
        for (std::uint32_t id = 0; id < cs.cycles.size(); ++id)
            if (cs.cycles[id].edges == edges) return id;
        throw ValidationError("edge list does not name a cycle of the graph");
    }
    throw ValidationError("cycle reference must be an id or an edge list");
}

} // namespace

Hypergraph parse_hypergraph_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("hypergraph file must be a JSON object");
    if (!j.contains("mode") || !j["mode"].is_string())
        throw ValidationError("missing \"mode\"");
    const std::string mode_s = j["mode"].get<std::string>();
    Mode mode;
    if (mode_s == "graph")
        mode = Mode::graph;
    else if (mode_s == "hypergraph")
        mode = Mode::hypergraph;
    else
        throw ValidationError("mode must be \"graph\" or \"hypergraph\"");

    if (!j.contains("vertices")) throw ValidationError("missing \"vertices\"");
    auto vertices = string_list(j["vertices"], "\"vertices\"");

    if (!j.contains("edges") || !j["edges"].is_array())
        throw ValidationError("missing \"edges\" array");
    std::vector<std::string> edge_ids;
    std::vector<std::vector<std::string>> boundaries;
    for (const auto& ej : j["edges"]) {
        if (!ej.is_object() || !ej.contains("id") || !ej["id"].is_string() ||
            !ej.contains("boundary"))
            throw ValidationError("each edge needs an \"id\" and a \"boundary\"");
        edge_ids.push_back(ej["id"].get<std::string>());
        boundaries.push_back(string_list(ej["boundary"], "edge boundary"));
    }
    return Hypergraph::make(mode, std::move(vertices), std::move(edge_ids),
                            std::move(boundaries));
}

Hypergraph parse_hypergraph(const std::string& text) {
    return parse_hypergraph_json(parse_text(text));
}

Json hypergraph_json(const Hypergraph& h) {
    Json j;
    j["mode"] = h.mode() == Mode::graph ? "graph" : "hypergraph";
    j["vertices"] = h.vertex_ids();
    Json edges = Json::array();
    for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
        Json ej;
        ej["id"] = h.edge_id(e);
        Json b = Json::array();
        for (auto v : h.boundary(e)) b.push_back(h.vertex_id(v));
        ej["boundary"] = b;
        edges.push_back(ej);
    }
    j["edges"] = edges;
    return j;
}

std::string serialize_hypergraph(const Hypergraph& h) { return hypergraph_json(h).dump(); }

bool looks_like_states_file(const std::string& text) {
    auto j = parse_text(text);
    return j.is_object() && j.contains("states");
}

StatesInput parse_states_file(const std::string& text) {
    auto j = parse_text(text);
    if (!j.is_object() || !j.contains("graph") || !j.contains("states"))
        throw ValidationError("states file needs \"graph\" and \"states\"");
    StatesInput in{parse_hypergraph_json(j["graph"]), {}};
    if (!j["states"].is_array())
        throw ValidationError("\"states\" must be an array of edge-id lists");
    for (const auto& st : j["states"])
        in.states.push_back(in.graph.edge_set(string_list(st, "state")));
    return in;
}

GlideLoop parse_loop_json(const Json& j, const Hypergraph& h, const CycleSystem& cs) {
    if (!j.is_object() || !j.contains("base") || !j.contains("steps"))
        throw ValidationError("loop file needs \"base\" and \"steps\"");
    GlideLoop loop;
    loop.base = h.edge_set(string_list(j["base"], "loop base"));
    if (!j["steps"].is_array())
        throw ValidationError("\"steps\" must be an array");
    for (const auto& step : j["steps"])
        loop.steps.push_back(resolve_cycle(step, h, cs));
    return loop;
}

namespace {

template <typename OrientationT>
OrientationT parse_half_choices(const Json& j, const Hypergraph& h, const CycleSystem& cs,
                                bool vertex_halves) {
    OrientationT o;
    auto& slots = [&]() -> std::vector<std::uint8_t>& {
        if constexpr (std::is_same_v<OrientationT, Orientation>)
            return o.half;
        else
            return o.vhalf;
    }();
    slots.assign(cs.even_ids.size(), 0);
    if (j.is_null()) return o;
    if (!j.is_object())
        throw ValidationError("half choices must be an object keyed by cycle id");
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t id;
        try {
            id = std::stoul(it.key());
        } catch (...) {
            throw ValidationError("half-choice key '" + it.key() + "' is not a cycle id");
        }
        if (id >= cs.cycles.size() || !cs.is_even(static_cast<std::uint32_t>(id)))
            throw ValidationError("cycle " + it.key() + " is not an even cycle");
        const std::uint32_t slot =
            static_cast<std::uint32_t>(cs.even_slot[static_cast<std::uint32_t>(id)]);
        Bits half = vertex_halves ? h.vertex_set(string_list(it.value(), "half"))
                                  : h.edge_set(string_list(it.value(), "half"));
        const auto& pair = vertex_halves ? cs.even[slot].vertex_halves
                                         : cs.even[slot].edge_halves;
        if (half == pair[0])
            slots[slot] = 0;
        else if (half == pair[1])
            slots[slot] = 1;
        else
            throw ValidationError("given set is not a half of cycle " + it.key());
    }
    return o;
}

} // namespace

Orientation parse_halves_json(const Json& j, const Hypergraph& h, const CycleSystem& cs) {
    return parse_half_choices<Orientation>(j, h, cs, false);
}

VOrientation parse_vhalves_json(const Json& j, const Hypergraph& h, const CycleSystem& cs) {
    return parse_half_choices<VOrientation>(j, h, cs, true);
}

SubdivisionProfile parse_subdivision_spec(const std::string& spec, const Hypergraph& h) {
    SubdivisionProfile p;
    p.counts.assign(h.edge_count(), 0);
    if (spec.empty()) return p;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("subdivision spec items must look like edge=count");
        auto idx = h.edge_index(item.substr(0, eq));
        if (!idx) throw ValidationError("unknown edge '" + item.substr(0, eq) + "'");
        try {
            p.counts[*idx] = static_cast<std::uint32_t>(std::stoul(item.substr(eq + 1)));
        } catch (...) {
            throw ValidationError("bad subdivision count in '" + item + "'");
        }
    }
    return p;
}

std::string rational_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json labeling_json(const Hypergraph& h, const DimerLabeling& l) {
    Json j;
    for (std::uint32_t e = 0; e < h.edge_count(); ++e)
        j[h.edge_id(e)] = rational_string(l.labels[e]);
    return j;
}

Json cycle_json(const Hypergraph& h, const CycleSystem& cs, std::uint32_t cycle_id) {
    if (cycle_id >= cs.cycles.size())
        throw ValidationError("cycle id out of range");
    Json j;
    j["id"] = cycle_id;
    j["edges"] = h.edge_names(cs.cycles[cycle_id].edges);
    j["vertices"] = h.vertex_names(cs.cycles[cycle_id].verts);
    j["even"] = cs.is_even(cycle_id);
    if (cs.is_even(cycle_id)) {
        const auto& data = cs.even[static_cast<std::uint32_t>(cs.even_slot[cycle_id])];
        j["halves"] = Json::array({h.edge_names(data.edge_halves[0]),
                                   h.edge_names(data.edge_halves[1])});
        if (h.mode() == Mode::graph)
            j["vhalves"] = Json::array({h.vertex_names(data.vertex_halves[0]),
                                        h.vertex_names(data.vertex_halves[1])});
    }
    return j;
}

Json word_json(const Word& w, const std::vector<std::string>& generator_names) {
    Json j = Json::array();
    for (auto l : w)
        j.push_back(Json::array({generator_names[letter_gen(l)], l > 0 ? 1 : -1}));
    return j;
}

Json presentation_json(const Presentation& p) {
    Json j;
    j["generators"] = p.generators;
    Json rels = Json::array();
    for (const auto& r : p.relators) rels.push_back(word_json(r, p.generators));
    j["relators"] = rels;
    return j;
}

Json cubes_json(const CubeComplex& x, const Hypergraph& h) {
    Json j;
    Json states = Json::array();
    for (const auto& s : x.states()) states.push_back(h.edge_names(s));
    j["states"] = states;
    Json levels = Json::array();
    for (std::uint32_t k = 1; static_cast<std::size_t>(k) <= x.cubes().size(); ++k) {
        Json level = Json::array();
        for (std::uint32_t i = 0; i < x.cube_count(k); ++i) {
            const Cube& c = x.cube(k, i);
            Json cj;
            cj["base"] = h.edge_names(x.states()[c.base_state]);
            Json glides = Json::array();
            for (auto g : c.glide_ids) glides.push_back(x.system().cycle_ids[g]);
            cj["glides"] = glides;
            level.push_back(cj);
        }
        levels.push_back(level);
    }
    j["cubes"] = levels;
    return j;
}

std::string dot_skeleton(const CubeComplex& x, const Hypergraph& h) {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (std::uint32_t i = 0; i < x.states().size(); ++i) {
        os << "  v" << i << " [label=\"{";
        auto names = h.edge_names(x.states()[i]);
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (k) os << ",";
            os << names[k];
        }
        os << "}\"];\n";
    }
    for (std::uint32_t i = 0; i < x.cube_count(1); ++i) {
        const Cube& c = x.cube(1, i);
        os << "  v" << c.vertices[0] << " -- v" << c.vertices[1] << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace glidecx

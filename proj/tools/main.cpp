// Command-line front end: deterministic, scriptable access to coverings,
// complexes, curvature checks, presentations, braid permutations and the
// labeling-space census.

#include "glidecx/braid.hpp"
#include "glidecx/dimer.hpp"
#include "glidecx/errors.hpp"
#include "glidecx/io.hpp"
#include "glidecx/presentation.hpp"
#include "glidecx/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace glidecx;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

struct Options {
    std::string input;
    std::string format = "text";
    std::size_t max_cubes = 5'000'000;
    std::size_t max_cycles = 1'000'000;
    unsigned jobs = 1;
    std::uint64_t seed = 1;

    BuildOptions build() const {
        BuildOptions b;
        b.max_cubes = max_cubes;
        b.jobs = jobs;
        return b;
    }
};

void add_common(CLI::App* cmd, Options& opt, bool needs_input = true) {
    auto* in = cmd->add_option("-i,--input", opt.input, "input file");
    if (needs_input) in->required();
    cmd->add_option("-f,--format", opt.format, "output format: text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--max-cubes", opt.max_cubes, "cube budget");
    cmd->add_option("--max-cycles", opt.max_cycles, "cycle enumeration budget");
    cmd->add_option("--jobs", opt.jobs, "worker threads");
    cmd->add_option("--seed", opt.seed, "seed for randomized checks");
}

std::string join_names(const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ",";
        s += names[i];
    }
    return s + "}";
}

void print_complex_summary(std::ostream& os, const Hypergraph& h, const CubeComplex& x) {
    auto f = x.f_vector();
    os << "f-vector: (";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ",";
        os << f[i];
    }
    os << ")\n";
    os << "dimension: " << x.dimension() << "\n";
    os << "euler: " << x.euler() << "\n";
    os << "components: " << x.components().size() << "\n";
    (void)h;
}

int cmd_dimers(const Options& opt) {
    auto h = parse_hypergraph(read_file(opt.input));
    auto coverings = enumerate_dimer_coverings(h);
    if (opt.format == "json") {
        Json j;
        j["count"] = coverings.size();
        Json list = Json::array();
        for (const auto& c : coverings) list.push_back(h.edge_names(c));
        j["coverings"] = list;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "coverings: " << coverings.size() << "\n";
        for (const auto& c : coverings) std::cout << join_names(h.edge_names(c)) << "\n";
    }
    return 0;
}

int cmd_cycles(const Options& opt) {
    auto h = parse_hypergraph(read_file(opt.input));
    auto cs = build_cycle_system(h, opt.max_cycles);
    if (opt.format == "json") {
        Json list = Json::array();
        for (std::uint32_t id = 0; id < cs.cycles.size(); ++id)
            list.push_back(cycle_json(h, cs, id));
        Json j;
        j["count"] = cs.cycles.size();
        j["cycles"] = list;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cycles: " << cs.cycles.size() << "\n";
        for (std::uint32_t id = 0; id < cs.cycles.size(); ++id) {
            std::cout << id << ": " << join_names(h.edge_names(cs.cycles[id].edges))
                      << (cs.is_even(id) ? " even" : " odd");
            if (cs.is_even(id)) {
                const auto& d = cs.even[static_cast<std::uint32_t>(cs.even_slot[id])];
                std::cout << " halves " << join_names(h.edge_names(d.edge_halves[0])) << "|"
                          << join_names(h.edge_names(d.edge_halves[1]));
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_complex(const Options& opt) {
    auto h = parse_hypergraph(read_file(opt.input));
    auto dcx = dimer_complex(h, opt.build(), opt.max_cycles);
    if (opt.format == "dot") {
        std::cout << dot_skeleton(dcx.complex, h);
    } else if (opt.format == "json") {
        Json j = cubes_json(dcx.complex, h);
        j["f_vector"] = dcx.complex.f_vector();
        j["dimension"] = dcx.complex.dimension();
        j["euler"] = dcx.complex.euler();
        j["components"] = dcx.complex.components().size();
        std::cout << j.dump(2) << "\n";
    } else {
        print_complex_summary(std::cout, h, dcx.complex);
    }
    return 0;
}

int cmd_check_npc(const Options& opt) {
    auto text = read_file(opt.input);
    Hypergraph h = looks_like_states_file(text) ? parse_states_file(text).graph
                                                : parse_hypergraph(text);
    std::vector<Bits> states;
    if (looks_like_states_file(text))
        states = parse_states_file(text).states;
    else
        states = enumerate_dimer_coverings(h);
    auto cs = build_cycle_system(h, opt.max_cycles);
    auto sys = make_even_cycle_system(h, cs);
    auto report = npc_verdict(sys, states, opt.build(), /*assert_consistent=*/false);

    if (opt.format == "json") {
        Json j;
        j["regular"] = report.regular;
        j["cube3"] = report.cube3;
        j["simple"] = report.simple;
        j["flag"] = report.flag;
        j["npc_by_conditions"] = report.npc_by_conditions();
        j["npc_by_links"] = report.npc_by_links();
        j["consistent"] = report.consistent();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "regular: " << (report.regular ? "yes" : "no") << "\n"
                  << "3-cube condition: " << (report.cube3 ? "yes" : "no") << "\n"
                  << "simple: " << (report.simple ? "yes" : "no") << "\n"
                  << "flag links: " << (report.flag ? "yes" : "no") << "\n"
                  << "NPC (conditions): " << (report.npc_by_conditions() ? "yes" : "no") << "\n"
                  << "NPC (links): " << (report.npc_by_links() ? "yes" : "no") << "\n";
    }
    if (!report.consistent()) {
        std::cerr << "internal consistency failure: the two criteria disagree\n";
        return 1;
    }
    return 0;
}

int cmd_present(const Options& opt, const std::string& base_csv, bool groupoid) {
    auto h = parse_hypergraph(read_file(opt.input));
    auto dcx = dimer_complex(h, opt.build(), opt.max_cycles);
    if (dcx.coverings().empty()) {
        std::cout << "no coverings; trivial group\n";
        return 0;
    }
    std::uint32_t base = 0;
    if (!base_csv.empty()) {
        auto idx = dcx.complex.state_index(h.edge_set(split_ids(base_csv)));
        if (!idx) throw ValidationError("basepoint is not a dimer covering");
        base = *idx;
    }
    auto p = dimer_presentation(dcx, base, groupoid);
    auto reduced = tietze_reduce(p);
    auto inv = abelianization(reduced);

    if (opt.format == "json") {
        Json j;
        j["basepoint"] = h.edge_names(dcx.coverings()[base]);
        j["groupoid"] = groupoid;
        j["raw_generators"] = p.generators.size();
        j["raw_relators"] = p.relators.size();
        j["presentation"] = presentation_json(reduced);
        j["betti"] = inv.betti;
        Json tor = Json::array();
        for (const auto& t : inv.torsion) tor.push_back(t.str());
        j["torsion"] = tor;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "basepoint: " << join_names(h.edge_names(dcx.coverings()[base])) << "\n";
        std::cout << "generators: " << reduced.generators.size() << " (from "
                  << p.generators.size() << ")\n";
        std::cout << "relators: " << reduced.relators.size() << " (from " << p.relators.size()
                  << ")\n";
        std::cout << "abelianization: betti " << inv.betti << ", torsion [";
        for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << inv.torsion[i].str();
        }
        std::cout << "]\n";
    }
    return 0;
}

int cmd_hull(const Options& opt, const std::string& a_csv, const std::string& b_csv) {
    auto h = parse_hypergraph(read_file(opt.input));
    auto dcx = dimer_complex(h, opt.build(), opt.max_cycles);
    auto ai = dcx.complex.state_index(h.edge_set(split_ids(a_csv)));
    auto bi = dcx.complex.state_index(h.edge_set(split_ids(b_csv)));
    if (!ai || !bi) throw ValidationError("hull endpoints must be dimer coverings");
    Cube q = hull(dcx, *ai, *bi);

    if (opt.format == "json") {
        Json j;
        j["dimension"] = q.glide_ids.size();
        Json glides = Json::array();
        for (auto g : q.glide_ids) glides.push_back(dcx.system.cycle_ids[g]);
        j["glide_cycles"] = glides;
        Json verts = Json::array();
        for (auto v : q.vertices) verts.push_back(h.edge_names(dcx.coverings()[v]));
        j["vertices"] = verts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "hull dimension: " << q.glide_ids.size() << "\n";
        std::cout << "glide cycles:";
        for (auto g : q.glide_ids) std::cout << " " << dcx.system.cycle_ids[g];
        std::cout << "\nvertices:\n";
        for (auto v : q.vertices)
            std::cout << "  " << join_names(h.edge_names(dcx.coverings()[v])) << "\n";
    }
    return 0;
}

int cmd_braid(const Options& opt, const std::string& loop_path, const std::string& vhalves_path,
              const std::string& subdivide_spec) {
    auto h = parse_hypergraph(read_file(opt.input));
    auto dcx = dimer_complex(h, opt.build(), opt.max_cycles);
    auto loop = parse_loop_json(Json::parse(read_file(loop_path)), h, dcx.cycles);
    Json vh = vhalves_path.empty() ? Json() : Json::parse(read_file(vhalves_path));
    auto vo = parse_vhalves_json(vh, h, dcx.cycles);

    Permutation perm;
    if (subdivide_spec.empty()) {
        perm = braid_permutation(dcx, loop, vo);
    } else {
        auto profile = parse_subdivision_spec(subdivide_spec, h);
        perm = theta_n_permutation(dcx, loop, profile, vo, opt.build(), opt.max_cycles);
    }

    if (opt.format == "json") {
        Json j;
        j["one_line"] = perm.image_of;
        j["one_line_string"] = perm.one_line();
        j["cycles"] = perm.cycle_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << perm.one_line() << "\n";
        std::cout << "cycles: " << perm.cycle_string() << "\n";
    }
    return 0;
}

int cmd_components(const Options& opt) {
    auto g = parse_hypergraph(read_file(opt.input));
    auto comps = labeling_components(g, opt.build(), opt.max_cycles);

    if (opt.format == "json") {
        auto cs = build_cycle_system(g, opt.max_cycles);
        Json list = Json::array();
        for (const auto& c : comps) {
            Json j;
            j["odd_cycles"] = c.odd_cycle_ids;
            Json cyc = Json::array();
            for (auto id : c.odd_cycle_ids) cyc.push_back(g.edge_names(cs.cycles[id].edges));
            j["odd_cycle_edges"] = cyc;
            j["subgraph_vertices"] = c.complex.graph.vertex_count();
            j["subgraph_edges"] = c.complex.graph.edge_count();
            j["f_vector"] = c.complex.complex.f_vector();
            j["dimension"] = c.complex.complex.dimension();
            j["euler"] = c.complex.complex.euler();
            list.push_back(j);
        }
        Json j;
        j["component_count"] = comps.size();
        j["components"] = list;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "components: " << comps.size() << "\n";
        for (const auto& c : comps) {
            std::cout << "odd cycles [";
            for (std::size_t i = 0; i < c.odd_cycle_ids.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << c.odd_cycle_ids[i];
            }
            std::cout << "] -> ";
            auto f = c.complex.complex.f_vector();
            std::cout << "f(";
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << f[i];
            }
            std::cout << "), dim " << c.complex.complex.dimension() << "\n";
        }
    }
    return 0;
}

int cmd_mu(const Options& opt, const std::string& loop_path, const std::string& halves_path) {
    auto h = parse_hypergraph(read_file(opt.input));
    auto dcx = dimer_complex(h, opt.build(), opt.max_cycles);
    auto loop = parse_loop_json(Json::parse(read_file(loop_path)), h, dcx.cycles);
    Json hj = halves_path.empty() ? Json() : Json::parse(read_file(halves_path));
    auto o = parse_halves_json(hj, h, dcx.cycles);

    auto mu = typing_word(dcx, loop, o);
    auto u = u_word(mu, dcx, o);
    auto a_spec = glide_raag(dcx);
    auto b_spec = edge_raag(h);
    auto nf = raag_normal_form(u, b_spec);

    if (opt.format == "json") {
        Json j;
        j["typing_word"] = word_json(mu, a_spec.generators);
        j["u_image"] = word_json(u, b_spec.generators);
        j["u_image_normal_form"] = word_json(nf, b_spec.generators);
        j["u_of_mu_is_identity"] = nf.empty();
        std::cout << j.dump(2) << "\n";
    } else {
        auto show = [&](const Word& w, const std::vector<std::string>& names) {
            std::string s;
            for (auto l : w) {
                if (!s.empty()) s += " ";
                s += names[letter_gen(l)];
                if (l < 0) s += "^-1";
            }
            return s.empty() ? std::string("1") : s;
        };
        std::cout << "mu(loop) = " << show(mu, a_spec.generators) << "\n";
        std::cout << "u(mu(loop)) = " << show(u, b_spec.generators) << "\n";
        std::cout << "normal form = " << show(nf, b_spec.generators) << "\n";
        std::cout << "identity: " << (nf.empty() ? "yes" : "no") << "\n";
    }
    return 0;
}

// Randomized curvature-equivalence check over corner subsets of independent
// square glides; seeded and deterministic.
int cmd_selfcheck(const Options& opt, std::size_t trials) {
    std::mt19937_64 rng(opt.seed);
    std::size_t ran = 0, failures = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const unsigned k = 2 + static_cast<unsigned>(rng() % 3);
        std::vector<std::string> verts, edges;
        std::vector<std::vector<std::string>> bnd;
        for (unsigned c = 0; c < k; ++c) {
            std::string t = "c" + std::to_string(c) + ".";
            for (int i = 0; i < 4; ++i) verts.push_back(t + std::to_string(i));
            for (int i = 0; i < 4; ++i) {
                edges.push_back(t + "e" + std::to_string(i));
                bnd.push_back({t + std::to_string(i), t + std::to_string((i + 1) % 4)});
            }
        }
        auto h = Hypergraph::make(Mode::graph, verts, edges, bnd);
        auto cs = build_cycle_system(h);
        auto sys = make_even_cycle_system(h, cs);
        auto coverings = enumerate_dimer_coverings(h);

        std::vector<Bits> corners;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            Bits s = coverings[0];
            for (unsigned g = 0; g < k; ++g)
                if (mask & (1u << g)) s ^= sys.glides[g];
            corners.push_back(s);
        }
        std::vector<Bits> states;
        for (const auto& c : corners)
            if (rng() & 1) states.push_back(c);
        if (states.empty()) states.push_back(corners[0]);

        auto report = npc_verdict(sys, states, opt.build(), /*assert_consistent=*/false);
        ++ran;
        if (!report.consistent()) ++failures;
    }
    std::cout << "trials: " << ran << "\n";
    std::cout << "disagreements: " << failures << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gliding systems, dimer cube complexes and their invariants"};
    app.require_subcommand(1);

    Options opt;
    std::string base_csv, a_csv, b_csv, loop_path, vhalves_path, halves_path, subdivide_spec;
    bool groupoid = false;
    std::size_t trials = 500;

    auto* dimers = app.add_subcommand("dimers", "list dimer coverings");
    add_common(dimers, opt);

    auto* cycles = app.add_subcommand("cycles", "list cycles with ids and halves");
    add_common(cycles, opt);

    auto* complex = app.add_subcommand("complex", "dimer complex summary");
    add_common(complex, opt);

    auto* npc = app.add_subcommand("check-npc", "curvature report (graph or states file)");
    add_common(npc, opt);

    auto* present = app.add_subcommand("present", "dimer group presentation");
    add_common(present, opt);
    present->add_option("--base", base_csv, "basepoint covering as comma-separated edge ids");
    present->add_flag("--groupoid", groupoid, "groupoid presentation (no basepoint relations)");

    auto* hull_cmd = app.add_subcommand("hull", "hull cube of two coverings");
    add_common(hull_cmd, opt);
    hull_cmd->add_option("--a", a_csv, "first covering")->required();
    hull_cmd->add_option("--b", b_csv, "second covering")->required();

    auto* braid = app.add_subcommand("braid", "braid permutation of a loop");
    add_common(braid, opt);
    braid->add_option("--loop", loop_path, "loop file")->required();
    braid->add_option("--vhalves", vhalves_path, "distinguished v-halves file");
    braid->add_option("--subdivide", subdivide_spec, "subdivision profile, e.g. e1=1,e2=2");

    auto* components = app.add_subcommand("components", "labeling-space component census");
    add_common(components, opt);

    auto* mu = app.add_subcommand("mu", "typing word and u-image of a loop");
    add_common(mu, opt);
    mu->add_option("--loop", loop_path, "loop file")->required();
    mu->add_option("--halves", halves_path, "chosen edge halves file");

    auto* selfcheck = app.add_subcommand("selfcheck", "randomized curvature-equivalence check");
    add_common(selfcheck, opt, /*needs_input=*/false);
    selfcheck->add_option("--trials", trials, "number of random state sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (opt.format == "dot" && !complex->parsed())
            throw ValidationError("dot output is only available for the complex command");
        if (dimers->parsed()) return cmd_dimers(opt);
        if (cycles->parsed()) return cmd_cycles(opt);
        if (complex->parsed()) return cmd_complex(opt);
        if (npc->parsed()) return cmd_check_npc(opt);
        if (present->parsed()) return cmd_present(opt, base_csv, groupoid);
        if (hull_cmd->parsed()) return cmd_hull(opt, a_csv, b_csv);
        if (braid->parsed()) return cmd_braid(opt, loop_path, vhalves_path, subdivide_spec);
        if (components->parsed()) return cmd_components(opt);
        if (mu->parsed()) return cmd_mu(opt, loop_path, halves_path);
        if (selfcheck->parsed()) return cmd_selfcheck(opt, trials);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

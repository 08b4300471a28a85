#include "glidecx/glide_complex.hpp"
#include "glidecx/errors.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <unordered_set>

namespace glidecx {

std::int32_t GlidingSystem::glide_of_cycle(std::uint32_t cycle_id) const {
    for (std::uint32_t g = 0; g < cycle_ids.size(); ++g)
        if (cycle_ids[g] == static_cast<std::int32_t>(cycle_id))
            return static_cast<std::int32_t>(g);
    return -1;
}

void GlidingSystem::validate() const {
    if (indep.size() != glides.size())
        throw ValidationError("independence relation size mismatch");
    for (std::uint32_t i = 0; i < glides.size(); ++i) {
        if (glides[i].universe() != edge_universe)
            throw ValidationError("glide universe mismatch");
        if (glides[i].empty())
            throw ValidationError("the empty set cannot be a glide");
        if (indep[i].test(i))
            throw ValidationError("independence must be irreflexive");
        for (std::uint32_t j = 0; j < glides.size(); ++j) {
            if (indep[i].test(j) != indep[j].test(i))
                throw ValidationError("independence must be symmetric");
            if (indep[i].test(j) && !glides[i].disjoint(glides[j]))
                throw ValidationError("independent glides must be disjoint (set-like)");
        }
    }
}

GlidingSystem make_even_cycle_system(const Hypergraph& h, const CycleSystem& cs) {
    GlidingSystem sys;
    sys.edge_universe = h.edge_count();
    for (std::size_t k = 0; k < cs.even_ids.size(); ++k) {
        sys.glides.push_back(cs.even[k].cycle.edges);
        sys.cycle_ids.push_back(static_cast<std::int32_t>(cs.even_ids[k]));
    }
    sys.indep.assign(sys.glides.size(), Bits(sys.glides.size()));
    for (std::uint32_t i = 0; i < sys.glides.size(); ++i)
        for (std::uint32_t j = i + 1; j < sys.glides.size(); ++j)
            if (independent(cs.even[i].cycle, cs.even[j].cycle)) {
                sys.indep[i].set(j);
                sys.indep[j].set(i);
            }
    sys.validate();
    return sys;
}

GlidingSystem make_power_system(std::size_t edge_universe, std::vector<Bits> glides) {
    GlidingSystem sys;
    sys.edge_universe = edge_universe;
    sys.glides = std::move(glides);
    sys.cycle_ids.assign(sys.glides.size(), -1);
    sys.indep.assign(sys.glides.size(), Bits(sys.glides.size()));
    for (std::uint32_t i = 0; i < sys.glides.size(); ++i)
        for (std::uint32_t j = i + 1; j < sys.glides.size(); ++j)
            if (sys.glides[i].disjoint(sys.glides[j])) {
                sys.indep[i].set(j);
                sys.indep[j].set(i);
            }
    sys.validate();
    return sys;
}

Bits glide(const Bits& state, const Bits& s) { return state ^ s; }

Bits subset_product(const GlidingSystem& sys, const std::vector<std::uint32_t>& glide_ids,
                    std::uint32_t mask) {
    Bits p(sys.edge_universe);
    for (std::size_t i = 0; i < glide_ids.size(); ++i)
        if (mask & (1u << i)) p ^= sys.glides[glide_ids[i]];
    return p;
}

void validate_based_cube(const GlidingSystem& sys, const BasedCube& cube) {
    if (cube.base.universe() != sys.edge_universe)
        throw ValidationError("based cube universe mismatch");
    for (auto g : cube.glide_ids)
        if (g >= sys.size()) throw ValidationError("based cube references an unknown glide");
    if (!is_cubic(sys, cube.glide_ids))
        throw ValidationError("based cube glide set is not cubic");
}

Bits based_cube_vertex(const GlidingSystem& sys, const BasedCube& cube, std::uint32_t mask) {
    return cube.base ^ subset_product(sys, cube.glide_ids, mask);
}

bool is_cubic(const GlidingSystem& sys, const std::vector<std::uint32_t>& glide_ids) {
    for (std::size_t i = 0; i < glide_ids.size(); ++i)
        for (std::size_t j = i + 1; j < glide_ids.size(); ++j)
            if (!sys.independent(glide_ids[i], glide_ids[j])) return false;
    if (glide_ids.size() >= 26)
        throw ValidationError("cubic check over more than 25 glides is not supported");
    std::unordered_set<Bits, BitsHash> products;
    for (std::uint32_t mask = 0; mask < (1u << glide_ids.size()); ++mask)
        if (!products.insert(subset_product(sys, glide_ids, mask)).second) return false;
    return true;
}

namespace {

std::vector<Bits> sorted_unique_states(const GlidingSystem& sys, std::vector<Bits> states) {
    for (const auto& s : states)
        if (s.universe() != sys.edge_universe)
            throw ValidationError("state universe mismatch");
    std::sort(states.begin(), states.end(), BitsLexLess{});
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

struct StateScan {
    // Cubes found with this state as canonical base, grouped by dimension.
    std::vector<std::vector<Cube>> by_dim;
};

// All cubes whose lexicographically least vertex is states[a]: depth-first
// clique extension over candidate glides, verifying at every step that each
// new vertex is a state with index >= a (states are sorted, so index order is
// lex order).
void scan_state(const GlidingSystem& sys, const std::vector<Bits>& states,
                const std::unordered_map<Bits, std::uint32_t, BitsHash>& index,
                std::uint32_t a, const BuildOptions& opts, std::atomic<std::size_t>& cube_count,
                StateScan& out) {
    std::vector<std::uint32_t> cands;
    for (std::uint32_t g = 0; g < sys.size(); ++g) {
        auto it = index.find(states[a] ^ sys.glides[g]);
        if (it != index.end() && it->second >= a) cands.push_back(g);
    }
    if (cands.empty()) return;

    std::vector<std::uint32_t> chain;      // glide ids, ascending
    std::vector<std::uint32_t> verts{a};   // 2^|chain| state indices, mask order

    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (opts.max_dim && chain.size() >= *opts.max_dim) return;
        for (std::size_t ci = from; ci < cands.size(); ++ci) {
            std::uint32_t g = cands[ci];
            bool indep_ok = true;
            for (auto s : chain)
                if (!sys.independent(s, g)) { indep_ok = false; break; }
            if (!indep_ok) continue;

            std::size_t half = verts.size();
            bool all_in = true;
            for (std::size_t m = 0; m < half && all_in; ++m) {
                auto it = index.find(states[verts[m]] ^ sys.glides[g]);
                if (it == index.end() || it->second < a) { all_in = false; break; }
                verts.push_back(it->second);
            }
            if (all_in) {
                chain.push_back(g);
                if (cube_count.fetch_add(1, std::memory_order_relaxed) + 1 > opts.max_cubes)
                    throw BudgetError("cube budget exhausted (max-cubes = " +
                                      std::to_string(opts.max_cubes) + ")");
                std::uint32_t dim = static_cast<std::uint32_t>(chain.size());
                if (out.by_dim.size() < dim) out.by_dim.resize(dim);
                out.by_dim[dim - 1].push_back(Cube{a, chain, verts});
                self(self, ci + 1);
                chain.pop_back();
            }
            verts.resize(half);
        }
    };
    extend(extend, 0);
}

} // namespace

std::optional<std::uint32_t> CubeComplex::state_index(const Bits& s) const {
    auto it = state_index_.find(s);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t CubeComplex::cube_count(std::uint32_t k) const {
    if (k == 0) return states_.size();
    if (k - 1 < cubes_.size()) return cubes_[k - 1].size();
    return 0;
}

int CubeComplex::dimension() const {
    if (states_.empty()) return -1;
    return static_cast<int>(cubes_.size());
}

std::vector<std::size_t> CubeComplex::f_vector() const {
    std::vector<std::size_t> f;
    if (states_.empty()) return f;
    f.push_back(states_.size());
    for (const auto& level : cubes_) f.push_back(level.size());
    return f;
}

long long CubeComplex::euler() const {
    long long chi = 0;
    long long sign = 1;
    for (auto f : f_vector()) {
        chi += sign * static_cast<long long>(f);
        sign = -sign;
    }
    return chi;
}

std::vector<std::vector<std::uint32_t>> CubeComplex::components() const {
    std::vector<std::uint32_t> parent(states_.size());
    for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (!cubes_.empty())
        for (const auto& c : cubes_[0]) parent[find(c.vertices[0])] = find(c.vertices[1]);

    std::vector<std::vector<std::uint32_t>> comps;
    std::unordered_map<std::uint32_t, std::size_t> root_slot;
    for (std::uint32_t i = 0; i < states_.size(); ++i) {
        auto r = find(i);
        auto it = root_slot.find(r);
        if (it == root_slot.end()) {
            root_slot.emplace(r, comps.size());
            comps.push_back({i});
        } else {
            comps[it->second].push_back(i);
        }
    }
    return comps;
}

std::optional<std::uint32_t> CubeComplex::find_cube(std::uint32_t k, std::uint32_t base_state,
                                                    const std::vector<std::uint32_t>& glide_ids) const {
    if (k == 0 || k - 1 >= cubes_.size()) return std::nullopt;
    const auto& level = cubes_[k - 1];
    // Levels are ordered by (base_state, glide_ids); binary search.
    auto cmp = [](const Cube& c, const std::pair<std::uint32_t, const std::vector<std::uint32_t>*>& key) {
        if (c.base_state != key.first) return c.base_state < key.first;
        return c.glide_ids < *key.second;
    };
    auto it = std::lower_bound(level.begin(), level.end(),
                               std::make_pair(base_state, &glide_ids), cmp);
    if (it == level.end() || it->base_state != base_state || it->glide_ids != glide_ids)
        return std::nullopt;
    return static_cast<std::uint32_t>(it - level.begin());
}

const std::vector<std::uint32_t>& CubeComplex::facets(std::uint32_t k, std::uint32_t idx) const {
    return facets_[k - 1][idx];
}

LinkComplex CubeComplex::link(std::uint32_t state) const {
    if (state >= states_.size())
        throw ValidationError("link basepoint is not a vertex of the complex");
    LinkComplex lk;
    for (const auto& level : cubes_) {
        for (const auto& c : level) {
            if (std::find(c.vertices.begin(), c.vertices.end(), state) == c.vertices.end())
                continue;
            lk.simplices.push_back(c.glide_ids);
            if (c.glide_ids.size() == 1) lk.vertices.push_back(c.glide_ids[0]);
        }
    }
    std::sort(lk.vertices.begin(), lk.vertices.end());
    std::sort(lk.simplices.begin(), lk.simplices.end());
    lk.simplices.erase(std::unique(lk.simplices.begin(), lk.simplices.end()), lk.simplices.end());
    return lk;
}

CubeComplex build_complex(const GlidingSystem& sys, std::vector<Bits> states,
                          const BuildOptions& opts) {
    CubeComplex x;
    x.sys_ = sys;
    x.states_ = sorted_unique_states(sys, std::move(states));
    if (x.states_.size() > opts.max_states)
        throw BudgetError("state set exceeds the configured limit of " +
                          std::to_string(opts.max_states));
    for (std::uint32_t i = 0; i < x.states_.size(); ++i) x.state_index_.emplace(x.states_[i], i);

    std::atomic<std::size_t> cube_count{0};
    std::vector<StateScan> scans(x.states_.size());

    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || x.states_.size() < 2) {
        for (std::uint32_t a = 0; a < x.states_.size(); ++a)
            scan_state(sys, x.states_, x.state_index_, a, opts, cube_count, scans[a]);
    } else {
        std::atomic<std::uint32_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::uint32_t a = next.fetch_add(1);
                if (a >= x.states_.size()) return;
                scan_state(sys, x.states_, x.state_index_, a, opts, cube_count, scans[a]);
            }
        };
        std::vector<std::future<void>> futs;
        for (unsigned t = 0; t < jobs; ++t)
            futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }

    // Deterministic merge in state order; per-state output is already
    // ordered by ascending glide chains.
    for (auto& scan : scans) {
        if (x.cubes_.size() < scan.by_dim.size()) x.cubes_.resize(scan.by_dim.size());
        for (std::size_t d = 0; d < scan.by_dim.size(); ++d)
            for (auto& c : scan.by_dim[d]) x.cubes_[d].push_back(std::move(c));
    }

    // Facets: drop one glide; each half of the vertex list is a facet, whose
    // canonical base is its least state index.
    x.facets_.resize(x.cubes_.size());
    for (std::uint32_t d = 0; d < x.cubes_.size(); ++d) {
        x.facets_[d].resize(x.cubes_[d].size());
        for (std::uint32_t i = 0; i < x.cubes_[d].size(); ++i) {
            const Cube& c = x.cubes_[d][i];
            const std::uint32_t k = d + 1;
            auto& out = x.facets_[d][i];
            if (k == 1) {
                out = {c.vertices[0], c.vertices[1]};
                continue;
            }
            for (std::uint32_t p = 0; p < k; ++p) {
                std::vector<std::uint32_t> sub_glides;
                for (std::uint32_t q = 0; q < k; ++q)
                    if (q != p) sub_glides.push_back(c.glide_ids[q]);
                for (int side = 0; side < 2; ++side) {
                    std::uint32_t base = UINT32_MAX;
                    for (std::uint32_t m = 0; m < c.vertices.size(); ++m)
                        if (((m >> p) & 1u) == static_cast<std::uint32_t>(side))
                            base = std::min(base, c.vertices[m]);
                    auto idx = x.find_cube(k - 1, base, sub_glides);
                    if (!idx)
                        throw std::logic_error("missing facet in cube complex");
                    out.push_back(*idx);
                }
            }
        }
    }
    return x;
}

bool check_square(const GlidingSystem& sys, const std::vector<Bits>& states) {
    return check_square_rel(sys, states, states);
}

bool check_square_rel(const GlidingSystem& sys, const std::vector<Bits>& inner,
                      const std::vector<Bits>& outer) {
    auto in = sorted_unique_states(sys, inner);
    auto out = sorted_unique_states(sys, outer);
    std::unordered_set<Bits, BitsHash> in_set(in.begin(), in.end());
    std::unordered_set<Bits, BitsHash> out_set(out.begin(), out.end());
    for (const auto& s : in)
        if (!out_set.count(s))
            throw ValidationError("relative square condition requires a subset state set");
    for (const auto& a : in) {
        std::vector<std::uint32_t> cands;
        for (std::uint32_t g = 0; g < sys.size(); ++g)
            if (in_set.count(a ^ sys.glides[g])) cands.push_back(g);
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (!sys.independent(cands[i], cands[j])) continue;
                Bits st = a ^ sys.glides[cands[i]] ^ sys.glides[cands[j]];
                if (out_set.count(st) && !in_set.count(st)) return false;
            }
    }
    return true;
}

bool check_3cube(const GlidingSystem& sys, const std::vector<Bits>& states) {
    auto st = sorted_unique_states(sys, states);
    std::unordered_set<Bits, BitsHash> set(st.begin(), st.end());
    for (const auto& a : st) {
        std::vector<std::uint32_t> cands;
        for (std::uint32_t g = 0; g < sys.size(); ++g)
            if (set.count(a ^ sys.glides[g])) cands.push_back(g);
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                if (!sys.independent(cands[i], cands[j])) continue;
                if (!set.count(a ^ sys.glides[cands[i]] ^ sys.glides[cands[j]])) continue;
                for (std::size_t k = j + 1; k < cands.size(); ++k) {
                    if (!sys.independent(cands[i], cands[k]) ||
                        !sys.independent(cands[j], cands[k]))
                        continue;
                    if (!set.count(a ^ sys.glides[cands[i]] ^ sys.glides[cands[k]])) continue;
                    if (!set.count(a ^ sys.glides[cands[j]] ^ sys.glides[cands[k]])) continue;
                    if (!set.count(a ^ sys.glides[cands[i]] ^ sys.glides[cands[j]] ^
                                   sys.glides[cands[k]]))
                        return false;
                }
            }
    }
    return true;
}

void for_each_maximal_clique(std::size_t n, const std::vector<Bits>& adj,
                             const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> r;
    Bits p(n), x(n);
    for (std::uint32_t v = 0; v < n; ++v) p.set(v);

    auto bk = [&](auto&& self, Bits pp, Bits xx) -> void {
        if (pp.empty() && xx.empty()) {
            fn(r);
            return;
        }
        // Pivot on the candidate with the most neighbours in pp.
        std::uint32_t pivot = UINT32_MAX;
        std::size_t best = 0;
        (pp | xx).for_each([&](std::uint32_t u) {
            std::size_t deg = (pp & adj[u]).count();
            if (pivot == UINT32_MAX || deg > best) { pivot = u; best = deg; }
        });
        Bits ext = pivot == UINT32_MAX ? pp : (pp - adj[pivot]);
        ext.for_each([&](std::uint32_t v) {
            r.push_back(v);
            self(self, pp & adj[v], xx & adj[v]);
            r.pop_back();
            pp.reset(v);
            xx.set(v);
        });
    };
    bk(bk, p, x);
}

bool check_regular(const GlidingSystem& sys, const std::vector<Bits>& states) {
    auto st = sorted_unique_states(sys, states);
    std::unordered_set<Bits, BitsHash> set(st.begin(), st.end());
    bool ok = true;
    for (const auto& a : st) {
        if (!ok) break;
        std::vector<std::uint32_t> cands;
        for (std::uint32_t g = 0; g < sys.size(); ++g)
            if (set.count(a ^ sys.glides[g])) cands.push_back(g);
        const std::size_t n = cands.size();
        std::vector<Bits> adj(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!sys.independent(cands[i], cands[j])) continue;
                if (!set.count(a ^ sys.glides[cands[i]] ^ sys.glides[cands[j]])) continue;
                adj[i].set(j);
                adj[j].set(i);
            }
        for_each_maximal_clique(n, adj, [&](const std::vector<std::uint32_t>& clique) {
            if (!ok) return;
            std::vector<std::uint32_t> ids;
            for (auto c : clique) ids.push_back(cands[c]);
            if (!is_cubic(sys, ids)) ok = false;
        });
    }
    return ok;
}

namespace {

// Per-state link simplices collected in one pass over all cubes.
std::vector<std::vector<std::vector<std::uint32_t>>> links_by_state(const CubeComplex& x) {
    std::vector<std::vector<std::vector<std::uint32_t>>> links(x.states().size());
    for (const auto& level : x.cubes())
        for (const auto& c : level)
            for (auto v : c.vertices) links[v].push_back(c.glide_ids);
    for (auto& l : links) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return links;
}

} // namespace

bool check_simple(const CubeComplex& x) {
    auto links = links_by_state(x);
    for (const auto& simplices : links) {
        std::set<std::vector<std::uint32_t>> present(simplices.begin(), simplices.end());
        for (const auto& s : simplices) {
            if (s.size() < 2) continue;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::uint32_t> face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                if (!present.count(face)) return false;
            }
        }
    }
    return true;
}

FlagReport check_flag(const CubeComplex& x) {
    auto links = links_by_state(x);
    for (std::uint32_t a = 0; a < links.size(); ++a) {
        const auto& simplices = links[a];
        std::vector<std::uint32_t> verts;
        for (const auto& s : simplices)
            if (s.size() == 1) verts.push_back(s[0]);
        std::sort(verts.begin(), verts.end());

        std::set<std::vector<std::uint32_t>> present(simplices.begin(), simplices.end());
        const std::size_t n = verts.size();
        std::vector<Bits> adj(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (present.count({std::min(verts[i], verts[j]), std::max(verts[i], verts[j])})) {
                    adj[i].set(j);
                    adj[j].set(i);
                }

        FlagViolation violation;
        bool bad = false;
        for_each_maximal_clique(n, adj, [&](const std::vector<std::uint32_t>& clique) {
            if (bad || clique.size() < 3) return;
            std::vector<std::uint32_t> ids;
            for (auto c : clique) ids.push_back(verts[c]);
            std::sort(ids.begin(), ids.end());
            if (!present.count(ids)) {
                bad = true;
                violation = FlagViolation{a, ids};
            }
        });
        if (bad) return FlagReport{false, violation};
    }
    return FlagReport{true, std::nullopt};
}

NpcReport npc_verdict(const GlidingSystem& sys, const std::vector<Bits>& states,
                      const BuildOptions& opts, bool assert_consistent) {
    NpcReport r;
    r.regular = check_regular(sys, states);
    r.cube3 = check_3cube(sys, states);
    CubeComplex x = build_complex(sys, states, opts);
    r.simple = check_simple(x);
    auto flag = check_flag(x);
    r.flag = flag.ok;
    r.flag_violation = flag.violation;
    if (assert_consistent && !r.consistent())
        throw std::logic_error("curvature criterion mismatch: conditions say " +
                               std::to_string(r.npc_by_conditions()) + ", links say " +
                               std::to_string(r.npc_by_links()));
    return r;
}

} // namespace glidecx

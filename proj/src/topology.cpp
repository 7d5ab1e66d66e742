#include "groupcss/topology.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groupcss {

Elem walk_holonomy(const ComplexAnalysis& a, const std::vector<FaceStep>& walk,
                   std::span<const Elem> config) {
    const FiniteGroup& g = *a.group;
    Elem acc = 0;
    for (const FaceStep& s : walk) {
        Elem v = config[s.edge];
        acc = g.mul(acc, s.orient > 0 ? v : g.inv(v));
    }
    return acc;
}

AnalysisPtr analyze_complex(const CwComplex& c, const GroupPtr& g) {
    validate_complex(c);
    if (!c.edge_constraints.empty())
        throw ValidationError(
            "topological analysis does not support edge constraints; contract the boundary to a "
            "restricted vertex (the brute-force oracle handles constrained edges directly)");
    auto a = std::make_shared<ComplexAnalysis>();
    a->complex = c;
    a->group = g;
    a->forest = spanning_forest(c);
    a->pres = presentation_pi1(c, a->forest);
    a->smooth = a->pres.smooth;
    a->trivial_ghosts = !a->smooth;
    for (int root : a->forest.roots) {
        const CwVertex& v = c.vertices[root];
        if (v.kind == VertexKind::Ghost)
            a->root_subgroups.push_back(trivial_subgroup(*g));
        else if (v.kind == VertexKind::Restricted) {
            a->root_subgroups.push_back(subgroup_from_members(*g, v.restriction));
            if (a->root_subgroups.back().order() > 1) a->trivial_ghosts = false;
        } else {
            a->root_subgroups.push_back(full_subgroup(*g));  // smooth basepoint
        }
    }

    auto path_to_root = [&](int v) {
        std::vector<FaceStep> path;
        while (a->forest.parent_vertex[v] >= 0) {
            int e = a->forest.parent_edge[v];
            int parent = a->forest.parent_vertex[v];
            path.push_back({e, c.edges[e].first == v && c.edges[e].second == parent ? 1 : -1});
            v = parent;
        }
        return path;
    };
    for (int e : a->pres.generator_edges) {
        auto [tail, head] = c.edges[e];
        std::vector<FaceStep> up = path_to_root(tail);
        std::vector<FaceStep> loop(up.rbegin(), up.rend());
        for (FaceStep& s : loop) s.orient = -s.orient;  // root down to the tail
        loop.push_back({e, 1});
        for (const FaceStep& s : path_to_root(head)) loop.push_back(s);
        a->loops.push_back(std::move(loop));
        a->tail_paths.push_back(std::move(up));
    }
    return a;
}

AnalysisPtr analyze_code(const GroupCssCode& code) {
    if (code.provenance) return analyze_complex(*code.provenance, code.group);
    return analyze_complex(complex_from_code(code), code.group);
}

// ---- hom enumeration ------------------------------------------------------

namespace {

struct RelatorPlan {
    std::vector<std::vector<const GroupWord*>> by_last_gen;  // checkable once gen i is set
};

RelatorPlan plan_relators(const Pi1Presentation& p) {
    RelatorPlan plan;
    plan.by_last_gen.resize(p.generator_edges.size());
    for (const GroupWord& r : p.relators) {
        if (r.empty()) continue;
        int last = 0;
        for (const Letter& l : r.letters) last = std::max(last, l.var);
        plan.by_last_gen[last].push_back(&r);
    }
    return plan;
}

void hom_dfs(const FiniteGroup& g, const RelatorPlan& plan, std::vector<Elem>& assign, int next,
             std::vector<std::vector<Elem>>& out) {
    const int gens = (int)assign.size();
    if (next == gens) {
        out.push_back(assign);
        return;
    }
    for (Elem v = 0; v < g.order(); ++v) {
        assign[next] = v;
        bool ok = true;
        for (const GroupWord* r : plan.by_last_gen[next])
            if (evaluate_word(*r, g, std::span<const Elem>(assign.data(), next + 1)) != 0) {
                ok = false;
                break;
            }
        if (ok) hom_dfs(g, plan, assign, next + 1, out);
    }
}

void check_hom_budget(const Pi1Presentation& p, const FiniteGroup& g, const RunConfig& cfg) {
    if (!pow_within(g.order(), (int)p.generator_edges.size(), cfg.hom_budget))
        throw BudgetError("hom enumeration: |G|^" + std::to_string(p.generator_edges.size()) +
                          " exceeds budget");
}

}  // namespace

HomSet count_hom_serial(const Pi1Presentation& p, const FiniteGroup& g, const RunConfig& cfg) {
    check_hom_budget(p, g, cfg);
    HomSet h;
    const int gens = (int)p.generator_edges.size();
    if (gens == 0) {
        h.maps.push_back({});
        return h;
    }
    RelatorPlan plan = plan_relators(p);
    std::vector<Elem> assign(gens, 0);
    hom_dfs(g, plan, assign, 0, h.maps);
    return h;
}

HomSet count_hom(const Pi1Presentation& p, const FiniteGroup& g, const RunConfig& cfg) {
    check_hom_budget(p, g, cfg);
    const int gens = (int)p.generator_edges.size();
    if (gens <= 1) return count_hom_serial(p, g, cfg);
    RelatorPlan plan = plan_relators(p);
    const int order = g.order();
    std::vector<std::vector<std::vector<Elem>>> buckets(order);
#pragma omp parallel for schedule(dynamic)
    for (Elem first = 0; first < order; ++first) {
        std::vector<Elem> assign(gens, 0);
        assign[0] = first;
        bool ok = true;
        for (const GroupWord* r : plan.by_last_gen[0])
            if (evaluate_word(*r, g, std::span<const Elem>(assign.data(), 1)) != 0) ok = false;
        if (ok) hom_dfs(g, plan, assign, 1, buckets[first]);
    }
    HomSet h;
    for (auto& b : buckets)
        for (auto& m : b) h.maps.push_back(std::move(m));
    return h;
}

// ---- orbits under the root-subgroup action ---------------------------------

namespace {

std::vector<Elem> act_on_hom(const ComplexAnalysis& a, const std::vector<Elem>& phi, int root,
                             Elem h) {
    const FiniteGroup& g = *a.group;
    std::vector<Elem> out = phi;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        auto [rt, rh] = a.pres.generator_roots[i];
        Elem v = out[i];
        if (rt == root) v = g.mul(h, v);
        if (rh == root) v = g.mul(v, g.inv(h));
        out[i] = v;
    }
    return out;
}

}  // namespace

HomOrbits hom_orbits(const ComplexAnalysis& a, const HomSet& homs) {
    const int n = (int)homs.maps.size();
    std::map<std::vector<Elem>, int> index;
    for (int i = 0; i < n; ++i) index[homs.maps[i]] = i;

    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        for (std::size_t root = 0; root < a.root_subgroups.size(); ++root) {
            for (Elem h : subgroup_generators(*a.group, a.root_subgroups[root])) {
                auto img = act_on_hom(a, homs.maps[i], (int)root, h);
                auto it = index.find(img);
                if (it == index.end()) throw Error("internal: root action left the hom set");
                int ri = find(i), rj = find(it->second);
                if (ri != rj) uf[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
    }
    HomOrbits o;
    o.orbit_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (o.orbit_of[r] < 0) {
            o.orbit_of[r] = (int)o.reps.size();
            o.reps.push_back(r);
        }
        o.orbit_of[i] = o.orbit_of[r];
    }
    return o;
}

DimReport codespace_dim(const ComplexAnalysis& a, const RunConfig& cfg) {
    HomSet homs = count_hom(a.pres, *a.group, cfg);
    DimReport r;
    r.hom_count = (long long)homs.maps.size();
    if (a.trivial_ghosts)
        r.orbit_count = r.hom_count;  // every root acts trivially
    else
        r.orbit_count = (long long)hom_orbits(a, homs).reps.size();
    r.dim = r.orbit_count;
    r.log_dim_base_g =
        r.dim > 0 && a.group->order() > 1
            ? std::log((double)r.dim) / std::log((double)a.group->order())
            : 0.0;
    for (std::size_t i = 0; i < a.root_subgroups.size(); ++i)
        if (a.complex.ghost_like(a.forest.roots[i]))
            r.ghost_quotients.push_back(a.group->order() / a.root_subgroups[i].order());
    return r;
}

DimReport codespace_dim(const GroupCssCode& code, const RunConfig& cfg) {
    return codespace_dim(*analyze_code(code), cfg);
}

long long hom_count_plain(const CwComplex& c, const GroupPtr& g, const RunConfig& cfg) {
    CwComplex plain = c;
    for (CwVertex& v : plain.vertices) v = CwVertex{};
    plain.edge_constraints.clear();
    auto a = analyze_complex(plain, g);
    return (long long)count_hom(a->pres, *g, cfg).maps.size();
}

// ---- systole ----------------------------------------------------------------

int systole_dz(const ComplexAnalysis& a, const RunConfig& cfg) {
    if (!a.smooth && !a.trivial_ghosts)
        throw ValidationError("systole_dz supports smooth or trivial-ghost complexes only");

    HomSet homs = count_hom(a.pres, *a.group, cfg);
    HomOrbits orbits = hom_orbits(a, homs);
    if ((long long)orbits.reps.size() <= 1)
        throw ValidationError("systole_dz: codespace dimension <= 1, distance undefined");

    // graph with all roots merged into one vertex
    const CwComplex& c = a.complex;
    const FiniteGroup& g = *a.group;
    std::vector<int> qid(c.num_vertices());
    std::iota(qid.begin(), qid.end(), 0);
    for (int root : a.forest.roots) qid[root] = a.forest.roots[0];

    std::vector<int> gen_of(c.num_edges(), -1);
    for (std::size_t i = 0; i < a.pres.generator_edges.size(); ++i)
        gen_of[a.pres.generator_edges[i]] = (int)i;

    struct Arc {
        int to;
        int gen;     // -1 for forest edges
        int orient;  // +1 traverses tail -> head
    };
    std::vector<std::vector<Arc>> adj(c.num_vertices());
    for (int e = 0; e < c.num_edges(); ++e) {
        int t = qid[c.edges[e].first], h = qid[c.edges[e].second];
        adj[t].push_back({h, gen_of[e], 1});
        adj[h].push_back({t, gen_of[e], -1});
    }

    int best = INT32_MAX;
    const int order = g.order();
    for (int rep : orbits.reps) {
        const std::vector<Elem>& phi = homs.maps[rep];
        bool trivial = true;
        for (Elem v : phi) trivial = trivial && v == 0;
        if (trivial) continue;  // identity holonomy everywhere, detects nothing
        for (int src = 0; src < c.num_vertices(); ++src) {
            if (qid[src] != src) continue;
            // BFS over (vertex, accumulated holonomy)
            std::vector<int> dist((std::size_t)c.num_vertices() * order, -1);
            auto id = [&](int v, Elem h) { return (std::size_t)v * order + h; };
            std::queue<std::pair<int, Elem>> q;
            dist[id(src, 0)] = 0;
            q.push({src, 0});
            while (!q.empty()) {
                auto [v, h] = q.front();
                q.pop();
                int d = dist[id(v, h)];
                if (d + 1 >= best) break;
                for (const Arc& arc : adj[v]) {
                    Elem lift = arc.gen < 0 ? 0 : phi[arc.gen];
                    Elem nh = g.mul(h, arc.orient > 0 ? lift : g.inv(lift));
                    if (arc.to == src && nh != 0) best = std::min(best, d + 1);
                    if (dist[id(arc.to, nh)] < 0) {
                        dist[id(arc.to, nh)] = d + 1;
                        q.push({arc.to, nh});
                    }
                }
            }
        }
    }
    if (best == INT32_MAX)
        throw ValidationError("systole_dz: every loop has forced-trivial holonomy");
    return best;
}

// ---- logical operators -------------------------------------------------------

namespace {

void require_hom(const ComplexAnalysis& a, const std::vector<Elem>& phi) {
    if (phi.size() != a.pres.generator_edges.size())
        throw ValidationError("hom assignment length does not match generator count");
    for (const GroupWord& r : a.pres.relators)
        if (evaluate_word(r, *a.group, phi) != 0)
            throw ValidationError("assignment does not satisfy the relators (not a hom)");
}

void require_rough(const ComplexAnalysis& a) {
    if (a.smooth || !a.trivial_ghosts)
        throw ValidationError("rough logicals require a code whose ghosts are all trivial");
}

void require_smooth(const ComplexAnalysis& a) {
    if (!a.smooth) throw ValidationError("smooth logicals require a code without ghost vertices");
}

bool sector_matches(const ComplexAnalysis& a, const std::vector<Elem>& config,
                    const std::vector<Elem>& phi, Elem conj) {
    const FiniteGroup& g = *a.group;
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (walk_holonomy(a, a.loops[i], config) != g.conj(conj, phi[i])) return false;
    return true;
}

// left-multiply each generator edge by the tree-transported ratio phi2 phi1^-1
std::vector<Elem> transport_multiply(const ComplexAnalysis& a, const std::vector<Elem>& config,
                                     const std::vector<Elem>& phi1, const std::vector<Elem>& phi2,
                                     Elem conj) {
    const FiniteGroup& g = *a.group;
    std::vector<Elem> out = config;
    for (std::size_t i = 0; i < phi1.size(); ++i) {
        Elem h = g.mul(g.conj(conj, phi2[i]), g.inv(g.conj(conj, phi1[i])));
        // conjugate by the holonomy from the tail of the generator edge up to
        // its root, so the multiplier transforms with the gauge there
        Elem m = walk_holonomy(a, a.tail_paths[i], config);
        Elem mult = g.conj(m, h);
        int e = a.pres.generator_edges[i];
        out[e] = g.mul(mult, out[e]);
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::vector<Elem>, Rational>> LogicalOp::apply(
    const std::vector<Elem>& config) const {
    const ComplexAnalysis& a = *analysis;
    const FiniteGroup& g = *a.group;
    std::vector<std::pair<std::vector<Elem>, Rational>> out;
    switch (kind) {
        case Kind::ZRough: {
            if (walk_holonomy(a, a.loops[gamma], config) == phi1[gamma])
                out.emplace_back(config, Rational(1));
            break;
        }
        case Kind::XRough: {
            if (sector_matches(a, config, phi1, 0))
                out.emplace_back(transport_multiply(a, config, phi1, phi2, 0), Rational(1));
            break;
        }
        case Kind::ZSmooth: {
            long long hits = 0;
            for (Elem c = 0; c < g.order(); ++c)
                if (sector_matches(a, config, phi1, c)) ++hits;
            if (hits > 0) out.emplace_back(config, Rational(hits, g.order()));
            break;
        }
        case Kind::XSmooth: {
            std::map<std::vector<Elem>, Rational> acc;
            for (Elem c = 0; c < g.order(); ++c) {
                if (!sector_matches(a, config, phi1, c)) continue;
                auto img = transport_multiply(a, config, phi1, phi2, c);
                auto [it, fresh] = acc.emplace(std::move(img), Rational(1, g.order()));
                if (!fresh) it->second = it->second + Rational(1, g.order());
            }
            for (auto& [cfg2, w] : acc) out.emplace_back(cfg2, w);
            break;
        }
    }
    return out;
}

LogicalOp make_z_logical(const AnalysisPtr& a, const std::vector<Elem>& phi, int gamma) {
    require_rough(*a);
    require_hom(*a, phi);
    if (gamma < 0 || (std::size_t)gamma >= a->pres.generator_edges.size())
        throw ValidationError("no such generator");
    return LogicalOp{LogicalOp::Kind::ZRough, a, phi, {}, gamma};
}

LogicalOp make_x_logical(const AnalysisPtr& a, const std::vector<Elem>& phi1,
                         const std::vector<Elem>& phi2) {
    require_rough(*a);
    require_hom(*a, phi1);
    require_hom(*a, phi2);
    return LogicalOp{LogicalOp::Kind::XRough, a, phi1, phi2, -1};
}

LogicalOp make_smooth_z_logical(const AnalysisPtr& a, const std::vector<Elem>& phi) {
    require_smooth(*a);
    require_hom(*a, phi);
    return LogicalOp{LogicalOp::Kind::ZSmooth, a, phi, {}, -1};
}

LogicalOp make_smooth_x_logical(const AnalysisPtr& a, const std::vector<Elem>& phi1,
                                const std::vector<Elem>& phi2) {
    require_smooth(*a);
    require_hom(*a, phi1);
    require_hom(*a, phi2);
    return LogicalOp{LogicalOp::Kind::XSmooth, a, phi1, phi2, -1};
}

}  // namespace groupcss

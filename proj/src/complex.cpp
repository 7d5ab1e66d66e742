#include "groupcss/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groupcss {

void validate_complex(const CwComplex& c) {
    const int nv = c.num_vertices(), ne = c.num_edges();
    for (int e = 0; e < ne; ++e) {
        auto [t, h] = c.edges[e];
        if (t < 0 || t >= nv || h < 0 || h >= nv)
            throw ValidationError("edge " + std::to_string(e) + " has a dangling endpoint");
    }
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto& walk = c.faces[f];
        if (walk.empty()) throw ValidationError("face " + std::to_string(f) + " is empty");
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const FaceStep& s = walk[i];
            if (s.edge < 0 || s.edge >= ne || (s.orient != 1 && s.orient != -1))
                throw ValidationError("face " + std::to_string(f) + " step " + std::to_string(i) +
                                      " is malformed");
            const FaceStep& nxt = walk[(i + 1) % walk.size()];
            if (c.step_end(s) != c.step_start(nxt))
                throw ValidationError(
                    "face " + std::to_string(f) + " step " + std::to_string(i) + ": edge " +
                    std::to_string(s.edge) + " ends at vertex " + std::to_string(c.step_end(s)) +
                    " but the next step starts at " + std::to_string(c.step_start(nxt)));
        }
    }
    for (const auto& [e, members] : c.edge_constraints)
        if (e < 0 || e >= ne)
            throw ValidationError("edge constraint on nonexistent edge " + std::to_string(e));
    for (int v = 0; v < nv; ++v)
        if (c.vertices[v].kind == VertexKind::Restricted && c.vertices[v].restriction.empty())
            throw ValidationError("restricted vertex " + std::to_string(v) + " has no subgroup");
}

namespace {

CwComplex remap_vertices(const CwComplex& c, const std::vector<int>& new_id, int new_count,
                         std::vector<CwVertex> new_vertices) {
    CwComplex out;
    out.vertices = std::move(new_vertices);
    (void)new_count;
    out.edges.reserve(c.edges.size());
    for (auto [t, h] : c.edges) out.edges.emplace_back(new_id[t], new_id[h]);
    out.faces = c.faces;
    out.edge_constraints = c.edge_constraints;
    return out;
}

}  // namespace

CwComplex quotient_ghosts(const CwComplex& c, bool* changed) {
    std::vector<int> ghosts;
    for (int v = 0; v < c.num_vertices(); ++v)
        if (c.vertices[v].kind == VertexKind::Ghost) ghosts.push_back(v);
    if (ghosts.size() <= 1) {
        if (changed) *changed = false;
        return c;
    }
    if (changed) *changed = true;
    int keep = ghosts[0];
    std::vector<int> new_id(c.num_vertices(), -1);
    std::vector<CwVertex> verts;
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (c.vertices[v].kind == VertexKind::Ghost && v != keep) continue;
        new_id[v] = (int)verts.size();
        verts.push_back(c.vertices[v]);
    }
    for (int v : ghosts) new_id[v] = new_id[keep];
    CwComplex out = remap_vertices(c, new_id, (int)verts.size(), std::move(verts));
    validate_complex(out);
    return out;
}

CwComplex identify_ghosts(const CwComplex& c) {
    const int nv = c.num_vertices();
    std::vector<int> uf(nv);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto& walk = c.faces[f];
        for (std::size_t i = 0; i < walk.size(); ++i) {
            int a = c.step_end(walk[i]);
            int b = c.step_start(walk[(i + 1) % walk.size()]);
            if (find(a) == find(b)) continue;
            if (c.vertices[a].kind != VertexKind::Ghost || c.vertices[b].kind != VertexKind::Ghost)
                throw ValidationError("face " + std::to_string(f) + " step " + std::to_string(i) +
                                      ": discontinuity at a non-ghost vertex");
            uf[std::max(find(a), find(b))] = std::min(find(a), find(b));
        }
    }
    std::vector<int> new_id(nv, -1);
    std::vector<CwVertex> verts;
    for (int v = 0; v < nv; ++v) {
        if (find(v) == v) {
            new_id[v] = (int)verts.size();
            verts.push_back(c.vertices[v]);
        }
    }
    for (int v = 0; v < nv; ++v) new_id[v] = new_id[find(v)];
    CwComplex out = remap_vertices(c, new_id, (int)verts.size(), std::move(verts));
    validate_complex(out);
    return out;
}

SpanningForest spanning_forest(const CwComplex& c) {
    const int nv = c.num_vertices(), ne = c.num_edges();
    SpanningForest f;
    for (int v = 0; v < nv; ++v)
        if (c.ghost_like(v)) f.roots.push_back(v);
    if (f.roots.empty()) f.roots.push_back(0);

    // adjacency in edge order keeps the forest deterministic
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, edge)
    for (int e = 0; e < ne; ++e) {
        auto [t, h] = c.edges[e];
        adj[t].emplace_back(h, e);
        if (h != t) adj[h].emplace_back(t, e);
    }

    f.root_of.assign(nv, -1);
    f.parent_vertex.assign(nv, -1);
    f.parent_edge.assign(nv, -1);
    f.in_forest.assign(ne, 0);
    std::vector<int> queue;
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
        f.root_of[f.roots[i]] = (int)i;
        queue.push_back(f.roots[i]);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (auto [w, e] : adj[u]) {
            if (f.root_of[w] >= 0) continue;
            f.root_of[w] = f.root_of[u];
            f.parent_vertex[w] = u;
            f.parent_edge[w] = e;
            f.in_forest[e] = 1;
            ++f.forest_edges;
            queue.push_back(w);
        }
    }
    for (int v = 0; v < nv; ++v)
        if (f.root_of[v] < 0) throw ValidationError("complex is disconnected");
    return f;
}

Pi1Presentation presentation_pi1(const CwComplex& c) {
    return presentation_pi1(c, spanning_forest(c));
}

Pi1Presentation presentation_pi1(const CwComplex& c, const SpanningForest& f) {
    Pi1Presentation p;
    p.root_count = (int)f.roots.size();
    p.smooth = !c.ghost_like(f.roots[0]);
    std::vector<int> gen_of(c.num_edges(), -1);
    for (int e = 0; e < c.num_edges(); ++e) {
        if (f.in_forest[e]) continue;
        gen_of[e] = (int)p.generator_edges.size();
        p.generator_edges.push_back(e);
        p.generator_roots.emplace_back(f.root_of[c.edges[e].first], f.root_of[c.edges[e].second]);
    }
    for (const auto& walk : c.faces) {
        GroupWord rel;
        for (const FaceStep& s : walk)
            if (gen_of[s.edge] >= 0) rel.letters.push_back({gen_of[s.edge], s.orient});
        p.relators.push_back(reduce_cyclic(rel));
    }
    return p;
}

// ---- girth ---------------------------------------------------------------

namespace {

// shortest cycle found by a BFS rooted at src; exact after minimizing over all
// sources
int girth_from(const CwComplex& c, const std::vector<std::vector<std::pair<int, int>>>& adj,
               int src, int best_so_far) {
    const int nv = c.num_vertices();
    std::vector<int> dist(nv, -1), via_edge(nv, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    int best = best_so_far;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (2 * dist[u] + 1 >= best) break;
        for (auto [w, e] : adj[u]) {
            if (e == via_edge[u]) continue;
            if (w == u) { best = 1; break; }  // self-loop
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                via_edge[w] = e;
                q.push(w);
            } else {
                best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    return best;
}

std::vector<std::vector<std::pair<int, int>>> girth_adj(const CwComplex& c) {
    std::vector<std::vector<std::pair<int, int>>> adj(c.num_vertices());
    for (int e = 0; e < c.num_edges(); ++e) {
        auto [t, h] = c.edges[e];
        adj[t].emplace_back(h, e);
        if (h != t) adj[h].emplace_back(t, e);
    }
    return adj;
}

constexpr int kInfGirth = INT32_MAX / 4;

}  // namespace

std::optional<int> girth_serial(const CwComplex& c) {
    auto adj = girth_adj(c);
    int best = kInfGirth;
    for (int e = 0; e < c.num_edges(); ++e)
        if (c.edges[e].first == c.edges[e].second) return 1;
    for (int v = 0; v < c.num_vertices(); ++v) best = girth_from(c, adj, v, best);
    if (best >= kInfGirth) return std::nullopt;
    return best;
}

std::optional<int> girth(const CwComplex& c) {
    auto adj = girth_adj(c);
    for (int e = 0; e < c.num_edges(); ++e)
        if (c.edges[e].first == c.edges[e].second) return 1;
    int best = kInfGirth;
    const int nv = c.num_vertices();
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int v = 0; v < nv; ++v) best = std::min(best, girth_from(c, adj, v, kInfGirth));
    if (best >= kInfGirth) return std::nullopt;
    return best;
}

// ---- builders ------------------------------------------------------------

CwComplex build_torus_grid(int k) {
    if (k < 1) throw ValidationError("torus_grid: k must be positive");
    CwComplex c;
    c.vertices.assign((std::size_t)k * k, {});
    auto vid = [&](int i, int j) { return ((i % k + k) % k) * k + ((j % k + k) % k); };
    auto redge = [&](int i, int j) { return i * k + j; };            // v(i,j) -> v(i+1,j)
    auto uedge = [&](int i, int j) { return k * k + i * k + j; };    // v(i,j) -> v(i,j+1)
    c.edges.resize((std::size_t)2 * k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            c.edges[redge(i, j)] = {vid(i, j), vid(i + 1, j)};
            c.edges[uedge(i, j)] = {vid(i, j), vid(i, j + 1)};
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            c.faces.push_back({{redge(i, j), 1},
                               {uedge((i + 1) % k, j), 1},
                               {redge(i, (j + 1) % k), -1},
                               {uedge(i, j), -1}});
    validate_complex(c);
    return c;
}

CwComplex build_rose(int loops, const std::vector<GroupWord>& face_words) {
    if (loops < 0) throw ValidationError("rose: negative loop count");
    CwComplex c;
    c.vertices.assign(1, {});
    for (int e = 0; e < loops; ++e) c.edges.emplace_back(0, 0);
    for (const GroupWord& w : face_words) {
        std::vector<FaceStep> walk;
        for (const Letter& l : w.letters) {
            if (l.var < 0 || l.var >= loops) throw ValidationError("rose: face word uses missing loop");
            walk.push_back({l.var, l.exp});
        }
        c.faces.push_back(std::move(walk));
    }
    validate_complex(c);
    return c;
}

CwComplex build_presentation_complex(const std::vector<GroupWord>& relators) {
    int gens = 0;
    for (const GroupWord& r : relators) gens = std::max(gens, r.arity());
    return build_rose(gens, relators);
}

CwComplex build_disk_with_boundaries(int R, const std::vector<std::vector<int>>& subgroups) {
    if (R < 1) throw ValidationError("disk: R must be positive");
    if (!subgroups.empty() && (int)subgroups.size() != R)
        throw ValidationError("disk: need one subgroup per boundary");
    CwComplex c;
    // ghost-like y_i at even indices, smooth s_i at odd
    for (int i = 0; i < R; ++i) {
        CwVertex y;
        if (subgroups.empty() || subgroups[i].empty() ||
            (subgroups[i].size() == 1 && subgroups[i][0] == 0)) {
            y.kind = VertexKind::Ghost;
        } else {
            y.kind = VertexKind::Restricted;
            y.restriction = subgroups[i];
        }
        c.vertices.push_back(y);
        c.vertices.push_back({});
    }
    auto yid = [&](int i) { return 2 * (i % R); };
    auto sid = [&](int i) { return 2 * (i % R) + 1; };
    std::vector<FaceStep> walk;
    for (int i = 0; i < R; ++i) {
        c.edges.emplace_back(yid(i), sid(i));
        walk.push_back({2 * i, 1});
        c.edges.emplace_back(sid(i), yid(i + 1));
        walk.push_back({2 * i + 1, 1});
    }
    c.faces.push_back(std::move(walk));
    validate_complex(c);
    return c;
}

CwComplex build_hole(int k, const std::vector<int>& h_members) {
    CwComplex c = build_torus_grid(k);
    if (h_members.empty() || (h_members.size() == 1 && h_members[0] == 0)) {
        c.vertices[0].kind = VertexKind::Ghost;
    } else {
        c.vertices[0].kind = VertexKind::Restricted;
        c.vertices[0].restriction = h_members;
    }
    validate_complex(c);
    return c;
}

CwComplex build_ssb_chain(int n) {
    if (n < 2 || n % 2 != 0) throw ValidationError("ssb_chain: n must be even and >= 2");
    CwComplex c;
    const int half = n / 2;
    c.vertices.assign(half, {});                    // pair vertices
    c.vertices.push_back({VertexKind::Ghost, {}});  // heads of even edges
    c.vertices.push_back({VertexKind::Ghost, {}});  // heads of odd edges
    const int ga = half, gb = half + 1;
    for (int q = 0; q < n; ++q) c.edges.emplace_back(q / 2, q % 2 == 0 ? ga : gb);
    for (int j = 0; j < half; ++j) {
        int i = 2 * j;
        c.faces.push_back({{i, -1}, {(i + 1) % n, 1}, {(i + 3) % n, -1}, {(i + 2) % n, 1}});
    }
    validate_complex(c);
    return c;
}

CwComplex build_repetition_chain(int n) {
    if (n < 1) throw ValidationError("repetition_chain: n must be positive");
    CwComplex c;
    c.vertices.push_back({VertexKind::Ghost, {}});
    c.vertices.push_back({VertexKind::Ghost, {}});
    for (int q = 0; q < n; ++q) c.edges.emplace_back(0, 1);
    for (int q = 0; q < n; ++q) c.faces.push_back({{q, 1}, {(q + 1) % n, -1}});
    validate_complex(c);
    return c;
}

CwComplex build_cluster_chain_1d(int n) {
    if (n < 4 || n % 2 != 0) throw ValidationError("cluster_chain_1d: n must be even and >= 4");
    CwComplex c;
    const int half = n / 2;
    c.vertices.assign(half, {});  // w_j
    for (int j = 0; j < half; ++j) c.vertices.push_back({VertexKind::Ghost, {}});  // stubs
    auto wrap = [&](int q) { return ((q % n) + n) % n; };
    for (int q = 0; q < n; ++q) {
        // the check at w_j right-multiplies edge 2j+1 and left-multiplies 2j+2, 2j+3
        int tail = q % 2 == 0 ? wrap(q - 2) / 2 : wrap(q - 3) / 2;
        int head = q % 2 == 0 ? half + q / 2 : (q - 1) / 2;
        c.edges.emplace_back(tail, head);
    }
    for (int j = 0; j < half; ++j) {
        int i = 2 * j;
        c.faces.push_back({{i, -1}, {(i + 1) % n, 1}, {(i + 2) % n, 1}});
    }
    return identify_ghosts(c);
}

CwComplex build_cluster_lieb_2d(int kx, int ky) {
    if (kx < 1 || ky < 1) throw ValidationError("cluster_lieb_2d: sizes must be positive");
    CwComplex c;
    const int nv = kx * ky;
    c.vertices.assign(nv, {});
    auto vid = [&](int i, int j) { return i * ky + j; };
    std::vector<std::pair<int, int>> grid_edges;
    for (int i = 0; i + 1 < kx; ++i)
        for (int j = 0; j < ky; ++j) grid_edges.emplace_back(vid(i, j), vid(i + 1, j));
    for (int i = 0; i < kx; ++i)
        for (int j = 0; j + 1 < ky; ++j) grid_edges.emplace_back(vid(i, j), vid(i, j + 1));
    c.edges = grid_edges;
    // vertex qudits: one edge per grid vertex toward its own ghost stub
    std::vector<int> cedge(nv);
    for (int v = 0; v < nv; ++v) {
        cedge[v] = (int)c.edges.size();
        c.vertices.push_back({VertexKind::Ghost, {}});
        c.edges.emplace_back(v, nv + v);
    }
    for (int e = 0; e < (int)grid_edges.size(); ++e) {
        auto [u, w] = grid_edges[e];
        c.faces.push_back({{e, 1}, {cedge[w], 1}, {cedge[u], -1}});
    }
    return identify_ghosts(c);
}

CwComplex build_petersen() {
    CwComplex c;
    c.vertices.assign(10, {});
    for (int i = 0; i < 5; ++i) c.edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) c.edges.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i) c.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    validate_complex(c);
    return c;
}

}  // namespace groupcss

#include "doctest.h"
#include "groupcss/complex.hpp"

#include <algorithm>
#include <numeric>

using namespace groupcss;

namespace {

// 3x3 planar patch with the (0,0) plaquette removed: an annulus
CwComplex punctured_grid(std::vector<int> ghost_at = {}) {
    CwComplex c;
    c.vertices.assign(9, {});
    auto vid = [](int i, int j) { return 3 * i + j; };
    std::vector<std::vector<int>> r(2, std::vector<int>(3)), u(3, std::vector<int>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            r[i][j] = (int)c.edges.size();
            c.edges.emplace_back(vid(i, j), vid(i + 1, j));
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) {
            u[i][j] = (int)c.edges.size();
            c.edges.emplace_back(vid(i, j), vid(i, j + 1));
        }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (i == 0 && j == 0) continue;  // the puncture
            c.faces.push_back({{r[i][j], 1}, {u[i + 1][j], 1}, {r[i][j + 1], -1}, {u[i][j], -1}});
        }
    for (int v : ghost_at) c.vertices[v].kind = VertexKind::Ghost;
    validate_complex(c);
    return c;
}

}  // namespace

TEST_CASE("validation accepts a self-loop face and rejects an open walk") {
    CwComplex c;
    c.vertices.assign(1, {});
    c.edges.emplace_back(0, 0);
    c.faces.push_back({{0, 1}});
    validate_complex(c);

    CwComplex bad;
    bad.vertices.assign(2, {});
    bad.edges.emplace_back(0, 1);
    bad.faces.push_back({{0, 1}});  // walk does not close
    CHECK_THROWS_AS(validate_complex(bad), ValidationError);

    CwComplex dangling;
    dangling.vertices.assign(1, {});
    dangling.edges.emplace_back(0, 3);
    CHECK_THROWS_AS(validate_complex(dangling), ValidationError);
}

TEST_CASE("torus grid builder counts") {
    for (int k : {1, 2, 3}) {
        CwComplex c = build_torus_grid(k);
        CHECK(c.num_vertices() == k * k);
        CHECK(c.num_edges() == 2 * k * k);
        CHECK(c.num_faces() == k * k);
        validate_complex(c);
    }
    // the k=1 case is the one-vertex rose with face a b a^-1 b^-1
    CwComplex rose = build_torus_grid(1);
    REQUIRE(rose.faces.size() == 1);
    CHECK(rose.faces[0] == std::vector<FaceStep>{{0, 1}, {1, 1}, {0, -1}, {1, -1}});
}

TEST_CASE("quotient of ghosts") {
    CwComplex c;
    c.vertices.push_back({VertexKind::Ghost, {}});
    c.vertices.push_back({VertexKind::Ghost, {}});
    c.edges.emplace_back(0, 1);
    bool changed = false;
    CwComplex q = quotient_ghosts(c, &changed);
    CHECK(changed);
    CHECK(q.num_vertices() == 1);
    CHECK(q.edges[0] == std::pair<int, int>{0, 0});

    CwComplex smooth = build_torus_grid(2);
    quotient_ghosts(smooth, &changed);
    CHECK_FALSE(changed);
}

TEST_CASE("ghost identification merges exactly the forced stubs") {
    // four edges a,b,c,d; face a^-1 b c d^-1 with the two loose ends on ghosts
    CwComplex c;
    c.vertices.assign(3, {});                        // 0,1,2 full
    c.vertices.push_back({VertexKind::Ghost, {}});   // 3
    c.vertices.push_back({VertexKind::Ghost, {}});   // 4
    c.edges.emplace_back(0, 3);                      // a, head on ghost 3
    c.edges.emplace_back(0, 1);                      // b
    c.edges.emplace_back(1, 2);                      // c
    c.edges.emplace_back(2, 4);                      // d, head on ghost 4
    c.faces.push_back({{0, -1}, {1, 1}, {2, 1}, {3, 1}});
    CwComplex merged = identify_ghosts(c);
    CHECK(merged.num_vertices() == 4);  // the two ghosts became one
    int ghosts = 0;
    for (const CwVertex& v : merged.vertices) ghosts += v.kind == VertexKind::Ghost;
    CHECK(ghosts == 1);
    validate_complex(merged);

    // already-continuous input is unchanged
    CwComplex torus = build_torus_grid(2);
    CwComplex same = identify_ghosts(torus);
    CHECK(same.num_vertices() == torus.num_vertices());

    // discontinuity at a full vertex is an error
    CwComplex bad = c;
    bad.vertices[3].kind = VertexKind::Full;
    CHECK_THROWS_AS(identify_ghosts(bad), ValidationError);
}

TEST_CASE("ghost identification is independent of face order") {
    CwComplex c = build_cluster_chain_1d(6);
    // rebuild the raw complex by splitting the merged ghost back apart is
    // overkill; instead reorder the faces of the raw chain and compare
    CwComplex raw;
    raw.vertices.assign(3, {});
    for (int j = 0; j < 3; ++j) raw.vertices.push_back({VertexKind::Ghost, {}});
    int n = 6;
    auto wrap = [&](int q) { return ((q % n) + n) % n; };
    for (int q = 0; q < n; ++q) {
        int tail = q % 2 == 0 ? wrap(q - 2) / 2 : wrap(q - 3) / 2;
        int head = q % 2 == 0 ? 3 + q / 2 : (q - 1) / 2;
        raw.edges.emplace_back(tail, head);
    }
    for (int j = 0; j < 3; ++j) {
        int i = 2 * j;
        raw.faces.push_back({{i, -1}, {(i + 1) % n, 1}, {(i + 2) % n, 1}});
    }
    for (int perm = 0; perm < 3; ++perm) {
        CwComplex shuffled = raw;
        std::rotate(shuffled.faces.begin(), shuffled.faces.begin() + perm, shuffled.faces.end());
        CwComplex merged = identify_ghosts(shuffled);
        CHECK(merged.num_vertices() == c.num_vertices());
        CHECK(merged.edges == c.edges);
    }
}

TEST_CASE("spanning forest") {
    // path graph: all edges in the forest
    CwComplex path;
    path.vertices.assign(4, {});
    for (int i = 0; i < 3; ++i) path.edges.emplace_back(i, i + 1);
    SpanningForest f = spanning_forest(path);
    CHECK(f.forest_edges == 3);
    CHECK(f.roots == std::vector<int>{0});

    // torus: |V| - 1 tree edges
    for (int k : {2, 3}) {
        SpanningForest tf = spanning_forest(build_torus_grid(k));
        CHECK(tf.forest_edges == k * k - 1);
    }

    // two ghost roots give two trees partitioning the vertices
    CwComplex pg = punctured_grid({0, 8});
    SpanningForest pf = spanning_forest(pg);
    CHECK(pf.roots.size() == 2);
    int in0 = 0, in1 = 0;
    for (int v = 0; v < pg.num_vertices(); ++v) (pf.root_of[v] == 0 ? in0 : in1)++;
    CHECK(in0 + in1 == 9);
    CHECK(in0 > 0);
    CHECK(in1 > 0);

    CwComplex disconnected;
    disconnected.vertices.assign(2, {});
    CHECK_THROWS_AS(spanning_forest(disconnected), ValidationError);
}

TEST_CASE("pi1 presentations") {
    // one-vertex torus: <a,b | aba'b'>
    Pi1Presentation p = presentation_pi1(build_torus_grid(1));
    CHECK(p.generator_edges == std::vector<int>{0, 1});
    REQUIRE(p.relators.size() == 1);
    CHECK(canonical_rotation(p.relators[0]) ==
          canonical_rotation(word_from_literals({1, 2, -1, -2})));

    // presentation complex returns its relators (all edges are generators)
    std::vector<GroupWord> rels = {word_from_literals({1, 1, 1, 1}),
                                   word_from_literals({2, 2}),
                                   word_from_literals({2, 1, 2, 1})};
    Pi1Presentation dp = presentation_pi1(build_presentation_complex(rels));
    REQUIRE(dp.relators.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(canonical_rotation(dp.relators[i]) == canonical_rotation(rels[i]));

    // a tree has a trivial presentation
    CwComplex path;
    path.vertices.assign(3, {});
    path.edges.emplace_back(0, 1);
    path.edges.emplace_back(1, 2);
    Pi1Presentation tp = presentation_pi1(path);
    CHECK(tp.generator_edges.empty());

    // generator count = |E| - |V| + (number of trees)
    for (const CwComplex& c : {build_torus_grid(2), build_ssb_chain(4), punctured_grid({0, 8}),
                               build_disk_with_boundaries(3, {})}) {
        SpanningForest f = spanning_forest(c);
        Pi1Presentation pp = presentation_pi1(c, f);
        CHECK((int)pp.generator_edges.size() ==
              c.num_edges() - c.num_vertices() + (int)f.roots.size());
    }
}

TEST_CASE("girth") {
    CHECK(girth(build_petersen()) == 5);
    CHECK(girth(build_torus_grid(3)) == 3);
    CHECK(girth(build_torus_grid(2)) == 2);  // doubled edges on the 2-cycle
    CHECK(girth(build_torus_grid(1)) == 1);  // self-loops

    CwComplex path;
    path.vertices.assign(5, {});
    for (int i = 0; i < 4; ++i) path.edges.emplace_back(i, i + 1);
    CHECK_FALSE(girth(path).has_value());
}

TEST_CASE("girth is invariant under vertex relabeling and matches the serial kernel") {
    SplitMix64 rng(21);
    for (const CwComplex& base : {build_petersen(), build_torus_grid(3), punctured_grid()}) {
        std::vector<int> perm(base.num_vertices());
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = (int)perm.size() - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        CwComplex shuffled = base;
        shuffled.faces.clear();  // relabeled faces are not needed for girth
        for (auto& [t, h] : shuffled.edges) {
            t = perm[t];
            h = perm[h];
        }
        CHECK(girth(shuffled) == girth(base));
        CHECK(girth_serial(base) == girth(base));
    }
}

TEST_CASE("chain builders have the advertised ghost structure") {
    CwComplex ssb = build_ssb_chain(4);
    int ghosts = 0;
    for (const CwVertex& v : ssb.vertices) ghosts += v.kind == VertexKind::Ghost;
    CHECK(ghosts == 2);

    for (int n : {4, 6}) {
        CwComplex cl = build_cluster_chain_1d(n);
        int g1 = 0;
        for (const CwVertex& v : cl.vertices) g1 += v.kind == VertexKind::Ghost;
        CHECK(g1 == 1);
        CHECK(cl.num_edges() == n);
    }

    CwComplex c2 = build_cluster_lieb_2d(2, 2);
    int g2 = 0;
    for (const CwVertex& v : c2.vertices) g2 += v.kind == VertexKind::Ghost;
    CHECK(g2 == 1);
    CHECK(c2.num_edges() == 8);  // 4 grid + 4 vertex qudits

    CwComplex rep = build_repetition_chain(3);
    CHECK(rep.num_edges() == 3);
    CHECK(rep.num_faces() == 3);
}

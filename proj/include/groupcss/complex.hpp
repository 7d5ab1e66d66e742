#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupcss/words.hpp"

namespace groupcss {

enum class VertexKind { Full, Restricted, Ghost };

struct CwVertex {
    VertexKind kind = VertexKind::Full;
    std::vector<int> restriction;  // element indices; meaningful for Restricted
};

struct FaceStep {
    int edge = 0;
    int orient = 1;  // +1 along the edge orientation, -1 against
    friend bool operator==(const FaceStep&, const FaceStep&) = default;
};

// 2D CW complex: oriented graph plus faces given as closed oriented edge
// walks.  Restriction data is stored as element index lists so a complex is
// independent of any particular group until code construction.
struct CwComplex {
    std::vector<CwVertex> vertices;
    std::vector<std::pair<int, int>> edges;     // (tail, head)
    std::vector<std::vector<FaceStep>> faces;
    std::map<int, std::vector<int>> edge_constraints;  // edge -> subgroup members

    int num_vertices() const { return (int)vertices.size(); }
    int num_edges() const { return (int)edges.size(); }
    int num_faces() const { return (int)faces.size(); }

    int step_start(const FaceStep& s) const {
        return s.orient > 0 ? edges[s.edge].first : edges[s.edge].second;
    }
    int step_end(const FaceStep& s) const {
        return s.orient > 0 ? edges[s.edge].second : edges[s.edge].first;
    }
    bool ghost_like(int v) const { return vertices[v].kind != VertexKind::Full; }
};

// throws ValidationError naming the first broken face step
void validate_complex(const CwComplex& c);

// all Ghost vertices merged into one; edges and faces re-targeted.  `changed`
// reports whether any merge happened (false flags the no-ghost case).
CwComplex quotient_ghosts(const CwComplex& c, bool* changed = nullptr);

// Minimal merging of ghost vertices that makes every face walk continuous.
// Discontinuities at non-ghost vertices are errors.  Result is independent of
// face/step processing order.
CwComplex identify_ghosts(const CwComplex& c);

// Multi-root BFS forest over sorted adjacency, one tree per ghost-like vertex
// (or rooted at vertex 0 when the complex is smooth).  Deterministic.
struct SpanningForest {
    std::vector<int> roots;         // root vertex ids
    std::vector<int> root_of;       // per vertex: index into roots
    std::vector<int> parent_vertex; // per vertex; -1 at roots
    std::vector<int> parent_edge;   // edge to parent; -1 at roots
    std::vector<char> in_forest;    // per edge
    int forest_edges = 0;
};
SpanningForest spanning_forest(const CwComplex& c);

// Presentation of pi_1 of the complex with all ghost-like vertices identified
// to the basepoint: generators are the non-forest edges, relators the face
// words with forest edges deleted (freely and cyclically reduced).
struct Pi1Presentation {
    std::vector<int> generator_edges;
    std::vector<GroupWord> relators;              // over generator ordinals
    std::vector<std::pair<int, int>> generator_roots;  // (tail tree, head tree) root ordinals
    int root_count = 1;
    bool smooth = true;  // no ghost-like vertices; basepoint is vertex 0
};
Pi1Presentation presentation_pi1(const CwComplex& c);
Pi1Presentation presentation_pi1(const CwComplex& c, const SpanningForest& f);

// shortest cycle length in the 1-skeleton; self-loops count 1, parallel edges
// 2; nullopt for forests.  OpenMP over BFS sources; _serial is the reference.
std::optional<int> girth(const CwComplex& c);
std::optional<int> girth_serial(const CwComplex& c);

// ---- builders -----------------------------------------------------------

// k x k periodic grid: k^2 vertices, 2k^2 edges, k^2 plaquettes.
// torus_grid(1) is the one-vertex rose with face a b a^-1 b^-1.
CwComplex build_torus_grid(int k);
// one vertex, `loops` self-loop edges, faces given as words over the loops
CwComplex build_rose(int loops, const std::vector<GroupWord>& face_words);
// rose with one loop per generator and one face per relator
CwComplex build_presentation_complex(const std::vector<GroupWord>& relators);
// disk with R boundary circles contracted to ghost-like vertices; boundary i
// carries `subgroups[i]` (empty list = trivial ghost)
CwComplex build_disk_with_boundaries(int R, const std::vector<std::vector<int>>& subgroups);
// k x k torus with one vertex replaced by a hole contracted to a single
// H-restricted ghost vertex
CwComplex build_hole(int k, const std::vector<int>& h_members);
// n-site chains (n even for ssb/cluster); see the builders for the layouts
CwComplex build_ssb_chain(int n);
CwComplex build_repetition_chain(int n);
CwComplex build_cluster_chain_1d(int n);
// open kx x ky Lieb patch: vertex qudits hang off the grid toward one ghost
CwComplex build_cluster_lieb_2d(int kx, int ky);

// Petersen graph as a bare 1-skeleton (girth fixture)
CwComplex build_petersen();

}  // namespace groupcss

#pragma once

#include <memory>
#include <vector>

#include "groupcss/code.hpp"
#include "groupcss/complex.hpp"

namespace groupcss {

// Everything the codespace and logical machinery needs about one complex over
// one group: the rooted forest, the presentation of pi_1 with all ghost-like
// vertices identified, per-root symmetry subgroups, and explicit walks for
// each generator (its loop, and the tree path from the tail to its root).
struct ComplexAnalysis {
    CwComplex complex;
    GroupPtr group;
    SpanningForest forest;
    Pi1Presentation pres;
    std::vector<Subgroup> root_subgroups;           // Ghost -> trivial, Restricted -> H, smooth -> G
    std::vector<std::vector<FaceStep>> loops;       // per generator, based at its roots
    std::vector<std::vector<FaceStep>> tail_paths;  // per generator: tail(q) up to its root
    bool smooth = true;
    bool trivial_ghosts = false;  // all roots are plain ghosts
};
using AnalysisPtr = std::shared_ptr<const ComplexAnalysis>;

AnalysisPtr analyze_complex(const CwComplex& c, const GroupPtr& g);
// via provenance (or reconstructed complex)
AnalysisPtr analyze_code(const GroupCssCode& code);

// all homomorphisms pi_1 -> G by backtracking with relator pruning; maps are
// listed in lexicographic generator-assignment order.  OpenMP splits on the
// first generator; _serial is the reference.
struct HomSet {
    std::vector<std::vector<Elem>> maps;  // generator -> element
};
HomSet count_hom(const Pi1Presentation& p, const FiniteGroup& g,
                 const RunConfig& cfg = {});
HomSet count_hom_serial(const Pi1Presentation& p, const FiniteGroup& g,
                        const RunConfig& cfg = {});

// orbits of the Hom set under the product of root-subgroup actions
// (conjugation on loops, h_i g h_j^-1 on root-to-root generators)
struct HomOrbits {
    std::vector<int> orbit_of;  // per hom index
    std::vector<int> reps;      // first hom index per orbit
};
HomOrbits hom_orbits(const ComplexAnalysis& a, const HomSet& homs);

struct DimReport {
    long long dim = 0;
    double log_dim_base_g = 0;  // k = log_|G| dim
    long long hom_count = 0;
    long long orbit_count = 0;
    std::vector<long long> ghost_quotients;  // |G| / |H_i| per root, ghost-like roots only
};
DimReport codespace_dim(const ComplexAnalysis& a, const RunConfig& cfg = {});
DimReport codespace_dim(const GroupCssCode& code, const RunConfig& cfg = {});

// |Hom(pi_1 of the complex itself, G)|: ghost-like vertices treated as plain
// vertices (used by the rough factorization dim = |Hom| * |G|^(|Y|-1))
long long hom_count_plain(const CwComplex& c, const GroupPtr& g, const RunConfig& cfg = {});

// Z-distance as the shortest closed walk (in the complex with ghosts
// identified) whose holonomy is nonidentity under some hom.  Smooth or
// trivial-ghost complexes only.  Throws if the dimension is <= 1.
int systole_dz(const ComplexAnalysis& a, const RunConfig& cfg = {});

// ---- logical operators ----------------------------------------------------

struct LogicalOp {
    enum class Kind { ZRough, XRough, ZSmooth, XSmooth };
    Kind kind;
    AnalysisPtr analysis;
    std::vector<Elem> phi1, phi2;  // per generator; phi2 unused for Z kinds
    int gamma = -1;                // ZRough tests one generator loop

    // exact action on a basis configuration; diagonal kinds return the input
    // with weight in {0,1} (rationals with denominator |G| for smooth kinds)
    std::vector<std::pair<std::vector<Elem>, Rational>> apply(const std::vector<Elem>& config) const;
};

// rough (all ghosts trivial): indicator that loop gamma carries phi(gamma)
LogicalOp make_z_logical(const AnalysisPtr& a, const std::vector<Elem>& phi, int gamma);
// rough: maps the phi1 sector onto the phi2 sector, left-multiplying each
// generator edge by the tree-transported ratio phi2 phi1^-1
LogicalOp make_x_logical(const AnalysisPtr& a, const std::vector<Elem>& phi1,
                         const std::vector<Elem>& phi2);
// smooth: conjugation-symmetrized variants (generally non-invertible)
LogicalOp make_smooth_z_logical(const AnalysisPtr& a, const std::vector<Elem>& phi);
LogicalOp make_smooth_x_logical(const AnalysisPtr& a, const std::vector<Elem>& phi1,
                                const std::vector<Elem>& phi2);

// holonomy of a walk on a configuration
Elem walk_holonomy(const ComplexAnalysis& a, const std::vector<FaceStep>& walk,
                   std::span<const Elem> config);

}  // namespace groupcss

#include "groupcss/code.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groupcss {

namespace {

Subgroup restriction_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    if (members.empty()) return trivial_subgroup(g);
    return subgroup_from_members(g, members);
}

}  // namespace

GroupCssCode code_from_complex(const CwComplex& c, const GroupPtr& g) {
    validate_complex(c);
    GroupCssCode code;
    code.group = g;
    code.n = c.num_edges();
    for (int v = 0; v < c.num_vertices(); ++v) {
        if (c.vertices[v].kind == VertexKind::Ghost) continue;
        XCheckFamily fam;
        fam.label = v;
        for (int e = 0; e < c.num_edges(); ++e) {
            if (c.edges[e].first == v) fam.actions.emplace_back(e, Side::Left);
            if (c.edges[e].second == v) fam.actions.emplace_back(e, Side::Right);
        }
        if (fam.actions.empty()) continue;
        fam.allowed = c.vertices[v].kind == VertexKind::Full
                          ? full_subgroup(*g)
                          : restriction_subgroup(*g, c.vertices[v].restriction);
        code.x_families.push_back(std::move(fam));
    }
    for (const auto& walk : c.faces) {
        ZCheck z;
        for (const FaceStep& s : walk) z.word.letters.push_back({s.edge, s.orient});
        z.local = trivial_subgroup(*g);
        code.z_checks.push_back(std::move(z));
    }
    for (const auto& [e, members] : c.edge_constraints) {
        ZCheck z;
        z.word.letters.push_back({e, 1});
        z.local = restriction_subgroup(*g, members);
        code.z_checks.push_back(std::move(z));
    }
    code.provenance = c;
    return code;
}

CwComplex complex_from_code(const GroupCssCode& code) {
    const FiniteGroup& g = *code.group;
    // each (qudit, side) may appear in at most one family
    std::vector<int> left_owner(code.n, -1), right_owner(code.n, -1);
    for (int f = 0; f < (int)code.x_families.size(); ++f) {
        for (auto [q, side] : code.x_families[f].actions) {
            auto& owner = side == Side::Left ? left_owner : right_owner;
            if (owner[q] >= 0)
                throw ValidationError("not a quantum double: qudit " + std::to_string(q) +
                                      " multiplied twice on one side");
            owner[q] = f;
        }
    }
    CwComplex c;
    for (const XCheckFamily& fam : code.x_families) {
        CwVertex v;
        if (!fam.allowed.is_full()) {
            v.kind = VertexKind::Restricted;
            v.restriction = fam.allowed.members;
        }
        c.vertices.push_back(std::move(v));
    }
    auto ghost = [&]() {
        c.vertices.push_back({VertexKind::Ghost, {}});
        return (int)c.vertices.size() - 1;
    };
    for (int q = 0; q < code.n; ++q) {
        int tail = left_owner[q] >= 0 ? left_owner[q] : ghost();
        int head = right_owner[q] >= 0 ? right_owner[q] : ghost();
        c.edges.emplace_back(tail, head);
    }
    for (const ZCheck& z : code.z_checks) {
        if (z.local.is_trivial()) {
            std::vector<FaceStep> walk;
            for (const Letter& l : z.word.letters) walk.push_back({l.var, l.exp});
            c.faces.push_back(std::move(walk));
        } else if (z.word.weight() == 1 && z.word.letters[0].exp == 1) {
            c.edge_constraints[z.word.letters[0].var] = z.local.members;
        } else {
            throw ValidationError("Z-check with nontrivial subgroup and weight > 1 is not of quantum-double shape");
        }
    }
    (void)g;
    return identify_ghosts(c);
}

Elem z_word_value(const GroupCssCode& code, const ZCheck& z, std::span<const Elem> config) {
    return evaluate_word(z.word, *code.group, config);
}

void apply_x_family(const GroupCssCode& code, const XCheckFamily& fam, Elem g,
                    std::vector<Elem>& config) {
    const FiniteGroup& grp = *code.group;
    for (auto [q, side] : fam.actions) {
        if (side == Side::Left)
            config[q] = grp.mul(g, config[q]);
        else
            config[q] = grp.mul(config[q], grp.inv(g));
    }
}

// ---- commutation ----------------------------------------------------------

namespace {

// Net multiplier exponent the family inserts into each gap of the word
// (gap i sits before letter i; gap weight() is after the last letter).
// Acting with X_v^g rewrites each acted letter as g^{+-1}-bordered, and
// commutation for all configurations reduces to these exponents.
struct GapProfile {
    std::vector<int> gaps;
    bool acted = false;
};

GapProfile gap_profile(const ZCheck& z, const XCheckFamily& fam) {
    GapProfile p;
    p.gaps.assign(z.word.weight() + 1, 0);
    std::vector<char> is_left, is_right;
    int max_q = 0;
    for (const Letter& l : z.word.letters) max_q = std::max(max_q, l.var);
    is_left.assign(max_q + 1, 0);
    is_right.assign(max_q + 1, 0);
    for (auto [q, side] : fam.actions) {
        if (q > max_q) continue;
        (side == Side::Left ? is_left : is_right)[q] = 1;
    }
    for (int i = 0; i < z.word.weight(); ++i) {
        const Letter& l = z.word.letters[i];
        if (is_left[l.var]) {
            p.acted = true;
            if (l.exp > 0)
                p.gaps[i] += 1;  // g_q -> g g_q
            else
                p.gaps[i + 1] -= 1;  // g_q^-1 -> g_q^-1 g^-1
        }
        if (is_right[l.var]) {
            p.acted = true;
            if (l.exp > 0)
                p.gaps[i + 1] -= 1;  // g_q -> g_q g^-1
            else
                p.gaps[i] += 1;  // g_q^-1 -> g g_q^-1
        }
    }
    return p;
}

enum class SymbolicVerdict { Commutes, NeedsConjugation, Unresolved };

SymbolicVerdict symbolic_check(const GapProfile& p, int* conj_power) {
    const int j = (int)p.gaps.size() - 1;
    for (int i = 1; i < j; ++i)
        if (p.gaps[i] != 0) return SymbolicVerdict::Unresolved;
    if (p.gaps[0] == 0 && p.gaps[j] == 0) return SymbolicVerdict::Commutes;
    if (p.gaps[0] == -p.gaps[j]) {
        *conj_power = p.gaps[0];
        return SymbolicVerdict::NeedsConjugation;
    }
    return SymbolicVerdict::Unresolved;
}

std::vector<int> word_support(const GroupWord& w) {
    std::vector<int> s;
    for (const Letter& l : w.letters) s.push_back(l.var);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// exhaustive commutation test of one (check, family, g) triple over the word
// support; returns a witness string or empty
std::string exhaustive_check(const GroupCssCode& code, const ZCheck& z, const XCheckFamily& fam,
                             Elem g, const RunConfig& cfg) {
    const FiniteGroup& grp = *code.group;
    auto support = word_support(z.word);
    long long total;
    if (!pow_within(grp.order(), (int)support.size(), cfg.config_budget, &total))
        throw BudgetError("commutation check support too large for exhaustive fallback");
    std::vector<Elem> config(code.n, 0);
    for (long long it = 0; it < total; ++it) {
        long long x = it;
        for (int s : support) {
            config[s] = (Elem)(x % grp.order());
            x /= grp.order();
        }
        bool before = z.local.contains(z_word_value(code, z, config));
        std::vector<Elem> moved = config;
        apply_x_family(code, fam, g, moved);
        bool after = z.local.contains(z_word_value(code, z, moved));
        if (before != after) {
            std::string w = "vertex " + std::to_string(fam.label) + ", g=" + grp.label(g) + ", config (";
            for (int s : support) w += std::to_string(s) + "=" + grp.label(config[s]) + " ";
            w += ")";
            return w;
        }
    }
    return {};
}

bool subgroup_conj_invariant(const FiniteGroup& g, const Subgroup& k, Elem x) {
    for (Elem m : k.members)
        if (!k.contains(g.conj(x, m))) return false;
    return true;
}

void check_quantum_double_shape(const GroupCssCode& code) {
    std::vector<char> left(code.n, 0), right(code.n, 0);
    for (const XCheckFamily& fam : code.x_families)
        for (auto [q, side] : fam.actions) {
            auto& seen = side == Side::Left ? left : right;
            if (seen[q])
                throw ValidationError("not a quantum double: qudit " + std::to_string(q) +
                                      " multiplied twice on one side");
            seen[q] = 1;
        }
}

void verify_commuting_impl(const GroupCssCode& code, const RunConfig& cfg, bool allow_symbolic) {
    check_quantum_double_shape(code);
    const FiniteGroup& grp = *code.group;
    struct Task {
        int z;
        int f;
    };
    std::vector<Task> tasks;
    for (int zi = 0; zi < (int)code.z_checks.size(); ++zi)
        for (int fi = 0; fi < (int)code.x_families.size(); ++fi) {
            GapProfile p = gap_profile(code.z_checks[zi], code.x_families[fi]);
            if (p.acted) tasks.push_back({zi, fi});
        }

    std::vector<std::string> failures(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < (int)tasks.size(); ++t) {
        const ZCheck& z = code.z_checks[tasks[t].z];
        const XCheckFamily& fam = code.x_families[tasks[t].f];
        GapProfile p = gap_profile(z, fam);
        int conj_power = 0;
        SymbolicVerdict v =
            allow_symbolic ? symbolic_check(p, &conj_power) : SymbolicVerdict::Unresolved;
        std::string fail;
        switch (v) {
            case SymbolicVerdict::Commutes:
                break;
            case SymbolicVerdict::NeedsConjugation:
                for (Elem g : fam.allowed.members) {
                    if (subgroup_conj_invariant(grp, z.local, grp.power(g, conj_power))) continue;
                    fail = "check " + std::to_string(tasks[t].z) + " conjugated outside its subgroup by vertex " +
                           std::to_string(fam.label) + ", g=" + grp.label(g);
                    break;
                }
                break;
            case SymbolicVerdict::Unresolved:
                for (Elem g : fam.allowed.members) {
                    if (g == 0) continue;
                    fail = exhaustive_check(code, z, fam, g, cfg);
                    if (!fail.empty()) {
                        fail = "check " + std::to_string(tasks[t].z) + ": " + fail;
                        break;
                    }
                }
                break;
        }
        failures[t] = std::move(fail);
    }
    for (const std::string& f : failures)
        if (!f.empty()) throw VerificationError("projector commutation failed: " + f);
}

}  // namespace

void verify_commuting_projectors(const GroupCssCode& code, const RunConfig& cfg) {
    verify_commuting_impl(code, cfg, true);
}

void verify_commuting_projectors_exhaustive(const GroupCssCode& code, const RunConfig& cfg) {
    verify_commuting_impl(code, cfg, false);
}

void verify_compatible(const GroupCssCode& code, const RunConfig& cfg) {
    const FiniteGroup& grp = *code.group;
    long long total;
    if (pow_within(grp.order(), code.n, cfg.config_budget, &total)) {
        // global check on the admissible set itself
        std::vector<Elem> config(code.n, 0);
        for (long long it = 0; it < total; ++it) {
            long long x = it;
            for (int q = 0; q < code.n; ++q) {
                config[q] = (Elem)(x % grp.order());
                x /= grp.order();
            }
            bool admissible = true;
            for (const ZCheck& z : code.z_checks)
                if (!z.local.contains(z_word_value(code, z, config))) {
                    admissible = false;
                    break;
                }
            if (!admissible) continue;
            for (const XCheckFamily& fam : code.x_families)
                for (Elem g : subgroup_generators(grp, fam.allowed)) {
                    std::vector<Elem> moved = config;
                    apply_x_family(code, fam, g, moved);
                    for (const ZCheck& z : code.z_checks)
                        if (!z.local.contains(z_word_value(code, z, moved)))
                            throw VerificationError(
                                "X-check at vertex " + std::to_string(fam.label) + " with g=" +
                                grp.label(g) + " maps an admissible configuration out of the code");
                }
        }
        return;
    }
    // over budget: certify per check (sufficient for preservation of the
    // intersection)
    for (const ZCheck& z : code.z_checks)
        for (const XCheckFamily& fam : code.x_families) {
            GapProfile p = gap_profile(z, fam);
            if (!p.acted) continue;
            int conj_power = 0;
            switch (symbolic_check(p, &conj_power)) {
                case SymbolicVerdict::Commutes:
                    break;
                case SymbolicVerdict::NeedsConjugation:
                    for (Elem g : fam.allowed.members)
                        if (!subgroup_conj_invariant(grp, z.local, grp.power(g, conj_power)))
                            throw VerificationError("compatibility failed under conjugation at vertex " +
                                                    std::to_string(fam.label));
                    break;
                case SymbolicVerdict::Unresolved:
                    for (Elem g : fam.allowed.members) {
                        if (g == 0) continue;
                        std::string w = exhaustive_check(code, z, fam, g, cfg);
                        if (!w.empty()) throw VerificationError("per-check compatibility failed: " + w);
                    }
                    break;
            }
        }
}

bool is_covariant(const GroupCssCode& code) {
    const FiniteGroup& grp = *code.group;
    if (grp.is_abelian()) return true;  // conjugation acts trivially
    for (const XCheckFamily& fam : code.x_families)
        if (!is_normal(grp, fam.allowed)) return false;
    // group Z-checks by word; each group's subgroup set must be closed under
    // conjugation
    std::map<std::vector<int>, std::set<std::vector<Elem>>> by_word;
    for (const ZCheck& z : code.z_checks) by_word[word_to_literals(z.word)].insert(z.local.members);
    for (const auto& [w, subs] : by_word)
        for (const auto& members : subs) {
            Subgroup k = subgroup_from_members(grp, members);
            for (Elem g = 1; g < grp.order(); ++g) {
                Subgroup kq = conjugate_subgroup(grp, k, g);
                if (!subs.count(kq.members)) return false;
            }
        }
    return true;
}

std::vector<ZCheckStatus> z_check_simple_reduction(const GroupCssCode& code, const RunConfig& cfg) {
    const FiniteGroup& grp = *code.group;
    if (grp.is_abelian() || !is_simple(grp))
        throw ValidationError("z_check_simple_reduction requires a non-Abelian simple group");
    if (!is_covariant(code)) throw ValidationError("z_check_simple_reduction requires a covariant code");
    std::vector<ZCheckStatus> out;
    for (const ZCheck& z : code.z_checks) {
        auto support = word_support(z.word);
        long long total;
        if (!pow_within(grp.order(), (int)support.size(), cfg.config_budget, &total))
            throw BudgetError("z_check_simple_reduction: check support too large");
        // attainable word values that satisfy the check
        std::vector<Elem> attained;
        std::vector<char> seen(grp.order(), 0);
        std::vector<Elem> config(code.n, 0);
        for (long long it = 0; it < total; ++it) {
            long long x = it;
            for (int s : support) {
                config[s] = (Elem)(x % grp.order());
                x /= grp.order();
            }
            Elem v = z_word_value(code, z, config);
            if (z.local.contains(v) && !seen[v]) {
                seen[v] = 1;
                attained.push_back(v);
            }
        }
        Subgroup n = normal_closure(grp, attained);
        if (n.is_trivial())
            out.push_back(ZCheckStatus::Trivial);
        else if (n.order() == grp.order() && z.local.is_full())
            out.push_back(ZCheckStatus::Removable);
        else
            throw VerificationError("Z-check has a non-normal effective subgroup; not reducible");
    }
    return out;
}

GroupCssCode qubit_embedding_code(const GroupPtr& g, Elem h) {
    if (h == 0 || g->mul(h, h) != 0) throw ValidationError("need an order-2 element");
    GroupCssCode code;
    code.group = g;
    code.n = 4;
    Subgroup z2 = subgroup_closure(*g, {h});
    for (int q = 0; q < 4; ++q) {
        ZCheck z;
        z.word.letters.push_back({q, 1});
        z.local = z2;
        code.z_checks.push_back(std::move(z));
    }
    ZCheck all;
    for (int q = 0; q < 4; ++q) all.word.letters.push_back({q, 1});
    all.local = trivial_subgroup(*g);
    code.z_checks.push_back(std::move(all));
    XCheckFamily fam;
    fam.label = 0;
    for (int q = 0; q < 4; ++q) fam.actions.emplace_back(q, Side::Left);
    fam.allowed = z2;
    code.x_families.push_back(std::move(fam));
    return code;
}

}  // namespace groupcss

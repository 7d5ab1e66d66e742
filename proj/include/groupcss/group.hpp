#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "groupcss/common.hpp"

namespace groupcss {

using Elem = int;

struct ConjugacyClasses {
    std::vector<std::vector<Elem>> classes;  // partition of {0..N-1}
    std::vector<int> class_of;               // length N
};

// Exact finite group given by its Cayley table.  Element 0 is always the
// identity (constructors relabel to enforce this).  Immutable after
// construction; derived structure is cached behind call_once so instances can
// be shared across threads.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<std::uint16_t> table,
                std::string spec_json = "", std::vector<int> cyclic_factors = {},
                std::vector<std::string> labels = {});

    int order() const { return n_; }
    Elem mul(Elem a, Elem b) const { return table_[(std::size_t)a * n_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    Elem power(Elem g, long long k) const;

    const std::string& spec_json() const { return spec_json_; }
    // nonempty iff the group was built as a product of cyclic factors, in
    // mixed-radix element order (last factor fastest)
    const std::vector<int>& cyclic_factors() const { return cyclic_factors_; }
    std::string label(Elem g) const;

    bool is_abelian() const;
    const ConjugacyClasses& conjugacy_classes() const;

private:
    int n_;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inv_;
    std::string spec_json_;
    std::vector<int> cyclic_factors_;
    std::vector<std::string> labels_;

    mutable std::once_flag abelian_once_, classes_once_;
    mutable bool abelian_ = false;
    mutable ConjugacyClasses classes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup as sorted member list plus membership bitmask.  Holds a non-owning
// pointer to the parent group, which must outlive it.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<Elem> members;
    std::vector<char> mask;

    bool contains(Elem g) const { return mask[(std::size_t)g] != 0; }
    int order() const { return (int)members.size(); }
    bool is_trivial() const { return members.size() == 1; }
    bool is_full() const { return parent && (int)members.size() == parent->order(); }
};

// ---- constructors ------------------------------------------------------

GroupPtr cyclic_group(int m);
GroupPtr power_group(int m, int l, int order_cap = RunConfig{}.order_cap);
GroupPtr dihedral_group(int order);  // order = 2m, relations r^m = s^2 = (sr)^2 = 1
GroupPtr symmetric_group(int n, int order_cap = RunConfig{}.order_cap);
GroupPtr alternating_group(int n, int order_cap = RunConfig{}.order_cap);
GroupPtr psl2_group(int p, int order_cap = RunConfig{}.order_cap);  // p prime
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b,
                       int order_cap = RunConfig{}.order_cap);
GroupPtr table_group(int order, std::vector<std::uint16_t> table);  // validated

// full validation: identity at 0, rows/cols permutations, inverses,
// associativity (exhaustive for N <= 256, seeded sampling above)
void validate_group(const FiniteGroup& g);

// ---- subgroup machinery ------------------------------------------------

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<Elem> members);
bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& members);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& generators);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Elem x);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
// greedy small generating set
std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
// no proper nontrivial normal subgroup; normal closures of every non-identity
// element
bool is_simple(const FiniteGroup& g);
// exhaustive subgroup enumeration, feasible for |G| <= 24 (test oracle)
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

}  // namespace groupcss

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupcss/code.hpp"
#include "groupcss/topology.hpp"

namespace groupcss {

// configurations in G^n packed base-|G| (budget-checked before use)
using ConfigCode = std::uint64_t;

ConfigCode encode_config(std::span<const Elem> config, int order);
std::vector<Elem> decode_config(ConfigCode code, int n, int order);

// exact admissible set C_Z, sorted.  OpenMP filters configuration ranges;
// _serial is the reference kernel.
std::vector<ConfigCode> admissible_set(const GroupCssCode& code, const RunConfig& cfg = {});
std::vector<ConfigCode> admissible_set_serial(const GroupCssCode& code, const RunConfig& cfg = {});

// admissible set partitioned into X-orbits (union-find; merge phase serial so
// results are deterministic).  Orbits are ordered by smallest member.
struct OracleState {
    GroupCssCode code;
    std::vector<ConfigCode> admissible;
    std::vector<int> orbit_of;              // per admissible index
    std::vector<std::vector<int>> orbits;   // admissible indices, sorted
    long long dim() const { return (long long)orbits.size(); }
    int config_index(ConfigCode c) const;   // -1 if not admissible
};
OracleState enumerate_codewords(const GroupCssCode& code, const RunConfig& cfg = {});

struct KlResult {
    bool violated = false;   // found a logical at weight <= m_max
    int distance = 0;        // smallest violating support size, or m_max when certified
    std::string witness;
};
// Z distance via marginal-multiset distinguishability over supports of size
// <= m_max (exact: equal marginals across codewords defeat every diagonal
// operator, a differing marginal is itself a violating indicator)
KlResult kl_distance_z(const OracleState& st, int m_max, const RunConfig& cfg = {});
// X distance by enumerating left/right multiplication patterns on supports of
// size <= m_max ((|G|^2 - 1)^m operators per support)
KlResult kl_distance_x(const OracleState& st, int m_max, const RunConfig& cfg = {});

// exact weighted superpositions over basis configurations, sorted by code
using State = std::vector<std::pair<ConfigCode, Rational>>;

State codeword_state(const OracleState& st, int orbit);  // uniform weight 1
State apply_logical(const LogicalOp& op, const GroupCssCode& code, const State& in);
State apply_x_element(const GroupCssCode& code, int family, Elem g, const State& in);
State apply_z_projector(const GroupCssCode& code, int z_check, const State& in);

// exact commutation of a logical with every check generator on C_Z
bool logical_commutes_with_checks(const OracleState& st, const LogicalOp& op);

}  // namespace groupcss

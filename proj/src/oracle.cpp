#include "groupcss/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groupcss {

ConfigCode encode_config(std::span<const Elem> config, int order) {
    ConfigCode c = 0;
    for (std::size_t i = config.size(); i-- > 0;) c = c * order + config[i];
    return c;
}

std::vector<Elem> decode_config(ConfigCode code, int n, int order) {
    std::vector<Elem> out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = (Elem)(code % order);
        code /= order;
    }
    return out;
}

namespace {

long long config_space(const GroupCssCode& code, const RunConfig& cfg) {
    long long total;
    if (!pow_within(code.group->order(), code.n, cfg.config_budget, &total))
        throw BudgetError("configuration space |G|^" + std::to_string(code.n) +
                          " exceeds budget " + std::to_string(cfg.config_budget));
    return total;
}

bool admissible(const GroupCssCode& code, std::span<const Elem> config) {
    for (const ZCheck& z : code.z_checks)
        if (!z.local.contains(z_word_value(code, z, config))) return false;
    return true;
}

}  // namespace

std::vector<ConfigCode> admissible_set_serial(const GroupCssCode& code, const RunConfig& cfg) {
    const long long total = config_space(code, cfg);
    const int order = code.group->order();
    std::vector<ConfigCode> out;
    std::vector<Elem> config(code.n, 0);
    for (long long it = 0; it < total; ++it) {
        if (admissible(code, config)) out.push_back((ConfigCode)it);
        // odometer increment matches the base-|G| encoding
        for (int q = 0; q < code.n; ++q) {
            if (++config[q] < order) break;
            config[q] = 0;
        }
    }
    return out;
}

std::vector<ConfigCode> admissible_set(const GroupCssCode& code, const RunConfig& cfg) {
    const long long total = config_space(code, cfg);
    const int order = code.group->order();
    const int chunks = 64;
    std::vector<std::vector<ConfigCode>> buckets(chunks);
#pragma omp parallel for schedule(dynamic)
    for (int chunk = 0; chunk < chunks; ++chunk) {
        long long lo = total * chunk / chunks, hi = total * (chunk + 1) / chunks;
        if (lo >= hi) continue;
        std::vector<Elem> config = decode_config((ConfigCode)lo, code.n, order);
        for (long long it = lo; it < hi; ++it) {
            if (admissible(code, config)) buckets[chunk].push_back((ConfigCode)it);
            for (int q = 0; q < code.n; ++q) {
                if (++config[q] < order) break;
                config[q] = 0;
            }
        }
    }
    std::vector<ConfigCode> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

int OracleState::config_index(ConfigCode c) const {
    auto it = std::lower_bound(admissible.begin(), admissible.end(), c);
    if (it == admissible.end() || *it != c) return -1;
    return (int)(it - admissible.begin());
}

OracleState enumerate_codewords(const GroupCssCode& code, const RunConfig& cfg) {
    OracleState st;
    st.code = code;
    st.admissible = admissible_set(code, cfg);
    const int n = (int)st.admissible.size();
    const int order = code.group->order();

    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };

    // small generating set per family
    std::vector<std::vector<Elem>> gens;
    for (const XCheckFamily& fam : code.x_families)
        gens.push_back(subgroup_generators(*code.group, fam.allowed));

    for (int i = 0; i < n; ++i) {
        std::vector<Elem> config = decode_config(st.admissible[i], code.n, order);
        for (std::size_t f = 0; f < code.x_families.size(); ++f) {
            for (Elem g : gens[f]) {
                std::vector<Elem> moved = config;
                apply_x_family(code, code.x_families[f], g, moved);
                int j = st.config_index(encode_config(moved, order));
                if (j < 0)
                    throw VerificationError("X-check maps an admissible configuration out of C_Z");
                int ri = find(i), rj = find(j);
                if (ri != rj) uf[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
    }
    st.orbit_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (st.orbit_of[r] < 0) {
            st.orbit_of[r] = (int)st.orbits.size();
            st.orbits.emplace_back();
        }
        st.orbit_of[i] = st.orbit_of[r];
        st.orbits[st.orbit_of[i]].push_back(i);
    }
    return st;
}

// ---- Knill-Laflamme ---------------------------------------------------------

namespace {

bool next_combination(std::vector<int>& idx, int n) {
    int m = (int)idx.size();
    for (int i = m - 1; i >= 0; --i) {
        if (idx[i] < n - m + i) {
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::string support_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

}  // namespace

KlResult kl_distance_z(const OracleState& st, int m_max, const RunConfig& cfg) {
    (void)cfg;
    if (st.dim() <= 1)
        throw ValidationError("kl_distance: codespace dimension <= 1, distance undefined");
    const int order = st.code.group->order();
    for (int m = 1; m <= m_max && m <= st.code.n; ++m) {
        std::vector<int> support(m);
        std::iota(support.begin(), support.end(), 0);
        do {
            // restriction multiset per codeword, compared as exact distributions
            std::vector<std::map<std::vector<Elem>, long long>> marg(st.orbits.size());
            for (std::size_t o = 0; o < st.orbits.size(); ++o)
                for (int i : st.orbits[o]) {
                    std::vector<Elem> full = decode_config(st.admissible[i], st.code.n, order);
                    std::vector<Elem> res(m);
                    for (int j = 0; j < m; ++j) res[j] = full[support[j]];
                    marg[o][res]++;
                }
            long long size0 = (long long)st.orbits[0].size();
            for (std::size_t o = 1; o < st.orbits.size(); ++o) {
                long long sizeo = (long long)st.orbits[o].size();
                bool same = marg[o].size() == marg[0].size();
                if (same)
                    for (const auto& [key, cnt] : marg[0]) {
                        auto it = marg[o].find(key);
                        if (it == marg[o].end() || it->second * size0 != cnt * sizeo) {
                            same = false;
                            break;
                        }
                    }
                if (!same) {
                    KlResult r;
                    r.violated = true;
                    r.distance = m;
                    r.witness = "codewords 0 and " + std::to_string(o) +
                                " have different marginals on support " + support_str(support);
                    return r;
                }
            }
        } while (next_combination(support, st.code.n));
    }
    return {false, m_max, "no diagonal operator on <= " + std::to_string(m_max) + " qudits distinguishes"};
}

KlResult kl_distance_x(const OracleState& st, int m_max, const RunConfig& cfg) {
    if (st.dim() <= 1)
        throw ValidationError("kl_distance: codespace dimension <= 1, distance undefined");
    const FiniteGroup& g = *st.code.group;
    const int order = g.order();
    const long long pair_count = (long long)order * order;

    for (int m = 1; m <= m_max && m <= st.code.n; ++m) {
        long long ops;
        if (!pow_within(pair_count - 1, m, cfg.op_budget, &ops))
            throw BudgetError("kl_distance_x: operator enumeration exceeds budget");
        std::vector<int> support(m);
        std::iota(support.begin(), support.end(), 0);
        do {
            long long found = -1;
#pragma omp parallel for schedule(dynamic)
            for (long long op = 0; op < ops; ++op) {
                if (found >= 0) continue;
                // digit k in base (|G|^2 - 1) picks the (left, right) pair for
                // support qudit k; value 0 = (identity, identity) is excluded
                std::vector<std::pair<Elem, Elem>> action(m);
                long long x = op;
                for (int k = 0; k < m; ++k) {
                    long long d = x % (pair_count - 1) + 1;
                    x /= (pair_count - 1);
                    action[k] = {(Elem)(d / order), (Elem)(d % order)};
                }
                // exact matrix elements between codewords
                long long diag_num = -1, diag_den = -1;
                bool bad = false;
                std::vector<long long> diag(st.orbits.size(), 0);
                for (int i = 0; i < (int)st.admissible.size() && !bad; ++i) {
                    std::vector<Elem> cfg2 = decode_config(st.admissible[i], st.code.n, order);
                    for (int k = 0; k < m; ++k) {
                        Elem& v = cfg2[support[k]];
                        v = g.mul(g.mul(action[k].first, v), g.inv(action[k].second));
                    }
                    int j = st.config_index(encode_config(cfg2, order));
                    if (j < 0) continue;  // leaves the admissible set
                    if (st.orbit_of[j] != st.orbit_of[i])
                        bad = true;  // nonzero off-diagonal element
                    else
                        diag[st.orbit_of[i]]++;
                }
                if (!bad) {
                    for (std::size_t o = 0; o < st.orbits.size(); ++o) {
                        long long num = diag[o], den = (long long)st.orbits[o].size();
                        if (diag_num < 0) {
                            diag_num = num;
                            diag_den = den;
                        } else if (num * diag_den != diag_num * den) {
                            bad = true;  // diagonal elements disagree
                            break;
                        }
                    }
                }
                if (bad) {
#pragma omp critical
                    if (found < 0 || op < found) found = op;
                }
            }
            if (found >= 0) {
                KlResult r;
                r.violated = true;
                r.distance = m;
                r.witness = "multiplication pattern " + std::to_string(found) + " on support " +
                            support_str(support) + " violates the distinguishability condition";
                return r;
            }
        } while (next_combination(support, st.code.n));
    }
    return {false, m_max, "no X-type operator on <= " + std::to_string(m_max) + " qudits violates"};
}

// ---- states -----------------------------------------------------------------

namespace {

State normalize_state(std::map<ConfigCode, Rational>&& acc) {
    State out;
    for (auto& [c, w] : acc)
        if (!w.is_zero()) out.emplace_back(c, w);
    return out;
}

}  // namespace

State codeword_state(const OracleState& st, int orbit) {
    State s;
    for (int i : st.orbits[orbit]) s.emplace_back(st.admissible[i], Rational(1));
    return s;
}

State apply_logical(const LogicalOp& op, const GroupCssCode& code, const State& in) {
    const int order = code.group->order();
    std::map<ConfigCode, Rational> acc;
    for (const auto& [c, w] : in) {
        for (const auto& [img, wt] : op.apply(decode_config(c, code.n, order))) {
            ConfigCode ic = encode_config(img, order);
            auto [it, fresh] = acc.emplace(ic, w * wt);
            if (!fresh) it->second = it->second + w * wt;
        }
    }
    return normalize_state(std::move(acc));
}

State apply_x_element(const GroupCssCode& code, int family, Elem g, const State& in) {
    const int order = code.group->order();
    std::map<ConfigCode, Rational> acc;
    for (const auto& [c, w] : in) {
        std::vector<Elem> config = decode_config(c, code.n, order);
        apply_x_family(code, code.x_families[family], g, config);
        ConfigCode ic = encode_config(config, order);
        auto [it, fresh] = acc.emplace(ic, w);
        if (!fresh) it->second = it->second + w;
    }
    return normalize_state(std::move(acc));
}

State apply_z_projector(const GroupCssCode& code, int z_check, const State& in) {
    const int order = code.group->order();
    const ZCheck& z = code.z_checks[z_check];
    std::map<ConfigCode, Rational> acc;
    for (const auto& [c, w] : in) {
        std::vector<Elem> config = decode_config(c, code.n, order);
        if (z.local.contains(z_word_value(code, z, config))) acc.emplace(c, w);
    }
    return normalize_state(std::move(acc));
}

bool logical_commutes_with_checks(const OracleState& st, const LogicalOp& op) {
    const GroupCssCode& code = st.code;
    const FiniteGroup& g = *code.group;
    for (int i = 0; i < (int)st.admissible.size(); ++i) {
        State basis{{st.admissible[i], Rational(1)}};
        State op_first = apply_logical(op, code, basis);
        for (std::size_t f = 0; f < code.x_families.size(); ++f) {
            for (Elem x : subgroup_generators(g, code.x_families[f].allowed)) {
                State a = apply_x_element(code, (int)f, x, op_first);
                State b = apply_logical(op, code, apply_x_element(code, (int)f, x, basis));
                if (a != b) return false;
            }
        }
        for (int z = 0; z < (int)code.z_checks.size(); ++z) {
            State a = apply_z_projector(code, z, op_first);
            State b = apply_logical(op, code, apply_z_projector(code, z, basis));
            if (a != b) return false;
        }
    }
    return true;
}

}  // namespace groupcss

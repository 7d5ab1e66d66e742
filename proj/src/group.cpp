#include "groupcss/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace groupcss {

bool pow_within(long long base, int exp, long long limit, long long* out) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && v > limit / base) return false;
        v *= base;
    }
    if (out) *out = v;
    return v <= limit;
}

RunConfig RunConfig::from_env() {
    RunConfig cfg;
    if (const char* env = std::getenv("GROUPCSS_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) {
            cfg.config_budget = v;
            cfg.hom_budget = v;
            cfg.op_budget = v;
            cfg.law_budget = v;
        }
    }
    return cfg;
}

FiniteGroup::FiniteGroup(int order, std::vector<std::uint16_t> table,
                         std::string spec_json, std::vector<int> cyclic_factors,
                         std::vector<std::string> labels)
    : n_(order),
      table_(std::move(table)),
      spec_json_(std::move(spec_json)),
      cyclic_factors_(std::move(cyclic_factors)),
      labels_(std::move(labels)) {
    if (n_ <= 0) throw ValidationError("group order must be positive");
    if (table_.size() != (std::size_t)n_ * n_)
        throw ValidationError("Cayley table size does not match order");
    inv_.assign(n_, 0);
    for (Elem g = 0; g < n_; ++g) {
        bool found = false;
        for (Elem h = 0; h < n_; ++h) {
            if (mul(g, h) == 0) {
                inv_[g] = (std::uint16_t)h;
                found = true;
                break;
            }
        }
        if (!found) throw ValidationError("element " + std::to_string(g) + " has no inverse");
    }
}

Elem FiniteGroup::power(Elem g, long long k) const {
    if (k < 0) return power(inv(g), -k);
    Elem acc = 0, base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

std::string FiniteGroup::label(Elem g) const {
    if ((std::size_t)g < labels_.size() && !labels_[g].empty()) return labels_[g];
    return std::to_string(g);
}

bool FiniteGroup::is_abelian() const {
    std::call_once(abelian_once_, [this] {
        abelian_ = true;
        for (Elem a = 0; a < n_ && abelian_; ++a)
            for (Elem b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) {
                    abelian_ = false;
                    break;
                }
    });
    return abelian_;
}

const ConjugacyClasses& FiniteGroup::conjugacy_classes() const {
    std::call_once(classes_once_, [this] {
        classes_.class_of.assign(n_, -1);
        for (Elem x = 0; x < n_; ++x) {
            if (classes_.class_of[x] >= 0) continue;
            int id = (int)classes_.classes.size();
            std::vector<Elem> cls;
            for (Elem g = 0; g < n_; ++g) {
                Elem y = conj(g, x);
                if (classes_.class_of[y] < 0) {
                    classes_.class_of[y] = id;
                    cls.push_back(y);
                }
            }
            std::sort(cls.begin(), cls.end());
            classes_.classes.push_back(std::move(cls));
        }
    });
    return classes_;
}

// ---- validation ---------------------------------------------------------

void validate_group(const FiniteGroup& g) {
    const int n = g.order();
    for (Elem a = 0; a < n; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw ValidationError("element 0 is not the identity");
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (Elem b = 0; b < n; ++b) {
            Elem r = g.mul(a, b), c = g.mul(b, a);
            if (r < 0 || r >= n || c < 0 || c >= n)
                throw ValidationError("table entry out of range");
            if (seen_row[r]++) throw ValidationError("row " + std::to_string(a) + " is not a permutation");
            if (seen_col[c]++) throw ValidationError("column " + std::to_string(a) + " is not a permutation");
        }
        if (g.mul(a, g.inv(a)) != 0) throw ValidationError("bad inverse");
    }
    if (n <= 256) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw ValidationError("associativity fails at (" + std::to_string(a) +
                                              "," + std::to_string(b) + "," + std::to_string(c) + ")");
    } else {
        SplitMix64 rng(0x61737363ull);  // fixed seed: validation is deterministic
        for (int t = 0; t < 200000; ++t) {
            Elem a = (Elem)rng.below(n), b = (Elem)rng.below(n), c = (Elem)rng.below(n);
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                throw ValidationError("associativity fails (sampled)");
        }
    }
}

// ---- constructors -------------------------------------------------------

namespace {

std::vector<std::uint16_t> ident_relabel(int n, const std::vector<std::uint16_t>& table, int id) {
    // swap element `id` with 0 so the identity sits at index 0
    if (id == 0) return table;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[0], perm[id]);
    std::vector<std::uint16_t> out((std::size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[(std::size_t)a * n + b] =
                (std::uint16_t)perm[table[(std::size_t)perm[a] * n + perm[b]]];
    return out;
}

void check_cap(long long order, int cap, const std::string& what) {
    if (order > cap)
        throw ValidationError(what + ": order " + std::to_string(order) +
                              " exceeds cap " + std::to_string(cap));
}

}  // namespace

GroupPtr cyclic_group(int m) {
    if (m <= 0) throw ValidationError("cyclic: m must be positive");
    std::vector<std::uint16_t> t((std::size_t)m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[(std::size_t)a * m + b] = (std::uint16_t)((a + b) % m);
    return std::make_shared<FiniteGroup>(m, std::move(t),
                                         "{\"kind\":\"cyclic\",\"m\":" + std::to_string(m) + "}",
                                         std::vector<int>{m});
}

GroupPtr power_group(int m, int l, int order_cap) {
    if (m <= 0 || l <= 0) throw ValidationError("power: m, l must be positive");
    long long n = 1;
    for (int i = 0; i < l; ++i) {
        n *= m;
        check_cap(n, order_cap, "power");
    }
    auto digits = [&](int x) {
        std::vector<int> d(l);
        for (int i = l - 1; i >= 0; --i) { d[i] = x % m; x /= m; }
        return d;
    };
    std::vector<std::uint16_t> t((std::size_t)n * n);
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = digits(b);
            int idx = 0;
            for (int i = 0; i < l; ++i) idx = idx * m + (da[i] + db[i]) % m;
            t[(std::size_t)a * n + b] = (std::uint16_t)idx;
        }
    }
    return std::make_shared<FiniteGroup>(
        (int)n, std::move(t),
        "{\"kind\":\"power\",\"l\":" + std::to_string(l) + ",\"m\":" + std::to_string(m) + "}",
        std::vector<int>(l, m));
}

GroupPtr dihedral_group(int order) {
    if (order < 2 || order % 2 != 0) throw ValidationError("dihedral: order must be even and >= 2");
    int m = order / 2;
    // element r^i s^j at index i + m*j
    auto idx = [&](int i, int j) { return i + m * j; };
    std::vector<std::uint16_t> t((std::size_t)order * order);
    std::vector<std::string> labels(order);
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = ((j1 ? m - i2 : i2) + i1) % m;  // s r^i = r^-i s
                    int j = (j1 + j2) % 2;
                    t[(std::size_t)idx(i1, j1) * order + idx(i2, j2)] = (std::uint16_t)idx(i, j);
                }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string s = i == 0 ? (j ? "s" : "e") : "r" + std::to_string(i) + (j ? "s" : "");
            labels[idx(i, j)] = s;
        }
    return std::make_shared<FiniteGroup>(order, std::move(t),
                                         "{\"kind\":\"dihedral\",\"order\":" + std::to_string(order) + "}",
                                         std::vector<int>{}, std::move(labels));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;  // lexicographic, identity first
}

bool perm_even(const std::vector<int>& p) {
    int n = (int)p.size(), sw = 0;
    std::vector<char> vis(n, 0);
    for (int i = 0; i < n; ++i) {
        if (vis[i]) continue;
        int len = 0;
        for (int j = i; !vis[j]; j = p[j]) { vis[j] = 1; ++len; }
        sw += len - 1;
    }
    return sw % 2 == 0;
}

GroupPtr perm_group(std::vector<std::vector<int>> elems, const std::string& spec, int order_cap) {
    long long n = (long long)elems.size();
    check_cap(n, order_cap, spec);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;
    std::vector<std::uint16_t> t((std::size_t)n * n);
    int deg = (int)elems[0].size();
    std::vector<int> comp(deg);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < deg; ++x) comp[x] = elems[a][elems[b][x]];  // (a*b)(x) = a(b(x))
            t[(std::size_t)a * n + b] = (std::uint16_t)index.at(comp);
        }
    return std::make_shared<FiniteGroup>((int)n, std::move(t), spec);
}

}  // namespace

GroupPtr symmetric_group(int n, int order_cap) {
    if (n <= 0) throw ValidationError("symmetric: n must be positive");
    long long fact = 1;
    for (int i = 2; i <= n; ++i) { fact *= i; check_cap(fact, order_cap, "symmetric"); }
    return perm_group(all_permutations(n),
                      "{\"kind\":\"symmetric\",\"n\":" + std::to_string(n) + "}", order_cap);
}

GroupPtr alternating_group(int n, int order_cap) {
    if (n <= 0) throw ValidationError("alternating: n must be positive");
    auto perms = all_permutations(n);
    std::vector<std::vector<int>> evens;
    for (auto& p : perms)
        if (perm_even(p)) evens.push_back(p);
    return perm_group(std::move(evens),
                      "{\"kind\":\"alternating\",\"n\":" + std::to_string(n) + "}", order_cap);
}

GroupPtr psl2_group(int p, int order_cap) {
    if (p < 2) throw ValidationError("psl2: p must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw ValidationError("psl2: p = " + std::to_string(p) + " is not prime");
    // 2x2 matrices over Z_p with det 1, modulo +-I; canonical representative is
    // the lexicographically smaller of (a,b,c,d) and its negation
    using Mat = std::array<int, 4>;
    auto canon = [&](Mat m) {
        Mat neg{(p - m[0]) % p, (p - m[1]) % p, (p - m[2]) % p, (p - m[3]) % p};
        return std::min(m, neg);
    };
    std::vector<Mat> elems;
    std::map<Mat, int> index;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    if (((a * d - b * c) % p + p) % p != 1 % p) continue;
                    Mat m = canon({a, b, c, d});
                    if (!index.count(m)) {
                        index[m] = (int)elems.size();
                        elems.push_back(m);
                    }
                }
    long long n = (long long)elems.size();
    check_cap(n, order_cap, "psl2");
    std::vector<std::uint16_t> t((std::size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Mat &x = elems[i], &y = elems[j];
            Mat prod = canon({(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                              (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p});
            t[(std::size_t)i * n + j] = (std::uint16_t)index.at(prod);
        }
    int id = index.at(canon({1, 0, 0, 1}));
    t = ident_relabel((int)n, t, id);
    return std::make_shared<FiniteGroup>((int)n, std::move(t),
                                         "{\"kind\":\"psl2\",\"p\":" + std::to_string(p) + "}");
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b, int order_cap) {
    long long n = (long long)a->order() * b->order();
    check_cap(n, order_cap, "product");
    int nb = b->order();
    std::vector<std::uint16_t> t((std::size_t)n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            t[(std::size_t)x * n + y] = (std::uint16_t)(a->mul(xa, ya) * nb + b->mul(xb, yb));
        }
    std::vector<int> factors;
    if (!a->cyclic_factors().empty() && !b->cyclic_factors().empty()) {
        factors = a->cyclic_factors();
        factors.insert(factors.end(), b->cyclic_factors().begin(), b->cyclic_factors().end());
    }
    std::string spec = "{\"kind\":\"product\",\"a\":" + a->spec_json() + ",\"b\":" + b->spec_json() + "}";
    return std::make_shared<FiniteGroup>((int)n, std::move(t), spec, std::move(factors));
}

GroupPtr table_group(int order, std::vector<std::uint16_t> table) {
    if (order <= 0 || table.size() != (std::size_t)order * order)
        throw ValidationError("table: size mismatch");
    // locate the identity and relabel it to 0
    int id = -1;
    for (int e = 0; e < order && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < order; ++a)
            if (table[(std::size_t)e * order + a] != a || table[(std::size_t)a * order + e] != a) {
                ok = false;
                break;
            }
        if (ok) id = e;
    }
    if (id < 0) throw ValidationError("table: no identity element");
    auto g = std::make_shared<FiniteGroup>(order, ident_relabel(order, table, id),
                                           "{\"kind\":\"table\",\"order\":" + std::to_string(order) + "}");
    validate_group(*g);
    return g;
}

// ---- subgroups ----------------------------------------------------------

Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h;
    h.parent = &g;
    h.mask.assign(g.order(), 0);
    for (Elem m : members) {
        if (m < 0 || m >= g.order()) throw ValidationError("subgroup member out of range");
        h.mask[m] = 1;
    }
    h.members = std::move(members);
    if (h.members.empty() || h.members[0] != 0)
        throw ValidationError("subgroup must contain the identity");
    for (Elem a : h.members) {
        if (!h.mask[g.inv(a)]) throw ValidationError("subgroup not closed under inverse");
        for (Elem b : h.members)
            if (!h.mask[g.mul(a, b)]) throw ValidationError("subgroup not closed under product");
    }
    if (g.order() % h.order() != 0)
        throw ValidationError("subgroup order does not divide group order");
    return h;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& members) {
    try {
        subgroup_from_members(g, members);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return subgroup_from_members(g, {0}); }

Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<Elem> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return subgroup_from_members(g, std::move(all));
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators) {
    std::vector<char> mask(g.order(), 0);
    std::vector<Elem> stack{0}, members{0};
    mask[0] = 1;
    auto push = [&](Elem x) {
        if (!mask[x]) {
            mask[x] = 1;
            stack.push_back(x);
            members.push_back(x);
        }
    };
    for (Elem x : generators) push(x);
    for (std::size_t i = 0; i < stack.size(); ++i) {
        Elem a = stack[i];
        push(g.inv(a));
        for (Elem b : generators) push(g.mul(a, b));
        // products with generators on the left close the set too since it
        // already contains inverses
        for (Elem b : generators) push(g.mul(b, a));
    }
    return subgroup_from_members(g, std::move(members));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& generators) {
    std::vector<Elem> gens;
    for (Elem x : generators)
        for (Elem c = 0; c < g.order(); ++c) gens.push_back(g.conj(c, x));
    return subgroup_closure(g, gens);
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Elem x) {
    std::vector<Elem> members;
    members.reserve(h.members.size());
    for (Elem m : h.members) members.push_back(g.conj(x, m));
    return subgroup_from_members(g, std::move(members));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem m : h.members)
            if (!h.contains(g.conj(x, m))) return false;
    return true;
}

std::vector<Elem> subgroup_generators(const FiniteGroup& g, const Subgroup& h) {
    std::vector<Elem> gens;
    Subgroup cur = trivial_subgroup(g);
    for (Elem m : h.members) {
        if (cur.contains(m)) continue;
        gens.push_back(m);
        cur = subgroup_closure(g, gens);
        if (cur.order() == h.order()) break;
    }
    return gens;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<Elem> members;
    for (Elem x = 0; x < g.order(); ++x) {
        bool central = true;
        for (Elem y = 0; y < g.order() && central; ++y)
            if (g.mul(x, y) != g.mul(y, x)) central = false;
        if (central) members.push_back(x);
    }
    return subgroup_from_members(g, std::move(members));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> gens;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) {
            Elem c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            if (!seen[c]) {
                seen[c] = 1;
                gens.push_back(c);
            }
        }
    return subgroup_closure(g, gens);
}

bool is_simple(const FiniteGroup& g) {
    if (g.order() == 1) return false;
    for (Elem x = 1; x < g.order(); ++x) {
        Subgroup n = normal_closure(g, {x});
        if (n.order() != g.order()) return false;  // proper nontrivial normal subgroup
    }
    return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    if (g.order() > 24) throw BudgetError("all_subgroups: |G| > 24");
    std::set<std::vector<Elem>> seen;
    std::vector<Subgroup> out;
    std::vector<std::vector<Elem>> frontier{{0}};
    seen.insert({0});
    out.push_back(trivial_subgroup(g));
    while (!frontier.empty()) {
        std::vector<std::vector<Elem>> next;
        for (const auto& members : frontier) {
            for (Elem x = 1; x < g.order(); ++x) {
                if (std::binary_search(members.begin(), members.end(), x)) continue;
                std::vector<Elem> gens = members;
                gens.push_back(x);
                Subgroup h = subgroup_closure(g, gens);
                if (seen.insert(h.members).second) {
                    next.push_back(h.members);
                    out.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace groupcss

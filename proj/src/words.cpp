#include "groupcss/words.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace groupcss {

GroupWord word_from_literals(const std::vector<int>& lits) {
    GroupWord w;
    for (int v : lits) {
        if (v == 0) throw ValidationError("word literal 0 is invalid (1-based)");
        w.letters.push_back({std::abs(v) - 1, v > 0 ? 1 : -1});
    }
    return w;
}

std::vector<int> word_to_literals(const GroupWord& w) {
    std::vector<int> out;
    for (const Letter& l : w.letters) out.push_back(l.exp * (l.var + 1));
    return out;
}

std::string word_str(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const Letter& l : w.letters) {
        if (!s.empty()) s += ".";
        s += "x" + std::to_string(l.var);
        if (l.exp < 0) s += "'";
    }
    return s;
}

GroupWord reduce_free(const GroupWord& w) {
    std::vector<Letter> stack;
    for (const Letter& l : w.letters) {
        if (!stack.empty() && stack.back().var == l.var && stack.back().exp == -l.exp)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return GroupWord(std::move(stack));
}

bool is_freely_trivial(const GroupWord& w) { return reduce_free(w).empty(); }

GroupWord reduce_cyclic(const GroupWord& w) {
    GroupWord r = reduce_free(w);
    while (r.letters.size() >= 2 && r.letters.front().var == r.letters.back().var &&
           r.letters.front().exp == -r.letters.back().exp) {
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
        r = reduce_free(r);
    }
    return r;
}

GroupWord canonical_rotation(const GroupWord& w) {
    GroupWord r = reduce_cyclic(w);
    if (r.letters.size() <= 1) return r;
    auto key = [](const GroupWord& x) { return word_to_literals(x); };
    GroupWord best = r;
    auto best_key = key(best);
    for (std::size_t i = 1; i < r.letters.size(); ++i) {
        std::rotate(r.letters.begin(), r.letters.begin() + 1, r.letters.end());
        auto k = key(r);
        if (k < best_key) {
            best = r;
            best_key = std::move(k);
        }
    }
    return best;
}

Elem evaluate_word(const GroupWord& w, const FiniteGroup& g, std::span<const Elem> assignment) {
    Elem acc = 0;
    for (const Letter& l : w.letters) {
        if (l.var < 0 || (std::size_t)l.var >= assignment.size())
            throw ValidationError("word arity exceeds assignment length");
        Elem v = assignment[l.var];
        acc = g.mul(acc, l.exp > 0 ? v : g.inv(v));
    }
    return acc;
}

namespace {

// iterate over G^r; returns false (early exit) if visit() returns false
bool for_each_assignment(int order, int r, long long budget,
                         const std::function<bool(std::span<const Elem>)>& visit) {
    long long total;
    if (!pow_within(order, r, budget, &total))
        throw BudgetError("law search: |G|^" + std::to_string(r) + " exceeds budget");
    std::vector<Elem> a(r, 0);
    for (long long i = 0; i < total; ++i) {
        long long x = i;
        for (int j = r - 1; j >= 0; --j) {
            a[j] = (Elem)(x % order);
            x /= order;
        }
        if (!visit(a)) return false;
    }
    return true;
}

}  // namespace

bool is_group_law(const GroupWord& w, const FiniteGroup& g, long long budget) {
    int r = std::max(w.arity(), 1);
    return for_each_assignment(g.order(), r, budget,
                               [&](std::span<const Elem> a) { return evaluate_word(w, g, a) == 0; });
}

std::optional<LawSearchResult> smallest_law_weight(const FiniteGroup& g, int max_weight,
                                                   long long budget) {
    // depth-first over canonical reduced words by increasing weight
    long long evals = 0;
    for (int weight = 1; weight <= max_weight; ++weight) {
        GroupWord w;
        w.letters.push_back({0, 1});
        std::optional<GroupWord> found;
        std::function<void(int)> extend = [&](int vars_used) {
            if (found) return;
            if (w.weight() == weight) {
                if (is_freely_trivial(w)) return;
                int r = w.arity();
                long long cost;
                if (!pow_within(g.order(), r, budget - evals, &cost))
                    throw BudgetError("smallest_law_weight: evaluation budget exceeded");
                evals += cost;
                if (is_group_law(w, g, budget)) found = w;
                return;
            }
            for (int v = 0; v <= vars_used && v < weight; ++v) {
                for (int e : {1, -1}) {
                    if (v == vars_used && e == -1) continue;  // new variable enters as +1
                    const Letter& last = w.letters.back();
                    if (last.var == v && last.exp == -e) continue;  // keep reduced
                    w.letters.push_back({v, e});
                    extend(std::max(vars_used, v + 1));
                    w.letters.pop_back();
                    if (found) return;
                }
            }
        };
        extend(1);
        if (found) return LawSearchResult{weight, *found};
    }
    return std::nullopt;
}

TwoCellDecomposition decompose_two_cells(const GroupWord& w) {
    if (!is_freely_trivial(w)) throw ValidationError("decompose_two_cells: word is not freely trivial");

    const int n = w.weight();
    // non-crossing pairing from the cancellation stack
    std::vector<int> partner(n, -1), parent(n, -1), depth(n, 0);
    {
        std::vector<int> stack;
        for (int i = 0; i < n; ++i) {
            if (!stack.empty() && w.letters[stack.back()].var == w.letters[i].var &&
                w.letters[stack.back()].exp == -w.letters[i].exp) {
                partner[stack.back()] = i;
                partner[i] = stack.back();
                stack.pop_back();
            } else {
                stack.push_back(i);
            }
        }
        // a pair is identified by its opening letter; nesting gives the tree
        std::vector<int> open;
        for (int i = 0; i < n; ++i) {
            if (partner[i] > i) {
                parent[i] = open.empty() ? -1 : open.back();
                depth[i] = (int)open.size() + 1;
                open.push_back(i);
            } else {
                open.pop_back();
            }
        }
    }

    // iterated pruning, deepest leaf first
    std::vector<char> removed(n, 0);
    std::vector<int> nchildren(n, 0);
    std::vector<int> pairs;
    for (int i = 0; i < n; ++i)
        if (partner[i] > i) {
            pairs.push_back(i);
            if (parent[i] >= 0) nchildren[parent[i]]++;
        }
    std::vector<char> alive(n, 0);
    for (int p : pairs) alive[p] = 1;
    int remaining = (int)pairs.size();

    TwoCellDecomposition out;
    auto emit = [&](const std::vector<int>& opens) {
        GroupWord cell;
        std::vector<int> idx;
        for (int o : opens) {
            idx.push_back(o);
            idx.push_back(partner[o]);
        }
        std::sort(idx.begin(), idx.end());
        for (int i : idx) cell.letters.push_back(w.letters[i]);
        out.cells.push_back(std::move(cell));
    };

    while (remaining > 0) {
        // deepest leftmost live leaf
        int leaf = -1;
        for (int p : pairs) {
            if (!alive[p] || nchildren[p] > 0) continue;
            if (leaf < 0 || depth[p] > depth[leaf]) leaf = p;
        }
        auto drop = [&](int p) {
            alive[p] = 0;
            --remaining;
            if (parent[p] >= 0) nchildren[parent[p]]--;
        };
        if (depth[leaf] % 2 == 1) {
            // starts at an odd position: a length-1 loop, own cell
            emit({leaf});
            drop(leaf);
        } else {
            // merge the parent pair with all of its children (all leaves here,
            // since `leaf` is deepest) into one depth-2 cell
            int p = parent[leaf];
            std::vector<int> group{p};
            for (int q : pairs)
                if (alive[q] && parent[q] == p) group.push_back(q);
            emit(group);
            for (int q : group) drop(q);
        }
    }
    return out;
}

}  // namespace groupcss

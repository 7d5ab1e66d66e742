#pragma once

#include <optional>
#include <span>
#include <vector>

#include "groupcss/group.hpp"

namespace groupcss {

struct Letter {
    int var = 0;  // variable (or qudit / generator) index
    int exp = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in formal variables x_0, x_1, ...; also used for Z-check words over
// qudits and for relators over presentation generators.
struct GroupWord {
    std::vector<Letter> letters;

    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    int weight() const { return (int)letters.size(); }
    int arity() const {
        int m = -1;
        for (const Letter& l : letters) m = std::max(m, l.var);
        return m + 1;
    }
    bool empty() const { return letters.empty(); }
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

// CLI literal format: signed 1-based integers, [1,-2,2,-1] = a b^-1 b a^-1
GroupWord word_from_literals(const std::vector<int>& lits);
std::vector<int> word_to_literals(const GroupWord& w);
std::string word_str(const GroupWord& w);

// cancel adjacent inverse pairs until none remain; idempotent
GroupWord reduce_free(const GroupWord& w);
bool is_freely_trivial(const GroupWord& w);
// rotate so the first and last letters do not cancel
GroupWord reduce_cyclic(const GroupWord& w);
// lexicographically minimal rotation of the reduced word (test helper)
GroupWord canonical_rotation(const GroupWord& w);

Elem evaluate_word(const GroupWord& w, const FiniteGroup& g, std::span<const Elem> assignment);

// exhaustive over |G|^arity assignments
bool is_group_law(const GroupWord& w, const FiniteGroup& g,
                  long long budget = RunConfig{}.law_budget);

// Least weight <= max_weight of a freely reduced, non-freely-trivial word that
// evaluates to 1 on all inputs.  Searches canonical words only: first letter is
// x_0^{+1}, each new variable enters with exponent +1 and in index order.
struct LawSearchResult {
    int weight;
    GroupWord witness;
};
std::optional<LawSearchResult> smallest_law_weight(const FiniteGroup& g, int max_weight,
                                                   long long budget = RunConfig{}.law_budget);

// Decomposition of a freely trivial word into 2-cell gluing words.  Cells come
// from iterated leaf pruning of the cancellation tree: a leaf pair starting at
// an odd position is a length-1 loop and is emitted on its own; otherwise the
// parent pair plus its (leaf) children form one depth-2 cell.  The letters of
// the cells partition the letters of the input.
struct TwoCellDecomposition {
    std::vector<GroupWord> cells;
};
TwoCellDecomposition decompose_two_cells(const GroupWord& w);

}  // namespace groupcss

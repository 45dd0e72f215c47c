#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fcg {

/// Interval-reversal symbol t(a,b), 0 <= a < b <= n.
struct Generator {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

/// All t(a,b) with a < b in lexicographic order; size C(n+1,2).
std::vector<Generator> generators(int n);

/// t(a,b) reverses the interval {a+1,...,b} of {1,...,n}: a+b+1-x inside,
/// fixed outside.
int perm_action(int n, Generator g, int x);

std::string format_generator(Generator g);
std::string format_word(const Word& w);
Generator parse_generator(std::string_view text);  // "a,b"
Word parse_word(std::string_view text);            // space-separated tokens

/// The relation word set Q_n: the three defining families closed under cyclic
/// permutation, materialised as a deduplicated sorted list with a prefix
/// index on the first two letters.
class RelationSet {
public:
    static RelationSet build(int n);

    int n() const { return n_; }
    const std::vector<Word>& words() const { return words_; }
    bool contains(const Word& w) const;

    struct Relation {
        int k = 0;  // half-length, in {2,3}
        const Word* word = nullptr;
    };
    /// The unique word of Q_n with prefix a,b. Throws DomainError when a = b,
    /// IntegrityError when the prefix index has no (or an ambiguous) match.
    Relation relation_through(Generator a, Generator b) const;

    /// Left-to-right fold of the wall-relabelling rule: a*a = a, a*b = third
    /// letter of the relation through (a,b).
    Generator star(Generator a, const Word& w) const;

private:
    int n_ = 0;
    std::vector<Word> words_;
    std::map<std::pair<Generator, Generator>, int> prefix_;
};

}  // namespace fcg

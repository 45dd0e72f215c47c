#include <doctest.h>

#include "fcg/errors.hpp"
#include "fcg/relations.hpp"

#include <map>
#include <set>

using namespace fcg;

namespace {

Generator g(int a, int b) { return {a, b}; }

// Independent oracle: scan the full word list for a prefix instead of using
// the prefix index.
const Word* prefix_scan(const RelationSet& q, Generator a, Generator b) {
    const Word* hit = nullptr;
    for (const Word& w : q.words()) {
        if (w[0] == a && w[1] == b) {
            REQUIRE(hit == nullptr);  // (tr29)-style uniqueness
            hit = &w;
        }
    }
    return hit;
}

}  // namespace

TEST_CASE("generator lists") {
    CHECK(generators(0).empty());
    CHECK(generators(2) == std::vector<Generator>{g(0, 1), g(0, 2), g(1, 2)});
    CHECK(generators(7).size() == 28);  // C(8,2)
    CHECK_THROWS_AS(generators(-1), DomainError);
}

TEST_CASE("permutation action") {
    CHECK(perm_action(3, g(1, 3), 1) == 1);
    CHECK(perm_action(3, g(1, 3), 2) == 3);
    CHECK_THROWS_AS(perm_action(3, g(1, 3), 0), DomainError);
    CHECK_THROWS_AS(perm_action(3, g(1, 3), 4), DomainError);
}

TEST_CASE("word text round trip") {
    Word w = parse_word("0,2 1,3 0,2 1,3 0,2 1,3");
    CHECK(w.size() == 6);
    CHECK(format_word(w) == "0,2 1,3 0,2 1,3 0,2 1,3");
    CHECK_THROWS_AS(parse_generator("3,1"), MalformedInput);
    CHECK_THROWS_AS(parse_generator("x"), MalformedInput);
}

TEST_CASE("small relation sets") {
    CHECK(RelationSet::build(0).words().empty());
    CHECK(RelationSet::build(1).words().empty());

    // Hand enumeration: one commuting word (2 shifts) and one nested word
    // (4 shifts).
    RelationSet q2 = RelationSet::build(2);
    std::set<std::string> words;
    for (const Word& w : q2.words()) words.insert(format_word(w));
    std::set<std::string> expected{
        "0,1 1,2 0,1 1,2", "1,2 0,1 1,2 0,1",
        "0,2 1,2 0,2 0,1", "1,2 0,2 0,1 0,2",
        "0,2 0,1 0,2 1,2", "0,1 0,2 1,2 0,2",
    };
    CHECK(words == expected);
}

TEST_CASE("relation_through matches a prefix scan") {
    RelationSet q3 = RelationSet::build(3);
    for (Generator a : generators(3)) {
        for (Generator b : generators(3)) {
            if (a == b) continue;
            const Word* scanned = prefix_scan(q3, a, b);
            REQUIRE(scanned != nullptr);
            auto rel = q3.relation_through(a, b);
            CHECK(*rel.word == *scanned);
            CHECK(rel.k * 2 == static_cast<int>(scanned->size()));
        }
    }

    CHECK(q3.relation_through(g(0, 1), g(2, 3)).k == 2);
    CHECK(*q3.relation_through(g(0, 1), g(2, 3)).word ==
          Word{g(0, 1), g(2, 3), g(0, 1), g(2, 3)});
    CHECK(q3.relation_through(g(0, 2), g(1, 3)).k == 3);
    CHECK(*q3.relation_through(g(0, 2), g(1, 3)).word ==
          Word{g(0, 2), g(1, 3), g(0, 2), g(1, 3), g(0, 2), g(1, 3)});
    CHECK(q3.relation_through(g(1, 3), g(0, 3)).k == 2);
    CHECK((*q3.relation_through(g(1, 3), g(0, 3)).word)[2] == g(0, 2));
    CHECK_THROWS_AS(q3.relation_through(g(0, 1), g(0, 1)), DomainError);
}

TEST_CASE("star operation") {
    RelationSet q2 = RelationSet::build(2);
    CHECK(q2.star(g(0, 1), {g(0, 1)}) == g(0, 1));
    CHECK(q2.star(g(1, 2), {g(0, 2)}) == g(0, 1));
    RelationSet q6 = RelationSet::build(6);
    CHECK(q6.star(g(0, 3), {g(2, 6)}) == g(0, 5));
}

TEST_CASE("star involution and relation fixedness up to n=5") {
    for (int n = 2; n <= 5; ++n) {
        RelationSet q = RelationSet::build(n);
        auto gens = generators(n);
        for (Generator a : gens)
            for (Generator b : gens) {
                if (a == b) continue;
                CHECK(q.star(q.star(a, {b}), {b}) == a);
            }
        for (Generator a : gens)
            for (const Word& w : q.words()) CHECK(q.star(a, w) == a);
    }
}

TEST_CASE("no relation word begins with a repeated letter") {
    RelationSet q = RelationSet::build(5);
    for (const Word& w : q.words()) CHECK(w[0] != w[1]);
}

TEST_CASE("reversal closure is computed, not imposed") {
    RelationSet q = RelationSet::build(7);
    for (const Word& w : q.words()) {
        Word rev(w.rbegin(), w.rend());
        CHECK(q.contains(rev));
    }
}

TEST_CASE("relation words act trivially on points") {
    for (int n = 2; n <= 5; ++n) {
        RelationSet q = RelationSet::build(n);
        for (const Word& w : q.words()) {
            for (int x = 1; x <= n; ++x) {
                int y = x;
                for (Generator letter : w) y = perm_action(n, letter, y);
                CHECK(y == x);
            }
        }
    }
}

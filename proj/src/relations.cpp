#include "fcg/relations.hpp"

#include "fcg/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fcg {

std::vector<Generator> generators(int n) {
    if (n < 0) throw DomainError("generators: n must be non-negative");
    std::vector<Generator> out;
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
    return out;
}

int perm_action(int n, Generator g, int x) {
    if (x < 1 || x > n) throw DomainError("perm_action: x out of range");
    if (g.a + 1 <= x && x <= g.b) return g.a + g.b + 1 - x;
    return x;
}

std::string format_generator(Generator g) {
    std::ostringstream os;
    os << g.a << ',' << g.b;
    return os.str();
}

std::string format_word(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << format_generator(w[i]);
    }
    return os.str();
}

Generator parse_generator(std::string_view text) {
    size_t comma = text.find(',');
    if (comma == std::string_view::npos)
        throw MalformedInput("generator token '" + std::string(text) + "' is not of the form a,b");
    int a, b;
    try {
        a = std::stoi(std::string(text.substr(0, comma)));
        b = std::stoi(std::string(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw MalformedInput("generator token '" + std::string(text) + "' is not of the form a,b");
    }
    if (a < 0 || a >= b)
        throw MalformedInput("generator token '" + std::string(text) + "' needs 0 <= a < b");
    return {a, b};
}

Word parse_word(std::string_view text) {
    Word w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) w.push_back(parse_generator(tok));
    return w;
}

RelationSet RelationSet::build(int n) {
    if (n < 0) throw DomainError("RelationSet: n must be non-negative");
    std::set<Word> words;
    auto add_with_shifts = [&](Word w) {
        for (size_t i = 0; i < w.size(); ++i) {
            words.insert(w);
            std::rotate(w.begin(), w.begin() + 1, w.end());
        }
    };

    // Family 1: disjoint or abutting pairs commute.
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    add_with_shifts({{a, b}, {c, d}, {a, b}, {c, d}});

    // Family 2: nested pairs, x,y >= 0 with a < a+x+y < b.
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int x = 0; a + x < b; ++x)
                for (int y = 0; a + x + y < b; ++y) {
                    if (x + y == 0) continue;
                    add_with_shifts({{a, b}, {a + x, b - y}, {a, b}, {a + y, b - x}});
                }

    // Family 3: x,y,z > 0 with a+x+y+z = b.
    for (int a = 0; a <= n; ++a)
        for (int b = a + 3; b <= n; ++b)
            for (int x = 1; x <= b - a - 2; ++x)
                for (int y = 1; x + y <= b - a - 1; ++y) {
                    int z = b - a - x - y;
                    add_with_shifts({{a, b - z}, {a + y, b}, {a, b - x},
                                     {a + z, b}, {a, b - y}, {a + x, b}});
                }

    RelationSet q;
    q.n_ = n;
    q.words_.assign(words.begin(), words.end());
    for (size_t i = 0; i < q.words_.size(); ++i) {
        const Word& w = q.words_[i];
        auto key = std::make_pair(w[0], w[1]);
        auto [it, inserted] = q.prefix_.emplace(key, static_cast<int>(i));
        if (!inserted)
            throw IntegrityError("two relation words share the prefix " +
                                 format_generator(w[0]) + " " + format_generator(w[1]));
    }
    return q;
}

bool RelationSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

RelationSet::Relation RelationSet::relation_through(Generator a, Generator b) const {
    if (a == b) throw DomainError("relation_through: letters must be distinct");
    auto it = prefix_.find({a, b});
    if (it == prefix_.end())
        throw IntegrityError("no relation word with prefix " + format_generator(a) + " " +
                             format_generator(b));
    const Word& w = words_[it->second];
    return {static_cast<int>(w.size()) / 2, &w};
}

Generator RelationSet::star(Generator a, const Word& w) const {
    for (Generator b : w) {
        if (a == b) continue;  // a*a = a
        a = (*relation_through(a, b).word)[2];
    }
    return a;
}

}  // namespace fcg

#include "fcg/linear.hpp"

#include "fcg/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace fcg {

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

Int plain_mul(const Int& a, const Int& b) { return a * b; }
Int plain_sub(const Int& a, const Int& b) { return a - b; }
Int plain_add(const Int& a, const Int& b) { return a + b; }

long long abs_ll(long long x) { return x < 0 ? -x : x; }

template <class T>
struct Ops;

template <>
struct Ops<long long> {
    static long long mul(long long a, long long b) { return checked_mul(a, b); }
    static long long sub(long long a, long long b) { return checked_sub(a, b); }
    static long long add(long long a, long long b) { return checked_add(a, b); }
    static long long gcd(long long a, long long b) { return std::gcd(a, b); }
    static long long abs(long long a) { return abs_ll(a); }
};

template <>
struct Ops<Int> {
    static Int mul(const Int& a, const Int& b) { return plain_mul(a, b); }
    static Int sub(const Int& a, const Int& b) { return plain_sub(a, b); }
    static Int add(const Int& a, const Int& b) { return plain_add(a, b); }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
    static Int abs(const Int& a) { return boost::multiprecision::abs(a); }
};

template <class T>
struct Row {
    std::vector<T> c;
    bool strict = false;
};

// Divide a row by the gcd of its coefficients (sign preserved).
template <class T>
void reduce_row(Row<T>& r) {
    T g = 0;
    for (const T& x : r.c) g = Ops<T>::gcd(g, x);
    if (g == 0 || g == 1) return;
    for (T& x : r.c) x /= g;
}

template <class T>
bool zero_row(const Row<T>& r) {
    return std::all_of(r.c.begin(), r.c.end(), [](const T& x) { return x == 0; });
}

// Core elimination on inequality rows only; equalities already substituted.
template <class T>
bool fm_ineq(std::vector<Row<T>> rows, int dim) {
    std::vector<char> alive(dim, 1);
    int remaining = dim;
    for (;;) {
        // Drop trivial rows; detect contradictions.
        std::vector<Row<T>> next;
        for (Row<T>& r : rows) {
            if (zero_row(r)) {
                if (r.strict) return false;  // 0 > 0
                continue;
            }
            reduce_row(r);
            next.push_back(std::move(r));
        }
        // Dedupe identical coefficient vectors; strict wins.
        std::map<std::vector<T>, bool> dedup;
        for (Row<T>& r : next) {
            auto [it, inserted] = dedup.emplace(std::move(r.c), r.strict);
            if (!inserted) it->second = it->second || r.strict;
        }
        rows.clear();
        for (auto& [c, strict] : dedup) rows.push_back({c, strict});
        if (rows.empty() || remaining == 0) return true;

        // Pick the live variable with fewest pos*neg combinations.
        int best = -1;
        long long best_cost = std::numeric_limits<long long>::max();
        for (int j = 0; j < dim; ++j) {
            if (!alive[j]) continue;
            long long pos = 0, neg = 0;
            for (const Row<T>& r : rows) {
                if (r.c[j] > 0) ++pos;
                else if (r.c[j] < 0) ++neg;
            }
            long long cost = pos * neg - (pos + neg);
            if (cost < best_cost) {
                best_cost = cost;
                best = j;
            }
        }
        int j = best;
        alive[j] = 0;
        --remaining;

        std::vector<Row<T>> pos, neg, zero;
        for (Row<T>& r : rows) {
            if (r.c[j] > 0) pos.push_back(std::move(r));
            else if (r.c[j] < 0) neg.push_back(std::move(r));
            else zero.push_back(std::move(r));
        }
        rows = std::move(zero);
        for (const Row<T>& p : pos)
            for (const Row<T>& q : neg) {
                // (-q_j)*p + p_j*q ; both multipliers positive.
                Row<T> combined;
                combined.strict = p.strict || q.strict;
                combined.c.resize(dim);
                const T a = p.c[j];
                const T negb = Ops<T>::sub(T(0), q.c[j]);
                for (int idx = 0; idx < dim; ++idx)
                    combined.c[idx] = Ops<T>::add(Ops<T>::mul(negb, p.c[idx]),
                                                  Ops<T>::mul(a, q.c[idx]));
                rows.push_back(std::move(combined));
            }
    }
}

template <class T>
bool fm_run(const std::vector<Constraint>& system, int dim) {
    // Substitute equalities away.
    std::vector<Row<T>> eqs, ineqs;
    for (const Constraint& c : system) {
        Row<T> r;
        r.c.reserve(dim);
        for (const Int& x : c.coeffs) r.c.push_back(static_cast<T>(x));
        r.strict = c.rel == Rel::Greater;
        (c.rel == Rel::Eq ? eqs : ineqs).push_back(std::move(r));
    }
    while (!eqs.empty()) {
        Row<T> piv = std::move(eqs.back());
        eqs.pop_back();
        reduce_row(piv);
        int j = -1;
        for (int idx = 0; idx < dim; ++idx)
            if (piv.c[idx] != 0) { j = idx; break; }
        if (j < 0) continue;  // 0 = 0
        const T pj = piv.c[j];
        auto substitute = [&](Row<T>& r) {
            if (r.c[j] == 0) return;
            // |pj|*r - sgn(pj)*r_j*piv keeps the relation direction.
            const T scale = Ops<T>::abs(pj);
            const T factor = pj > 0 ? r.c[j] : Ops<T>::sub(T(0), r.c[j]);
            for (int idx = 0; idx < dim; ++idx)
                r.c[idx] = Ops<T>::sub(Ops<T>::mul(scale, r.c[idx]),
                                       Ops<T>::mul(factor, piv.c[idx]));
        };
        for (Row<T>& r : eqs) substitute(r);
        for (Row<T>& r : ineqs) substitute(r);
    }
    return fm_ineq(std::move(ineqs), dim);
}

}  // namespace

bool fm_feasible(const std::vector<Constraint>& system) {
    if (system.empty()) return true;
    const int dim = static_cast<int>(system.front().coeffs.size());
    for (const Constraint& c : system)
        if (static_cast<int>(c.coeffs.size()) != dim)
            throw MalformedInput("fm_feasible: constraint dimension mismatch");

    bool fits = true;
    for (const Constraint& c : system)
        for (const Int& x : c.coeffs)
            if (x > std::numeric_limits<long long>::max() / 4 ||
                x < std::numeric_limits<long long>::min() / 4)
                fits = false;
    if (fits) {
        try {
            return fm_run<long long>(system, dim);
        } catch (const Overflow&) {
            // fall through to exact big-integer pass
        }
    }
    return fm_run<Int>(system, dim);
}

}  // namespace fcg

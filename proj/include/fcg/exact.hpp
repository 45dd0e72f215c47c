#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <vector>

namespace fcg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Square integer matrix, column-major. Frames of standard realisations are
/// unimodular, so `long long` entries are ample for every fixture here; the
/// exact routines widen to Int internally.
struct IMat {
    int n = 0;
    std::vector<long long> a;  // a[c * n + r]

    IMat() = default;
    explicit IMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

    static IMat identity(int dim) {
        IMat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int r, int c) { return a[static_cast<size_t>(c) * n + r]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(c) * n + r]; }

    std::vector<long long> col(int c) const {
        return {a.begin() + static_cast<long>(c) * n, a.begin() + static_cast<long>(c + 1) * n};
    }

    friend bool operator==(const IMat&, const IMat&) = default;
    friend auto operator<=>(const IMat& x, const IMat& y) {
        if (auto c = x.n <=> y.n; c != 0) return c;
        return x.a <=> y.a;
    }
};

/// Exact determinant (Bareiss, fraction-free over Int).
Int det(const IMat& m);

/// Inverse of a matrix with det = ±1. Throws IntegrityError otherwise.
IMat inverse_unimodular(const IMat& m);

/// Exact solution of m·x = rhs. Throws IntegrityError on a singular matrix.
std::vector<Rat> solve(const IMat& m, const std::vector<long long>& rhs);

/// Divide by the gcd and make the first nonzero entry positive.
/// Zero vectors pass through unchanged.
void normalise_primitive(std::vector<Int>& v);

}  // namespace fcg

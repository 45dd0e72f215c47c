#include "fcg/exact.hpp"

#include "fcg/errors.hpp"

namespace fcg {

Int det(const IMat& m) {
    // Bareiss elimination; divisions are exact.
    const int n = m.n;
    if (n == 0) return 1;
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) w[r][c] = m.at(r, c);

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (w[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(w[k], w[p]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                w[r][c] = (w[r][c] * w[k][k] - w[r][k] * w[k][c]) / prev;
        prev = w[k][k];
    }
    return sign * w[n - 1][n - 1];
}

namespace {

// Gauss-Jordan over rationals; returns the inverse columns.
std::vector<std::vector<Rat>> rational_inverse(const IMat& m) {
    const int n = m.n;
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) w[r][c] = m.at(r, c);
        w[r][n + r] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (w[r][k] != 0) { p = r; break; }
        if (p < 0) throw IntegrityError("singular matrix");
        std::swap(w[k], w[p]);
        Rat piv = w[k][k];
        for (int c = 0; c < 2 * n; ++c) w[k][c] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == k || w[r][k] == 0) continue;
            Rat f = w[r][k];
            for (int c = k; c < 2 * n; ++c) w[r][c] -= f * w[k][c];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[r][c] = w[r][n + c];
    return inv;
}

}  // namespace

IMat inverse_unimodular(const IMat& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw IntegrityError("matrix is not unimodular");
    auto inv = rational_inverse(m);
    IMat out(m.n);
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c) {
            const Rat& x = inv[r][c];
            if (denominator(x) != 1) throw IntegrityError("unimodular inverse not integral");
            out.at(r, c) = static_cast<long long>(numerator(x));
        }
    return out;
}

std::vector<Rat> solve(const IMat& m, const std::vector<long long>& rhs) {
    const int n = m.n;
    if (static_cast<int>(rhs.size()) != n) throw MalformedInput("solve: dimension mismatch");
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) w[r][c] = m.at(r, c);
        w[r][n] = rhs[r];
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (w[r][k] != 0) { p = r; break; }
        if (p < 0) throw IntegrityError("singular matrix");
        std::swap(w[k], w[p]);
        Rat piv = w[k][k];
        for (int c = k; c <= n; ++c) w[k][c] /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == k || w[r][k] == 0) continue;
            Rat f = w[r][k];
            for (int c = k; c <= n; ++c) w[r][c] -= f * w[k][c];
        }
    }
    std::vector<Rat> x(n);
    for (int r = 0; r < n; ++r) x[r] = w[r][n];
    return x;
}

void normalise_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

}  // namespace fcg

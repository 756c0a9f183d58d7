#include "srgint/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace srgint {

void Partition::validate(std::size_t n) const {
    VertexSet seen(n);
    for (const auto& c : cells) {
        if (c.capacity() != n) throw std::invalid_argument("partition cell has wrong capacity");
        if (c.empty()) throw std::invalid_argument("partition has an empty cell");
        if (seen.intersects(c)) throw std::invalid_argument("partition cells overlap");
        seen |= c;
    }
    if (seen.count() != n) throw std::invalid_argument("partition does not cover the vertex set");
}

std::size_t Partition::cell_of(Vertex x) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].contains(x)) return i;
    throw std::out_of_range("vertex not in partition");
}

RationalMatrix quotient_matrix(const Graph& g, const Partition& p) {
    p.validate(g.order());
    const auto m = p.cells.size();
    RationalMatrix q(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& ci = p.cells[i];
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t total = 0;
            for (auto x = ci.first(); x < g.order(); x = ci.next(x + 1))
                total += g.neighbours(x).intersection_count(p.cells[j]);
            q[i][j] = Rational(static_cast<long long>(total), static_cast<long long>(ci.count()));
        }
    }
    return q;
}

std::optional<RationalMatrix> is_equitable(const Graph& g, const Partition& p) {
    p.validate(g.order());
    const auto m = p.cells.size();
    RationalMatrix q(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& ci = p.cells[i];
        for (std::size_t j = 0; j < m; ++j) {
            std::optional<std::size_t> d;
            for (auto x = ci.first(); x < g.order(); x = ci.next(x + 1)) {
                auto c = g.neighbours(x).intersection_count(p.cells[j]);
                if (!d) d = c;
                else if (*d != c) return std::nullopt;
            }
            q[i][j] = static_cast<long long>(*d);
        }
    }
    if (auto params = is_srg(g); params && is_connected(g) && !quotient_eigenvalues_in_spectrum(q, *params))
        throw std::logic_error("equitable quotient has an eigenvalue outside the graph spectrum");
    return q;
}

namespace {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const auto n = a.size();
    RationalMatrix c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

}  // namespace

bool quotient_eigenvalues_in_spectrum(const RationalMatrix& q, const SrgParams& params) {
    // m(x) = (x - k)(x^2 - (lambda - mu) x - (k - mu)); integer coefficients
    // even when the nontrivial eigenvalues are irrational.
    const auto n = q.size();
    auto shifted = [&](const RationalMatrix& base, const Rational& c) {
        RationalMatrix r = base;
        for (std::size_t i = 0; i < n; ++i) r[i][i] += c;
        return r;
    };
    const Rational b(params.lambda - params.mu), c(params.k - params.mu);
    auto q2 = multiply(q, q);
    RationalMatrix quad = q2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) quad[i][j] -= b * q[i][j];
    quad = shifted(quad, -c);
    auto m = multiply(shifted(q, Rational(-params.k)), quad);
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

Partition vertex_partition(const Graph& g, Vertex x) {
    if (!distance_layer(g, x, 3).empty()) throw std::domain_error("vertex_partition: eccentricity exceeds 2");
    auto n1 = distance_layer(g, x, 1), n2 = distance_layer(g, x, 2);
    if (n1.empty() || n2.empty()) throw std::domain_error("vertex_partition: eccentricity is not 2");
    if (n1.count() + n2.count() + 1 != g.order()) throw std::domain_error("vertex_partition: graph disconnected");
    VertexSet self(g.order());
    self.insert(x);
    return Partition{{self, n1, n2}};
}

std::vector<std::int64_t> integer_eigenvector(const RationalMatrix& q, const Rational& theta) {
    const auto n = q.size();
    RationalMatrix a = q;
    for (std::size_t i = 0; i < n; ++i) a[i][i] -= theta;
    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = row; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        const Rational lead = a[row][col];
        for (auto& x : a[row]) x /= lead;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    if (n - pivot_cols.size() != 1) throw std::domain_error("eigenspace is not one-dimensional");
    std::size_t free_col = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_col = c;
    std::vector<Rational> v(n);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free_col];

    BigInt l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<BigInt> w(n);
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = numerator(Rational(v[i] * l));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    std::vector<std::int64_t> out(n);
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] /= g;
        if (!sign && w[i] != 0) sign = w[i] > 0 ? 1 : -1;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::int64_t>(w[i] * sign);
    return out;
}

}  // namespace srgint

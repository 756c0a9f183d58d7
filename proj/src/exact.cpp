#include "srgint/exact.hpp"

#include <map>
#include <stdexcept>

namespace srgint {

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::gram_of_columns() const {
    IntMatrix g(cols_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::int64_t* row = &data_[r * cols_];
        for (std::size_t i = 0; i < cols_; ++i) {
            if (!row[i]) continue;
            for (std::size_t j = 0; j < cols_; ++j) g(i, j) += row[i] * row[j];
        }
    }
    return g;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            auto x = a(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += x * b(k, j);
        }
    return p;
}

namespace {

std::vector<std::vector<BigInt>> to_big(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

}  // namespace

bool is_positive_semidefinite(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("psd check: matrix not square");
    const auto n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("psd check: matrix not symmetric");

    // Fraction-free symmetric elimination restricted to diagonal pivots.
    // After eliminating a pivot set P, entry (i,j) equals det of the minor on
    // P+{i} x P+{j}; every division by the previous pivot is exact.
    auto a = to_big(m);
    std::vector<bool> alive(n, true);
    BigInt prev = 1;
    for (std::size_t step = 0; step < n; ++step) {
        // Drop indices whose Schur-complement row is zero; refute on bad diagonals.
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            if (a[i][i] < 0) return false;
            if (a[i][i] == 0) {
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[j] && a[i][j] != 0) return false;
                alive[i] = false;
                continue;
            }
            if (pivot == n) pivot = i;
        }
        if (pivot == n) return true;
        alive[pivot] = false;
        const BigInt p = a[pivot][pivot];
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i; j < n; ++j) {
                if (!alive[j]) continue;
                BigInt v = (p * a[i][j] - a[i][pivot] * a[pivot][j]) / prev;
                a[i][j] = v;
                a[j][i] = v;
            }
        }
        prev = p;
    }
    return true;
}

std::size_t exact_rank(const IntMatrix& m) {
    auto a = to_big(m);
    const auto rows = m.rows(), cols = m.cols();
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

BigInt exact_determinant(std::vector<std::vector<BigInt>> a) {
    const auto n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (a[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t j = k + 1; j < n; ++j) a[r][j] = (a[k][k] * a[r][j] - a[r][k] * a[k][j]) / prev;
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    return n == 0 ? BigInt(1) : sign * a[n - 1][n - 1];
}

namespace {

// a*x + b*y = g = gcd(x, y) >= 0
void ext_gcd(const BigInt& x, const BigInt& y, BigInt& g, BigInt& a, BigInt& b) {
    BigInt old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    a = old_s;
    b = old_t;
}

}  // namespace

std::vector<std::vector<BigInt>> hermite_basis(const IntMatrix& m) {
    const auto cols = m.cols();
    std::map<std::size_t, std::vector<BigInt>> basis;  // pivot column -> row
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<BigInt> v(cols);
        for (std::size_t c = 0; c < cols; ++c) v[c] = m(r, c);
        for (std::size_t c = 0; c < cols; ++c) {
            if (v[c] == 0) continue;
            auto it = basis.find(c);
            if (it == basis.end()) {
                if (v[c] < 0)
                    for (auto& x : v) x = -x;
                basis.emplace(c, std::move(v));
                break;
            }
            auto& row = it->second;
            BigInt g, a, b;
            ext_gcd(row[c], v[c], g, a, b);
            const BigInt pr = row[c] / g, pv = v[c] / g;
            std::vector<BigInt> new_row(cols), rest(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                new_row[j] = a * row[j] + b * v[j];
                rest[j] = pr * v[j] - pv * row[j];
            }
            row = std::move(new_row);
            v = std::move(rest);
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    std::vector<std::vector<BigInt>> out;
    for (auto& [c, row] : basis) out.push_back(row);
    std::vector<std::size_t> pivots;
    for (auto& [c, row] : basis) pivots.push_back(c);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t k = i + 1; k < out.size(); ++k) {
            const auto c = pivots[k];
            BigInt q = out[i][c] / out[k][c];
            if (out[i][c] - q * out[k][c] < 0) q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) out[i][j] -= q * out[k][j];
        }
    return out;
}

}  // namespace srgint

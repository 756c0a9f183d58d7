#include "srgint/srg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace srgint {

std::string SrgParams::str() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
           std::to_string(mu) + ")";
}

namespace {

using Wide = __int128;

int sign_of(Wide a, Wide b, std::int64_t d) {
    auto sgn = [](Wide x) { return (x > 0) - (x < 0); };
    if (b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    if (sgn(a) == sgn(b)) return sgn(a);
    // a and b have opposite signs: compare a^2 with b^2 d.
    const Wide aa = a * a, bb = b * b * d;
    if (aa == bb) return 0;
    return aa > bb ? sgn(a) : sgn(b);
}

bool is_square(std::int64_t x, std::int64_t& root) {
    if (x < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    root = r;
    return r * r == x;
}

}  // namespace

bool QuadraticSurd::operator<(const QuadraticSurd& o) const {
    std::int64_t dd = q != 0 ? d : o.d;
    if (q != 0 && o.q != 0 && d != o.d) throw std::domain_error("surd comparison across radicands");
    const Wide a = Wide(p) * o.r - Wide(o.p) * r;
    const Wide b = Wide(q) * o.r - Wide(o.q) * r;
    return sign_of(a, b, dd) < 0;
}

std::string QuadraticSurd::str() const {
    if (q == 0) {
        if (p % r == 0) return std::to_string(p / r);
        return std::to_string(p) + "/" + std::to_string(r);
    }
    std::string s = "(" + std::to_string(p) + (q < 0 ? "-" : "+");
    auto aq = q < 0 ? -q : q;
    if (aq != 1) s += std::to_string(aq);
    s += "sqrt(" + std::to_string(d) + "))";
    if (r != 1) s += "/" + std::to_string(r);
    return s;
}

std::int64_t Spectrum::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto& e : eigenvalues) t += e.multiplicity;
    return t;
}

std::string Spectrum::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        if (i) s += ", ";
        s += eigenvalues[i].value.str() + "^" + std::to_string(eigenvalues[i].multiplicity);
    }
    return s + "}";
}

std::optional<SrgParams> is_srg(const Graph& g) {
    const auto n = g.order();
    if (n < 2) return std::nullopt;
    auto k = g.regular_degree();
    if (!k || *k == 0 || *k + 1 == n) return std::nullopt;
    std::optional<std::size_t> lambda, mu;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            const auto c = g.neighbours(x).intersection_count(g.neighbours(y));
            auto& slot = g.adjacent(x, y) ? lambda : mu;
            if (!slot) slot = c;
            else if (*slot != c) return std::nullopt;
        }
    SrgParams p{static_cast<std::int64_t>(n), static_cast<std::int64_t>(*k), static_cast<std::int64_t>(lambda.value_or(0)),
                static_cast<std::int64_t>(mu.value_or(0))};
    return p;
}

bool satisfies_srg_identity(const Graph& g, const SrgParams& p) {
    const auto n = g.order();
    if (static_cast<std::int64_t>(n) != p.v) return false;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            const auto a2 = static_cast<std::int64_t>(g.neighbours(x).intersection_count(g.neighbours(y)));
            std::int64_t rhs;
            if (x == y) rhs = p.k;
            else if (g.adjacent(x, y)) rhs = p.lambda;
            else rhs = p.mu;
            if (a2 != rhs) return false;
        }
    return true;
}

SrgParams complement_params(const SrgParams& p) {
    SrgParams c{p.v, p.v - 1 - p.k, p.v - 2 - 2 * p.k + p.mu, p.v - 2 * p.k + p.lambda};
    if (c.k < 0 || c.lambda < 0 || c.mu < 0)
        throw std::domain_error("complement parameters negative for " + p.str());
    return c;
}

Spectrum srg_spectrum(const SrgParams& p) {
    if (!p.feasible()) throw std::domain_error("infeasible SRG parameters " + p.str());
    const std::int64_t b = p.lambda - p.mu;
    const std::int64_t disc = b * b + 4 * (p.k - p.mu);
    std::int64_t root = 0;
    Spectrum s;
    auto add = [&s](QuadraticSurd value, std::int64_t mult) {
        for (auto& e : s.eigenvalues)
            if (e.value == value) {
                e.multiplicity += mult;
                return;
            }
        s.eigenvalues.push_back({value, mult});
    };
    if (is_square(disc, root)) {
        if ((b + root) % 2 != 0) throw std::domain_error("non-integral rational eigenvalues for " + p.str());
        const std::int64_t r = (b + root) / 2, t = (b - root) / 2;
        if (r == t) throw std::domain_error("degenerate SRG parameters " + p.str());
        const std::int64_t fnum = -p.k - (p.v - 1) * t, gnum = p.k + (p.v - 1) * r;
        if (fnum % (r - t) != 0 || gnum % (r - t) != 0)
            throw std::domain_error("non-integral multiplicities for " + p.str());
        const auto f = fnum / (r - t), g = gnum / (r - t);
        if (f < 0 || g < 0) throw std::domain_error("negative multiplicities for " + p.str());
        add(QuadraticSurd::integer(p.k), 1);
        if (f > 0) add(QuadraticSurd::integer(r), f);
        if (g > 0) add(QuadraticSurd::integer(t), g);
    } else {
        // Conference-graph case: both irrational roots share multiplicity (v-1)/2.
        if (2 * p.k + (p.v - 1) * b != 0 || (p.v - 1) % 2 != 0)
            throw std::domain_error("irrational eigenvalues with unequal multiplicities for " + p.str());
        std::int64_t a = 1, d = disc;
        for (std::int64_t f = 2; f * f <= d; ++f)
            while (d % (f * f) == 0) {
                d /= f * f;
                a *= f;
            }
        add(QuadraticSurd::integer(p.k), 1);
        add(QuadraticSurd{b, a, d, 2}, (p.v - 1) / 2);
        add(QuadraticSurd{b, -a, d, 2}, (p.v - 1) / 2);
    }
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
              [](const Eigenvalue& x, const Eigenvalue& y) { return y.value < x.value; });
    return s;
}

IntMatrix shifted_adjacency(const Graph& g, std::int64_t t) {
    const auto n = g.order();
    IntMatrix m(n, n);
    for (Vertex x = 0; x < n; ++x) {
        m(x, x) = t;
        const auto& nb = g.neighbours(x);
        for (auto y = nb.first(); y < n; y = nb.next(y + 1)) m(x, y) = 1;
    }
    return m;
}

bool psd_shift_check(const Graph& g, std::int64_t t) { return is_positive_semidefinite(shifted_adjacency(g, t)); }

Graph subconstituent(const Graph& g, Vertex x, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("subconstituent index must be 1 or 2");
    auto layer = distance_layer(g, x, static_cast<std::size_t>(i));
    if (layer.empty()) throw std::domain_error("subconstituent: empty distance layer");
    return g.induced(layer);
}

Rational delsarte_bound(const SrgParams& p) {
    const auto theta = srg_spectrum(p).theta_min();
    if (!theta.is_rational()) throw std::domain_error("delsarte bound needs a rational smallest eigenvalue");
    const Rational t = theta.as_rational();
    if (t >= 0) throw std::domain_error("delsarte bound needs a negative smallest eigenvalue");
    return Rational(1) - Rational(p.k) / t;
}

std::size_t common_nonneighbors(const Graph& g, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("common_nonneighbors: x == y");
    auto w = g.all_vertices();
    w -= g.neighbours(x);
    w -= g.neighbours(y);
    w.erase(x);
    w.erase(y);
    return w.count();
}

}  // namespace srgint

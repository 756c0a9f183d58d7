#include "srgint/lattice.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "srgint/design.hpp"
#include "srgint/graph6.hpp"

namespace srgint {

std::int64_t scaled_dot(const LVec& a, const LVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < 24; ++i) s += a[i] * b[i];
    return s;
}

std::int64_t ip(const LVec& a, const LVec& b) {
    const auto s = scaled_dot(a, b);
    if (s % 8 != 0) throw std::domain_error("inner product " + std::to_string(s) + "/8 is not an integer");
    return s / 8;
}

LVec operator+(const LVec& a, const LVec& b) {
    LVec r;
    for (std::size_t i = 0; i < 24; ++i) r[i] = a[i] + b[i];
    return r;
}

LVec operator-(const LVec& a, const LVec& b) {
    LVec r;
    for (std::size_t i = 0; i < 24; ++i) r[i] = a[i] - b[i];
    return r;
}

LVec operator*(std::int64_t c, const LVec& a) {
    LVec r;
    for (std::size_t i = 0; i < 24; ++i) r[i] = c * a[i];
    return r;
}

VectorSystem leech_generators() {
    VectorSystem out;
    LVec first;
    first.fill(1);
    first[0] = -3;
    out.push_back(first);
    // Local point index of S(5,8,24) equals the coordinate index.
    for (auto b : golay_s_5_8_24().blocks) {
        LVec v{};
        for (std::size_t i = 0; i < 24; ++i)
            if ((b >> i) & 1u) v[i] = 2;
        out.push_back(v);
    }
    return out;
}

LVec a0() {
    LVec v{};
    v[coordinate_of(kInfinity)] = 4;
    v[coordinate_of(0)] = 4;
    return v;
}

bool in_leech(const LVec& v) {
    static const std::unordered_set<std::uint32_t> code = [] {
        auto w = golay_codewords();
        return std::unordered_set<std::uint32_t>(w.begin(), w.end());
    }();
    const auto m = ((v[0] % 2) + 2) % 2;
    std::int64_t sum = 0;
    std::array<std::uint32_t, 4> classes{};
    for (std::size_t i = 0; i < 24; ++i) {
        if (((v[i] % 2) + 2) % 2 != m) return false;
        sum += v[i];
        classes[static_cast<std::size_t>(((v[i] % 4) + 4) % 4)] |= std::uint32_t{1} << i;
    }
    if (((sum - 4 * m) % 8 + 8) % 8 != 0) return false;
    return std::all_of(classes.begin(), classes.end(), [](std::uint32_t c) { return code.contains(c); });
}

LVec shorter_leech_project(const LVec& v) {
    const auto a = a0();
    const auto p = ip(v, a);
    if (p % 2 != 0) throw std::domain_error("shorter_leech_project: (v,a0) = " + std::to_string(p) + " is odd");
    // (v,a0)/(a0,a0) = p/4 and a0 has scaled entries 4, so (p/4)*a0 is integral.
    LVec shift{};
    for (std::size_t i = 0; i < 24; ++i) shift[i] = p * (a[i] / 4);
    return v - shift;
}

VectorSystem shorter_leech_generators() {
    const auto gens = leech_generators();
    const auto a = a0();
    VectorSystem out;
    std::optional<LVec> first_odd;
    for (const auto& v : gens) {
        if (ip(v, a) % 2 == 0) {
            out.push_back(shorter_leech_project(v));
        } else if (!first_odd) {
            first_odd = v;
            out.push_back(shorter_leech_project(2 * v));
        } else {
            out.push_back(shorter_leech_project(v + *first_odd));
        }
    }
    return out;
}

namespace {

std::vector<int> parse_block(const std::string& label, std::size_t from) {
    if (label.size() < from + 2 || label[from] != '{' || label.back() != '}')
        throw std::invalid_argument("vertex label '" + label + "' is not a block");
    std::vector<int> pts;
    std::istringstream in(label.substr(from + 1, label.size() - from - 2));
    std::string tok;
    while (std::getline(in, tok, ',')) pts.push_back(std::stoi(tok));
    return pts;
}

}  // namespace

VectorSystem delta_275(const Graph& mcl) {
    if (!mcl.has_labels()) throw std::invalid_argument("delta_275: graph carries no vertex labels");
    VectorSystem out;
    for (Vertex x = 0; x < mcl.order(); ++x) {
        const auto& l = mcl.label(x);
        LVec v{};
        if (l.rfind("p:", 0) == 0) {
            const int i = std::stoi(l.substr(2));
            if (i < 1 || i > 22) throw std::invalid_argument("delta_275: point label out of range: " + l);
            v[coordinate_of(kInfinity)] = 4;
            v[coordinate_of(i)] = 4;
        } else if (l.rfind("b1:", 0) == 0) {
            const auto pts = parse_block(l, 3);
            if (pts.size() != 7 || std::find(pts.begin(), pts.end(), 0) == pts.end())
                throw std::invalid_argument("delta_275: b1 block must have 7 points including 0: " + l);
            v[coordinate_of(kInfinity)] = 2;
            for (int p : pts) v[coordinate_of(p)] = 2;
        } else if (l.rfind("b2:", 0) == 0) {
            const auto pts = parse_block(l, 3);
            if (pts.size() != 7 || std::find(pts.begin(), pts.end(), 0) != pts.end())
                throw std::invalid_argument("delta_275: b2 block must have 7 points avoiding 0: " + l);
            v.fill(1);
            v[coordinate_of(kInfinity)] = 3;
            for (int p : pts) v[coordinate_of(p)] = -1;
        } else {
            throw std::invalid_argument("delta_275: unrecognised vertex label '" + l + "'");
        }
        out.push_back(v);
    }
    return out;
}

VectorSystem delta_tilde(const VectorSystem& sys) {
    const auto a = a0();
    LVec half{};
    for (std::size_t i = 0; i < 24; ++i) half[i] = a[i] / 2;
    VectorSystem out;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (ip(sys[i], a) != 2)
            throw std::domain_error("delta_tilde: vector " + std::to_string(i) + " has (u,a0) != 2");
        out.push_back(sys[i] - half);
    }
    return out;
}

IntMatrix gram(const VectorSystem& sys) {
    IntMatrix g(sys.size(), sys.size());
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i; j < sys.size(); ++j) {
            const auto s = scaled_dot(sys[i], sys[j]);
            if (s % 8 != 0)
                throw std::domain_error("gram: (" + std::to_string(i) + "," + std::to_string(j) + ") inner product " +
                                        std::to_string(s) + "/8 is not an integer");
            g(i, j) = g(j, i) = s / 8;
        }
    return g;
}

LatticeDeterminant lattice_determinant(const VectorSystem& sys) {
    IntMatrix rows(sys.size(), 24);
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = 0; j < 24; ++j) rows(i, j) = sys[i][j];
    const auto basis = hermite_basis(rows);
    const auto r = basis.size();
    std::vector<std::vector<BigInt>> g(r, std::vector<BigInt>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < 24; ++k) g[i][j] += basis[i][k] * basis[j][k];
    BigInt scale = 1;
    for (std::size_t i = 0; i < r; ++i) scale *= 8;
    return {r, Rational(exact_determinant(g), scale)};
}

std::string vectors_to_text(const VectorSystem& sys) {
    std::ostringstream out;
    for (const auto& v : sys) {
        for (std::size_t i = 0; i < 24; ++i) out << (i ? " " : "") << v[i];
        out << '\n';
    }
    return out.str();
}

VectorSystem vectors_from_text(const std::string& text) {
    VectorSystem out;
    std::istringstream in(text);
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const auto line_start = offset;
        offset += line.size() + 1;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        LVec v{};
        for (std::size_t i = 0; i < 24; ++i)
            if (!(ls >> v[i])) throw ParseError("vector line needs 24 integers", line_start);
        std::string extra;
        if (ls >> extra) throw ParseError("vector line has more than 24 entries", line_start);
        out.push_back(v);
    }
    return out;
}

}  // namespace srgint

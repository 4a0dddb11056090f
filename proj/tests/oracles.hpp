#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library except to read complexes out.

#include "wedgeforge/complexes.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/wedge.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using LabelSet = std::set<std::string>;
using Family = std::set<LabelSet>;

inline Family facets_of(const wedgeforge::SimplicialComplex& k) {
    Family out;
    for (auto f : k.facets()) {
        auto labels = k.labels_of(f);
        out.insert(LabelSet(labels.begin(), labels.end()));
    }
    return out;
}

// All subsets of `vertices` that sit inside some facet.
inline Family all_faces(const std::vector<std::string>& vertices, const Family& facets) {
    Family out;
    const std::size_t n = vertices.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        LabelSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(vertices[i]);
        for (const auto& f : facets)
            if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
                out.insert(s);
                break;
            }
    }
    return out;
}

inline Family minimal_nonfaces(const std::vector<std::string>& vertices, const Family& faces) {
    Family out;
    const std::size_t n = vertices.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        LabelSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(vertices[i]);
        if (faces.count(s)) continue;
        bool minimal = true;
        for (const auto& v : s) {
            LabelSet t = s;
            t.erase(v);
            if (!faces.count(t)) minimal = false;
        }
        if (minimal) out.insert(s);
    }
    return out;
}

inline Family maximal(const Family& faces) {
    Family out;
    for (const auto& f : faces) {
        bool is_max = true;
        for (const auto& g : faces)
            if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) is_max = false;
        if (is_max) out.insert(f);
    }
    return out;
}

// K(J) straight from the grouped description: a set of "i.t" labels is a face
// iff the groups it contains in full form a face of K. Base vertex i is the
// i-th entry of k.vertices().
inline Family wedge_facets(const wedgeforge::SimplicialComplex& k, const std::vector<int>& j) {
    const auto base_faces = all_faces(k.vertices(), facets_of(k));
    std::vector<std::pair<std::size_t, int>> verts;
    for (std::size_t i = 0; i < j.size(); ++i)
        for (int t = 1; t <= j[i]; ++t) verts.emplace_back(i, t);
    Family faces;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << verts.size()); ++mask) {
        std::vector<int> count(j.size(), 0);
        LabelSet s;
        for (std::size_t b = 0; b < verts.size(); ++b)
            if (mask >> b & 1) {
                ++count[verts[b].first];
                s.insert(std::to_string(verts[b].first + 1) + "." + std::to_string(verts[b].second));
            }
        LabelSet full;
        for (std::size_t i = 0; i < j.size(); ++i)
            if (count[i] == j[i]) full.insert(k.vertices()[i]);
        if (base_faces.count(full)) faces.insert(s);
    }
    return maximal(faces);
}

inline long long leibniz_det(const std::vector<std::vector<long long>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        long long term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i + 1; k < n; ++k)
                if (perm[i] > perm[k]) ++inversions;
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Monomials of total degree `degree` in m variables not divisible by any generator.
inline long long count_standard_monomials(std::size_t m, int degree, const std::vector<std::vector<int>>& gens) {
    long long count = 0;
    std::vector<int> e(m, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == m) {
            e[pos] = left;
            bool in_ideal = false;
            for (const auto& g : gens) {
                bool div = true;
                for (std::size_t i = 0; i < m; ++i)
                    if (g[i] > e[i]) div = false;
                in_ideal = in_ideal || div;
            }
            if (!in_ideal) ++count;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    rec(rec, 0, degree);
    return count;
}

// Binomial transform of an f-vector (f[0] = 1 for the empty face), done by
// the polynomial identity Σ h_i t^i = Σ f_{i-1} t^i (1-t)^{n-i}.
inline std::vector<long long> h_from_f(const std::vector<long long>& f) {
    const std::size_t n = f.size() - 1;
    std::vector<long long> h(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        // f[i] * t^i * (1-t)^{n-i}
        std::vector<long long> poly{1};
        for (std::size_t r = 0; r < n - i; ++r) {
            std::vector<long long> next(poly.size() + 1, 0);
            for (std::size_t a = 0; a < poly.size(); ++a) {
                next[a] += poly[a];
                next[a + 1] -= poly[a];
            }
            poly = next;
        }
        for (std::size_t a = 0; a < poly.size(); ++a) h[i + a] += f[i] * poly[a];
    }
    return h;
}

inline wedgeforge::IntMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::uint64_t& state) {
    wedgeforge::IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < c; ++k) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            m(i, k) = lo + static_cast<long long>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
        }
    return m;
}

// Rank of a dense matrix over GF(p), plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> a, long long p = 1000003) {
    auto inv = [p](long long x) {
        long long r = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (auto& row : a)
        for (auto& v : row) v = ((v % p) + p) % p;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        const long long f = inv(a[rank][c]);
        for (auto& v : a[rank]) v = v * f % p;
        for (std::size_t r = 0; r < a.size(); ++r)
            if (r != rank && a[r][c] != 0) {
                const long long g = a[r][c];
                for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - g * a[rank][k]) % p + p) % p;
            }
        ++rank;
    }
    return rank;
}

} // namespace oracle

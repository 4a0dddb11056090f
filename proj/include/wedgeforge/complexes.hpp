#pragma once

// Abstract simplicial complexes on labeled vertices, stored by facets.
//
// Faces are bitsets over the complex's vertex order (at most 64 vertices).
// Facet lists are kept inclusion-maximal and sorted lexicographically on
// their member indices, so equal complexes compare equal member-wise and
// serialize identically.

#include "wedgeforge/error.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wedgeforge {

inline constexpr std::size_t kMaxVertices = 64;

/// A vertex subset, as a bitmask over the ambient vertex order.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    static Face of(std::initializer_list<std::size_t> members) {
        Face f;
        for (auto v : members) f = f.with(v);
        return f;
    }
    static Face of(const std::vector<std::size_t>& members) {
        Face f;
        for (auto v : members) f = f.with(v);
        return f;
    }
    /// The face {0, 1, ..., n-1}.
    static constexpr Face full(std::size_t n) {
        return Face(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
    constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr Face with(std::size_t v) const { return Face(bits_ | (std::uint64_t{1} << v)); }
    constexpr Face without(std::size_t v) const { return Face(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face minus(Face o) const { return Face(bits_ & ~o.bits_); }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        }
        return out;
    }

    friend constexpr bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }

    /// Lexicographic order on the sorted member lists ({1} < {1,2} < {1,3} < {2}).
    friend constexpr bool operator<(Face a, Face b) {
        if (a.bits_ == b.bits_) return false;
        const int p = std::countr_zero(a.bits_ ^ b.bits_);
        if ((a.bits_ >> p) & 1U) return (b.bits_ >> p) != 0;
        return (a.bits_ >> p) == 0;
    }

private:
    std::uint64_t bits_ = 0;
};

struct FaceHash {
    std::size_t operator()(Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};

using FaceSet = std::unordered_set<Face, FaceHash>;

namespace detail {

inline std::vector<Face> maximal_sorted(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (Face f : faces) {
        bool covered = std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.is_subset_of(g); });
        if (!covered) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace detail

/// Simplicial complex on an ordered list of opaque vertex labels.
///
/// The void complex (no faces at all) and the irrelevant complex {∅} are
/// both representable and distinct. Every listed vertex occurs in some facet.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex() { return SimplicialComplex(); }

    static SimplicialComplex irrelevant() {
        SimplicialComplex k;
        k.facets_.push_back(Face{});
        return k;
    }

    /// Builds from facets over `vertices`; drops non-maximal entries. Throws
    /// EmptyVertexSet if a vertex is in no facet.
    static SimplicialComplex from_facets(std::vector<std::string> vertices, std::vector<Face> facets) {
        check_labels(vertices);
        SimplicialComplex k;
        k.vertices_ = std::move(vertices);
        const Face all = Face::full(k.vertices_.size());
        Face used;
        for (Face f : facets) {
            if (!f.is_subset_of(all)) throw Error(ErrorCode::UnknownVertex, "facet mentions a vertex index out of range");
            used = used | f;
        }
        if (used != all) {
            auto missing = all.minus(used).members();
            throw Error(ErrorCode::EmptyVertexSet, "vertex '" + k.vertices_[missing.front()] + "' appears in no facet");
        }
        k.facets_ = detail::maximal_sorted(std::move(facets));
        return k;
    }

    /// Like from_facets, but silently drops vertices that occur in no facet.
    static SimplicialComplex compacted(const std::vector<std::string>& vertices, const std::vector<Face>& facets) {
        Face used;
        for (Face f : facets) used = used | f;
        std::vector<std::string> kept;
        std::vector<std::size_t> remap(vertices.size(), 0);
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (used.contains(v)) {
                remap[v] = kept.size();
                kept.push_back(vertices[v]);
            }
        }
        std::vector<Face> moved;
        moved.reserve(facets.size());
        for (Face f : facets) {
            Face g;
            for (auto v : f.members()) g = g.with(remap[v]);
            moved.push_back(g);
        }
        return from_facets(std::move(kept), std::move(moved));
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::string& label(std::size_t v) const { return vertices_.at(v); }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }

    /// Dimension; -1 for {∅}. The void complex reports -2.
    int dimension() const {
        if (facets_.empty()) return -2;
        std::size_t top = 0;
        for (Face f : facets_) top = std::max(top, f.size());
        return static_cast<int>(top) - 1;
    }

    bool is_pure() const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](Face f) { return static_cast<int>(f.size()) - 1 == dimension(); });
    }

    bool contains(Face f) const {
        return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.is_subset_of(g); });
    }

    std::optional<std::size_t> index_of(const std::string& label) const {
        auto it = std::find(vertices_.begin(), vertices_.end(), label);
        if (it == vertices_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    std::size_t require_index(const std::string& label) const {
        auto idx = index_of(label);
        if (!idx) throw Error(ErrorCode::UnknownVertex, "no vertex labeled '" + label + "'");
        return *idx;
    }

    Face face_of(const std::vector<std::string>& labels) const {
        Face f;
        for (const auto& l : labels) f = f.with(require_index(l));
        return f;
    }

    std::vector<std::string> labels_of(Face f) const {
        std::vector<std::string> out;
        for (auto v : f.members()) out.push_back(vertices_.at(v));
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    static void check_labels(const std::vector<std::string>& vertices) {
        if (vertices.size() > kMaxVertices) {
            throw Error(ErrorCode::TooManyVertices, std::to_string(vertices.size()) + " vertices exceed the limit of 64");
        }
        std::unordered_set<std::string> seen;
        for (const auto& v : vertices) {
            if (!seen.insert(v).second) throw Error(ErrorCode::DuplicateVertexLabel, "label '" + v + "' declared twice");
        }
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Face> facets_;
};

/// Validates raw facet data over a declared vertex list.
inline SimplicialComplex validate_complex(const std::vector<std::string>& vertices,
                                          const std::vector<std::vector<std::string>>& raw_facets) {
    SimplicialComplex::check_labels(vertices);
    if (raw_facets.empty()) throw Error(ErrorCode::EmptyVertexSet, "no facets given");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
    std::vector<Face> facets;
    for (const auto& raw : raw_facets) {
        Face f;
        for (const auto& l : raw) {
            auto it = index.find(l);
            if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "facet mentions undeclared vertex '" + l + "'");
            f = f.with(it->second);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(vertices, std::move(facets));
}

/// Vertex list inferred from the facets, in order of first appearance.
inline SimplicialComplex validate_complex(const std::vector<std::vector<std::string>>& raw_facets) {
    std::vector<std::string> vertices;
    std::unordered_set<std::string> seen;
    for (const auto& raw : raw_facets) {
        for (const auto& l : raw) {
            if (seen.insert(l).second) vertices.push_back(l);
        }
    }
    return validate_complex(vertices, raw_facets);
}

/// All faces (including ∅), grouped by dimension: result[k] holds the
/// (k-1)-dimensional faces, each group sorted.
inline std::vector<std::vector<Face>> faces(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    FaceSet seen;
    for (Face f : k.facets()) {
        // Enumerate all submasks of the facet.
        const std::uint64_t full = f.bits();
        std::uint64_t sub = full;
        for (;;) {
            seen.insert(Face(sub));
            if (sub == 0) break;
            sub = (sub - 1) & full;
        }
    }
    std::vector<std::vector<Face>> grouped(static_cast<std::size_t>(k.dimension() + 2));
    for (Face f : seen) grouped[f.size()].push_back(f);
    for (auto& g : grouped) std::sort(g.begin(), g.end());
    return grouped;
}

inline std::vector<Face> all_faces(const SimplicialComplex& k) {
    std::vector<Face> out;
    for (auto& g : faces(k)) out.insert(out.end(), g.begin(), g.end());
    return out;
}

inline FaceSet face_set(const SimplicialComplex& k) {
    FaceSet out;
    for (auto& g : faces(k)) out.insert(g.begin(), g.end());
    return out;
}

/// Vertex sets not in K all of whose proper subsets are in K, sorted.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    const FaceSet in_k = face_set(k);
    std::vector<Face> out;
    FaceSet emitted;
    const std::size_t n = k.vertex_count();
    for (Face f : in_k) {
        for (std::size_t v = 0; v < n; ++v) {
            if (f.contains(v)) continue;
            const Face tau = f.with(v);
            if (in_k.count(tau) != 0 || emitted.count(tau) != 0) continue;
            bool minimal = true;
            for (auto w : tau.members()) {
                if (in_k.count(tau.without(w)) == 0) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                emitted.insert(tau);
                out.push_back(tau);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The complex on `vertices` whose faces are the subsets containing none of
/// `nonfaces`. Brute force over all subsets; intended for up to ~24 vertices.
inline SimplicialComplex complex_avoiding(const std::vector<std::string>& vertices, const std::vector<Face>& nonfaces) {
    const std::size_t n = vertices.size();
    if (n > 24) throw Error(ErrorCode::TooManyVertices, "subset enumeration limited to 24 vertices");
    auto ok = [&](std::uint64_t s) {
        return std::none_of(nonfaces.begin(), nonfaces.end(), [s](Face t) { return (t.bits() & ~s) == 0; });
    };
    std::vector<Face> facets;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (!ok(s)) continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v) {
            if (((s >> v) & 1U) == 0 && ok(s | (std::uint64_t{1} << v))) maximal = false;
        }
        if (maximal) facets.push_back(Face(s));
    }
    if (facets.empty()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_facets(vertices, std::move(facets));
}

/// link_K σ = {τ ∈ K : σ ∪ τ ∈ K, σ ∩ τ = ∅}, on the vertices it uses.
inline SimplicialComplex link(const SimplicialComplex& k, Face sigma) {
    if (!k.contains(sigma)) throw Error(ErrorCode::FaceNotInComplex, "link requested for a non-face");
    std::vector<Face> pieces;
    for (Face f : k.facets()) {
        if (sigma.is_subset_of(f)) pieces.push_back(f.minus(sigma));
    }
    return SimplicialComplex::compacted(k.vertices(), pieces);
}

/// K1 ∗ K2 on disjoint label sets; vertices of K1 come first.
inline SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    for (const auto& l : k2.vertices()) {
        if (k1.index_of(l)) throw Error(ErrorCode::VertexLabelCollision, "label '" + l + "' occurs in both complexes");
    }
    if (k1.is_void() || k2.is_void()) return SimplicialComplex::void_complex();
    std::vector<std::string> vertices = k1.vertices();
    vertices.insert(vertices.end(), k2.vertices().begin(), k2.vertices().end());
    const std::size_t shift = k1.vertex_count();
    std::vector<Face> facets;
    for (Face a : k1.facets()) {
        for (Face b : k2.facets()) facets.push_back(Face(a.bits() | (b.bits() << shift)));
    }
    return SimplicialComplex::from_facets(std::move(vertices), std::move(facets));
}

/// Union of two complexes, matching vertices by label. Vertices of K1 first,
/// then the labels new in K2.
inline SimplicialComplex unite(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    std::vector<std::string> vertices = k1.vertices();
    std::vector<std::size_t> remap;
    for (const auto& l : k2.vertices()) {
        auto idx = std::find(vertices.begin(), vertices.end(), l);
        if (idx == vertices.end()) {
            remap.push_back(vertices.size());
            vertices.push_back(l);
        } else {
            remap.push_back(static_cast<std::size_t>(idx - vertices.begin()));
        }
    }
    std::vector<Face> facets = k1.facets();
    for (Face f : k2.facets()) {
        Face g;
        for (auto v : f.members()) g = g.with(remap[v]);
        facets.push_back(g);
    }
    if (facets.empty()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_facets(std::move(vertices), std::move(facets));
}

/// Same complex with vertices listed in `order` (a permutation of its labels).
inline SimplicialComplex reorder(const SimplicialComplex& k, const std::vector<std::string>& order) {
    if (order.size() != k.vertex_count()) throw Error(ErrorCode::LengthMismatch, "reorder needs every label exactly once");
    std::vector<std::size_t> to_new(k.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) to_new[k.require_index(order[i])] = i;
    std::vector<Face> facets;
    for (Face f : k.facets()) {
        Face g;
        for (auto v : f.members()) g = g.with(to_new[v]);
        facets.push_back(g);
    }
    if (facets.empty()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_facets(order, std::move(facets));
}

/// Same facets under new labels (position-wise).
inline SimplicialComplex relabel(const SimplicialComplex& k, std::vector<std::string> labels) {
    if (labels.size() != k.vertex_count()) throw Error(ErrorCode::LengthMismatch, "relabel needs one label per vertex");
    if (k.is_void()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_facets(std::move(labels), k.facets());
}

/// Face deletion: every face of K not containing v.
inline SimplicialComplex delete_vertex(const SimplicialComplex& k, std::size_t v) {
    if (v >= k.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    std::vector<Face> pieces;
    for (Face f : k.facets()) pieces.push_back(f.without(v));
    return SimplicialComplex::compacted(k.vertices(), pieces);
}

inline SimplicialComplex delete_vertex(const SimplicialComplex& k, const std::string& label) {
    return delete_vertex(k, k.require_index(label));
}

struct FHVectors {
    std::vector<std::int64_t> f; // f[0] = f_{-1} = 1, f[1] = vertex count, ...
    std::vector<std::int64_t> h;
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// f-vector by counting, h_k = Σ_{i≤k} (-1)^{k-i} C(n-i, k-i) f_{i-1}, n-1 = dim K.
inline FHVectors f_h_vectors(const SimplicialComplex& k) {
    if (k.is_void()) throw Error(ErrorCode::NotPure, "void complex has no f-vector");
    if (!k.is_pure()) throw Error(ErrorCode::NotPure, "f/h-vectors require a pure complex");
    FHVectors out;
    for (auto& g : faces(k)) out.f.push_back(static_cast<std::int64_t>(g.size()));
    const auto n = static_cast<std::int64_t>(k.dimension() + 1);
    for (std::int64_t kk = 0; kk <= n; ++kk) {
        std::int64_t h = 0;
        for (std::int64_t i = 0; i <= kk; ++i) {
            const std::int64_t sign = ((kk - i) % 2 == 0) ? 1 : -1;
            h += sign * binomial(n - i, kk - i) * out.f[static_cast<std::size_t>(i)];
        }
        out.h.push_back(h);
    }
    return out;
}

struct PseudomanifoldReport {
    bool ridge_condition = false;
    bool connected = false;
    bool passed = false;
    std::vector<Face> bad_ridges; // ridges not in exactly two facets
    std::string reason;
};

/// Necessary conditions for K to be a polytope boundary: pure, every ridge in
/// exactly two facets, facet graph connected (waived in dimension 0).
inline PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& k) {
    if (k.is_void() || !k.is_pure()) throw Error(ErrorCode::NotPure, "pseudomanifold check requires a pure complex");
    PseudomanifoldReport report;
    if (k.dimension() < 0) {
        report.reason = "dimension -1";
        return report;
    }
    std::map<std::uint64_t, std::vector<std::size_t>> ridge_owners;
    const auto& facets = k.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (auto v : facets[i].members()) ridge_owners[facets[i].without(v).bits()].push_back(i);
    }
    report.ridge_condition = true;
    for (auto& [ridge, owners] : ridge_owners) {
        if (owners.size() != 2) {
            report.ridge_condition = false;
            report.bad_ridges.push_back(Face(ridge));
        }
    }
    std::sort(report.bad_ridges.begin(), report.bad_ridges.end());

    if (k.dimension() == 0) {
        report.connected = true;
    } else {
        std::vector<std::vector<std::size_t>> adj(facets.size());
        for (auto& [ridge, owners] : ridge_owners) {
            for (std::size_t a = 0; a < owners.size(); ++a)
                for (std::size_t b = a + 1; b < owners.size(); ++b) {
                    adj[owners[a]].push_back(owners[b]);
                    adj[owners[b]].push_back(owners[a]);
                }
        }
        std::vector<bool> seen(facets.size(), false);
        std::queue<std::size_t> todo;
        todo.push(0);
        seen[0] = true;
        std::size_t reached = 1;
        while (!todo.empty()) {
            auto cur = todo.front();
            todo.pop();
            for (auto nb : adj[cur]) {
                if (!seen[nb]) {
                    seen[nb] = true;
                    ++reached;
                    todo.push(nb);
                }
            }
        }
        report.connected = reached == facets.size();
    }
    report.passed = report.ridge_condition && report.connected;
    if (!report.ridge_condition) report.reason = "ridge not contained in exactly two facets";
    else if (!report.connected) report.reason = "facet adjacency graph disconnected";
    return report;
}

} // namespace wedgeforge

#pragma once

// The simplicial wedge K(v) and its iterate K(J).
//
// Vertices of a wedged complex carry canonical labels "i.t" (group i, copy t,
// both 1-based) and are always listed group-major:
//   1.1, 1.2, ..., 1.j1, 2.1, ..., m.jm.

#include "wedgeforge/complexes.hpp"

#include <array>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wedgeforge {

/// J = (j_1, ..., j_m), all entries positive.
class WedgeVector {
public:
    WedgeVector() = default;
    explicit WedgeVector(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int j : entries_) {
            if (j < 1) throw Error(ErrorCode::NonPositiveEntry, "weight vector entries must be positive");
        }
    }
    WedgeVector(std::initializer_list<int> entries) : WedgeVector(std::vector<int>(entries)) {}

    static WedgeVector ones(std::size_t m) { return WedgeVector(std::vector<int>(m, 1)); }

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_.at(i); }
    const std::vector<int>& entries() const { return entries_; }

    /// d(J) = j_1 + ... + j_m.
    int d() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    WedgeVector incremented(std::size_t i) const {
        auto e = entries_;
        e.at(i) += 1;
        return WedgeVector(std::move(e));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(entries_[i]);
        }
        return s;
    }

    friend bool operator==(const WedgeVector&, const WedgeVector&) = default;

private:
    std::vector<int> entries_;
};

inline int d_of(const WedgeVector& j) { return j.d(); }

inline std::string canonical_label(std::size_t group, std::size_t copy) {
    return std::to_string(group) + "." + std::to_string(copy);
}

/// Canonical vertex labels of K(J) in group-major order.
inline std::vector<std::string> canonical_labels(const WedgeVector& j) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        for (int t = 1; t <= j[i]; ++t) out.push_back(canonical_label(i + 1, static_cast<std::size_t>(t)));
    return out;
}

/// Index of vertex v_{it} (1-based group and copy) in the canonical order.
inline std::size_t canonical_index(const WedgeVector& j, std::size_t group, std::size_t copy) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i + 1 < group; ++i) idx += static_cast<std::size_t>(j[i]);
    return idx + copy - 1;
}

struct WedgedComplex {
    SimplicialComplex complex;
    std::size_t base_vertex_count = 0;
    WedgeVector J;

    friend bool operator==(const WedgedComplex&, const WedgedComplex&) = default;
};

/// K viewed as K(1,...,1): vertex i becomes "i.1".
inline WedgedComplex as_wedged(const SimplicialComplex& k) {
    const auto ones = WedgeVector::ones(k.vertex_count());
    return WedgedComplex{relabel(k, canonical_labels(ones)), k.vertex_count(), ones};
}

/// One application of K(v) = {v1,v2} ∗ link_K{v} ∪ {{v1},{v2}} ∗ (K∖{v}).
/// The new vertices are labeled `first` and `second` and appended after the
/// surviving vertices of K.
inline SimplicialComplex elementary_wedge(const SimplicialComplex& k, std::size_t v, const std::string& first,
                                          const std::string& second) {
    if (v >= k.vertex_count()) throw Error(ErrorCode::UnknownVertex, "wedge vertex out of range");
    const SimplicialComplex lk = link(k, Face::of({v}));
    const SimplicialComplex rest = delete_vertex(k, v);
    const auto edge = SimplicialComplex::from_facets({first, second}, {Face::of({0, 1})});
    const auto points = SimplicialComplex::from_facets({first, second}, {Face::of({0}), Face::of({1})});
    return unite(join(lk, edge), join(rest, points));
}

/// Wedge at v_{group,copy} of an already wedged complex. The two new
/// vertices become v_{group,copy} and v_{group, j_group + 1}.
inline WedgedComplex wedge_at(const WedgedComplex& w, std::size_t group, std::size_t copy) {
    if (group < 1 || group > w.J.size() || copy < 1 || copy > static_cast<std::size_t>(w.J[group - 1])) {
        throw Error(ErrorCode::UnknownVertex, "no vertex " + canonical_label(group, copy));
    }
    const std::size_t v = canonical_index(w.J, group, copy);
    const auto next_j = w.J.incremented(group - 1);
    const std::string fresh = canonical_label(group, static_cast<std::size_t>(next_j[group - 1]));
    const auto wedged = elementary_wedge(w.complex, v, canonical_label(group, copy), fresh);
    return WedgedComplex{reorder(wedged, canonical_labels(next_j)), w.base_vertex_count, next_j};
}

/// K(v_i) for a plain complex, with J = (1,...,2,...,1).
inline WedgedComplex wedge_at(const SimplicialComplex& k, std::size_t vertex) {
    if (vertex >= k.vertex_count()) throw Error(ErrorCode::UnknownVertex, "wedge vertex out of range");
    return wedge_at(as_wedged(k), vertex + 1, 1);
}

/// A sequence of elementary wedges: (group, copy) pairs, 1-based.
using WedgeOrder = std::vector<std::pair<std::size_t, std::size_t>>;

inline void check_length(const SimplicialComplex& k, const WedgeVector& j) {
    if (j.size() != k.vertex_count()) {
        throw Error(ErrorCode::LengthMismatch, "weight vector has " + std::to_string(j.size()) + " entries but the complex has " +
                                                   std::to_string(k.vertex_count()) + " vertices");
    }
}

inline WedgedComplex wedge_in_order(const SimplicialComplex& k, const WedgeOrder& order) {
    WedgedComplex w = as_wedged(k);
    for (auto [group, copy] : order) w = wedge_at(w, group, copy);
    return w;
}

/// Deterministic order: groups ascending, always wedging at copy 1.
inline WedgeOrder default_wedge_order(const WedgeVector& j) {
    WedgeOrder order;
    for (std::size_t i = 0; i < j.size(); ++i)
        for (int t = 1; t < j[i]; ++t) order.emplace_back(i + 1, 1);
    return order;
}

/// Random interleaving of groups with a random existing copy at each step.
template <typename Rng>
WedgeOrder random_wedge_order(const WedgeVector& j, Rng& rng) {
    std::vector<std::size_t> groups;
    for (std::size_t i = 0; i < j.size(); ++i)
        for (int t = 1; t < j[i]; ++t) groups.push_back(i + 1);
    std::shuffle(groups.begin(), groups.end(), rng);
    std::vector<std::size_t> copies(j.size(), 1);
    WedgeOrder order;
    for (auto g : groups) {
        std::uniform_int_distribution<std::size_t> pick(1, copies[g - 1]);
        order.emplace_back(g, pick(rng));
        ++copies[g - 1];
    }
    return order;
}

/// K(J) by iterated elementary wedges.
inline WedgedComplex wedge_J(const SimplicialComplex& k, const WedgeVector& j) {
    check_length(k, j);
    return wedge_in_order(k, default_wedge_order(j));
}

/// Blow-up of a face of K: all copies of each member group in K(J).
inline Face blow_up(Face base, const WedgeVector& j) {
    Face out;
    for (auto v : base.members())
        for (int t = 1; t <= j[v]; ++t) out = out.with(canonical_index(j, v + 1, static_cast<std::size_t>(t)));
    return out;
}

/// K(J) built directly from its minimal non-faces, the blow-ups of those of K.
inline WedgedComplex wedged_from_nonfaces(const SimplicialComplex& k, const WedgeVector& j) {
    check_length(k, j);
    std::vector<Face> blown;
    for (Face tau : minimal_nonfaces(k)) blown.push_back(blow_up(tau, j));
    return WedgedComplex{complex_avoiding(canonical_labels(j), blown), k.vertex_count(), j};
}

/// Vertex pairs {a,b} that span an edge of K and whose transposition is a
/// simplicial automorphism. Necessary for K to arise as K'(v).
inline std::vector<std::array<std::size_t, 2>> detect_wedge(const SimplicialComplex& k) {
    std::vector<std::array<std::size_t, 2>> out;
    const auto& facets = k.facets();
    for (std::size_t a = 0; a < k.vertex_count(); ++a) {
        for (std::size_t b = a + 1; b < k.vertex_count(); ++b) {
            if (!k.contains(Face::of({a, b}))) continue;
            std::vector<Face> swapped;
            for (Face f : facets) {
                Face g = f.without(a).without(b);
                if (f.contains(a)) g = g.with(b);
                if (f.contains(b)) g = g.with(a);
                swapped.push_back(g);
            }
            std::sort(swapped.begin(), swapped.end());
            if (swapped == facets) out.push_back({a, b});
        }
    }
    return out;
}

} // namespace wedgeforge

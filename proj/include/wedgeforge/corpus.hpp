#pragma once

// The bundled example corpus and weight-vector enumerators used by the
// property suites.

#include "wedgeforge/charmaps.hpp"
#include "wedgeforge/complexes.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/wedge.hpp"

#include <string>
#include <vector>

namespace wedgeforge::corpus {

/// ∂Δ¹: the dual of the 1-simplex.
inline SimplicialComplex two_points() { return validate_complex({"1", "2"}, {{"1"}, {"2"}}); }

/// ∂Δ².
inline SimplicialComplex boundary_triangle() {
    return validate_complex({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
}

/// The 4-cycle 1-2-3-4-1, dual of the square.
inline SimplicialComplex square() {
    return validate_complex({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
}

inline IntMatrix hirzebruch_lambda(long long a) { return IntMatrix{{1, 0, -1, 0}, {0, 1, a, -1}}; }

struct Entry {
    std::string name;
    CharPair pair;
};

inline std::vector<Entry> characteristic_pairs() {
    return {
        {"cp1", {two_points(), IntMatrix{{-1, 1}}}},
        {"cp2", {boundary_triangle(), IntMatrix{{1, 0, -1}, {0, 1, -1}}}},
        {"cp1xcp1", {square(), IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}}}},
        {"hirzebruch0", {square(), hirzebruch_lambda(0)}},
        {"hirzebruch1", {square(), hirzebruch_lambda(1)}},
        {"hirzebruch2", {square(), hirzebruch_lambda(2)}},
    };
}

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

inline std::vector<NamedComplex> complexes() {
    return {{"two_points", two_points()}, {"boundary_triangle", boundary_triangle()}, {"square", square()}};
}

/// All J of length m with d(J) ≤ max_d, in lexicographic order.
inline std::vector<WedgeVector> weight_vectors_up_to(std::size_t m, int max_d) {
    std::vector<WedgeVector> out;
    std::vector<int> cur(m, 1);
    auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
        if (pos == m) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 1; v <= 1 + budget; ++v) {
            cur[pos] = v;
            self(self, pos + 1, budget - (v - 1));
        }
        cur[pos] = 1;
    };
    if (max_d >= static_cast<int>(m)) rec(rec, 0, max_d - static_cast<int>(m));
    return out;
}

/// All J of length m with every entry in 1..max_entry.
inline std::vector<WedgeVector> weight_vectors_bounded(std::size_t m, int max_entry) {
    std::vector<WedgeVector> out;
    std::vector<int> cur(m, 1);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == m) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 1; v <= max_entry; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace wedgeforge::corpus

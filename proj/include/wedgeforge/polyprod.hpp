#pragma once

// Polyhedral products Z(K; (X, A)) = ∪_σ D(σ), and their real cubical
// models with pairs (D¹, S⁰)^p realized inside the cube [-1, 1]^d.
//
// A cubical cell is a ternary word over {-, +, I}: coordinate k is either an
// endpoint or the full interval. A cell lies in the model iff the set of
// groups whose coordinates are all I is a face of K, since the A-part of
// (D¹, S⁰)^p is the boundary of [-1, 1]^p.

#include "wedgeforge/complexes.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/parallel.hpp"
#include "wedgeforge/wedge.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace wedgeforge {

/// (D^{2j}, S^{2j-1})
struct DiskPair {
    int dim = 1;
};
/// (D¹, S⁰)^power
struct CubePair {
    int power = 1;
};
struct AbstractPair {
    std::string label;
};
using PairDescriptor = std::variant<DiskPair, CubePair, AbstractPair>;
using PairSpec = std::vector<PairDescriptor>;

enum class Role { X, A };

struct DSigmaPiece {
    Face sigma;
    std::vector<Role> roles; // X on members of sigma, A elsewhere
    bool maximal = false;    // sigma is a facet
};

/// One piece D(σ) per face of K, ∅ included.
inline std::vector<DSigmaPiece> dsigma_decomposition(const SimplicialComplex& k, const PairSpec& spec) {
    if (spec.size() != k.vertex_count()) throw Error(ErrorCode::LengthMismatch, "pair spec length differs from vertex count");
    for (const auto& p : spec) {
        if (const auto* disk = std::get_if<DiskPair>(&p); disk && disk->dim < 1)
            throw Error(ErrorCode::NonPositiveEntry, "disk pair dimension must be positive");
        if (const auto* cube = std::get_if<CubePair>(&p); cube && cube->power < 1)
            throw Error(ErrorCode::NonPositiveEntry, "cube pair power must be positive");
    }
    const auto& facets = k.facets();
    std::vector<DSigmaPiece> out;
    for (Face sigma : all_faces(k)) {
        DSigmaPiece piece{sigma, {}, std::find(facets.begin(), facets.end(), sigma) != facets.end()};
        for (std::size_t i = 0; i < k.vertex_count(); ++i) piece.roles.push_back(sigma.contains(i) ? Role::X : Role::A);
        out.push_back(std::move(piece));
    }
    return out;
}

/// A cell of [-1,1]^d: `interval` marks I coordinates, `plus` marks +1 endpoints.
struct Cell {
    std::uint32_t interval = 0;
    std::uint32_t plus = 0;

    int dimension() const { return std::popcount(interval); }

    std::string descriptor(int ambient) const {
        std::string s(static_cast<std::size_t>(ambient), '-');
        for (int k = 0; k < ambient; ++k) {
            if ((interval >> k) & 1U) s[static_cast<std::size_t>(k)] = 'I';
            else if ((plus >> k) & 1U) s[static_cast<std::size_t>(k)] = '+';
        }
        return s;
    }

    std::uint64_t key() const { return (std::uint64_t{interval} << 32) | plus; }

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct CubicalModel {
    int ambient = 0;
    std::vector<std::string> maximal_faces;   // sorted descriptors
    std::vector<std::vector<Cell>> cells;     // cells[k]: all k-cells, sorted by key

    std::size_t cell_count() const {
        std::size_t n = 0;
        for (const auto& c : cells) n += c.size();
        return n;
    }
    /// Σ (-1)^k #k-cells.
    std::int64_t euler_characteristic() const {
        std::int64_t chi = 0;
        for (std::size_t k = 0; k < cells.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(cells[k].size());
        return chi;
    }
};

inline constexpr int kMaxCubeDimension = 24;
inline constexpr int kDefaultAmbientGuard = 12;

/// Z(K; (D¹,S⁰)^{p_1}, ..., (D¹,S⁰)^{p_m}) in [-1,1]^{Σ p_i}; group i owns a
/// consecutive block of p_i coordinates.
inline CubicalModel real_model(const SimplicialComplex& k, const std::vector<int>& powers) {
    if (powers.size() != k.vertex_count()) throw Error(ErrorCode::LengthMismatch, "one power per vertex required");
    for (int p : powers)
        if (p < 1) throw Error(ErrorCode::NonPositiveEntry, "powers must be positive");
    const int d = std::accumulate(powers.begin(), powers.end(), 0);
    if (d > kMaxCubeDimension) throw Error(ErrorCode::AmbientTooLarge, "ambient dimension " + std::to_string(d) + " too large");

    std::vector<std::uint32_t> group_mask;
    int offset = 0;
    for (int p : powers) {
        group_mask.push_back(((std::uint32_t{1} << p) - 1) << offset);
        offset += p;
    }
    const FaceSet in_k = face_set(k);
    const std::uint32_t limit = std::uint32_t{1} << d;
    std::vector<char> allowed(limit, 0);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        Face full_groups;
        for (std::size_t i = 0; i < group_mask.size(); ++i)
            if ((mask & group_mask[i]) == group_mask[i]) full_groups = full_groups.with(i);
        allowed[mask] = in_k.count(full_groups) != 0 ? 1 : 0;
    }

    CubicalModel model;
    model.ambient = d;
    model.cells.assign(static_cast<std::size_t>(d) + 1, {});
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (!allowed[mask]) continue;
        bool maximal = true;
        for (int c = 0; c < d && maximal; ++c)
            if (((mask >> c) & 1U) == 0 && allowed[mask | (std::uint32_t{1} << c)]) maximal = false;
        const std::uint32_t free = (limit - 1) & ~mask;
        std::uint32_t sub = free;
        for (;;) {
            Cell cell{mask, sub};
            model.cells[static_cast<std::size_t>(cell.dimension())].push_back(cell);
            if (maximal) model.maximal_faces.push_back(cell.descriptor(d));
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    while (model.cells.size() > 1 && model.cells.back().empty()) model.cells.pop_back();
    for (auto& group : model.cells)
        std::sort(group.begin(), group.end(), [](const Cell& a, const Cell& b) { return a.key() < b.key(); });
    std::sort(model.maximal_faces.begin(), model.maximal_faces.end());
    return model;
}

/// Z(K(J); (D¹,S⁰)^p) with the same power p on every vertex of K(J).
inline CubicalModel real_model_wedged(const SimplicialComplex& k, const WedgeVector& j, int power_per_copy) {
    check_length(k, j);
    const WedgedComplex kj = wedge_J(k, j);
    return real_model(kj.complex, std::vector<int>(kj.complex.vertex_count(), power_per_copy));
}

struct SubspaceComparison {
    bool equal = false;
    std::size_t ambient = 0;
    std::size_t maximal_face_count = 0;
    std::optional<std::string> first_difference; // descriptor and which side has it
};

/// Compares Z(K; (D¹,S⁰)^J) with Z(K(J); (D¹,S⁰)) cell-for-cell. Coordinates of
/// group i correspond to v_{i1}, ..., v_{ij_i} in canonical order.
inline SubspaceComparison compare_wedge_subspaces(const SimplicialComplex& k, const WedgeVector& j) {
    check_length(k, j);
    const CubicalModel grouped = real_model(k, j.entries());
    const CubicalModel wedged = real_model_wedged(k, j, 1);
    SubspaceComparison out;
    out.ambient = static_cast<std::size_t>(grouped.ambient);
    out.maximal_face_count = grouped.maximal_faces.size();
    out.equal = grouped.ambient == wedged.ambient && grouped.maximal_faces == wedged.maximal_faces;
    if (!out.equal) {
        std::vector<std::string> only_grouped, only_wedged;
        std::set_difference(grouped.maximal_faces.begin(), grouped.maximal_faces.end(), wedged.maximal_faces.begin(),
                            wedged.maximal_faces.end(), std::back_inserter(only_grouped));
        std::set_difference(wedged.maximal_faces.begin(), wedged.maximal_faces.end(), grouped.maximal_faces.begin(),
                            grouped.maximal_faces.end(), std::back_inserter(only_wedged));
        if (!only_grouped.empty() && (only_wedged.empty() || only_grouped.front() < only_wedged.front()))
            out.first_difference = only_grouped.front() + " (only in Z(K;(D1,S0)^J))";
        else if (!only_wedged.empty())
            out.first_difference = only_wedged.front() + " (only in Z(K(J);(D1,S0)))";
    }
    return out;
}

inline bool verify_subspace_equality(const SimplicialComplex& k, const WedgeVector& j) {
    return compare_wedge_subspaces(k, j).equal;
}

/// Sparse integer matrix stored by columns; entries are small machine integers.
struct SparseColumnMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
};

/// Cubical boundary maps: result[k] sends k-cells to (k-1)-cells (result[0] is
/// empty). ∂ of a cell with interval coordinates k_1 < ... < k_r is
/// Σ_s (-1)^{s-1} (cell[k_s := +] - cell[k_s := -]).
inline std::vector<SparseColumnMatrix> boundary_matrices(const CubicalModel& model) {
    std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index(model.cells.size());
    for (std::size_t k = 0; k < model.cells.size(); ++k)
        for (std::size_t i = 0; i < model.cells[k].size(); ++i) index[k].emplace(model.cells[k][i].key(), static_cast<std::uint32_t>(i));

    std::vector<SparseColumnMatrix> out(model.cells.size());
    for (std::size_t k = 1; k < model.cells.size(); ++k) {
        out[k].rows = model.cells[k - 1].size();
        out[k].columns.resize(model.cells[k].size());
        detail::parallel_for(model.cells[k].size(), [&](std::size_t i) {
            const Cell c = model.cells[k][i];
            auto& col = out[k].columns[i];
            std::int64_t sign = 1;
            for (std::uint32_t bits = c.interval; bits != 0; bits &= bits - 1) {
                const std::uint32_t bit = bits & (~bits + 1);
                const Cell up{c.interval & ~bit, c.plus | bit};
                const Cell down{c.interval & ~bit, c.plus & ~bit};
                col.emplace_back(index[k - 1].at(up.key()), sign);
                col.emplace_back(index[k - 1].at(down.key()), -sign);
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
        });
    }
    return out;
}

/// True iff ∂_{k-1} ∘ ∂_k = 0 for every k.
inline bool boundary_squares_to_zero(const std::vector<SparseColumnMatrix>& boundaries) {
    for (std::size_t k = 2; k < boundaries.size(); ++k) {
        for (const auto& col : boundaries[k].columns) {
            std::map<std::uint32_t, std::int64_t> acc;
            for (auto [r, v] : col)
                for (auto [rr, vv] : boundaries[k - 1].columns[r]) acc[rr] += v * vv;
            for (auto& [r, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

struct ElementaryDivisorSummary {
    std::size_t rank = 0;
    std::vector<Integer> torsion; // divisors > 1
};

namespace detail {

inline std::int64_t checked_mul_sub(std::int64_t a, std::int64_t f, std::int64_t b) {
    std::int64_t prod = 0, out = 0;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
        throw Error(ErrorCode::Overflow, "sparse elimination left the 64-bit range");
    }
    return out;
}

} // namespace detail

/// Rank and nontrivial elementary divisors of a sparse integer matrix.
///
/// Column reduction keyed on the lowest nonzero row. A column whose low entry
/// is ±1 becomes a pivot for that row; pivots are triangular with unit
/// diagonal, so they contribute divisor 1 each. Every other column is cleared
/// of all pivot rows and the residual goes through the dense Smith form.
inline ElementaryDivisorSummary sparse_elementary_divisors(const SparseColumnMatrix& m) {
    using Column = std::vector<std::pair<std::uint32_t, std::int64_t>>; // sorted by row
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<Column> pivots;
    std::vector<std::size_t> pivot_of_row(m.rows, kNone);
    std::vector<Column> leftovers;
    Column scratch;

    // col -= factor * pcol
    auto axpy = [&scratch](Column& col, std::int64_t factor, const Column& pcol) {
        scratch.clear();
        auto a = col.cbegin();
        auto b = pcol.begin();
        while (a != col.cend() || b != pcol.end()) {
            if (b == pcol.end() || (a != col.cend() && a->first < b->first)) {
                scratch.push_back(*a++);
            } else if (a == col.cend() || b->first < a->first) {
                scratch.emplace_back(b->first, detail::checked_mul_sub(0, factor, b->second));
                ++b;
            } else {
                const std::int64_t v = detail::checked_mul_sub(a->second, factor, b->second);
                if (v != 0) scratch.emplace_back(a->first, v);
                ++a;
                ++b;
            }
        }
        col.swap(scratch);
    };

    for (const auto& raw : m.columns) {
        Column col;
        for (auto [r, v] : raw)
            if (v != 0) col.emplace_back(r, v);
        std::sort(col.begin(), col.end());
        while (!col.empty() && pivot_of_row[col.back().first] != kNone) {
            const Column& p = pivots[pivot_of_row[col.back().first]];
            axpy(col, col.back().second * p.back().second, p);
        }
        if (col.empty()) continue;
        if (col.back().second == 1 || col.back().second == -1) {
            pivot_of_row[col.back().first] = pivots.size();
            pivots.push_back(std::move(col));
        } else {
            leftovers.push_back(std::move(col));
        }
    }

    ElementaryDivisorSummary out;
    out.rank = pivots.size();
    std::vector<Column> residual;
    for (auto& col : leftovers) {
        // Clear pivot rows from the top down; a pivot has no entries past its
        // low row, so rows above the current one are never touched again.
        std::size_t i = col.size();
        while (i > 0) {
            const auto [r, v] = col[i - 1];
            if (pivot_of_row[r] == kNone) {
                --i;
                continue;
            }
            const Column& p = pivots[pivot_of_row[r]];
            axpy(col, v * p.back().second, p);
            i = static_cast<std::size_t>(std::lower_bound(col.begin(), col.end(), std::pair<std::uint32_t, std::int64_t>{r, 0}) - col.begin());
        }
        if (!col.empty()) residual.push_back(std::move(col));
    }
    if (residual.empty()) return out;

    std::map<std::uint32_t, std::size_t> row_index;
    for (const auto& col : residual)
        for (auto& [r, v] : col) row_index.emplace(r, 0);
    std::size_t next = 0;
    for (auto& [r, idx] : row_index) idx = next++;
    IntMatrix dense(row_index.size(), residual.size());
    for (std::size_t c = 0; c < residual.size(); ++c)
        for (auto& [r, v] : residual[c]) dense(row_index.at(r), c) = v;
    const SmithForm snf = smith_normal_form(dense);
    for (const auto& d : snf.divisors) {
        if (d == 0) continue;
        ++out.rank;
        if (d != 1) out.torsion.push_back(d);
    }
    return out;
}

struct HomologyGroup {
    std::int64_t betti = 0;
    std::vector<Integer> torsion;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Integral homology H_0..H_top of the cubical model.
inline std::vector<HomologyGroup> cubical_homology(const CubicalModel& model) {
    const auto boundaries = boundary_matrices(model);
    if (!boundary_squares_to_zero(boundaries)) {
        throw Error(ErrorCode::ChainComplexInconsistent, "boundary of boundary is nonzero");
    }
    const std::size_t top = model.cells.size();
    std::vector<ElementaryDivisorSummary> summaries(top + 1);
    detail::parallel_for(top, [&](std::size_t k) {
        if (k >= 1) summaries[k] = sparse_elementary_divisors(boundaries[k]);
    });
    std::vector<HomologyGroup> out(top);
    for (std::size_t k = 0; k < top; ++k) {
        const auto cells = static_cast<std::int64_t>(model.cells[k].size());
        const auto rank_out = static_cast<std::int64_t>(k >= 1 ? summaries[k].rank : 0);
        const auto rank_in = static_cast<std::int64_t>(k + 1 < top ? summaries[k + 1].rank : 0);
        out[k].betti = cells - rank_out - rank_in;
        if (k + 1 < top) out[k].torsion = summaries[k + 1].torsion;
    }
    return out;
}

inline std::int64_t total_betti(const std::vector<HomologyGroup>& h) {
    std::int64_t total = 0;
    for (const auto& g : h) total += g.betti;
    return total;
}

struct BettiSweepRow {
    WedgeVector J;
    int ambient = 0;
    std::vector<std::int64_t> betti;
    std::int64_t total = 0;
};

struct BettiSweep {
    std::vector<BettiSweepRow> rows;
    bool all_agree = false;
};

/// Total Betti numbers of Z(K(J); (D¹,S⁰)²) ≅ Z(K(J); (D²,S¹)) for each J.
inline BettiSweep total_betti_sweep(const SimplicialComplex& k, const std::vector<WedgeVector>& js,
                                    int ambient_guard = kDefaultAmbientGuard) {
    BettiSweep sweep;
    for (const auto& j : js) {
        check_length(k, j);
        const int ambient = 2 * j.d();
        if (ambient > ambient_guard) {
            throw Error(ErrorCode::AmbientTooLarge, "ambient dimension " + std::to_string(ambient) + " exceeds guard " +
                                                        std::to_string(ambient_guard));
        }
        const auto homology = cubical_homology(real_model_wedged(k, j, 2));
        BettiSweepRow row{j, ambient, {}, total_betti(homology)};
        for (const auto& g : homology) row.betti.push_back(g.betti);
        sweep.rows.push_back(std::move(row));
    }
    sweep.all_agree = std::all_of(sweep.rows.begin(), sweep.rows.end(),
                                  [&](const BettiSweepRow& r) { return r.total == sweep.rows.front().total; });
    return sweep;
}

} // namespace wedgeforge

#pragma once

// Characteristic matrices: validation, the derived matrix λ(J), and the
// kernel-torus matrices S and S(J).

#include "wedgeforge/complexes.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/parallel.hpp"
#include "wedgeforge/wedge.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wedgeforge {

/// A complex K (m vertices, pure of dimension n-1) with an n x m matrix λ
/// whose column i belongs to vertex i.
struct CharPair {
    SimplicialComplex K;
    IntMatrix lambda;
};

struct ValidationReport {
    std::vector<std::pair<Face, Integer>> facet_minors;
    std::vector<Face> bad_facets;        // facet minor not ±1
    std::vector<Face> non_summand_faces; // some SNF divisor of the column block ≠ 1
    bool facet_minors_ok = false;
    bool faces_ok = false;
    bool passed = false;
};

/// Checks that every facet minor is ±1 and that the columns of every face span
/// a direct summand (all elementary divisors 1).
inline ValidationReport verify_characteristic(const SimplicialComplex& k, const IntMatrix& lambda) {
    if (lambda.cols() != k.vertex_count()) {
        throw Error(ErrorCode::ShapeMismatch, "lambda has " + std::to_string(lambda.cols()) + " columns for " +
                                                  std::to_string(k.vertex_count()) + " vertices");
    }
    if (k.is_void() || !k.is_pure()) throw Error(ErrorCode::NotPure, "characteristic pairs need a pure complex");
    if (static_cast<std::size_t>(k.dimension() + 1) != lambda.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "lambda has " + std::to_string(lambda.rows()) + " rows but facets have " +
                                                  std::to_string(k.dimension() + 1) + " vertices");
    }
    std::vector<std::size_t> all_rows(lambda.rows());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;

    ValidationReport report;
    const auto& facets = k.facets();
    std::vector<Integer> minors(facets.size());
    detail::parallel_for(facets.size(), [&](std::size_t i) { minors[i] = minor(lambda, all_rows, facets[i].members()); });
    for (std::size_t i = 0; i < facets.size(); ++i) {
        report.facet_minors.emplace_back(facets[i], minors[i]);
        if (abs(minors[i]) != 1) report.bad_facets.push_back(facets[i]);
    }

    std::vector<Face> nonempty;
    for (Face f : all_faces(k))
        if (!f.empty()) nonempty.push_back(f);
    std::vector<char> summand(nonempty.size(), 0);
    detail::parallel_for(nonempty.size(), [&](std::size_t i) {
        const SmithForm snf = smith_normal_form(lambda.columns(nonempty[i].members()));
        summand[i] = snf.all_unit() ? 1 : 0;
    });
    for (std::size_t i = 0; i < nonempty.size(); ++i)
        if (!summand[i]) report.non_summand_faces.push_back(nonempty[i]);

    report.facet_minors_ok = report.bad_facets.empty();
    report.faces_ok = report.non_summand_faces.empty();
    report.passed = report.facet_minors_ok && report.faces_ok;
    return report;
}

inline ValidationReport verify_characteristic(const CharPair& pair) { return verify_characteristic(pair.K, pair.lambda); }

/// Columns of λ(J) in block order: the extra copies v_{i2..ij_i} group by
/// group, then the first copies v_{11}, ..., v_{m1}. Entries are (group, copy).
inline std::vector<std::pair<std::size_t, std::size_t>> lambda_J_column_tags(const WedgeVector& j) {
    std::vector<std::pair<std::size_t, std::size_t>> tags;
    for (std::size_t i = 0; i < j.size(); ++i)
        for (int t = 2; t <= j[i]; ++t) tags.emplace_back(i + 1, static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < j.size(); ++i) tags.emplace_back(i + 1, 1);
    return tags;
}

/// The (d(J)-m+n) x d(J) matrix λ(J): for each group an identity block on
/// its extra copies with -1 in the v_{i1} column, and λ on the first-copy
/// columns in the bottom n rows.
inline IntMatrix lambda_J_matrix(const IntMatrix& lambda, const WedgeVector& j) {
    const std::size_t m = lambda.cols();
    const std::size_t n = lambda.rows();
    if (j.size() != m) throw Error(ErrorCode::LengthMismatch, "weight vector length differs from column count");
    const std::size_t d = static_cast<std::size_t>(j.d());
    const std::size_t extra = d - m;
    IntMatrix out(extra + n, d);
    std::size_t row = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (int t = 2; t <= j[i]; ++t) {
            out(row, row) = 1;
            out(row, extra + i) = -1;
            ++row;
        }
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) out(extra + r, extra + c) = lambda(r, c);
    return out;
}

struct DerivedCharPair {
    CharPair base;
    WedgeVector J;
    WedgedComplex KJ;
    IntMatrix lambda_J;                      // columns in block order
    std::vector<std::string> column_order;   // labels "i.t" of those columns
    std::vector<std::size_t> column_vertex;  // column -> vertex index of KJ.complex

    /// λ(J) with columns permuted into the vertex order of KJ.complex.
    IntMatrix lambda_J_canonical() const {
        IntMatrix out(lambda_J.rows(), lambda_J.cols());
        for (std::size_t c = 0; c < lambda_J.cols(); ++c)
            for (std::size_t r = 0; r < lambda_J.rows(); ++r) out(r, column_vertex[c]) = lambda_J(r, c);
        return out;
    }
};

inline DerivedCharPair build_lambda_J(const CharPair& pair, const WedgeVector& j) {
    check_length(pair.K, j);
    if (!verify_characteristic(pair).passed) {
        throw Error(ErrorCode::InvalidBase, "base matrix is not characteristic for the complex");
    }
    DerivedCharPair out{pair, j, wedge_J(pair.K, j), lambda_J_matrix(pair.lambda, j), {}, {}};
    for (auto [group, copy] : lambda_J_column_tags(j)) {
        out.column_order.push_back(canonical_label(group, copy));
        out.column_vertex.push_back(canonical_index(j, group, copy));
    }
    return out;
}

/// Re-verifies (K(J), λ(J)); a failure here contradicts the derivation and is
/// raised as TheoremViolation.
inline ValidationReport verify_lambda_J(const DerivedCharPair& derived) {
    ValidationReport report = verify_characteristic(derived.KJ.complex, derived.lambda_J_canonical());
    if (!report.passed) {
        throw Error(ErrorCode::TheoremViolation, "lambda(J) failed verification for J = (" + derived.J.str() + ")");
    }
    return report;
}

/// Kernel matrix S (m x (m-n)) of λ.
inline IntMatrix kernel_S(const CharPair& pair) { return kernel_basis(pair.lambda); }
inline IntMatrix kernel_S(const IntMatrix& lambda) { return kernel_basis(lambda); }

/// S(J): the row of S for group i repeated on every copy of group i, rows in
/// the block order of λ(J).
inline IntMatrix build_S_J(const IntMatrix& s, const WedgeVector& j) {
    if (s.rows() != j.size()) throw Error(ErrorCode::ShapeMismatch, "S has " + std::to_string(s.rows()) + " rows for " +
                                                                         std::to_string(j.size()) + " groups");
    const auto tags = lambda_J_column_tags(j);
    IntMatrix out(tags.size(), s.cols());
    for (std::size_t r = 0; r < tags.size(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c) out(r, c) = s(tags[r].first - 1, c);
    return out;
}

/// λ(J)·S(J) = 0, S(J) saturated, and exactly m-n columns.
inline bool verify_kernel_J(const IntMatrix& lambda_J, const IntMatrix& s_J, std::size_t m, std::size_t n) {
    if (s_J.rows() != lambda_J.cols()) throw Error(ErrorCode::ShapeMismatch, "S(J) rows differ from lambda(J) columns");
    if (s_J.cols() != m - n) return false;
    if (!(lambda_J * s_J).is_zero()) return false;
    const SmithForm snf = smith_normal_form(s_J);
    return snf.all_unit() && snf.rank() == s_J.cols();
}

inline bool verify_kernel_J(const DerivedCharPair& derived, const IntMatrix& s_J) {
    return verify_kernel_J(derived.lambda_J, s_J, derived.base.lambda.cols(), derived.base.lambda.rows());
}

} // namespace wedgeforge

#pragma once

// Nests M(J_0) ⊂ M(J_1) ⊂ ... of codimension-two embeddings, their normal
// bundle data, and rank-level checks of the restriction epimorphisms.

#include "wedgeforge/charmaps.hpp"
#include "wedgeforge/rings.hpp"
#include "wedgeforge/wedge.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace wedgeforge {

/// Strict order: J ≤ L componentwise and J ≠ L.
inline bool leq(const WedgeVector& j, const WedgeVector& l) {
    if (j.size() != l.size()) throw Error(ErrorCode::LengthMismatch, "weight vectors of different lengths");
    bool strict = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] > l[i]) return false;
        if (j[i] < l[i]) strict = true;
    }
    return strict;
}

/// One summand (l_i - j_i) α_i of the normal bundle, c_1(α_i) = v_i.
struct NormalSummand {
    std::size_t index = 0; // 1-based group
    int multiplicity = 0;
    std::string chern_symbol;
};

struct NestStep {
    WedgeVector J;
    WedgeVector L;
    std::vector<int> multiplicities;
    std::vector<NormalSummand> summands; // nonzero multiplicities only

    int complex_codimension() const {
        int s = 0;
        for (int m : multiplicities) s += m;
        return s;
    }
    int real_codimension() const { return 2 * complex_codimension(); }
};

/// Normal bundle ⊕ (l_i - j_i) α_i of M(J) ⊂ M(L).
inline NestStep normal_bundle(const WedgeVector& j, const WedgeVector& l) {
    if (!leq(j, l)) throw Error(ErrorCode::NotComparable, "(" + j.str() + ") is not below (" + l.str() + ")");
    NestStep step{j, l, {}, {}};
    for (std::size_t i = 0; i < j.size(); ++i) {
        const int mult = l[i] - j[i];
        step.multiplicities.push_back(mult);
        if (mult > 0) step.summands.push_back({i + 1, mult, "v" + std::to_string(i + 1)});
    }
    return step;
}

struct Nest {
    CharPair base;
    std::vector<WedgeVector> sequence; // J_0 = (1,...,1), then +1 per step
};

/// J_0 = (1,...,1); step i adds one to the group increments[i] (1-based).
inline Nest make_nest(const CharPair& base, const std::vector<std::size_t>& increments) {
    const std::size_t m = base.K.vertex_count();
    Nest nest{base, {WedgeVector::ones(m)}};
    for (auto idx : increments) {
        if (idx < 1 || idx > m) throw Error(ErrorCode::IndexOutOfRange, "increment index " + std::to_string(idx) + " not in 1.." + std::to_string(m));
        nest.sequence.push_back(nest.sequence.back().incremented(idx - 1));
    }
    return nest;
}

struct NestStage {
    WedgeVector J;
    int d = 0;
    int real_dimension = 0;          // 2(d(J) - m + n)
    bool dimension_ok = false;       // equals 2n + 2i
    std::vector<std::int64_t> betti; // even Betti numbers
    bool manifold_certified = false;
    std::int64_t h2_rank = 0;
    bool h2_ok = false;              // equals m - n
    bool surjectivity_ranks_ok = true; // rank H^k(M(J_i)) ≥ rank H^k(M(J_{i-1}))
    std::optional<NestStep> step;    // embedding from the previous stage
};

struct NestReport {
    std::vector<NestStage> stages;
    bool passed = false;
};

inline NestReport nest_report(const Nest& nest) {
    require_valid_base(nest.base.K, nest.base.lambda);
    const auto m = static_cast<int>(nest.base.lambda.cols());
    const auto n = static_cast<int>(nest.base.lambda.rows());
    NestReport report;
    for (std::size_t i = 0; i < nest.sequence.size(); ++i) {
        const WedgeVector& j = nest.sequence[i];
        NestStage stage;
        stage.J = j;
        stage.d = j.d();
        stage.real_dimension = 2 * (stage.d - m + n);
        stage.dimension_ok = stage.real_dimension == 2 * n + 2 * static_cast<int>(i) && stage.d == m + static_cast<int>(i);
        const BettiNumbers b = betti_MJ(nest.base.K, nest.base.lambda, j);
        stage.betti = b.values;
        stage.manifold_certified = b.manifold_certified;
        stage.h2_rank = stage.betti.size() > 1 ? stage.betti[1] : 0;
        stage.h2_ok = stage.h2_rank == m - n;
        if (i > 0) {
            const auto& prev = report.stages.back().betti;
            for (std::size_t k = 0; k < prev.size() && k < stage.betti.size(); ++k)
                if (stage.betti[k] < prev[k]) stage.surjectivity_ranks_ok = false;
            stage.step = normal_bundle(nest.sequence[i - 1], j);
        }
        report.stages.push_back(std::move(stage));
    }
    report.passed = std::all_of(report.stages.begin(), report.stages.end(), [](const NestStage& s) {
        return s.dimension_ok && s.h2_ok && s.surjectivity_ranks_ok && (!s.step || s.step->complex_codimension() == 1);
    });
    return report;
}

} // namespace wedgeforge

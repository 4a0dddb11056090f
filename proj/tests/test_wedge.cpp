#include "oracles.hpp"

#include "wedgeforge/corpus.hpp"
#include "wedgeforge/wedge.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wedgeforge;

namespace {

oracle::Family labelled(const SimplicialComplex& k, const std::vector<Face>& faces) {
    oracle::Family out;
    for (Face f : faces) {
        auto l = k.labels_of(f);
        out.insert(oracle::LabelSet(l.begin(), l.end()));
    }
    return out;
}

SimplicialComplex boundary_simplex_on(const std::vector<std::string>& verts) {
    std::vector<std::vector<std::string>> facets;
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
        std::vector<std::string> f;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != skip) f.push_back(verts[i]);
        facets.push_back(f);
    }
    return validate_complex(verts, facets);
}

} // namespace

TEST(Wedge, WeightVector) {
    EXPECT_EQ(WedgeVector({1, 1, 1}).d(), 3);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(d_of(WedgeVector({k, 1})), k + 1);
    EXPECT_EQ(WedgeVector({2, 2, 2, 2}).d(), 8);
    EXPECT_THROW(WedgeVector({0, 1}), Error);
    EXPECT_EQ(WedgeVector({2, 1}).str(), "2,1");
}

TEST(Wedge, TwoPointsWedgeIsTriangle) {
    const auto w = wedge_at(corpus::two_points(), 0);
    EXPECT_EQ(w.J, WedgeVector({2, 1}));
    EXPECT_EQ(w.complex.vertices(), (std::vector<std::string>{"1.1", "1.2", "2.1"}));
    EXPECT_EQ(oracle::facets_of(w.complex), (oracle::Family{{"1.1", "1.2"}, {"1.1", "2.1"}, {"1.2", "2.1"}}));
}

TEST(Wedge, SimplexWedgesToSimplex) {
    const auto edge = validate_complex({{"1", "2"}});
    const auto w = wedge_at(edge, 1);
    EXPECT_EQ(oracle::facets_of(w.complex), (oracle::Family{{"1.1", "2.1", "2.2"}}));
}

TEST(Wedge, SquareWedgeMinimalNonfaces) {
    const auto w = wedge_at(corpus::square(), 0);
    EXPECT_EQ(labelled(w.complex, minimal_nonfaces(w.complex)), (oracle::Family{{"1.1", "1.2", "3.1"}, {"2.1", "4.1"}}));
    EXPECT_THROW(wedge_at(corpus::square(), 4), Error);
}

TEST(Wedge, OnesIsIdentity) {
    for (const auto& [name, k] : corpus::complexes()) {
        const auto w = wedge_J(k, WedgeVector::ones(k.vertex_count()));
        EXPECT_EQ(oracle::facets_of(w.complex), oracle::facets_of(as_wedged(k).complex)) << name;
        EXPECT_EQ(w.complex.facets(), k.facets()) << name;
        EXPECT_EQ(wedged_from_nonfaces(k, WedgeVector::ones(k.vertex_count())), w) << name;
    }
}

TEST(Wedge, TwoPointsGivesBoundarySimplex) {
    for (int k = 1; k <= 8; ++k) {
        for (int j1 = 1; j1 <= k; ++j1) {
            const WedgeVector j({j1, k + 1 - j1});
            const auto w = wedge_J(corpus::two_points(), j);
            EXPECT_EQ(w.complex, boundary_simplex_on(canonical_labels(j))) << j.str();
        }
    }
}

TEST(Wedge, DefinitionOracleOnSweep) {
    for (const auto& [name, k] : corpus::complexes()) {
        const int m = static_cast<int>(k.vertex_count());
        for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + 3)) {
            const auto w = wedge_J(k, j);
            EXPECT_EQ(oracle::facets_of(w.complex), oracle::wedge_facets(k, j.entries())) << name << " " << j.str();
            EXPECT_EQ(w, wedged_from_nonfaces(k, j)) << name << " " << j.str();
        }
    }
}

TEST(Wedge, SquareNonfacesFromDefinition) {
    const auto w = wedged_from_nonfaces(corpus::square(), WedgeVector({2, 1, 2, 1}));
    EXPECT_EQ(w.complex.vertex_count(), 6u);
    EXPECT_EQ(labelled(w.complex, minimal_nonfaces(w.complex)),
              (oracle::Family{{"1.1", "1.2", "3.1", "3.2"}, {"2.1", "4.1"}}));
}

TEST(Wedge, RandomOrdersAgree) {
    std::mt19937_64 rng(7);
    for (const auto& [name, k] : corpus::complexes()) {
        const int m = static_cast<int>(k.vertex_count());
        for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + 3)) {
            const auto ref = wedge_J(k, j);
            for (int t = 0; t < 5; ++t) EXPECT_EQ(wedge_in_order(k, random_wedge_order(j, rng)), ref) << name << " " << j.str();
        }
    }
}

TEST(Wedge, Composition) {
    // Wedging K(J) again by J' equals K(J'') after relabeling the groups.
    const auto k = corpus::square();
    const WedgeVector j({2, 1, 1, 1});
    const auto kj = wedge_J(k, j).complex; // vertices 1.1 1.2 2.1 3.1 4.1
    const WedgeVector jp({1, 2, 1, 1, 1});  // doubles vertex 1.2
    const auto twice = wedge_J(kj, jp).complex;
    const auto direct = wedge_J(k, WedgeVector({3, 1, 1, 1})).complex;
    EXPECT_EQ(twice.vertex_count(), direct.vertex_count());
    // Canonical labels of the second wedge are "g.t" over the 5 groups of kj;
    // map (1,1)->1.1, (2,1)->1.2, (2,2)->1.3, rest by group.
    const std::map<std::string, std::string> rename{{"1.1", "1.1"}, {"2.1", "1.2"}, {"2.2", "1.3"},
                                                    {"3.1", "2.1"}, {"4.1", "3.1"}, {"5.1", "4.1"}};
    std::vector<std::string> labels;
    for (const auto& v : twice.vertices()) labels.push_back(rename.at(v));
    EXPECT_EQ(oracle::facets_of(relabel(twice, labels)), oracle::facets_of(direct));
}

TEST(Wedge, LengthMismatch) {
    try {
        wedge_J(corpus::square(), WedgeVector({1, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
    EXPECT_THROW(wedged_from_nonfaces(corpus::square(), WedgeVector({1})), Error);
}

TEST(Wedge, DetectWedge) {
    EXPECT_EQ(detect_wedge(corpus::boundary_triangle()).size(), 3u);
    EXPECT_TRUE(detect_wedge(corpus::two_points()).empty());
    EXPECT_TRUE(detect_wedge(corpus::square()).empty());
    // Every wedge K(v) has the new pair as a candidate.
    const auto w = wedge_at(corpus::square(), 2).complex;
    const auto pairs = detect_wedge(w);
    const std::array<std::size_t, 2> expected{w.require_index("3.1"), w.require_index("3.2")};
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), expected), pairs.end());
}

TEST(Wedge, DimensionAndVertexCount) {
    for (const auto& [name, k] : corpus::complexes()) {
        const int m = static_cast<int>(k.vertex_count());
        const int n = k.dimension() + 1;
        for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + 4)) {
            const auto kj = wedge_J(k, j).complex;
            EXPECT_EQ(static_cast<int>(kj.vertex_count()), j.d());
            EXPECT_TRUE(kj.is_pure());
            EXPECT_EQ(kj.dimension(), j.d() - m + n - 1);
        }
    }
}

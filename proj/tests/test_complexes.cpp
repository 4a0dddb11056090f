#include "oracles.hpp"

#include "wedgeforge/complexes.hpp"
#include "wedgeforge/corpus.hpp"

#include <gtest/gtest.h>

using namespace wedgeforge;

namespace {

oracle::Family fam(std::initializer_list<oracle::LabelSet> sets) { return oracle::Family(sets); }

SimplicialComplex path3() { return validate_complex({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return ErrorCode::Overflow;
}

} // namespace

TEST(Complexes, TwoPointsIsZeroDimensional) {
    const auto k = corpus::two_points();
    EXPECT_EQ(k.dimension(), 0);
    EXPECT_EQ(oracle::facets_of(k), fam({{"1"}, {"2"}}));
}

TEST(Complexes, SubsumedFacetDropped) {
    const auto k = validate_complex({{"1", "2"}, {"2"}});
    EXPECT_EQ(oracle::facets_of(k), fam({{"1", "2"}}));
}

TEST(Complexes, BoundaryTriangle) {
    const auto k = validate_complex({{"1", "2"}, {"2", "3"}, {"3", "1"}});
    EXPECT_EQ(k.dimension(), 1);
    EXPECT_EQ(k.facets().size(), 3u);
}

TEST(Complexes, ValidationErrors) {
    EXPECT_EQ(code_of([] { validate_complex({"1", "2", "3"}, {{"1", "2"}}); }), ErrorCode::EmptyVertexSet);
    EXPECT_EQ(code_of([] { validate_complex({"1", "1"}, {{"1"}}); }), ErrorCode::DuplicateVertexLabel);
    EXPECT_EQ(code_of([] { validate_complex({"1"}, {{"2"}}); }), ErrorCode::UnknownVertex);
    EXPECT_EQ(code_of([] { validate_complex(std::vector<std::vector<std::string>>{}); }), ErrorCode::EmptyVertexSet);
}

TEST(Complexes, VoidAndIrrelevantDiffer) {
    EXPECT_TRUE(SimplicialComplex::void_complex().is_void());
    EXPECT_TRUE(SimplicialComplex::irrelevant().is_irrelevant());
    EXPECT_FALSE(SimplicialComplex::void_complex() == SimplicialComplex::irrelevant());
    EXPECT_EQ(SimplicialComplex::irrelevant().dimension(), -1);
    EXPECT_EQ(all_faces(SimplicialComplex::void_complex()).size(), 0u);
    EXPECT_EQ(all_faces(SimplicialComplex::irrelevant()).size(), 1u);
}

TEST(Complexes, FacesMatchSubsetEnumeration) {
    for (const auto& [name, k] : corpus::complexes()) {
        oracle::Family mine;
        for (Face f : all_faces(k)) {
            auto l = k.labels_of(f);
            mine.insert(oracle::LabelSet(l.begin(), l.end()));
        }
        EXPECT_EQ(mine, oracle::all_faces(k.vertices(), oracle::facets_of(k))) << name;
    }
    const auto by_size = faces(corpus::square());
    ASSERT_EQ(by_size.size(), 3u);
    EXPECT_EQ(by_size[0].size(), 1u);
    EXPECT_EQ(by_size[1].size(), 4u);
    EXPECT_EQ(by_size[2].size(), 4u);
    EXPECT_EQ(faces(corpus::two_points())[1].size(), 2u);
}

TEST(Complexes, MinimalNonfaces) {
    auto labels = [](const SimplicialComplex& k) {
        oracle::Family out;
        for (Face f : minimal_nonfaces(k)) {
            auto l = k.labels_of(f);
            out.insert(oracle::LabelSet(l.begin(), l.end()));
        }
        return out;
    };
    EXPECT_EQ(labels(corpus::two_points()), fam({{"1", "2"}}));
    EXPECT_EQ(labels(corpus::boundary_triangle()), fam({{"1", "2", "3"}}));
    EXPECT_EQ(labels(corpus::square()), fam({{"1", "3"}, {"2", "4"}}));
    for (const auto& [name, k] : corpus::complexes()) {
        const auto faces = oracle::all_faces(k.vertices(), oracle::facets_of(k));
        EXPECT_EQ(labels(k), oracle::minimal_nonfaces(k.vertices(), faces)) << name;
    }
    // Sorted lexicographically.
    const auto mnf = minimal_nonfaces(corpus::square());
    EXPECT_TRUE(std::is_sorted(mnf.begin(), mnf.end()));
}

TEST(Complexes, Links) {
    const auto tri = corpus::boundary_triangle();
    EXPECT_EQ(oracle::facets_of(link(tri, tri.face_of({"1"}))), fam({{"2"}, {"3"}}));
    const auto two = corpus::two_points();
    EXPECT_TRUE(link(two, two.face_of({"1"})).is_irrelevant());
    const auto sq = corpus::square();
    EXPECT_EQ(oracle::facets_of(link(sq, sq.face_of({"2"}))), fam({{"1"}, {"3"}}));
    EXPECT_EQ(code_of([&] { link(sq, sq.face_of({"1", "3"})); }), ErrorCode::FaceNotInComplex);
}

TEST(Complexes, Joins) {
    const auto a = validate_complex({{"a"}});
    const auto b = validate_complex({{"b"}});
    EXPECT_EQ(oracle::facets_of(join(a, b)), fam({{"a", "b"}}));
    const auto edge = validate_complex({{"a", "b"}});
    const auto pts = validate_complex({{"c"}, {"d"}});
    EXPECT_EQ(oracle::facets_of(join(edge, pts)), fam({{"a", "b", "c"}, {"a", "b", "d"}}));
    const auto sq = corpus::square();
    EXPECT_EQ(join(sq, SimplicialComplex::irrelevant()), sq);
    EXPECT_EQ(code_of([&] { join(sq, sq); }), ErrorCode::VertexLabelCollision);
}

TEST(Complexes, DeleteVertex) {
    EXPECT_EQ(oracle::facets_of(delete_vertex(corpus::boundary_triangle(), "1")), fam({{"2", "3"}}));
    EXPECT_EQ(oracle::facets_of(delete_vertex(corpus::two_points(), "1")), fam({{"2"}}));
    EXPECT_EQ(oracle::facets_of(delete_vertex(corpus::square(), "2")), fam({{"3", "4"}, {"1", "4"}}));
    EXPECT_EQ(code_of([] { delete_vertex(corpus::square(), "9"); }), ErrorCode::UnknownVertex);
}

TEST(Complexes, FHVectors) {
    const auto tri = f_h_vectors(corpus::boundary_triangle());
    EXPECT_EQ(tri.f, (std::vector<std::int64_t>{1, 3, 3}));
    EXPECT_EQ(tri.h, (std::vector<std::int64_t>{1, 1, 1}));
    const auto sq = f_h_vectors(corpus::square());
    EXPECT_EQ(sq.f, (std::vector<std::int64_t>{1, 4, 4}));
    EXPECT_EQ(sq.h, (std::vector<std::int64_t>{1, 2, 1}));
    EXPECT_EQ(code_of([] { f_h_vectors(validate_complex({{"1", "2"}, {"3"}})); }), ErrorCode::NotPure);
}

TEST(Complexes, BoundaryOfSimplexHasAllOnesHVector) {
    for (int k = 1; k <= 8; ++k) {
        std::vector<std::string> verts;
        for (int i = 1; i <= k + 1; ++i) verts.push_back(std::to_string(i));
        std::vector<std::vector<std::string>> facets;
        for (int skip = 0; skip <= k; ++skip) {
            std::vector<std::string> f;
            for (int i = 0; i <= k; ++i)
                if (i != skip) f.push_back(verts[static_cast<std::size_t>(i)]);
            facets.push_back(f);
        }
        const auto fh = f_h_vectors(validate_complex(verts, facets));
        EXPECT_EQ(fh.h, std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 1)) << k;
        std::vector<long long> f(fh.f.begin(), fh.f.end());
        std::vector<long long> h(fh.h.begin(), fh.h.end());
        EXPECT_EQ(h, oracle::h_from_f(f));
    }
}

TEST(Complexes, Pseudomanifold) {
    EXPECT_TRUE(pseudomanifold_check(corpus::boundary_triangle()).passed);
    EXPECT_TRUE(pseudomanifold_check(corpus::two_points()).passed);
    EXPECT_TRUE(pseudomanifold_check(corpus::square()).passed);
    EXPECT_FALSE(pseudomanifold_check(path3()).passed);
    EXPECT_FALSE(pseudomanifold_check(validate_complex({{"1"}})).passed);
    // Two disjoint triangles: ridges fine, not connected.
    const auto two_tri = validate_complex({{"1", "2"}, {"2", "3"}, {"1", "3"}, {"4", "5"}, {"5", "6"}, {"4", "6"}});
    const auto rep = pseudomanifold_check(two_tri);
    EXPECT_TRUE(rep.ridge_condition);
    EXPECT_FALSE(rep.connected);
    EXPECT_FALSE(rep.passed);
}

TEST(Complexes, ReconstructionAndJoinLaws) {
    for (const auto& [name, k] : corpus::complexes()) EXPECT_EQ(complex_avoiding(k.vertices(), minimal_nonfaces(k)), k) << name;
    const auto x = relabel(corpus::two_points(), {"a", "b"});
    const auto y = relabel(corpus::boundary_triangle(), {"c", "d", "e"});
    const auto z = relabel(corpus::square(), {"f", "g", "h", "i"});
    EXPECT_EQ(join(join(x, y), z), join(x, join(y, z)));
}

TEST(Complexes, FaceOrderIsLexicographic) {
    EXPECT_TRUE(Face::of({0, 1}) < Face::of({0, 2}));
    EXPECT_TRUE(Face::of({0, 5}) < Face::of({1}));
    EXPECT_TRUE(Face::of({0}) < Face::of({0, 1}));
    EXPECT_FALSE(Face::of({1}) < Face::of({1}));
}

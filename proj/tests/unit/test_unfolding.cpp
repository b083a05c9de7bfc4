#include <gtest/gtest.h>

#include <tetrageo/unfolding.hpp>

using namespace tetrageo;

namespace {

struct Case {
    Space space;
    double alpha;
    GeodesicType type;
};

TetrahedronSpec spec_of(const Case& c)
{
    return c.space == Space::euclidean ? TetrahedronSpec{} : regular_tetrahedron(c.space, c.alpha);
}

} // namespace

class DevelopmentTest : public ::testing::TestWithParam<Case> {};

TEST_P(DevelopmentTest, FacesAreCongruentAndGlued)
{
    const auto c = GetParam();
    const auto spec = spec_of(c);
    const auto s = crossing_sequence(c.type);
    const auto d = build_development(spec, s);
    ASSERT_EQ(d.faces.size(), s.size());
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
        const auto& face = d.faces[f];
        EXPECT_EQ(face.sorted_labels(), s.face(f));
        for (int i = 0; i < 3; ++i) {
            const double len = distance(c.space, face.vertices[i], face.vertices[(i + 1) % 3]);
            EXPECT_NEAR(len, spec.edge, 1e-9 * std::max(1.0, spec.edge)) << f;
        }
        if (f + 1 < d.faces.size()) {
            const auto& next = d.faces[f + 1];
            const EdgeLabel e = s.edge(f + 1);
            EXPECT_NEAR(distance(c.space, face.at(e.lo), next.at(e.lo)), 0.0, 1e-9);
            EXPECT_NEAR(distance(c.space, face.at(e.hi), next.at(e.hi)), 0.0, 1e-9);
            const int apex = face.labels[2], other = next.labels[2];
            EXPECT_NE(side_of({c.space, face.at(e.lo), face.at(e.hi)}, face.at(apex)),
                      side_of({c.space, face.at(e.lo), face.at(e.hi)}, next.at(other)));
        }
    }
}

TEST_P(DevelopmentTest, BoundaryAnglesObeyGaussBonnet)
{
    const auto c = GetParam();
    const auto spec = spec_of(c);
    const auto d = build_development(spec, crossing_sequence(c.type));
    const auto angles = d.angles();
    ASSERT_EQ(angles.size(), d.faces.size() + 2);
    double sum = 0;
    for (double a : angles) sum += a;
    const double n = static_cast<double>(d.faces.size());
    const double expect = (static_cast<double>(angles.size()) - 2) * pi + n * (3 * spec.alpha - pi);
    EXPECT_NEAR(sum, expect, 1e-7 * n);
    for (const auto& b : d.boundary) {
        const double runs = static_cast<double>(b.last_face - b.first_face + 1);
        EXPECT_NEAR(b.angle, runs * spec.alpha, 1e-7);
    }
}

TEST_P(DevelopmentTest, HalfTurnsExchangeQuarters)
{
    const auto c = GetParam();
    const auto d = build_development(spec_of(c), crossing_sequence(c.type));
    EXPECT_TRUE(symmetry_check(d, 1e-7));
}

INSTANTIATE_TEST_SUITE_P(Spaces, DevelopmentTest,
                         ::testing::Values(Case{Space::euclidean, pi / 3, {2, 3}}, Case{Space::euclidean, pi / 3, {1, 4}},
                                           Case{Space::spherical, 1.2, {1, 2}}, Case{Space::spherical, 1.1, {2, 3}},
                                           Case{Space::spherical, 1.5, {1, 1}}, Case{Space::hyperbolic, 0.5, {1, 2}},
                                           Case{Space::hyperbolic, 0.9, {3, 4}}, Case{Space::hyperbolic, 0.3, {9, 11}}));

TEST(Unfolding, EuclideanSymmetryPointsAreEdgeMidpoints)
{
    const auto s = crossing_sequence({1, 2});
    const auto d = build_development(TetrahedronSpec{}, s);
    const auto idx = symmetry_indices(s);
    for (int i = 0; i < 5; ++i) {
        const auto& e = d.edges[idx[i]];
        const Point2 mid = point_along(Space::euclidean, e[0], e[1], 0.5);
        EXPECT_NEAR(distance(Space::euclidean, mid, d.symmetry_points[i]), 0.0, 1e-12);
    }
}

TEST(Unfolding, SphericalHemisphereFlag)
{
    EXPECT_TRUE(build_development(regular_tetrahedron(Space::spherical, 1.1), crossing_sequence({0, 1})).in_hemisphere);
    EXPECT_FALSE(build_development(regular_tetrahedron(Space::spherical, 2.0), crossing_sequence({2, 3})).in_hemisphere);
}

TEST(Unfolding, GenericDevelopmentHasGivenEdges)
{
    const auto g = generic_from_edges({2.0, 2.1, 2.2, 2.3, 2.05, 2.15});
    const auto s = crossing_sequence({1, 2});
    const auto d = build_development(g, s);
    ASSERT_EQ(d.faces.size(), s.size());
    for (const auto& face : d.faces)
        for (int i = 0; i < 3; ++i) {
            const int a = face.labels[i], b = face.labels[(i + 1) % 3];
            EXPECT_NEAR(distance(Space::hyperbolic, face.at(a), face.at(b)), g.edge(a, b), 1e-9);
        }
}

TEST(Unfolding, RejectsBrokenChain)
{
    auto s = crossing_sequence({1, 2});
    s.crossings[2].edge = s.crossings[1].edge;
    EXPECT_THROW(build_development(TetrahedronSpec{}, s), Error);
}

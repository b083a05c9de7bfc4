#include <gtest/gtest.h>

#include <random>

#include <tetrageo/geom.hpp>

#include "oracles/oracles.hpp"

using namespace tetrageo;

namespace {

oracle::V3 lift(const Point2& p) { return oracle::hyperboloid(p.x, p.y); }
oracle::V3 as_v3(const Point2& p) { return {p.x, p.y, p.z}; }

} // namespace

TEST(Geom, HyperbolicDistanceMatchesHyperboloid)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const Point2 a = fermi_point(u(rng), u(rng)), b = fermi_point(u(rng), u(rng));
        const double expect = static_cast<double>(oracle::hyperbolic_distance(lift(a), lift(b)));
        EXPECT_NEAR(distance(Space::hyperbolic, a, b), expect, 1e-10 * (1 + expect));
    }
}

TEST(Geom, SphericalDistanceMatchesVectorFormula)
{
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int i = 0; i < 500; ++i) {
        const Point2 a = spherical_point(g(rng), g(rng), g(rng)), b = spherical_point(g(rng), g(rng), g(rng));
        EXPECT_NEAR(distance(Space::spherical, a, b), static_cast<double>(oracle::spherical_distance(as_v3(a), as_v3(b))), 1e-12);
    }
}

TEST(Geom, EuclideanDistance)
{
    EXPECT_DOUBLE_EQ(distance(Space::euclidean, euclidean_point(0, 0), euclidean_point(3, 4)), 5.0);
}

TEST(Geom, AntipodalPointsAreAmbiguous)
{
    const Point2 a = spherical_point(0, 0, 1), b = spherical_point(0, 0, -1);
    try {
        distance(Space::spherical, a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ambiguous_geodesic);
    }
}

TEST(Geom, KleinRoundTrip)
{
    const Point2 p = klein_point(0.3, -0.5);
    const auto k = to_klein(p);
    EXPECT_NEAR(k[0], 0.3, 1e-15);
    EXPECT_NEAR(k[1], -0.5, 1e-15);
    const auto far = to_klein(klein_point(1.0, 0.0));
    EXPECT_LT(far[0], 1.0);
}

class ReflectTest : public ::testing::TestWithParam<Space> {};

TEST_P(ReflectTest, ReflectionIsAnInvolutionAndIsometry)
{
    const Space k = GetParam();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    const auto pt = [&] {
        if (k == Space::spherical) return spherical_point(u(rng), u(rng), 1.0);
        return k == Space::hyperbolic ? fermi_point(u(rng), u(rng)) : euclidean_point(u(rng), u(rng));
    };
    for (int i = 0; i < 200; ++i) {
        const Segment2 s{k, pt(), pt()};
        const Point2 p = pt();
        const Point2 r = reflect_across(s, p);
        const Point2 back = reflect_across(s, r);
        EXPECT_NEAR(distance(k, back, p), 0.0, 1e-9);
        EXPECT_NEAR(distance(k, s.a, r), distance(k, s.a, p), 1e-10);
        EXPECT_NEAR(distance(k, s.b, r), distance(k, s.b, p), 1e-9);
        EXPECT_NEAR(signed_distance(k, s.a, s.b, r), -signed_distance(k, s.a, s.b, p), 1e-9);
    }
}

TEST_P(ReflectTest, TowardAndPointAlong)
{
    const Space k = GetParam();
    const Point2 a = k == Space::spherical ? spherical_point(0.1, 0.2, 1) : Point2{0.1, 0.2, 0};
    const Point2 b = k == Space::spherical ? spherical_point(-0.4, 0.5, 1) : Point2{-0.4, 0.5, 0};
    const double d = distance(k, a, b);
    const Point2 m = point_along(k, a, b, 0.25);
    EXPECT_NEAR(distance(k, a, m), 0.25 * d, 1e-12);
    EXPECT_NEAR(distance(k, m, b), 0.75 * d, 1e-12);
    EXPECT_EQ(side_of({k, a, b}, m), Side::on);
    EXPECT_EQ(side_of({k, a, b}, toward(k, a, b, 0.1, 0.5)), Side::left);
    EXPECT_EQ(side_of({k, a, b}, toward(k, a, b, 0.1, -0.5)), Side::right);
    EXPECT_NEAR(angle_at(k, a, b, rotate_about(k, a, b, 0.7)), 0.7, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(AllSpaces, ReflectTest, ::testing::Values(Space::euclidean, Space::spherical, Space::hyperbolic));

TEST(Geom, GnomonicMapsGreatCirclesToLines)
{
    const Point2 t = spherical_point(0.2, -0.1, 1.0);
    const Point2 a = spherical_point(0.3, 0.1, 1.0), b = spherical_point(-0.2, 0.4, 1.0);
    const Point2 pa = gnomonic_project(a, t), pb = gnomonic_project(b, t);
    for (double f : {0.2, 0.5, 0.9, 1.3}) {
        const Point2 pm = gnomonic_project(point_along(Space::spherical, a, b, f), t);
        const double area = (pb.x - pa.x) * (pm.y - pa.y) - (pb.y - pa.y) * (pm.x - pa.x);
        EXPECT_NEAR(area, 0.0, 1e-12);
    }
    EXPECT_THROW(gnomonic_project(spherical_point(0, 0, -1), spherical_point(0, 0, 1)), Error);
}

TEST(Geom, ValidPoints)
{
    EXPECT_TRUE(is_valid_point(Space::spherical, spherical_point(1, 2, 3)));
    EXPECT_FALSE(is_valid_point(Space::spherical, {1, 1, 0}));
    EXPECT_FALSE(is_valid_point(Space::hyperbolic, {std::nan(""), 0, 0}));
}

TEST(Geom, PointSegmentDistance)
{
    const Point2 a = euclidean_point(0, 0), b = euclidean_point(2, 0);
    EXPECT_DOUBLE_EQ(point_segment_distance(Space::euclidean, a, b, euclidean_point(1, 3)), 3.0);
    EXPECT_DOUBLE_EQ(point_segment_distance(Space::euclidean, a, b, euclidean_point(5, 4)), 5.0);
}

#include <gtest/gtest.h>

#include "support.hpp"
#include "svlab/errors.hpp"
#include "svlab/lattice.hpp"

using namespace svlab;
using namespace svlab::lattice;
using svtest::random_class;
using svtest::random_ruled_model;
using svtest::uniform;

namespace {

/* Coefficients on the orthogonal total transforms e_a (e_a^2 = -1):
 * strict E_i = e_i - sum_{a proximate to i} e_a. */
std::vector<Rational> total_coords(DivisorClass const & d)
{
    auto const & exc = d.model()->ruled_data().exceptionals;
    std::size_t k = exc.size();
    std::vector<Rational> t(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        t[i] += d[2 + i];
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i : exc[a].proximate_to)
            t[a] -= d[2 + i];
    return t;
}

Rational oracle_intersect(DivisorClass const & x, DivisorClass const & y)
{
    int e = x.model()->invariant_e();
    Rational r = -e * x[0] * y[0] + x[0] * y[1] + x[1] * y[0];
    auto tx = total_coords(x), ty = total_coords(y);
    for (std::size_t a = 0; a < tx.size(); ++a)
        r -= tx[a] * ty[a];
    return r;
}

}  // namespace

TEST(Lattice, RuledGramAndCanonical)
{
    auto m = SurfaceModel::ruled(3, 4, -2);
    auto E = DivisorClass::section(m), F = DivisorClass::fiber(m);
    EXPECT_EQ(intersect(E, E), 2);
    EXPECT_EQ(intersect(E, F), 1);
    EXPECT_EQ(intersect(F, F), 0);
    EXPECT_EQ(canonical_class(m), DivisorClass::ruled(m, -2, 8));
    EXPECT_EQ(self_intersection(canonical_class(m)), 8 * (1 - 4));
    EXPECT_EQ(m->chi_structure(), -3);
}

TEST(Lattice, BlownUpCanonicalSquare)
{
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_ruled_model(4);
        long k = static_cast<long>(m->exceptional_count());
        EXPECT_EQ(self_intersection(canonical_class(m)), 8 * (1 - m->genus()) - k);
        for (std::size_t i = 0; i < m->exceptional_count(); ++i)
            EXPECT_EQ(adjunction_pa(DivisorClass::exceptional(m, i)), 0);
    }
}

TEST(Lattice, IntersectionMatchesTotalTransformOracle)
{
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_ruled_model(4);
        auto x = random_class(m), y = random_class(m);
        EXPECT_EQ(intersect(x, y), oracle_intersect(x, y)) << x.str() << " . " << y.str();
    }
}

TEST(Lattice, CanonicalDegreeOracle)
{
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_ruled_model(4);
        auto x = random_class(m);
        /* K = -2E + (2g-2-e)F + sum e_a in total coordinates, e_a.x = -t_a */
        int e = m->invariant_e();
        Rational expected = -2 * (-e * x[0] + x[1]) + Rational(2 * m->genus() - 2 - e) * x[0];
        for (auto const & t : total_coords(x))
            expected -= t;
        EXPECT_EQ(intersect(canonical_class(m), x), expected);
    }
}

TEST(Lattice, BilinearAndSymmetric)
{
    for (int trial = 0; trial < 150; ++trial) {
        auto m = random_ruled_model(3);
        auto x = random_class(m), y = random_class(m), z = random_class(m);
        Rational s = svtest::random_rational(5, 7);
        EXPECT_EQ(intersect(x, y), intersect(y, x));
        EXPECT_EQ(intersect(x + y, z), intersect(x, z) + intersect(y, z));
        EXPECT_EQ(intersect(s * x, z), s * intersect(x, z));
        EXPECT_EQ(intersect(x - y, z), intersect(x, z) - intersect(y, z));
    }
}

TEST(Lattice, HodgeIndexSignature)
{
    for (int trial = 0; trial < 150; ++trial) {
        auto m = random_ruled_model(5);
        auto sig = signature(m->gram());
        EXPECT_EQ(sig.positive, 1);
        EXPECT_EQ(sig.negative, static_cast<int>(m->rank()) - 1);
        EXPECT_EQ(sig.zero, 0);
    }
    /* Degenerate and indefinite forms. */
    auto s = signature({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}});
    EXPECT_EQ(s.positive, 1);
    EXPECT_EQ(s.zero, 1);
    s = signature({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    EXPECT_EQ(s.positive, 1);
    EXPECT_EQ(s.negative, 1);
}

TEST(Lattice, HodgeInequalityForPositiveClasses)
{
    /* x^2 > 0 implies x^2 y^2 <= (x.y)^2. */
    int checked = 0;
    while (checked < 100) {
        auto m = random_ruled_model(3);
        auto x = random_class(m), y = random_class(m);
        if (!(self_intersection(x) > 0))
            continue;
        Rational xy = intersect(x, y);
        EXPECT_LE(self_intersection(x) * self_intersection(y), xy * xy);
        ++checked;
    }
}

TEST(Lattice, ProjectionFormulaUnderBlowup)
{
    for (int trial = 0; trial < 150; ++trial) {
        auto m = random_ruled_model(3);
        Exceptional pt;
        if (m->exceptional_count() > 0 && uniform(0, 1) == 1)
            pt.proximate_to.push_back(static_cast<std::size_t>(uniform(0, static_cast<long>(m->exceptional_count()) - 1)));
        Blowup b(m, pt);
        auto x = random_class(m), y = random_class(m);
        auto px = b.pull(x), py = b.pull(y);
        EXPECT_EQ(intersect(px, py), intersect(x, y));
        auto last = DivisorClass::exceptional(b.blown_up(), b.blown_up()->exceptional_count() - 1);
        EXPECT_EQ(intersect(px, last), 0);
        /* K_Y = g^* K_X + e_new */
        EXPECT_EQ(canonical_class(b.blown_up()), b.pull(canonical_class(m)) + last);
    }
}

TEST(Lattice, ContractionPushPull)
{
    int checked = 0;
    while (checked < 100) {
        auto m = random_ruled_model(4);
        std::vector<std::size_t> minus_one;
        for (std::size_t i = 0; i < m->exceptional_count(); ++i) {
            auto l = DivisorClass::exceptional(m, i);
            if (self_intersection(l) == -1 && intersect(canonical_class(m), l) == -1)
                minus_one.push_back(i);
        }
        if (minus_one.empty())
            continue;
        Contraction c(m, minus_one[static_cast<std::size_t>(uniform(0, static_cast<long>(minus_one.size()) - 1))]);
        auto a = random_class(m), b = random_class(m);
        auto l = c.curve();
        EXPECT_EQ(intersect(c.push(a), c.push(b)), intersect(a, b) + intersect(a, l) * intersect(b, l));
        auto y = random_class(c.contracted());
        EXPECT_EQ(c.push(c.pull(y)), y);
        EXPECT_EQ(intersect(c.pull(y), l), 0);
        EXPECT_EQ(canonical_class(m), c.pull(canonical_class(c.contracted())) + l);
        ++checked;
    }
}

TEST(Lattice, ContractionRejectsNonMinusOneCurve)
{
    auto m = SurfaceModel::ruled(3, 2, 1, {Exceptional{}, Exceptional{{0}}});
    /* E_0 now has self-intersection -2. */
    EXPECT_EQ(self_intersection(DivisorClass::exceptional(m, 0)), -2);
    EXPECT_THROW(Contraction(m, 0), InputError);
    EXPECT_NO_THROW(Contraction(m, 1));
}

TEST(Lattice, AdjunctionIntegrality)
{
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_ruled_model(4);
        auto c = random_class(m, true);
        Rational pa = adjunction_pa(c);
        EXPECT_TRUE(is_integral(pa)) << c.str();
        EXPECT_TRUE(is_integral(riemann_roch_chi(c))) << c.str();
        /* oracle: 1 + C(C+K)/2 */
        EXPECT_EQ(pa, 1 + (oracle_intersect(c, c) + intersect(c, canonical_class(m))) / 2);
    }
}

TEST(Lattice, RiemannRochOracle)
{
    for (int trial = 0; trial < 100; ++trial) {
        int g = static_cast<int>(uniform(0, 6));
        int e = static_cast<int>(uniform(g == 0 ? 0 : -3, 4));
        auto m = SurfaceModel::ruled(5, g, e);
        long a = uniform(-10, 10), b = uniform(-10, 10);
        auto d = DivisorClass::ruled(m, a, b);
        /* D(D-K)/2 + 1 - g with D^2 = -ea^2 + 2ab, D.K = -2(b - ea) + (2g-2-e)a */
        Rational d2 = Rational(-e * a * a + 2 * a * b);
        Rational dk = Rational(-2 * (b - e * a) + (2 * g - 2 - e) * a);
        EXPECT_EQ(riemann_roch_chi(d), (d2 - dk) / 2 + (1 - g));
    }
}

TEST(Lattice, PositivityNonnegativeE)
{
    /* e >= 0: ample iff a > 0 and b > ae, nef iff a >= 0 and b >= ae. */
    for (int trial = 0; trial < 200; ++trial) {
        int g = static_cast<int>(uniform(0, 4));
        int e = static_cast<int>(uniform(0, 4));
        auto m = SurfaceModel::ruled(0, g, e);
        Rational a = svtest::random_rational(6, 4), b = svtest::random_rational(12, 4);
        auto d = DivisorClass::ruled(m, a, b);
        bool ample = a > 0 && b > a * e;
        bool nef = a >= 0 && b >= a * e;
        EXPECT_EQ(certify_positivity(d, true).status, ample ? PositivityStatus::certified : PositivityStatus::violated);
        EXPECT_EQ(certify_positivity(d, false).status, nef ? PositivityStatus::certified : PositivityStatus::violated);
    }
}

TEST(Lattice, PositivityNegativeESoundness)
{
    for (int trial = 0; trial < 300; ++trial) {
        int g = static_cast<int>(uniform(2, 6));
        int e = static_cast<int>(uniform(-(g - 1), -1));
        int p = static_cast<int>(std::vector<long>{2, 3, 5, 7}[static_cast<std::size_t>(uniform(0, 3))]);
        auto m = SurfaceModel::ruled(p, g, e);
        Rational a = svtest::random_rational(6, 4), b = svtest::random_rational(10, 4);
        auto d = DivisorClass::ruled(m, a, b);
        for (bool strict : {true, false}) {
            auto v = certify_positivity(d, strict);
            auto ok = [strict](Rational const & x) { return strict ? x > 0 : x >= 0; };
            bool necessary = ok(a) && ok(2 * b - a * e);
            if (v.status == PositivityStatus::certified) {
                EXPECT_TRUE(necessary);
                EXPECT_TRUE(ok(b - a * e)) << "positive on the section E";
            }
            if (!necessary) {
                EXPECT_EQ(v.status, PositivityStatus::violated);
            }
            if (ok(a) && ok(b)) {
                EXPECT_EQ(v.status, PositivityStatus::certified) << "E and F are nef when e < 0";
            }
        }
    }
}

TEST(Lattice, PositivityCharacteristicZeroNegativeE)
{
    auto m = SurfaceModel::ruled(0, 3, -1);
    auto d = DivisorClass::ruled(m, 2, make_rational(-1, 2));
    EXPECT_EQ(certify_positivity(d, false).status, PositivityStatus::unknown);
    EXPECT_EQ(certify_positivity(DivisorClass::ruled(m, -1, 3), false).status, PositivityStatus::violated);
}

TEST(Lattice, CandidateCurveConstraints)
{
    auto m = SurfaceModel::ruled(3, 4, -2);
    EXPECT_TRUE(candidate_curve_constraints(DivisorClass::fiber(m)));
    EXPECT_TRUE(candidate_curve_constraints(DivisorClass::ruled(m, 3, -6)));
    EXPECT_FALSE(candidate_curve_constraints(DivisorClass::ruled(m, -1, 0)));
    EXPECT_THROW(candidate_curve_constraints(DivisorClass::ruled(SurfaceModel::ruled(0, 4, -2), 2, -1)), InputError);
}

TEST(Lattice, ModelValidation)
{
    EXPECT_THROW(SurfaceModel::ruled(4, 1, 0), InputError);
    EXPECT_THROW(SurfaceModel::ruled(3, -1, 0), InputError);
    EXPECT_THROW(SurfaceModel::ruled(3, 1, 0, {Exceptional{{0}}}), InputError);
    EXPECT_THROW(SurfaceModel::ruled(3, 1, 0, {Exceptional{}, Exceptional{{0, 0}}}), InputError);
    auto a = SurfaceModel::ruled(3, 1, 0), b = SurfaceModel::ruled(3, 2, 0);
    EXPECT_THROW(intersect(DivisorClass::fiber(a), DivisorClass::fiber(b)), InputError);
}

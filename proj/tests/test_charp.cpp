#include <gtest/gtest.h>

#include "support.hpp"
#include "svlab/curves.hpp"
#include "svlab/errors.hpp"

using namespace svlab;
using namespace svlab::charp;
using svtest::uniform;

namespace {

FieldElement random_element(FieldPtr const & k)
{
    return FieldElement::from_index(k, uniform(0, k->order() - 1));
}

LaurentSeries random_series(FieldPtr const & k, long start, long length, bool unit_lead)
{
    std::vector<FieldElement> c;
    for (long i = 0; i < length; ++i)
        c.push_back(random_element(k));
    if (unit_lead)
        while (c[0].is_zero())
            c[0] = random_element(k);
    return LaurentSeries(k, start, c, start + length);
}

/* Coefficients agree on the window both series know. */
void expect_agree(LaurentSeries const & a, LaurentSeries const & b, long from)
{
    long top = std::min(a.abs_precision(), b.abs_precision());
    for (long k = from; k < top; ++k)
        EXPECT_EQ(a.coefficient(k), b.coefficient(k)) << "t^" << k;
}

long oracle_genus(CurveFamily const & f)
{
    if (f.kind == FamilyKind::hyperelliptic)
        return (f.p * f.h - 1) / 2;
    return (f.p - 1) * (f.h * f.p - 2) / 2;
}

long oracle_v_inf(CurveFamily const & f)
{
    if (f.kind == FamilyKind::hyperelliptic)
        return f.p * f.h - 3;
    return f.p * (f.h * (f.p - 1) - 2);
}

long oracle_n(CurveFamily const & f)
{
    if (f.kind == FamilyKind::hyperelliptic)
        return f.h - 1;
    return f.h * (f.p - 1) - 2;
}

CurveFamily random_family()
{
    if (uniform(0, 1) == 0) {
        static int const ps[] = {3, 5, 7};
        return CurveFamily::hyperelliptic(ps[uniform(0, 2)], static_cast<int>(2 * uniform(1, 3) + 1));
    }
    static int const ps[] = {2, 3, 5};
    return CurveFamily::artin_schreier(ps[uniform(0, 2)], static_cast<int>(uniform(3, 6)));
}

}  // namespace

TEST(Field, Axioms)
{
    for (auto [p, d] : {std::pair{2, 1}, {2, 3}, {3, 2}, {5, 1}, {7, 2}}) {
        auto k = FiniteField::make(p, d);
        EXPECT_EQ(k->order(), static_cast<std::int64_t>(std::pow(p, d)));
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_element(k), b = random_element(k), c = random_element(k);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_TRUE((a - a).is_zero());
            EXPECT_EQ(a + (-a), FieldElement(k, 0));
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), FieldElement(k, 1));
                EXPECT_EQ((b / a) * a, b);
            }
            EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
            EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
            EXPECT_EQ(a.pow(k->order()), a);
        }
    }
}

TEST(Field, ZeroHasNoInverse)
{
    auto k = FiniteField::make(5);
    EXPECT_ANY_THROW(FieldElement(k, 0).inverse());
}

TEST(Laurent, RingOperations)
{
    for (int p : {2, 3, 5}) {
        auto k = FiniteField::make(p);
        for (int trial = 0; trial < 50; ++trial) {
            long n = uniform(4, 20);
            auto a = random_series(k, uniform(-5, 5), n, true);
            auto b = random_series(k, uniform(-5, 5), n, true);
            auto c = random_series(k, uniform(-5, 5), n, true);
            EXPECT_EQ((a * b).valuation(), a.valuation() + b.valuation());
            expect_agree((a * b) * c, a * (b * c), -20);
            expect_agree(a * (b + c), a * b + a * c, -20);
            auto q = a / b;
            expect_agree(q * b, a, -20);
            expect_agree((a * b).derivative(), a.derivative() * b + a * b.derivative(), -20);
            expect_agree(a.pow(3), a * a * a, -20);
            expect_agree(a.pow(-2) * a.pow(2), LaurentSeries::one(k, n), -20);
        }
    }
}

TEST(Laurent, SquareRootOfUnit)
{
    for (int p : {3, 5, 7}) {
        auto k = FiniteField::make(p);
        for (int trial = 0; trial < 30; ++trial) {
            auto u = random_series(k, 0, uniform(3, 25), true);
            u = u.scaled(u.leading().inverse());
            auto s = u.sqrt_unit();
            expect_agree(s * s, u, 0);
        }
    }
}

TEST(Laurent, DerivativeOfPthPowerVanishes)
{
    auto k = FiniteField::make(3);
    auto a = random_series(k, 1, 10, true);
    auto d = a.pow(3).derivative();
    EXPECT_FALSE(d.valuation_if_known().has_value());
}

TEST(Tango, HyperellipticThreeThree)
{
    auto f = CurveFamily::hyperelliptic(3, 3);
    auto c = certify_tango(f);
    EXPECT_EQ(c.v_inf, 6);
    EXPECT_EQ(c.genus, 4);
    EXPECT_EQ(c.n_f0, 2);
    EXPECT_EQ(c.bound, 2);
    EXPECT_TRUE(c.equality);
    EXPECT_EQ(c.L_degree, 2);
    EXPECT_EQ(c.provenance, Provenance::computed);
}

TEST(Tango, ArtinSchreierTwoFive)
{
    auto c = certify_tango(CurveFamily::artin_schreier(2, 5));
    EXPECT_EQ(c.v_inf, 6);
    EXPECT_EQ(c.genus, 4);
    EXPECT_EQ(c.n_f0, 3);
    EXPECT_TRUE(c.equality);
    ASSERT_TRUE(c.star_condition.has_value());
    EXPECT_TRUE(*c.star_condition);
    auto c8 = certify_tango(CurveFamily::artin_schreier(2, 4));
    ASSERT_TRUE(c8.star_condition.has_value());
    EXPECT_FALSE(*c8.star_condition);
}

TEST(Tango, HyperellipticFiveThree)
{
    auto c = certify_tango(CurveFamily::hyperelliptic(5, 3));
    EXPECT_EQ(c.v_inf, 12);
    EXPECT_EQ(c.n_f0, 2);
    EXPECT_TRUE(c.equality);
}

TEST(Tango, FormulaOracle)
{
    for (int p : {3, 5, 7, 11})
        for (int h : {3, 5, 7, 9}) {
            auto f = CurveFamily::hyperelliptic(p, h);
            auto c = certify_tango(f);
            EXPECT_EQ(c.genus, oracle_genus(f));
            EXPECT_EQ(c.v_inf, oracle_v_inf(f));
            EXPECT_EQ(c.n_f0, oracle_n(f));
            EXPECT_EQ(c.bound, 2 * (c.genus - 1) / p);
            EXPECT_TRUE(c.equality);
        }
    for (int p : {2, 3, 5, 7})
        for (int h : {3, 4, 5, 6}) {
            auto f = CurveFamily::artin_schreier(p, h);
            auto c = certify_tango(f);
            EXPECT_EQ(c.genus, oracle_genus(f));
            EXPECT_EQ(c.v_inf, oracle_v_inf(f));
            EXPECT_EQ(c.n_f0, oracle_n(f));
            EXPECT_EQ(c.bound, 2 * (c.genus - 1) / p);
            EXPECT_TRUE(c.equality);
            EXPECT_EQ(c.star_condition.has_value(), p == 2);
        }
}

TEST(Tango, ExpansionSatisfiesEquation)
{
    for (auto f : {CurveFamily::hyperelliptic(3, 3), CurveFamily::hyperelliptic(5, 5), CurveFamily::artin_schreier(2, 5),
                   CurveFamily::artin_schreier(3, 4)}) {
        auto e = expand_at_infinity(f);
        EXPECT_FALSE(e.residual.valuation_if_known().has_value()) << f.name();
    }
}

TEST(Tango, PrecisionDoublingStability)
{
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_family();
        long base = default_precision(f);
        auto lo = expand_at_infinity(f, base);
        auto hi = expand_at_infinity(f, 2 * base);
        EXPECT_EQ(lo.x.valuation(), hi.x.valuation());
        EXPECT_EQ(lo.y.valuation(), hi.y.valuation());
        for (Witness w : {default_witness(f), Witness::x, Witness::y}) {
            long v_lo = 0, v_hi = 0;
            bool lo_ok = true, hi_ok = true;
            try {
                v_lo = v_infinity_df(f, w, base);
            } catch (InputError const &) {
                lo_ok = false;
            }
            try {
                v_hi = v_infinity_df(f, w, 2 * base);
            } catch (InputError const &) {
                hi_ok = false;
            }
            if (lo_ok) {
                EXPECT_TRUE(hi_ok && v_lo == v_hi) << f.name() << " " << to_string(w);
            }
        }
        EXPECT_EQ(v_infinity_df(f, default_witness(f), base), oracle_v_inf(f)) << f.name();
    }
}

TEST(Tango, InvalidParameters)
{
    EXPECT_THROW(CurveFamily::hyperelliptic(3, 4), InputError);
    EXPECT_THROW(CurveFamily::hyperelliptic(2, 3), InputError);
    EXPECT_THROW(CurveFamily::hyperelliptic(4, 3), InputError);
    EXPECT_THROW(CurveFamily::artin_schreier(3, 2), InputError);
    EXPECT_THROW(CurveFamily::tango_plane(2), InputError);
    EXPECT_THROW(parse_family("elliptic"), InputError);
}

TEST(Tango, LowPrecisionRejected)
{
    auto f = CurveFamily::hyperelliptic(3, 5);
    EXPECT_THROW(certify_tango(f, 10), InputError);
    EXPECT_THROW(certify_tango(f, 17), InputError);
    EXPECT_EQ(certify_tango(f, 30).v_inf, 12);
}

TEST(Tango, PlaneFamilyIsAsserted)
{
    auto c = certify_tango(CurveFamily::tango_plane(3));
    EXPECT_EQ(c.provenance, Provenance::asserted);
    EXPECT_THROW(expand_at_infinity(CurveFamily::tango_plane(3)), InputError);
}

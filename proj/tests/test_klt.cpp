#include <map>

#include <gtest/gtest.h>

#include "support.hpp"
#include "svlab/errors.hpp"
#include "svlab/klt.hpp"

using namespace svlab;
using namespace svlab::klt;
using svtest::uniform;

namespace {

ClusterArrangement example_triple()
{
    ClusterArrangement a;
    a.branches = {{"B1", make_rational(2, 5)}, {"B2", make_rational(4, 5)}, {"B3", make_rational(3, 4)}};
    a.clusters = {{"p", {"B1", "B2", "B3"}, {}}};
    return a;
}

ClusterArrangement example_tangent()
{
    ClusterArrangement a;
    a.branches = {{"B2", make_rational(4, 5)}, {"B3", make_rational(3, 4)}};
    a.clusters = {{"p1", {"B2", "B3"}, {{"p2", {"B2", "B3"}, {}}}}};
    return a;
}

/* Exceptional coefficient over every node: listed coefficients plus the
 * parent's exceptional coefficient, minus 1. */
void oracle_walk(ClusterNode const & n, std::map<std::string, Rational> const & coeff,
                 std::optional<Rational> parent, std::map<std::string, Rational> & out)
{
    Rational s = parent.value_or(Rational(0));
    for (auto const & id : n.branches)
        s += coeff.at(id);
    Rational c = s - 1;
    std::size_t incident = n.branches.size() + (parent ? 1 : 0);
    if (!(incident == 2 && n.children.empty()))
        out[n.label] = c;
    for (auto const & child : n.children)
        oracle_walk(child, coeff, c, out);
}

std::map<std::string, Rational> oracle(ClusterArrangement const & a)
{
    std::map<std::string, Rational> coeff, out;
    for (auto const & b : a.branches)
        coeff[b.id] = b.coefficient;
    for (auto const & r : a.clusters)
        oracle_walk(r, coeff, std::nullopt, out);
    return out;
}

bool oracle_klt(ClusterArrangement const & a)
{
    for (auto const & b : a.branches)
        if (b.coefficient >= 1)
            return false;
    for (auto const & [k, v] : oracle(a))
        if (v >= 1)
            return false;
    return true;
}

int label_counter = 0;

ClusterNode random_node(std::vector<std::string> const & pool, int depth, bool has_parent)
{
    ClusterNode n;
    n.label = "q" + std::to_string(label_counter++);
    std::vector<std::string> ids = pool;
    std::shuffle(ids.begin(), ids.end(), svtest::rng());
    std::size_t min = has_parent ? 1 : 2;
    std::size_t k = static_cast<std::size_t>(uniform(static_cast<long>(min), static_cast<long>(ids.size())));
    n.branches.assign(ids.begin(), ids.begin() + static_cast<long>(k));
    if (depth > 0) {
        long kids = uniform(0, 2);
        for (long i = 0; i < kids; ++i)
            n.children.push_back(random_node(n.branches, depth - 1, true));
    }
    return n;
}

ClusterArrangement random_arrangement()
{
    ClusterArrangement a;
    long nb = uniform(2, 5);
    std::vector<std::string> ids;
    for (long i = 0; i < nb; ++i) {
        ids.push_back("B" + std::to_string(i));
        a.branches.push_back({ids.back(), make_rational(uniform(0, 19), 20)});
    }
    long roots = uniform(1, 2);
    for (long i = 0; i < roots; ++i)
        a.clusters.push_back(random_node(ids, static_cast<int>(uniform(0, 3)), false));
    return a;
}

}  // namespace

TEST(Klt, TransverseTriplePoint)
{
    auto r = is_klt(example_triple());
    EXPECT_TRUE(r.klt);
    ASSERT_EQ(r.trace.records.size(), 1u);
    EXPECT_EQ(r.trace.records[0].incident_sum, make_rational(39, 20));
    EXPECT_EQ(r.trace.records[0].coefficient, make_rational(19, 20));
    EXPECT_EQ(r.trace.records[0].discrepancy, make_rational(-19, 20));
}

TEST(Klt, TangentPairAfterContraction)
{
    auto r = is_klt(example_tangent());
    EXPECT_FALSE(r.klt);
    ASSERT_EQ(r.trace.records.size(), 2u);
    EXPECT_EQ(r.trace.records[0].coefficient, make_rational(11, 20));
    EXPECT_EQ(r.trace.records[1].incident_sum, make_rational(16, 20) + make_rational(15, 20) + make_rational(11, 20));
    EXPECT_EQ(r.trace.records[1].discrepancy, make_rational(-11, 10));
}

TEST(Klt, EmptyBoundary)
{
    ClusterArrangement a;
    auto r = is_klt(a);
    EXPECT_TRUE(r.klt);
    EXPECT_TRUE(r.trace.records.empty());
    EXPECT_TRUE(snc_klt_shortcut(a));
}

TEST(Klt, BlowupStep)
{
    auto r = blowup_step("x", {make_rational(1, 2), make_rational(1, 3)});
    EXPECT_EQ(r.exceptional_id, "E[x]");
    EXPECT_EQ(r.coefficient, make_rational(-1, 6));
    EXPECT_EQ(r.discrepancy, make_rational(1, 6));
}

TEST(Klt, SncShortcut)
{
    ClusterArrangement a;
    a.branches = {{"A", make_rational(9, 10)}, {"B", make_rational(9, 10)}, {"C", make_rational(1, 2)}};
    a.clusters = {{"p", {"A", "B"}, {}}, {"q", {"B", "C"}, {}}};
    EXPECT_TRUE(snc_applies(a));
    EXPECT_TRUE(snc_klt_shortcut(a));
    EXPECT_TRUE(is_klt(a).klt);
    EXPECT_FALSE(snc_applies(example_triple()));
    a.branches[0].coefficient = 1;
    EXPECT_FALSE(snc_klt_shortcut(a));
    EXPECT_FALSE(is_klt(a).klt);
}

TEST(Klt, MalformedInput)
{
    auto a = example_triple();
    a.branches[0].coefficient = -1;
    EXPECT_THROW(is_klt(a), InputError);
    a = example_triple();
    a.branches.push_back({"B1", make_rational(1, 2)});
    EXPECT_THROW(validate(a), InputError);
    a = example_triple();
    a.clusters[0].branches.push_back("Z");
    EXPECT_THROW(validate(a), InputError);
    a = example_tangent();
    a.clusters[0].children[0].branches = {"B9"};
    EXPECT_THROW(validate(a), InputError);
    a = example_tangent();
    a.branches.push_back({"B4", make_rational(1, 2)});
    a.clusters[0].children[0].branches = {"B4"};
    EXPECT_THROW(validate(a), InputError) << "child lists a branch missing at the parent";
    a = example_tangent();
    a.max_depth = 1;
    EXPECT_THROW(validate(a), InputError);
    a = example_triple();
    a.clusters[0].branches = {"B1"};
    EXPECT_THROW(validate(a), InputError);
    a = example_tangent();
    a.clusters[0].children[0].label = "p1";
    EXPECT_THROW(validate(a), InputError);
}

TEST(Klt, RandomMatchesOracle)
{
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_arrangement();
        auto r = is_klt(a);
        auto want = oracle(a);
        ASSERT_EQ(r.trace.records.size(), want.size());
        for (auto const & rec : r.trace.records) {
            EXPECT_EQ(rec.coefficient, want.at(rec.node));
            EXPECT_EQ(rec.discrepancy, -rec.coefficient);
        }
        EXPECT_EQ(r.klt, oracle_klt(a));
    }
}

TEST(Klt, MonotoneInCoefficients)
{
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_arrangement();
        auto lower = a;
        for (auto & b : lower.branches)
            b.coefficient = b.coefficient * make_rational(uniform(0, 10), 10);
        auto r = is_klt(a), rl = is_klt(lower);
        if (r.klt) {
            EXPECT_TRUE(rl.klt);
        }
        if (!rl.klt) {
            EXPECT_FALSE(r.klt);
        }
        ASSERT_EQ(r.trace.records.size(), rl.trace.records.size());
        for (std::size_t i = 0; i < r.trace.records.size(); ++i)
            EXPECT_GE(rl.trace.records[i].discrepancy, r.trace.records[i].discrepancy);
    }
}

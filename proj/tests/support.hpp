#ifndef SVLAB_TEST_SUPPORT_HPP
#define SVLAB_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "svlab/lattice.hpp"
#include "svlab/rational.hpp"

namespace svtest {

using svlab::Rational;

inline std::mt19937_64 & rng()
{
    static std::mt19937_64 engine(20261014);
    return engine;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long bound = 20, long max_den = 12)
{
    long den = uniform(1, max_den);
    return svlab::make_rational(uniform(-bound * den, bound * den), den);
}

inline Rational random_integer(long lo, long hi)
{
    return Rational(uniform(lo, hi));
}

/* Ruled model with up to max_blowups exceptionals; each new point lies on
 * at most one earlier exceptional. */
inline svlab::lattice::ModelPtr random_ruled_model(int max_blowups = 3, int p = 3)
{
    int g = static_cast<int>(uniform(0, 5));
    int e = static_cast<int>(uniform(-4, 4));
    if (g == 0 && e < 0)
        e = -e;
    std::vector<svlab::lattice::Exceptional> exc;
    long k = uniform(0, max_blowups);
    for (long i = 0; i < k; ++i) {
        svlab::lattice::Exceptional x;
        if (i > 0 && uniform(0, 1) == 1)
            x.proximate_to.push_back(static_cast<std::size_t>(uniform(0, i - 1)));
        exc.push_back(x);
    }
    return svlab::lattice::SurfaceModel::ruled(p, g, e, exc);
}

inline svlab::lattice::DivisorClass random_class(svlab::lattice::ModelPtr const & m, bool integral = false)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < m->rank(); ++i)
        c.push_back(integral ? random_integer(-12, 12) : random_rational(12, 6));
    return svlab::lattice::DivisorClass(m, c);
}

}  // namespace svtest

#endif

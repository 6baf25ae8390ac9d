#ifndef SVLAB_CONSTRUCT_HPP
#define SVLAB_CONSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "svlab/curves.hpp"
#include "svlab/lattice.hpp"
#include "svlab/rational.hpp"

namespace svlab::construct {

using lattice::DivisorClass;
using lattice::ModelPtr;

enum class PackageKind { kv, kollar, semipos };

std::string to_string(PackageKind k);
PackageKind parse_kind(std::string const & name);

struct WeightedCurve {
    std::string name;
    DivisorClass curve;
    Rational coefficient;
};

/*
 * Numerical data of one counterexample on X = P(E) over a curve C of genus
 * g with a Tango structure of degree n: e = -n, C' = pE - pnF disjoint from
 * the section E.
 */
struct CounterexamplePackage {
    PackageKind kind = PackageKind::kv;
    charp::TangoCertificate cert;
    int p = 0;
    int g = 0;
    long n = 0;
    ModelPtr model;
    DivisorClass E, F, C_prime;
    std::vector<WeightedCurve> boundary;
    DivisorClass D;
    DivisorClass H;
    /* Kollar packages: f^*M and deg M. */
    std::optional<DivisorClass> M;
    std::optional<Rational> M_degree;
    /* Semipositivity packages: D' = D - f^*K_C. */
    std::optional<DivisorClass> D_prime;
    std::vector<std::string> assumptions;

    DivisorClass boundary_class() const;
};

/* X = P(E) with e = -n; checks the curve-class constraints for C'. */
ModelPtr build_surface(charp::TangoCertificate const & cert);

CounterexamplePackage build_kv(charp::TangoCertificate const & cert, bool allow_asserted = false);
CounterexamplePackage build_kollar(charp::TangoCertificate const & cert, bool allow_asserted = false);
CounterexamplePackage build_semipos(charp::TangoCertificate const & cert, bool allow_asserted = false);
CounterexamplePackage build_package(PackageKind kind, charp::TangoCertificate const & cert,
                                    bool allow_asserted = false);

/*
 * Degree bookkeeping behind h^1(X, D) >= 1. For p >= 3 the filtration of
 * S^m(E), m = (p-3)/2, has quotients of degree 0, n, ..., mn; the dual
 * subsheaf of R^1 f_* has degree -(p-1)n/2 and the twist adds (p-1)n/2.
 * For p = 2 the relative dualizing sheaf route is recorded.
 */
struct DegreeAuditH1 {
    std::string route;
    int p = 0;
    long n = 0;
    long m = 0;
    std::vector<Rational> filtration_degrees;
    Rational subsheaf_degree;
    Rational twist_degree;
    Rational final_degree;
    long h1_lower_bound = 0;
    std::vector<std::string> lines;
};

DegreeAuditH1 h1_lowerbound_certificate(CounterexamplePackage const & pkg);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
    /* Informational items do not affect validity. */
    bool required = true;
};

struct PackageReport {
    std::vector<CheckItem> items;
    std::optional<DegreeAuditH1> audit;
    bool valid = false;
};

PackageReport verify_package(CounterexamplePackage const & pkg);

}  // namespace svlab::construct

#endif

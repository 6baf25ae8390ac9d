#include "svlab/construct.hpp"

#include <sstream>

#include "svlab/errors.hpp"
#include "svlab/klt.hpp"
#include "svlab/nonvanish.hpp"

namespace svlab::construct {

using lattice::canonical_class;
using lattice::intersect;
using lattice::self_intersection;
using svlab::to_string;

std::string to_string(PackageKind k)
{
    switch (k) {
    case PackageKind::kv:
        return "kv";
    case PackageKind::kollar:
        return "kollar";
    case PackageKind::semipos:
        break;
    }
    return "semipos";
}

PackageKind parse_kind(std::string const & name)
{
    if (name == "kv")
        return PackageKind::kv;
    if (name == "kollar")
        return PackageKind::kollar;
    if (name == "semipos")
        return PackageKind::semipos;
    throw InputError("unknown package kind '" + name + "'");
}

DivisorClass CounterexamplePackage::boundary_class() const
{
    DivisorClass b = DivisorClass::zero(model);
    for (auto const & c : boundary)
        b += c.coefficient * c.curve;
    return b;
}

namespace {

void require_usable(charp::TangoCertificate const & cert, bool allow_asserted)
{
    if (cert.provenance == charp::Provenance::asserted && !allow_asserted)
        throw InputError("Tango value for " + cert.family.name() +
                         " is asserted, not computed; pass --allow-asserted to use it");
    if (!cert.equality)
        throw InputError("Tango certificate for " + cert.family.name() + " does not attain the bound");
    if (cert.L_degree <= 0)
        throw InputError("Tango structure needs deg L > 0");
}

CounterexamplePackage base_package(PackageKind kind, charp::TangoCertificate const & cert, bool allow_asserted)
{
    require_usable(cert, allow_asserted);
    CounterexamplePackage pkg;
    pkg.kind = kind;
    pkg.cert = cert;
    pkg.p = cert.family.p;
    pkg.g = cert.genus;
    pkg.n = cert.L_degree;
    pkg.model = build_surface(cert);
    pkg.E = DivisorClass::section(pkg.model);
    pkg.F = DivisorClass::fiber(pkg.model);
    pkg.C_prime = DivisorClass::ruled(pkg.model, pkg.p, Rational(-pkg.p * pkg.n));
    if (cert.provenance == charp::Provenance::asserted)
        pkg.assumptions.push_back("Tango value taken as asserted");
    pkg.assumptions.push_back("E is an irreducible section, so E^2 > 0 makes it nef");
    return pkg;
}

/* Class of f^*(K_C) */
DivisorClass pullback_canonical(CounterexamplePackage const & pkg)
{
    return Rational(2 * pkg.g - 2) * pkg.F;
}

void check(PackageReport & r, std::string name, bool ok, std::string detail = {}, bool required = true)
{
    r.items.push_back({std::move(name), ok, std::move(detail), required});
}

std::string value_detail(Rational const & got, Rational const & want)
{
    return to_string(got) + (got == want ? " == " : " != ") + to_string(want);
}

klt::ClusterArrangement boundary_arrangement(CounterexamplePackage const & pkg, bool & configuration_known)
{
    klt::ClusterArrangement arr;
    configuration_known = true;
    for (auto const & c : pkg.boundary)
        arr.branches.push_back({c.name, c.coefficient, klt::BranchKind::original});
    for (std::size_t i = 0; i < pkg.boundary.size(); ++i)
        for (std::size_t j = i + 1; j < pkg.boundary.size(); ++j)
            if (intersect(pkg.boundary[i].curve, pkg.boundary[j].curve) != 0)
                configuration_known = false;
    return arr;
}

Rational expected_h_a(CounterexamplePackage const & pkg)
{
    if (pkg.kind == PackageKind::semipos && pkg.p == 2)
        return make_rational(4, 3);
    return pkg.p == 2 ? make_rational(2, 3) : make_rational(1, 2);
}

Rational expected_h_b(CounterexamplePackage const & pkg)
{
    return pkg.p == 2 ? make_rational(pkg.n, 3) : make_rational(pkg.n, 2);
}

Rational expected_dprime_cprime(CounterexamplePackage const & pkg)
{
    if (pkg.p >= 5)
        return make_rational((3 - pkg.p) * pkg.p * pkg.n, 2);
    if (pkg.p == 3)
        return Rational(-3 * pkg.n);
    return make_rational(-2 * pkg.n, 3);
}

}  // namespace

ModelPtr build_surface(charp::TangoCertificate const & cert)
{
    if (cert.L_degree <= 0)
        throw InputError("Tango structure needs deg L > 0");
    auto model = lattice::SurfaceModel::ruled(cert.family.p, cert.genus, static_cast<int>(-cert.L_degree));
    DivisorClass c_prime = DivisorClass::ruled(model, cert.family.p, Rational(-cert.family.p * cert.L_degree));
    if (!lattice::candidate_curve_constraints(c_prime))
        throw CheckFailure("C' = pE - pnF violates the curve-class constraints");
    return model;
}

CounterexamplePackage build_kv(charp::TangoCertificate const & cert, bool allow_asserted)
{
    auto pkg = base_package(PackageKind::kv, cert, allow_asserted);
    int const p = pkg.p;
    Rational const n(pkg.n);
    if (p >= 3) {
        pkg.boundary.push_back({"C'", pkg.C_prime, make_rational(1, 2)});
        pkg.D = DivisorClass::ruled(pkg.model, make_rational(p - 3, 2), Rational(2 * pkg.g - 2) + make_rational(3 - p, 2) * n);
    } else {
        pkg.boundary.push_back({"C'", pkg.C_prime, make_rational(2, 3)});
        pkg.D = pullback_canonical(pkg);
    }
    pkg.H = pkg.D - canonical_class(pkg.model) - pkg.boundary_class();
    return pkg;
}

CounterexamplePackage build_kollar(charp::TangoCertificate const & cert, bool allow_asserted)
{
    auto pkg = base_package(PackageKind::kollar, cert, allow_asserted);
    CounterexamplePackage kv = build_kv(cert, allow_asserted);
    Rational const c = pkg.p >= 3 ? make_rational(1, 2) : make_rational(2, 3);
    Rational const m = pkg.p >= 3 ? make_rational(pkg.n, 2) : make_rational(pkg.n, 3);
    pkg.boundary.push_back({"E", pkg.E, c});
    pkg.boundary.push_back({"C'", pkg.C_prime, c});
    pkg.D = kv.D;
    pkg.M_degree = m;
    pkg.M = m * pkg.F;
    pkg.H = kv.H;
    return pkg;
}

CounterexamplePackage build_semipos(charp::TangoCertificate const & cert, bool allow_asserted)
{
    auto pkg = base_package(PackageKind::semipos, cert, allow_asserted);
    int const p = pkg.p;
    Rational const n(pkg.n);
    if (p >= 5) {
        CounterexamplePackage kv = build_kv(cert, allow_asserted);
        pkg.boundary = kv.boundary;
        pkg.D = kv.D;
        pkg.assumptions.push_back("B' = B + (1/m) M for a general smooth M in |mH|, m large and divisible; "
                                  "only B enters the numerical checks");
    } else if (p == 3) {
        pkg.boundary.push_back({"C'", pkg.C_prime, make_rational(5, 6)});
        pkg.D = DivisorClass::ruled(pkg.model, 1, Rational(2 * pkg.g - 2) - n);
    } else {
        if (pkg.n % 3 != 0)
            throw InputError("p = 2 needs (1/3)L integral, i.e. 3 | n; got n = " + std::to_string(pkg.n));
        pkg.boundary.push_back({"C'", pkg.C_prime, make_rational(5, 6)});
        pkg.D = DivisorClass::ruled(pkg.model, 1, Rational(2 * pkg.g - 2) - n / 3);
    }
    pkg.H = pkg.D - canonical_class(pkg.model) - pkg.boundary_class();
    pkg.D_prime = pkg.D - pullback_canonical(pkg);
    pkg.assumptions.push_back("D' not nef implies f_*O(D') not semipositive because f^*f_*O(D') -> O(D') "
                              "is surjective (cited)");
    return pkg;
}

CounterexamplePackage build_package(PackageKind kind, charp::TangoCertificate const & cert, bool allow_asserted)
{
    switch (kind) {
    case PackageKind::kv:
        return build_kv(cert, allow_asserted);
    case PackageKind::kollar:
        return build_kollar(cert, allow_asserted);
    case PackageKind::semipos:
        break;
    }
    return build_semipos(cert, allow_asserted);
}

DegreeAuditH1 h1_lowerbound_certificate(CounterexamplePackage const & pkg)
{
    DegreeAuditH1 a;
    a.p = pkg.p;
    a.n = pkg.n;
    if (pkg.p == 2) {
        a.route = "relative-dualizing";
        a.m = 0;
        a.subsheaf_degree = 0;
        a.twist_degree = 0;
        a.final_degree = 0;
        a.lines.push_back("D = f^*K_C: H^1(X, D) = H^1(X, f^*omega_C) = H^1(X, omega_{X/C})^dual");
        a.lines.push_back("H^1(X, omega_{X/C})^dual contains H^0(C, R^1 f_* omega_{X/C})^dual");
        a.lines.push_back("R^1 f_* omega_{X/C} = O_C has degree 0");
    } else {
        a.route = "symmetric-power";
        a.m = (pkg.p - 3) / 2;
        for (long i = 0; i <= a.m; ++i)
            a.filtration_degrees.push_back(Rational(i * pkg.n));
        a.subsheaf_degree = make_rational(-(pkg.p - 1) * pkg.n, 2);
        a.twist_degree = make_rational((pkg.p - 1) * pkg.n, 2);
        a.final_degree = a.subsheaf_degree + a.twist_degree;
        std::ostringstream os;
        os << "S^" << a.m << "(E) filtration quotients of degree";
        for (auto const & d : a.filtration_degrees)
            os << " " << to_string(d);
        a.lines.push_back(os.str());
        a.lines.push_back("top quotient L^" + std::to_string(a.m) + " tensor L has degree " +
                          to_string(Rational((a.m + 1) * pkg.n)) + "; dual subsheaf of R^1 f_* has degree " +
                          to_string(a.subsheaf_degree));
        a.lines.push_back("twist by L^((p-1)/2) adds " + to_string(a.twist_degree));
        if (Rational((a.m + 1) * pkg.n) != -a.subsheaf_degree)
            throw CheckFailure("degree chain inconsistent");
    }
    a.lines.push_back("final degree " + to_string(a.final_degree) + ": trivial summand O_C");
    a.h1_lower_bound = a.final_degree == 0 ? 1 : 0;
    a.lines.push_back("h^1(X, D) >= " + std::to_string(a.h1_lower_bound));
    return a;
}

PackageReport verify_package(CounterexamplePackage const & pkg)
{
    PackageReport r;
    auto const & m = pkg.model;
    Rational const n(pkg.n);
    int const p = pkg.p;
    DivisorClass const K = canonical_class(m);
    DivisorClass const B = pkg.boundary_class();

    check(r, "e = -n < 0", m->is_pure_ruled() && m->invariant_e() == -pkg.n && pkg.n > 0,
          "e = " + std::to_string(m->invariant_e()));
    check(r, "E^2 = n", self_intersection(pkg.E) == n, value_detail(self_intersection(pkg.E), n));
    DivisorClass want_c = Rational(p) * pkg.E - Rational(p) * n * pkg.F;
    check(r, "C' = pE - pnF", pkg.C_prime == want_c, pkg.C_prime.str());
    check(r, "E.C' = 0", intersect(pkg.E, pkg.C_prime) == 0, to_string(intersect(pkg.E, pkg.C_prime)));
    check(r, "C'.F = p", intersect(pkg.C_prime, pkg.F) == p, to_string(intersect(pkg.C_prime, pkg.F)));
    Rational c2 = self_intersection(pkg.C_prime);
    check(r, "C'^2 = -p^2 n", c2 == -Rational(p * p) * n, value_detail(c2, -Rational(p * p) * n));
    check(r, "C' curve-class constraints", lattice::candidate_curve_constraints(pkg.C_prime));
    if (2 * (pkg.g - 1) == p * pkg.n) {
        Rational pa = lattice::adjunction_pa(pkg.C_prime);
        check(r, "p_a(C') = g", pa == pkg.g, value_detail(pa, Rational(pkg.g)));
    } else {
        check(r, "p_a(C') = g", true, "not applicable: 2(g-1) != pn", false);
    }

    check(r, "D integral", pkg.D.is_integral(), pkg.D.str());
    auto d_nef = lattice::certify_positivity(pkg.D, false);
    check(r, "D nef", d_nef.status == lattice::PositivityStatus::certified, d_nef.rule_used + d_nef.failed_condition);

    bool coeffs_ok = !pkg.boundary.empty();
    for (auto const & c : pkg.boundary)
        coeffs_ok = coeffs_ok && c.coefficient > 0 && c.coefficient < 1;
    check(r, "boundary coefficients in (0,1)", coeffs_ok);
    bool known = false;
    auto arr = boundary_arrangement(pkg, known);
    if (known) {
        auto res = klt::is_klt(arr);
        check(r, "KLT", res.klt, (klt::snc_klt_shortcut(arr) ? "disjoint smooth branches: " : "") + res.reason);
    } else {
        check(r, "KLT", false, "boundary curves meet; configuration not encoded");
    }

    bool const with_h = pkg.kind != PackageKind::kollar;
    if (pkg.kind == PackageKind::kollar) {
        DivisorClass rhs = K + B + *pkg.M;
        check(r, "D = K + B' + f^*M", rhs == pkg.D, rhs.str() + " vs " + pkg.D.str());
        check(r, "f^*M = deg(M) F", *pkg.M == *pkg.M_degree * pkg.F, pkg.M->str());
        check(r, "M ample on C", *pkg.M_degree > 0, "deg M = " + to_string(*pkg.M_degree));
        Rational want = p >= 3 ? n / 2 : n / 3;
        check(r, "deg M", *pkg.M_degree == want, value_detail(*pkg.M_degree, want));
    }
    if (with_h) {
        DivisorClass computed = pkg.D - K - B;
        check(r, "H = D - K - B", computed == pkg.H, computed.str());
        DivisorClass want_h = DivisorClass::ruled(m, expected_h_a(pkg), expected_h_b(pkg));
        check(r, "H class", pkg.H == want_h, pkg.H.str() + " vs " + want_h.str());
        auto h_amp = lattice::certify_positivity(pkg.H, true);
        check(r, "H ample", h_amp.status == lattice::PositivityStatus::certified,
              h_amp.rule_used + h_amp.failed_condition);
    }

    if (pkg.kind == PackageKind::semipos) {
        DivisorClass want = pkg.D - pullback_canonical(pkg);
        check(r, "D' = D - f^*K_C", pkg.D_prime && *pkg.D_prime == want, pkg.D_prime ? pkg.D_prime->str() : "");
        if (pkg.D_prime) {
            Rational df = intersect(*pkg.D_prime, pkg.F);
            check(r, "D'.F >= 0", df >= 0, to_string(df));
            Rational dc = intersect(*pkg.D_prime, pkg.C_prime);
            check(r, "D'.C' < 0", dc < 0, to_string(dc));
            check(r, "D'.C' value", dc == expected_dprime_cprime(pkg), value_detail(dc, expected_dprime_cprime(pkg)));
        }
    } else {
        auto audit = h1_lowerbound_certificate(pkg);
        check(r, "h^1 audit final degree 0", audit.final_degree == 0, to_string(audit.final_degree));
        check(r, "h^1(D) >= 1", audit.h1_lower_bound >= 1, std::to_string(audit.h1_lower_bound));
        r.audit = std::move(audit);
    }

    Rational chi = lattice::riemann_roch_chi(pkg.D);
    check(r, "chi(D)", true, to_string(chi), false);
    if (with_h) {
        Rational kdh = intersect(K - pkg.D, pkg.H);
        check(r, "h^2(D) = 0", kdh < 0, "(K-D).H = " + to_string(kdh));
    }
    check(r, "chi(D) > 0", chi > 0, to_string(chi), false);

    if (with_h) {
        std::string detail;
        bool ok = false;
        try {
            nonvanish::Scenario s{m, std::nullopt, nonvanish::Kodaira::negative_infinity, 1 - pkg.g, pkg.g, true,
                                  {}, pkg.D, std::nullopt, {}};
            for (auto const & c : pkg.boundary)
                s.boundary.push_back({c.curve, c.coefficient});
            auto v = nonvanish::decide(s);
            ok = v.guaranteed();
            detail = nonvanish::to_string(v.label) + " " + nonvanish::to_string(v.outcome);
        } catch (std::exception const & e) {
            detail = e.what();
        }
        check(r, "non-vanishing cross-check", ok, detail, false);
    }

    r.valid = true;
    for (auto const & item : r.items)
        if (item.required && !item.passed)
            r.valid = false;
    return r;
}

}  // namespace svlab::construct

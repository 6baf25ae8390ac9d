#include "svlab/nonvanish.hpp"

#include <algorithm>
#include <sstream>

#include "svlab/errors.hpp"

namespace svlab::nonvanish {

using lattice::canonical_class;
using lattice::certify_positivity;
using lattice::intersect;
using lattice::PositivityStatus;
using lattice::self_intersection;
using svlab::to_string;

std::string to_string(CaseLabel c)
{
    switch (c) {
    case CaseLabel::A:
        return "A";
    case CaseLabel::B_I:
        return "B_I";
    case CaseLabel::B_II:
        return "B_II";
    case CaseLabel::C:
        return "C";
    case CaseLabel::C_M:
        return "C_M";
    case CaseLabel::CR:
        return "CR";
    case CaseLabel::D_I:
        return "D_I";
    case CaseLabel::D_II:
        break;
    }
    return "D_II";
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::guaranteed_m1:
        return "guaranteed(m=1)";
    case Outcome::guaranteed_m2:
        return "guaranteed(m<=2)";
    case Outcome::unknown:
        break;
    }
    return "unknown";
}

std::optional<Rational> Certificate::value(std::string const & name) const
{
    for (auto const & [k, v] : values)
        if (k == name)
            return v;
    return std::nullopt;
}

DivisorClass Scenario::boundary_class() const
{
    DivisorClass b = DivisorClass::zero(model);
    for (auto const & c : boundary)
        b += c.coefficient * c.curve;
    return b;
}

DivisorClass Scenario::H() const
{
    return D - canonical_class(model) - boundary_class();
}

namespace {

int base_genus(Scenario const & s)
{
    if (s.model->is_ruled())
        return s.model->genus();
    if (s.fibers)
        return s.fibers->base_genus;
    return s.q;
}

bool is_ruled_case(CaseLabel c)
{
    return c == CaseLabel::C || c == CaseLabel::C_M || c == CaseLabel::CR;
}

/* Necessary conditions on any model: d^2 and d against the effective basis
 * classes (pulled back E, F and the exceptional strict transforms). */
bool violates_necessary(DivisorClass const & d, bool strict)
{
    auto ok = [strict](Rational const & v) { return strict ? v > 0 : v >= 0; };
    if (!ok(lattice::self_intersection(d)))
        return true;
    auto const & model = d.model();
    if (!model->is_ruled())
        return false;
    for (std::size_t i = 0; i < model->rank(); ++i)
        if (!ok(intersect(d, DivisorClass::basis(model, i))))
            return true;
    return false;
}

PositivityStatus decidable_status(DivisorClass const & d, bool strict)
{
    if (violates_necessary(d, strict))
        return PositivityStatus::violated;
    if (!d.model()->is_pure_ruled())
        return PositivityStatus::unknown;
    if (d.model()->invariant_e() < 0 && d.model()->characteristic() == 0)
        return PositivityStatus::unknown;
    return certify_positivity(d, strict).status;
}

void require_not_violated(DivisorClass const & d, bool strict, char const * what)
{
    if (decidable_status(d, strict) == PositivityStatus::violated)
        throw InputError(std::string(what) + " fails the necessary positivity conditions: " + d.str());
}

std::string positivity_note(DivisorClass const & d, bool strict, char const * what)
{
    auto st = decidable_status(d, strict);
    return std::string(what) + (strict ? " ample: " : " nef: ") +
           (st == PositivityStatus::certified ? "certified" : "asserted by input");
}

Rational d_dot_fiber(Scenario const & s)
{
    if (s.model->is_ruled())
        return intersect(s.D, DivisorClass::fiber(s.model));
    if (s.fibers)
        return s.fibers->fibers.front().d_dot_fiber();
    throw InputError("D.F needs a ruled model or fiber data");
}

Verdict unknown_verdict(CaseLabel label, std::string reason)
{
    Verdict v;
    v.label = label;
    v.outcome = Outcome::unknown;
    v.reason = std::move(reason);
    v.anchor = "open-case";
    return v;
}

}  // namespace

void validate(Scenario const & s)
{
    if (!s.model)
        throw InputError("scenario without a model");
    lattice::require_same_model(s.D, DivisorClass::zero(s.model));
    if (!s.D.is_integral())
        throw InputError("D must be an integral divisor class: " + s.D.str());
    for (auto const & c : s.boundary) {
        lattice::require_same_model(c.curve, s.D);
        if (!(c.coefficient > 0 && c.coefficient < 1))
            throw InputError("boundary coefficients must lie in (0,1), got " + to_string(c.coefficient));
        if (!c.curve.is_integral())
            throw InputError("boundary components must be integral curve classes");
    }
    for (auto const & c : s.declared_curves)
        lattice::require_same_model(c, s.D);
    if (s.chi_O != s.model->chi_structure())
        throw InputError("chi(O_X) = " + std::to_string(s.chi_O) + " disagrees with the model value " +
                         std::to_string(s.model->chi_structure()));
    if (s.model->is_ruled()) {
        if (s.kodaira != Kodaira::negative_infinity)
            throw InputError("a ruled model has Kodaira dimension -infinity");
        if (s.q != s.model->genus())
            throw InputError("q must equal the base genus on a ruled model");
    }
    if (s.fibers) {
        validate(*s.fibers);
        if (s.model->is_ruled()) {
            if (s.fibers->base_genus != s.model->genus())
                throw InputError("fiber data and lattice model disagree on the base genus");
            if (Rational(s.fibers->fibers.front().d_dot_fiber()) != intersect(s.D, DivisorClass::fiber(s.model)))
                throw InputError("fiber data and lattice model disagree on D.F");
        }
        bool all_minimal = std::all_of(s.fibers->fibers.begin(), s.fibers->fibers.end(),
                                       [](FiberTree const & f) { return f.is_minimal(); });
        if (all_minimal != s.relatively_minimal)
            throw InputError("relatively_minimal flag disagrees with the fiber data");
    } else if (s.model->is_ruled() && s.model->is_pure_ruled() != s.relatively_minimal) {
        throw InputError("relatively_minimal flag disagrees with the lattice model");
    }
}

CaseLabel classify(Scenario const & s)
{
    validate(s);
    if (s.D.is_zero())
        return CaseLabel::A;
    if (s.kodaira != Kodaira::negative_infinity && s.chi_O >= 0)
        return CaseLabel::B_I;
    if (s.kodaira == Kodaira::negative_infinity) {
        if (s.q <= 1)
            return CaseLabel::B_II;
        if (base_genus(s) < 2)
            throw InputError("ruled surface with q >= 2 must have base genus >= 2");
        if (s.relatively_minimal) {
            if (s.model->is_pure_ruled() && s.model->invariant_e() < 0) {
                auto negatives = std::count_if(s.boundary.begin(), s.boundary.end(), [](BoundaryComponent const & c) {
                    return self_intersection(c.curve) < 0;
                });
                if (negatives == 1)
                    return CaseLabel::C_M;
            }
            return CaseLabel::C;
        }
        if (self_intersection(s.D) > 0 && s.kappa_minus_K_nonneg == false)
            return CaseLabel::CR;
        return CaseLabel::C;
    }
    if (s.kodaira == Kodaira::one) {
        if (s.characteristic() != 2 && s.characteristic() != 3)
            throw InputError("quasi-elliptic surfaces with chi(O) < 0 only exist in characteristic 2 or 3");
        return CaseLabel::D_I;
    }
    if (s.kodaira == Kodaira::two)
        return CaseLabel::D_II;
    throw InputError("no surface with kappa = 0 and chi(O) < 0");
}

Rational case_a_chi(Scenario const & s)
{
    if (classify(s) != CaseLabel::A)
        throw InputError("case_a_chi needs D == 0");
    if (s.q != 0)
        throw InputError("inconsistent scenario: -(K+B) ample forces q = 0, got q = " + std::to_string(s.q));
    if (s.chi_O != 1)
        throw InputError("inconsistent scenario: -(K+B) ample forces chi(O) = 1");
    require_not_violated(-(canonical_class(s.model) + s.boundary_class()), true, "-(K+B)");
    Rational chi = lattice::riemann_roch_chi(s.D);
    if (chi != 1)
        throw CheckFailure("chi(X, 0) != 1");
    return chi;
}

Rational case_b_chi(Scenario const & s)
{
    auto label = classify(s);
    if (label != CaseLabel::B_I && label != CaseLabel::B_II)
        throw InputError("case_b_chi needs a Case B scenario (got " + to_string(label) + ")");
    if (s.chi_O < 0)
        throw InputError("inconsistent scenario: chi(O) < 0 in Case B");
    require_not_violated(s.D, false, "D");
    DivisorClass h = s.H();
    require_not_violated(h, true, "H");
    Rational chi = intersect(s.D, h + s.boundary_class()) / 2 + s.chi_O;
    if (chi != lattice::riemann_roch_chi(s.D))
        throw CheckFailure("D(H+B)/2 + chi(O) disagrees with Riemann-Roch");
    if (!(chi > 0))
        throw InputError("chi(D) = " + to_string(chi) + " <= 0: D is not nef or H is not ample");
    return chi;
}

H2Certificate h2_vanishes(Scenario const & s)
{
    DivisorClass h = s.H();
    DivisorClass k_minus_d = canonical_class(s.model) - s.D;
    if (!(k_minus_d == -(h + s.boundary_class())))
        throw CheckFailure("K - D != -(H + B)");
    H2Certificate c;
    c.k_minus_d_dot_h = intersect(k_minus_d, h);
    c.vanishes = c.k_minus_d_dot_h < 0;
    return c;
}

Verdict chi_positive_implies_h0(Scenario const & s, CaseLabel label)
{
    Verdict v;
    v.label = label;
    auto h2 = h2_vanishes(s);
    Rational chi = lattice::riemann_roch_chi(s.D);
    v.certificate.kind = "euler-characteristic";
    v.certificate.add("chi(D)", chi);
    v.certificate.add("(K-D).H", h2.k_minus_d_dot_h);
    if (!h2.vanishes) {
        v.reason = "h^2 vanishing not witnessed: (K-D).H >= 0";
        return v;
    }
    if (chi > 0) {
        v.outcome = Outcome::guaranteed_m1;
        v.anchor = "chi-positive-h0";
        v.reason = "chi(D) > 0 and h^2(D) = 0";
    } else {
        v.reason = "chi(D) <= 0";
    }
    return v;
}

Verdict fiber_degree_criterion(Scenario const & s, DivisorClass const & h_like, CaseLabel label)
{
    Verdict v;
    v.label = label;
    v.certificate.kind = "fiber-degree";
    Rational hf = intersect(h_like, DivisorClass::fiber(s.model));
    v.certificate.add("H.F", hf);
    if (hf > 1) {
        v.outcome = Outcome::guaranteed_m1;
        v.anchor = "fiber-degree-gt-1";
        v.reason = "H.F > 1";
    } else {
        v.reason = "H.F <= 1";
    }
    return v;
}

Verdict fiber_degree_criterion(Scenario const & s)
{
    s.model->ruled_data();
    return fiber_degree_criterion(s, s.H(), classify(s));
}

Rational negative_component_closed_form(Rational const & a, Rational const & b, int g, int e)
{
    return (a + 1) * (b - a * e / 2 + 1 - g);
}

Verdict negative_component_chi(NegativeComponentData const & in)
{
    if (!(in.c > 0 && in.c < 1))
        throw InputError("boundary coefficient must lie in (0,1)");
    if (in.e >= 0 || in.g < 2)
        throw InputError("needs e < 0 and base genus >= 2");
    if (in.a < 0 || in.b < in.a * in.e / 2)
        throw InputError("D = aE + bF is not nef (needs a >= 0, b >= ae/2)");

    Rational h_a = in.a + 2 - in.c * in.x;
    Rational h_b = in.b + 2 - 2 * in.g + in.e - in.c * in.y;
    Rational rhs = h_a * in.e / 2;
    if (!(h_a > 0) || !(h_b > rhs))
        throw InputError("H = D - (K + cG) is not ample: needs a+2-cx > 0 and b+2-2g+e-cy > (a+2-cx)e/2");

    Rational lhs = in.b - in.a * in.e / 2;
    Rational m1 = 2 * in.g - 2 + in.c * (in.y - in.x * in.e / 2);
    Rational m2 = (2 - in.c) * (in.g - 1);
    Rational m3 = in.g - 1;
    if (!(lhs > m1))
        throw CheckFailure("b - ae/2 > 2g-2 + c(y - xe/2) failed");
    if (!(m1 >= m2))
        throw InputError("G violates y - xe/2 >= 1 - g (not a curve class)");
    if (!(m2 > m3))
        throw CheckFailure("(2-c)(g-1) > g-1 failed");

    Rational chi = negative_component_closed_form(in.a, in.b, in.g, in.e);
    if (!(chi > 0))
        throw CheckFailure("chi(D) = (a+1)(b - ae/2 + 1 - g) is not positive");

    Verdict v;
    v.label = CaseLabel::C_M;
    v.outcome = Outcome::guaranteed_m1;
    v.anchor = "negative-component-rr";
    v.reason = "single negative boundary component; chi(D) > 0";
    v.certificate.kind = "euler-characteristic";
    v.certificate.add("b-ae/2", lhs);
    v.certificate.add("2g-2+c(y-xe/2)", m1);
    v.certificate.add("(2-c)(g-1)", m2);
    v.certificate.add("chi(D)", chi);
    return v;
}

Verdict relatively_minimal_decide(Scenario const & s)
{
    auto label = classify(s);
    if (!is_ruled_case(label) || !s.model->is_pure_ruled())
        throw InputError("relatively_minimal_decide needs a relatively minimal Case C scenario");
    auto const & m = s.model;
    int const e = m->invariant_e();
    DivisorClass const E = DivisorClass::section(m);
    DivisorClass const F = DivisorClass::fiber(m);

    if (e >= 0) {
        Rational a_e = 0;
        for (auto const & c : s.boundary)
            if (c.curve == E)
                a_e += c.coefficient;
        DivisorClass h_plus = s.D - canonical_class(m) - a_e * E;
        Rational hf = intersect(h_plus, F);
        Rational floor_value = 2 - a_e;
        if (hf < floor_value)
            throw CheckFailure("(H+B').F < 2 - a although D is nef");
        auto v = fiber_degree_criterion(s, h_plus, label);
        v.certificate.add("2-a", floor_value);
        v.certificate.trace.push_back("e >= 0: B = aE + B' with B' nef; (H+B').F = (D-K-aE).F >= 2-a > 1");
        if (!v.guaranteed())
            throw CheckFailure("(H+B').F <= 1 with a < 1");
        return v;
    }

    std::vector<BoundaryComponent const *> negative;
    for (auto const & c : s.boundary)
        if (self_intersection(c.curve) < 0)
            negative.push_back(&c);
    if (negative.size() > 1)
        throw InputError("two boundary components with negative self-intersection on a Picard-rank-2 model: "
                         "writing F = c1 B1 + c2 B2 forces B_i.F < 0 or B_i = F");
    if (negative.empty()) {
        DivisorClass h_plus = s.H() + s.boundary_class();
        auto v = fiber_degree_criterion(s, h_plus, label);
        v.certificate.trace.push_back("e < 0, every boundary component nef: moved into H, (H+B).F = D.F + 2");
        if (!v.guaranteed())
            throw CheckFailure("(H+B).F <= 1 although D is nef");
        return v;
    }
    auto const & g_curve = negative.front()->curve;
    if (!lattice::candidate_curve_constraints(g_curve))
        throw InputError("negative boundary component " + g_curve.str() + " is not a possible curve class");

    NegativeComponentData data{s.D.a(), s.D.b(), m->genus(), e, negative.front()->coefficient,
                               g_curve.a(), g_curve.b()};
    auto v = negative_component_chi(data);
    Rational rr = lattice::riemann_roch_chi(s.D);
    if (rr != *v.certificate.value("chi(D)"))
        throw CheckFailure("closed-form chi disagrees with Riemann-Roch");
    v.certificate.add("chi(D) via Riemann-Roch", rr);
    v.certificate.trace.push_back("e < 0: nef boundary components moved into H; one negative component remains");
    return v;
}

void check_reduction_curve(Scenario const & s, DivisorClass const & l)
{
    lattice::require_same_model(l, s.D);
    Rational l2 = self_intersection(l);
    Rational kl = intersect(canonical_class(s.model), l);
    if (l2 != -1 || kl != -1)
        throw InputError("not a (-1)-curve: l^2 = " + to_string(l2) + ", K.l = " + to_string(kl));
    Rational dl = intersect(s.D, l);
    if (dl != 0)
        throw InputError("D.l = " + to_string(dl) +
                         " != 0: D is not a pullback, so the contracted model is not a reduction model");
}

ReductionStep contract_reduction(Scenario const & s, std::size_t exceptional_index)
{
    lattice::Contraction g(s.model, exceptional_index);
    DivisorClass l = g.curve();
    check_reduction_curve(s, l);

    DivisorClass kb = canonical_class(s.model) + s.boundary_class();
    ReductionStep step;
    step.d = -intersect(kb, l);
    if (!(step.d > 0))
        throw InputError("d = -(K+B).l = H.l <= 0: H is not ample");

    Scenario y{g.contracted(), std::nullopt, s.kodaira, s.chi_O, s.q,
               g.contracted()->is_pure_ruled(), {}, g.push(s.D), s.kappa_minus_K_nonneg, {}};
    for (auto const & c : s.boundary) {
        DivisorClass pushed = g.push(c.curve);
        if (pushed.is_zero())
            continue;
        if (!(c.coefficient < 1))
            throw CheckFailure("round-down of B_Y is nonzero");
        y.boundary.push_back({pushed, c.coefficient});
    }
    for (auto const & c : s.declared_curves) {
        DivisorClass pushed = g.push(c);
        if (!pushed.is_zero())
            y.declared_curves.push_back(pushed);
    }

    /* K + B = g^*(K_Y + B_Y) + d l */
    DivisorClass kb_y = canonical_class(y.model) + y.boundary_class();
    if (!(g.pull(kb_y) + step.d * l == kb))
        throw CheckFailure("K + B != g^*(K_Y + B_Y) + d l");

    DivisorClass h = s.H();
    DivisorClass h_y = y.H();
    step.h_square_before = self_intersection(h);
    step.h_square_after = self_intersection(h_y);
    if (step.h_square_after != step.h_square_before + step.d * step.d)
        throw CheckFailure("H_Y^2 != H^2 + d^2");

    bool nakai = step.h_square_after > 0;
    for (auto const & c : y.declared_curves)
        if (!(intersect(h_y, c) > 0))
            nakai = false;
    if (y.model->is_pure_ruled() && decidable_status(h_y, true) == PositivityStatus::certified)
        step.notes.push_back("H_Y ample: certified on the P^1-bundle");
    step.nakai_certified = nakai;
    step.notes.push_back(std::string("H_Y ample by Nakai relative to declared curves: ") + (nakai ? "yes" : "no"));

    std::ostringstream os;
    os << "contract E_" << exceptional_index << ": l^2 = -1, K.l = -1, D.l = 0, d = " << to_string(step.d);
    step.notes.insert(step.notes.begin(), os.str());
    step.reduced = std::move(y);
    return step;
}

Verdict reduce_low_fiber_degree(Scenario const & s)
{
    auto label = classify(s);
    if (!is_ruled_case(label))
        throw InputError("fiber-degree reduction needs a Case C scenario");
    Rational df = d_dot_fiber(s);
    if (df > 1)
        throw InputError("fiber-degree reduction needs D.F <= 1");

    Verdict v;
    v.label = label;
    v.certificate.kind = "reduction-trace";
    v.certificate.add("D.F", df);

    if (s.fibers) {
        auto trace = reduce_fibers(*s.fibers);
        for (auto const & st : trace.steps) {
            std::ostringstream os;
            os << "fiber " << st.fiber << ": contract component " << st.component << " (l^2 = -1, K.l = -1, D.l = 0)";
            v.certificate.trace.push_back(os.str());
        }
        for (auto const & a : trace.audit)
            v.certificate.trace.push_back(a);
        v.certificate.trace.push_back("d = H.l > 0 for every step since H is ample");
        v.certificate.add("contractions", Rational(static_cast<long>(trace.steps.size())));
        v.outcome = Outcome::guaranteed_m1;
        v.anchor = "fiber-reduction";
        v.reason = "relatively minimal reduction model reached; the relatively minimal case applies";
        return v;
    }

    Scenario cur = s;
    std::size_t count = 0;
    while (!cur.model->is_pure_ruled()) {
        auto const k = cur.model->exceptional_count();
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < k && !pick; ++i) {
            DivisorClass l = DivisorClass::exceptional(cur.model, i);
            if (self_intersection(l) == -1 && intersect(canonical_class(cur.model), l) == -1 &&
                intersect(cur.D, l) == 0)
                pick = i;
        }
        if (!pick) {
            v.reason = "no D-trivial exceptional (-1)-curve left on the lattice model";
            v.anchor = "fiber-reduction";
            return v;
        }
        auto step = contract_reduction(cur, *pick);
        for (auto const & n : step.notes)
            v.certificate.trace.push_back(n);
        cur = std::move(step.reduced);
        ++count;
    }
    cur.relatively_minimal = true;
    v.certificate.add("contractions", Rational(static_cast<long>(count)));
    Verdict inner = relatively_minimal_decide(cur);
    for (auto const & t : inner.certificate.trace)
        v.certificate.trace.push_back(t);
    for (auto const & [k, val] : inner.certificate.values)
        v.certificate.add(k, val);
    v.outcome = inner.outcome;
    v.anchor = "fiber-reduction";
    v.reason = "relatively minimal reduction model: " + inner.reason;
    return v;
}

AmbroBounds ambro_bounds(Rational const & a, Rational const & d_square, Rational const & d_dot_hb,
                         Rational const & d_dot_k)
{
    if (!(a > 0))
        throw InputError("needs a = D.F > 0");
    if (d_square != d_dot_hb + d_dot_k)
        throw CheckFailure("D^2 != D(H+B) + D.K");
    Rational two_a_sq = 2 * a * a;
    Rational chi_o_lower = -(d_square + a * d_dot_k) / two_a_sq;

    AmbroBounds b;
    Rational direct2 = 2 * d_square - d_dot_k + chi_o_lower;
    b.chi_2d_lower = (2 * a + 1) / (2 * a) * ((1 - 1 / a) * d_square + d_dot_hb);
    if (direct2 != b.chi_2d_lower)
        throw CheckFailure("chi(2D) lower bound: the two expansions disagree");

    Rational direct1 = (d_square - d_dot_k) / 2 + chi_o_lower;
    b.chi_d_lower = (a * a - 1) / two_a_sq * d_dot_hb - (a + 1) / two_a_sq * d_dot_k;
    if (direct1 != b.chi_d_lower)
        throw CheckFailure("chi(D) lower bound: the two expansions disagree");
    return b;
}

int numerical_dimension(DivisorClass const & d)
{
    if (d.is_zero())
        return 0;
    Rational d2 = self_intersection(d);
    if (d2 < 0)
        throw InputError("D^2 < 0: D is not nef");
    return d2 == 0 ? 1 : 2;
}

Verdict ambro_bound_decide(Scenario const & s)
{
    auto label = classify(s);
    if (!is_ruled_case(label))
        throw InputError("the chi(O) bound route needs a Case C scenario");
    Rational a = d_dot_fiber(s);
    if (a < 2)
        throw InputError("needs a = D.F >= 2 (smaller values go through the fiber reduction)");
    DivisorClass hb = s.H() + s.boundary_class();
    Rational d2 = self_intersection(s.D);
    Rational dhb = intersect(s.D, hb);
    Rational dk = intersect(s.D, canonical_class(s.model));
    auto bounds = ambro_bounds(a, d2, dhb, dk);

    Verdict v;
    v.label = label;
    v.anchor = "ambro-bound";
    v.certificate.kind = "chi-lower-bound";
    v.certificate.add("a", a);
    v.certificate.add("D^2", d2);
    v.certificate.add("D(H+B)", dhb);
    v.certificate.add("D.K", dk);
    v.certificate.add("chi(2D) lower bound", bounds.chi_2d_lower);
    if (!(bounds.chi_2d_lower > 0))
        throw InputError("chi(2D) lower bound is not positive: D is not nef or H is not ample");

    if (s.kappa_minus_K_nonneg == true) {
        if (dk > 0)
            throw InputError("kappa(-K) >= 0 asserted but D.K > 0");
        v.certificate.add("chi(D) lower bound", bounds.chi_d_lower);
        if (!(bounds.chi_d_lower > 0))
            throw CheckFailure("chi(D) lower bound not positive although D.K <= 0");
        v.outcome = Outcome::guaranteed_m1;
        v.reason = "kappa(X,-K) >= 0: chi(D) >= (a^2-1)/2a^2 D(H+B) - (a+1)/2a^2 D.K > 0";
        return v;
    }
    if (numerical_dimension(s.D) == 1) {
        v.certificate.add("D.(-K)", -dk);
        v.certificate.add("chi(D) lower bound", bounds.chi_d_lower);
        if (!(-dk > 0) || !(bounds.chi_d_lower > 0))
            throw CheckFailure("nu(D) = 1 but D.(-K) = D(H+B) is not positive");
        v.outcome = Outcome::guaranteed_m1;
        v.reason = "nu(D) = 1: D.(-K) = D(H+B) > 0";
        return v;
    }
    v.outcome = Outcome::guaranteed_m2;
    v.reason = "chi(2D) >= (2a+1)/2a D((1-1/a)D + H + B) > 0";
    return v;
}

Verdict decide(Scenario const & s)
{
    CaseLabel const label = classify(s);
    switch (label) {
    case CaseLabel::A: {
        Verdict v;
        v.label = label;
        v.outcome = Outcome::guaranteed_m1;
        v.anchor = "case-A-chi";
        v.reason = "D == 0 and -(K+B) ample: q = 0, chi(X,D) = chi(O_X) = 1";
        v.certificate.kind = "euler-characteristic";
        v.certificate.add("chi(D)", case_a_chi(s));
        v.certificate.trace.push_back(positivity_note(-(canonical_class(s.model) + s.boundary_class()), true, "-(K+B)"));
        return v;
    }
    case CaseLabel::B_I:
    case CaseLabel::B_II: {
        Rational chi = case_b_chi(s);
        Verdict v = chi_positive_implies_h0(s, label);
        v.certificate.add("D(H+B)/2 + chi(O)", chi);
        v.certificate.trace.push_back(positivity_note(s.D, false, "D"));
        v.certificate.trace.push_back(positivity_note(s.H(), true, "H"));
        if (!v.guaranteed())
            throw CheckFailure("Case B without a positive Euler characteristic certificate");
        return v;
    }
    case CaseLabel::D_I:
        return unknown_verdict(label, "quasi-elliptic surface with chi(O) < 0: no certificate; m > 1 is expected "
                                      "to be necessary here");
    case CaseLabel::D_II:
        return unknown_verdict(label, "general type surface with chi(O) < 0: no certificate; m > 1 is expected "
                                      "to be necessary here");
    case CaseLabel::C:
    case CaseLabel::C_M:
    case CaseLabel::CR:
        break;
    }

    require_not_violated(s.D, false, "D");
    require_not_violated(s.H(), true, "H");
    std::vector<std::string> notes{positivity_note(s.D, false, "D"), positivity_note(s.H(), true, "H")};
    auto finish = [&notes](Verdict v) {
        v.certificate.trace.insert(v.certificate.trace.begin(), notes.begin(), notes.end());
        return v;
    };

    if (s.model->is_ruled()) {
        Verdict v = fiber_degree_criterion(s, s.H(), label);
        if (v.guaranteed())
            return finish(v);
    }
    if (s.relatively_minimal && s.model->is_pure_ruled())
        return finish(relatively_minimal_decide(s));
    Rational df = d_dot_fiber(s);
    if (df <= 1) {
        Verdict v = reduce_low_fiber_degree(s);
        if (v.guaranteed())
            return finish(v);
    }
    if (label == CaseLabel::CR) {
        Verdict v = unknown_verdict(label, "D nef and big with kappa(X,-K) = -infinity: m = 1 is open");
        if (df >= 2) {
            auto m2 = ambro_bound_decide(s);
            v.certificate = m2.certificate;
            v.certificate.trace.push_back("m <= 2 still holds through the chi(2D) bound");
        }
        return finish(v);
    }
    if (df >= 2)
        return finish(ambro_bound_decide(s));
    return finish(unknown_verdict(label, "D.F <= 1 but no reduction to a relatively minimal model was found"));
}

}  // namespace svlab::nonvanish

#ifndef SVLAB_NONVANISH_HPP
#define SVLAB_NONVANISH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svlab/fibered.hpp"
#include "svlab/lattice.hpp"
#include "svlab/rational.hpp"

namespace svlab::nonvanish {

using lattice::DivisorClass;
using lattice::ModelPtr;

enum class Kodaira { negative_infinity, zero, one, two };

struct BoundaryComponent {
    DivisorClass curve;
    Rational coefficient;
};

/*
 * Input to the decision engine: a smooth projective surface X with a
 * boundary B = sum b_i B_i (0 < b_i < 1), a nef divisor D and the
 * numerical invariants the classification needs. H = D - (K + B) is
 * computed, never supplied.
 */
struct Scenario {
    ModelPtr model;
    std::optional<FiberedModel> fibers;
    Kodaira kodaira = Kodaira::negative_infinity;
    int chi_O = 0;
    int q = 0;
    bool relatively_minimal = false;
    std::vector<BoundaryComponent> boundary;
    DivisorClass D;
    /* kappa(X, -K_X) >= 0; absent when not known. */
    std::optional<bool> kappa_minus_K_nonneg;
    /* Curve classes against which Nakai is checked after a contraction. */
    std::vector<DivisorClass> declared_curves;

    DivisorClass boundary_class() const;
    DivisorClass H() const;
    int characteristic() const { return model->characteristic(); }
};

/* Structural checks: coefficients in (0,1), classes on the scenario model,
 * ruled invariants consistent with the lattice model. */
void validate(Scenario const & s);

enum class CaseLabel { A, B_I, B_II, C, C_M, CR, D_I, D_II };
enum class Outcome { guaranteed_m1, guaranteed_m2, unknown };

std::string to_string(CaseLabel c);
std::string to_string(Outcome o);

struct Certificate {
    std::string kind;
    std::vector<std::pair<std::string, Rational>> values;
    std::vector<std::string> trace;

    void add(std::string name, Rational const & v) { values.emplace_back(std::move(name), v); }
    std::optional<Rational> value(std::string const & name) const;
};

struct Verdict {
    CaseLabel label = CaseLabel::A;
    Outcome outcome = Outcome::unknown;
    std::string reason;
    std::string anchor;
    Certificate certificate;

    bool guaranteed() const { return outcome != Outcome::unknown; }
};

CaseLabel classify(Scenario const & s);

/* D == 0: -(K+B) ample forces q = 0 and h^1(O) = h^2(O) = 0. */
Rational case_a_chi(Scenario const & s);

/* chi(D) = D(H+B)/2 + chi(O), cross-checked against Riemann-Roch. */
Rational case_b_chi(Scenario const & s);

/* h^2(D) = h^0(K - D) = 0 witnessed by (K - D).H = -(H+B).H < 0. */
struct H2Certificate {
    bool vanishes = false;
    Rational k_minus_d_dot_h;
};
H2Certificate h2_vanishes(Scenario const & s);

/* guaranteed(m=1) when chi(D) > 0 and h^2(D) = 0. */
Verdict chi_positive_implies_h0(Scenario const & s, CaseLabel label);

/* H.F > 1 suffices on a ruled surface (H nef and big is enough). */
Verdict fiber_degree_criterion(Scenario const & s);
Verdict fiber_degree_criterion(Scenario const & s, DivisorClass const & h_like, CaseLabel label);

/* Relatively minimal ruled surface over a curve of genus >= 2. */
Verdict relatively_minimal_decide(Scenario const & s);

/* Single negative boundary component c G, G = xE + yF, on a P^1-bundle with
 * e < 0 and D = aE + bF: chi(D) = (a+1)(b - ae/2 + 1 - g). */
struct NegativeComponentData {
    Rational a, b;
    int g = 0;
    int e = 0;
    Rational c;
    Rational x, y;
};
Verdict negative_component_chi(NegativeComponentData const & in);
/* The closed form alone, for any rational a, b. */
Rational negative_component_closed_form(Rational const & a, Rational const & b, int g, int e);

/* One step of the reduction-model calculus. */
struct ReductionStep {
    Scenario reduced;
    Rational d;  // K + B = g^*(K_Y + B_Y) + d l
    Rational h_square_before;
    Rational h_square_after;
    bool nakai_certified = false;  // relative to the declared curves
    std::vector<std::string> notes;
};

/* Throws InputError when l is not a (-1)-curve with K.l = -1 or D.l != 0
 * (then D is not a pullback and the contracted model is not a reduction
 * model). */
void check_reduction_curve(Scenario const & s, DivisorClass const & l);
ReductionStep contract_reduction(Scenario const & s, std::size_t exceptional_index);

/* D.F <= 1: contract D-trivial (-1)-curves down to a relatively minimal
 * model. Works on the fiber trees when present, else on the exceptional
 * curves of the lattice model. */
Verdict reduce_low_fiber_degree(Scenario const & s);

/* Lower bounds derived from chi(O) >= -D(D + aK)/2a^2 with a = D.F. */
struct AmbroBounds {
    Rational chi_2d_lower;
    Rational chi_d_lower;  // meaningful when kappa(-K) >= 0 or D^2 = 0
};
AmbroBounds ambro_bounds(Rational const & a, Rational const & d_square, Rational const & d_dot_hb,
                         Rational const & d_dot_k);

Verdict ambro_bound_decide(Scenario const & s);

/* 0 if D == 0, 1 if D^2 = 0, 2 if D^2 > 0 (D nef). */
int numerical_dimension(DivisorClass const & d);

Verdict decide(Scenario const & s);

}  // namespace svlab::nonvanish

#endif

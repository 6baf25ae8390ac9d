#ifndef SVLAB_LATTICE_HPP
#define SVLAB_LATTICE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svlab/rational.hpp"

namespace svlab::lattice {

/* One point blow-up. proximate_to lists earlier exceptionals whose strict
 * transform passes through the blown-up point (at most two). */
struct Exceptional {
    std::vector<std::size_t> proximate_to;

    bool operator==(Exceptional const &) const = default;
};

struct RuledData {
    int genus = 0;
    int e = 0;
    std::vector<Exceptional> exceptionals;

    bool operator==(RuledData const &) const = default;
};

using GramMatrix = std::vector<std::vector<Rational>>;

class SurfaceModel;
using ModelPtr = std::shared_ptr<SurfaceModel const>;

/*
 * Numerical model of a smooth projective surface: characteristic, the
 * intersection form on a fixed basis of Num(X) (tensor Q), the canonical
 * class and chi(O_X).
 *
 * Ruled models use the basis {E, F, E_1..E_k}: E the canonical section with
 * E^2 = -e, F the fiber (both pulled back), E_i the strict transforms of the
 * exceptional curves. Without proximity E_i^2 = -1 and the E_i are mutually
 * orthogonal; in general E_i.E_j = 1 - |P(i) cap P(j)| and
 * E_i^2 = -1 - |P(i)| where P(i) is the set of points proximate to i.
 *
 * A model is immutable once built and is shared by every class on it.
 */
class SurfaceModel {
    int characteristic_ = 0;
    int chi_ = 0;
    std::optional<RuledData> ruled_;
    GramMatrix gram_;
    std::vector<Rational> canonical_;

    SurfaceModel() = default;

  public:
    static ModelPtr ruled(int characteristic, int genus, int e,
                          std::vector<Exceptional> exceptionals = {},
                          std::optional<int> chi = std::nullopt);

    /* Arbitrary numerical surface (used for non-ruled scenarios). */
    static ModelPtr numerical(int characteristic, GramMatrix gram,
                              std::vector<Rational> canonical, int chi);

    int characteristic() const { return characteristic_; }
    int chi_structure() const { return chi_; }
    std::size_t rank() const { return gram_.size(); }
    GramMatrix const & gram() const { return gram_; }
    Rational const & gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    std::vector<Rational> const & canonical_coeffs() const { return canonical_; }

    bool is_ruled() const { return ruled_.has_value(); }
    bool is_pure_ruled() const { return ruled_ && ruled_->exceptionals.empty(); }
    RuledData const & ruled_data() const;
    int genus() const { return ruled_data().genus; }
    int invariant_e() const { return ruled_data().e; }
    std::size_t exceptional_count() const { return ruled_ ? ruled_->exceptionals.size() : 0; }

    bool operator==(SurfaceModel const & o) const
    {
        return characteristic_ == o.characteristic_ && chi_ == o.chi_ && ruled_ == o.ruled_ &&
               gram_ == o.gram_ && canonical_ == o.canonical_;
    }
};

bool is_prime(long n);

/* Numerical divisor class: exact coefficients over the model basis. */
class DivisorClass {
    ModelPtr model_;
    std::vector<Rational> coeffs_;

  public:
    DivisorClass() = default;
    DivisorClass(ModelPtr model, std::vector<Rational> coeffs);

    static DivisorClass zero(ModelPtr const & model);
    static DivisorClass basis(ModelPtr const & model, std::size_t index);
    /* aE + bF on a ruled model (exceptional coordinates zero). */
    static DivisorClass ruled(ModelPtr const & model, Rational const & a, Rational const & b);
    static DivisorClass section(ModelPtr const & model) { return basis(model, 0); }
    static DivisorClass fiber(ModelPtr const & model) { return basis(model, 1); }
    static DivisorClass exceptional(ModelPtr const & model, std::size_t i) { return basis(model, 2 + i); }

    ModelPtr const & model() const { return model_; }
    std::vector<Rational> const & coeffs() const { return coeffs_; }
    Rational const & operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t size() const { return coeffs_.size(); }

    /* Coefficients on E and F for ruled models. */
    Rational const & a() const { return coeffs_.at(0); }
    Rational const & b() const { return coeffs_.at(1); }

    bool is_integral() const;
    bool is_zero() const;

    DivisorClass & operator+=(DivisorClass const & o);
    DivisorClass & operator-=(DivisorClass const & o);
    DivisorClass & operator*=(Rational const & s);

    friend DivisorClass operator+(DivisorClass l, DivisorClass const & r) { return l += r; }
    friend DivisorClass operator-(DivisorClass l, DivisorClass const & r) { return l -= r; }
    friend DivisorClass operator-(DivisorClass l) { return l *= Rational(-1); }
    friend DivisorClass operator*(Rational const & s, DivisorClass l) { return l *= s; }

    bool operator==(DivisorClass const & o) const;

    std::string str() const;
};

void require_same_model(DivisorClass const & a, DivisorClass const & b);

Rational intersect(DivisorClass const & x, DivisorClass const & y);

inline Rational self_intersection(DivisorClass const & x)
{
    return intersect(x, x);
}

DivisorClass canonical_class(ModelPtr const & model);

/* p_a = 1 + C(C+K)/2. */
Rational adjunction_pa(DivisorClass const & curve);

/* chi(X, D) = D(D-K)/2 + chi(O_X); integral D must give an integer. */
Rational riemann_roch_chi(DivisorClass const & d);

/* Counts (positive, negative, zero) of the form by exact congruence
 * diagonalization. */
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Signature signature(GramMatrix const & gram);

/* Necessary conditions for L = xE + yF to be the class of an irreducible
 * curve on a pure ruled model. Throws InputError in characteristic 0 with
 * e < 0. */
bool candidate_curve_constraints(DivisorClass const & l);

enum class PositivityStatus { certified, violated, unknown };

struct PositivityVerdict {
    PositivityStatus status = PositivityStatus::unknown;
    std::optional<DivisorClass> witness;
    std::string rule_used;
    std::string failed_condition;
};

std::string to_string(PositivityStatus s);

/* strict = true certifies ampleness, strict = false nefness. Pure ruled
 * models only. Sound but incomplete: unknown is returned whenever neither a
 * sufficient nor a necessary rule decides. */
PositivityVerdict certify_positivity(DivisorClass const & d, bool strict);

/* Blow-up of one point of the source model. pull() preserves every
 * intersection number. */
class Blowup {
    ModelPtr source_;
    ModelPtr target_;

  public:
    Blowup(ModelPtr source, Exceptional point);
    ModelPtr const & source() const { return source_; }
    ModelPtr const & blown_up() const { return target_; }
    DivisorClass pull(DivisorClass const & d) const;
};

/* Contraction of the exceptional curve E_i of a ruled model. Requires
 * E_i^2 = -1 and K.E_i = -1. push(A).push(B) = A.B + (A.l)(B.l). */
class Contraction {
    ModelPtr source_;
    ModelPtr target_;
    std::size_t index_;

  public:
    Contraction(ModelPtr source, std::size_t exceptional_index);
    ModelPtr const & source() const { return source_; }
    ModelPtr const & contracted() const { return target_; }
    std::size_t exceptional_index() const { return index_; }
    DivisorClass curve() const { return DivisorClass::exceptional(source_, index_); }
    DivisorClass push(DivisorClass const & d) const;
    DivisorClass pull(DivisorClass const & d) const;
};

}  // namespace svlab::lattice

#endif

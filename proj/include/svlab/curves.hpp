#ifndef SVLAB_CURVES_HPP
#define SVLAB_CURVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "svlab/laurent.hpp"

namespace svlab::charp {

enum class FamilyKind { hyperelliptic, artin_schreier, tango_plane };

/*
 * hyperelliptic:   y^2 = x^(ph) + x^(p+1) + 1,      p >= 3, h odd >= 3
 * artin_schreier:  y^(hp-1) = x^p - x,              h >= 3
 * tango_plane:     x0^(p+1) = x1 x2 (x0^(p-1) + x1^(p-1) - x2^(p-1)),  p >= 3
 */
struct CurveFamily {
    FamilyKind kind = FamilyKind::hyperelliptic;
    int p = 3;
    int h = 0;

    static CurveFamily hyperelliptic(int p, int h);
    static CurveFamily artin_schreier(int p, int h);
    static CurveFamily tango_plane(int p);

    std::string name() const;
};

/* Throws InputError when the parameters leave the catalogued range. */
void validate(CurveFamily const & f);

std::string to_string(FamilyKind k);
FamilyKind parse_family(std::string const & name);

enum class Witness { y_over_xp, y, x, x0_over_x1 };

std::string to_string(Witness w);
Witness default_witness(CurveFamily const & f);

int genus(CurveFamily const & f);

long default_precision(CurveFamily const & f);

/*
 * Expansions at the unique point at infinity in a catalogued local
 * parameter t. hyperelliptic: x = t^-2, y = t^-(ph) s with
 * s^2 = 1 + t^(2(ph-p-1)) + t^(2ph). artin_schreier: t = x / y^h,
 * y = t^-p w, x = t^-(hp-1) w^h with w = 1 + t^((p-1)(hp-1)) w^(1-h(p-1)).
 * precision is the relative precision of s resp. w.
 */
struct Expansion {
    CurveFamily family;
    long precision = 0;
    LaurentSeries x;
    LaurentSeries y;
    /* Defining equation evaluated on (x(t), y(t)). */
    LaurentSeries residual;
};

Expansion expand_at_infinity(CurveFamily const & f, std::optional<long> precision = std::nullopt);

LaurentSeries witness_series(Expansion const & e, Witness w);

/* ord_t(d f0 / dt) at infinity. Throws InputError when the derivative
 * vanishes to the known precision. */
long v_infinity_df(CurveFamily const & f, Witness w, std::optional<long> precision = std::nullopt);

struct AffineCertificate {
    bool holds = false;
    bool rewrite_verified = false;
    bool affine_regular = false;
    long v_inf = 0;
    long expected = 0;  // 2g - 2
    std::optional<long> rewrite_valuation;
    std::string rewrite;
    std::vector<std::string> notes;
};

AffineCertificate affine_support_certificate(CurveFamily const & f, Witness w,
                                             std::optional<long> precision = std::nullopt);

/* floor(v_inf / p); needs a holding affine certificate. */
long n_of_f(CurveFamily const & f, Witness w, std::optional<long> precision = std::nullopt);

enum class Provenance { computed, asserted };

std::string to_string(Provenance p);

struct TangoCertificate {
    CurveFamily family;
    Witness witness = Witness::y;
    std::optional<long> v_inf;
    int genus = 0;
    long n_f0 = 0;
    long bound = 0;
    bool equality = false;
    long L_degree = 0;
    /* p = 2 only: (1/3)L integral, i.e. 3 | deg L. */
    std::optional<bool> star_condition;
    Provenance provenance = Provenance::computed;
    std::vector<std::string> notes;
};

TangoCertificate certify_tango(CurveFamily const & f, std::optional<long> precision = std::nullopt);

}  // namespace svlab::charp

#endif

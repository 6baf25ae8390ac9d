#ifndef SVLAB_SWEEP_HPP
#define SVLAB_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "svlab/rational.hpp"

namespace svlab::sweep {

/* Integral D = aE + bF over a box on a P^1-bundle (g, e < 0, p) with the
 * boundary c G, G = xE + yF. */
struct SweepRequest {
    int p = 3;
    int g = 4;
    int e = -2;
    Rational c;
    Rational x;
    Rational y;
    long a_min = 0, a_max = -1;
    long b_min = 0, b_max = -1;
};

enum class EntryStatus { agree, disagree, not_ample, not_nef, precondition };

std::string to_string(EntryStatus s);

struct SweepEntry {
    long a = 0;
    long b = 0;
    EntryStatus status = EntryStatus::precondition;
    Rational chi_rr;
    Rational chi_closed;
    std::string reason;

    bool operator==(SweepEntry const &) const = default;
};

struct SweepResult {
    std::vector<SweepEntry> entries;  // row-major in (a, b)
    long total = 0;
    long certified = 0;
    long agreements = 0;
    long disagreements = 0;
    long skipped = 0;
    std::optional<Rational> min_chi;
};

/* Throws InputError on a request outside the supported range. */
void validate(SweepRequest const & req);

SweepEntry evaluate(SweepRequest const & req, long a, long b);

SweepResult run_serial(SweepRequest const & req);
/* Same result as run_serial; jobs <= 0 uses the OpenMP default. */
SweepResult run_parallel(SweepRequest const & req, int jobs = 0);

}  // namespace svlab::sweep

#endif

#include "svlab/sweep.hpp"

#include <omp.h>

#include "svlab/errors.hpp"
#include "svlab/lattice.hpp"
#include "svlab/nonvanish.hpp"

namespace svlab::sweep {

using lattice::DivisorClass;

std::string to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::agree:
        return "agree";
    case EntryStatus::disagree:
        return "disagree";
    case EntryStatus::not_ample:
        return "not-ample";
    case EntryStatus::not_nef:
        return "not-nef";
    case EntryStatus::precondition:
        break;
    }
    return "precondition";
}

void validate(SweepRequest const & req)
{
    if (req.p < 2 || !lattice::is_prime(req.p))
        throw InputError("sweep needs a prime characteristic");
    if (req.e >= 0)
        throw InputError("sweep needs e < 0");
    if (req.g < 2)
        throw InputError("sweep needs base genus >= 2");
    if (!(req.c > 0 && req.c < 1))
        throw InputError("boundary coefficient must lie in (0,1)");
    if (!is_integral(req.x) || !is_integral(req.y))
        throw InputError("boundary curve class must be integral");
    long const width = req.a_max - req.a_min + 1;
    long const height = req.b_max - req.b_min + 1;
    if (width > 0 && height > 0 && width * height > 4'000'000)
        throw InputError("sweep box too large");
}

namespace {

long box_size(SweepRequest const & req, long & height)
{
    long const width = std::max(0L, req.a_max - req.a_min + 1);
    height = std::max(0L, req.b_max - req.b_min + 1);
    return width * height;
}

SweepResult summarize(std::vector<SweepEntry> entries)
{
    SweepResult r;
    r.total = static_cast<long>(entries.size());
    for (auto const & e : entries) {
        switch (e.status) {
        case EntryStatus::agree:
            ++r.certified;
            ++r.agreements;
            if (!r.min_chi || e.chi_rr < *r.min_chi)
                r.min_chi = e.chi_rr;
            break;
        case EntryStatus::disagree:
            ++r.certified;
            ++r.disagreements;
            break;
        default:
            ++r.skipped;
        }
    }
    r.entries = std::move(entries);
    return r;
}

}  // namespace

SweepEntry evaluate(SweepRequest const & req, long a, long b)
{
    SweepEntry out;
    out.a = a;
    out.b = b;
    auto model = lattice::SurfaceModel::ruled(req.p, req.g, req.e);
    DivisorClass d = DivisorClass::ruled(model, a, b);
    DivisorClass g_curve = DivisorClass::ruled(model, req.x, req.y);
    DivisorClass h = d - lattice::canonical_class(model) - req.c * g_curve;

    auto d_nef = lattice::certify_positivity(d, false);
    if (d_nef.status != lattice::PositivityStatus::certified) {
        out.status = EntryStatus::not_nef;
        out.reason = "D nef " + lattice::to_string(d_nef.status);
        return out;
    }
    auto h_amp = lattice::certify_positivity(h, true);
    if (h_amp.status != lattice::PositivityStatus::certified) {
        out.status = EntryStatus::not_ample;
        out.reason = "H ample " + lattice::to_string(h_amp.status);
        return out;
    }
    out.chi_rr = lattice::riemann_roch_chi(d);
    try {
        nonvanish::NegativeComponentData data{Rational(a), Rational(b), req.g, req.e, req.c, req.x, req.y};
        auto v = nonvanish::negative_component_chi(data);
        out.chi_closed = *v.certificate.value("chi(D)");
    } catch (InputError const & e) {
        out.status = EntryStatus::precondition;
        out.reason = e.what();
        return out;
    }
    bool const ok = out.chi_rr == out.chi_closed && out.chi_rr > 0;
    out.status = ok ? EntryStatus::agree : EntryStatus::disagree;
    return out;
}

SweepResult run_serial(SweepRequest const & req)
{
    validate(req);
    long height = 0;
    long const n = box_size(req, height);
    std::vector<SweepEntry> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        entries.push_back(evaluate(req, req.a_min + i / height, req.b_min + i % height));
    return summarize(std::move(entries));
}

SweepResult run_parallel(SweepRequest const & req, int jobs)
{
    validate(req);
    long height = 0;
    long const n = box_size(req, height);
    std::vector<SweepEntry> entries(static_cast<std::size_t>(n));
    int const threads = jobs > 0 ? jobs : omp_get_max_threads();
    bool failed = false;
    std::string failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        try {
            entries[static_cast<std::size_t>(i)] = evaluate(req, req.a_min + i / height, req.b_min + i % height);
        } catch (std::exception const & e) {
#pragma omp critical(sweep_failure)
            {
                if (!failed) {
                    failed = true;
                    failure = e.what();
                }
            }
        }
    }
    if (failed)
        throw CheckFailure("sweep kernel failed: " + failure);
    return summarize(std::move(entries));
}

}  // namespace svlab::sweep

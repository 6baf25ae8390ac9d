#ifndef SVLAB_DOCUMENTS_HPP
#define SVLAB_DOCUMENTS_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "svlab/construct.hpp"
#include "svlab/curves.hpp"
#include "svlab/klt.hpp"
#include "svlab/nonvanish.hpp"
#include "svlab/sweep.hpp"

/*
 * Scenario documents: JSON objects with "format": 1 and a "type" among
 * scenario, klt, tango, construct, package, sweep. Rationals are strings
 * "num" or "num/den"; unknown keys are rejected.
 */
namespace svlab::io {

using json = nlohmann::json;

inline constexpr int format_version = 1;

/* Parses text and checks the envelope; throws InputError. */
json parse_document(std::string const & text);
std::string document_type(json const & doc);
void require_type(json const & doc, std::string const & type);

json rational_to_json(Rational const & q);
Rational rational_from_json(json const & j, std::string const & where);

nonvanish::Scenario parse_scenario(json const & doc);
json scenario_to_json(nonvanish::Scenario const & s);

klt::ClusterArrangement parse_klt(json const & doc);
json klt_to_json(klt::ClusterArrangement const & arr);

struct TangoRequest {
    charp::CurveFamily family;
    std::optional<long> precision;
};
TangoRequest parse_tango(json const & doc);
charp::CurveFamily make_family(std::string const & name, int p, std::optional<int> h);

struct ConstructRequest {
    construct::PackageKind kind = construct::PackageKind::kv;
    charp::CurveFamily family;
    bool allow_asserted = false;
};
ConstructRequest parse_construct(json const & doc);

json package_to_json(construct::CounterexamplePackage const & pkg);
construct::CounterexamplePackage parse_package(json const & doc);

struct SweepDocument {
    sweep::SweepRequest request;
    std::optional<int> jobs;
};
SweepDocument parse_sweep(json const & doc);
json sweep_to_json(sweep::SweepRequest const & req);

}  // namespace svlab::io

#endif

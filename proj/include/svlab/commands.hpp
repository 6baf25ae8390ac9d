#ifndef SVLAB_COMMANDS_HPP
#define SVLAB_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "svlab/construct.hpp"
#include "svlab/documents.hpp"
#include "svlab/klt.hpp"
#include "svlab/nonvanish.hpp"
#include "svlab/report.hpp"

namespace svlab::cli {

Report cmd_classify(nonvanish::Scenario const & s);
Report cmd_klt(klt::ClusterArrangement const & arr);
Report cmd_tango(io::TangoRequest const & req);

struct ConstructOutput {
    Report report;
    construct::CounterexamplePackage package;
};
ConstructOutput cmd_construct(io::ConstructRequest const & req);
Report cmd_verify(construct::CounterexamplePackage const & pkg);
/* jobs: 1 runs the serial kernel, anything else the OpenMP one. */
Report cmd_sweep(io::SweepDocument const & doc, std::optional<int> jobs = std::nullopt);

struct Options {
    std::string command;
    std::optional<std::string> in;
    std::optional<std::string> out;
    std::string format = "text";
    std::optional<std::string> family;
    std::optional<int> p;
    std::optional<int> h;
    std::optional<std::string> kind;
    bool allow_asserted = false;
    std::optional<int> jobs;
    std::optional<std::string> emit;
    std::optional<long> precision;
};

/* Runs one command; the report goes to out (or --out), diagnostics to err.
 * Returns 0, 1 (a check failed) or 2 (input error). */
int run(Options const & opt, std::ostream & out, std::ostream & err);

}  // namespace svlab::cli

#endif

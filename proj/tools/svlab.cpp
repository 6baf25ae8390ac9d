#include <iostream>

#include <CLI11.hpp>

#include "svlab/commands.hpp"

int main(int argc, char ** argv)
{
    CLI::App app{"svlab: exact checks for non-vanishing on surfaces"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    svlab::cli::Options opt;
    std::string format = "text";
    std::optional<std::string> in, out, family, kind, emit;
    std::optional<int> p, h, jobs;
    std::optional<long> precision;
    bool allow_asserted = false;

    auto add_common = [&](CLI::App * sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--in", in, "input document");
        sub->add_option("--out", out, "write the report here instead of stdout");
        sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    };
    auto add_family = [&](CLI::App * sub) {
        sub->add_option("--family", family, "hyperelliptic, artin-schreier or tango-plane");
        sub->add_option("--p", p, "characteristic");
        sub->add_option("--h", h, "family parameter");
    };

    auto * classify = app.add_subcommand("classify", "decide non-vanishing for a scenario");
    add_common(classify);
    auto * klt = app.add_subcommand("klt", "KLT test for a cluster arrangement");
    add_common(klt);
    auto * tango = app.add_subcommand("tango", "Tango certificate for a curve family");
    add_common(tango);
    add_family(tango);
    tango->add_option("--precision", precision, "relative series precision");
    auto * construct = app.add_subcommand("construct", "build and verify a counterexample package");
    add_common(construct);
    add_family(construct);
    construct->add_option("--kind", kind, "kv, kollar or semipos");
    construct->add_flag("--allow-asserted", allow_asserted, "accept asserted Tango values");
    construct->add_option("--emit", emit, "write the package document here");
    auto * verify = app.add_subcommand("verify", "re-run the checks on a package document");
    add_common(verify);
    auto * sweep = app.add_subcommand("sweep", "closed form against Riemann-Roch over a box");
    add_common(sweep);
    sweep->add_option("--jobs", jobs, "threads; 1 runs the serial kernel");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    opt.command = app.get_subcommands().front()->get_name();
    opt.in = in;
    opt.out = out;
    opt.format = format;
    opt.family = family;
    opt.p = p;
    opt.h = h;
    opt.kind = kind;
    opt.allow_asserted = allow_asserted;
    opt.jobs = jobs;
    opt.emit = emit;
    opt.precision = precision;
    return svlab::cli::run(opt, std::cout, std::cerr);
}

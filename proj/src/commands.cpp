#include "svlab/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "svlab/curves.hpp"
#include "svlab/errors.hpp"
#include "svlab/sweep.hpp"

namespace svlab::cli {

using svlab::to_string;

namespace {

std::string kodaira_name(nonvanish::Kodaira k)
{
    switch (k) {
    case nonvanish::Kodaira::negative_infinity:
        return "-inf";
    case nonvanish::Kodaira::zero:
        return "0";
    case nonvanish::Kodaira::one:
        return "1";
    case nonvanish::Kodaira::two:
        break;
    }
    return "2";
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

void add_tango_record(Report & r, charp::TangoCertificate const & c)
{
    Fields f{{"family", c.family.name()},
             {"witness", charp::to_string(c.witness)},
             {"genus", std::to_string(c.genus)}};
    if (c.v_inf)
        f.emplace_back("v_inf", std::to_string(*c.v_inf));
    f.emplace_back("n", std::to_string(c.n_f0));
    f.emplace_back("bound", std::to_string(c.bound));
    f.emplace_back("equality", yes_no(c.equality));
    f.emplace_back("L_degree", std::to_string(c.L_degree));
    if (c.star_condition)
        f.emplace_back("star_condition", yes_no(*c.star_condition));
    f.emplace_back("provenance", charp::to_string(c.provenance));
    r.add("tango", "certificate", c.equality ? RecordStatus::pass : RecordStatus::info, std::move(f),
          c.provenance == charp::Provenance::asserted ? "tango-asserted" : "tango-bound");
}

/* Shared by construct and verify so an emitted package verifies to the
 * same records. */
void add_package_records(Report & r, construct::CounterexamplePackage const & pkg)
{
    add_tango_record(r, pkg.cert);
    r.add("package", "surface", RecordStatus::info,
          {{"p", std::to_string(pkg.p)}, {"g", std::to_string(pkg.g)}, {"n", std::to_string(pkg.n)},
           {"e", std::to_string(pkg.model->invariant_e())}});
    auto add_class = [&](std::string const & name, lattice::DivisorClass const & c) {
        r.add("class", name, RecordStatus::info, {{"value", c.str()}});
    };
    add_class("E", pkg.E);
    add_class("F", pkg.F);
    add_class("C'", pkg.C_prime);
    add_class("D", pkg.D);
    add_class("H", pkg.H);
    if (pkg.M)
        add_class("f^*M", *pkg.M);
    if (pkg.D_prime)
        add_class("D'", *pkg.D_prime);
    for (auto const & b : pkg.boundary)
        r.add("boundary", b.name, RecordStatus::info,
              {{"class", b.curve.str()}, {"coefficient", to_string(b.coefficient)}});
    for (auto const & a : pkg.assumptions)
        r.add("assumption", "note", RecordStatus::info, {{"text", a}});

    auto rep = construct::verify_package(pkg);
    for (auto const & item : rep.items) {
        RecordStatus st = item.required ? (item.passed ? RecordStatus::pass : RecordStatus::fail) : RecordStatus::info;
        Fields f{{"holds", yes_no(item.passed)}};
        if (!item.detail.empty())
            f.emplace_back("detail", item.detail);
        if (!item.required)
            f.emplace_back("required", "no");
        r.add("check", item.name, st, std::move(f));
    }
    if (rep.audit) {
        auto const & a = *rep.audit;
        r.add("audit", a.route, RecordStatus::info,
              {{"m", std::to_string(a.m)},
               {"subsheaf_degree", to_string(a.subsheaf_degree)},
               {"twist_degree", to_string(a.twist_degree)},
               {"final_degree", to_string(a.final_degree)},
               {"h1_lower_bound", std::to_string(a.h1_lower_bound)}},
              "h1-degree-audit");
        for (std::size_t i = 0; i < a.lines.size(); ++i)
            r.add("audit-line", std::to_string(i + 1), RecordStatus::info, {{"text", a.lines[i]}});
    }
    r.add("package", construct::to_string(pkg.kind), rep.valid ? RecordStatus::pass : RecordStatus::fail,
          {{"verdict", rep.valid ? "VALID" : "INVALID"}});
    r.exit_code = rep.valid ? 0 : 1;
}

std::string read_file(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(std::string const & path, std::string const & text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
    if (!out)
        throw InputError("cannot write " + path);
}

io::json load(Options const & opt)
{
    if (!opt.in)
        throw InputError(opt.command + " needs --in PATH");
    return io::parse_document(read_file(*opt.in));
}

bool family_flags_given(Options const & opt)
{
    return opt.family || opt.p || opt.h;
}

charp::CurveFamily family_from_flags(Options const & opt)
{
    if (!opt.family || !opt.p)
        throw InputError("family selection needs --family and --p");
    return io::make_family(*opt.family, *opt.p, opt.h);
}

}  // namespace

Report cmd_classify(nonvanish::Scenario const & s)
{
    Report r;
    r.command = "classify";
    Fields summary{{"characteristic", std::to_string(s.characteristic())},
                   {"kodaira", kodaira_name(s.kodaira)},
                   {"chi_O", std::to_string(s.chi_O)},
                   {"q", std::to_string(s.q)},
                   {"relatively_minimal", yes_no(s.relatively_minimal)}};
    if (s.kappa_minus_K_nonneg)
        summary.emplace_back("kappa(-K)>=0", yes_no(*s.kappa_minus_K_nonneg));
    summary.emplace_back("D", s.D.str());
    r.add("scenario", "summary", RecordStatus::info, std::move(summary));

    nonvanish::validate(s);
    r.add("scenario", "derived", RecordStatus::info,
          {{"B", s.boundary_class().str()}, {"H", s.H().str()}});
    r.add("case", nonvanish::to_string(nonvanish::classify(s)), RecordStatus::info);

    auto v = nonvanish::decide(s);
    Fields f{{"label", nonvanish::to_string(v.label)}, {"outcome", nonvanish::to_string(v.outcome)}};
    if (!v.reason.empty())
        f.emplace_back("reason", v.reason);
    if (!v.certificate.kind.empty())
        f.emplace_back("certificate", v.certificate.kind);
    for (auto const & [name, value] : v.certificate.values)
        f.emplace_back(name, to_string(value));
    r.add("verdict", "non-vanishing", v.guaranteed() ? RecordStatus::pass : RecordStatus::info, std::move(f),
          v.anchor);
    for (std::size_t i = 0; i < v.certificate.trace.size(); ++i)
        r.add("trace", std::to_string(i + 1), RecordStatus::info, {{"step", v.certificate.trace[i]}});
    r.exit_code = 0;
    return r;
}

Report cmd_klt(klt::ClusterArrangement const & arr)
{
    Report r;
    r.command = "klt";
    for (auto const & b : arr.branches)
        r.add("branch", b.id, RecordStatus::info, {{"coefficient", to_string(b.coefficient)}});
    auto res = klt::is_klt(arr);
    for (auto const & rec : res.trace.records)
        r.add("blowup", rec.node, rec.discrepancy > -1 ? RecordStatus::pass : RecordStatus::info,
              {{"exceptional", rec.exceptional_id},
               {"incident_sum", to_string(rec.incident_sum)},
               {"coefficient", to_string(rec.coefficient)},
               {"discrepancy", to_string(rec.discrepancy)}});
    r.add("verdict", "klt", res.klt ? RecordStatus::pass : RecordStatus::info,
          {{"klt", yes_no(res.klt)}, {"snc_shortcut", yes_no(klt::snc_klt_shortcut(arr))}, {"reason", res.reason}},
          "klt-blowup-transport");
    r.exit_code = 0;
    return r;
}

Report cmd_tango(io::TangoRequest const & req)
{
    Report r;
    r.command = "tango";
    r.echo.emplace_back("family", req.family.name());
    if (req.precision)
        r.echo.emplace_back("precision", std::to_string(*req.precision));
    auto cert = charp::certify_tango(req.family, req.precision);
    add_tango_record(r, cert);
    for (auto const & note : cert.notes)
        r.add("note", "tango", RecordStatus::info, {{"text", note}});
    r.exit_code = 0;
    return r;
}

ConstructOutput cmd_construct(io::ConstructRequest const & req)
{
    ConstructOutput out;
    out.report.command = "construct";
    out.report.echo.emplace_back("kind", construct::to_string(req.kind));
    out.report.echo.emplace_back("family", req.family.name());
    if (req.allow_asserted)
        out.report.echo.emplace_back("allow_asserted", "yes");
    auto cert = charp::certify_tango(req.family);
    out.package = construct::build_package(req.kind, cert, req.allow_asserted);
    add_package_records(out.report, out.package);
    return out;
}

Report cmd_verify(construct::CounterexamplePackage const & pkg)
{
    Report r;
    r.command = "verify";
    r.echo.emplace_back("kind", construct::to_string(pkg.kind));
    r.echo.emplace_back("family", pkg.cert.family.name());
    add_package_records(r, pkg);
    return r;
}

Report cmd_sweep(io::SweepDocument const & doc, std::optional<int> jobs)
{
    auto const & q = doc.request;
    Report r;
    r.command = "sweep";
    r.echo = {{"p", std::to_string(q.p)},
              {"g", std::to_string(q.g)},
              {"e", std::to_string(q.e)},
              {"boundary", to_string(q.c) + " (" + to_string(q.x) + "E + " + to_string(q.y) + "F)"},
              {"a", "[" + std::to_string(q.a_min) + ", " + std::to_string(q.a_max) + "]"},
              {"b", "[" + std::to_string(q.b_min) + ", " + std::to_string(q.b_max) + "]"}};
    int const j = jobs ? *jobs : doc.jobs.value_or(0);
    auto res = j == 1 ? sweep::run_serial(q) : sweep::run_parallel(q, j);
    for (auto const & e : res.entries) {
        std::string name = "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
        Fields f{{"status", sweep::to_string(e.status)}};
        RecordStatus st = RecordStatus::info;
        if (e.status == sweep::EntryStatus::agree || e.status == sweep::EntryStatus::disagree) {
            f.emplace_back("chi_rr", to_string(e.chi_rr));
            f.emplace_back("chi_closed", to_string(e.chi_closed));
            st = e.status == sweep::EntryStatus::agree ? RecordStatus::pass : RecordStatus::fail;
        } else {
            f.emplace_back("reason", e.reason);
        }
        r.add("entry", name, st, std::move(f), "negative-component-rr");
    }
    Fields summary{{"total", std::to_string(res.total)},
                   {"certified", std::to_string(res.certified)},
                   {"agreements", std::to_string(res.agreements)},
                   {"disagreements", std::to_string(res.disagreements)},
                   {"skipped", std::to_string(res.skipped)},
                   {"min_chi", res.min_chi ? to_string(*res.min_chi) : "-"}};
    r.add("summary", "sweep", res.disagreements == 0 ? RecordStatus::pass : RecordStatus::fail, std::move(summary));
    r.exit_code = res.disagreements == 0 ? 0 : 1;
    return r;
}

int run(Options const & opt, std::ostream & out, std::ostream & err)
{
    try {
        if (opt.format != "text" && opt.format != "machine")
            throw InputError("--format must be text or machine");
        if (opt.jobs && *opt.jobs < 0)
            throw InputError("--jobs must be nonnegative");
        if (opt.emit && opt.command != "construct")
            throw InputError("--emit only applies to construct");
        Report report;
        if (opt.command == "classify") {
            report = cmd_classify(io::parse_scenario(load(opt)));
        } else if (opt.command == "klt") {
            report = cmd_klt(io::parse_klt(load(opt)));
        } else if (opt.command == "tango") {
            io::TangoRequest req;
            if (opt.in) {
                if (family_flags_given(opt))
                    throw InputError("give either --in or family flags, not both");
                req = io::parse_tango(load(opt));
            } else {
                req = {family_from_flags(opt), opt.precision};
            }
            report = cmd_tango(req);
        } else if (opt.command == "construct") {
            io::ConstructRequest req;
            if (opt.in) {
                if (family_flags_given(opt) || opt.kind)
                    throw InputError("give either --in or --kind/family flags, not both");
                req = io::parse_construct(load(opt));
            } else {
                if (!opt.kind)
                    throw InputError("construct needs --kind kv|kollar|semipos");
                req.kind = construct::parse_kind(*opt.kind);
                req.family = family_from_flags(opt);
            }
            req.allow_asserted = req.allow_asserted || opt.allow_asserted;
            auto built = cmd_construct(req);
            if (opt.emit)
                write_file(*opt.emit, io::package_to_json(built.package).dump(2) + "\n");
            report = std::move(built.report);
        } else if (opt.command == "verify") {
            report = cmd_verify(io::parse_package(load(opt)));
        } else if (opt.command == "sweep") {
            report = cmd_sweep(io::parse_sweep(load(opt)), opt.jobs);
        } else {
            throw InputError("unknown command '" + opt.command + "'");
        }
        if (opt.in)
            report.echo.insert(report.echo.begin(), {"in", *opt.in});
        std::string text = render(report, opt.format);
        if (opt.out)
            write_file(*opt.out, text);
        else
            out << text;
        return report.exit_code;
    } catch (InputError const & e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (io::json::exception const & e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (CheckFailure const & e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (std::exception const & e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace svlab::cli

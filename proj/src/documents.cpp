#include "svlab/documents.hpp"

#include <set>

#include "svlab/errors.hpp"

namespace svlab::io {

using lattice::DivisorClass;
using lattice::ModelPtr;

namespace {

/* Strict view of one JSON object: every key must be consumed. */
class Reader {
    json const & j_;
    std::string where_;
    std::set<std::string> used_;

  public:
    Reader(json const & j, std::string where) : j_(j), where_(std::move(where))
    {
        if (!j_.is_object())
            throw InputError(where_ + ": expected an object");
    }

    std::string const & where() const { return where_; }
    bool has(std::string const & key) const { return j_.contains(key); }

    json const & raw(std::string const & key)
    {
        if (!j_.contains(key))
            throw InputError(where_ + ": missing key '" + key + "'");
        used_.insert(key);
        return j_.at(key);
    }

    long integer(std::string const & key)
    {
        json const & v = raw(key);
        if (!v.is_number_integer())
            throw InputError(where_ + "." + key + ": expected an integer");
        return v.get<long>();
    }

    std::optional<long> opt_integer(std::string const & key)
    {
        if (!has(key))
            return std::nullopt;
        return integer(key);
    }

    bool boolean(std::string const & key)
    {
        json const & v = raw(key);
        if (!v.is_boolean())
            throw InputError(where_ + "." + key + ": expected a boolean");
        return v.get<bool>();
    }

    std::optional<bool> opt_boolean(std::string const & key)
    {
        if (!has(key))
            return std::nullopt;
        return boolean(key);
    }

    std::string string(std::string const & key)
    {
        json const & v = raw(key);
        if (!v.is_string())
            throw InputError(where_ + "." + key + ": expected a string");
        return v.get<std::string>();
    }

    Rational rational(std::string const & key) { return rational_from_json(raw(key), where_ + "." + key); }

    json const & array(std::string const & key)
    {
        json const & v = raw(key);
        if (!v.is_array())
            throw InputError(where_ + "." + key + ": expected an array");
        return v;
    }

    void finish() const
    {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.count(it.key()))
                throw InputError(where_ + ": unknown key '" + it.key() + "'");
    }
};

int to_int(long v, std::string const & where)
{
    if (v < -1'000'000 || v > 1'000'000)
        throw InputError(where + ": value out of range");
    return static_cast<int>(v);
}

void read_envelope(Reader & r)
{
    if (r.integer("format") != format_version)
        throw InputError("unsupported document format version");
    r.string("type");
}

std::vector<Rational> rational_list(json const & arr, std::string const & where)
{
    if (!arr.is_array())
        throw InputError(where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(rational_from_json(arr[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json rational_list_json(std::vector<Rational> const & v)
{
    json out = json::array();
    for (auto const & q : v)
        out.push_back(rational_to_json(q));
    return out;
}

DivisorClass class_from_json(json const & arr, ModelPtr const & model, std::string const & where)
{
    auto coeffs = rational_list(arr, where);
    if (coeffs.size() != model->rank())
        throw InputError(where + ": class has " + std::to_string(coeffs.size()) + " coefficients, model rank is " +
                         std::to_string(model->rank()));
    return DivisorClass(model, std::move(coeffs));
}

ModelPtr model_from_json(json const & j)
{
    Reader r(j, "model");
    std::string kind = r.string("kind");
    int characteristic = to_int(r.integer("characteristic"), "model.characteristic");
    ModelPtr m;
    if (kind == "ruled") {
        int genus = to_int(r.integer("genus"), "model.genus");
        int e = to_int(r.integer("e"), "model.e");
        std::vector<lattice::Exceptional> exc;
        if (r.has("exceptionals")) {
            json const & list = r.array("exceptionals");
            for (std::size_t i = 0; i < list.size(); ++i) {
                Reader er(list[i], "model.exceptionals[" + std::to_string(i) + "]");
                lattice::Exceptional x;
                for (auto const & v : er.array("proximate_to")) {
                    if (!v.is_number_unsigned())
                        throw InputError(er.where() + ".proximate_to: expected nonnegative integers");
                    x.proximate_to.push_back(v.get<std::size_t>());
                }
                er.finish();
                exc.push_back(std::move(x));
            }
        }
        std::optional<int> chi;
        if (auto c = r.opt_integer("chi"))
            chi = to_int(*c, "model.chi");
        m = lattice::SurfaceModel::ruled(characteristic, genus, e, std::move(exc), chi);
    } else if (kind == "numerical") {
        lattice::GramMatrix gram;
        json const & rows = r.array("gram");
        for (std::size_t i = 0; i < rows.size(); ++i)
            gram.push_back(rational_list(rows[i], "model.gram[" + std::to_string(i) + "]"));
        auto canonical = rational_list(r.array("canonical"), "model.canonical");
        int chi = to_int(r.integer("chi"), "model.chi");
        m = lattice::SurfaceModel::numerical(characteristic, std::move(gram), std::move(canonical), chi);
    } else {
        throw InputError("model.kind must be 'ruled' or 'numerical'");
    }
    r.finish();
    return m;
}

json model_to_json(lattice::SurfaceModel const & m)
{
    json j;
    j["characteristic"] = m.characteristic();
    if (m.is_ruled()) {
        j["kind"] = "ruled";
        j["genus"] = m.genus();
        j["e"] = m.invariant_e();
        json exc = json::array();
        for (auto const & x : m.ruled_data().exceptionals)
            exc.push_back({{"proximate_to", x.proximate_to}});
        j["exceptionals"] = exc;
        j["chi"] = m.chi_structure();
    } else {
        j["kind"] = "numerical";
        json gram = json::array();
        for (auto const & row : m.gram())
            gram.push_back(rational_list_json(row));
        j["gram"] = gram;
        j["canonical"] = rational_list_json(m.canonical_coeffs());
        j["chi"] = m.chi_structure();
    }
    return j;
}

nonvanish::Kodaira kodaira_from_string(std::string const & s)
{
    if (s == "-inf")
        return nonvanish::Kodaira::negative_infinity;
    if (s == "0")
        return nonvanish::Kodaira::zero;
    if (s == "1")
        return nonvanish::Kodaira::one;
    if (s == "2")
        return nonvanish::Kodaira::two;
    throw InputError("kodaira must be one of \"-inf\", \"0\", \"1\", \"2\"");
}

std::string kodaira_to_string(nonvanish::Kodaira k)
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

nonvanish::FiberedModel fibers_from_json(json const & j)
{
    Reader r(j, "fibers");
    nonvanish::FiberedModel fm;
    fm.base_genus = to_int(r.integer("base_genus"), "fibers.base_genus");
    json const & trees = r.array("trees");
    for (std::size_t t = 0; t < trees.size(); ++t) {
        std::string where = "fibers.trees[" + std::to_string(t) + "]";
        Reader tr(trees[t], where);
        std::vector<nonvanish::FiberComponent> comps;
        json const & cl = tr.array("components");
        for (std::size_t i = 0; i < cl.size(); ++i) {
            Reader cr(cl[i], where + ".components[" + std::to_string(i) + "]");
            nonvanish::FiberComponent c;
            c.self_intersection = to_int(cr.integer("self_intersection"), cr.where());
            c.multiplicity = to_int(cr.integer("multiplicity"), cr.where());
            c.k_degree = to_int(cr.integer("k_degree"), cr.where());
            c.d_degree = to_int(cr.integer("d_degree"), cr.where());
            cr.finish();
            comps.push_back(c);
        }
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto const & e : tr.array("edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw InputError(where + ".edges: expected pairs of component indices");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        tr.finish();
        fm.fibers.push_back(nonvanish::FiberTree::from_edges(std::move(comps), edges));
    }
    r.finish();
    return fm;
}

json fibers_to_json(nonvanish::FiberedModel const & fm)
{
    json trees = json::array();
    for (auto const & f : fm.fibers) {
        json comps = json::array();
        for (auto const & c : f.components)
            comps.push_back({{"self_intersection", c.self_intersection},
                             {"multiplicity", c.multiplicity},
                             {"k_degree", c.k_degree},
                             {"d_degree", c.d_degree}});
        json edges = json::array();
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                for (int k = 0; k < f.meets[i][j]; ++k)
                    edges.push_back({i, j});
        trees.push_back({{"components", comps}, {"edges", edges}});
    }
    return {{"base_genus", fm.base_genus}, {"trees", trees}};
}

klt::ClusterNode node_from_json(json const & j, std::string const & where)
{
    Reader r(j, where);
    klt::ClusterNode n;
    n.label = r.string("label");
    for (auto const & b : r.array("branches")) {
        if (!b.is_string())
            throw InputError(where + ".branches: expected strings");
        n.branches.push_back(b.get<std::string>());
    }
    if (r.has("children")) {
        json const & ch = r.array("children");
        for (std::size_t i = 0; i < ch.size(); ++i)
            n.children.push_back(node_from_json(ch[i], where + ".children[" + std::to_string(i) + "]"));
    }
    r.finish();
    return n;
}

json node_to_json(klt::ClusterNode const & n)
{
    json ch = json::array();
    for (auto const & c : n.children)
        ch.push_back(node_to_json(c));
    return {{"label", n.label}, {"branches", n.branches}, {"children", ch}};
}

json envelope(std::string const & type)
{
    return {{"format", format_version}, {"type", type}};
}

}  // namespace

json parse_document(std::string const & text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (json::parse_error const & e) {
        throw InputError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("document must be a JSON object");
    if (!doc.contains("format") || !doc["format"].is_number_integer() || doc["format"].get<long>() != format_version)
        throw InputError("document needs \"format\": " + std::to_string(format_version));
    if (!doc.contains("type") || !doc["type"].is_string())
        throw InputError("document needs a string \"type\"");
    return doc;
}

std::string document_type(json const & doc)
{
    return doc.at("type").get<std::string>();
}

void require_type(json const & doc, std::string const & type)
{
    if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string() || doc["type"] != type)
        throw InputError("expected a document of type '" + type + "'");
}

json rational_to_json(Rational const & q)
{
    return to_string(q);
}

Rational rational_from_json(json const & j, std::string const & where)
{
    if (!j.is_string())
        throw InputError(where + ": rationals are written as \"num/den\" strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (InputError const & e) {
        throw InputError(where + ": " + e.what());
    }
}

nonvanish::Scenario parse_scenario(json const & doc)
{
    require_type(doc, "scenario");
    Reader r(doc, "scenario");
    read_envelope(r);
    nonvanish::Scenario s;
    s.model = model_from_json(r.raw("model"));
    s.kodaira = kodaira_from_string(r.string("kodaira"));
    s.chi_O = to_int(r.integer("chi_O"), "scenario.chi_O");
    s.q = to_int(r.integer("q"), "scenario.q");
    s.relatively_minimal = r.boolean("relatively_minimal");
    json const & b = r.array("boundary");
    for (std::size_t i = 0; i < b.size(); ++i) {
        Reader br(b[i], "scenario.boundary[" + std::to_string(i) + "]");
        DivisorClass c = class_from_json(br.raw("class"), s.model, br.where() + ".class");
        Rational coeff = br.rational("coefficient");
        br.finish();
        s.boundary.push_back({c, coeff});
    }
    s.D = class_from_json(r.raw("D"), s.model, "scenario.D");
    s.kappa_minus_K_nonneg = r.opt_boolean("kappa_minus_K_nonneg");
    if (r.has("declared_curves")) {
        json const & dc = r.array("declared_curves");
        for (std::size_t i = 0; i < dc.size(); ++i)
            s.declared_curves.push_back(
                class_from_json(dc[i], s.model, "scenario.declared_curves[" + std::to_string(i) + "]"));
    }
    if (r.has("fibers"))
        s.fibers = fibers_from_json(r.raw("fibers"));
    r.finish();
    return s;
}

json scenario_to_json(nonvanish::Scenario const & s)
{
    json j = envelope("scenario");
    j["model"] = model_to_json(*s.model);
    j["kodaira"] = kodaira_to_string(s.kodaira);
    j["chi_O"] = s.chi_O;
    j["q"] = s.q;
    j["relatively_minimal"] = s.relatively_minimal;
    json b = json::array();
    for (auto const & c : s.boundary)
        b.push_back({{"class", rational_list_json(c.curve.coeffs())}, {"coefficient", rational_to_json(c.coefficient)}});
    j["boundary"] = b;
    j["D"] = rational_list_json(s.D.coeffs());
    if (s.kappa_minus_K_nonneg)
        j["kappa_minus_K_nonneg"] = *s.kappa_minus_K_nonneg;
    if (!s.declared_curves.empty()) {
        json dc = json::array();
        for (auto const & c : s.declared_curves)
            dc.push_back(rational_list_json(c.coeffs()));
        j["declared_curves"] = dc;
    }
    if (s.fibers)
        j["fibers"] = fibers_to_json(*s.fibers);
    return j;
}

klt::ClusterArrangement parse_klt(json const & doc)
{
    require_type(doc, "klt");
    Reader r(doc, "klt");
    read_envelope(r);
    klt::ClusterArrangement arr;
    json const & br = r.array("branches");
    for (std::size_t i = 0; i < br.size(); ++i) {
        Reader b(br[i], "klt.branches[" + std::to_string(i) + "]");
        klt::WeightedBranch w;
        w.id = b.string("id");
        w.coefficient = b.rational("coefficient");
        b.finish();
        arr.branches.push_back(std::move(w));
    }
    json const & cl = r.array("clusters");
    for (std::size_t i = 0; i < cl.size(); ++i)
        arr.clusters.push_back(node_from_json(cl[i], "klt.clusters[" + std::to_string(i) + "]"));
    if (auto d = r.opt_integer("max_depth"))
        arr.max_depth = to_int(*d, "klt.max_depth");
    r.finish();
    return arr;
}

json klt_to_json(klt::ClusterArrangement const & arr)
{
    json j = envelope("klt");
    json br = json::array();
    for (auto const & b : arr.branches)
        br.push_back({{"id", b.id}, {"coefficient", rational_to_json(b.coefficient)}});
    j["branches"] = br;
    json cl = json::array();
    for (auto const & c : arr.clusters)
        cl.push_back(node_to_json(c));
    j["clusters"] = cl;
    if (arr.max_depth)
        j["max_depth"] = *arr.max_depth;
    return j;
}

charp::CurveFamily make_family(std::string const & name, int p, std::optional<int> h)
{
    auto kind = charp::parse_family(name);
    if (kind == charp::FamilyKind::tango_plane) {
        if (h)
            throw InputError("the plane family takes no h");
        return charp::CurveFamily::tango_plane(p);
    }
    if (!h)
        throw InputError("family " + name + " needs h");
    if (kind == charp::FamilyKind::hyperelliptic)
        return charp::CurveFamily::hyperelliptic(p, *h);
    return charp::CurveFamily::artin_schreier(p, *h);
}

namespace {

charp::CurveFamily family_fields(Reader & r)
{
    std::string name = r.string("family");
    int p = to_int(r.integer("p"), "p");
    std::optional<int> h;
    if (auto v = r.opt_integer("h"))
        h = to_int(*v, "h");
    return make_family(name, p, h);
}

}  // namespace

TangoRequest parse_tango(json const & doc)
{
    require_type(doc, "tango");
    Reader r(doc, "tango");
    read_envelope(r);
    TangoRequest t{family_fields(r), r.opt_integer("precision")};
    r.finish();
    return t;
}

ConstructRequest parse_construct(json const & doc)
{
    require_type(doc, "construct");
    Reader r(doc, "construct");
    read_envelope(r);
    ConstructRequest c;
    c.kind = construct::parse_kind(r.string("kind"));
    c.family = family_fields(r);
    c.allow_asserted = r.opt_boolean("allow_asserted").value_or(false);
    r.finish();
    return c;
}

json package_to_json(construct::CounterexamplePackage const & pkg)
{
    json j = envelope("package");
    j["kind"] = construct::to_string(pkg.kind);
    json fam = {{"name", charp::to_string(pkg.cert.family.kind)}, {"p", pkg.cert.family.p}};
    if (pkg.cert.family.kind != charp::FamilyKind::tango_plane)
        fam["h"] = pkg.cert.family.h;
    j["family"] = fam;
    json t = {{"witness", charp::to_string(pkg.cert.witness)},
              {"genus", pkg.cert.genus},
              {"n", pkg.cert.n_f0},
              {"bound", pkg.cert.bound},
              {"equality", pkg.cert.equality},
              {"L_degree", pkg.cert.L_degree},
              {"provenance", charp::to_string(pkg.cert.provenance)}};
    if (pkg.cert.v_inf)
        t["v_inf"] = *pkg.cert.v_inf;
    if (pkg.cert.star_condition)
        t["star_condition"] = *pkg.cert.star_condition;
    j["tango"] = t;
    j["model"] = {{"characteristic", pkg.p}, {"genus", pkg.g}, {"e", pkg.model->invariant_e()}};
    json cls = {{"E", rational_list_json(pkg.E.coeffs())},
                {"F", rational_list_json(pkg.F.coeffs())},
                {"C'", rational_list_json(pkg.C_prime.coeffs())},
                {"D", rational_list_json(pkg.D.coeffs())},
                {"H", rational_list_json(pkg.H.coeffs())}};
    if (pkg.M)
        cls["M"] = rational_list_json(pkg.M->coeffs());
    if (pkg.D_prime)
        cls["D'"] = rational_list_json(pkg.D_prime->coeffs());
    j["classes"] = cls;
    json b = json::array();
    for (auto const & c : pkg.boundary)
        b.push_back({{"name", c.name},
                     {"class", rational_list_json(c.curve.coeffs())},
                     {"coefficient", rational_to_json(c.coefficient)}});
    j["boundary"] = b;
    if (pkg.M_degree)
        j["M_degree"] = rational_to_json(*pkg.M_degree);
    j["assumptions"] = pkg.assumptions;
    return j;
}

construct::CounterexamplePackage parse_package(json const & doc)
{
    require_type(doc, "package");
    Reader r(doc, "package");
    read_envelope(r);
    construct::CounterexamplePackage pkg;
    pkg.kind = construct::parse_kind(r.string("kind"));

    Reader fr(r.raw("family"), "package.family");
    std::string fname = fr.string("name");
    int fp = to_int(fr.integer("p"), "package.family.p");
    std::optional<int> fh;
    if (auto v = fr.opt_integer("h"))
        fh = to_int(*v, "package.family.h");
    fr.finish();
    pkg.cert.family = make_family(fname, fp, fh);

    Reader tr(r.raw("tango"), "package.tango");
    std::string witness = tr.string("witness");
    bool found = false;
    for (auto w : {charp::Witness::y_over_xp, charp::Witness::y, charp::Witness::x, charp::Witness::x0_over_x1})
        if (charp::to_string(w) == witness) {
            pkg.cert.witness = w;
            found = true;
        }
    if (!found)
        throw InputError("package.tango.witness: unknown witness '" + witness + "'");
    pkg.cert.genus = to_int(tr.integer("genus"), "package.tango.genus");
    pkg.cert.n_f0 = tr.integer("n");
    pkg.cert.bound = tr.integer("bound");
    pkg.cert.equality = tr.boolean("equality");
    pkg.cert.L_degree = tr.integer("L_degree");
    std::string prov = tr.string("provenance");
    if (prov == "computed")
        pkg.cert.provenance = charp::Provenance::computed;
    else if (prov == "paper-asserted")
        pkg.cert.provenance = charp::Provenance::asserted;
    else
        throw InputError("package.tango.provenance: unknown value '" + prov + "'");
    pkg.cert.v_inf = tr.opt_integer("v_inf");
    pkg.cert.star_condition = tr.opt_boolean("star_condition");
    tr.finish();

    Reader mr(r.raw("model"), "package.model");
    pkg.p = to_int(mr.integer("characteristic"), "package.model.characteristic");
    pkg.g = to_int(mr.integer("genus"), "package.model.genus");
    int e = to_int(mr.integer("e"), "package.model.e");
    mr.finish();
    if (pkg.p != pkg.cert.family.p)
        throw InputError("package: model characteristic differs from the family");
    pkg.n = -e;
    pkg.model = lattice::SurfaceModel::ruled(pkg.p, pkg.g, e);

    Reader cr(r.raw("classes"), "package.classes");
    pkg.E = class_from_json(cr.raw("E"), pkg.model, "package.classes.E");
    pkg.F = class_from_json(cr.raw("F"), pkg.model, "package.classes.F");
    pkg.C_prime = class_from_json(cr.raw("C'"), pkg.model, "package.classes.C'");
    pkg.D = class_from_json(cr.raw("D"), pkg.model, "package.classes.D");
    pkg.H = class_from_json(cr.raw("H"), pkg.model, "package.classes.H");
    if (cr.has("M"))
        pkg.M = class_from_json(cr.raw("M"), pkg.model, "package.classes.M");
    if (cr.has("D'"))
        pkg.D_prime = class_from_json(cr.raw("D'"), pkg.model, "package.classes.D'");
    cr.finish();

    json const & b = r.array("boundary");
    for (std::size_t i = 0; i < b.size(); ++i) {
        Reader br(b[i], "package.boundary[" + std::to_string(i) + "]");
        construct::WeightedCurve w;
        w.name = br.string("name");
        w.curve = class_from_json(br.raw("class"), pkg.model, br.where() + ".class");
        w.coefficient = br.rational("coefficient");
        br.finish();
        pkg.boundary.push_back(std::move(w));
    }
    if (r.has("M_degree"))
        pkg.M_degree = r.rational("M_degree");
    for (auto const & a : r.array("assumptions")) {
        if (!a.is_string())
            throw InputError("package.assumptions: expected strings");
        pkg.assumptions.push_back(a.get<std::string>());
    }
    r.finish();
    if (pkg.kind == construct::PackageKind::kollar && (!pkg.M || !pkg.M_degree))
        throw InputError("Kollar package needs M and M_degree");
    if (pkg.kind == construct::PackageKind::semipos && !pkg.D_prime)
        throw InputError("semipositivity package needs D'");
    return pkg;
}

SweepDocument parse_sweep(json const & doc)
{
    require_type(doc, "sweep");
    Reader r(doc, "sweep");
    read_envelope(r);
    SweepDocument s;
    auto & q = s.request;
    q.p = to_int(r.integer("p"), "sweep.p");
    q.g = to_int(r.integer("g"), "sweep.g");
    q.e = to_int(r.integer("e"), "sweep.e");
    Reader br(r.raw("boundary"), "sweep.boundary");
    auto cls = rational_list(br.raw("class"), "sweep.boundary.class");
    if (cls.size() != 2)
        throw InputError("sweep.boundary.class: expected [x, y]");
    q.x = cls[0];
    q.y = cls[1];
    q.c = br.rational("coefficient");
    br.finish();
    auto range = [&](std::string const & key, long & lo, long & hi) {
        json const & a = r.array(key);
        if (a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw InputError("sweep." + key + ": expected [min, max] integers");
        lo = a[0].get<long>();
        hi = a[1].get<long>();
    };
    range("a", q.a_min, q.a_max);
    range("b", q.b_min, q.b_max);
    if (auto j = r.opt_integer("jobs"))
        s.jobs = to_int(*j, "sweep.jobs");
    r.finish();
    sweep::validate(q);
    return s;
}

json sweep_to_json(sweep::SweepRequest const & q)
{
    json j = envelope("sweep");
    j["p"] = q.p;
    j["g"] = q.g;
    j["e"] = q.e;
    j["boundary"] = {{"class", {rational_to_json(q.x), rational_to_json(q.y)}},
                     {"coefficient", rational_to_json(q.c)}};
    j["a"] = {q.a_min, q.a_max};
    j["b"] = {q.b_min, q.b_max};
    return j;
}

}  // namespace svlab::io

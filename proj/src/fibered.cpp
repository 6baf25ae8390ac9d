#include "svlab/fibered.hpp"

#include <algorithm>
#include <sstream>

#include "svlab/errors.hpp"

namespace svlab::nonvanish {

FiberTree FiberTree::smooth(int d_degree)
{
    FiberTree t;
    t.components.push_back({0, 1, -2, d_degree});
    t.meets.assign(1, std::vector<int>(1, 0));
    return t;
}

FiberTree FiberTree::from_edges(std::vector<FiberComponent> components,
                                std::vector<std::pair<std::size_t, std::size_t>> const & edges)
{
    FiberTree t;
    std::size_t const n = components.size();
    t.components = std::move(components);
    t.meets.assign(n, std::vector<int>(n, 0));
    for (auto [i, j] : edges) {
        if (i >= n || j >= n || i == j)
            throw InputError("bad fiber edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        t.meets[i][j] += 1;
        t.meets[j][i] += 1;
    }
    return t;
}

long FiberTree::dot_fiber(std::size_t i) const
{
    long s = 0;
    for (std::size_t j = 0; j < size(); ++j) {
        long lij = i == j ? components[i].self_intersection : meets[i][j];
        s += static_cast<long>(components[j].multiplicity) * lij;
    }
    return s;
}

long FiberTree::fiber_square() const
{
    long s = 0;
    for (std::size_t i = 0; i < size(); ++i)
        s += components[i].multiplicity * dot_fiber(i);
    return s;
}

long FiberTree::k_dot_fiber() const
{
    long s = 0;
    for (auto const & c : components)
        s += static_cast<long>(c.multiplicity) * c.k_degree;
    return s;
}

long FiberTree::d_dot_fiber() const
{
    long s = 0;
    for (auto const & c : components)
        s += static_cast<long>(c.multiplicity) * c.d_degree;
    return s;
}

bool FiberTree::is_minimal() const
{
    return size() == 1 && components[0].self_intersection == 0 && components[0].multiplicity == 1;
}

std::vector<std::size_t> FiberTree::contractible() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (components[i].self_intersection == -1 && components[i].d_degree == 0)
            out.push_back(i);
    return out;
}

std::string FiberTree::shape() const
{
    std::vector<std::string> parts;
    for (auto const & c : components) {
        std::ostringstream os;
        os << "(" << c.self_intersection << "," << c.multiplicity << "," << c.k_degree << "," << c.d_degree << ")";
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (auto const & p : parts)
        s += p;
    return s;
}

void validate(FiberTree const & fiber)
{
    if (fiber.components.empty())
        throw InputError("empty fiber");
    if (fiber.meets.size() != fiber.size())
        throw InputError("fiber intersection matrix has wrong size");
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        auto const & c = fiber.components[i];
        if (c.multiplicity < 1)
            throw InputError("fiber multiplicities must be positive");
        if (c.d_degree < 0)
            throw InputError("D-degree on a fiber component must be nonnegative (D nef)");
        if (c.k_degree + c.self_intersection != -2)
            throw InputError("fiber component " + std::to_string(i) + " violates adjunction for a rational curve");
        if (fiber.meets[i].size() != fiber.size() || fiber.meets[i][i] != 0)
            throw InputError("malformed fiber intersection matrix");
        for (std::size_t j = 0; j < fiber.size(); ++j)
            if (fiber.meets[i][j] != fiber.meets[j][i] || fiber.meets[i][j] < 0)
                throw InputError("fiber intersection matrix must be symmetric and nonnegative");
    }
    for (std::size_t i = 0; i < fiber.size(); ++i)
        if (fiber.dot_fiber(i) != 0)
            throw InputError("component " + std::to_string(i) + " has l.F = " + std::to_string(fiber.dot_fiber(i)) +
                             " (fiber data violates F^2 = 0)");
    if (fiber.k_dot_fiber() != -2)
        throw InputError("fiber has K.F = " + std::to_string(fiber.k_dot_fiber()) + ", expected -2");
}

void validate(FiberedModel const & model)
{
    if (model.fibers.empty())
        throw InputError("fibered model without fibers");
    long const df = model.fibers.front().d_dot_fiber();
    for (auto const & f : model.fibers) {
        validate(f);
        if (f.d_dot_fiber() != df)
            throw InputError("D.F differs between fibers");
    }
}

FiberTree contract_component(FiberTree const & fiber, std::size_t l)
{
    auto const & cl = fiber.components.at(l);
    if (cl.self_intersection != -1 || cl.k_degree != -1)
        throw InputError("only (-1)-curves can be contracted");
    std::size_t const n = fiber.size();
    FiberTree out;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != l)
            keep.push_back(i);
    out.components.reserve(keep.size());
    out.meets.assign(keep.size(), std::vector<int>(keep.size(), 0));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        FiberComponent c = fiber.components[keep[a]];
        int const m = fiber.meets[keep[a]][l];
        /* g^*C_Y = C + (C.l) l */
        c.self_intersection += m * m;
        c.k_degree -= m;
        c.d_degree += m * cl.d_degree;
        out.components.push_back(c);
        for (std::size_t b = 0; b < keep.size(); ++b)
            if (a != b)
                out.meets[a][b] = fiber.meets[keep[a]][keep[b]] + m * fiber.meets[keep[b]][l];
    }
    return out;
}

MinimalityAudit minimality_audit(FiberTree const & fiber)
{
    MinimalityAudit audit;
    std::size_t l0 = fiber.size();
    for (std::size_t i = 0; i < fiber.size(); ++i)
        if (fiber.components[i].self_intersection == -1) {
            l0 = i;
            break;
        }
    if (l0 == fiber.size()) {
        audit.lines.push_back("no (-1)-component in fiber");
        return audit;
    }
    auto const & c0 = fiber.components[l0];
    std::ostringstream os;
    os << "(-1)-component l0 = #" << l0 << ": D.l0 = " << c0.d_degree << ", K.l0 = " << c0.k_degree;
    audit.lines.push_back(os.str());
    long bound = static_cast<long>(c0.multiplicity) * c0.k_degree;
    bool premises = c0.d_degree == 1 && c0.multiplicity == 1;
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        if (i == l0)
            continue;
        auto const & c = fiber.components[i];
        /* D-trivial and not a (-1)-curve, so l^2 <= -2 and K.l >= 0. */
        if (c.d_degree != 0 || c.self_intersection == -1)
            premises = false;
        long kl = std::max(0, c.k_degree);
        bound += static_cast<long>(c.multiplicity) * kl;
        std::ostringstream li;
        li << "l" << i << ": D.l = " << c.d_degree << ", K.l = " << c.k_degree << " >= 0";
        audit.lines.push_back(li.str());
    }
    audit.k_lower_bound = bound;
    audit.contradiction = premises && bound > -2;
    std::ostringstream fin;
    fin << "K.F0 >= " << bound << (audit.contradiction ? " > -2: contradiction, no such fiber survives"
                                                        : ": premises of the audit not met");
    audit.lines.push_back(fin.str());
    return audit;
}

ReductionTrace reduce_fibers(FiberedModel const & model, ContractionChooser const & choose)
{
    validate(model);
    ReductionTrace trace;
    trace.result = model;
    trace.d_dot_fiber = model.fibers.front().d_dot_fiber();
    if (trace.d_dot_fiber > 1)
        throw InputError("fiber reduction needs D.F <= 1, got " + std::to_string(trace.d_dot_fiber));

    for (;;) {
        std::vector<FiberContraction> eligible;
        for (std::size_t f = 0; f < trace.result.fibers.size(); ++f)
            for (std::size_t i : trace.result.fibers[f].contractible())
                eligible.push_back({f, i, 0});
        if (eligible.empty())
            break;
        std::size_t pick = choose ? choose(eligible) : 0;
        FiberContraction step = eligible.at(pick);
        auto & fiber = trace.result.fibers[step.fiber];
        fiber = contract_component(fiber, step.component);
        validate(fiber);
        trace.steps.push_back(step);
    }

    for (std::size_t f = 0; f < trace.result.fibers.size(); ++f) {
        auto const & fiber = trace.result.fibers[f];
        if (fiber.is_minimal()) {
            std::ostringstream os;
            os << "fiber " << f << ": irreducible 0-curve";
            if (trace.d_dot_fiber == 1)
                os << "; any remaining (-1)-curve would carry D.l0 = 1 and force K.F0 >= -1";
            trace.audit.push_back(os.str());
            continue;
        }
        auto audit = minimality_audit(fiber);
        std::string detail;
        for (auto & line : audit.lines)
            detail += "; " + line;
        throw CheckFailure("fiber " + std::to_string(f) +
                           " is not minimal after all D-trivial (-1)-curves were contracted" + detail);
    }
    trace.relatively_minimal = true;
    return trace;
}

FiberTree random_fiber(std::mt19937_64 & rng, int blowups, int d_dot_fiber)
{
    FiberTree t = FiberTree::smooth(d_dot_fiber);
    for (int step = 0; step < blowups; ++step) {
        std::size_t const n = t.size();
        std::vector<std::pair<std::size_t, std::size_t>> nodes;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (t.meets[i][j] == 1)
                    nodes.emplace_back(i, j);
        bool satellite = !nodes.empty() && std::uniform_int_distribution<int>(0, 2)(rng) == 0;

        FiberComponent fresh{-1, 0, -1, 0};
        std::vector<int> row(n + 1, 0);
        for (auto & r : t.meets)
            r.push_back(0);
        if (satellite) {
            auto [i, j] = nodes[std::uniform_int_distribution<std::size_t>(0, nodes.size() - 1)(rng)];
            fresh.multiplicity = t.components[i].multiplicity + t.components[j].multiplicity;
            for (std::size_t c : {i, j}) {
                t.components[c].self_intersection -= 1;
                t.components[c].k_degree += 1;
            }
            t.meets[i][j] = t.meets[j][i] = 0;
            row[i] = row[j] = 1;
        } else {
            std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
            fresh.multiplicity = t.components[i].multiplicity;
            t.components[i].self_intersection -= 1;
            t.components[i].k_degree += 1;
            /* Move the D-degree onto the new curve when the point is a
             * base point of the pencil on a reduced component. */
            if (t.components[i].d_degree > 0 && t.components[i].multiplicity == 1 &&
                std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
                t.components[i].d_degree -= 1;
                fresh.d_degree = 1;
            }
            row[i] = 1;
        }
        t.components.push_back(fresh);
        t.meets.push_back(row);
        for (std::size_t c = 0; c < n; ++c)
            t.meets[c][n] = row[c];
    }
    return t;
}

}  // namespace svlab::nonvanish

#include "svlab/klt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "svlab/errors.hpp"

namespace svlab::klt {

namespace {

constexpr int depth_cap = 256;

std::string exceptional_name(std::string const & label)
{
    return "E[" + label + "]";
}

int forest_depth(std::vector<ClusterNode> const & nodes, int level)
{
    if (level > depth_cap)
        throw InputError("cluster forest deeper than " + std::to_string(depth_cap));
    int d = 0;
    for (auto const & n : nodes)
        d = std::max(d, 1 + forest_depth(n.children, level + 1));
    return d;
}

/* Ids through the node, including the parent's exceptional curve. */
std::vector<std::string> incident_ids(ClusterNode const & node, std::optional<std::string> const & parent_exc)
{
    std::vector<std::string> ids = node.branches;
    if (parent_exc && std::find(ids.begin(), ids.end(), *parent_exc) == ids.end())
        ids.push_back(*parent_exc);
    return ids;
}

struct Walker {
    std::map<std::string, Rational> coeff;
    std::set<std::string> labels;
    BlowupTrace trace;

    void visit(ClusterNode const & node, std::set<std::string> const & through_parent,
               std::optional<std::string> const & parent_exc)
    {
        if (node.label.empty())
            throw InputError("cluster node without a label");
        if (!labels.insert(node.label).second)
            throw InputError("duplicate cluster label " + node.label);
        std::set<std::string> seen;
        for (auto const & id : node.branches) {
            if (!seen.insert(id).second)
                throw InputError("branch " + id + " listed twice at " + node.label);
            if (!coeff.count(id))
                throw InputError("unknown branch " + id + " at " + node.label);
            if (parent_exc && !through_parent.count(id) && id != *parent_exc)
                throw InputError("branch " + id + " passes through " + node.label +
                                 " but not through its parent");
        }
        auto ids = incident_ids(node, parent_exc);
        if (ids.size() < 2)
            throw InputError("cluster " + node.label + " has fewer than two incident branches");

        bool transverse = ids.size() == 2 && node.children.empty();
        if (transverse)
            return;
        std::vector<Rational> incident;
        for (auto const & id : ids)
            incident.push_back(coeff.at(id));
        BlowupRecord r = blowup_step(node.label, incident);
        if (coeff.count(r.exceptional_id))
            throw InputError("branch id " + r.exceptional_id + " collides with an exceptional curve");
        coeff[r.exceptional_id] = r.coefficient;
        trace.records.push_back(r);

        std::set<std::string> through(ids.begin(), ids.end());
        for (auto const & child : node.children)
            visit(child, through, r.exceptional_id);
    }
};

Walker walk(ClusterArrangement const & arr)
{
    Walker w;
    for (auto const & b : arr.branches) {
        if (b.id.empty())
            throw InputError("branch without an id");
        if (b.kind != BranchKind::original)
            throw InputError("input branches must be original curves");
        if (b.coefficient < 0)
            throw InputError("boundary coefficient of " + b.id + " is negative");
        if (!w.coeff.emplace(b.id, b.coefficient).second)
            throw InputError("duplicate branch id " + b.id);
    }
    int depth = forest_depth(arr.clusters, 0);
    if (arr.max_depth && depth > *arr.max_depth)
        throw InputError("cluster forest depth " + std::to_string(depth) + " exceeds the declared bound " +
                         std::to_string(*arr.max_depth));
    for (auto const & root : arr.clusters)
        w.visit(root, {}, std::nullopt);
    return w;
}

}  // namespace

BlowupRecord blowup_step(std::string const & node, std::vector<Rational> const & incident)
{
    BlowupRecord r;
    r.node = node;
    r.exceptional_id = exceptional_name(node);
    r.incident_sum = 0;
    for (auto const & c : incident)
        r.incident_sum += c;
    r.coefficient = r.incident_sum - 1;
    r.discrepancy = 1 - r.incident_sum;
    return r;
}

void validate(ClusterArrangement const & arr)
{
    walk(arr);
}

KltResult is_klt(ClusterArrangement const & arr)
{
    Walker w = walk(arr);
    KltResult out;
    out.trace = std::move(w.trace);
    for (auto const & b : arr.branches)
        if (b.coefficient >= 1) {
            out.reason = "coefficient of " + b.id + " is " + to_string(b.coefficient) + " >= 1";
            return out;
        }
    for (auto const & r : out.trace.records)
        if (r.coefficient >= 1) {
            out.reason = "exceptional curve over " + r.node + " has discrepancy " + to_string(r.discrepancy) +
                         " <= -1";
            return out;
        }
    out.klt = true;
    out.reason = "every discrepancy > -1 on the log resolution";
    return out;
}

bool snc_applies(ClusterArrangement const & arr)
{
    return std::all_of(arr.clusters.begin(), arr.clusters.end(),
                       [](ClusterNode const & n) { return n.branches.size() == 2 && n.children.empty(); });
}

bool snc_klt_shortcut(ClusterArrangement const & arr)
{
    validate(arr);
    if (!snc_applies(arr))
        return false;
    return std::all_of(arr.branches.begin(), arr.branches.end(),
                       [](WeightedBranch const & b) { return b.coefficient < 1; });
}

}  // namespace svlab::klt

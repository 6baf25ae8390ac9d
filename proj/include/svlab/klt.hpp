#ifndef SVLAB_KLT_HPP
#define SVLAB_KLT_HPP

#include <optional>
#include <string>
#include <vector>

#include "svlab/rational.hpp"

namespace svlab::klt {

enum class BranchKind { original, exceptional };

/* A smooth curve branch of the boundary with its coefficient. */
struct WeightedBranch {
    std::string id;
    Rational coefficient;
    BranchKind kind = BranchKind::original;
};

/*
 * A point of the arrangement, possibly infinitely near. branches lists the
 * ids passing through the point; a child lies on the exceptional curve of
 * its parent, which is therefore incident to it without being listed. A
 * child may only list branches that pass through its parent (or exceptional
 * curves of earlier nodes that do).
 */
struct ClusterNode {
    std::string label;
    std::vector<std::string> branches;
    std::vector<ClusterNode> children;
};

struct ClusterArrangement {
    std::vector<WeightedBranch> branches;
    std::vector<ClusterNode> clusters;
    std::optional<int> max_depth;
};

struct BlowupRecord {
    std::string node;
    std::string exceptional_id;
    Rational incident_sum;
    Rational coefficient;   // incident_sum - 1
    Rational discrepancy;   // 1 - incident_sum
};

struct BlowupTrace {
    std::vector<BlowupRecord> records;
};

/* Coefficient transport under one point blow-up of a smooth surface. */
BlowupRecord blowup_step(std::string const & node, std::vector<Rational> const & incident);

struct KltResult {
    bool klt = false;
    BlowupTrace trace;
    std::string reason;
};

/* Throws InputError for malformed forests, unknown or duplicate ids,
 * negative coefficients and forests deeper than the declared bound. */
void validate(ClusterArrangement const & arr);

KltResult is_klt(ClusterArrangement const & arr);

/* All clusters are transverse pairs without children: the support is
 * already simple normal crossing. */
bool snc_applies(ClusterArrangement const & arr);
/* True when the SNC shortcut applies and every coefficient is below 1. */
bool snc_klt_shortcut(ClusterArrangement const & arr);

}  // namespace svlab::klt

#endif

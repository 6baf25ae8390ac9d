#ifndef SVLAB_FIBERED_HPP
#define SVLAB_FIBERED_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace svlab::nonvanish {

/* A component of a (possibly reducible) fiber. All components are smooth
 * rational curves, so K.l = -2 - l^2. */
struct FiberComponent {
    int self_intersection = 0;
    int multiplicity = 1;
    int k_degree = -2;
    int d_degree = 0;

    bool operator==(FiberComponent const &) const = default;
};

/* Components plus the symmetric matrix of mutual intersection numbers. */
struct FiberTree {
    std::vector<FiberComponent> components;
    std::vector<std::vector<int>> meets;

    static FiberTree smooth(int d_degree);
    static FiberTree from_edges(std::vector<FiberComponent> components,
                                std::vector<std::pair<std::size_t, std::size_t>> const & edges);

    std::size_t size() const { return components.size(); }
    /* l_i . F computed from the components. */
    long dot_fiber(std::size_t i) const;
    long fiber_square() const;
    long k_dot_fiber() const;
    long d_dot_fiber() const;
    bool is_minimal() const;
    /* Indices of (-1)-components with D.l = 0. */
    std::vector<std::size_t> contractible() const;
    /* Canonical form: components sorted, used to compare outcomes. */
    std::string shape() const;
};

struct FiberedModel {
    int base_genus = 0;
    std::vector<FiberTree> fibers;
};

/* Throws InputError if some fiber has l_i.F != 0, K.F != -2, a component
 * violating adjunction, or if D.F differs between fibers. */
void validate(FiberedModel const & model);
void validate(FiberTree const & fiber);

/* Blow-down of the (-1)-component l of one fiber. */
struct FiberContraction {
    std::size_t fiber = 0;
    std::size_t component = 0;
    int d_degree = 0;
};

FiberTree contract_component(FiberTree const & fiber, std::size_t l);

/* Audit of a fiber that still contains a (-1)-curve l0 at the end of the
 * D.F = 1 reduction: every other component is D-trivial and not a
 * (-1)-curve, hence K-nonnegative, so K.F >= -1. */
struct MinimalityAudit {
    bool contradiction = false;
    long k_lower_bound = 0;
    std::vector<std::string> lines;
};

MinimalityAudit minimality_audit(FiberTree const & fiber);

struct ReductionTrace {
    std::vector<FiberContraction> steps;
    std::vector<std::string> audit;
    FiberedModel result;
    long d_dot_fiber = 0;
    bool relatively_minimal = false;
};

/* Contracts (-1)-components with D.l = 0 until none remains. The chooser
 * receives the eligible (fiber, component) pairs and returns the position
 * to contract; by default the lowest-indexed pair is used. */
using ContractionChooser = std::function<std::size_t(std::vector<FiberContraction> const &)>;

ReductionTrace reduce_fibers(FiberedModel const & model, ContractionChooser const & choose = {});

/* Random fiber obtained from a smooth fiber by a sequence of point
 * blow-ups, with D.F in {0, 1}. Used by the test corpora. */
FiberTree random_fiber(std::mt19937_64 & rng, int blowups, int d_dot_fiber);

}  // namespace svlab::nonvanish

#endif

#ifndef MOTZKIN_BOUNDED_HPP
#define MOTZKIN_BOUNDED_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "motzkin/kernel.hpp"

namespace motzkin {

struct DetSequence {
    PatternPair pair;
    std::vector<Poly> polys;  // D_0 .. D_K
};

// D_0..D_K from the two-term recursion, as exact polynomials.
DetSequence det_sequence(const CatalogEntry& entry, int K);

struct BinetReport {
    std::vector<bool> pass;  // one flag per k = 0..K
    bool all() const noexcept;
    // First failing k, or -1.
    int first_failure() const noexcept;
};

// Compares each D_k with scale^{k+1} (r1^{k+1} - r2^{k+1}) / W through order N.
BinetReport binet_check(const CatalogEntry& entry, int K, std::size_t N);

// tau_K = num / (den - mult * tau_{K-1}), tau_0 = 0, as a series of order N.
Series tau_iterate(const CatalogEntry& entry, int K, std::size_t N);

// tau_K == tau_scale * D_{K-1} / D_K through order N.
bool tau_bridge_check(const CatalogEntry& entry, int K, std::size_t N);

const BoundedForm& bounded_form(const CatalogEntry& entry, BoundedQuantity q);

// q_{K+1} = c0 + c1 / (d - e * tau_K) with K = K_plus - 1.
Series eval_bounded(const CatalogEntry& entry, BoundedQuantity q, int K_plus, std::size_t N);

// First unknown of the (K+1)-dimensional band system, eliminated from the
// bottom row upwards so that every interior pivot is a unit.
Series solve_banded(const CatalogEntry& entry, BoundedQuantity q, int K, std::size_t N);

// The canonical bounded count: capped-automaton DP for the quantity's layer
// (sigma = all excursions) with height cap `cap`.
std::vector<Integer> capped_layer_counts(const CatalogEntry& entry, BoundedQuantity q, int cap, int n_max);

// Cap whose DP count q_{K_plus} reproduces, or nullopt when the printed form
// is not a capped count.
std::optional<int> cap_for(const CatalogEntry& entry, BoundedQuantity q, int K_plus);

// For each n < N, the smallest cap K whose excursion count equals the
// unbounded count at n.
std::vector<std::pair<int, int>> convergence_profile(const CatalogEntry& entry, std::size_t N);

// The alternative aggregation f^{[K+1]} + g^{[K+1]} + h^{[K]}: returns ending
// in the f and g layers with K+1 height levels (cap K) plus returns ending in
// the h layer with K levels (cap K-1), next to the canonical sigma count at
// cap K. Report-only; not a solver. Requires K >= 1.
struct AggregationReport {
    std::vector<Integer> canonical;
    std::vector<Integer> alternative;
    bool agree() const { return canonical == alternative; }
};
AggregationReport aggregation_compare(const CatalogEntry& entry, int K, int n_max);

}  // namespace motzkin

#endif  // MOTZKIN_BOUNDED_HPP

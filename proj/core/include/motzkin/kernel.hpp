#ifndef MOTZKIN_KERNEL_HPP
#define MOTZKIN_KERNEL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzkin/algebra.hpp"
#include "motzkin/automaton.hpp"

namespace motzkin {

enum class Trust { Asserted, Discrepant };
std::string_view trust_name(Trust t) noexcept;

// Closed-form quantities of the unbounded problem.
enum class Quantity { S0, S1, F0, F1, G0, G1, H0, H1 };
std::string_view quantity_name(Quantity q) noexcept;
Quantity parse_quantity(std::string_view name);
inline constexpr Quantity kAllQuantities[] = {Quantity::S0, Quantity::S1, Quantity::F0, Quantity::F1,
                                              Quantity::G0, Quantity::G1, Quantity::H0, Quantity::H1};

// Bounded-height layer quantities: total returns (sigma) and returns that end
// in the layer carried by f (phi), g (gamma) or h (eta).
enum class BoundedQuantity { Sigma, Phi, Gamma, Eta };
std::string_view bounded_name(BoundedQuantity q) noexcept;
BoundedQuantity parse_bounded(std::string_view name);
inline constexpr BoundedQuantity kAllBounded[] = {BoundedQuantity::Sigma, BoundedQuantity::Phi,
                                                  BoundedQuantity::Gamma, BoundedQuantity::Eta};

// (n0 + n1 r1) / (d0 + d1 r1): every printed closed form reduces to this
// shape once r1^2 is eliminated with the kernel relation.
struct Template {
    Poly n0, n1, d0, d1;

    // r1 must have at least `order + budget` coefficients; the result has
    // exactly `order` coefficients.
    Series eval(const Series& r1, std::size_t order) const;
};

struct BandSystem {
    Poly a00, a01;        // irregular first row
    Poly b0, b1;          // right-hand side (remaining entries are zero)
    Poly sub, diag, sup;  // constant band of rows 1..K
};

// q_{K+1} = c0 + c1 / (d - e * tau_K)
struct BoundedForm {
    RationalFunc c0, c1;
    Poly d, e;
    std::optional<std::string> base_printed;  // q_0 as printed, documentation only
    std::optional<BandSystem> system;
    // When set, q_{K+1} equals the capped-automaton count at cap K + offset.
    std::optional<int> cap_offset;
    Trust trust = Trust::Asserted;
    bool derived_from_system = false;
};

struct Fixture {
    enum class Kind { Excursion, Meander };
    PatternPair pair;
    Kind kind;
    std::optional<std::string> oeis_id;
    int oeis_shift = 0;  // fixture[n] == oeis[n + shift]
    std::vector<Integer> prefix;
    Trust trust = Trust::Asserted;
    std::string note;
};
std::string_view fixture_kind_name(Fixture::Kind k) noexcept;

struct CatalogEntry {
    PatternPair pair;
    Poly kernel_a, kernel_b, kernel_c;
    Poly w_squared;
    Poly r1_num_const, r1_den;  // r1 = (r1_num_const - W) / r1_den
    std::map<Quantity, Template> closed_forms;
    Trust closed_forms_trust = Trust::Asserted;

    // s_j = sum_k alpha_k beta_k^j for j >= end_j_min; explicit below that.
    std::vector<std::pair<Template, Template>> end_terms;
    int end_j_min = 0;
    std::vector<Template> end_explicit;

    Poly det_p, det_q, det_D0, det_D1;  // D_K = p D_{K-1} - q D_{K-2}
    Poly binet_scale;
    int binet_sign = 1;  // D_k W = sign * scale^{k+1} (r1^{k+1} - r2^{k+1})
    // tau_K = num / (den - mult * tau_{K-1}), tau_0 = 0; tau_K D_K = scale D_{K-1}
    Poly tau_num, tau_den, tau_mult;
    RationalFunc tau_scale;

    std::map<BoundedQuantity, BoundedForm> bounded;
    std::map<BoundedQuantity, Layer> layers;  // phi/gamma/eta -> automaton layer
    BoundedQuantity start_quantity = BoundedQuantity::Gamma;  // holds the empty path
    std::size_t valuation_budget = 0;
    std::vector<Fixture> fixtures;
    std::vector<std::string> notes;

};

class Catalog {
public:
    static const Catalog& builtin();
    static Catalog from_json(std::string_view text);

    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    const std::vector<PatternPair>& degenerate() const noexcept { return degenerate_; }
    bool is_degenerate(const PatternPair& pair) const;
    const CatalogEntry* find(const PatternPair& pair) const;
    // Throws NoClosedForm for degenerate or uncatalogued pairs.
    const CatalogEntry& lookup(const PatternPair& pair) const;

private:
    std::vector<CatalogEntry> entries_;
    std::vector<PatternPair> degenerate_;
};

// The JSON document compiled into the library.
std::string_view builtin_catalog_json();

const CatalogEntry& catalog_lookup(const PatternPair& pair);

// r2 has negative valuation whenever r1_den does, so it is returned as
// z^{-shift} * r2_scaled.
struct KernelRoots {
    Series r1;
    Series r2_scaled;
    std::size_t r2_shift = 0;
    Series w;
};

KernelRoots kernel_roots(const CatalogEntry& entry, std::size_t order);

// Closed-form evaluation; S0/S1 are checked for integrality.
Series eval_unbounded(const CatalogEntry& entry, Quantity q, std::size_t order);
// s_j, the generating function of meanders ending at level j.
Series eval_end_level(const CatalogEntry& entry, int j, std::size_t order);

// Accept predicate and automaton layer for a closed-form quantity
// (u = 0 means level 0, u = 1 means any level).
struct LayerSelector {
    std::optional<Layer> layer;  // nullopt = all layers (S)
    bool any_level = false;
    bool includes_start = false;
};
LayerSelector selector_for(const CatalogEntry& entry, Quantity q);

// The brute-force counterpart of a closed-form quantity: a(0..n_max) from the
// unbounded automaton with the selector's accept predicate.
std::vector<Integer> brute_force_counts(const CatalogEntry& entry, Quantity q, int n_max);

}  // namespace motzkin

#endif  // MOTZKIN_KERNEL_HPP

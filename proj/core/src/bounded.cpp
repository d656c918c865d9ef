#include "motzkin/bounded.hpp"

#include <algorithm>

namespace motzkin {

namespace {

// Coefficient slack used before the exact valuation of a denominator is known.
constexpr std::size_t kSlack = 8;

Series poly_series(const Poly& p, std::size_t order) { return Series::from_poly(p, order); }

// a / b where b may have positive valuation, producing at least `order`
// coefficients. `make` builds (a, b) at a given working order.
template <class Make>
Series divide_to_order(Make make, std::size_t order, ErrorCode on_failure) {
    std::size_t work = order + kSlack;
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto [a, b] = make(work);
        const std::size_t vb = b.valuation();
        if (vb == b.order()) break;  // divisor vanishes through the working order
        if (work >= order + vb) {
            try {
                return series_div_exact(a, b).truncated(order);
            } catch (const MotzkinError& e) {
                if (e.code() == ErrorCode::NotDivisible && on_failure != ErrorCode::NotDivisible)
                    throw MotzkinError(on_failure, std::string("final division: ") + e.what());
                throw;
            }
        }
        work = order + vb + kSlack;
    }
    throw MotzkinError(on_failure, "denominator vanishes through the working order");
}

}  // namespace

// ------------------------------------------------------------ determinants

DetSequence det_sequence(const CatalogEntry& entry, int K) {
    if (K < 0) throw MotzkinError(ErrorCode::InvalidArgument, "K must be nonnegative");
    DetSequence seq{entry.pair, {entry.det_D0}};
    if (K >= 1) seq.polys.push_back(entry.det_D1);
    for (int k = 2; k <= K; ++k) {
        const auto& d1 = seq.polys[static_cast<std::size_t>(k - 1)];
        const auto& d2 = seq.polys[static_cast<std::size_t>(k - 2)];
        seq.polys.push_back(entry.det_p * d1 - entry.det_q * d2);
    }
    return seq;
}

bool BinetReport::all() const noexcept { return first_failure() < 0; }

int BinetReport::first_failure() const noexcept {
    for (std::size_t k = 0; k < pass.size(); ++k)
        if (!pass[k]) return static_cast<int>(k);
    return -1;
}

BinetReport binet_check(const CatalogEntry& entry, int K, std::size_t N) {
    const DetSequence seq = det_sequence(entry, K);
    BinetReport report;
    // r_i = rho_i / Q with rho_1 = P - W and rho_2 = P + W, so
    // scale^{k+1}(r1^{k+1} - r2^{k+1}) / W = scale^{k+1}(rho1^{k+1} - rho2^{k+1}) / (Q^{k+1} W).
    for (int k = 0; k <= K; ++k) {
        const unsigned e = static_cast<unsigned>(k + 1);
        const Series binet = divide_to_order(
            [&](std::size_t work) {
                const Series w = series_sqrt(poly_series(entry.w_squared, work));
                const Series p = poly_series(entry.r1_num_const, work);
                const Series rho1 = p - w;
                const Series rho2 = p + w;
                const Series s = poly_series(entry.binet_scale, work).pow(e);
                const Series num =
                    Rational(entry.binet_sign) * (s * (rho1.pow(e) - rho2.pow(e)));
                const Series den = poly_series(entry.r1_den, work).pow(e) * w;
                return std::make_pair(num, den);
            },
            N, ErrorCode::NotDivisible);
        report.pass.push_back(binet == poly_series(seq.polys[static_cast<std::size_t>(k)], N));
    }
    return report;
}

// ------------------------------------------------------------------- tau

Series tau_iterate(const CatalogEntry& entry, int K, std::size_t N) {
    if (K < 0) throw MotzkinError(ErrorCode::InvalidArgument, "K must be nonnegative");
    const Series num = poly_series(entry.tau_num, N);
    const Series den = poly_series(entry.tau_den, N);
    const Series mult = poly_series(entry.tau_mult, N);
    Series tau(N);
    for (int k = 1; k <= K; ++k) tau = num * series_inv(den - mult * tau);
    return tau;
}

bool tau_bridge_check(const CatalogEntry& entry, int K, std::size_t N) {
    const Series tau = tau_iterate(entry, K, N);
    if (K == 0) return tau.is_zero();
    const DetSequence seq = det_sequence(entry, K);
    const Poly& dk = seq.polys[static_cast<std::size_t>(K)];
    const Poly& dk1 = seq.polys[static_cast<std::size_t>(K - 1)];
    const Series ratio = divide_to_order(
        [&](std::size_t work) {
            return std::make_pair(poly_series(entry.tau_scale.num * dk1, work),
                                  poly_series(entry.tau_scale.den * dk, work));
        },
        N, ErrorCode::NotDivisible);
    return ratio == tau;
}

// --------------------------------------------------------- layer quantities

const BoundedForm& bounded_form(const CatalogEntry& entry, BoundedQuantity q) {
    const auto it = entry.bounded.find(q);
    if (it == entry.bounded.end())
        throw MotzkinError(ErrorCode::NoClosedForm,
                           std::string(bounded_name(q)) + " is not catalogued for " + entry.pair.key());
    return it->second;
}

Series eval_bounded(const CatalogEntry& entry, BoundedQuantity q, int K_plus, std::size_t N) {
    if (K_plus < 1) throw MotzkinError(ErrorCode::InvalidArgument, "K_plus must be at least 1");
    const BoundedForm& f = bounded_form(entry, q);
    // c0 + c1/(d - e tau) as one fraction, so that poles of c0 cancel exactly:
    //   (c0n c1d (d - e tau) + c1n c0d) / (c0d c1d (d - e tau))
    return divide_to_order(
        [&](std::size_t work) {
            const Series tau = tau_iterate(entry, K_plus - 1, work);
            const Series m = poly_series(f.d, work) - poly_series(f.e, work) * tau;
            const Series num = poly_series(f.c0.num * f.c1.den, work) * m + poly_series(f.c1.num * f.c0.den, work);
            const Series den = poly_series(f.c0.den * f.c1.den, work) * m;
            return std::make_pair(num, den);
        },
        N, ErrorCode::NotDivisible);
}

Series solve_banded(const CatalogEntry& entry, BoundedQuantity q, int K, std::size_t N) {
    if (K < 0) throw MotzkinError(ErrorCode::InvalidArgument, "K must be nonnegative");
    const BoundedForm& f = bounded_form(entry, q);
    if (!f.system)
        throw MotzkinError(ErrorCode::NoClosedForm,
                           std::string(bounded_name(q)) + " has no matrix system for " + entry.pair.key());
    const BandSystem& s = *f.system;
    // Row i >= 1 reads sub x_{i-1} + diag x_i + sup x_{i+1} = b_i with
    // x_{K+1} = 0. Walking upwards, x_i = m_i x_{i-1} + n_i.
    return divide_to_order(
        [&](std::size_t work) {
            const Series sub = poly_series(s.sub, work);
            const Series diag = poly_series(s.diag, work);
            const Series sup = poly_series(s.sup, work);
            Series m(work), n(work);  // m_{K+1} = n_{K+1} = 0
            for (int i = K; i >= 1; --i) {
                const Series pivot = diag + sup * m;
                if (pivot[0] == 0)
                    throw MotzkinError(ErrorCode::SingularPivot,
                                       "row " + std::to_string(i) + " pivot is not a unit");
                const Series inv = series_inv(pivot);
                const Series rhs = (i == 1 ? poly_series(s.b1, work) : Series(work)) - sup * n;
                m = -(sub * inv);
                n = rhs * inv;
            }
            // Row 0: A00 x0 + A01 x1 = b0 (no x1 when K = 0).
            const Series a01 = K >= 1 ? poly_series(s.a01, work) : Series(work);
            const Series num = poly_series(s.b0, work) - a01 * n;
            const Series den = poly_series(s.a00, work) + a01 * m;
            return std::make_pair(num, den);
        },
        N, ErrorCode::SingularPivot);
}

std::vector<Integer> capped_layer_counts(const CatalogEntry& entry, BoundedQuantity q, int cap, int n_max) {
    if (cap < 0) return std::vector<Integer>(static_cast<std::size_t>(n_max) + 1, 0);
    const LayeredAutomaton a = build_automaton(entry.pair, cap);
    if (q == BoundedQuantity::Sigma) return count_paths(a, n_max, Accept::excursions());
    std::vector<Integer> c = count_paths(a, n_max, Accept::layer_end(entry.layers.at(q), 0));
    if (entry.start_quantity == q) c[0] += 1;
    return c;
}

std::optional<int> cap_for(const CatalogEntry& entry, BoundedQuantity q, int K_plus) {
    const BoundedForm& f = bounded_form(entry, q);
    if (!f.cap_offset) return std::nullopt;
    return K_plus - 1 + *f.cap_offset;
}

std::vector<std::pair<int, int>> convergence_profile(const CatalogEntry& entry, std::size_t N) {
    if (N == 0) throw MotzkinError(ErrorCode::InvalidArgument, "N must be positive");
    const int n_max = static_cast<int>(N) - 1;
    const auto full = count_paths(build_automaton(entry.pair, std::nullopt), n_max, Accept::excursions());
    // An excursion of length n has height at most n/2, so caps beyond that
    // never change anything.
    std::vector<std::vector<Integer>> by_cap;
    for (int K = 0; K <= n_max / 2; ++K)
        by_cap.push_back(count_paths(build_automaton(entry.pair, K), n_max, Accept::excursions()));
    std::vector<std::pair<int, int>> profile;
    for (int n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        int k = 0;
        while (by_cap[static_cast<std::size_t>(k)][i] != full[i]) ++k;
        profile.emplace_back(n, k);
    }
    return profile;
}

AggregationReport aggregation_compare(const CatalogEntry& entry, int K, int n_max) {
    if (K < 1) throw MotzkinError(ErrorCode::InvalidArgument, "K must be at least 1");
    AggregationReport r;
    r.canonical = capped_layer_counts(entry, BoundedQuantity::Sigma, K, n_max);
    r.alternative.assign(static_cast<std::size_t>(n_max) + 1, 0);
    for (BoundedQuantity q : {BoundedQuantity::Phi, BoundedQuantity::Gamma, BoundedQuantity::Eta}) {
        const auto c = capped_layer_counts(entry, q, q == BoundedQuantity::Eta ? K - 1 : K, n_max);
        for (std::size_t i = 0; i < c.size(); ++i) r.alternative[i] += c[i];
    }
    return r;
}

}  // namespace motzkin

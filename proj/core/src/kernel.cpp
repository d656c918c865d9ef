#include "motzkin/kernel.hpp"

#include <algorithm>

#include "json.hpp"

namespace motzkin {

using nlohmann::json;

std::string_view trust_name(Trust t) noexcept { return t == Trust::Asserted ? "asserted" : "discrepant"; }

std::string_view quantity_name(Quantity q) noexcept {
    switch (q) {
        case Quantity::S0: return "S0";
        case Quantity::S1: return "S1";
        case Quantity::F0: return "F_at0";
        case Quantity::F1: return "F_at1";
        case Quantity::G0: return "G_at0";
        case Quantity::G1: return "G_at1";
        case Quantity::H0: return "H_at0";
        case Quantity::H1: return "H_at1";
    }
    return "?";
}

Quantity parse_quantity(std::string_view name) {
    for (Quantity q : kAllQuantities)
        if (quantity_name(q) == name) return q;
    throw MotzkinError(ErrorCode::InvalidArgument, "unknown quantity '" + std::string(name) + "'");
}

std::string_view bounded_name(BoundedQuantity q) noexcept {
    switch (q) {
        case BoundedQuantity::Sigma: return "sigma";
        case BoundedQuantity::Phi: return "phi";
        case BoundedQuantity::Gamma: return "gamma";
        case BoundedQuantity::Eta: return "eta";
    }
    return "?";
}

BoundedQuantity parse_bounded(std::string_view name) {
    for (BoundedQuantity q : kAllBounded)
        if (bounded_name(q) == name) return q;
    throw MotzkinError(ErrorCode::InvalidArgument, "unknown bounded quantity '" + std::string(name) + "'");
}

std::string_view fixture_kind_name(Fixture::Kind k) noexcept {
    return k == Fixture::Kind::Excursion ? "excursion" : "meander";
}

Series Template::eval(const Series& r1, std::size_t order) const {
    const std::size_t n = r1.order();
    const Series num = Series::from_poly(n0, n) + Series::from_poly(n1, n) * r1;
    const Series den = Series::from_poly(d0, n) + Series::from_poly(d1, n) * r1;
    const Series q = series_div_exact(num, den);
    if (q.order() < order)
        throw MotzkinError(ErrorCode::NotDivisible, "template evaluation lost too many coefficients (" +
                                                        std::to_string(q.order()) + " < " +
                                                        std::to_string(order) + ")");
    return q.truncated(order);
}

// ------------------------------------------------------------ parsing

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw MotzkinError(ErrorCode::CatalogFormat, what); }

Poly parse_poly(const json& j) {
    if (!j.is_array()) schema_error("polynomial must be an integer array");
    std::vector<Rational> c;
    for (const auto& v : j) {
        if (!v.is_number_integer()) schema_error("polynomial coefficient must be an integer");
        c.emplace_back(v.get<long>());
    }
    return Poly(std::move(c));
}

RationalFunc parse_ratfunc(const json& j) { return RationalFunc(parse_poly(j.at("num")), parse_poly(j.at("den"))); }

// {"type":"ratio","num":{"type":"affine_r1","const":[..],"r1":[..]},"den":{...}}
Template parse_template(const json& j) {
    if (j.value("type", "") != "ratio") schema_error("template root must be a ratio node");
    auto affine = [](const json& node, Poly& c0, Poly& c1) {
        if (node.value("type", "") != "affine_r1") schema_error("template operands must be affine_r1 nodes");
        c0 = parse_poly(node.at("const"));
        c1 = parse_poly(node.at("r1"));
    };
    Template t;
    affine(j.at("num"), t.n0, t.n1);
    affine(j.at("den"), t.d0, t.d1);
    return t;
}

Trust parse_trust(const json& j) {
    const auto s = j.get<std::string>();
    if (s == "asserted") return Trust::Asserted;
    if (s == "discrepant") return Trust::Discrepant;
    schema_error("unknown trust flag '" + s + "'");
}

PatternPair parse_pair(const json& j) {
    if (!j.is_array() || j.size() != 2) schema_error("pair must be a two-element array");
    return PatternPair(parse_bigram(j[0].get<std::string>()), parse_bigram(j[1].get<std::string>()));
}

CatalogEntry parse_entry(const json& j) {
    CatalogEntry e{parse_pair(j.at("pair"))};
    const auto& k = j.at("kernel");
    e.kernel_a = parse_poly(k.at("a"));
    e.kernel_b = parse_poly(k.at("b"));
    e.kernel_c = parse_poly(k.at("c"));
    e.w_squared = parse_poly(j.at("w_squared"));
    e.r1_num_const = parse_poly(j.at("r1_num_const"));
    e.r1_den = parse_poly(j.at("r1_den"));
    for (const auto& [name, t] : j.at("closed_forms").items()) e.closed_forms[parse_quantity(name)] = parse_template(t);
    e.closed_forms_trust = parse_trust(j.at("closed_forms_trust"));

    const auto& el = j.at("end_level");
    for (const auto& term : el.at("terms"))
        e.end_terms.emplace_back(parse_template(term.at("alpha")), parse_template(term.at("beta")));
    e.end_j_min = el.at("j_min").get<int>();
    for (const auto& t : el.at("explicit")) e.end_explicit.push_back(parse_template(t));
    if (static_cast<int>(e.end_explicit.size()) != e.end_j_min)
        schema_error("end_level.explicit must list s_0..s_{j_min-1}");

    const auto& det = j.at("det");
    e.det_p = parse_poly(det.at("p"));
    e.det_q = parse_poly(det.at("q"));
    e.det_D0 = parse_poly(det.at("D0"));
    e.det_D1 = parse_poly(det.at("D1"));
    e.binet_scale = parse_poly(j.at("binet").at("scale"));
    e.binet_sign = j.at("binet").at("sign").get<int>();
    const auto& tau = j.at("tau");
    e.tau_num = parse_poly(tau.at("num"));
    e.tau_den = parse_poly(tau.at("den"));
    e.tau_mult = parse_poly(tau.at("mult"));
    e.tau_scale = parse_ratfunc(tau.at("scale"));

    for (const auto& [name, b] : j.at("bounded").items()) {
        BoundedForm f;
        f.c0 = parse_ratfunc(b.at("c0"));
        f.c1 = parse_ratfunc(b.at("c1"));
        f.d = parse_poly(b.at("d"));
        f.e = parse_poly(b.at("e"));
        if (b.contains("base_printed")) f.base_printed = b.at("base_printed").get<std::string>();
        if (b.contains("system")) {
            const auto& s = b.at("system");
            BandSystem sys;
            sys.a00 = parse_poly(s.at("corner").at(0));
            sys.a01 = parse_poly(s.at("corner").at(1));
            sys.b0 = parse_poly(s.at("rhs").at(0));
            sys.b1 = parse_poly(s.at("rhs").at(1));
            sys.sub = parse_poly(s.at("interior").at(0));
            sys.diag = parse_poly(s.at("interior").at(1));
            sys.sup = parse_poly(s.at("interior").at(2));
            f.system = sys;
        }
        if (!b.at("cap_offset").is_null()) f.cap_offset = b.at("cap_offset").get<int>();
        f.trust = parse_trust(b.at("trust"));
        f.derived_from_system = b.value("derived_from_system", false);
        e.bounded[parse_bounded(name)] = std::move(f);
    }
    for (const auto& [name, l] : j.at("layers").items())
        e.layers[parse_bounded(name)] = parse_layer(l.get<std::string>().at(0));
    e.start_quantity = parse_bounded(j.at("start_quantity").get<std::string>());
    e.valuation_budget = j.at("valuation_budget").get<std::size_t>();
    for (const auto& f : j.at("fixtures")) {
        Fixture fx{e.pair, f.at("kind").get<std::string>() == "excursion" ? Fixture::Kind::Excursion
                                                                           : Fixture::Kind::Meander};
        if (!f.at("oeis_id").is_null()) fx.oeis_id = f.at("oeis_id").get<std::string>();
        fx.oeis_shift = f.value("oeis_shift", 0);
        for (const auto& v : f.at("prefix")) fx.prefix.emplace_back(v.get<long>());
        fx.trust = parse_trust(f.at("trust"));
        fx.note = f.value("note", "");
        e.fixtures.push_back(std::move(fx));
    }
    for (const auto& n : j.value("notes", json::array())) e.notes.push_back(n.get<std::string>());
    return e;
}

}  // namespace

Catalog Catalog::from_json(std::string_view text) {
    Catalog c;
    try {
        const json doc = json::parse(text);
        if (doc.value("schema", "") != "motzkin-catalog/1") schema_error("unsupported schema tag");
        for (const auto& p : doc.at("degenerate")) c.degenerate_.push_back(parse_pair(p));
        for (const auto& e : doc.at("entries")) c.entries_.push_back(parse_entry(e));
    } catch (const json::exception& ex) {
        schema_error(ex.what());
    }
    return c;
}

const Catalog& Catalog::builtin() {
    static const Catalog instance = Catalog::from_json(builtin_catalog_json());
    return instance;
}

bool Catalog::is_degenerate(const PatternPair& pair) const {
    return std::find(degenerate_.begin(), degenerate_.end(), pair) != degenerate_.end();
}

const CatalogEntry* Catalog::find(const PatternPair& pair) const {
    for (const auto& e : entries_)
        if (e.pair == pair) return &e;
    return nullptr;
}

const CatalogEntry& Catalog::lookup(const PatternPair& pair) const {
    if (const auto* e = find(pair)) return *e;
    if (is_degenerate(pair))
        throw MotzkinError(ErrorCode::NoClosedForm,
                           pair.key() + " is degenerate; use the brute-force automaton");
    throw MotzkinError(ErrorCode::NoClosedForm, pair.key() + " has no catalogued closed form");
}

const CatalogEntry& catalog_lookup(const PatternPair& pair) { return Catalog::builtin().lookup(pair); }

// --------------------------------------------------------- evaluation

KernelRoots kernel_roots(const CatalogEntry& entry, std::size_t order) {
    if (order == 0) throw MotzkinError(ErrorCode::InvalidArgument, "order must be positive");
    const std::size_t v = entry.r1_den.valuation();
    const std::size_t n = order + v;
    KernelRoots roots;
    const Series w = series_sqrt(Series::from_poly(entry.w_squared, n));
    const Series p = Series::from_poly(entry.r1_num_const, n);
    const Series q = Series::from_poly(entry.r1_den, n);
    roots.w = w.truncated(order);
    roots.r1 = series_div_exact(p - w, q).truncated(order);
    // r2 = (P + W) / Q = z^{-v} (P + W) / (Q / z^v)
    roots.r2_scaled = ((p + w) * series_inv(q.shifted_down(v))).truncated(order);
    roots.r2_shift = v;
    return roots;
}

namespace {

Series r1_with_budget(const CatalogEntry& entry, std::size_t order) {
    return kernel_roots(entry, order + entry.valuation_budget).r1;
}

}  // namespace

Series eval_unbounded(const CatalogEntry& entry, Quantity q, std::size_t order) {
    const auto it = entry.closed_forms.find(q);
    if (it == entry.closed_forms.end())
        throw MotzkinError(ErrorCode::NoClosedForm,
                           std::string(quantity_name(q)) + " is not catalogued for " + entry.pair.key());
    Series s = it->second.eval(r1_with_budget(entry, order), order);
    s.integer_coeffs();  // every closed form here is a counting series
    return s;
}

Series eval_end_level(const CatalogEntry& entry, int j, std::size_t order) {
    if (j < 0) throw MotzkinError(ErrorCode::InvalidArgument, "end level must be nonnegative");
    const Series r1 = r1_with_budget(entry, order);
    Series s;
    if (j < entry.end_j_min) {
        s = entry.end_explicit.at(static_cast<std::size_t>(j)).eval(r1, order);
    } else {
        s = Series(order);
        for (const auto& [alpha, beta] : entry.end_terms) {
            const std::size_t wide = order + entry.valuation_budget;
            // beta usually has positive valuation, so its powers are cheap to
            // keep at full width; alpha may carry a pole cancelled by beta^j.
            const Series b = beta.eval(r1, std::min(wide, r1.order() - beta.d0.valuation()));
            const Series bj = b.pow(static_cast<unsigned>(j));
            const Series a_num = Series::from_poly(alpha.n0, r1.order()) + Series::from_poly(alpha.n1, r1.order()) * r1;
            const Series a_den = Series::from_poly(alpha.d0, r1.order()) + Series::from_poly(alpha.d1, r1.order()) * r1;
            const Series term = series_div_exact(a_num * bj.truncated(std::min(bj.order(), a_num.order())), a_den);
            if (term.order() < order)
                throw MotzkinError(ErrorCode::NotDivisible, "end-level term lost too many coefficients");
            s = s + term.truncated(order);
        }
    }
    s.integer_coeffs();
    return s;
}

LayerSelector selector_for(const CatalogEntry& entry, Quantity q) {
    LayerSelector sel;
    sel.any_level = (q == Quantity::S1 || q == Quantity::F1 || q == Quantity::G1 || q == Quantity::H1);
    std::optional<BoundedQuantity> bq;
    if (q == Quantity::F0 || q == Quantity::F1) bq = BoundedQuantity::Phi;
    if (q == Quantity::G0 || q == Quantity::G1) bq = BoundedQuantity::Gamma;
    if (q == Quantity::H0 || q == Quantity::H1) bq = BoundedQuantity::Eta;
    if (bq) {
        sel.layer = entry.layers.at(*bq);
        sel.includes_start = (entry.start_quantity == *bq);
    } else {
        sel.includes_start = true;
    }
    return sel;
}

std::vector<Integer> brute_force_counts(const CatalogEntry& entry, Quantity q, int n_max) {
    const LayerSelector sel = selector_for(entry, q);
    const LayeredAutomaton a = build_automaton(entry.pair, std::nullopt);
    if (!sel.layer) return count_paths(a, n_max, sel.any_level ? Accept::meanders() : Accept::excursions());
    auto c = count_paths(a, n_max, sel.any_level ? Accept::layer_any_level(*sel.layer) : Accept::layer_end(*sel.layer, 0));
    if (sel.includes_start) c[0] += 1;
    return c;
}

}  // namespace motzkin

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "motzkin/verify.hpp"

namespace motzkin {

using nlohmann::ordered_json;

std::string_view status_name(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Info: return "INFO";
        case Status::Fail: return "FAIL";
    }
    return "?";
}

namespace {

constexpr int kEnumerationLimit = 10;   // literal enumeration is 3^n
constexpr std::size_t kBoundedOrder = 17;  // coefficients compared by the bounded routes

void raise(Status& s, Status to) {
    if (static_cast<int>(to) > static_cast<int>(s)) s = to;
}

std::vector<Integer> to_integers(const Series& s) { return s.integer_coeffs(); }

// Last index i such that a and b agree on 0..i (-1 if they differ at 0).
int agree_through(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return static_cast<int>(i) - 1;
    return static_cast<int>(n) - 1;
}

std::string join(const std::vector<Integer>& v, std::size_t limit = 1000) {
    std::string out;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out;
}

std::vector<PatternPair> all_pairs() {
    std::vector<Bigram> grams;
    for (Step a : kSteps)
        for (Step b : kSteps) grams.push_back({a, b});
    std::vector<PatternPair> pairs;
    for (std::size_t i = 0; i < grams.size(); ++i)
        for (std::size_t j = i + 1; j < grams.size(); ++j) pairs.emplace_back(grams[i], grams[j]);
    return pairs;
}

Accept accept_for(Fixture::Kind kind) {
    return kind == Fixture::Kind::Excursion ? Accept::excursions() : Accept::meanders();
}

FixtureVerdict judge_fixture(const Fixture& fx, const std::vector<Integer>& bf, const VerifyConfig& config) {
    FixtureVerdict v{fx};
    const bool asserted = fx.trust == Trust::Asserted;
    if (!fx.prefix.empty()) {
        const std::size_t n = std::min(fx.prefix.size(), bf.size());
        for (std::size_t i = 0; i < n; ++i)
            if (fx.prefix[i] != bf[i]) {
                v.first_mismatch = static_cast<int>(i);
                break;
            }
        if (v.first_mismatch) {
            v.verdict = asserted ? Status::Fail : Status::Info;
            v.note = "printed prefix differs from brute force at n=" + std::to_string(*v.first_mismatch) +
                     "; brute force (authoritative): " + join(bf, fx.prefix.size());
        } else if (!asserted) {
            v.verdict = Status::Info;
            v.note = "printed prefix agrees with brute force";
        }
    }
    if (!asserted) {
        v.verdict = Status::Info;
        if (!fx.note.empty()) v.note = fx.note + (v.note.empty() ? "" : "; " + v.note);
    }

    if (!fx.oeis_id) {
        v.oeis = "none";
        return v;
    }
    if (!config.online) {
        // Offline still uses a warm cache; a cold cache marks the column skipped.
        try {
            const auto terms = oeis_fetch(*fx.oeis_id, true, config.cache_dir, config.transport);
            (void)terms;
        } catch (const MotzkinError&) {
            v.oeis = "skipped";
            return v;
        }
    }
    try {
        const auto terms = oeis_fetch(*fx.oeis_id, !config.online, config.cache_dir, config.transport);
        std::optional<int> mismatch;
        for (std::size_t i = 0; i < bf.size(); ++i) {
            const long j = static_cast<long>(i) + fx.oeis_shift;
            if (j < 0 || static_cast<std::size_t>(j) >= terms.size()) continue;
            if (terms[static_cast<std::size_t>(j)] != bf[i]) {
                mismatch = static_cast<int>(i);
                break;
            }
        }
        v.oeis = mismatch ? "mismatch" : "match";
        v.oeis_first_mismatch = mismatch;
        if (mismatch) {
            raise(v.verdict, asserted ? Status::Fail : Status::Info);
            v.note += (v.note.empty() ? "" : "; ") + *fx.oeis_id + " differs from brute force at n=" +
                      std::to_string(*mismatch);
        }
    } catch (const MotzkinError& e) {
        v.oeis = e.code() == ErrorCode::NotFound ? "not_found" : "error";
        v.note += (v.note.empty() ? "" : "; ") + std::string(e.what());
        if (e.code() == ErrorCode::NotFound || e.code() == ErrorCode::MalformedBFile)
            raise(v.verdict, asserted ? Status::Fail : Status::Info);
    }
    return v;
}

RouteResult compare_route(std::string name, const std::vector<Integer>& values, const std::vector<Integer>& bf,
                          bool asserted, std::string note = {}) {
    RouteResult r{std::move(name), "agree", agree_through(values, bf), asserted, std::move(note)};
    const int expected = static_cast<int>(std::min(values.size(), bf.size())) - 1;
    if (r.agree_through < expected) r.outcome = "disagree";
    return r;
}

SeqReport check_sequence(const PatternPair& pair, Fixture::Kind kind, const CatalogEntry* entry,
                         const VerifyConfig& config) {
    SeqReport rep{pair, kind};
    const Accept accept = accept_for(kind);
    rep.brute_force = count_paths(build_automaton(pair, std::nullopt), config.n_max, accept);
    rep.routes.push_back({"brute_force", "agree", config.n_max, true, "authoritative"});

    {
        std::vector<Integer> lit;
        for (int n = 0; n <= std::min(config.n_max, kEnumerationLimit); ++n)
            lit.emplace_back(static_cast<unsigned long>(enumerate_paths(pair, n, accept).size()));
        rep.routes.push_back(compare_route("enumeration", lit, rep.brute_force, true));
    }

    const std::size_t order = static_cast<std::size_t>(config.n_max) + 1;
    if (!entry) {
        rep.routes.push_back({"closed_form", "unavailable", -1, false, "NoClosedForm: brute force only"});
    } else {
        const bool asserted = entry->closed_forms_trust == Trust::Asserted;
        const Quantity q = kind == Fixture::Kind::Excursion ? Quantity::S0 : Quantity::S1;
        try {
            rep.routes.push_back(compare_route("closed_form", to_integers(eval_unbounded(*entry, q, order)),
                                               rep.brute_force, asserted));
        } catch (const MotzkinError& e) {
            rep.routes.push_back({"closed_form", "error", -1, asserted, e.what()});
        }
        // s_j summed over end levels partitions meanders; s_0 alone gives excursions.
        try {
            std::vector<Integer> sum(order, 0);
            const int top = kind == Fixture::Kind::Excursion ? 0 : config.n_max;
            for (int j = 0; j <= top; ++j) {
                const auto s = to_integers(eval_end_level(*entry, j, order));
                for (std::size_t i = 0; i < order; ++i) sum[i] += s[i];
            }
            rep.routes.push_back(compare_route("end_levels", sum, rep.brute_force, asserted));
        } catch (const MotzkinError& e) {
            rep.routes.push_back({"end_levels", "error", -1, asserted, e.what()});
        }
    }

    rep.agree_through = config.n_max;
    for (const auto& r : rep.routes) {
        if (r.outcome == "unavailable") continue;
        if (r.outcome == "agree") continue;
        raise(rep.status, r.asserted ? Status::Fail : Status::Info);
        if (r.asserted) rep.agree_through = std::min(rep.agree_through, r.agree_through);
    }

    if (entry)
        for (const auto& fx : entry->fixtures)
            if (fx.kind == kind) {
                rep.fixtures.push_back(judge_fixture(fx, rep.brute_force, config));
                raise(rep.status, rep.fixtures.back().verdict);
            }
    return rep;
}

BoundedCheck check_bounded(const CatalogEntry& entry, BoundedQuantity q, const BoundedForm& form,
                           const VerifyConfig& config) {
    BoundedCheck c{q, form.trust, form.cap_offset, form.system.has_value()};
    const std::size_t order = std::min(kBoundedOrder, static_cast<std::size_t>(config.n_max) + 1);
    const int n_max = static_cast<int>(order) - 1;
    const LayeredAutomaton unbounded = build_automaton(entry.pair, std::nullopt);
    std::vector<Integer> limit;
    if (q == BoundedQuantity::Sigma) {
        limit = count_paths(unbounded, n_max, Accept::excursions());
    } else {
        limit = count_paths(unbounded, n_max, Accept::layer_end(entry.layers.at(q), 0));
        if (entry.start_quantity == q) limit[0] += 1;
    }
    try {
        for (int K = 0; K <= config.K_max; ++K) {
            const Series cf = eval_bounded(entry, q, K + 1, order);
            if (c.has_system && !c.cf_vs_banded_fail && solve_banded(entry, q, K, order) != cf)
                c.cf_vs_banded_fail = K;
            if (auto cap = cap_for(entry, q, K + 1); cap && !c.cf_vs_dp_fail) {
                const auto dp = capped_layer_counts(entry, q, *cap, n_max);
                if (Series(std::vector<Rational>(dp.begin(), dp.end()), order) != cf) c.cf_vs_dp_fail = K;
            }
            if (!c.convergence_fail) {
                const int top = std::min(2 * K + 1, n_max);
                for (int n = 0; n <= top; ++n)
                    if (cf[static_cast<std::size_t>(n)] != Rational(limit[static_cast<std::size_t>(n)])) {
                        c.convergence_fail = K;
                        break;
                    }
            }
        }
    } catch (const MotzkinError& e) {
        c.error = e.what();
    }
    const bool clean = !c.cf_vs_banded_fail && !c.cf_vs_dp_fail && !c.convergence_fail && c.error.empty() &&
                       c.cap_offset.has_value();
    if (!clean) c.status = form.trust == Trust::Asserted ? Status::Fail : Status::Info;
    return c;
}

}  // namespace

PairReport cross_check(const PatternPair& pair, const VerifyConfig& config) {
    if (config.n_max < 0 || config.n_max > 40)
        throw MotzkinError(ErrorCode::InvalidArgument, "n_max must be in 0..40");
    if (config.K_max < 0 || config.K_max > 8) throw MotzkinError(ErrorCode::InvalidArgument, "K_max must be in 0..8");
    const Catalog& cat = Catalog::builtin();
    PairReport rep{pair};
    const CatalogEntry* entry = cat.find(pair);
    rep.catalogued = entry != nullptr;
    rep.degenerate = cat.is_degenerate(pair);
    if (!entry)
        rep.info.push_back(rep.degenerate ? "degenerate pair: NoClosedForm, brute force only"
                                          : "no catalogued closed form: brute force only");

    for (auto kind : {Fixture::Kind::Excursion, Fixture::Kind::Meander}) {
        rep.sequences.push_back(check_sequence(pair, kind, entry, config));
        raise(rep.status, rep.sequences.back().status);
    }
    if (!entry) return rep;

    // Which pair(s) do the closed forms actually count?
    try {
        const std::size_t order = static_cast<std::size_t>(config.n_max) + 1;
        const auto s0 = to_integers(eval_unbounded(*entry, Quantity::S0, order));
        const auto s1 = to_integers(eval_unbounded(*entry, Quantity::S1, order));
        for (const auto& other : all_pairs()) {
            const auto a = build_automaton(other, std::nullopt);
            if (count_paths(a, config.n_max, Accept::excursions()) == s0 &&
                count_paths(a, config.n_max, Accept::meanders()) == s1)
                rep.closed_form_matches.push_back(other.key());
        }
    } catch (const MotzkinError& e) {
        rep.info.push_back(std::string("closed forms could not be evaluated: ") + e.what());
    }
    if (std::find(rep.closed_form_matches.begin(), rep.closed_form_matches.end(), pair.key()) ==
        rep.closed_form_matches.end()) {
        std::string m = "closed forms do not count " + pair.key() + "; they match ";
        m += rep.closed_form_matches.empty() ? std::string("no pair") : "";
        for (std::size_t i = 0; i < rep.closed_form_matches.size(); ++i)
            m += (i ? ", " : "") + rep.closed_form_matches[i];
        m += " through n=" + std::to_string(config.n_max);
        rep.info.push_back(m);
    }
    else if (entry->closed_forms_trust == Trust::Discrepant ||
             std::any_of(entry->fixtures.begin(), entry->fixtures.end(),
                         [](const Fixture& f) { return f.trust == Trust::Discrepant; }))
        rep.info.push_back("closed forms reproduce the brute-force counts of " + pair.key() + " itself through n=" +
                           std::to_string(config.n_max));
    for (const auto& note : entry->notes) rep.info.push_back("catalog note: " + note);

    for (const auto& [q, form] : entry->bounded) {
        rep.bounded.push_back(check_bounded(*entry, q, form, config));
        raise(rep.status, rep.bounded.back().status);
    }
    return rep;
}

std::size_t RunReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [s](const PairReport& p) { return p.status == s; }));
}

RunReport run_all(const VerifyConfig& config) {
    const Catalog& cat = Catalog::builtin();
    std::vector<PatternPair> pairs;
    for (const auto& e : cat.entries()) pairs.push_back(e.pair);
    for (const auto& p : cat.degenerate()) pairs.push_back(p);

    RunReport run{config};
    run.pairs.resize(pairs.size(), PairReport{pairs.front()});
    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(pairs.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) run.pairs[i] = cross_check(pairs[i], config);
    };
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < workers; ++t) jobs.push_back(std::async(std::launch::async, work));
    for (auto& j : jobs) j.get();
    return run;
}

// ------------------------------------------------------------- rendering

namespace {

ordered_json integers_json(const std::vector<Integer>& v) {
    ordered_json a = ordered_json::array();
    // Counts beyond 64 bits are emitted as strings to stay exact.
    for (const auto& x : v) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json seq_json(const SeqReport& s) {
    ordered_json j;
    j["pair"] = s.pair.key();
    j["kind"] = fixture_kind_name(s.kind);
    ordered_json routes = ordered_json::array();
    for (const auto& r : s.routes)
        routes.push_back({{"route", r.route},
                          {"outcome", r.outcome},
                          {"agree_through", r.agree_through},
                          {"asserted", r.asserted},
                          {"note", r.note}});
    j["routes"] = routes;
    j["agree_through"] = s.agree_through;
    ordered_json fixtures = ordered_json::array();
    for (const auto& f : s.fixtures)
        fixtures.push_back({{"oeis_id", opt_json(f.fixture.oeis_id)},
                            {"oeis_shift", f.fixture.oeis_shift},
                            {"trust", trust_name(f.fixture.trust)},
                            {"prefix", integers_json(f.fixture.prefix)},
                            {"verdict", status_name(f.verdict)},
                            {"first_mismatch", opt_json(f.first_mismatch)},
                            {"oeis", f.oeis},
                            {"oeis_first_mismatch", opt_json(f.oeis_first_mismatch)},
                            {"note", f.note}});
    j["fixtures"] = fixtures;
    j["authoritative"] = integers_json(s.brute_force);
    j["status"] = status_name(s.status);
    return j;
}

ordered_json pair_json(const PairReport& p) {
    ordered_json j;
    j["pair"] = p.pair.key();
    j["catalogued"] = p.catalogued;
    j["degenerate"] = p.degenerate;
    j["status"] = status_name(p.status);
    ordered_json seqs = ordered_json::array();
    for (const auto& s : p.sequences) seqs.push_back(seq_json(s));
    j["sequences"] = seqs;
    ordered_json bounded = ordered_json::array();
    for (const auto& b : p.bounded)
        bounded.push_back({{"quantity", bounded_name(b.quantity)},
                           {"trust", trust_name(b.trust)},
                           {"cap_offset", opt_json(b.cap_offset)},
                           {"has_system", b.has_system},
                           {"cf_vs_banded_fail", opt_json(b.cf_vs_banded_fail)},
                           {"cf_vs_dp_fail", opt_json(b.cf_vs_dp_fail)},
                           {"convergence_fail", opt_json(b.convergence_fail)},
                           {"error", b.error},
                           {"status", status_name(b.status)}});
    j["bounded"] = bounded;
    j["closed_form_matches"] = p.closed_form_matches;
    j["info"] = p.info;
    return j;
}

std::string optional_k(const std::optional<int>& k) { return k ? "K=" + std::to_string(*k) : "ok"; }

}  // namespace

std::string to_json(const PairReport& report) { return pair_json(report).dump(2) + "\n"; }

std::string to_json(const RunReport& report) {
    ordered_json j;
    j["schema"] = "motzkin-verify/1";
    if (report.config.timestamp) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["generated_at"] = buf;
    }
    j["config"] = {{"n_max", report.config.n_max}, {"K_max", report.config.K_max}, {"online", report.config.online}};
    ordered_json pairs = ordered_json::array();
    for (const auto& p : report.pairs) pairs.push_back(pair_json(p));
    j["pairs"] = pairs;
    j["summary"] = {{"pairs", report.pairs.size()},
                    {"pass", report.count(Status::Pass)},
                    {"info", report.count(Status::Info)},
                    {"fail", report.count(Status::Fail)},
                    {"ok", report.ok()}};
    return j.dump(2) + "\n";
}

std::string to_text(const PairReport& p) {
    std::ostringstream out;
    out << status_name(p.status) << "  " << p.pair.key()
        << (p.catalogued ? "" : (p.degenerate ? "  [degenerate]" : "  [uncatalogued]")) << "\n";
    for (const auto& s : p.sequences) {
        out << "    " << fixture_kind_name(s.kind) << ": " << status_name(s.status)
            << ", agree through n=" << s.agree_through << " [";
        for (std::size_t i = 0; i < s.routes.size(); ++i)
            out << (i ? " " : "") << s.routes[i].route << "=" << s.routes[i].outcome;
        out << "]\n";
        for (const auto& f : s.fixtures) {
            out << "      fixture " << (f.fixture.oeis_id ? *f.fixture.oeis_id : std::string("(no id)")) << " "
                << trust_name(f.fixture.trust) << ": " << status_name(f.verdict) << ", oeis " << f.oeis << "\n";
            if (!f.note.empty()) out << "        note: " << f.note << "\n";
        }
        for (const auto& r : s.routes)
            if (r.outcome != "agree" && r.outcome != "unavailable")
                out << "      " << (r.asserted ? "FAIL" : "INFO") << ": route " << r.route << " " << r.outcome
                    << " after n=" << r.agree_through << (r.note.empty() ? "" : " (" + r.note + ")")
                    << "; brute force (authoritative): " << join(s.brute_force, 12) << "\n";
    }
    for (const auto& b : p.bounded) {
        out << "    " << bounded_name(b.quantity) << " (" << trust_name(b.trust) << ", cap offset "
            << (b.cap_offset ? std::to_string(*b.cap_offset) : std::string("none")) << "): " << status_name(b.status)
            << "  cf~banded " << (b.has_system ? optional_k(b.cf_vs_banded_fail) : "n/a") << ", cf~dp "
            << (b.cap_offset ? optional_k(b.cf_vs_dp_fail) : "n/a") << ", convergence "
            << optional_k(b.convergence_fail) << (b.error.empty() ? "" : ", error: " + b.error) << "\n";
    }
    for (const auto& i : p.info) out << "    INFO: " << i << "\n";
    return out.str();
}

std::string to_text(const RunReport& r) {
    std::ostringstream out;
    for (const auto& p : r.pairs) out << to_text(p);
    out << "summary: " << r.pairs.size() << " pairs, " << r.count(Status::Pass) << " pass, "
        << r.count(Status::Info) << " info, " << r.count(Status::Fail) << " fail"
        << (r.config.online ? "" : " (offline; uncached OEIS columns skipped)") << "\n";
    return out.str();
}

}  // namespace motzkin

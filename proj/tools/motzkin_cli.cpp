// motzkin: count restricted Motzkin paths, evaluate catalogued generating
// functions and cross-verify every route.
//
// Exit codes: 0 ok, 1 verification failure or computation error,
// 2 usage error, 3 quantity not supported for the pair.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motzkin/automaton.hpp"
#include "motzkin/bounded.hpp"
#include "motzkin/kernel.hpp"
#include "motzkin/verify.hpp"

namespace {

using namespace motzkin;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

// "excursion", "meander" or "level=j".
Accept parse_kind(const std::string& kind, std::optional<Layer> layer) {
    int level = 0;
    bool meander = false;
    if (kind == "excursion") {
        level = 0;
    } else if (kind == "meander") {
        meander = true;
    } else if (kind.rfind("level=", 0) == 0) {
        try {
            std::size_t used = 0;
            level = std::stoi(kind.substr(6), &used);
            if (used != kind.size() - 6 || level < 0) throw std::invalid_argument("level");
        } catch (const std::exception&) {
            throw MotzkinError(ErrorCode::InvalidArgument, "bad end level in '" + kind + "'");
        }
    } else {
        throw MotzkinError(ErrorCode::InvalidArgument, "--kind must be excursion, meander or level=<j>");
    }
    if (layer) {
        if (meander) throw MotzkinError(ErrorCode::InvalidArgument, "--layer needs excursion or level=<j>");
        return Accept::layer_end(*layer, level);
    }
    if (meander) return Accept::meanders();
    return kind == "excursion" ? Accept::excursions() : Accept::end_level(level);
}

void print_integers(const std::vector<Integer>& v, bool json) {
    if (json) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : v) {
            if (x.fits_slong_p())
                a.push_back(x.get_si());
            else
                a.push_back(x.get_str());
        }
        std::cout << a.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i].get_str();
    std::cout << "\n";
}

void print_series(const Series& s, bool json) {
    bool integral = true;
    for (const auto& c : s.coeffs()) integral = integral && c.get_den() == 1;
    if (integral) {
        print_integers(s.integer_coeffs(), json);
        return;
    }
    std::cerr << "note: the series has non-integer coefficients\n";
    if (json) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : s.coeffs()) a.push_back(c.get_str());
        std::cout << nlohmann::json{{"integral", false}, {"coefficients", a}}.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < s.order(); ++i) std::cout << (i ? " " : "") << s[i].get_str();
    std::cout << "\n";
}

// S0 | S1 | F_at0 ... | sj:<j> | sigma:<m> | gamma:<m> | eta:<m> | phi:<m>, m >= 1
Series eval_quantity(const PatternPair& pair, const std::string& spec, std::size_t terms) {
    const CatalogEntry& entry = catalog_lookup(pair);
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return eval_unbounded(entry, parse_quantity(spec), terms);
    const std::string head = spec.substr(0, colon);
    int index = 0;
    try {
        std::size_t used = 0;
        index = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("index");
    } catch (const std::exception&) {
        throw MotzkinError(ErrorCode::InvalidArgument, "bad index in quantity '" + spec + "'");
    }
    if (head == "sj") return eval_end_level(entry, index, terms);
    return eval_bounded(entry, parse_bounded(head), index, terms);
}

int report_error(const MotzkinError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
        case ErrorCode::InvalidArgument: return kExitUsage;
        case ErrorCode::NoClosedForm: return kExitUnsupported;
        default: return kExitFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted Motzkin path enumeration and cross-verification"};
    app.require_subcommand(1);

    std::string forbid;
    bool json = false;

    auto* count = app.add_subcommand("count", "count paths by dynamic programming over the automaton");
    int length = 0;
    std::optional<int> height;
    std::string kind = "excursion";
    std::optional<char> layer;
    count->add_option("--forbid", forbid, "two forbidden bigrams, e.g. UD,DU")->required();
    count->add_option("--length", length, "maximum path length N (prints a(0..N))")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--height", height, "height cap K")->check(CLI::NonNegativeNumber);
    count->add_option("--kind", kind, "excursion | meander | level=<j>");
    count->add_option("--layer", layer, "only paths whose last step is U, H or D");
    count->add_flag("--json", json, "print a JSON array");

    auto* series = app.add_subcommand("series", "evaluate a catalogued generating function");
    std::size_t terms = 10;
    std::string quantity = "S0";
    series->add_option("--forbid", forbid, "two forbidden bigrams")->required();
    series->add_option("--terms", terms, "number of coefficients")->check(CLI::PositiveNumber);
    series->add_option("--quantity", quantity,
                       "S0 | S1 | F_at0 | F_at1 | G_at0 | G_at1 | H_at0 | H_at1 | sj:<j> | "
                       "sigma:<m> | gamma:<m> | eta:<m> | phi:<m> (m >= 1 is the bounded index)");
    series->add_flag("--json", json, "print a JSON array");

    auto* verify = app.add_subcommand("verify", "cross-check all routes against brute force and fixtures");
    bool all = false, online = false, no_timestamp = false;
    VerifyConfig config;
    std::string cache_dir;
    verify->add_flag("--all", all, "every catalogued and degenerate pair (default)");
    verify->add_option("--forbid", forbid, "check a single pair");
    verify->add_flag("--online", online, "fetch OEIS b-files (cached) for cited identifiers");
    verify->add_flag("--json", json, "machine-readable report");
    verify->add_flag("--no-timestamp", no_timestamp, "omit the generation time from JSON output");
    verify->add_option("--n-max", config.n_max, "largest length compared")->check(CLI::Range(0, 40));
    verify->add_option("--k-max", config.K_max, "largest bounded index K compared")->check(CLI::Range(0, 8));
    verify->add_option("--cache-dir", cache_dir, "OEIS cache directory (default $MOTZKIN_OEIS_CACHE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count) {
            const PatternPair pair = PatternPair::parse(forbid);
            std::optional<Layer> l;
            if (layer) {
                l = parse_layer(static_cast<char>(std::toupper(static_cast<unsigned char>(*layer))));
                if (*l == Layer::Start) throw MotzkinError(ErrorCode::InvalidArgument, "--layer must be U, H or D");
            }
            const Accept accept = parse_kind(kind, l);
            print_integers(count_paths(build_automaton(pair, height), length, accept), json);
            return kExitOk;
        }
        if (*series) {
            const PatternPair pair = PatternPair::parse(forbid);
            print_series(eval_quantity(pair, quantity, terms), json);
            return kExitOk;
        }
        if (*verify) {
            if (all && !forbid.empty())
                throw MotzkinError(ErrorCode::InvalidArgument, "--all and --forbid are mutually exclusive");
            config.online = online;
            config.timestamp = !no_timestamp;
            if (!cache_dir.empty()) config.cache_dir = cache_dir;
            if (!forbid.empty()) {
                const PairReport rep = cross_check(PatternPair::parse(forbid), config);
                std::cout << (json ? to_json(rep) : to_text(rep));
                return rep.status == Status::Fail ? kExitFailure : kExitOk;
            }
            const RunReport run = run_all(config);
            std::cout << (json ? to_json(run) : to_text(run));
            return run.ok() ? kExitOk : kExitFailure;
        }
    } catch (const MotzkinError& e) {
        return report_error(e);
    }
    return kExitUsage;
}

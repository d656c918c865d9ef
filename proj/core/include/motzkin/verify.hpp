#ifndef MOTZKIN_VERIFY_HPP
#define MOTZKIN_VERIFY_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/bounded.hpp"
#include "motzkin/kernel.hpp"

namespace motzkin {

// ---------------------------------------------------------------- OEIS

// $MOTZKIN_OEIS_CACHE, else $XDG_CACHE_HOME/motzkin-oeis, else
// $HOME/.cache/motzkin-oeis.
std::filesystem::path default_oeis_cache_dir();

// "A" followed by exactly six digits.
bool is_valid_oeis_id(std::string_view id);

// Terms of a b-file ("n a(n)" lines, '#' comments and blank lines skipped),
// in file order. Indices must be consecutive. Throws MalformedBFile.
std::vector<Integer> parse_bfile(std::string_view text);

// Raw b-file download. Returns nullopt on 404; throws NetworkUnavailable on
// transport failure. Replaceable for tests.
using BFileTransport = std::function<std::optional<std::string>(const std::string& id)>;
BFileTransport https_transport();

// Cached b-file lookup. The cache holds one raw b-file per identifier and is
// written atomically (temporary file + rename). Offline mode reads the cache
// only. Throws InvalidArgument (bad id, before any I/O), NetworkUnavailable,
// NotFound or MalformedBFile.
std::vector<Integer> oeis_fetch(const std::string& id, bool offline,
                                const std::filesystem::path& cache_dir = default_oeis_cache_dir(),
                                const BFileTransport& transport = https_transport());

// -------------------------------------------------------------- reports

struct VerifyConfig {
    int n_max = 20;
    int K_max = 5;
    bool online = false;
    std::filesystem::path cache_dir = default_oeis_cache_dir();
    BFileTransport transport;   // defaults to https_transport()
    bool timestamp = false;     // include generation time in JSON
    unsigned threads = 0;       // 0 = hardware concurrency
};

enum class Status { Pass, Info, Fail };
std::string_view status_name(Status s) noexcept;

struct RouteResult {
    std::string route;      // brute_force, enumeration, closed_form, end_levels
    std::string outcome;    // agree, disagree, unavailable, error
    int agree_through = -1; // last index where the route matches brute force
    bool asserted = true;
    std::string note;
};

struct FixtureVerdict {
    Fixture fixture;
    Status verdict = Status::Pass;
    std::optional<int> first_mismatch;  // index into the printed prefix
    std::string oeis;                   // none, skipped, match, mismatch, not_found, error
    std::optional<int> oeis_first_mismatch;
    std::string note;
};

struct SeqReport {
    PatternPair pair;
    Fixture::Kind kind;
    std::vector<Integer> brute_force;  // authoritative values a(0..n_max)
    std::vector<RouteResult> routes;
    int agree_through = -1;  // all asserted routes agree with brute force up to here
    std::vector<FixtureVerdict> fixtures;
    Status status = Status::Pass;
};

struct BoundedCheck {
    BoundedQuantity quantity;
    Trust trust = Trust::Asserted;
    std::optional<int> cap_offset;
    bool has_system = false;
    std::optional<int> cf_vs_banded_fail;   // first K where the routes differ
    std::optional<int> cf_vs_dp_fail;
    std::optional<int> convergence_fail;    // first K violating agreement for n <= 2K+1
    std::string error;                      // algebra error raised by a route
    Status status = Status::Pass;
};

struct PairReport {
    PatternPair pair;
    bool catalogued = false;
    bool degenerate = false;
    std::vector<SeqReport> sequences;  // excursion, meander
    std::vector<BoundedCheck> bounded;
    std::vector<std::string> closed_form_matches;  // pairs whose counts the closed forms reproduce
    std::vector<std::string> info;
    Status status = Status::Pass;
};

// Compares brute force, literal enumeration, closed forms, end-level sums,
// the bounded routes and the fixtures (plus OEIS when online) for one pair.
// Requires n_max <= 40 and K_max <= 8.
PairReport cross_check(const PatternPair& pair, const VerifyConfig& config);

struct RunReport {
    VerifyConfig config;
    std::vector<PairReport> pairs;
    std::size_t count(Status s) const;
    // No asserted fixture or asserted route failed.
    bool ok() const { return count(Status::Fail) == 0; }
};

// Every catalogued pair followed by every degenerate pair.
RunReport run_all(const VerifyConfig& config);

std::string to_json(const PairReport& report);
std::string to_json(const RunReport& report);
std::string to_text(const PairReport& report);
std::string to_text(const RunReport& report);

}  // namespace motzkin

#endif  // MOTZKIN_VERIFY_HPP

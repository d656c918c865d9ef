#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "httplib.h"
#include "motzkin/verify.hpp"

namespace motzkin {

namespace fs = std::filesystem;

fs::path default_oeis_cache_dir() {
    if (const char* dir = std::getenv("MOTZKIN_OEIS_CACHE"); dir && *dir) return fs::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "motzkin-oeis";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "motzkin-oeis";
    return fs::temp_directory_path() / "motzkin-oeis";
}

bool is_valid_oeis_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (char c : id.substr(1))
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<Integer> parse_bfile(std::string_view text) {
    std::vector<Integer> terms;
    std::optional<Integer> last_index;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line.substr(first));
        std::string idx, val, extra;
        fields >> idx >> val;
        auto bad = [&](const std::string& why) {
            return MotzkinError(ErrorCode::MalformedBFile, "line " + std::to_string(line_no) + ": " + why);
        };
        if (val.empty() || (fields >> extra)) throw bad("expected two fields");
        Integer n, a;
        if (n.set_str(idx, 10) != 0 || a.set_str(val, 10) != 0) throw bad("non-integer field");
        if (last_index && n != *last_index + 1) throw bad("indices are not consecutive");
        last_index = n;
        terms.push_back(a);
    }
    if (terms.empty()) throw MotzkinError(ErrorCode::MalformedBFile, "no terms");
    return terms;
}

BFileTransport https_transport() {
    return [](const std::string& id) -> std::optional<std::string> {
#ifdef MOTZKIN_HAVE_TLS
        httplib::SSLClient client("oeis.org");
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
        client.set_follow_location(true);
        std::string digits = id.substr(1);
        const auto res = client.Get("/" + id + "/b" + digits + ".txt");
        if (!res)
            throw MotzkinError(ErrorCode::NetworkUnavailable,
                               "request for " + id + " failed: " + httplib::to_string(res.error()));
        if (res->status == 404) return std::nullopt;
        if (res->status != 200)
            throw MotzkinError(ErrorCode::NetworkUnavailable,
                               "request for " + id + " returned HTTP " + std::to_string(res->status));
        return res->body;
#else
        throw MotzkinError(ErrorCode::NetworkUnavailable, "built without TLS support; cannot fetch " + id);
#endif
    };
}

namespace {

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_atomically(const fs::path& target, const std::string& body) {
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    const fs::path tmp = target.string() + ".tmp." +
                         std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
                         std::to_string(stamp) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return;  // an unwritable cache only costs a refetch
        out << body;
        if (!out.flush()) {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace

std::vector<Integer> oeis_fetch(const std::string& id, bool offline, const fs::path& cache_dir,
                                const BFileTransport& transport) {
    if (!is_valid_oeis_id(id))
        throw MotzkinError(ErrorCode::InvalidArgument, "'" + id + "' is not an OEIS identifier (A + six digits)");
    const fs::path cached = cache_dir / (id + ".txt");
    if (auto body = read_file(cached)) return parse_bfile(*body);
    if (offline) throw MotzkinError(ErrorCode::NetworkUnavailable, id + " is not cached and offline mode is on");
    const auto body = (transport ? transport : https_transport())(id);
    if (!body) throw MotzkinError(ErrorCode::NotFound, id + " does not exist");
    auto terms = parse_bfile(*body);  // validate before caching
    write_atomically(cached, *body);
    return terms;
}

}  // namespace motzkin

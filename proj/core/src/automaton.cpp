#include "motzkin/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace motzkin {

namespace {

constexpr int kMaxEnumerationLength = 14;

std::size_t layer_index(Layer l) noexcept { return static_cast<std::size_t>(l); }

}  // namespace

char step_char(Step s) noexcept {
    switch (s) {
        case Step::U: return 'U';
        case Step::H: return 'H';
        case Step::D: return 'D';
    }
    return '?';
}

int step_delta(Step s) noexcept {
    switch (s) {
        case Step::U: return 1;
        case Step::H: return 0;
        case Step::D: return -1;
    }
    return 0;
}

Step parse_step(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'U': return Step::U;
        case 'H': return Step::H;
        case 'D': return Step::D;
        default: break;
    }
    throw MotzkinError(ErrorCode::InvalidArgument, std::string("not a step letter: '") + c + "'");
}

char layer_char(Layer l) noexcept {
    switch (l) {
        case Layer::Start: return 'S';
        case Layer::U: return 'U';
        case Layer::H: return 'H';
        case Layer::D: return 'D';
    }
    return '?';
}

Layer parse_layer(char c) {
    if (std::toupper(static_cast<unsigned char>(c)) == 'S') return Layer::Start;
    return layer_of(parse_step(c));
}

Layer layer_of(Step s) noexcept {
    switch (s) {
        case Step::U: return Layer::U;
        case Step::H: return Layer::H;
        case Step::D: return Layer::D;
    }
    return Layer::Start;
}

std::string Bigram::to_string() const { return {step_char(first), step_char(second)}; }

Bigram parse_bigram(std::string_view token) {
    if (token.size() != 2)
        throw MotzkinError(ErrorCode::InvalidArgument, "bigram must have two letters: '" + std::string(token) + "'");
    return {parse_step(token[0]), parse_step(token[1])};
}

PatternPair::PatternPair(Bigram a, Bigram b) : first_(a), second_(b) {
    if (a == b) throw MotzkinError(ErrorCode::InvalidArgument, "the two forbidden bigrams must differ");
    if (second_.to_string() < first_.to_string()) std::swap(first_, second_);
}

PatternPair PatternPair::parse(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == '&' || c == ' ' || c == '/') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    if (tokens.size() != 2)
        throw MotzkinError(ErrorCode::InvalidArgument,
                           "expected exactly two bigrams (e.g. UD,DH), got '" + std::string(text) + "'");
    return PatternPair(parse_bigram(tokens[0]), parse_bigram(tokens[1]));
}

bool PatternPair::forbids(Step prev, Step next) const noexcept {
    const Bigram b{prev, next};
    return b == first_ || b == second_;
}

std::string PatternPair::key() const { return first_.to_string() + "," + second_.to_string(); }

bool Accept::accepts(Layer l, int height) const noexcept {
    switch (kind) {
        case Kind::Excursions: return height == 0;
        case Kind::Meanders: return true;
        case Kind::EndLevel: return height == level;
        case Kind::LayerEnd: return l == layer && (level < 0 || height == level);
    }
    return false;
}

LayeredAutomaton::LayeredAutomaton(PatternPair pair, std::optional<int> height_cap)
    : pair_(pair), cap_(height_cap) {
    if (cap_ && *cap_ < 0) throw MotzkinError(ErrorCode::InvalidArgument, "height cap must be nonnegative");
}

std::optional<LayeredAutomaton::State> LayeredAutomaton::step(const State& from, Step s) const noexcept {
    if (from.layer != Layer::Start) {
        const Step prev = from.layer == Layer::U ? Step::U : from.layer == Layer::H ? Step::H : Step::D;
        if (pair_.forbids(prev, s)) return std::nullopt;
    }
    const int h = from.height + step_delta(s);
    if (h < 0) return std::nullopt;
    if (cap_ && h > *cap_) return std::nullopt;
    return State{layer_of(s), h};
}

std::vector<LayeredAutomaton::State> LayeredAutomaton::reachable_states() const {
    if (!cap_) throw MotzkinError(ErrorCode::InvalidArgument, "reachability needs a finite height cap");
    std::vector<State> seen{State{Layer::Start, 0}};
    std::deque<State> queue{State{Layer::Start, 0}};
    while (!queue.empty()) {
        const State cur = queue.front();
        queue.pop_front();
        for (Step s : kSteps) {
            if (auto next = step(cur, s)) {
                if (std::find(seen.begin(), seen.end(), *next) == seen.end()) {
                    seen.push_back(*next);
                    queue.push_back(*next);
                }
            }
        }
    }
    return seen;
}

LayeredAutomaton build_automaton(const PatternPair& pair, std::optional<int> height_cap) {
    return LayeredAutomaton(pair, height_cap);
}

std::vector<Integer> count_paths(const LayeredAutomaton& automaton, int n_max, const Accept& accept) {
    if (n_max < 0) throw MotzkinError(ErrorCode::InvalidArgument, "n_max must be nonnegative");
    // Heights never exceed n, so an unbounded automaton needs n_max + 1 rows.
    const int top = automaton.height_cap() ? std::min(*automaton.height_cap(), n_max) : n_max;
    const std::size_t rows = static_cast<std::size_t>(top) + 1;
    using Table = std::vector<std::array<Integer, 4>>;
    Table cur(rows), next(rows);
    cur[0][layer_index(Layer::Start)] = 1;

    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        Integer total = 0;
        for (std::size_t h = 0; h < rows; ++h)
            for (Layer l : {Layer::Start, Layer::U, Layer::H, Layer::D})
                if (accept.accepts(l, static_cast<int>(h))) total += cur[h][layer_index(l)];
        out.push_back(total);
        if (n == n_max) break;

        for (auto& row : next)
            for (auto& v : row) v = 0;
        for (std::size_t h = 0; h < rows; ++h) {
            for (Layer l : {Layer::Start, Layer::U, Layer::H, Layer::D}) {
                const Integer& v = cur[h][layer_index(l)];
                if (v == 0) continue;
                for (Step s : kSteps) {
                    auto target = automaton.step({l, static_cast<int>(h)}, s);
                    if (!target || target->height > top) continue;
                    next[static_cast<std::size_t>(target->height)][layer_index(target->layer)] += v;
                }
            }
        }
        std::swap(cur, next);
    }
    return out;
}

std::vector<std::string> enumerate_paths(const PatternPair& pair, int n, const Accept& accept,
                                         std::optional<int> height_cap) {
    if (n > kMaxEnumerationLength)
        throw MotzkinError(ErrorCode::TooLong, "enumeration is limited to n <= " +
                                                   std::to_string(kMaxEnumerationLength));
    if (n < 0) throw MotzkinError(ErrorCode::InvalidArgument, "length must be nonnegative");
    std::vector<std::string> out;
    std::string word;
    // Literal depth-first search over words; checks the constraints directly
    // on the word instead of going through the automaton.
    auto rec = [&](auto&& self, int height) -> void {
        if (static_cast<int>(word.size()) == n) {
            const Layer last = word.empty() ? Layer::Start : parse_layer(word.back());
            if (accept.accepts(last, height)) out.push_back(word);
            return;
        }
        for (Step s : kSteps) {
            if (!word.empty() && pair.forbids(parse_step(word.back()), s)) continue;
            const int h = height + step_delta(s);
            if (h < 0 || (height_cap && h > *height_cap)) continue;
            word.push_back(step_char(s));
            self(self, h);
            word.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Integer> count_height_filtered(const PatternPair& pair, int max_height, int n_max,
                                           const Accept& accept) {
    if (max_height < 0) throw MotzkinError(ErrorCode::InvalidArgument, "height bound must be nonnegative");
    if (n_max < 0) throw MotzkinError(ErrorCode::InvalidArgument, "n_max must be nonnegative");
    const LayeredAutomaton automaton(pair, std::nullopt);
    // State: (layer, height, running maximum) over the unbounded automaton.
    using Key = std::tuple<int, int, int>;
    std::map<Key, Integer> cur{{Key{0, 0, 0}, Integer(1)}};
    std::vector<Integer> out;
    for (int n = 0; n <= n_max; ++n) {
        Integer total = 0;
        for (const auto& [key, v] : cur) {
            const auto [l, h, m] = key;
            if (m <= max_height && accept.accepts(static_cast<Layer>(l), h)) total += v;
        }
        out.push_back(total);
        if (n == n_max) break;
        std::map<Key, Integer> next;
        for (const auto& [key, v] : cur) {
            const auto [l, h, m] = key;
            for (Step s : kSteps) {
                auto target = automaton.step({static_cast<Layer>(l), h}, s);
                if (!target) continue;
                // Paths already above the bound can never come back under it;
                // they are dropped to keep the table small.
                const int nm = std::max(m, target->height);
                if (nm > max_height) continue;
                next[Key{static_cast<int>(target->layer), target->height, nm}] += v;
            }
        }
        cur = std::move(next);
    }
    return out;
}

}  // namespace motzkin

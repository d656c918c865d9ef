#ifndef MOTZKIN_AUTOMATON_HPP
#define MOTZKIN_AUTOMATON_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/algebra.hpp"

namespace motzkin {

enum class Step { U, H, D };
// Layer = the last step taken; Start holds only the empty path.
enum class Layer { Start, U, H, D };

inline constexpr std::array<Step, 3> kSteps{Step::U, Step::H, Step::D};

char step_char(Step s) noexcept;
int step_delta(Step s) noexcept;
Step parse_step(char c);
char layer_char(Layer l) noexcept;  // 'S', 'U', 'H', 'D'
Layer parse_layer(char c);
Layer layer_of(Step s) noexcept;

struct Bigram {
    Step first;
    Step second;

    std::string to_string() const;
    friend bool operator==(const Bigram&, const Bigram&) = default;
};

Bigram parse_bigram(std::string_view token);

// Two distinct forbidden bigrams, stored in canonical (lexicographic) order.
class PatternPair {
public:
    PatternPair(Bigram a, Bigram b);

    // Accepts "UD,DH", "UD DH", "UD&DH" (case-insensitive).
    static PatternPair parse(std::string_view text);

    const Bigram& first() const noexcept { return first_; }
    const Bigram& second() const noexcept { return second_; }
    bool forbids(Step prev, Step next) const noexcept;
    // Canonical key, e.g. "DH,UD".
    std::string key() const;

    friend bool operator==(const PatternPair&, const PatternPair&) = default;

private:
    Bigram first_;
    Bigram second_;
};

// Acceptance predicate for path counting.
struct Accept {
    enum class Kind { Excursions, Meanders, EndLevel, LayerEnd };
    Kind kind = Kind::Excursions;
    int level = 0;               // EndLevel / LayerEnd (negative: any level)
    Layer layer = Layer::Start;  // LayerEnd

    static Accept excursions() { return {Kind::Excursions, 0, Layer::Start}; }
    static Accept meanders() { return {Kind::Meanders, 0, Layer::Start}; }
    static Accept end_level(int j) { return {Kind::EndLevel, j, Layer::Start}; }
    static Accept layer_end(Layer l, int level) { return {Kind::LayerEnd, level, l}; }
    static Accept layer_any_level(Layer l) { return {Kind::LayerEnd, -1, l}; }

    bool accepts(Layer l, int height) const noexcept;
};

// States (layer, height) with step transitions; heights above the cap are
// deleted when a cap is present.
class LayeredAutomaton {
public:
    struct State {
        Layer layer;
        int height;
        friend bool operator==(const State&, const State&) = default;
    };

    LayeredAutomaton(PatternPair pair, std::optional<int> height_cap);

    const PatternPair& pair() const noexcept { return pair_; }
    const std::optional<int>& height_cap() const noexcept { return cap_; }

    // Target of the transition, or nullopt when the step is not allowed.
    std::optional<State> step(const State& from, Step s) const noexcept;
    // States reachable from (Start, 0), by breadth-first search. Requires a cap.
    std::vector<State> reachable_states() const;

private:
    PatternPair pair_;
    std::optional<int> cap_;
};

LayeredAutomaton build_automaton(const PatternPair& pair, std::optional<int> height_cap);

// a(0..n_max) by forward dynamic programming over the automaton states.
std::vector<Integer> count_paths(const LayeredAutomaton& automaton, int n_max, const Accept& accept);

// Every accepted word of length n (n <= 14), in lexicographic U<H<D order.
std::vector<std::string> enumerate_paths(const PatternPair& pair, int n, const Accept& accept,
                                         std::optional<int> height_cap = std::nullopt);

// Paths of the unbounded automaton whose maximum height is <= max_height.
// Tracks the running maximum explicitly instead of deleting states.
std::vector<Integer> count_height_filtered(const PatternPair& pair, int max_height, int n_max,
                                           const Accept& accept);

}  // namespace motzkin

#endif  // MOTZKIN_AUTOMATON_HPP

#pragma once

// Coloring calculus on a link diagram.
//
// A state assigns colors to a subset of strands. Seeds give a strand a fresh
// color; a coloring move copies the color of one under-strand of a crossing
// to the other when the over-strand is colored. A crossing is special once
// its over-strand and both under-strands are colored and either
//   - the two under-strands carry different colors (type I), or
//   - the under-component is a single color and the crossing closes it, i.e.
//     it joins the last strand of the component to be colored to the
//     neighbor it did not inherit its color from (type II).
// A strand that is its own neighbor, or a component with no under-pass,
// contributes one degenerate special. Every seed raises the running value by
// 2 and every special lowers it by 2; specials are recorded the moment their
// condition first holds, immediately after the event that enabled them.

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkwidth/bitset.hpp"
#include "linkwidth/diagram.hpp"

namespace linkwidth {

class ColoringError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class SpecialKind : std::uint8_t { TypeI, TypeII, Degenerate };

const char* to_string(SpecialKind kind);

struct Event {
    enum class Kind : std::uint8_t { Seed, Special };

    Kind kind = Kind::Seed;
    int id = 0;  // strand for seeds; crossing for specials (-1: closed-curve strand)
    SpecialKind special = SpecialKind::TypeI;
    int value_after = 0;

    static Event seed(StrandId s, int value) { return {Kind::Seed, s, SpecialKind::TypeI, value}; }
    static Event special_at(CrossingId x, SpecialKind k, int value) { return {Kind::Special, x, k, value}; }

    bool is_seed() const { return kind == Kind::Seed; }

    friend bool operator==(const Event&, const Event&) = default;
};

using EventSequence = std::vector<Event>;

// Level values of a sequence, sorted in non-increasing order.
class WidthMultiset {
public:
    WidthMultiset() = default;
    explicit WidthMultiset(std::vector<int> values);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int sum() const;
    int max() const { return entries_.empty() ? 0 : entries_.front(); }

    WidthMultiset merged(const WidthMultiset& other) const;
    std::string to_string() const;  // "{6,6,4}"

    friend bool operator==(const WidthMultiset&, const WidthMultiset&) = default;
    friend std::strong_ordering operator<=>(const WidthMultiset& a, const WidthMultiset& b);

private:
    std::vector<int> entries_;
};

// Entry-wise on the descending order; a proper prefix is smaller.
std::strong_ordering lex_compare(const WidthMultiset& a, const WidthMultiset& b);

struct Widths {
    WidthMultiset lex;
    int sum = 0;
    int trunk = 0;
};

// The final value of a completed sequence is always 0 and is not part of the
// multiset. Throws ColoringError unless the sequence is non-empty, balanced
// and ends at 0.
Widths widths_of_sequence(const EventSequence& events);

// Number of maximal runs of consecutive seed events.
int count_chains(const EventSequence& events);

struct ColoringOptions {
    bool detect_type_two = true;
};

struct FiredSpecial {
    CrossingId crossing = -1;  // -1 for a closed-curve strand
    SpecialKind kind = SpecialKind::TypeI;
    int stage = 0;
};

class ColoringState {
public:
    explicit ColoringState(const LinkDiagram& diagram, ColoringOptions options = {});

    const LinkDiagram& diagram() const { return *diagram_; }
    const ColoringOptions& options() const { return options_; }

    bool is_colored(StrandId s) const { return colored_.test(s); }
    std::optional<int> color_of(StrandId s) const;
    const IndexSet& colored() const { return colored_; }
    int colored_count() const { return colored_.count(); }
    bool complete() const { return colored_.covers(diagram_->strand_count()); }

    const std::vector<std::pair<StrandId, int>>& seeds() const { return seeds_; }
    const std::vector<FiredSpecial>& fired_specials() const { return fired_; }
    bool is_fired(CrossingId x) const { return fired_set_.test(x); }
    const EventSequence& events() const { return events_; }
    int stage() const { return stage_; }
    int value() const { return value_; }

    // Over-strand colored and exactly one under-strand colored.
    bool can_move(CrossingId x) const;
    std::vector<CrossingId> enabled_moves() const;

    std::optional<SpecialKind> detect_special(CrossingId x) const;

    void seed(StrandId s);
    void move(CrossingId x);

    // Applies the enabled move with the smallest crossing id until none is left.
    void close();
    // Same, choosing uniformly among enabled moves.
    void close(std::mt19937_64& rng);

    // Colors renamed by order of first use along strand ids.
    std::vector<int> canonical_colors() const;

    // Throws std::logic_error on a broken state invariant.
    void check_invariants() const;

private:
    void color(StrandId s, int c, CrossingId source);
    void fire_enabled_specials();
    void after_transition();

    const LinkDiagram* diagram_;
    ColoringOptions options_;
    IndexSet colored_;
    IndexSet fired_set_;
    std::vector<int> color_;         // -1 when uncolored
    std::vector<int> colored_at_;    // stage at which the strand was colored
    std::vector<CrossingId> source_; // crossing the color arrived through, -1 for seeds
    std::vector<std::pair<StrandId, int>> seeds_;
    std::vector<FiredSpecial> fired_;
    EventSequence events_;
    int stage_ = 0;
    int value_ = 0;
    int next_color_ = 0;
};

ColoringState add_seed(ColoringState state, StrandId s);
ColoringState coloring_move(ColoringState state, CrossingId x);
ColoringState closure(ColoringState state);
std::optional<SpecialKind> detect_special(const ColoringState& state, CrossingId x);

// Process-wide switch: when enabled every state transition runs
// check_invariants(). Used by the test suites.
namespace debug {
void enable_invariant_checks(bool on);
bool invariant_checks_enabled();
std::uint64_t invariant_checks_performed();
}  // namespace debug

}  // namespace linkwidth

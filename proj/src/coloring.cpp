#include "linkwidth/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace linkwidth {

namespace {
std::atomic<bool> g_checks{false};
std::atomic<std::uint64_t> g_checks_done{0};
}  // namespace

namespace debug {
void enable_invariant_checks(bool on) { g_checks.store(on); }
bool invariant_checks_enabled() { return g_checks.load(std::memory_order_relaxed); }
std::uint64_t invariant_checks_performed() { return g_checks_done.load(); }
}  // namespace debug

const char* to_string(SpecialKind kind) {
    switch (kind) {
        case SpecialKind::TypeI: return "I";
        case SpecialKind::TypeII: return "II";
        case SpecialKind::Degenerate: return "D";
    }
    return "?";
}

WidthMultiset::WidthMultiset(std::vector<int> values) : entries_(std::move(values)) {
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

int WidthMultiset::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

WidthMultiset WidthMultiset::merged(const WidthMultiset& other) const {
    WidthMultiset out;
    out.entries_.resize(entries_.size() + other.entries_.size());
    std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
               out.entries_.begin(), std::greater<>());
    return out;
}

std::string WidthMultiset::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s + "}";
}

std::strong_ordering operator<=>(const WidthMultiset& a, const WidthMultiset& b) {
    return lex_compare(a, b);
}

std::strong_ordering lex_compare(const WidthMultiset& a, const WidthMultiset& b) {
    const auto& x = a.entries();
    const auto& y = b.entries();
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) return x[i] <=> y[i];
    }
    return x.size() <=> y.size();
}

Widths widths_of_sequence(const EventSequence& events) {
    if (events.empty()) throw ColoringError("empty event sequence");
    int seeds = 0;
    int specials = 0;
    std::vector<int> values;
    values.reserve(events.size());
    for (const auto& e : events) {
        (e.is_seed() ? seeds : specials) += 1;
        values.push_back(e.value_after);
    }
    if (seeds != specials || values.back() != 0) {
        throw ColoringError("sequence is not completed: " + std::to_string(seeds) + " seeds, " +
                            std::to_string(specials) + " specials");
    }
    values.pop_back();
    Widths w;
    w.lex = WidthMultiset(std::move(values));
    w.sum = w.lex.sum();
    w.trunk = w.lex.max();
    return w;
}

int count_chains(const EventSequence& events) {
    int chains = 0;
    bool in_run = false;
    for (const auto& e : events) {
        if (e.is_seed() && !in_run) ++chains;
        in_run = e.is_seed();
    }
    return chains;
}

ColoringState::ColoringState(const LinkDiagram& diagram, ColoringOptions options)
    : diagram_(&diagram), options_(options) {
    if (diagram.strand_count() > IndexSet::kCapacity || diagram.crossing_count() > IndexSet::kCapacity) {
        throw std::length_error("diagram exceeds " + std::to_string(IndexSet::kCapacity) + " strands or crossings");
    }
    const auto n = static_cast<std::size_t>(diagram.strand_count());
    color_.assign(n, -1);
    colored_at_.assign(n, -1);
    source_.assign(n, -1);
}

std::optional<int> ColoringState::color_of(StrandId s) const {
    if (color_[s] < 0) return std::nullopt;
    return color_[s];
}

bool ColoringState::can_move(CrossingId x) const {
    const Crossing& c = diagram_->crossing(x);
    return colored_.test(c.over) && (colored_.test(c.under_in) != colored_.test(c.under_out));
}

std::vector<CrossingId> ColoringState::enabled_moves() const {
    std::vector<CrossingId> out;
    for (CrossingId x = 0; x < diagram_->crossing_count(); ++x) {
        if (can_move(x)) out.push_back(x);
    }
    return out;
}

std::optional<SpecialKind> ColoringState::detect_special(CrossingId x) const {
    const Crossing& c = diagram_->crossing(x);
    if (!colored_.test(c.over) || !colored_.test(c.under_in) || !colored_.test(c.under_out)) return std::nullopt;
    if (c.under_in == c.under_out) return SpecialKind::Degenerate;
    if (color_[c.under_in] != color_[c.under_out]) return SpecialKind::TypeI;
    if (!options_.detect_type_two) return std::nullopt;

    const auto& comp = diagram_->component_strands(c.component_under);
    StrandId last = comp.front();
    for (StrandId s : comp) {
        if (!colored_.test(s) || color_[s] != color_[c.under_in]) return std::nullopt;
        if (colored_at_[s] > colored_at_[last]) last = s;
    }
    if (c.under_in != last && c.under_out != last) return std::nullopt;
    if (source_[last] == x) return std::nullopt;
    return SpecialKind::TypeII;
}

void ColoringState::color(StrandId s, int c, CrossingId source) {
    color_[s] = c;
    colored_.set(s);
    colored_at_[s] = stage_;
    source_[s] = source;
}

void ColoringState::seed(StrandId s) {
    if (s < 0 || s >= diagram_->strand_count()) throw ColoringError("no strand " + std::to_string(s));
    if (colored_.test(s)) throw ColoringError("strand " + std::to_string(s) + " is already colored");
    const int c = next_color_++;
    color(s, c, -1);
    seeds_.emplace_back(s, c);
    value_ += 2;
    events_.push_back(Event::seed(s, value_));
    if (diagram_->strand(s).closed) {
        fired_.push_back({-1, SpecialKind::Degenerate, stage_});
        value_ -= 2;
        events_.push_back(Event::special_at(-1, SpecialKind::Degenerate, value_));
    }
    after_transition();
}

void ColoringState::move(CrossingId x) {
    if (x < 0 || x >= diagram_->crossing_count()) throw ColoringError("no crossing " + std::to_string(x + 1));
    const Crossing& c = diagram_->crossing(x);
    if (!colored_.test(c.over)) {
        throw ColoringError("over-strand of crossing " + std::to_string(x + 1) + " is uncolored");
    }
    const bool in = colored_.test(c.under_in);
    const bool out = colored_.test(c.under_out);
    if (in == out) {
        throw ColoringError(std::string(in ? "both" : "neither") + " under-strand of crossing " +
                            std::to_string(x + 1) + (in ? " are" : " is") + " colored");
    }
    if (in) color(c.under_out, color_[c.under_in], x);
    else color(c.under_in, color_[c.under_out], x);
    after_transition();
}

void ColoringState::after_transition() {
    fire_enabled_specials();
    ++stage_;
    if (debug::invariant_checks_enabled()) {
        check_invariants();
        g_checks_done.fetch_add(1, std::memory_order_relaxed);
    }
}

void ColoringState::fire_enabled_specials() {
    for (CrossingId x = 0; x < diagram_->crossing_count(); ++x) {
        if (fired_set_.test(x)) continue;
        if (auto kind = detect_special(x)) {
            fired_set_.set(x);
            fired_.push_back({x, *kind, stage_});
            value_ -= 2;
            events_.push_back(Event::special_at(x, *kind, value_));
        }
    }
}

void ColoringState::close() {
    bool progress = true;
    while (progress) {
        progress = false;
        for (CrossingId x = 0; x < diagram_->crossing_count(); ++x) {
            if (can_move(x)) {
                move(x);
                progress = true;
                break;
            }
        }
    }
}

void ColoringState::close(std::mt19937_64& rng) {
    while (true) {
        auto moves = enabled_moves();
        if (moves.empty()) return;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        move(moves[pick(rng)]);
    }
}

std::vector<int> ColoringState::canonical_colors() const {
    std::vector<int> renamed(static_cast<std::size_t>(next_color_), -1);
    std::vector<int> out(color_.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < color_.size(); ++s) {
        if (color_[s] < 0) continue;
        if (renamed[color_[s]] < 0) renamed[color_[s]] = next++;
        out[s] = renamed[color_[s]];
    }
    return out;
}

void ColoringState::check_invariants() const {
    const int n = diagram_->strand_count();
    // Each color class is connected through under-strand adjacency.
    std::vector<int> class_size(static_cast<std::size_t>(next_color_), 0);
    std::vector<StrandId> first(static_cast<std::size_t>(next_color_), -1);
    for (StrandId s = 0; s < n; ++s) {
        if (color_[s] < 0) continue;
        if (!colored_.test(s)) throw std::logic_error("color map and colored set disagree");
        class_size[color_[s]] += 1;
        if (first[color_[s]] < 0) first[color_[s]] = s;
    }
    for (int c = 0; c < next_color_; ++c) {
        if (class_size[c] == 0) throw std::logic_error("color " + std::to_string(c) + " has no strands");
        std::vector<StrandId> stack{first[c]};
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        seen[first[c]] = true;
        int reached = 0;
        while (!stack.empty()) {
            const StrandId s = stack.back();
            stack.pop_back();
            ++reached;
            for (auto nb : {diagram_->tail_neighbor(s), diagram_->head_neighbor(s)}) {
                if (nb && !seen[*nb] && color_[*nb] == c) {
                    seen[*nb] = true;
                    stack.push_back(*nb);
                }
            }
        }
        if (reached != class_size[c]) {
            throw std::logic_error("color " + std::to_string(c) + " is not a connected arc");
        }
    }
    int seeds = 0;
    int specials = 0;
    for (const auto& e : events_) {
        (e.is_seed() ? seeds : specials) += 1;
        if (e.value_after < 0 || e.value_after % 2 != 0) throw std::logic_error("running value odd or negative");
    }
    if (value_ != 2 * (seeds - specials)) throw std::logic_error("running value out of step with events");
    if (seeds != static_cast<int>(seeds_.size()) || specials != static_cast<int>(fired_.size())) {
        throw std::logic_error("event log out of step with seeds/specials");
    }
    if (fired_set_.count() + std::count_if(fired_.begin(), fired_.end(), [](const FiredSpecial& f) {
            return f.crossing < 0;
        }) != static_cast<long>(fired_.size())) {
        throw std::logic_error("a crossing fired more than once");
    }
}

ColoringState add_seed(ColoringState state, StrandId s) {
    state.seed(s);
    return state;
}

ColoringState coloring_move(ColoringState state, CrossingId x) {
    state.move(x);
    return state;
}

ColoringState closure(ColoringState state) {
    state.close();
    return state;
}

std::optional<SpecialKind> detect_special(const ColoringState& state, CrossingId x) {
    return state.detect_special(x);
}

}  // namespace linkwidth

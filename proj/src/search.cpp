#include "linkwidth/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <unordered_map>

#include "linkwidth/certificate.hpp"

namespace linkwidth {

const char* to_string(Objective objective) {
    switch (objective) {
        case Objective::Lex: return "lex";
        case Objective::Sum: return "sum";
        case Objective::Trunk: return "trunk";
    }
    return "?";
}

const char* to_string(ResultStatus status) {
    switch (status) {
        case ResultStatus::Exact: return "exact";
        case ResultStatus::UpperBound: return "upper";
        case ResultStatus::Bounded: return "bounded";
    }
    return "?";
}

IndexSet close_strands(const LinkDiagram& d, IndexSet colored) {
    const auto& xs = d.crossings();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Crossing& c : xs) {
            if (!colored.test(c.over)) continue;
            const bool in = colored.test(c.under_in);
            if (in != colored.test(c.under_out)) {
                colored.set(in ? c.under_out : c.under_in);
                changed = true;
            }
        }
    }
    return colored;
}

std::vector<StrandId> seed_candidate_order(const LinkDiagram& d) {
    std::vector<StrandId> order(static_cast<std::size_t>(d.strand_count()));
    for (StrandId s = 0; s < d.strand_count(); ++s) order[s] = s;
    std::stable_sort(order.begin(), order.end(), [&](StrandId a, StrandId b) {
        return d.strand(a).over_crossings.size() > d.strand(b).over_crossings.size();
    });
    return order;
}

namespace {

void require_indexable(const LinkDiagram& d) {
    if (d.strand_count() > IndexSet::kCapacity || d.crossing_count() > IndexSet::kCapacity) {
        throw std::length_error("diagram exceeds " + std::to_string(IndexSet::kCapacity) + " strands or crossings");
    }
}

class WirtingerSearch {
public:
    WirtingerSearch(const LinkDiagram& d, int k) : d_(d), k_(k), order_(seed_candidate_order(d)) {}

    std::optional<std::vector<StrandId>> run() {
        chosen_.clear();
        if (extend(0, IndexSet{}, 0)) return chosen_;
        return std::nullopt;
    }

private:
    bool extend(std::size_t from, const IndexSet& closed, int seeded_components) {
        if (static_cast<int>(chosen_.size()) == k_) return closed.covers(d_.strand_count());
        const int remaining = k_ - static_cast<int>(chosen_.size());
        if (d_.component_count() - seeded_components > remaining) return false;
        for (std::size_t i = from; i < order_.size(); ++i) {
            const StrandId s = order_[i];
            // A strand inside the current closure adds nothing; the smaller
            // set was already rejected.
            if (closed.test(s)) continue;
            IndexSet next = closed;
            next.set(s);
            next = close_strands(d_, next);
            const int comp = d_.strand(s).component;
            bool fresh = true;
            for (StrandId t : d_.component_strands(comp)) {
                if (closed.test(t)) {
                    fresh = false;
                    break;
                }
            }
            chosen_.push_back(s);
            if (extend(i + 1, next, seeded_components + (fresh ? 1 : 0))) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const LinkDiagram& d_;
    int k_;
    std::vector<StrandId> order_;
    std::vector<StrandId> chosen_;
};

struct MemoKey {
    IndexSet colored;
    int seeds = 0;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        return k.colored.hash() ^ (static_cast<std::size_t>(k.seeds) * 0x9E3779B97F4A7C15ull);
    }
};

struct BudgetExceeded {};

// Dynamic program over closed colored sets. The future of a state depends
// only on its colored set, so each set is solved once.
class ExactSearch {
public:
    ExactSearch(const LinkDiagram& d, Objective objective, const SearchBudget& budget,
                const ColoringOptions& options)
        : d_(d),
          objective_(objective),
          budget_(budget),
          options_(options),
          order_(seed_candidate_order(d)),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.time_limit))) {}

    struct Entry {
        bool feasible = false;
        int sum = 0;
        int peak = 0;
        WidthMultiset lex;
        StrandId best = -1;
    };

    // Returns the optimal seed order, or throws BudgetExceeded.
    std::vector<StrandId> solve_root() {
        ColoringState root(d_, options_);
        root.close();
        const Entry& e = solve(root);
        if (!e.feasible) throw SearchError("no completed coloring sequence exists under the current options");
        std::vector<StrandId> seeds;
        ColoringState st = root;
        while (!st.complete()) {
            const Entry& step = memo_.at(key_of(st));
            seeds.push_back(step.best);
            st.seed(step.best);
            st.close();
        }
        return seeds;
    }

    std::size_t states() const { return memo_.size(); }
    bool truncated() const { return truncated_; }

private:
    MemoKey key_of(const ColoringState& st) const {
        return {st.colored(), budget_.max_seeds > 0 ? static_cast<int>(st.seeds().size()) : 0};
    }

    bool better(const Entry& a, const Entry& b) const {
        if (!b.feasible) return a.feasible;
        if (!a.feasible) return false;
        switch (objective_) {
            case Objective::Lex: return a.lex < b.lex;
            case Objective::Sum:
                if (a.sum != b.sum) return a.sum < b.sum;
                return a.lex < b.lex;
            case Objective::Trunk:
                if (a.peak != b.peak) return a.peak < b.peak;
                return a.lex < b.lex;
        }
        return false;
    }

    const Entry& solve(const ColoringState& st) {
        const MemoKey key = key_of(st);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (memo_.size() >= budget_.max_states) throw BudgetExceeded{};
        if ((++expansions_ & 63) == 0 && std::chrono::steady_clock::now() > deadline_) throw BudgetExceeded{};

        Entry best;
        if (st.complete()) {
            best.feasible = st.value() == 0;
            return memo_.emplace(key, std::move(best)).first->second;
        }
        const std::size_t before = st.events().size();
        for (StrandId s : order_) {
            if (st.is_colored(s)) continue;
            if (budget_.max_seeds > 0 && static_cast<int>(st.seeds().size()) >= budget_.max_seeds) {
                truncated_ = true;
                break;
            }
            ColoringState next = st;
            next.seed(s);
            next.close();
            const Entry& child = solve(next);
            if (!child.feasible) continue;

            Entry cand;
            cand.feasible = true;
            cand.best = s;
            std::vector<int> segment;
            for (std::size_t i = before; i < next.events().size(); ++i) segment.push_back(next.events()[i].value_after);
            cand.peak = child.peak;
            cand.sum = child.sum;
            for (int v : segment) {
                cand.peak = std::max(cand.peak, v);
                cand.sum += v;
            }
            cand.lex = child.lex.merged(WidthMultiset(std::move(segment)));
            if (better(cand, best)) best = std::move(cand);
        }
        return memo_.emplace(key, std::move(best)).first->second;
    }

    const LinkDiagram& d_;
    Objective objective_;
    SearchBudget budget_;
    ColoringOptions options_;
    std::vector<StrandId> order_;
    std::chrono::steady_clock::time_point deadline_;
    std::unordered_map<MemoKey, Entry, MemoKeyHash> memo_;
    std::uint64_t expansions_ = 0;
    bool truncated_ = false;
};

// Lower is better, following the objective with the lex multiset as tie-break.
bool better_widths(const Widths& a, const Widths& b, Objective objective) {
    switch (objective) {
        case Objective::Lex: return a.lex < b.lex;
        case Objective::Sum: return a.sum != b.sum ? a.sum < b.sum : a.lex < b.lex;
        case Objective::Trunk: return a.trunk != b.trunk ? a.trunk < b.trunk : a.lex < b.lex;
    }
    return false;
}

// Greedy: repeatedly take the seed whose closure leaves the lowest running
// value, preferring larger closures.
std::vector<StrandId> greedy_seeds(const LinkDiagram& d, const ColoringOptions& options) {
    ColoringState st(d, options);
    st.close();
    std::vector<StrandId> seeds;
    const auto order = seed_candidate_order(d);
    while (!st.complete()) {
        std::optional<ColoringState> best;
        StrandId best_seed = -1;
        for (StrandId s : order) {
            if (st.is_colored(s)) continue;
            ColoringState next = st;
            next.seed(s);
            next.close();
            if (!best || next.value() < best->value() ||
                (next.value() == best->value() && next.colored_count() > best->colored_count())) {
                best = std::move(next);
                best_seed = s;
            }
        }
        seeds.push_back(best_seed);
        st = std::move(*best);
    }
    return seeds;
}

}  // namespace

std::optional<WirtingerWitness> wirtinger_upper(const LinkDiagram& d, int k_max) {
    require_indexable(d);
    if (d.empty()) return WirtingerWitness{0, {}};
    for (int k = std::max(1, d.component_count()); k <= std::min(k_max, d.strand_count()); ++k) {
        if (auto seeds = WirtingerSearch(d, k).run()) return WirtingerWitness{k, std::move(*seeds)};
    }
    return std::nullopt;
}

WidthResult exact_widths(const LinkDiagram& d, Objective objective, const SearchBudget& budget,
                         const ColoringOptions& options) {
    if (d.empty()) throw SearchError("empty diagram");
    require_indexable(d);

    WidthResult result;
    result.components = d.component_count();
    const auto witness = wirtinger_upper(d, d.strand_count());
    result.wirtinger_upper = witness ? witness->k : d.strand_count();

    // Incumbents, used when the exhaustive search runs out of budget.
    std::optional<Widths> best;
    EventSequence best_events;
    auto offer = [&](const std::vector<StrandId>& seeds) {
        ColoringState st = canonical_sequence(d, seeds, options);
        if (!st.complete()) return;
        Widths w;
        try {
            w = widths_of_sequence(st.events());
        } catch (const ColoringError&) {
            return;
        }
        if (budget.max_seeds > 0 && static_cast<int>(st.seeds().size()) > budget.max_seeds) return;
        if (!best || better_widths(w, *best, objective)) {
            best = w;
            best_events = st.events();
        }
    };
    if (witness) offer(witness->seeds);
    offer(greedy_seeds(d, options));

    ExactSearch search(d, objective, budget, options);
    try {
        const auto seeds = search.solve_root();
        ColoringState st = canonical_sequence(d, seeds, options);
        best = widths_of_sequence(st.events());
        best_events = st.events();
        result.status = search.truncated() ? ResultStatus::Bounded : ResultStatus::Exact;
    } catch (const BudgetExceeded&) {
        result.status = ResultStatus::Bounded;
    } catch (const SearchError&) {
        if (!search.truncated()) throw;
        result.status = ResultStatus::Bounded;
    }
    if (!best) throw SearchError("no completed coloring sequence found within budget");
    result.states = search.states();
    result.lex = best->lex;
    result.sum = best->sum;
    result.trunk = best->trunk;
    result.certificate = std::move(best_events);
    return result;
}

std::optional<EventSequence> staged_trunk6(const LinkDiagram& d, const ColoringOptions& options) {
    require_indexable(d);
    const int n = d.strand_count();
    if (n < 4) return std::nullopt;
    const auto order = seed_candidate_order(d);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                IndexSet three;
                three.set(order[a]);
                three.set(order[b]);
                three.set(order[c]);
                const IndexSet closed = close_strands(d, three);
                if (closed.covers(n)) continue;
                const std::vector<StrandId> first{order[a], order[b], order[c]};
                const ColoringState stalled = canonical_sequence(d, first, options);
                if (stalled.fired_specials().empty()) continue;
                for (StrandId t : order) {
                    if (closed.test(t)) continue;
                    IndexSet four = closed;
                    four.set(t);
                    if (!close_strands(d, four).covers(n)) continue;
                    const std::vector<StrandId> seeds{order[a], order[b], order[c], t};
                    ColoringState st = canonical_sequence(d, seeds, options);
                    try {
                        if (widths_of_sequence(st.events()).trunk <= 6) return st.events();
                    } catch (const ColoringError&) {
                        // Unbalanced: a component never closed up.
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace linkwidth

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "linkwidth/bitset.hpp"
#include "linkwidth/coloring.hpp"

namespace linkwidth {

class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Objective { Lex, Sum, Trunk };

const char* to_string(Objective objective);

struct SearchBudget {
    std::size_t max_states = 4'000'000;  // memoized closure states
    int max_seeds = 0;                   // 0: no cap
    double time_limit = 600.0;           // seconds
};

enum class ResultStatus { Exact, UpperBound, Bounded };

const char* to_string(ResultStatus status);

struct WidthResult {
    ResultStatus status = ResultStatus::Bounded;
    WidthMultiset lex;
    int sum = 0;
    int trunk = 0;
    EventSequence certificate;
    int wirtinger_upper = 0;
    int components = 0;
    std::size_t states = 0;
};

struct WirtingerWitness {
    int k = 0;
    std::vector<StrandId> seeds;
};

// Strands colored by repeatedly applying coloring moves from `seeds`.
IndexSet close_strands(const LinkDiagram& d, IndexSet seeds);

// Seed candidates by decreasing number of over-crossings, then id.
std::vector<StrandId> seed_candidate_order(const LinkDiagram& d);

// Smallest k <= k_max for which k simultaneous seeds color the diagram.
std::optional<WirtingerWitness> wirtinger_upper(const LinkDiagram& d, int k_max);

// Minimizes the objective over completed sequences that close the state
// before every seed. Memoized on the colored strand set, whose closure and
// special count do not depend on move order.
WidthResult exact_widths(const LinkDiagram& d, Objective objective, const SearchBudget& budget = {},
                         const ColoringOptions& options = {});

// Three seeds whose closure fires a special without coloring everything,
// then a fourth seed after which closure colors everything. The returned
// sequence is the canonical replay of those four seeds.
std::optional<EventSequence> staged_trunk6(const LinkDiagram& d, const ColoringOptions& options = {});

// Every completed sequence of individual seed additions and coloring moves,
// with no closure canonicalization. Exponential; refuses diagrams with more
// than `limit` strands.
std::set<WidthMultiset> naive_enumerate(const LinkDiagram& d, int limit = 8, const ColoringOptions& options = {});

}  // namespace linkwidth

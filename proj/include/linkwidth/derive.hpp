#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkwidth/coloring.hpp"
#include "linkwidth/diagram.hpp"
#include "linkwidth/search.hpp"

namespace linkwidth {

// Facts about a link that the tool consumes but never infers.
struct LinkMetadata {
    std::string name;
    std::optional<bool> is_prime;
    std::optional<int> bridge_lower;
    std::string provenance;
};

struct ThickThin {
    std::vector<int> thick;  // non-increasing
    std::vector<int> thin;
};

// Value after a seed that is followed by a special is thick; value after a
// special that is followed by a seed is thin.
ThickThin thick_thin(const EventSequence& events);

// A link fits in the (m x n)-tube iff its trunk is below (m+1)(n+1).
bool tube_fits(int trunk, int m, int n);

struct DbcBound {
    std::vector<int> bound;   // a - 3 per thick entry, 0 for spheres
    std::vector<int> genera;  // a/2 - 1
};

// Double-branched-cover width bound from thick level sizes.
DbcBound dbc_bound(std::span<const int> thick);

struct TrunkStatus {
    enum class Kind { Exact, Upper };

    Kind kind = Kind::Upper;
    int value = 0;
    std::string rule;

    std::string to_string() const;  // "exact(2-bridge)", "upper(certificate)", ...
};

// Exact values need both a certificate of that trunk and the matching
// metadata hypothesis; everything else is reported as an upper bound.
// `staged_certificate` marks a trunk-6 certificate from the staged search.
TrunkStatus classify_trunk(const WidthResult& result, const LinkMetadata& meta, bool staged_certificate = false);

struct DerivedReport {
    ThickThin levels;
    int height = 0;
    bool tube_3x1 = false;
    DbcBound dbc;
    TrunkStatus trunk_status;
};

DerivedReport derive_report(const EventSequence& lex_certificate, int trunk, const TrunkStatus& status);

using WidthEngine = std::function<WidthResult(const LinkDiagram&)>;

struct ReducedWidths {
    WidthMultiset lex;
    int sum = 0;
    int trunk = 0;
    // The inserted pair for each removed component is a convention, not a
    // computed value: {2,0} for a closed-curve component, {4,2} for one
    // with a self-adjacent strand.
    bool convention_dependent = false;
    std::vector<CutSplitWitness> removed;
    WidthResult base;
};

// Removes witnessed components one at a time until the diagram has one
// component or no witness, runs `engine` on what is left, and re-inserts a
// pair of entries per removed component.
ReducedWidths cut_split_reduce(const LinkDiagram& d, const WidthEngine& engine);

}  // namespace linkwidth

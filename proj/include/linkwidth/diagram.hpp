#pragma once

#include <optional>
#include <vector>

#include "linkwidth/codec.hpp"

namespace linkwidth {

using StrandId = int;
using CrossingId = int;  // 0-based; the Gauss label is id + 1

struct Crossing {
    CrossingId id = 0;
    StrandId over = 0;
    StrandId under_in = 0;   // strand ending at this under-pass
    StrandId under_out = 0;  // strand starting at this under-pass
    int component_over = 0;
    int component_under = 0;

    int label() const { return id + 1; }
};

struct Strand {
    StrandId id = 0;
    int component = 0;
    std::vector<CrossingId> over_crossings;  // in traversal order
    std::optional<CrossingId> tail;          // under-pass where the strand starts
    std::optional<CrossingId> head;          // under-pass where it ends
    bool closed = false;                     // no under-pass on the whole component
};

struct CutSplitWitness {
    enum class Kind { SelfAdjacentStrand, ClosedCurveStrand };

    Kind kind = Kind::SelfAdjacentStrand;
    StrandId strand = 0;
    std::optional<CrossingId> crossing;
    int component = 0;

    friend bool operator==(const CutSplitWitness&, const CutSplitWitness&) = default;
};

// Strand/crossing incidence structure of a diagram. Strand ids follow
// traversal order, component by component, each component starting at the
// strand that leaves its first under-pass.
class LinkDiagram {
public:
    LinkDiagram() = default;
    explicit LinkDiagram(GaussCode code);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Strand>& strands() const { return strands_; }
    const Crossing& crossing(CrossingId id) const { return crossings_[id]; }
    const Strand& strand(StrandId id) const { return strands_[id]; }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int strand_count() const { return static_cast<int>(strands_.size()); }
    int component_count() const { return static_cast<int>(component_strands_.size()); }
    bool empty() const { return component_strands_.empty(); }

    const std::vector<StrandId>& component_strands(int component) const { return component_strands_[component]; }

    // Strands adjacent at the tail/head under-pass. May be the strand itself.
    std::optional<StrandId> tail_neighbor(StrandId s) const;
    std::optional<StrandId> head_neighbor(StrandId s) const;

    const GaussCode& gauss() const { return code_; }

private:
    GaussCode code_;
    std::vector<Crossing> crossings_;
    std::vector<Strand> strands_;
    std::vector<std::vector<StrandId>> component_strands_;
};

LinkDiagram build_diagram(const GaussCode& code);

std::vector<CutSplitWitness> detect_cut_split(const LinkDiagram& d);

// Deletes component c together with every crossing it takes part in. Where
// c passed over another component the two under-adjacent strands fuse.
LinkDiagram remove_component(const LinkDiagram& d, int c);

}  // namespace linkwidth

#pragma once

// Replayable text certificates for event sequences.
//
//   # linkwidth certificate
//   name L10n35
//   gauss O1,U2,...
//   sequence trunk
//   S 0 2
//   X 3 I 0
//   end
//
// Strands are numbered from 0 in traversal order; crossings use their Gauss
// labels. "X - D" is the special of a strand that is a closed curve. The last
// number on an event line is the running value after the event. A file may
// hold several named sequences.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkwidth/coloring.hpp"

namespace linkwidth {

struct NamedSequence {
    std::string label;
    EventSequence events;
};

struct Certificate {
    std::string name;
    GaussCode code;
    std::vector<NamedSequence> sequences;
};

std::string write_events(const EventSequence& events);
EventSequence read_events(std::string_view text);

std::string write_certificate(const Certificate& cert);
Certificate read_certificate(std::string_view text);

// Seeds in order, closing the state before each seed and after the last one.
// Seeds that are already colored when their turn comes are skipped.
ColoringState canonical_sequence(const LinkDiagram& d, std::span<const StrandId> seed_order,
                                 const ColoringOptions& options = {});

struct ReplayResult {
    bool ok = false;
    std::string message;
    Widths widths;
};

// Re-runs the seeds of `events` canonically and checks that the identical
// event sequence, values included, comes out and colors every strand.
ReplayResult replay(const LinkDiagram& d, const EventSequence& events, const ColoringOptions& options = {});

// Replays every sequence of the certificate against its own Gauss code.
std::vector<ReplayResult> verify_certificate(const Certificate& cert, const ColoringOptions& options = {});

}  // namespace linkwidth

#include "linkwidth/search.hpp"

namespace linkwidth {

namespace {

void enumerate_from(const ColoringState& st, std::set<WidthMultiset>& out) {
    if (st.complete()) {
        if (st.value() == 0) out.insert(widths_of_sequence(st.events()).lex);
        return;
    }
    const LinkDiagram& d = st.diagram();
    for (StrandId s = 0; s < d.strand_count(); ++s) {
        if (st.is_colored(s)) continue;
        ColoringState next = st;
        next.seed(s);
        enumerate_from(next, out);
    }
    for (CrossingId x = 0; x < d.crossing_count(); ++x) {
        if (!st.can_move(x)) continue;
        ColoringState next = st;
        next.move(x);
        enumerate_from(next, out);
    }
}

}  // namespace

std::set<WidthMultiset> naive_enumerate(const LinkDiagram& d, int limit, const ColoringOptions& options) {
    if (d.strand_count() > limit) {
        throw SearchError("naive enumeration refuses " + std::to_string(d.strand_count()) + " strands (limit " +
                          std::to_string(limit) + ")");
    }
    std::set<WidthMultiset> out;
    enumerate_from(ColoringState(d, options), out);
    return out;
}

}  // namespace linkwidth

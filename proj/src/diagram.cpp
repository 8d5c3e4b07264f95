#include "linkwidth/diagram.hpp"

#include <map>

namespace linkwidth {

LinkDiagram::LinkDiagram(GaussCode code) : code_(std::move(code)) {
    validate(code_);
    const int n = code_.crossing_count();
    crossings_.resize(n);
    for (int x = 0; x < n; ++x) crossings_[x].id = x;

    for (int c = 0; c < code_.component_count(); ++c) {
        const auto& visits = code_.components[c];
        const int len = static_cast<int>(visits.size());
        std::vector<int> unders;
        for (int i = 0; i < len; ++i) {
            if (visits[i].passage == Passage::Under) unders.push_back(i);
        }
        std::vector<StrandId> ids;
        if (unders.empty()) {
            Strand s;
            s.id = static_cast<StrandId>(strands_.size());
            s.component = c;
            s.closed = true;
            for (const auto& v : visits) {
                s.over_crossings.push_back(v.crossing - 1);
                crossings_[v.crossing - 1].over = s.id;
                crossings_[v.crossing - 1].component_over = c;
            }
            ids.push_back(s.id);
            strands_.push_back(std::move(s));
        } else {
            const int k = static_cast<int>(unders.size());
            for (int j = 0; j < k; ++j) {
                Strand s;
                s.id = static_cast<StrandId>(strands_.size());
                s.component = c;
                const int start = unders[j];
                const int stop = unders[(j + 1) % k];
                const CrossingId tail = visits[start].crossing - 1;
                const CrossingId head = visits[stop].crossing - 1;
                s.tail = tail;
                s.head = head;
                crossings_[tail].under_out = s.id;
                crossings_[head].under_in = s.id;
                crossings_[tail].component_under = c;
                for (int i = (start + 1) % len; i != stop; i = (i + 1) % len) {
                    const CrossingId x = visits[i].crossing - 1;
                    s.over_crossings.push_back(x);
                    crossings_[x].over = s.id;
                    crossings_[x].component_over = c;
                }
                ids.push_back(s.id);
                strands_.push_back(std::move(s));
            }
        }
        component_strands_.push_back(std::move(ids));
    }
}

std::optional<StrandId> LinkDiagram::tail_neighbor(StrandId s) const {
    const auto& st = strands_[s];
    if (!st.tail) return std::nullopt;
    return crossings_[*st.tail].under_in;
}

std::optional<StrandId> LinkDiagram::head_neighbor(StrandId s) const {
    const auto& st = strands_[s];
    if (!st.head) return std::nullopt;
    return crossings_[*st.head].under_out;
}

LinkDiagram build_diagram(const GaussCode& code) { return LinkDiagram(code); }

std::vector<CutSplitWitness> detect_cut_split(const LinkDiagram& d) {
    std::vector<CutSplitWitness> out;
    for (const auto& s : d.strands()) {
        if (s.closed) {
            out.push_back({CutSplitWitness::Kind::ClosedCurveStrand, s.id, std::nullopt, s.component});
        } else if (*s.tail == *s.head) {
            out.push_back({CutSplitWitness::Kind::SelfAdjacentStrand, s.id, *s.tail, s.component});
        }
    }
    return out;
}

LinkDiagram remove_component(const LinkDiagram& d, int c) {
    if (c < 0 || c >= d.component_count()) throw std::out_of_range("no component " + std::to_string(c));
    const GaussCode& code = d.gauss();
    std::vector<bool> touches(static_cast<std::size_t>(d.crossing_count()) + 1, false);
    for (const auto& v : code.components[c]) touches[v.crossing] = true;

    // Dropping a visit on another component fuses the strands on either side
    // of an under-pass, or shortens an over-strand.
    GaussCode reduced;
    std::map<int, int> fresh;
    for (int k = 0; k < code.component_count(); ++k) {
        if (k == c) continue;
        std::vector<Visit> comp;
        for (const auto& v : code.components[k]) {
            if (!touches[v.crossing]) comp.push_back(v);
        }
        reduced.components.push_back(std::move(comp));
    }
    for (const auto& comp : reduced.components) {
        for (const auto& v : comp) fresh.emplace(v.crossing, 0);
    }
    int next = 1;
    for (auto& [old_label, new_label] : fresh) new_label = next++;
    for (auto& comp : reduced.components) {
        for (auto& v : comp) v.crossing = fresh[v.crossing];
    }
    return LinkDiagram(std::move(reduced));
}

}  // namespace linkwidth

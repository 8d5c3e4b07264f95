#include "linkwidth/derive.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkwidth {

ThickThin thick_thin(const EventSequence& events) {
    ThickThin out;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        const bool seed_now = events[i].is_seed();
        const bool seed_next = events[i + 1].is_seed();
        if (seed_now && !seed_next) out.thick.push_back(events[i].value_after);
        if (!seed_now && seed_next) out.thin.push_back(events[i].value_after);
    }
    std::sort(out.thick.begin(), out.thick.end(), std::greater<>());
    std::sort(out.thin.begin(), out.thin.end(), std::greater<>());
    return out;
}

bool tube_fits(int trunk, int m, int n) { return trunk < (m + 1) * (n + 1); }

DbcBound dbc_bound(std::span<const int> thick) {
    DbcBound out;
    for (int a : thick) {
        if (a < 2 || a % 2 != 0) throw std::invalid_argument("thick level size " + std::to_string(a) + " is not an even number >= 2");
        // A thick level meeting the link twice lifts to a sphere, complexity 0.
        out.bound.push_back(a == 2 ? 0 : a - 3);
        out.genera.push_back(a / 2 - 1);
    }
    return out;
}

std::string TrunkStatus::to_string() const {
    return std::string(kind == Kind::Exact ? "exact" : "upper") + "(" + rule + ")";
}

TrunkStatus classify_trunk(const WidthResult& result, const LinkMetadata& meta, bool staged_certificate) {
    const int wirt = result.wirtinger_upper;
    const int cert = result.trunk;
    const bool prime = meta.is_prime.value_or(false);
    if (meta.bridge_lower && !result.certificate.empty()) {
        const int lower = *meta.bridge_lower;
        // Bridge number 2 on a knot, or on a prime (hence non-split) link.
        if (lower == 2 && wirt == 2 && cert == 4 && (result.components == 1 || prime)) {
            return {TrunkStatus::Kind::Exact, 4, "2-bridge"};
        }
        if (prime && lower == 3 && wirt == 3 && cert == 6) {
            return {TrunkStatus::Kind::Exact, 6, "3-bridge"};
        }
        if (prime && lower == 4 && wirt == 4 && cert == 6) {
            return {TrunkStatus::Kind::Exact, 6, staged_certificate ? "staged-trunk6" : "4-bridge-certificate"};
        }
    }
    if (staged_certificate) return {TrunkStatus::Kind::Upper, cert, "staged-certificate"};
    if (result.status == ResultStatus::UpperBound) return {TrunkStatus::Kind::Upper, cert, "wirtinger-bound"};
    return {TrunkStatus::Kind::Upper, cert, "certificate"};
}

DerivedReport derive_report(const EventSequence& lex_certificate, int trunk, const TrunkStatus& status) {
    DerivedReport r;
    r.levels = thick_thin(lex_certificate);
    r.height = count_chains(lex_certificate);
    r.tube_3x1 = tube_fits(trunk, 3, 1);
    r.dbc = dbc_bound(r.levels.thick);
    r.trunk_status = status;
    return r;
}

ReducedWidths cut_split_reduce(const LinkDiagram& d, const WidthEngine& engine) {
    ReducedWidths out;
    LinkDiagram current = d;
    std::vector<int> inserted;
    while (current.component_count() > 1) {
        const auto witnesses = detect_cut_split(current);
        if (witnesses.empty()) break;
        const CutSplitWitness& w = witnesses.front();
        out.removed.push_back(w);
        if (w.kind == CutSplitWitness::Kind::ClosedCurveStrand) {
            inserted.insert(inserted.end(), {2, 0});
        } else {
            inserted.insert(inserted.end(), {4, 2});
        }
        current = remove_component(current, w.component);
    }
    out.convention_dependent = !out.removed.empty();
    out.base = engine(current);
    out.lex = out.base.lex.merged(WidthMultiset(std::move(inserted)));
    out.sum = out.lex.sum();
    out.trunk = out.lex.max();
    return out;
}

}  // namespace linkwidth

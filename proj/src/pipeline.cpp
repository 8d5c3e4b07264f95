#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "linkwidth/pipeline.hpp"

namespace linkwidth {

namespace {

struct TrunkChoice {
    WidthResult result;
    bool staged = false;
};

// Canonical replay of seeds as a trunk certificate, if it completes.
std::optional<WidthResult> certificate_result(const LinkDiagram& d, const EventSequence& events,
                                              ResultStatus status, int wirt) {
    try {
        const Widths w = widths_of_sequence(events);
        WidthResult r;
        r.status = status;
        r.lex = w.lex;
        r.sum = w.sum;
        r.trunk = w.trunk;
        r.certificate = events;
        r.wirtinger_upper = wirt;
        r.components = d.component_count();
        return r;
    } catch (const ColoringError&) {
        return std::nullopt;
    }
}

TrunkChoice choose_trunk(const LinkDiagram& d, const WirtingerWitness& witness, const PipelineOptions& options,
                         bool& exhausted) {
    const int wirt = witness.k;
    const auto wirt_seq = canonical_sequence(d, witness.seeds, options.coloring);
    auto wirt_cert = certificate_result(d, wirt_seq.events(), ResultStatus::UpperBound, wirt);

    auto exact = [&]() -> std::optional<TrunkChoice> {
        WidthResult r = exact_widths(d, Objective::Trunk, options.budget, options.coloring);
        if (r.status == ResultStatus::Exact) return TrunkChoice{std::move(r), false};
        exhausted = true;
        return std::nullopt;
    };
    auto staged = [&]() -> std::optional<TrunkChoice> {
        if (auto seq = staged_trunk6(d, options.coloring)) {
            if (auto r = certificate_result(d, *seq, ResultStatus::UpperBound, wirt)) return TrunkChoice{*r, true};
        }
        return std::nullopt;
    };
    auto fallback = [&]() -> TrunkChoice {
        if (!wirt_cert) throw SearchError("no completed trunk certificate found");
        return TrunkChoice{*wirt_cert, false};
    };

    switch (options.mode) {
        case TrunkMode::Exact:
            if (auto r = exact()) return *r;
            return fallback();
        case TrunkMode::Staged:
            if (auto r = staged()) return *r;
            return fallback();
        case TrunkMode::Auto:
            if (wirt <= 3 && wirt_cert) return TrunkChoice{*wirt_cert, false};
            if (wirt == 4) {
                if (auto r = staged()) return *r;
            }
            if (auto r = exact()) return *r;
            return fallback();
    }
    return fallback();
}

std::string sanitize(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        if (!ok) c = '_';
    }
    return out;
}

}  // namespace

std::string certificate_file_name(const std::string& link_name) { return sanitize(link_name) + ".cert"; }

PipelineResult run_pipeline(const TableEntry& entry, const PipelineOptions& options) {
    PipelineResult out;
    ReportRow& row = out.row;
    row.name = entry.name;
    try {
        const GaussCode code = decode(entry.format, entry.code);
        const LinkDiagram d(code);
        row.n_crossings = d.crossing_count();
        row.n_components = d.component_count();
        row.cut_split = !detect_cut_split(d).empty();

        const auto witness = wirtinger_upper(d, d.strand_count());
        if (!witness) throw SearchError("no Wirtinger seed set found");
        row.wirt_upper = witness->k;

        bool exhausted = false;
        const WidthResult lex = exact_widths(d, Objective::Lex, options.budget, options.coloring);
        const WidthResult sum = exact_widths(d, Objective::Sum, options.budget, options.coloring);
        exhausted |= lex.status != ResultStatus::Exact || sum.status != ResultStatus::Exact;

        TrunkChoice trunk = choose_trunk(d, *witness, options, exhausted);
        // Any completed sequence bounds the trunk; keep the lowest certificate.
        for (const WidthResult* other : {&lex, &sum}) {
            if (other->trunk < trunk.result.trunk) {
                trunk.result.trunk = other->trunk;
                trunk.result.lex = other->lex;
                trunk.result.sum = other->sum;
                trunk.result.certificate = other->certificate;
                trunk.result.status = ResultStatus::Exact;
                trunk.staged = false;
            }
        }
        trunk.result.wirtinger_upper = witness->k;
        trunk.result.components = d.component_count();

        const TrunkStatus status = classify_trunk(trunk.result, entry.metadata, trunk.staged);
        const DerivedReport derived = derive_report(lex.certificate, trunk.result.trunk, status);

        row.trunk_value = trunk.result.trunk;
        row.trunk_status = status.to_string();
        row.lex_multiset = lex.lex;
        row.sum_width = sum.sum;
        row.height = derived.height;
        row.dbc_bound = derived.dbc.bound;
        row.tube_3x1 = derived.tube_3x1;
        row.certificate_path = certificate_file_name(entry.name);
        row.search_status = exhausted ? "bounded" : "exact";
        out.budget_exhausted = exhausted;

        Certificate cert;
        cert.name = entry.name;
        cert.code = code;
        cert.sequences.push_back({"lex", lex.certificate});
        cert.sequences.push_back({"sum", sum.certificate});
        cert.sequences.push_back({"trunk", trunk.result.certificate});
        out.certificate = std::move(cert);
    } catch (const std::exception& e) {
        row.trunk_status = "error";
        row.error = e.what();
        row.certificate_path.clear();
    }
    return out;
}

SweepSummary sweep(const std::vector<TableEntry>& entries, int jobs, const std::filesystem::path& out,
                   ReportFormat format, const PipelineOptions& options) {
    jobs = std::max(1, jobs);
    std::vector<PipelineResult> results(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < entries.size(); i = next++) results[i] = run_pipeline(entries[i], options);
    };
    std::vector<std::thread> pool;
    const int n_threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), entries.size()));
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    const std::filesystem::path dir = out.has_parent_path() ? out.parent_path() : std::filesystem::path(".");
    if (!dir.empty()) std::filesystem::create_directories(dir);

    SweepSummary summary;
    std::vector<ReportRow> rows;
    for (std::size_t i = 0; i < results.size(); ++i) {
        auto& r = results[i];
        const LinkMetadata& meta = entries[i].metadata;
        ++summary.rows;
        if (!r.row.error.empty()) ++summary.errors;
        if (r.budget_exhausted) ++summary.budget_exhausted;
        ++summary.by_status[r.row.trunk_status];
        if (r.certificate) {
            std::ofstream cf(dir / r.row.certificate_path, std::ios::binary);
            if (!cf) throw std::runtime_error("cannot write " + (dir / r.row.certificate_path).string());
            cf << "# metadata is_prime=" << (meta.is_prime ? (*meta.is_prime ? "yes" : "no") : "-")
               << " bridge_lower=" << (meta.bridge_lower ? std::to_string(*meta.bridge_lower) : "-")
               << " source=" << meta.provenance << "\n";
            cf << write_certificate(*r.certificate);
        }
        rows.push_back(std::move(r.row));
    }

    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out.string());
    if (format == ReportFormat::Csv) {
        f << csv_header();
        for (const auto& row : rows) f << to_csv(row);
    } else {
        f << to_json(rows);
    }
    if (!f) throw std::runtime_error("error writing " + out.string());
    return summary;
}

}  // namespace linkwidth

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linkwidth/certificate.hpp"
#include "linkwidth/pipeline.hpp"

using namespace linkwidth;

namespace {

enum Exit { Ok = 0, Usage = 1, InputError = 2, BudgetExhausted = 3 };

CodeFormat format_of(const std::string& s) { return s == "dt" ? CodeFormat::Dt : CodeFormat::Gauss; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int default_jobs() {
    if (const char* env = std::getenv("LINKWIDTH_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void print_events(const EventSequence& events) {
    for (const auto& e : events) {
        if (e.is_seed()) std::cout << "  S " << e.id << "  -> " << e.value_after << "\n";
        else std::cout << "  X " << e.id << " " << to_string(e.special) << " -> " << e.value_after << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wirtinger widths and trunk of link diagrams"};
    app.require_subcommand(1);

    std::string code, from = "gauss", to = "dt";
    auto* convert = app.add_subcommand("convert", "Translate a code between DT and Gauss notation");
    convert->add_option("code", code, "Link code")->required();
    convert->add_option("--from", from)->check(CLI::IsMember({"dt", "gauss"}));
    convert->add_option("--to", to)->check(CLI::IsMember({"dt", "gauss"}));

    std::string format = "gauss", objective = "lex", mode = "auto", cert_out, name = "link";
    std::size_t budget_states = SearchBudget{}.max_states;
    double time_limit = SearchBudget{}.time_limit;
    bool strict = false, show_events = false;
    auto* widths = app.add_subcommand("widths", "Widths of a single link");
    widths->add_option("code", code, "Link code")->required();
    widths->add_option("--format", format)->check(CLI::IsMember({"dt", "gauss"}));
    widths->add_option("--objective", objective)->check(CLI::IsMember({"lex", "sum", "trunk"}));
    widths->add_option("--mode", mode)->check(CLI::IsMember({"exact", "staged", "auto"}));
    widths->add_option("--budget-states", budget_states);
    widths->add_option("--time-limit", time_limit, "Seconds");
    widths->add_option("--name", name);
    widths->add_option("--cert", cert_out, "Write a certificate to this path");
    widths->add_flag("--events", show_events, "Print the optimal event sequence");
    widths->add_flag("--strict", strict, "Exit 3 when the search budget runs out");

    std::string table, out = "report.csv", report_format = "csv";
    int jobs = default_jobs();
    auto* sweep_cmd = app.add_subcommand("sweep", "Run the pipeline over a link table");
    sweep_cmd->add_option("table", table)->required();
    sweep_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out);
    sweep_cmd->add_option("--format", report_format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--budget-states", budget_states);
    sweep_cmd->add_option("--time-limit", time_limit, "Seconds per search");
    sweep_cmd->add_flag("--strict", strict);

    std::string cert_in;
    auto* verify = app.add_subcommand("verify", "Replay a certificate file");
    verify->add_option("certificate", cert_in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    SearchBudget budget;
    budget.max_states = budget_states;
    budget.time_limit = time_limit;

    try {
        if (*convert) {
            if (from == "dt") {
                const GaussCode g = dt_to_gauss(parse_dt(code));
                std::cout << (to == "dt" ? serialize_dt(gauss_to_dt(g)) : serialize_gauss(g)) << "\n";
            } else {
                const GaussCode g = parse_gauss(code);
                std::cout << (to == "dt" ? serialize_dt(gauss_to_dt(g)) : serialize_gauss(g)) << "\n";
            }
            return Ok;
        }

        if (*widths) {
            TableEntry entry;
            entry.name = name;
            entry.format = format_of(format);
            entry.code = code;
            const LinkDiagram d(decode(entry.format, entry.code));
            const Objective obj = objective == "sum" ? Objective::Sum
                                  : objective == "trunk" ? Objective::Trunk
                                                         : Objective::Lex;
            if (obj == Objective::Trunk && mode != "exact") {
                PipelineOptions opts;
                opts.budget = budget;
                opts.mode = mode == "staged" ? TrunkMode::Staged : TrunkMode::Auto;
                const PipelineResult p = run_pipeline(entry, opts);
                if (!p.row.error.empty()) throw std::runtime_error(p.row.error);
                std::cout << "wirtinger_upper " << p.row.wirt_upper << "\n"
                          << "trunk " << p.row.trunk_value << "\n"
                          << "trunk_status " << p.row.trunk_status << "\n"
                          << "search " << p.row.search_status << "\n";
                if (show_events) print_events(p.certificate->sequences.back().events);
                if (!cert_out.empty()) {
                    std::ofstream f(cert_out, std::ios::binary);
                    f << write_certificate(*p.certificate);
                }
                return strict && p.budget_exhausted ? BudgetExhausted : Ok;
            }
            const WidthResult r = exact_widths(d, obj, budget);
            std::cout << "status " << to_string(r.status) << "\n"
                      << "lex " << r.lex.to_string() << "\n"
                      << "sum " << r.sum << "\n"
                      << "trunk " << r.trunk << "\n"
                      << "states " << r.states << "\n";
            if (show_events) print_events(r.certificate);
            if (!cert_out.empty()) {
                Certificate c{name, d.gauss(), {{to_string(obj), r.certificate}}};
                std::ofstream f(cert_out, std::ios::binary);
                f << write_certificate(c);
            }
            return strict && r.status != ResultStatus::Exact ? BudgetExhausted : Ok;
        }

        if (*sweep_cmd) {
            const auto entries = read_table_file(table);
            PipelineOptions opts;
            opts.budget = budget;
            const SweepSummary s =
                sweep(entries, jobs, out, report_format == "json" ? ReportFormat::Json : ReportFormat::Csv, opts);
            std::cout << "rows " << s.rows << "\n"
                      << "errors " << s.errors << "\n"
                      << "budget_exhausted " << s.budget_exhausted << "\n";
            for (const auto& [status, n] : s.by_status) std::cout << "status " << status << " " << n << "\n";
            return strict && s.budget_exhausted ? BudgetExhausted : Ok;
        }

        if (*verify) {
            const Certificate c = read_certificate(read_file(cert_in));
            const auto results = verify_certificate(c);
            bool all_ok = true;
            for (std::size_t i = 0; i < results.size(); ++i) {
                const auto& r = results[i];
                all_ok &= r.ok;
                std::cout << c.sequences[i].label << ": " << (r.ok ? "ok" : "FAILED " + r.message);
                if (r.ok) std::cout << " lex " << r.widths.lex.to_string() << " sum " << r.widths.sum << " trunk "
                                    << r.widths.trunk;
                std::cout << "\n";
            }
            return all_ok ? Ok : InputError;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    return Usage;
}

#pragma once

// Batch harness: link tables in, report rows and certificates out.
//
// Table lines are tab-separated: name, format (dt|gauss), code, and optional
// is_prime (1/0, yes/no, true/false, '-') and bridge_lower (integer or '-').
// Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkwidth/certificate.hpp"
#include "linkwidth/derive.hpp"
#include "linkwidth/search.hpp"

namespace linkwidth {

class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CodeFormat { Dt, Gauss };

struct TableEntry {
    std::string name;
    CodeFormat format = CodeFormat::Gauss;
    std::string code;
    LinkMetadata metadata;
};

std::optional<TableEntry> parse_table_line(const std::string& line, std::size_t line_no, const std::string& source);
std::vector<TableEntry> read_table(std::istream& in, const std::string& source = "table");
std::vector<TableEntry> read_table_file(const std::filesystem::path& path);

GaussCode decode(CodeFormat format, const std::string& code);

enum class TrunkMode { Auto, Exact, Staged };

struct PipelineOptions {
    SearchBudget budget;
    TrunkMode mode = TrunkMode::Auto;
    ColoringOptions coloring;
};

struct ReportRow {
    std::string name;
    int n_crossings = 0;
    int n_components = 0;
    bool cut_split = false;
    int wirt_upper = 0;
    int trunk_value = 0;
    std::string trunk_status;
    WidthMultiset lex_multiset;
    int sum_width = 0;
    int height = 0;
    std::vector<int> dbc_bound;
    bool tube_3x1 = false;
    std::string certificate_path;
    std::string search_status;  // exact | bounded
    std::string error;
};

struct PipelineResult {
    ReportRow row;
    std::optional<Certificate> certificate;
    bool budget_exhausted = false;
};

PipelineResult run_pipeline(const TableEntry& entry, const PipelineOptions& options = {});

enum class ReportFormat { Csv, Json };

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t errors = 0;
    std::size_t budget_exhausted = 0;
    std::map<std::string, std::size_t> by_status;
};

// File name used for a link's certificate next to the report.
std::string certificate_file_name(const std::string& link_name);

// Runs the pipeline on every entry with up to `jobs` threads. Rows are
// written in input order; certificates go next to `out`.
SweepSummary sweep(const std::vector<TableEntry>& entries, int jobs, const std::filesystem::path& out,
                   ReportFormat format, const PipelineOptions& options = {});

std::string csv_header();
std::string to_csv(const ReportRow& row);
std::string to_json(const std::vector<ReportRow>& rows);

}  // namespace linkwidth

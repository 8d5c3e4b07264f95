#pragma once

// Text encodings of link diagrams.
//
// Gauss grammar: components separated by ';', visits separated by ','.
// A visit is 'O' or 'U' followed by a positive crossing label and an
// optional handedness sign '+' or '-'. An empty component token is a
// zero-crossing unknot component.
//
// DT grammar: signed even integers separated by whitespace or commas,
// optionally preceded by "lengths: l1 l2 ... ;" giving the number of odd
// labels on each component. The tuple form "(4, 6), (2, 8)" printed by
// SnapPy is also accepted; each tuple is one component.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linkwidth {

class ParseError : public std::runtime_error {
public:
    // Position of errors that concern the code as a whole.
    static constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

    ParseError(std::size_t position, const std::string& message);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class Passage : std::uint8_t { Over, Under };

struct Visit {
    int crossing = 0;             // 1-based label
    Passage passage = Passage::Over;
    int sign = 0;                 // handedness: +1, -1, or 0 when absent

    friend bool operator==(const Visit&, const Visit&) = default;
};

struct GaussCode {
    std::vector<std::vector<Visit>> components;

    int crossing_count() const;
    int component_count() const { return static_cast<int>(components.size()); }

    friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

struct DtCode {
    std::vector<int> component_lengths;
    std::vector<int> even_labels;

    int crossing_count() const { return static_cast<int>(even_labels.size()); }

    friend bool operator==(const DtCode&, const DtCode&) = default;
};

// Throws ParseError when the label structure is inconsistent.
void validate(const GaussCode& code);
void validate(const DtCode& code);

GaussCode parse_gauss(std::string_view text);
std::string serialize_gauss(const GaussCode& code);

DtCode parse_dt(std::string_view text);
// Bare label list for one component, "lengths: ...; ..." otherwise.
std::string serialize_dt(const DtCode& code);

// Positive even label: the odd-numbered visit passes over. Negative: the
// even-numbered visit passes over.
GaussCode dt_to_gauss(const DtCode& code);

// Rotates components by one visit where needed so that every crossing
// receives one odd and one even label. Throws ParseError for zero-crossing
// components or when no such labelling exists.
DtCode gauss_to_dt(const GaussCode& code);

// Renumbers crossings by first appearance and drops handedness, so codes
// that differ only in labelling compare equal.
GaussCode relabel_by_first_appearance(const GaussCode& code);

}  // namespace linkwidth

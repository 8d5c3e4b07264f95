#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "linkwidth/coloring.hpp"

using namespace linkwidth;

namespace {

const LinkDiagram& trefoil() {
    static const LinkDiagram d(parse_gauss("O1,U2,O3,U1,O2,U3"));
    return d;
}

EventSequence pattern(const std::string& kinds, const std::vector<int>& values) {
    EventSequence out;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        out.push_back(kinds[i] == 'S' ? Event::seed(0, values[i]) : Event::special_at(0, SpecialKind::TypeI, values[i]));
    }
    return out;
}

std::vector<int> values(const EventSequence& events) {
    std::vector<int> out;
    for (const auto& e : events) out.push_back(e.value_after);
    return out;
}

}  // namespace

TEST_CASE("first seed has value 2") {
    const auto st = add_seed(ColoringState(trefoil()), 0);
    CHECK(values(st.events()) == std::vector<int>{2});
}

TEST_CASE("trefoil: two seeds, then one move fires two type I specials") {
    // Crossing 3 passes strand 0 over strands 1 and 2.
    auto st = add_seed(add_seed(ColoringState(trefoil()), 0), 1);
    CHECK(values(st.events()) == std::vector<int>{2, 4});
    CHECK(st.fired_specials().empty());

    st = coloring_move(st, 2);
    CHECK(st.color_of(2) == st.color_of(1));
    CHECK(values(st.events()) == std::vector<int>{2, 4, 2, 0});
    REQUIRE(st.fired_specials().size() == 2);
    CHECK(st.fired_specials()[0].crossing == 0);
    CHECK(st.fired_specials()[1].crossing == 1);
    CHECK(detect_special(st, 0) == SpecialKind::TypeI);
    CHECK(detect_special(st, 1) == SpecialKind::TypeI);
    CHECK_FALSE(detect_special(st, 2).has_value());
    CHECK(st.complete());
}

TEST_CASE("illegal coloring moves throw") {
    const auto one = add_seed(ColoringState(trefoil()), 0);
    CHECK_THROWS_AS(coloring_move(one, 2), ColoringError);  // no colored under-strand
    CHECK_THROWS_AS(coloring_move(one, 0), ColoringError);  // over-strand uncolored
    auto full = closure(add_seed(one, 1));
    CHECK_THROWS_AS(coloring_move(full, 2), ColoringError);  // both sides colored
    CHECK_THROWS_AS(add_seed(full, 0), ColoringError);
}

TEST_CASE("Hopf: two seeds fire both degenerate specials") {
    const LinkDiagram d(parse_gauss("O1,U2;O2,U1"));
    const auto st = add_seed(add_seed(ColoringState(d), 0), 1);
    CHECK(values(st.events()) == std::vector<int>{2, 4, 2, 0});
    for (const auto& f : st.fired_specials()) CHECK(f.kind == SpecialKind::Degenerate);
}

TEST_CASE("closed-curve strand is seeded and immediately special") {
    const LinkDiagram d(parse_gauss(""));
    const auto st = add_seed(ColoringState(d), 0);
    REQUIRE(st.events().size() == 2);
    CHECK(st.events()[1] == Event::special_at(-1, SpecialKind::Degenerate, 0));
}

TEST_CASE("closure") {
    auto both = closure(add_seed(add_seed(ColoringState(trefoil()), 0), 1));
    CHECK(both.complete());
    CHECK(both.fired_specials().size() == 2);
    CHECK(both.value() == 0);

    const auto one = add_seed(ColoringState(trefoil()), 0);
    const auto closed = closure(one);
    CHECK(closed.events() == one.events());
    CHECK(closed.colored() == one.colored());
}

TEST_CASE("widths_of_sequence") {
    const Widths w = widths_of_sequence(pattern("SSSXSXXX", {2, 4, 6, 4, 6, 4, 2, 0}));
    CHECK(w.lex == WidthMultiset({6, 6, 4, 4, 4, 2, 2}));
    CHECK(w.sum == 28);
    CHECK(w.trunk == 6);

    const Widths hopf = widths_of_sequence(pattern("SSXX", {2, 4, 2, 0}));
    CHECK(hopf.lex.to_string() == "{4,2,2}");
    CHECK(hopf.sum == 8);
    CHECK(hopf.trunk == 4);

    const Widths unknot = widths_of_sequence(pattern("SX", {2, 0}));
    CHECK(unknot.lex == WidthMultiset({2}));
    CHECK(unknot.sum == 2);

    CHECK_THROWS_AS(widths_of_sequence(pattern("SSX", {2, 4, 2})), ColoringError);
    CHECK_THROWS_AS(widths_of_sequence({}), ColoringError);
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(WidthMultiset({6, 6, 4, 4, 4, 2, 2}), WidthMultiset({8, 2})) == std::strong_ordering::less);
    CHECK(lex_compare(WidthMultiset({4, 2, 2}), WidthMultiset({2, 4, 2})) == std::strong_ordering::equal);
    CHECK(lex_compare(WidthMultiset({4, 2}), WidthMultiset({4, 2, 2})) == std::strong_ordering::less);
    CHECK(WidthMultiset({4, 4}) > WidthMultiset({4, 2, 2, 2}));
}

TEST_CASE("count_chains") {
    CHECK(count_chains(pattern("SSXX", {2, 4, 2, 0})) == 1);
    CHECK(count_chains(pattern("SSSXSXXX", {2, 4, 6, 4, 6, 4, 2, 0})) == 2);

    // Three disjoint circles colored one after another.
    const LinkDiagram circles(parse_gauss(";;"));
    ColoringState st(circles);
    for (StrandId s = 0; s < 3; ++s) st.seed(s);
    CHECK(values(st.events()) == std::vector<int>{2, 0, 2, 0, 2, 0});
    CHECK(count_chains(st.events()) == 3);
}

TEST_CASE("closure is independent of move order") {
    std::mt19937_64 rng(3);
    for (const auto& [name, code] : testsupport::small_corpus(9)) {
        CAPTURE(name);
        const LinkDiagram d(code);
        const int n = d.strand_count();
        for (int trial = 0; trial < 6; ++trial) {
            ColoringState base(d);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int k = 0; k < 1 + trial % 3; ++k) {
                const StrandId s = pick(rng);
                if (!base.is_colored(s)) base.seed(s);
            }
            ColoringState reference = base;
            reference.close();
            for (int order = 0; order < 50; ++order) {
                ColoringState other = base;
                other.close(rng);
                CHECK(other.colored() == reference.colored());
                CHECK(other.fired_specials().size() == reference.fired_specials().size());
                CHECK(other.value() == reference.value());
            }
        }
    }
}

TEST_CASE("completed sequences are balanced") {
    std::mt19937_64 rng(5);
    for (const auto& [name, code] : testsupport::small_corpus(11)) {
        CAPTURE(name);
        const LinkDiagram d(code);
        for (int trial = 0; trial < 20; ++trial) {
            const ColoringState st = testsupport::random_completed(d, rng);
            CHECK(st.value() == 0);
            CHECK(st.seeds().size() == st.fired_specials().size());
            CHECK(st.events().back().value_after == 0);
        }
    }
}

TEST_CASE("every transition ran the invariant checks") {
    CHECK(debug::invariant_checks_enabled());
    CHECK(debug::invariant_checks_performed() > 0);
}

#include <doctest.h>

#include "corpus.hpp"
#include "linkwidth/derive.hpp"

using namespace linkwidth;

namespace {

EventSequence pattern(const std::string& kinds, const std::vector<int>& values) {
    EventSequence out;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        out.push_back(kinds[i] == 'S' ? Event::seed(0, values[i]) : Event::special_at(0, SpecialKind::TypeI, values[i]));
    }
    return out;
}

WidthResult result_with(int wirt, int trunk, int components, ResultStatus status = ResultStatus::Exact) {
    WidthResult r;
    r.status = status;
    r.wirtinger_upper = wirt;
    r.trunk = trunk;
    r.components = components;
    r.certificate = pattern("SX", {2, 0});
    return r;
}

}  // namespace

TEST_CASE("thick and thin levels") {
    const ThickThin a = thick_thin(pattern("SSSXSXXX", {2, 4, 6, 4, 6, 4, 2, 0}));
    CHECK(a.thick == std::vector<int>{6, 6});
    CHECK(a.thin == std::vector<int>{4});

    const ThickThin hopf = thick_thin(pattern("SSXX", {2, 4, 2, 0}));
    CHECK(hopf.thick == std::vector<int>{4});
    CHECK(hopf.thin.empty());

    const ThickThin unknot = thick_thin(pattern("SX", {2, 0}));
    CHECK(unknot.thick == std::vector<int>{2});
}

TEST_CASE("thick levels match the chain count on random sequences") {
    std::mt19937_64 rng(23);
    for (const auto& [name, code] : testsupport::small_corpus(9)) {
        CAPTURE(name);
        const LinkDiagram d(code);
        for (int trial = 0; trial < 10; ++trial) {
            const auto st = testsupport::random_completed(d, rng);
            const ThickThin tt = thick_thin(st.events());
            CHECK(static_cast<int>(tt.thick.size()) == count_chains(st.events()));
            CHECK(tt.thin.size() + 1 == tt.thick.size());
        }
    }
}

TEST_CASE("tube_fits") {
    CHECK(tube_fits(6, 3, 1));
    CHECK_FALSE(tube_fits(6, 2, 1));
    CHECK_FALSE(tube_fits(8, 3, 1));
    CHECK(tube_fits(4, 2, 1));
}

TEST_CASE("dbc_bound") {
    const int six_six[] = {6, 6};
    const DbcBound a = dbc_bound(six_six);
    CHECK(a.bound == std::vector<int>{3, 3});
    CHECK(a.genera == std::vector<int>{2, 2});

    const int four[] = {4};
    CHECK(dbc_bound(four).bound == std::vector<int>{1});
    CHECK(dbc_bound(four).genera == std::vector<int>{1});

    const int two[] = {2};
    CHECK(dbc_bound(two).bound == std::vector<int>{0});
    CHECK(dbc_bound(two).genera == std::vector<int>{0});

    const int odd[] = {5};
    CHECK_THROWS(dbc_bound(odd));
}

TEST_CASE("classify_trunk") {
    LinkMetadata two{"k", std::nullopt, 2, ""};
    CHECK(classify_trunk(result_with(2, 4, 1), two).to_string() == "exact(2-bridge)");
    // A two-component link needs primality to rule out a split union.
    CHECK(classify_trunk(result_with(2, 4, 2), two).kind == TrunkStatus::Kind::Upper);
    two.is_prime = true;
    CHECK(classify_trunk(result_with(2, 4, 2), two).kind == TrunkStatus::Kind::Exact);

    const LinkMetadata three{"k", true, 3, ""};
    CHECK(classify_trunk(result_with(3, 6, 1), three).to_string() == "exact(3-bridge)");
    CHECK(classify_trunk(result_with(3, 8, 1), three).kind == TrunkStatus::Kind::Upper);

    const LinkMetadata four{"L10n35", true, 4, ""};
    CHECK(classify_trunk(result_with(4, 6, 2), four, true).to_string() == "exact(staged-trunk6)");

    const TrunkStatus none = classify_trunk(result_with(4, 8, 2, ResultStatus::UpperBound), LinkMetadata{});
    CHECK(none.kind == TrunkStatus::Kind::Upper);
    CHECK(none.value == 8);
    CHECK(none.to_string() == "upper(wirtinger-bound)");
}

TEST_CASE("cut_split_reduce") {
    const WidthEngine engine = [](const LinkDiagram& d) { return exact_widths(d, Objective::Lex); };

    const LinkDiagram split(parse_gauss("O1,U2,O3,U1,O2,U3;"));
    const ReducedWidths r = cut_split_reduce(split, engine);
    CHECK(r.lex == WidthMultiset({4, 2, 2, 2, 0}));
    CHECK(r.convention_dependent);
    CHECK(r.removed.size() == 1);
    // Direct coloring of the split diagram agrees.
    CHECK(exact_widths(split, Objective::Lex).lex == r.lex);

    const LinkDiagram unknot(parse_gauss(""));
    const ReducedWidths u = cut_split_reduce(unknot, engine);
    CHECK(u.lex == WidthMultiset({2}));
    CHECK_FALSE(u.convention_dependent);

    const LinkDiagram hopf(parse_gauss("O1,U2;O2,U1"));
    const ReducedWidths h = cut_split_reduce(hopf, engine);
    CHECK(h.lex >= exact_widths(hopf, Objective::Lex).lex);
}

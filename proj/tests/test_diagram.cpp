#include <doctest.h>

#include "corpus.hpp"
#include "linkwidth/diagram.hpp"

using namespace linkwidth;

TEST_CASE("trefoil has three strands each passing over one crossing") {
    const LinkDiagram d(parse_gauss("O1,U2,O3,U1,O2,U3"));
    CHECK(d.strand_count() == 3);
    CHECK(d.crossing_count() == 3);
    for (const auto& s : d.strands()) CHECK(s.over_crossings.size() == 1);
    // Strand 0 leaves U2, passes over 3 and ends at U1.
    CHECK(d.strand(0).tail == 1);
    CHECK(d.strand(0).head == 0);
    CHECK(d.crossing(0).over == 2);
    CHECK(d.crossing(0).under_in == 0);
    CHECK(d.crossing(0).under_out == 1);
    CHECK(detect_cut_split(d).empty());
}

TEST_CASE("Hopf strands are self-adjacent") {
    const LinkDiagram d(parse_gauss("O1,U2;O2,U1"));
    CHECK(d.strand_count() == 2);
    for (const auto& s : d.strands()) CHECK(s.tail == s.head);
    const auto w = detect_cut_split(d);
    REQUIRE(w.size() == 2);
    CHECK(w[0].kind == CutSplitWitness::Kind::SelfAdjacentStrand);
    CHECK(w[0].component == 0);
    CHECK(w[1].component == 1);
}

TEST_CASE("zero-crossing unknot is one closed strand") {
    const LinkDiagram d(parse_gauss(""));
    CHECK(d.strand_count() == 1);
    CHECK(d.crossing_count() == 0);
    CHECK(d.strand(0).closed);
    const auto w = detect_cut_split(d);
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == CutSplitWitness::Kind::ClosedCurveStrand);
}

TEST_CASE("remove_component") {
    const LinkDiagram hopf(parse_gauss("O1,U2;O2,U1"));
    const LinkDiagram rest = remove_component(hopf, 1);
    CHECK(rest.component_count() == 1);
    CHECK(rest.crossing_count() == 0);
    CHECK(rest.strand(0).closed);

    const LinkDiagram split(parse_gauss("O1,U2,O3,U1,O2,U3;"));
    CHECK(serialize_gauss(remove_component(split, 1).gauss()) == "O1,U2,O3,U1,O2,U3");

    const LinkDiagram trefoil(parse_gauss("O1,U2,O3,U1,O2,U3"));
    CHECK(remove_component(trefoil, 0).empty());
}

TEST_CASE("strand and crossing incidences agree on the corpus") {
    for (const auto& [name, code] : testsupport::small_corpus(11)) {
        CAPTURE(name);
        const LinkDiagram d(code);
        bool any_closed = false;
        for (const auto& s : d.strands()) any_closed |= s.closed;
        if (!any_closed) CHECK(d.strand_count() == d.crossing_count());
        for (const auto& x : d.crossings()) {
            CHECK(d.strand(x.under_in).head == x.id);
            CHECK(d.strand(x.under_out).tail == x.id);
            const auto& over = d.strand(x.over).over_crossings;
            CHECK(std::find(over.begin(), over.end(), x.id) != over.end());
            CHECK(d.strand(x.under_in).component == x.component_under);
            CHECK(d.strand(x.over).component == x.component_over);
        }
        std::size_t overs = 0;
        for (const auto& s : d.strands()) overs += s.over_crossings.size();
        CHECK(overs == static_cast<std::size_t>(d.crossing_count()));
    }
}

#pragma once

#include <random>
#include <string>
#include <vector>

#include "linkwidth/coloring.hpp"
#include "linkwidth/pipeline.hpp"

namespace testsupport {

struct NamedCode {
    std::string name;
    linkwidth::GaussCode code;
};

// Path of the bundled 100-link table.
std::string sample_table_path();

std::vector<linkwidth::TableEntry> sample_table();

// Gauss codes with `crossings` crossings split over `components` non-empty
// components. Pairing and over/under are uniform; the result need not be
// planar, which the coloring calculus does not care about.
linkwidth::GaussCode random_gauss(int crossings, int components, std::mt19937& rng);

// Trefoil, figure-eight, Hopf, unknot, split trefoil, five random codes and
// every bundled table link with at most `max_crossings` crossings.
std::vector<NamedCode> small_corpus(int max_crossings = 7);

// Uniform random walk over seeds and coloring moves until every strand is
// colored. No closure canonicalization.
linkwidth::ColoringState random_completed(const linkwidth::LinkDiagram& d, std::mt19937_64& rng,
                                          const linkwidth::ColoringOptions& options = {});

// Seeds of a completed sequence, in order.
std::vector<linkwidth::StrandId> seed_order(const linkwidth::EventSequence& events);

}  // namespace testsupport

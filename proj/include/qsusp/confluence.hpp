#pragma once

#include <string>
#include <vector>

#include "qsusp/ncpoly.hpp"

namespace qsusp {

struct OverlapFailure {
    Word overlap;
    NCPoly left_first;
    NCPoly right_first;
};

struct ConfluenceReport {
    std::size_t overlaps_checked = 0;
    std::vector<OverlapFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Diamond-lemma certification of the rule table: every length-3 word whose
/// two adjacent pairs are both redexes is reduced both ways; any pair of
/// distinct normal forms is reported. All rule left-hand sides have length
/// two, so these overlaps are the only ambiguities. An empty report plus
/// the termination order gives unique normal forms.
ConfluenceReport check_local_confluence(const AlgebraPreset& A);

}  // namespace qsusp

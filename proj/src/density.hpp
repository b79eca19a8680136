#pragma once

#include "smoothness.hpp"

namespace hensel {

/// Request for nearby points of the variety: how many, how close
/// (displacement valuation >= level), and an optional polynomial the
/// points must certifiably avoid.
struct DensityRequest {
    VarietySpec spec;
    std::optional<MultiPoly> avoid;
    int count = 1;
    int level = 1;
    int budget_factor = 64; // candidates examined <= budget_factor * count
};

struct DensityPoint {
    std::vector<Elem> coords;                 // original variable order, translated to the base point
    int displacement_valuation = 0;           // min over coordinates of v(coord - base)
    std::vector<Valuation> generator_values;  // valuation of every generator at the point
    std::optional<Valuation> avoid_valuation; // finite = certified nonzero
};

struct DensityReport {
    std::vector<DensityPoint> points;
    int certified_precision = 0; // cap - v(e)
    int candidates_tried = 0;
};

// Deterministically enumerates parameters u = uniformizer^j * c (c over
// residue vectors in lexicographic order, j increasing from
// max(level, 2*v(e)+1)), maps each through the implicit graph, translates
// back, and keeps the first `count` candidates whose certificates hold.
DensityReport density_sample(const DensityRequest& req);

} // namespace hensel

#pragma once

#include <optional>

#include "local_maps.hpp"

namespace hensel {

/// Generators of a variety together with a rational point on it (exact
/// coordinates) and the dimension the caller claims it has there.
struct VarietySpec {
    std::vector<MultiPoly> generators;
    std::vector<Scalar> point; // empty = origin
    int claimed_dim = 0;
};

enum class Verdict { Smooth, NotSmooth, RankExceedsCodim };

std::string verdict_name(Verdict v);

/// A nonsingular (n-r) x (n-r) minor of the Jacobian: which generators,
/// which variables, and the variable order (free variables first, pivot
/// variables last) that the implicit machinery expects.
struct PivotSplit {
    std::vector<int> generator_rows;
    std::vector<int> pivot_cols;
    std::vector<int> var_order; // permutation of 0..n-1, pivots last
    Scalar minor_det;
    int minor_valuation = 0;
};

struct SmoothnessReport {
    int jacobian_rank = 0;
    Verdict verdict = Verdict::NotSmooth;
    std::optional<PivotSplit> pivot; // present iff Smooth
};

// Rank of the s x n matrix [dp_i/dX_j(point)] over the fraction field;
// Smooth iff rank == n - claimed_dim, RankExceedsCodim flags an inconsistent
// claimed dimension. Raises PointNotOnVariety if a generator is nonzero at
// the point.
SmoothnessReport smooth_check(const VarietySpec& spec);

// Among all nonsingular (n-r)-minors, the one whose determinant has minimal
// valuation (ties broken lexicographically on row then column index sets).
PivotSplit select_pivot(const VarietySpec& spec, const SmoothnessReport& report);

// The implicit system at the chosen split: generators translated so the point
// is the origin, variables reordered with pivots last.
ImplicitSystem implicit_from_pivot(const VarietySpec& spec, const PivotSplit& pivot);

std::vector<Scalar> variety_point(const VarietySpec& spec);

} // namespace hensel

#pragma once

// Exact rational model of the hyperplane H_d = {x in R^{d+1} : sum x_i = 1},
// the regular simplex R_d = {e_1, ..., e_{d+1}} and the coordinate embedding
// of combinatorial candidate vectors.

#include <iosfwd>
#include <set>
#include <vector>

#include "twodist/bitmask.hpp"
#include "twodist/rational.hpp"

namespace twodist::exactgeom {

using Point = std::vector<Rational>;

/// e_1, ..., e_{d+1}. Throws InvalidArgument for d < 2.
std::vector<Point> simplex_points(int d);

/// c = (1 - (d+1-k) beta) / (d+1).
Rational base_value(int d, int k, const Rational& beta);

/// Coordinate i is c when i is in the base set, c + beta otherwise.
/// Throws ShapeError when v.ambient != d+1 or v.weight() != k.
Point embed(const CandidateVector& v, int d, int k, const Rational& beta);

Rational squared_distance(const Point& p, const Point& q);

/// Distinct squared distances over all pairs. Throws DegenerateSetError on
/// duplicate points and InvalidArgument for fewer than two points.
std::set<Rational> distance_spectrum(const std::vector<Point>& points);

Rational coordinate_sum(const Point& p);

/// One point per row, coordinates as reduced "p/q" (or "p"), comma separated.
void write_csv(std::ostream& os, const std::vector<Point>& points);
std::vector<Point> read_csv(std::istream& is);

}  // namespace twodist::exactgeom

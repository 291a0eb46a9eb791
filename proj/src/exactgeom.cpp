#include "twodist/exactgeom.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "twodist/errors.hpp"

namespace twodist::exactgeom {

std::vector<Point> simplex_points(int d) {
    if (d < 2) {
        throw InvalidArgument("simplex dimension must be at least 2, got " + std::to_string(d));
    }
    const int n = d + 1;
    std::vector<Point> pts(n, Point(n, Rational(0)));
    for (int i = 0; i < n; ++i) pts[i][i] = Rational(1);
    return pts;
}

Rational base_value(int d, int k, const Rational& beta) {
    if (d < 1 || k < 1 || k > d + 1) {
        throw InvalidArgument("base_value needs 1 <= k <= d+1 (d=" + std::to_string(d) +
                              ", k=" + std::to_string(k) + ")");
    }
    return (Rational(1) - Rational(d + 1 - k) * beta) / Rational(d + 1);
}

Point embed(const CandidateVector& v, int d, int k, const Rational& beta) {
    if (v.ambient != d + 1) {
        throw ShapeError("candidate ambient " + std::to_string(v.ambient) + " != d+1 = " +
                         std::to_string(d + 1));
    }
    if (v.weight() != k) {
        throw ShapeError("candidate weight " + std::to_string(v.weight()) + " != k = " +
                         std::to_string(k));
    }
    const Rational c = base_value(d, k, beta);
    const Rational high = c + beta;
    Point p(v.ambient);
    for (int i = 0; i < v.ambient; ++i) p[i] = v.base.test(i) ? c : high;
    return p;
}

Rational squared_distance(const Point& p, const Point& q) {
    if (p.size() != q.size()) {
        throw ShapeError("squared_distance on points of length " + std::to_string(p.size()) +
                         " and " + std::to_string(q.size()));
    }
    mpq_class acc = 0;
    mpq_class diff;
    for (std::size_t i = 0; i < p.size(); ++i) {
        diff = p[i].raw() - q[i].raw();
        acc += diff * diff;
    }
    return Rational(acc);
}

std::set<Rational> distance_spectrum(const std::vector<Point>& points) {
    if (points.size() < 2) {
        throw InvalidArgument("distance spectrum needs at least two points");
    }
    std::set<Rational> spectrum;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Rational d2 = squared_distance(points[i], points[j]);
            if (d2.sign() == 0) {
                throw DegenerateSetError("points " + std::to_string(i) + " and " +
                                         std::to_string(j) + " coincide");
            }
            spectrum.insert(std::move(d2));
        }
    }
    return spectrum;
}

Rational coordinate_sum(const Point& p) {
    mpq_class acc = 0;
    for (const auto& x : p) acc += x.raw();
    return Rational(acc);
}

void write_csv(std::ostream& os, const std::vector<Point>& points) {
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i != 0) os << ',';
            os << p[i].to_string();
        }
        os << '\n';
    }
}

std::vector<Point> read_csv(std::istream& is) {
    std::vector<Point> points;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Point p;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) p.push_back(Rational::parse(cell));
        if (!points.empty() && p.size() != points.front().size()) {
            throw ParseError("CSV rows of unequal length");
        }
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace twodist::exactgeom

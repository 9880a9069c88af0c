#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "random.hpp"
#include "simplex.hpp"

namespace halfsep {

/// Finite point set in R^d; point i is element i.
class PointSet {
public:
    PointSet() = default;

    PointSet(std::size_t dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
        if (dim_ == 0) throw std::invalid_argument("dimension must be >= 1");
        if (coords_.size() % dim_ != 0) throw std::invalid_argument("coordinate count is not a multiple of the dimension");
        for (double c : coords_)
            if (!std::isfinite(c)) throw std::invalid_argument("coordinates must be finite");
    }

    static PointSet from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty()) throw std::invalid_argument("point set must be non-empty");
        const std::size_t d = rows.front().size();
        std::vector<double> flat;
        flat.reserve(rows.size() * d);
        for (const auto& r : rows) {
            if (r.size() != d) throw std::invalid_argument("all points must have the same dimension");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return PointSet(d, std::move(flat));
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ ? coords_.size() / dim_ : 0; }
    std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    const std::vector<double>& coordinates() const noexcept { return coords_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

constexpr double default_hull_tolerance = 1e-9;

/**
 * @brief Membership queries against the convex hull of a fixed generator set.
 *
 * Each query is a phase-one LP (weights >= 0, summing to 1, reproducing the
 * query point). Whenever a query is rejected, the LP's dual solution is a
 * hyperplane with every generator on one side; it is kept and used to reject
 * later queries without solving another LP.
 */
class HullTester {
public:
    HullTester(const PointSet& points, std::vector<std::size_t> generators, double eps = default_hull_tolerance)
        : points_(&points), gens_(std::move(generators)), eps_(eps) {
        if (gens_.empty()) throw std::invalid_argument("convex hull of an empty set");
        if (!(eps_ > 0)) throw std::invalid_argument("tolerance must be positive");
        const std::size_t d = points.dim();
        rows_ = d + 1;
        a_.assign(rows_ * gens_.size(), 0.0);
        lo_.assign(d, INFINITY);
        hi_.assign(d, -INFINITY);
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (gens_[j] >= points.size()) throw std::out_of_range("generator index outside point set");
            auto p = points.point(gens_[j]);
            for (std::size_t k = 0; k < d; ++k) {
                a_[k * gens_.size() + j] = p[k];
                lo_[k] = std::min(lo_[k], p[k]);
                hi_[k] = std::max(hi_[k], p[k]);
            }
            a_[d * gens_.size() + j] = 1.0;
        }
    }

    bool contains(std::span<const double> q) {
        const std::size_t d = points_->dim();
        if (q.size() != d) throw std::invalid_argument("query has the wrong dimension");
        for (std::size_t k = 0; k < d; ++k)
            if (q[k] < lo_[k] - eps_ || q[k] > hi_[k] + eps_) return false;
        for (const auto& h : certificates_) {
            double f = h[d], scale = std::abs(h[d]);
            for (std::size_t k = 0; k < d; ++k) f += h[k] * q[k], scale = std::max(scale, std::abs(h[k]));
            if (f > certificate_margin * std::max(1.0, scale)) return false;
        }
        for (auto g : gens_) {
            auto p = points_->point(g);
            if (std::equal(p.begin(), p.end(), q.begin())) return true;
        }

        std::vector<double> b(q.begin(), q.end());
        b.push_back(1.0);
        auto res = phase_one(a_, b, rows_, gens_.size());
        ++lp_solves_;
        if (res.infeasibility <= eps_) return true;
        if (res.certificate.size() == rows_) certificates_.push_back(std::move(res.certificate));
        return false;
    }

    bool contains_point(std::size_t i) { return contains(points_->point(i)); }
    std::size_t lp_solves() const noexcept { return lp_solves_; }

private:
    static constexpr double certificate_margin = 1e-7;

    const PointSet* points_;
    std::vector<std::size_t> gens_;
    double eps_;
    std::size_t rows_ = 0;
    std::vector<double> a_;
    std::vector<double> lo_, hi_;
    std::vector<std::vector<double>> certificates_;
    std::size_t lp_solves_ = 0;
};

/// True iff q is a convex combination of the points indexed by X, within eps.
inline bool in_convex_hull(const PointSet& points, std::span<const std::size_t> x, std::span<const double> q,
                           double eps = default_hull_tolerance) {
    if (x.empty()) throw std::invalid_argument("in_convex_hull: generator set must be non-empty");
    HullTester t(points, std::vector<std::size_t>(x.begin(), x.end()), eps);
    return t.contains(q);
}

/// Trace of the Euclidean convex hull on the point set.
class AlphaClosure {
public:
    explicit AlphaClosure(PointSet points, double eps = default_hull_tolerance) : points_(std::move(points)), eps_(eps) {
        if (points_.size() == 0) throw std::invalid_argument("point set must be non-empty");
    }

    std::size_t ground_size() const noexcept { return points_.size(); }
    const PointSet& points() const noexcept { return points_; }

    ElementSet operator()(const ElementSet& x) const {
        if (x.universe() != ground_size()) throw std::invalid_argument("subset over a different point set");
        if (x.empty()) return x;
        HullTester hull(points_, x.members(), eps_);
        ElementSet out = x;
        for (std::size_t e = 0; e < ground_size(); ++e)
            if (!x.contains(e) && hull.contains_point(e)) out.insert(e);
        return out;
    }

    std::optional<ElementSet> extend_disjoint(const ElementSet& closed, std::size_t e,
                                              const ElementSet& forbidden) const {
        if (closed.intersects(forbidden) || forbidden.contains(e)) return std::nullopt;
        ElementSet gens = closed.with(e);
        HullTester hull(points_, gens.members(), eps_);
        bool hit = false;
        forbidden.for_each([&](std::size_t f) {
            if (!hit && hull.contains_point(f)) hit = true;
        });
        if (hit) return std::nullopt;
        ElementSet out = gens;
        (gens | forbidden).complement().for_each([&](std::size_t p) {
            if (hull.contains_point(p)) out.insert(p);
        });
        return out;
    }

private:
    PointSet points_;
    double eps_;
};

inline ElementSet alpha_closure(const PointSet& points, const ElementSet& x, double eps = default_hull_tolerance) {
    return AlphaClosure(points, eps)(x);
}

// ---------------------------------------------------------------------------
// Linearly separable instances

struct LabeledPoints {
    PointSet points;
    /// 1 for the positive side of the hidden hyperplane, 0 for the negative side.
    std::vector<int> labels;
    std::vector<double> normal;

    ElementSet positives() const {
        ElementSet s(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == 1) s.insert(i);
        return s;
    }
    ElementSet negatives() const { return positives().complement(); }
};

/**
 * @brief Two classes of n_per_class points each with disjoint convex hulls.
 *
 * A uniformly random unit normal defines a hyperplane through the origin.
 * Points are drawn uniformly from [-1,1]^d; those within `margin` of the
 * hyperplane are rejected, the rest are labelled by side until both classes
 * are full.
 */
inline LabeledPoints generate_d2_instance(std::size_t d, std::size_t n_per_class, double margin, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n_per_class < 1) throw std::invalid_argument("need at least one point per class");
    if (!(margin > 0) || margin >= 1.0) throw std::invalid_argument("margin must be in (0, 1)");
    Rng rng(seed);

    std::vector<double> normal(d);
    double len = 0.0;
    while (len < 1e-12) {
        len = 0.0;
        for (auto& c : normal) c = standard_normal(rng), len += c * c;
        len = std::sqrt(len);
    }
    for (auto& c : normal) c /= len;

    std::vector<double> coords;
    coords.reserve(2 * n_per_class * d);
    std::vector<int> labels;
    std::size_t pos = 0, neg = 0;
    std::vector<double> p(d);
    while (pos < n_per_class || neg < n_per_class) {
        double s = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            p[k] = uniform_in(rng, -1.0, 1.0);
            s += p[k] * normal[k];
        }
        if (std::abs(s) < margin) continue;
        const int label = s > 0 ? 1 : 0;
        if (label == 1 ? pos == n_per_class : neg == n_per_class) continue;
        (label == 1 ? pos : neg)++;
        coords.insert(coords.end(), p.begin(), p.end());
        labels.push_back(label);
    }
    return LabeledPoints{PointSet(d, std::move(coords)), std::move(labels), std::move(normal)};
}

}  // namespace halfsep

#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "element_set.hpp"
#include "euclid.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace halfsep {

// ---------------------------------------------------------------------------
// Metrics over the unlabeled part E' = E \ (A u B)

namespace detail {
inline void check_metric_inputs(const ElementSet& a, const ElementSet& b, const ElementSet& h1, const ElementSet& h2) {
    if (h1.intersects(h2)) throw std::invalid_argument("predicted sets overlap");
    if (!a.is_subset_of(h1) || !b.is_subset_of(h2)) throw std::invalid_argument("training sets must lie in their predictions");
}
}  // namespace detail

/// Fraction of predicted unlabeled elements whose prediction matches E1/E2; nullopt if none is predicted.
inline std::optional<double> accuracy(const ElementSet& e1, const ElementSet& e2, const ElementSet& h1,
                                      const ElementSet& h2, const ElementSet& a, const ElementSet& b) {
    detail::check_metric_inputs(a, b, h1, h2);
    if (e1.intersects(e2)) throw std::invalid_argument("label blocks overlap");
    const ElementSet unlabeled = (a | b).complement();
    const ElementSet p1 = h1 & unlabeled, p2 = h2 & unlabeled;
    const std::size_t denom = (p1 | p2).count();
    if (denom == 0) return std::nullopt;
    return static_cast<double>((e1 & p1).count() + (e2 & p2).count()) / static_cast<double>(denom);
}

/// Fraction of unlabeled elements that are predicted at all; nullopt if nothing is unlabeled.
inline std::optional<double> coverage(const ElementSet& a, const ElementSet& b, const ElementSet& h1,
                                      const ElementSet& h2) {
    detail::check_metric_inputs(a, b, h1, h2);
    const ElementSet unlabeled = (a | b).complement();
    const std::size_t denom = unlabeled.count();
    if (denom == 0) return std::nullopt;
    return static_cast<double>(((h1 | h2) & unlabeled).count()) / static_cast<double>(denom);
}

/**
 * @brief Draws t training elements: ceil(t/2) from block1 and floor(t/2)
 * from block2, uniformly without replacement. If a block is too small the
 * shortfall is drawn from the other block; each side keeps at least one.
 */
inline std::pair<ElementSet, ElementSet> sample_training_sets(const ElementSet& block1, const ElementSet& block2,
                                                              std::size_t t, Rng& rng) {
    const std::size_t n1 = block1.count(), n2 = block2.count();
    if (t < 2) throw std::invalid_argument("training set needs at least two elements");
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("both label blocks must be non-empty");
    if (t > n1 + n2) throw std::invalid_argument("training set larger than the ground set");
    std::size_t k1 = (t + 1) / 2, k2 = t / 2;
    if (k1 > n1) k2 += k1 - n1, k1 = n1;
    if (k2 > n2) k1 += k2 - n2, k2 = n2;
    ElementSet a(block1.universe()), b(block2.universe());
    for (auto e : sample_without_replacement(block1.members(), k1, rng)) a.insert(e);
    for (auto e : sample_without_replacement(block2.members(), k2, rng)) b.insert(e);
    return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// Results

/// One averaged grid cell; exactly the CSV columns.
struct CellResult {
    std::string experiment;
    std::size_t dim_or_size = 0;
    std::size_t train_size = 0;
    std::size_t trials = 0;
    double mean_accuracy = 0.0;
    double mean_coverage = 0.0;
    std::size_t undefined_count = 0;
    double mean_closure_calls = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const CellResult& o) const {
        auto same = [](double x, double y) { return (std::isnan(x) && std::isnan(y)) || x == y; };
        return experiment == o.experiment && dim_or_size == o.dim_or_size && train_size == o.train_size &&
               trials == o.trials && same(mean_accuracy, o.mean_accuracy) && same(mean_coverage, o.mean_coverage) &&
               undefined_count == o.undefined_count && same(mean_closure_calls, o.mean_closure_calls) &&
               seed == o.seed;
    }
};

struct TrialResult {
    std::size_t dim_or_size = 0;
    std::size_t train_size = 0;
    std::size_t trial = 0;
    std::optional<double> accuracy;
    std::optional<double> coverage;
    std::size_t closure_calls = 0;
    bool partition = false;
    std::uint64_t seed = 0;
};

using TrialObserver = std::function<void(const TrialResult&)>;

namespace detail {
struct CellAccumulator {
    double acc_sum = 0.0, cov_sum = 0.0, calls_sum = 0.0;
    std::size_t acc_n = 0, cov_n = 0, trials = 0, undefined = 0;

    void add(const TrialResult& t) {
        ++trials;
        calls_sum += static_cast<double>(t.closure_calls);
        if (t.accuracy) acc_sum += *t.accuracy, ++acc_n;
        if (t.coverage) cov_sum += *t.coverage, ++cov_n;
        if (!t.accuracy || !t.coverage) ++undefined;
    }
    CellResult finish(std::string name, std::size_t dim_or_size, std::size_t train, std::uint64_t seed) const {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return CellResult{std::move(name),
                          dim_or_size,
                          train,
                          trials,
                          acc_n ? acc_sum / static_cast<double>(acc_n) : nan,
                          cov_n ? cov_sum / static_cast<double>(cov_n) : nan,
                          undefined,
                          trials ? calls_sum / static_cast<double>(trials) : nan,
                          seed};
    }
};

template <ClosureOperator Op>
TrialResult run_trial(const Op& op, const ElementSet& e1, const ElementSet& e2, std::size_t train, Rng& rng) {
    auto [a, b] = sample_training_sets(e1, e2, train, rng);
    InstrumentedClosure<Op> counted(op);
    auto out = mcs_separate(counted, a, b, ExtensionOrder::random(rng()));
    TrialResult r;
    r.train_size = train;
    r.closure_calls = counted.calls();
    if (const auto* s = std::get_if<Separation>(&out)) {
        r.accuracy = accuracy(e1, e2, s->first, s->second, a, b);
        r.coverage = coverage(a, b, s->first, s->second);
        r.partition = s->is_partition();
    } else {
        // training sets drawn from two half-spaces always have disjoint closures
        throw std::logic_error("training sets from complementary half-spaces were reported inseparable");
    }
    return r;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// D1: vertex classification on random trees labelled by a random half-space

struct D1Config {
    std::vector<std::size_t> tree_sizes{1000};
    std::vector<std::size_t> train_sizes{40};
    std::size_t trees_per_size = 10;
    std::size_t trainsets_per_tree = 10;
    double ratio_bound = 3.0;
    std::uint64_t seed = 1;
};

/// Random tree plus an edge-cut labeling; redraws the tree if no edge meets the ratio bound.
inline std::pair<Graph, TreeLabeling> d1_instance(std::size_t size, double ratio_bound, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        Graph t = random_tree(size, rng);
        if (auto lab = random_tree_halfspace_labeling(t, rng, ratio_bound)) return {std::move(t), std::move(*lab)};
    }
}

inline std::vector<CellResult> run_d1(const D1Config& cfg, const TrialObserver& observe = {}) {
    if (cfg.tree_sizes.empty() || cfg.train_sizes.empty()) throw std::invalid_argument("D1 grid must be non-empty");
    std::vector<CellResult> out;
    for (auto size : cfg.tree_sizes) {
        if (size < 2) throw std::invalid_argument("trees need at least two vertices");
        std::vector<std::pair<Graph, TreeLabeling>> trees;
        for (std::size_t i = 0; i < cfg.trees_per_size; ++i)
            trees.push_back(d1_instance(size, cfg.ratio_bound, derive_seed(cfg.seed, 1, size, i)));
        for (auto train : cfg.train_sizes) {
            detail::CellAccumulator acc;
            std::size_t trial = 0;
            for (std::size_t i = 0; i < trees.size(); ++i) {
                const auto& [tree, lab] = trees[i];
                GeodesicClosure gamma(tree);
                for (std::size_t j = 0; j < cfg.trainsets_per_tree; ++j, ++trial) {
                    const auto s = derive_seed(cfg.seed, 1, size, i, train, j);
                    Rng rng(s);
                    auto r = detail::run_trial(gamma, lab.red, lab.blue, train, rng);
                    r.dim_or_size = size;
                    r.trial = trial;
                    r.seed = s;
                    acc.add(r);
                    if (observe) observe(r);
                }
            }
            out.push_back(acc.finish("d1", size, train, cfg.seed));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// D2: point classification with linearly separable classes

struct D2Config {
    std::vector<std::size_t> dims{2, 3, 4};
    std::vector<std::size_t> train_sizes{10, 20, 50, 100};
    std::size_t instances_per_dim = 50;
    std::size_t n_per_class = 200;
    double margin = 0.05;
    std::uint64_t seed = 1;
};

inline std::vector<CellResult> run_d2(const D2Config& cfg, const TrialObserver& observe = {}) {
    if (cfg.dims.empty() || cfg.train_sizes.empty()) throw std::invalid_argument("D2 grid must be non-empty");
    std::vector<CellResult> out;
    for (auto d : cfg.dims) {
        std::vector<detail::CellAccumulator> acc(cfg.train_sizes.size());
        for (std::size_t i = 0; i < cfg.instances_per_dim; ++i) {
            auto inst = generate_d2_instance(d, cfg.n_per_class, cfg.margin, derive_seed(cfg.seed, 2, d, i));
            const ElementSet pos = inst.positives(), neg = inst.negatives();
            AlphaClosure alpha(inst.points);
            for (std::size_t k = 0; k < cfg.train_sizes.size(); ++k) {
                const auto train = cfg.train_sizes[k];
                const auto s = derive_seed(cfg.seed, 2, d, i, train);
                Rng rng(s);
                auto r = detail::run_trial(alpha, pos, neg, train, rng);
                r.dim_or_size = d;
                r.trial = i;
                r.seed = s;
                acc[k].add(r);
                if (observe) observe(r);
            }
        }
        for (std::size_t k = 0; k < cfg.train_sizes.size(); ++k)
            out.push_back(acc[k].finish("d2", d, cfg.train_sizes[k], cfg.seed));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* cell_csv_header =
    "experiment,dim_or_size,train_size,trials,mean_accuracy,mean_coverage,undefined_count,mean_closure_calls,seed";

/// Shortest representation that parses back to the same double.
inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw std::runtime_error("cannot format number");
    return std::string(buf, end);
}

inline void write_cells_csv(std::ostream& os, const std::vector<CellResult>& cells) {
    os << cell_csv_header << '\n';
    for (const auto& c : cells)
        os << c.experiment << ',' << c.dim_or_size << ',' << c.train_size << ',' << c.trials << ','
           << format_double(c.mean_accuracy) << ',' << format_double(c.mean_coverage) << ',' << c.undefined_count
           << ',' << format_double(c.mean_closure_calls) << ',' << c.seed << '\n';
}

inline std::vector<CellResult> read_cells_csv(std::istream& is, const std::string& source = "<csv>") {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (!std::getline(is, line)) {
        lineno = 1;
        fail("missing header");
    }
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != cell_csv_header) fail("unexpected header");

    auto to_uint = [&](const std::string& f, auto& out) {
        auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
        if (ec != std::errc{} || p != f.data() + f.size()) fail("bad integer '" + f + "'");
    };
    auto to_double = [&](const std::string& f) {
        if (f == "nan") return std::numeric_limits<double>::quiet_NaN();
        double v = 0;
        auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc{} || p != f.data() + f.size()) fail("bad number '" + f + "'");
        return v;
    };

    std::vector<CellResult> out;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 9) fail("expected 9 fields, got " + std::to_string(f.size()));
        CellResult c;
        c.experiment = f[0];
        to_uint(f[1], c.dim_or_size);
        to_uint(f[2], c.train_size);
        to_uint(f[3], c.trials);
        c.mean_accuracy = to_double(f[4]);
        c.mean_coverage = to_double(f[5]);
        to_uint(f[6], c.undefined_count);
        c.mean_closure_calls = to_double(f[7]);
        to_uint(f[8], c.seed);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace halfsep

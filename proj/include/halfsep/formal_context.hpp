#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "lattice.hpp"
#include "random.hpp"

namespace halfsep {

/// Binary object x attribute incidence matrix with names.
class FormalContext {
public:
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  const std::vector<std::vector<bool>>& incidence)
        : objects_(std::move(objects)), attributes_(std::move(attributes)) {
        if (objects_.empty() || attributes_.empty()) throw std::invalid_argument("context needs objects and attributes");
        if (incidence.size() != objects_.size()) throw std::invalid_argument("one incidence row per object required");
        for (const auto& row : incidence) {
            if (row.size() != attributes_.size()) throw std::invalid_argument("incidence row has the wrong length");
            ElementSet r(attributes_.size());
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j]) r.insert(j);
            rows_.push_back(std::move(r));
        }
        check_unique(objects_, "object");
        check_unique(attributes_, "attribute");
    }

    /// Objects o1..on and attributes a1..am.
    static FormalContext from_rows(const std::vector<std::vector<bool>>& incidence) {
        if (incidence.empty()) throw std::invalid_argument("context needs objects and attributes");
        std::vector<std::string> o, a;
        for (std::size_t i = 0; i < incidence.size(); ++i) o.push_back("o" + std::to_string(i + 1));
        for (std::size_t j = 0; j < incidence.front().size(); ++j) a.push_back("a" + std::to_string(j + 1));
        return FormalContext(std::move(o), std::move(a), incidence);
    }

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }
    bool incident(std::size_t o, std::size_t a) const { return rows_.at(o).contains(a); }
    const ElementSet& row(std::size_t o) const { return rows_.at(o); }

    /// Attributes shared by all objects in X (all attributes when X is empty).
    ElementSet intent_of(const ElementSet& objs) const {
        ElementSet out = ElementSet::full(attribute_count());
        objs.for_each([&](std::size_t o) { out &= rows_[o]; });
        return out;
    }
    /// Objects having every attribute in Y.
    ElementSet extent_of(const ElementSet& attrs) const {
        ElementSet out(object_count());
        for (std::size_t o = 0; o < object_count(); ++o)
            if (attrs.is_subset_of(rows_[o])) out.insert(o);
        return out;
    }

private:
    static void check_unique(const std::vector<std::string>& names, const char* what) {
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        auto it = std::adjacent_find(sorted.begin(), sorted.end());
        if (it != sorted.end()) throw std::invalid_argument(std::string("duplicate ") + what + " name '" + *it + "'");
    }

    std::vector<std::string> objects_, attributes_;
    std::vector<ElementSet> rows_;
};

inline FormalContext random_context(std::size_t objects, std::size_t attributes, double density, Rng& rng) {
    std::vector<std::vector<bool>> m(objects, std::vector<bool>(attributes));
    for (auto& r : m)
        for (std::size_t j = 0; j < attributes; ++j) r[j] = uniform01(rng) < density;
    return FormalContext::from_rows(m);
}

struct Concept {
    ElementSet extent;
    ElementSet intent;
};

/// Concept lattice ordered by extent inclusion; element i is concepts[i].
struct ConceptLattice {
    FiniteLattice lattice;
    std::vector<Concept> concepts;

    /// The smallest concept whose extent contains the given objects.
    std::size_t concept_of_objects(const FormalContext& ctx, const ElementSet& objs) const {
        const ElementSet ext = ctx.extent_of(ctx.intent_of(objs));
        for (std::size_t i = 0; i < concepts.size(); ++i)
            if (concepts[i].extent == ext) return i;
        throw std::logic_error("concept lattice is missing a closed extent");
    }
};

/// "(o1o4,a4)"-style label; the empty side prints as an empty-set sign.
inline std::string concept_label(const FormalContext& ctx, const Concept& c) {
    auto part = [](const ElementSet& s, const std::vector<std::string>& names) {
        if (s.empty()) return std::string("∅");
        std::string out;
        s.for_each([&](std::size_t i) { out += names[i]; });
        return out;
    };
    return "(" + part(c.extent, ctx.objects()) + "," + part(c.intent, ctx.attributes()) + ")";
}

/**
 * @brief All formal concepts, enumerated as closed intents in lectic order
 * (NextClosure), then sorted by extent size and extent members.
 */
inline ConceptLattice concept_lattice(const FormalContext& ctx, std::size_t max_concepts = default_lattice_bound) {
    const std::size_t m = ctx.attribute_count();
    auto close = [&](const ElementSet& y) { return ctx.intent_of(ctx.extent_of(y)); };

    std::vector<Concept> concepts;
    ElementSet y = close(ElementSet(m));
    for (;;) {
        concepts.push_back({ctx.extent_of(y), y});
        require_bound("concept_lattice", concepts.size(), max_concepts);
        bool advanced = false;
        for (std::size_t i = m; i-- > 0;) {
            if (y.contains(i)) continue;
            ElementSet prefix(m);
            y.for_each([&](std::size_t e) {
                if (e < i) prefix.insert(e);
            });
            ElementSet next = close(prefix.with(i));
            bool canonical = true;
            next.for_each([&](std::size_t e) {
                if (e < i && !prefix.contains(e)) canonical = false;
            });
            if (canonical) {
                y = std::move(next);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(concepts.begin(), concepts.end(),
              [](const Concept& a, const Concept& b) { return canonical_less(a.extent, b.extent); });

    std::vector<ElementSet> extents;
    std::vector<std::string> labels;
    for (const auto& c : concepts) {
        extents.push_back(c.extent);
        labels.push_back(concept_label(ctx, c));
    }
    return ConceptLattice{lattice_from_family(extents, std::move(labels), max_concepts), std::move(concepts)};
}

/// Objects by name; unknown names throw.
inline ElementSet objects_by_name(const FormalContext& ctx, const std::vector<std::string>& names) {
    ElementSet out(ctx.object_count());
    for (const auto& n : names) {
        auto it = std::find(ctx.objects().begin(), ctx.objects().end(), n);
        if (it == ctx.objects().end()) throw std::invalid_argument("unknown object '" + n + "'");
        out.insert(static_cast<std::size_t>(it - ctx.objects().begin()));
    }
    return out;
}

}  // namespace halfsep

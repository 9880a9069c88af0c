#pragma once

// Command-line front end. Exit codes: 0 result, 2 negative answer
// ("Inseparable" / "No"), 1 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfsep/halfsep.hpp"

namespace halfsep::cli {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_negative = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { table, csv, json };

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        auto b = f.find_first_not_of(" \t");
        auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return out;
}

inline std::vector<std::size_t> parse_ids(const std::string& list, const char* flag) {
    std::vector<std::size_t> out;
    for (const auto& tok : split(list, ',')) {
        std::size_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            throw UsageError(std::string(flag) + ": expected comma-separated element ids, got '" + list + "'");
        out.push_back(v);
    }
    return out;
}

inline ElementSet ids_to_set(const std::vector<std::size_t>& ids, std::size_t n, const char* flag) {
    ElementSet s(n);
    for (auto v : ids) {
        if (v >= n) throw UsageError(std::string(flag) + ": element " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        s.insert(v);
    }
    return s;
}

inline json set_json(const ElementSet& s) {
    json a = json::array();
    s.for_each([&](std::size_t e) { a.push_back(e); });
    return a;
}

/// Space-separated members for CSV cells.
inline std::string set_cell(const ElementSet& s) {
    std::string out;
    s.for_each([&](std::size_t e) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    });
    return out;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline Format parse_format(const std::string& f) {
    if (f == "table") return Format::table;
    if (f == "csv") return Format::csv;
    if (f == "json") return Format::json;
    throw UsageError("--format must be table, csv or json");
}

inline ExtensionOrder parse_order(const std::string& o, std::uint64_t seed) {
    if (o == "asc") return ExtensionOrder::ascending();
    if (o == "random") return ExtensionOrder::random(seed);
    throw UsageError("--order must be asc or random");
}

// ---------------------------------------------------------------------------

struct Common {
    std::string format = "table";
    std::uint64_t seed = 1;
    std::size_t max_n = 0;  // 0: subcommand default

    std::size_t bound(std::size_t fallback) const { return max_n ? max_n : fallback; }
};

inline void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--max-n", c.max_n, "Size bound for exhaustive checks");
}

// separate-graph -------------------------------------------------------------

struct SeparateGraphArgs {
    Common common;
    std::string graph, a, b, order = "asc";
};

inline int separate_graph(const SeparateGraphArgs& args, std::ostream& out) {
    const auto g = load_graph(args.graph);
    const std::size_t bound = args.common.bound(100000);
    if (g.size() > bound) throw UsageError("graph has " + std::to_string(g.size()) + " vertices, above --max-n " + std::to_string(bound));
    const auto a = ids_to_set(parse_ids(args.a, "--a"), g.size(), "--a");
    const auto b = ids_to_set(parse_ids(args.b, "--b"), g.size(), "--b");
    GeodesicClosure gamma(g);
    InstrumentedClosure<GeodesicClosure> counted(gamma);
    const auto res = mcs_separate(counted, a, b, parse_order(args.order, args.common.seed));
    const auto fmt = parse_format(args.common.format);
    const auto* s = std::get_if<Separation>(&res);

    if (fmt == Format::json) {
        json j;
        j["result"] = s ? "separated" : "inseparable";
        if (s) {
            j["h1"] = set_json(s->first);
            j["h2"] = set_json(s->second);
            j["closure_calls"] = s->closure_calls;
            j["partition"] = s->is_partition();
        } else {
            j["closure_calls"] = counted.calls();
        }
        out << j.dump() << '\n';
    } else if (fmt == Format::csv) {
        out << "result,h1,h2,closure_calls,partition\n";
        if (s)
            out << "separated," << set_cell(s->first) << ',' << set_cell(s->second) << ',' << s->closure_calls << ','
                << yes_no(s->is_partition()) << '\n';
        else
            out << "inseparable,,," << counted.calls() << ",\n";
    } else {
        if (s) {
            out << "H1: " << s->first.to_string() << '\n'
                << "H2: " << s->second.to_string() << '\n'
                << "closure calls: " << s->closure_calls << '\n'
                << "partition: " << yes_no(s->is_partition()) << '\n';
        } else {
            out << "Inseparable: closures of A and B intersect\n";
        }
    }
    return s ? exit_ok : exit_negative;
}

// separate-lattice -----------------------------------------------------------

struct SeparateLatticeArgs {
    Common common;
    std::string lattice, context, a, b, order = "asc";
    std::size_t partitions = 0;
    bool full = false;
};

struct LoadedLattice {
    FiniteLattice lattice;
    std::vector<std::size_t> a, b;
};

inline LoadedLattice load_lattice_input(const SeparateLatticeArgs& args) {
    const int sources = !args.lattice.empty() + !args.context.empty() + (args.partitions > 0);
    if (sources != 1) throw UsageError("give exactly one of --lattice, --context or --partitions");
    LoadedLattice ll;
    if (!args.lattice.empty()) {
        ll.lattice = load_lattice(args.lattice, args.common.bound(default_lattice_bound));
        auto check = [&](const std::string& list, const char* flag) {
            auto ids = parse_ids(list, flag);
            for (auto v : ids)
                if (v >= ll.lattice.size()) throw UsageError(std::string(flag) + ": element " + std::to_string(v) + " out of range");
            return ids;
        };
        ll.a = check(args.a, "--a");
        ll.b = check(args.b, "--b");
    } else if (!args.context.empty()) {
        const auto ctx = load_context(args.context);
        auto cl = concept_lattice(ctx, args.common.bound(default_lattice_bound));
        // each ';'-separated item is an object list naming the smallest concept containing it
        auto concepts = [&](const std::string& list) {
            std::vector<std::size_t> ids;
            for (const auto& item : split(list, ';')) {
                std::vector<std::string> names;
                for (const auto& n : split(item, ','))
                    if (!n.empty()) names.push_back(n);
                ElementSet objs(ctx.object_count());
                try {
                    objs = objects_by_name(ctx, names);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                ids.push_back(cl.concept_of_objects(ctx, objs));
            }
            return ids;
        };
        ll.a = concepts(args.a);
        ll.b = concepts(args.b);
        ll.lattice = std::move(cl.lattice);
    } else {
        auto pl = partition_lattice(args.partitions, args.common.bound(7));
        auto parts = [&](const std::string& list) {
            std::vector<std::size_t> ids;
            for (const auto& item : split(list, ';')) {
                try {
                    ids.push_back(pl.index_of(item));
                } catch (const std::invalid_argument& e) {
                    throw UsageError("'" + item + "': " + e.what());
                }
            }
            return ids;
        };
        ll.a = parts(args.a);
        ll.b = parts(args.b);
        ll.lattice = std::move(pl.lattice);
    }
    if (ll.a.empty() || ll.b.empty()) throw UsageError("--a and --b must be non-empty");
    return ll;
}

inline int separate_lattice(const SeparateLatticeArgs& args, std::ostream& out) {
    const auto ll = load_lattice_input(args);
    const auto& L = ll.lattice;
    CoverChoice choice = CoverChoice::lowest_index();
    if (args.order == "random")
        choice = CoverChoice::random(args.common.seed);
    else if (args.order != "asc")
        throw UsageError("--order must be asc or random");
    const auto res = lattice_separate(L, std::span<const std::size_t>(ll.a), std::span<const std::size_t>(ll.b), choice);
    const auto fmt = parse_format(args.common.format);
    const auto& r = res.result;

    auto labels = [&](const ElementSet& s) {
        std::vector<std::string> v;
        s.for_each([&](std::size_t e) { v.push_back(L.label(e)); });
        return v;
    };

    if (fmt == Format::json) {
        json j;
        j["result"] = r ? "separated" : "no";
        if (r) {
            j["top_ideal"] = r->top_ideal;
            j["top_ideal_label"] = L.label(r->top_ideal);
            j["bottom_filter"] = r->bottom_filter;
            j["bottom_filter_label"] = L.label(r->bottom_filter);
            j["a_in_ideal"] = r->a_in_ideal;
            j["partition"] = r->is_partition(L);
        }
        j["comparisons"] = res.stats.comparisons;
        out << j.dump() << '\n';
        if (r && args.full) {
            out << json{{"ideal", set_json(r->ideal(L))}, {"ideal_labels", labels(r->ideal(L))}}.dump() << '\n';
            out << json{{"filter", set_json(r->filter(L))}, {"filter_labels", labels(r->filter(L))}}.dump() << '\n';
        }
    } else if (fmt == Format::csv) {
        out << "result,top_ideal,top_ideal_label,bottom_filter,bottom_filter_label,a_in_ideal,partition,comparisons\n";
        if (r)
            out << "separated," << r->top_ideal << ',' << csv_quote(L.label(r->top_ideal)) << ',' << r->bottom_filter << ','
                << csv_quote(L.label(r->bottom_filter)) << ',' << yes_no(r->a_in_ideal) << ','
                << yes_no(r->is_partition(L)) << ',' << res.stats.comparisons << '\n';
        else
            out << "no,,,,,,," << res.stats.comparisons << '\n';
    } else {
        if (r) {
            out << "top of ideal: " << L.label(r->top_ideal) << '\n'
                << "bottom of filter: " << L.label(r->bottom_filter) << '\n'
                << "A in ideal: " << yes_no(r->a_in_ideal) << '\n'
                << "partition: " << yes_no(r->is_partition(L)) << '\n'
                << "comparisons: " << res.stats.comparisons << '\n';
            if (args.full) {
                auto join = [](const std::vector<std::string>& v) {
                    std::string s;
                    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
                    return s;
                };
                out << "ideal: " << join(labels(r->ideal(L))) << '\n' << "filter: " << join(labels(r->filter(L))) << '\n';
            }
        } else {
            out << "No: closures of A and B intersect\n";
        }
    }
    return r ? exit_ok : exit_negative;
}

// pasch ------------------------------------------------------------------------

struct GraphArgs {
    Common common;
    std::string graph;
};

inline int pasch(const GraphArgs& args, std::ostream& out) {
    const auto g = load_graph(args.graph);
    const auto res = pasch_check(g, args.common.bound(60));
    const auto fmt = parse_format(args.common.format);
    if (fmt == Format::json) {
        json j;
        j["pasch"] = res.holds;
        if (res.witness) j["witness"] = {{"u", (*res.witness)[0]}, {"v", (*res.witness)[1]}, {"w", (*res.witness)[2]},
                                          {"x", (*res.witness)[3]}, {"y", (*res.witness)[4]}};
        out << j.dump() << '\n';
    } else if (fmt == Format::csv) {
        out << "pasch,u,v,w,x,y\n" << yes_no(res.holds);
        if (res.witness)
            for (auto v : *res.witness) out << ',' << v;
        else
            out << ",,,,,";
        out << '\n';
    } else {
        out << "Pasch: " << (res.holds ? "holds" : "violated") << '\n';
        if (res.witness) {
            const auto& w = *res.witness;
            out << "witness (u v w x y): " << w[0] << ' ' << w[1] << ' ' << w[2] << ' ' << w[3] << ' ' << w[4] << '\n';
        }
    }
    return exit_ok;
}

// kakutani ---------------------------------------------------------------------

struct KakutaniArgs {
    Common common;
    std::string graph, lattice, context, points;
    std::size_t trials = 200;
};

inline int kakutani(const KakutaniArgs& args, std::ostream& out) {
    const int sources = !args.graph.empty() + !args.lattice.empty() + !args.context.empty() + !args.points.empty();
    if (sources != 1) throw UsageError("give exactly one of --graph, --lattice, --context or --points");
    json j;
    std::vector<std::pair<std::string, std::string>> rows;
    auto verdict_rows = [&](const KakutaniVerdict& v) {
        j["kakutani"] = v.kakutani;
        j["closed_sets"] = v.closed_sets;
        j["half_spaces"] = v.half_spaces;
        rows.emplace_back("Kakutani", yes_no(v.kakutani));
        rows.emplace_back("closed sets", std::to_string(v.closed_sets));
        rows.emplace_back("half-spaces", std::to_string(v.half_spaces));
        if (v.witness) {
            j["witness"] = {set_json(v.witness->first), set_json(v.witness->second)};
            rows.emplace_back("witness", v.witness->first.to_string() + " " + v.witness->second.to_string());
        }
    };

    if (!args.graph.empty()) {
        const auto g = load_graph(args.graph);
        const auto bound = args.common.bound(OracleBounds{}.kakutani);
        GeodesicClosure gamma(g);
        j["system"] = "graph";
        const auto p = pasch_check(gamma, std::max<std::size_t>(bound, 60));
        j["pasch"] = p.holds;
        rows.emplace_back("Pasch", p.holds ? "holds" : "violated");
        verdict_rows(brute_force_kakutani(gamma, bound));
    } else if (!args.points.empty()) {
        const auto pf = load_points(args.points);
        AlphaClosure alpha(pf.points);
        j["system"] = "points";
        verdict_rows(brute_force_kakutani(alpha, args.common.bound(OracleBounds{}.kakutani)));
    } else {
        FiniteLattice L = !args.lattice.empty() ? load_lattice(args.lattice, args.common.bound(500))
                                                : concept_lattice(load_context(args.context), args.common.bound(500)).lattice;
        const auto rep = lattice_kakutani_check(L, args.trials, args.common.seed, 24, args.common.bound(500));
        j["system"] = "lattice";
        j["kakutani"] = rep.distributive;
        j["distributive"] = rep.distributive;
        j["runs"] = rep.runs;
        j["partition_runs"] = rep.partition_runs;
        j["consistent"] = rep.consistent();
        rows.emplace_back("Kakutani", yes_no(rep.distributive));
        rows.emplace_back("distributive", yes_no(rep.distributive));
        rows.emplace_back("separation runs", std::to_string(rep.runs));
        rows.emplace_back("partition runs", std::to_string(rep.partition_runs));
        rows.emplace_back("consistent", yes_no(rep.consistent()));
        if (rep.witness) {
            auto list = [](const std::vector<std::size_t>& v) {
                std::string s;
                for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
                return s;
            };
            j["witness"] = {rep.witness->first, rep.witness->second};
            rows.emplace_back("witness", list(rep.witness->first) + " " + list(rep.witness->second));
        }
    }

    const auto fmt = parse_format(args.common.format);
    if (fmt == Format::json) {
        out << j.dump() << '\n';
    } else if (fmt == Format::csv) {
        out << "property,value\n";
        for (const auto& [k, v] : rows) out << csv_quote(k) << ',' << csv_quote(v) << '\n';
    } else {
        for (const auto& [k, v] : rows) out << k << ": " << v << '\n';
    }
    return exit_ok;
}

// fca --------------------------------------------------------------------------

struct FcaArgs {
    Common common;
    std::string context;
};

inline int fca(const FcaArgs& args, std::ostream& out) {
    const auto ctx = load_context(args.context);
    const auto cl = concept_lattice(ctx, args.common.bound(default_lattice_bound));
    const auto& L = cl.lattice;
    auto names = [](const ElementSet& s, const std::vector<std::string>& n) {
        std::vector<std::string> v;
        s.for_each([&](std::size_t i) { v.push_back(n[i]); });
        return v;
    };
    auto joined = [](const std::vector<std::string>& v, const char* sep) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
        return s;
    };
    auto ids = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
        return s;
    };
    const auto fmt = parse_format(args.common.format);
    if (fmt == Format::json) {
        for (std::size_t i = 0; i < L.size(); ++i) {
            json j;
            j["id"] = i;
            j["label"] = L.label(i);
            j["extent"] = names(cl.concepts[i].extent, ctx.objects());
            j["intent"] = names(cl.concepts[i].intent, ctx.attributes());
            j["upper_covers"] = L.upper_covers(i);
            out << j.dump() << '\n';
        }
    } else if (fmt == Format::csv) {
        out << "id,label,extent,intent,upper_covers\n";
        for (std::size_t i = 0; i < L.size(); ++i)
            out << i << ',' << csv_quote(L.label(i)) << ',' << joined(names(cl.concepts[i].extent, ctx.objects()), " ") << ','
                << joined(names(cl.concepts[i].intent, ctx.attributes()), " ") << ',' << ids(L.upper_covers(i)) << '\n';
    } else {
        out << "concepts: " << L.size() << '\n';
        for (std::size_t i = 0; i < L.size(); ++i)
            out << std::setw(4) << i << "  " << L.label(i) << "  covers: " << ids(L.upper_covers(i)) << '\n';
    }
    return exit_ok;
}

// experiments ------------------------------------------------------------------

inline void write_cells(std::ostream& out, const std::vector<CellResult>& cells, Format fmt) {
    if (fmt == Format::csv) {
        write_cells_csv(out, cells);
    } else if (fmt == Format::json) {
        for (const auto& c : cells) {
            json j;
            j["experiment"] = c.experiment;
            j["dim_or_size"] = c.dim_or_size;
            j["train_size"] = c.train_size;
            j["trials"] = c.trials;
            j["mean_accuracy"] = std::isnan(c.mean_accuracy) ? json(nullptr) : json(c.mean_accuracy);
            j["mean_coverage"] = std::isnan(c.mean_coverage) ? json(nullptr) : json(c.mean_coverage);
            j["undefined_count"] = c.undefined_count;
            j["mean_closure_calls"] = std::isnan(c.mean_closure_calls) ? json(nullptr) : json(c.mean_closure_calls);
            j["seed"] = c.seed;
            out << j.dump() << '\n';
        }
    } else {
        std::ostringstream os;
        os << std::left << std::setw(5) << "exp" << std::right << std::setw(8) << "size/d" << std::setw(7) << "train"
           << std::setw(8) << "trials" << std::setw(10) << "accuracy" << std::setw(10) << "coverage" << std::setw(7)
           << "undef" << std::setw(12) << "calls" << '\n';
        for (const auto& c : cells)
            os << std::left << std::setw(5) << c.experiment << std::right << std::setw(8) << c.dim_or_size << std::setw(7)
               << c.train_size << std::setw(8) << c.trials << std::fixed << std::setprecision(4) << std::setw(10)
               << c.mean_accuracy << std::setw(10) << c.mean_coverage << std::setw(7) << c.undefined_count
               << std::setprecision(1) << std::setw(12) << c.mean_closure_calls << '\n';
        out << os.str();
    }
}

struct D1Args {
    Common common;
    std::vector<std::size_t> sizes{1000}, train{40};
    std::size_t trees = 10, sets = 10;
};

inline int experiment_d1(const D1Args& args, std::ostream& out) {
    D1Config cfg;
    cfg.tree_sizes = args.sizes;
    cfg.train_sizes = args.train;
    cfg.trees_per_size = args.trees;
    cfg.trainsets_per_tree = args.sets;
    cfg.seed = args.common.seed;
    const auto bound = args.common.bound(100000);
    for (auto s : cfg.tree_sizes) {
        if (s > bound) throw UsageError("tree size " + std::to_string(s) + " above --max-n " + std::to_string(bound));
        for (auto t : cfg.train_sizes)
            if (t < 2 || t > s) throw UsageError("train size " + std::to_string(t) + " must be in 2.." + std::to_string(s));
    }
    if (cfg.trees_per_size == 0 || cfg.trainsets_per_tree == 0) throw UsageError("--trees and --sets must be positive");
    write_cells(out, run_d1(cfg), parse_format(args.common.format));
    return exit_ok;
}

struct D2Args {
    Common common;
    std::vector<std::size_t> dims{2, 3, 4}, train{10, 20, 50, 100};
    std::size_t instances = 50, n_per_class = 200;
    double margin = 0.05;
};

inline int experiment_d2(const D2Args& args, std::ostream& out) {
    D2Config cfg;
    cfg.dims = args.dims;
    cfg.train_sizes = args.train;
    cfg.instances_per_dim = args.instances;
    cfg.n_per_class = args.n_per_class;
    cfg.margin = args.margin;
    cfg.seed = args.common.seed;
    for (auto d : cfg.dims)
        if (d < 1 || d > 8) throw UsageError("dimension must be in 1..8");
    if (cfg.n_per_class == 0 || cfg.n_per_class > args.common.bound(5000))
        throw UsageError("--n-per-class must be in 1..--max-n (default 5000)");
    if (!(cfg.margin > 0) || cfg.margin >= 1) throw UsageError("--margin must be in (0, 1)");
    for (auto t : cfg.train_sizes)
        if (t < 2 || t > 2 * cfg.n_per_class) throw UsageError("train size " + std::to_string(t) + " out of range");
    write_cells(out, run_d2(cfg), parse_format(args.common.format));
    return exit_ok;
}

// laws -------------------------------------------------------------------------

struct LawsArgs {
    Common common;
    std::string graph, lattice, context, points;
    std::size_t trials = 1000;
};

inline int laws(const LawsArgs& args, std::ostream& out) {
    const int sources = !args.graph.empty() + !args.lattice.empty() + !args.context.empty() + !args.points.empty();
    if (sources != 1) throw UsageError("give exactly one of --graph, --lattice, --context or --points");
    LawReport rep;
    std::string name;
    if (!args.graph.empty()) {
        rep = verify_closure_laws(GeodesicClosure(load_graph(args.graph)), args.trials, args.common.seed);
        name = "gamma";
    } else if (!args.points.empty()) {
        rep = verify_closure_laws(AlphaClosure(load_points(args.points).points), args.trials, args.common.seed);
        name = "alpha";
    } else {
        FiniteLattice L = !args.lattice.empty() ? load_lattice(args.lattice, args.common.bound(default_lattice_bound))
                                                : concept_lattice(load_context(args.context)).lattice;
        rep = verify_closure_laws(LambdaClosure(L), args.trials, args.common.seed);
        name = "lambda";
    }
    const std::pair<const char*, const LawCheck*> checks[] = {
        {"extensive", &rep.extensivity}, {"monotone", &rep.monotonicity}, {"idempotent", &rep.idempotency}};
    const auto fmt = parse_format(args.common.format);
    if (fmt == Format::json) {
        json j;
        j["operator"] = name;
        j["samples"] = rep.samples;
        for (auto [k, c] : checks) {
            j[k] = c->passed;
            if (c->witness) j[std::string(k) + "_witness"] = set_json(*c->witness);
        }
        j["passed"] = rep.passed();
        out << j.dump() << '\n';
    } else if (fmt == Format::csv) {
        out << "operator,samples,extensive,monotone,idempotent,passed\n"
            << name << ',' << rep.samples << ',' << yes_no(rep.extensivity.passed) << ','
            << yes_no(rep.monotonicity.passed) << ',' << yes_no(rep.idempotency.passed) << ',' << yes_no(rep.passed())
            << '\n';
    } else {
        out << "operator: " << name << "\nsamples: " << rep.samples << '\n';
        for (auto [k, c] : checks) {
            out << k << ": " << (c->passed ? "ok" : "FAILED");
            if (c->witness) out << " witness " << c->witness->to_string();
            out << '\n';
        }
    }
    return rep.passed() ? exit_ok : exit_error;
}

// dispatch ---------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Half-space and maximal closed set separation in finite closure systems", "halfsep"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for all subcommands");

    SeparateGraphArgs sg;
    auto* c_sg = app.add_subcommand("separate-graph", "Maximal closed set separation under geodesic convexity");
    c_sg->add_option("--graph", sg.graph, "Graph file (\"n m\" then edges)")->required();
    c_sg->add_option("--a", sg.a, "Vertices of A, comma-separated")->required();
    c_sg->add_option("--b", sg.b, "Vertices of B, comma-separated")->required();
    c_sg->add_option("--order", sg.order, "Extension order")->check(CLI::IsMember({"asc", "random"}));
    add_common(c_sg, sg.common);

    SeparateLatticeArgs sl;
    auto* c_sl = app.add_subcommand("separate-lattice", "Ideal/filter separation in a finite lattice");
    c_sl->add_option("--lattice", sl.lattice, "Lattice file (\"n\" then \"child parent\" lines)");
    c_sl->add_option("--context", sl.context, "Formal context CSV; the lattice is its concept lattice");
    c_sl->add_option("--partitions", sl.partitions, "Use the partition lattice of {1..N}");
    c_sl->add_option("--a", sl.a,
                     "A: element ids (--lattice), ';'-separated object lists (--context) or partitions (--partitions)")
        ->required();
    c_sl->add_option("--b", sl.b, "B, same syntax as --a")->required();
    c_sl->add_option("--order", sl.order, "Cover choice: asc (lowest id) or random")->check(CLI::IsMember({"asc", "random"}));
    c_sl->add_flag("--full", sl.full, "Also list the ideal and filter elements");
    add_common(c_sl, sl.common);

    GraphArgs pa;
    auto* c_pa = app.add_subcommand("pasch", "Exhaustive Pasch axiom check for a connected graph");
    c_pa->add_option("--graph", pa.graph, "Graph file")->required();
    add_common(c_pa, pa.common);

    KakutaniArgs ka;
    auto* c_ka = app.add_subcommand("kakutani", "Kakutani property of a small closure system");
    c_ka->add_option("--graph", ka.graph, "Graph file (geodesic convexity)");
    c_ka->add_option("--lattice", ka.lattice, "Lattice file (interval closure)");
    c_ka->add_option("--context", ka.context, "Formal context CSV (interval closure on its concept lattice)");
    c_ka->add_option("--points", ka.points, "Point file (convex hull trace)");
    c_ka->add_option("--trials", ka.trials, "Random separation runs for lattices");
    add_common(c_ka, ka.common);

    FcaArgs fa;
    auto* c_fa = app.add_subcommand("fca", "List the formal concepts of a context");
    c_fa->add_option("--context", fa.context, "Formal context CSV")->required();
    add_common(c_fa, fa.common);

    D1Args d1;
    auto* c_d1 = app.add_subcommand("experiment-d1", "Vertex classification on random trees");
    c_d1->add_option("--sizes", d1.sizes, "Tree sizes")->delimiter(',');
    c_d1->add_option("--train", d1.train, "Training set sizes")->delimiter(',');
    c_d1->add_option("--trees", d1.trees, "Trees per size");
    c_d1->add_option("--sets", d1.sets, "Training sets per tree");
    add_common(c_d1, d1.common);

    D2Args d2;
    auto* c_d2 = app.add_subcommand("experiment-d2", "Point classification with separable classes");
    c_d2->add_option("--dims", d2.dims, "Dimensions")->delimiter(',');
    c_d2->add_option("--train", d2.train, "Training set sizes")->delimiter(',');
    c_d2->add_option("--instances", d2.instances, "Instances per dimension");
    c_d2->add_option("--n-per-class", d2.n_per_class, "Points per class");
    c_d2->add_option("--margin", d2.margin, "Rejection margin around the hidden hyperplane");
    add_common(c_d2, d2.common);

    LawsArgs la;
    auto* c_la = app.add_subcommand("laws", "Randomized closure-law check");
    c_la->add_option("--graph", la.graph, "Graph file (geodesic convexity)");
    c_la->add_option("--lattice", la.lattice, "Lattice file (interval closure)");
    c_la->add_option("--context", la.context, "Formal context CSV (interval closure on its concept lattice)");
    c_la->add_option("--points", la.points, "Point file (convex hull trace)");
    c_la->add_option("--trials", la.trials, "Random subsets to test");
    add_common(c_la, la.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }

    try {
        if (c_sg->parsed()) return separate_graph(sg, out);
        if (c_sl->parsed()) return separate_lattice(sl, out);
        if (c_pa->parsed()) return pasch(pa, out);
        if (c_ka->parsed()) return kakutani(ka, out);
        if (c_fa->parsed()) return fca(fa, out);
        if (c_d1->parsed()) return experiment_d1(d1, out);
        if (c_d2->parsed()) return experiment_d2(d2, out);
        if (c_la->parsed()) return laws(la, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    err << "error: no subcommand\n";
    return exit_error;
}

}  // namespace halfsep::cli

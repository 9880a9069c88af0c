#pragma once

// Partitions of {1..n} ordered by refinement: coarser is lower, so the single
// block is the bottom and the all-singletons partition is the top. This is the
// generalization order on single-predicate atoms P(x1..xn) with variable
// arguments, where equal variables mean equal blocks.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace halfsep {

/// Restricted growth string: block index per position, blocks numbered by first appearance.
using Partition = std::vector<std::uint8_t>;

inline Partition canonical_partition(const std::vector<std::size_t>& block_of) {
    Partition out(block_of.size());
    std::map<std::size_t, std::uint8_t> renum;
    for (std::size_t i = 0; i < block_of.size(); ++i) {
        auto [it, fresh] = renum.try_emplace(block_of[i], static_cast<std::uint8_t>(renum.size()));
        out[i] = it->second;
    }
    return out;
}

inline std::size_t block_count(const Partition& p) {
    std::size_t k = 0;
    for (auto b : p) k = std::max<std::size_t>(k, b + 1u);
    return k;
}

/// p <= q iff p is a coarsening of q.
inline bool partition_leq(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("partitions of different sizes");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (q[i] == q[j] && p[i] != p[j]) return false;
    return true;
}

/// "{1,2}{3}{4}{5}" with 1-based positions, blocks in order of first element.
inline std::string format_blocks(const Partition& p) {
    std::string out;
    for (std::size_t b = 0; b < block_count(p); ++b) {
        out += '{';
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == b) {
                if (!first) out += ',';
                out += std::to_string(i + 1);
                first = false;
            }
        out += '}';
    }
    return out;
}

/// "P(w,x,y,y,z)": k blocks take the last k letters up to 'z', in order of first appearance.
inline std::string format_atom(const Partition& p) {
    const std::size_t k = block_count(p);
    if (k > 26) throw std::invalid_argument("too many blocks for letter variables");
    std::string out = "P(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += static_cast<char>('z' - (k - 1) + p[i]);
    }
    return out + ")";
}

/// Parses "P(w,x,y,y,z)" (any variable names) or "{1,2}{3}".
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty partition");
    if (s.front() == '{') {
        std::vector<std::size_t> block_of;
        std::vector<bool> seen;
        std::size_t block = 0, pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '{') throw std::invalid_argument("expected '{' in partition '" + text + "'");
            auto close = s.find('}', pos);
            if (close == std::string::npos) throw std::invalid_argument("unterminated block in '" + text + "'");
            std::string body = s.substr(pos + 1, close - pos - 1);
            if (body.empty()) throw std::invalid_argument("empty block in '" + text + "'");
            std::size_t start = 0;
            while (start <= body.size()) {
                auto comma = body.find(',', start);
                if (comma == std::string::npos) comma = body.size();
                const std::string num = body.substr(start, comma - start);
                std::size_t idx = 0;
                try {
                    std::size_t used = 0;
                    idx = std::stoul(num, &used);
                    if (used != num.size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad position '" + num + "' in '" + text + "'");
                }
                if (idx == 0 || idx > 64) throw std::invalid_argument("position out of range in '" + text + "'");
                if (block_of.size() < idx) block_of.resize(idx, SIZE_MAX), seen.resize(idx, false);
                if (seen[idx - 1]) throw std::invalid_argument("position repeated in '" + text + "'");
                seen[idx - 1] = true;
                block_of[idx - 1] = block;
                start = comma + 1;
            }
            ++block;
            pos = close + 1;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw std::invalid_argument("blocks do not cover 1..n in '" + text + "'");
        return canonical_partition(block_of);
    }
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') throw std::invalid_argument("expected P(...) in '" + text + "'");
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::string> vars;
    std::size_t start = 0;
    while (start <= body.size()) {
        auto comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        vars.push_back(body.substr(start, comma - start));
        if (vars.back().empty()) throw std::invalid_argument("empty argument in '" + text + "'");
        start = comma + 1;
    }
    std::map<std::string, std::size_t> ids;
    std::vector<std::size_t> block_of;
    for (const auto& v : vars) block_of.push_back(ids.try_emplace(v, ids.size()).first->second);
    return canonical_partition(block_of);
}

struct PartitionLattice {
    std::size_t n = 0;
    FiniteLattice lattice;
    std::vector<Partition> partitions;

    std::size_t index_of(const Partition& p) const {
        auto it = std::lower_bound(partitions.begin(), partitions.end(), p);
        if (it == partitions.end() || *it != p) throw std::invalid_argument("not a partition of 1.." + std::to_string(n));
        return static_cast<std::size_t>(it - partitions.begin());
    }
    std::size_t index_of(const std::string& text) const { return index_of(parse_partition(text)); }
};

/// All partitions of {1..n} (Bell(n) elements) as restricted growth strings in lexicographic order.
inline std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    if (n == 0) return out;
    Partition p(n, 0);
    std::vector<std::uint8_t> maxp(n, 0);  // max of p[0..i-1]
    for (;;) {
        out.push_back(p);
        std::size_t i = n;
        while (--i > 0) {
            if (p[i] <= maxp[i]) break;
        }
        if (i == 0) break;
        ++p[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            maxp[j] = std::max(maxp[j - 1], p[j - 1]);
            p[j] = 0;
        }
    }
    return out;
}

inline PartitionLattice partition_lattice(std::size_t n, std::size_t max_n = 7) {
    if (n == 0) throw std::invalid_argument("partition lattice needs n >= 1");
    require_bound("partition_lattice", n, max_n);
    PartitionLattice pl;
    pl.n = n;
    pl.partitions = all_partitions(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < pl.partitions.size(); ++i) {
        const auto& q = pl.partitions[i];
        labels.push_back(format_blocks(q));
        const std::size_t k = block_count(q);
        // merging two blocks of q gives a partition covered by q
        for (std::size_t b1 = 0; b1 < k; ++b1)
            for (std::size_t b2 = b1 + 1; b2 < k; ++b2) {
                std::vector<std::size_t> merged(q.begin(), q.end());
                for (auto& b : merged)
                    if (b == b2) b = b1;
                edges.emplace_back(pl.index_of(canonical_partition(merged)), i);
            }
    }
    pl.lattice = build_lattice(pl.partitions.size(), edges, std::move(labels));
    return pl;
}

}  // namespace halfsep

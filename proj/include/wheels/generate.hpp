#pragma once

// Seeded random instances and orderly enumeration of terminal graphs up to
// rooted isomorphism.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wheels/dense.hpp"
#include "wheels/error.hpp"
#include "wheels/graph.hpp"
#include "wheels/planarity.hpp"
#include "wheels/terminal_graph.hpp"

namespace wheels {

/// mt19937_64 with plain modulo reduction, so sequences match across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// A random maximal planar graph on n vertices (insert shuffled pairs while
/// planarity holds), minus each edge with probability `drop`.
inline Graph random_planar(std::size_t n, double drop, Rng& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    rng.shuffle(pairs);
    std::vector<std::pair<int, int>> kept;
    for (const auto& p : pairs) {
        kept.push_back(p);
        if (!is_planar(Graph::with_indices(n, kept))) kept.pop_back();
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& p : kept) {
        if (!rng.chance(drop)) out.push_back(p);
    }
    return Graph::with_indices(n, out);
}

/// G(n, p) with the given vertex ids.
inline Graph random_graph(const std::vector<Vertex>& ids, double p, Rng& rng) {
    std::vector<Edge> es;
    for (std::size_t j = 1; j < ids.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (rng.chance(p)) es.emplace_back(ids[i], ids[j]);
        }
    }
    return Graph(ids, es);
}

struct GenerationFilters {
    bool disc_planar = true;                 // prune to (unordered) disc-planar graphs
    bool s_independent = false;              // no edge between terminals
    bool interior_neighbors_2 = false;       // every terminal sees two interior vertices (output only)
    std::function<bool(const TerminalGraph&)> accept;  // extra output filter
};

namespace detail {

/// Orderly generation by edge addition. A graph is stored as the upper
/// triangle read column by column; the canonical form is the largest such
/// string over permutations that fix the terminal block. Deleting the last
/// edge of a canonical graph leaves a canonical graph, so each class is
/// reached exactly once from its canonical parent.
class Orderly {
public:
    Orderly(std::size_t n, std::size_t s, const GenerationFilters& f) : n_(n), s_(s), f_(f) {
        if (s > n) throw input_error("more terminals than vertices");
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) pos_.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
        index_.assign(n * n, -1);
        for (std::size_t p = 0; p < pos_.size(); ++p) {
            index_[static_cast<std::size_t>(pos_[p].first) * n + static_cast<std::size_t>(pos_[p].second)] = static_cast<int>(p);
            index_[static_cast<std::size_t>(pos_[p].second) * n + static_cast<std::size_t>(pos_[p].first)] = static_cast<int>(p);
        }
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        auto mid = perm.begin() + static_cast<std::ptrdiff_t>(s);
        do {
            do {
                if (!std::is_sorted(perm.begin(), perm.end())) perms_.push_back(perm);
            } while (std::next_permutation(mid, perm.end()));
        } while (std::next_permutation(perm.begin(), mid));
        for (std::size_t i = 0; i < n; ++i) {
            ids_.push_back(i < s ? "t" + std::to_string(i + 1) : "i" + std::to_string(i - s + 1));
        }
    }

    template <class F>
    bool run(F&& visit) {
        std::vector<bool> code(pos_.size(), false);
        return extend(code, -1, visit);
    }

private:
    bool canonical(const std::vector<bool>& code) const {
        for (const auto& p : perms_) {
            // compare permuted code against code, most significant position first
            for (std::size_t q = 0; q < pos_.size(); ++q) {
                const auto [i, j] = pos_[q];
                const bool mine = code[q];
                const bool theirs = code[static_cast<std::size_t>(
                    index_[static_cast<std::size_t>(p[static_cast<std::size_t>(i)]) * n_ + static_cast<std::size_t>(p[static_cast<std::size_t>(j)])])];
                if (mine != theirs) {
                    if (theirs) return false;
                    break;
                }
            }
        }
        return true;
    }

    TerminalGraph build(const std::vector<bool>& code) const {
        std::vector<Edge> es;
        for (std::size_t q = 0; q < pos_.size(); ++q) {
            if (code[q]) es.emplace_back(ids_[static_cast<std::size_t>(pos_[q].first)], ids_[static_cast<std::size_t>(pos_[q].second)]);
        }
        return TerminalGraph(Graph(ids_, es), std::vector<Vertex>(ids_.begin(), ids_.begin() + static_cast<std::ptrdiff_t>(s_)), false);
    }

    bool output_ok(const TerminalGraph& tg) const {
        if (f_.interior_neighbors_2) {
            const Graph& g = tg.graph();
            for (const auto& t : tg.terminals()) {
                int inner = 0;
                for (const auto& w : g.neighbors(t)) inner += tg.is_terminal(w) ? 0 : 1;
                if (inner < 2) return false;
            }
        }
        return !f_.accept || f_.accept(tg);
    }

    template <class F>
    bool extend(std::vector<bool>& code, int last, F& visit) {
        const TerminalGraph tg = build(code);
        if (output_ok(tg) && !visit(tg)) return false;
        for (std::size_t q = static_cast<std::size_t>(last + 1); q < pos_.size(); ++q) {
            const auto [i, j] = pos_[q];
            if (f_.s_independent && static_cast<std::size_t>(j) < s_) continue;
            code[q] = true;
            bool keep = canonical(code);
            if (keep && f_.disc_planar && s_ > 0) keep = is_disc_planar(build(code));
            if (keep && f_.disc_planar && s_ == 0) keep = is_planar(build(code).graph());
            if (keep && !extend(code, static_cast<int>(q), visit)) return false;
            code[q] = false;
        }
        return true;
    }

    std::size_t n_, s_;
    const GenerationFilters& f_;
    std::vector<std::pair<int, int>> pos_;
    std::vector<int> index_;
    std::vector<std::vector<int>> perms_;
    std::vector<Vertex> ids_;
};

}  // namespace detail

/// Streams all pairwise non-rooted-isomorphic terminal graphs with s
/// terminals and s..n_max vertices (terminals t1.., interior i1..) to
/// visit(const TerminalGraph&), which returns false to stop.
template <class F>
void generate_terminal_graphs(std::size_t n_max, std::size_t s, const GenerationFilters& filters, F&& visit,
                              const SearchLimits& limits = SearchLimits{9}) {
    if (n_max > limits.max_vertices) {
        throw resource_limit_error("generation bound is " + std::to_string(limits.max_vertices) + " vertices");
    }
    for (std::size_t n = std::max<std::size_t>(s, 1); n <= n_max; ++n) {
        detail::Orderly gen(n, s, filters);
        if (!gen.run(visit)) return;
    }
}

template <class F>
void generate_terminal_planar(std::size_t n_max, std::size_t s, const GenerationFilters& filters, F&& visit,
                              const SearchLimits& limits = SearchLimits{9}) {
    if (s != 4 && s != 5) throw input_error("terminal count must be 4 or 5");
    generate_terminal_graphs(n_max, s, filters, std::forward<F>(visit), limits);
}

}  // namespace wheels

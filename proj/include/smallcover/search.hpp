#pragma once

// The two enumeration engines.  Color-Recursion walks facets in label order
// pruning with the simplex criteria; Block-Pasting enumerates truncated
// vectors over one block and pastes symmetry-derived copies along a fixed
// reorder sequence, splitting oversized intermediate sets.  Both emit the
// same sorted set of normalized non-singular coloring vectors.

#include "smallcover/coloring.hpp"
#include "smallcover/symmetry.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>

namespace smallcover {

enum class Engine { recursion, blockpaste };

struct SearchTask {
    const Polytope* polytope = nullptr;
    std::vector<Color> palette;                       // ascending, nonzero colors
    std::vector<std::pair<int, Color>> fixed_prefix;  // facet (0-based) -> color
    Engine engine = Engine::recursion;
    int split_threshold = 120000;
    bool fix_basis = true;  // pin facets 0..n-1 to e_1..e_n
};

inline std::vector<Color> standard_basis_colors(int n) {
    std::vector<Color> b(n);
    for (int i = 0; i < n; ++i) b[i] = static_cast<Color>(1 << i);
    return b;
}

inline std::vector<Color> full_palette(int n) {
    std::vector<Color> p;
    for (int c = 1; c < (1 << n); ++c) p.push_back(static_cast<Color>(c));
    return p;
}

namespace detail {

// Per-facet constraint lists against earlier facets: single colored
// neighbours, adjacent neighbour pairs, mutually adjacent triples.  The
// span checks reduce to XOR equalities because every sub-clique of a listed
// clique is itself listed.
struct SimplexChecks {
    std::vector<int> singles;
    std::vector<std::array<int, 2>> pairs;
    std::vector<std::array<int, 3>> triples;
};

template <class AdjFn>
std::vector<SimplexChecks> build_checks(int m, int dim, AdjFn adjacent) {
    std::vector<SimplexChecks> checks(m);
    for (int i = 0; i < m; ++i) {
        std::vector<int> pre;
        for (int j = 0; j < i; ++j)
            if (adjacent(i, j)) pre.push_back(j);
        auto& ck = checks[i];
        ck.singles = pre;
        if (dim < 3) continue;
        for (size_t a = 0; a < pre.size(); ++a)
            for (size_t b = a + 1; b < pre.size(); ++b) {
                if (!adjacent(pre[a], pre[b])) continue;
                ck.pairs.push_back({pre[a], pre[b]});
                if (dim < 4) continue;
                for (size_t c = b + 1; c < pre.size(); ++c)
                    if (adjacent(pre[a], pre[c]) && adjacent(pre[b], pre[c]))
                        ck.triples.push_back({pre[a], pre[b], pre[c]});
            }
    }
    return checks;
}

// Depth-first enumeration over a fixed facet order with ascending color
// candidates; emits every completed vector in lexicographic order.
inline void recurse_colorings(const std::vector<SimplexChecks>& checks,
                              const std::vector<Color>& palette,
                              const std::vector<Color>& pinned,  // 0 = free slot
                              std::vector<Color>& cur, int i,
                              const std::function<void(const std::vector<Color>&)>& emit) {
    const int m = static_cast<int>(cur.size());
    if (i == m) {
        emit(cur);
        return;
    }
    uint32_t forbid = 1;  // color 0 never allowed
    const auto& ck = checks[i];
    for (int j : ck.singles) forbid |= 1u << cur[j];
    for (const auto& pr : ck.pairs) forbid |= 1u << (cur[pr[0]] ^ cur[pr[1]]);
    for (const auto& tr : ck.triples) forbid |= 1u << (cur[tr[0]] ^ cur[tr[1]] ^ cur[tr[2]]);
    if (pinned[i]) {
        if (!(forbid >> pinned[i] & 1)) {
            cur[i] = pinned[i];
            recurse_colorings(checks, palette, pinned, cur, i + 1, emit);
            cur[i] = 0;
        }
        return;
    }
    for (Color c : palette) {
        if (forbid >> c & 1) continue;
        cur[i] = c;
        recurse_colorings(checks, palette, pinned, cur, i + 1, emit);
        cur[i] = 0;
    }
}

}  // namespace detail

// All GL-normalized non-singular coloring vectors over the task's palette,
// depth-first over facets in label order, sorted output.
inline std::vector<ColoringVector> color_recursion(const SearchTask& task) {
    const Polytope& P = *task.polytope;
    const int m = P.facet_count;
    const int n = P.dimension;

    std::vector<Color> pinned(m, 0);
    if (task.fix_basis) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!P.adjacent(i, j))
                    throw std::invalid_argument("color_recursion: first facets not mutually adjacent");
        auto basis = standard_basis_colors(n);
        for (int i = 0; i < n; ++i) pinned[i] = basis[i];
    }
    for (auto [facet, color] : task.fixed_prefix) pinned[facet] = color;

    auto checks = detail::build_checks(m, n, [&](int a, int b) { return P.adjacent(a, b); });
    std::vector<ColoringVector> out;
    std::vector<Color> cur(m, 0);
    detail::recurse_colorings(checks, task.palette, pinned, cur, 0,
                              [&](const ColoringVector& v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

// Prefix-constrained search: complete a partially known vector over the
// given palette (defaults to all of Z2^n \ {0}).
inline std::vector<ColoringVector> prefix_search(const Polytope& P, const ColoringVector& known,
                                                 int fixed_count,
                                                 std::vector<Color> palette = {}) {
    SearchTask task;
    task.polytope = &P;
    task.palette = palette.empty() ? full_palette(P.dimension) : std::move(palette);
    task.fix_basis = false;
    for (int i = 0; i < fixed_count; ++i) task.fixed_prefix.emplace_back(i, known[i]);
    return color_recursion(task);
}

// ---------------------------------------------------------------------------
// Block-Pasting
// ---------------------------------------------------------------------------

// Truncated vectors over a block: length-m arrays with 0 outside the block,
// satisfying restricted non-singularity on every clique inside the support.
using TruncatedVector = std::vector<Color>;

struct UnfixSets {
    std::vector<std::vector<Color>> unfix;   // B_1 rows, one color per block slot
    std::vector<std::vector<Color>> fixing;  // rows starting e_1..e_n
};

// Enumerate the unfix and fixing sets of the leading block b_1.
inline UnfixSets unfix_set_b1(const Polytope& P, const std::vector<Color>& palette) {
    auto b1 = P.block(0);
    const int bs = static_cast<int>(b1.size());
    auto checks = detail::build_checks(
        bs, P.dimension, [&](int a, int b) { return P.adjacent(b1[a], b1[b]); });
    UnfixSets sets;
    std::vector<Color> pinned(bs, 0), cur(bs, 0);
    detail::recurse_colorings(checks, palette, pinned, cur, 0,
                              [&](const std::vector<Color>& v) { sets.unfix.push_back(v); });
    auto basis = standard_basis_colors(P.dimension);
    for (const auto& row : sets.unfix) {
        bool fixed = true;
        for (int i = 0; i < P.dimension; ++i)
            if (row[i] != basis[i]) { fixed = false; break; }
        if (fixed) sets.fixing.push_back(row);
    }
    return sets;
}

// Column rearrangement: slot s of block b_i reads column order[s] of B_1,
// where the transfer permutation carries b_1 onto b_i.
inline std::vector<int> rearrange_order(const std::vector<int>& transfer_images,
                                        const std::vector<int>& block_members) {
    std::vector<int> order(block_members.size(), -1);
    for (size_t s = 0; s < block_members.size(); ++s) {
        for (size_t t = 0; t < block_members.size(); ++t)
            if (transfer_images[t] == block_members[s]) { order[s] = static_cast<int>(t); break; }
        if (order[s] < 0)
            throw std::runtime_error("rearrange_order: transfer does not map block onto block");
    }
    return order;
}

// The derived unfix set B_i as length-m truncated vectors.
inline std::vector<TruncatedVector> derived_block_set(const Polytope& P,
                                                      const std::vector<std::vector<Color>>& B1,
                                                      const FacetPermutation& transfer, int i) {
    auto bi = P.block(i);
    auto b1 = P.block(0);
    std::vector<int> first(transfer.images.begin(), transfer.images.begin() + b1.size());
    auto order = rearrange_order(first, bi);
    std::vector<TruncatedVector> out;
    out.reserve(B1.size());
    for (const auto& row : B1) {
        TruncatedVector t(P.facet_count, 0);
        for (size_t s = 0; s < bi.size(); ++s) t[bi[s]] = row[order[s]];
        out.push_back(std::move(t));
    }
    return out;
}

// Componentwise union when the overlaps agree, otherwise no result.
inline std::optional<TruncatedVector> paste(const TruncatedVector& u, const TruncatedVector& v) {
    TruncatedVector w(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] && v[i] && u[i] != v[i]) return std::nullopt;
        w[i] = u[i] ? u[i] : v[i];
    }
    return w;
}

namespace detail {

// The fixed reorder sequence for pasting blocks 2..120 of the 120-cell
// (1-based facet labels): ring blocks in label order, then three layer
// sweeps chosen to keep intermediate sets small.
inline std::vector<int> pasting_sequence_1based() {
    std::vector<int> seq;
    for (int i = 2; i <= 13; ++i) seq.push_back(i);
    const int second[] = {14, 18, 26, 28, 30, 34, 16, 20, 32, 36, 22, 23, 38, 15, 19, 27,
                          29, 31, 35, 17, 21, 33, 37, 39, 24, 25, 40, 41, 42, 43, 44, 45};
    const int third[] = {49, 53, 57, 50, 54, 58, 51, 55, 59, 52, 56, 60, 64, 68,
                         72, 65, 69, 73, 66, 70, 74, 67, 71, 75, 46, 61, 48, 63,
                         47, 62, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 86, 87};
    const int fourth[] = {96,  97,  104, 105, 100, 102, 88,  89,  101, 90,  91,
                          106, 107, 98,  99,  103, 92,  93,  94,  95,  108, 109,
                          110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120};
    seq.insert(seq.end(), std::begin(second), std::end(second));
    seq.insert(seq.end(), std::begin(third), std::end(third));
    seq.insert(seq.end(), std::begin(fourth), std::end(fourth));
    return seq;
}

}  // namespace detail

// Precomputed pasting schedule: blocks, transfer selections, rearrangement
// orders and the per-step key/new slot split along the support growth.
struct PastingContext {
    const Polytope* polytope = nullptr;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> transfer_first;  // images of b_1 under the i-th transfer
    std::vector<int> sequence;                     // 0-based block ids, pasting order

    struct Step {
        int block_id = 0;
        std::vector<int> order;          // B_1 column per local slot
        std::vector<int> key_slots;      // local slots already in the support
        std::vector<int> new_slots;      // local slots newly colored
        std::vector<int> key_positions;  // global facets of the key slots
    };
    std::vector<Step> steps;

    static PastingContext build(const Polytope& P,
                                const std::vector<FacetPermutation>& transfers,
                                std::vector<int> sequence_0based = {}) {
        PastingContext ctx;
        ctx.polytope = &P;
        const int m = P.facet_count;
        ctx.blocks.resize(m);
        for (int i = 0; i < m; ++i) ctx.blocks[i] = P.block(i);
        const size_t bs = ctx.blocks[0].size();
        ctx.transfer_first.resize(m);
        for (int i = 0; i < m; ++i)
            ctx.transfer_first[i] = std::vector<int>(transfers[i].images.begin(),
                                                     transfers[i].images.begin() + bs);
        if (sequence_0based.empty()) {
            for (int x : detail::pasting_sequence_1based()) sequence_0based.push_back(x - 1);
        }
        ctx.sequence = std::move(sequence_0based);

        std::vector<char> support(m, 0);
        for (int f : ctx.blocks[0]) support[f] = 1;
        for (int bid : ctx.sequence) {
            Step st;
            st.block_id = bid;
            st.order = rearrange_order(ctx.transfer_first[bid], ctx.blocks[bid]);
            for (size_t s = 0; s < ctx.blocks[bid].size(); ++s) {
                int f = ctx.blocks[bid][s];
                if (support[f]) {
                    st.key_slots.push_back(static_cast<int>(s));
                    st.key_positions.push_back(f);
                } else {
                    st.new_slots.push_back(static_cast<int>(s));
                    support[f] = 1;
                }
            }
            ctx.steps.push_back(std::move(st));
        }
        for (int f = 0; f < m; ++f)
            if (!support[f]) throw std::runtime_error("pasting sequence does not cover all facets");
        return ctx;
    }

    // The standard context for the 120-cell, built once.
    static const PastingContext& standard(const Polytope& P) {
        static const PastingContext ctx = [] {
            static const Polytope cell = build_120cell();
            auto group = symmetry_group_120cell(cell);
            auto transfers = transfer_permutations(group, cell.facet_count);
            return PastingContext::build(cell, transfers);
        }();
        if (P.facet_count != 120 || P.dimension != 4)
            throw std::invalid_argument("block_pasting: polytope is not the 120-cell");
        return ctx;
    }
};

namespace detail {

// One per-step join index over B_1: row ids sorted by their key nibble
// pack.  Keys are recomputed during binary search instead of stored, which
// keeps the per-step footprint at four bytes per row (the first block sets
// run to millions of rows and all steps stay resident).
struct StepIndex {
    std::vector<uint32_t> order;  // B_1 row ids sorted by key
    std::vector<int> keycols;     // B_1 columns forming the key

    uint64_t key_of(const std::vector<Color>& row) const {
        uint64_t k = 0;
        for (size_t t = 0; t < keycols.size(); ++t)
            k |= static_cast<uint64_t>(row[keycols[t]]) << (4 * t);
        return k;
    }

    static StepIndex build(const std::vector<std::vector<Color>>& B1,
                           const PastingContext::Step& st) {
        StepIndex idx;
        for (int s : st.key_slots) idx.keycols.push_back(st.order[s]);
        idx.order.resize(B1.size());
        for (uint32_t r = 0; r < B1.size(); ++r) idx.order[r] = r;
        std::sort(idx.order.begin(), idx.order.end(), [&](uint32_t a, uint32_t b) {
            uint64_t ka = idx.key_of(B1[a]), kb = idx.key_of(B1[b]);
            if (ka != kb) return ka < kb;
            return a < b;
        });
        return idx;
    }

    // range of row ids whose key equals `key`
    std::pair<const uint32_t*, const uint32_t*> lookup(
        const std::vector<std::vector<Color>>& B1, uint64_t key) const {
        auto lo = std::partition_point(order.begin(), order.end(),
                                       [&](uint32_t r) { return key_of(B1[r]) < key; });
        auto hi = std::partition_point(lo, order.end(),
                                       [&](uint32_t r) { return key_of(B1[r]) <= key; });
        return {order.data() + (lo - order.begin()), order.data() + (hi - order.begin())};
    }
};

}  // namespace detail

// Block-Pasting over the 120-cell.  Seeds are the rows of the fixing set;
// each seed is pasted through the reorder sequence, splitting any
// intermediate set larger than the threshold into independently processed
// chunks.  The final set equals color_recursion on the same task.
inline std::vector<ColoringVector> block_pasting(const SearchTask& task,
                                                 const PastingContext* context = nullptr) {
    const Polytope& P = *task.polytope;
    const PastingContext& ctx = context ? *context : PastingContext::standard(P);
    const int m = P.facet_count;
    if (!task.fixed_prefix.empty())
        throw std::invalid_argument("block_pasting: prefix constraints use the recursion engine");

    UnfixSets sets = unfix_set_b1(P, task.palette);
    const auto& B1 = sets.unfix;
    const auto& seeds = task.fix_basis ? sets.fixing : sets.unfix;
    std::vector<ColoringVector> out;
    if (seeds.empty()) return out;

    std::vector<detail::StepIndex> indexes(ctx.steps.size());
    for (size_t s = 0; s < ctx.steps.size(); ++s)
        indexes[s] = detail::StepIndex::build(B1, ctx.steps[s]);

    const size_t threshold = static_cast<size_t>(task.split_threshold);

    // paste one chunk of partial vectors through steps [step..end)
    std::function<void(std::vector<ColoringVector>&&, size_t)> run =
        [&](std::vector<ColoringVector>&& S, size_t step) {
            for (size_t s = step; s < ctx.steps.size(); ++s) {
                const auto& st = ctx.steps[s];
                const auto& idx = indexes[s];
                std::vector<ColoringVector> next;
                for (const auto& u : S) {
                    uint64_t key = 0;
                    for (size_t t = 0; t < st.key_positions.size(); ++t)
                        key |= static_cast<uint64_t>(u[st.key_positions[t]]) << (4 * t);
                    auto [lo, hi] = idx.lookup(B1, key);
                    for (const uint32_t* it = lo; it != hi; ++it) {
                        const auto& row = B1[*it];
                        ColoringVector w = u;
                        for (int ns : st.new_slots)
                            w[ctx.blocks[st.block_id][ns]] = row[st.order[ns]];
                        next.push_back(std::move(w));
                    }
                }
                S = std::move(next);
                if (S.empty()) return;
                if (S.size() > threshold && s + 1 < ctx.steps.size()) {
                    size_t chunks = (S.size() + threshold - 1) / threshold;
                    size_t per = (S.size() + chunks - 1) / chunks;
                    for (size_t c = 0; c < S.size(); c += per) {
                        std::vector<ColoringVector> chunk(
                            S.begin() + c, S.begin() + std::min(S.size(), c + per));
                        run(std::move(chunk), s + 1);
                    }
                    return;
                }
            }
            for (auto& v : S) out.push_back(std::move(v));
        };

    const auto& b1 = ctx.blocks[0];
    for (const auto& seed : seeds) {
        ColoringVector v(m, 0);
        for (size_t s = 0; s < b1.size(); ++s) v[b1[s]] = seed[s];
        std::vector<ColoringVector> S;
        S.push_back(std::move(v));
        run(std::move(S), 0);
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Dispatch on the task's engine.
inline std::vector<ColoringVector> enumerate_colorings(const SearchTask& task,
                                                       const PastingContext* ctx = nullptr) {
    return task.engine == Engine::recursion ? color_recursion(task) : block_pasting(task, ctx);
}

}  // namespace smallcover

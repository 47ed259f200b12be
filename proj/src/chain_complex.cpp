#include "nsimplex/chain_complex.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "nsimplex/errors.hpp"
#include "nsimplex/parallel.hpp"

namespace nsimplex {

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    return r;
}

std::uint64_t checked_power(int base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (v > cap / static_cast<std::uint64_t>(base))
            throw ResourceError("chain basis dimension exceeds the configured cap",
                                0, cap);
        v *= static_cast<std::uint64_t>(base);
    }
    return v;
}

// Ranks, in the parent enumeration of (n-1)-faces of I^N, of the faces that
// become the absolutely incoming slots of the front/rear subcube at `axis`.
struct RestrictionPlan {
    std::vector<std::size_t> front;
    std::vector<std::size_t> rear;
};

std::vector<RestrictionPlan> restriction_plans(int N, int n) {
    const auto& sched = schedule_for(N, n);
    const auto& sub = schedule_for(N - 1, n);
    std::vector<RestrictionPlan> plans(static_cast<std::size_t>(N));
    for (int axis = 0; axis < N; ++axis) {
        auto& plan = plans[static_cast<std::size_t>(axis)];
        for (std::size_t slot : sub.incoming_slots()) {
            std::vector<Symbol> w = sub.faces()[slot].word();
            w.insert(w.begin() + axis, Symbol::zero);
            plan.front.push_back(sched.face_rank(FaceCode(w)));
            w[static_cast<std::size_t>(axis)] = Symbol::one;
            plan.rear.push_back(sched.face_rank(FaceCode(std::move(w))));
        }
    }
    return plans;
}

std::uint64_t tuple_flat(const std::vector<int>& colors,
                         const std::vector<std::size_t>& ranks, int m) {
    std::uint64_t idx = 0;
    for (std::size_t r : ranks)
        idx = idx * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(colors[r]);
    return idx;
}

void decode_tuple(std::uint64_t index, int m, std::vector<int>& out) {
    for (std::size_t j = out.size(); j-- > 0;) {
        out[j] = static_cast<int>(index % static_cast<std::uint64_t>(m));
        index /= static_cast<std::uint64_t>(m);
    }
}

} // namespace

ChainBasis chain_basis(int N, int n, int m) {
    if (N < n - 1) throw std::invalid_argument("chain degree below n-1");
    ChainBasis b;
    b.N = N;
    b.n = n;
    b.m = m;
    b.slots = binom(N, n - 1);
    b.dimension = checked_power(m, b.slots, std::uint64_t(1) << 62);
    return b;
}

SparseIntMatrix boundary_matrix(const RMap& r, int N, SignConvention conv,
                                const ChainOptions& opts) {
    const int n = r.arity();
    if (N < n) throw std::invalid_argument("boundary matrix requires N >= n");
    ChainBasis col_basis = chain_basis(N, n, r.colors());
    ChainBasis row_basis = chain_basis(N - 1, n, r.colors());
    std::uint64_t predicted = col_basis.dimension * static_cast<std::uint64_t>(2 * N);
    if (predicted > opts.max_nnz)
        throw ResourceError("boundary matrix would exceed the nonzero cap", predicted,
                            opts.max_nnz);

    const auto& sched = schedule_for(N, n);
    auto plans = restriction_plans(N, n);

    SparseIntMatrix mat;
    mat.rows = static_cast<std::int64_t>(row_basis.dimension);
    mat.cols = static_cast<std::int64_t>(col_basis.dimension);

    int workers = effective_threads(opts.threads);
    std::vector<std::vector<SparseIntMatrix::Entry>> parts(
        static_cast<std::size_t>(workers) + 1);
    parallel_chunks(col_basis.dimension, opts.threads,
                    [&](std::uint64_t begin, std::uint64_t end, int chunk) {
        auto& out = parts[static_cast<std::size_t>(chunk)];
        std::vector<int> seed(static_cast<std::size_t>(col_basis.slots));
        std::vector<int> colors;
        for (std::uint64_t col = begin; col < end; ++col) {
            decode_tuple(col, r.colors(), seed);
            run_fast_propagation(r, sched, seed, colors);
            for (int axis = 0; axis < N; ++axis) {
                const auto& plan = plans[static_cast<std::size_t>(axis)];
                // 1-based axis k carries weight (-1)^k under the alternating
                // convention; plain keeps +front -rear everywhere.
                std::int64_t front_sign =
                    conv == SignConvention::alternating ? (axis % 2 ? 1 : -1) : 1;
                std::uint64_t fr = tuple_flat(colors, plan.front, r.colors());
                std::uint64_t re = tuple_flat(colors, plan.rear, r.colors());
                out.push_back({static_cast<std::int64_t>(fr),
                               static_cast<std::int64_t>(col), front_sign});
                out.push_back({static_cast<std::int64_t>(re),
                               static_cast<std::int64_t>(col), -front_sign});
            }
        }
    });
    for (auto& p : parts) {
        mat.entries.insert(mat.entries.end(), p.begin(), p.end());
        p.clear();
    }
    mat.normalize();
    return mat;
}

bool verify_d_squared(const RMap& r, int N, SignConvention conv,
                      const ChainOptions& opts) {
    if (N < r.arity() + 1)
        throw std::invalid_argument("d*d needs two composable boundaries");
    SparseIntMatrix outer = boundary_matrix(r, N - 1, conv, opts);
    SparseIntMatrix inner = boundary_matrix(r, N, conv, opts);
    return multiply(outer, inner).is_zero();
}

std::vector<bool> degenerate_mask(const RMap& r, int N, DegeneracyRule rule,
                                  const ChainOptions& opts) {
    const int n = r.arity();
    ChainBasis basis = chain_basis(N, n, r.colors());
    std::vector<bool> mask(basis.dimension, false);
    if (N == n - 1) {
        // Restrictions land in a cube without (n-1)-faces, so all front/rear
        // pairs coincide vacuously.
        std::fill(mask.begin(), mask.end(), true);
        return mask;
    }
    const auto& sched = schedule_for(N, n);
    auto plans = restriction_plans(N, n);
    std::vector<std::uint8_t> flags(basis.dimension, 0);
    parallel_chunks(basis.dimension, opts.threads,
                    [&](std::uint64_t begin, std::uint64_t end, int) {
        std::vector<int> seed(static_cast<std::size_t>(basis.slots));
        std::vector<int> colors;
        std::vector<std::uint64_t> tuples(static_cast<std::size_t>(2 * N));
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            decode_tuple(idx, r.colors(), seed);
            run_fast_propagation(r, sched, seed, colors);
            for (int axis = 0; axis < N; ++axis) {
                const auto& plan = plans[static_cast<std::size_t>(axis)];
                tuples[static_cast<std::size_t>(2 * axis)] =
                    tuple_flat(colors, plan.front, r.colors());
                tuples[static_cast<std::size_t>(2 * axis + 1)] =
                    tuple_flat(colors, plan.rear, r.colors());
            }
            bool degenerate = false;
            if (rule == DegeneracyRule::opposite_pairs) {
                for (int axis = 0; axis < N && !degenerate; ++axis)
                    degenerate = tuples[static_cast<std::size_t>(2 * axis)] ==
                                 tuples[static_cast<std::size_t>(2 * axis + 1)];
            } else {
                for (std::size_t i = 0; i < tuples.size() && !degenerate; ++i)
                    for (std::size_t j = i + 1; j < tuples.size(); ++j)
                        if (tuples[i] == tuples[j]) {
                            degenerate = true;
                            break;
                        }
            }
            flags[idx] = degenerate ? 1 : 0;
        }
    });
    for (std::uint64_t i = 0; i < basis.dimension; ++i) mask[i] = flags[i] != 0;
    return mask;
}

namespace {

// Keeps the rows/columns whose mask entry is false, reindexed densely.
SparseIntMatrix select_submatrix(const SparseIntMatrix& m, const std::vector<bool>& row_drop,
                                 const std::vector<bool>& col_drop) {
    std::vector<std::int64_t> row_map(row_drop.size(), -1), col_map(col_drop.size(), -1);
    std::int64_t nr = 0, nc = 0;
    for (std::size_t i = 0; i < row_drop.size(); ++i)
        if (!row_drop[i]) row_map[i] = nr++;
    for (std::size_t i = 0; i < col_drop.size(); ++i)
        if (!col_drop[i]) col_map[i] = nc++;
    SparseIntMatrix out;
    out.rows = nr;
    out.cols = nc;
    for (const auto& e : m.entries) {
        std::int64_t rr = row_map[static_cast<std::size_t>(e.row)];
        std::int64_t cc = col_map[static_cast<std::size_t>(e.col)];
        if (rr >= 0 && cc >= 0) out.entries.push_back({rr, cc, e.value});
    }
    out.normalize();
    return out;
}

std::int64_t rank_over(const SparseIntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return field.rational ? rank_fraction_free(m) : rank_mod_p(m, field.p);
}

HomologyReport homology_impl(const RMap& r, int N_max, FieldSpec field, bool normalized,
                             SignConvention conv, const ChainOptions& opts, bool cochain) {
    const int n = r.arity();
    if (N_max < n - 1) throw std::invalid_argument("N_max below the start of the complex");
    HomologyReport report;
    report.cochain = cochain;
    report.field = field;
    report.normalized = normalized;
    report.convention = conv;

    // Differentials d_N for N in [n, N_max]; d_(n-1) out of the complex is 0.
    std::vector<SparseIntMatrix> diffs;
    std::vector<std::uint64_t> dims;
    std::vector<std::vector<bool>> masks;
    for (int N = n - 1; N <= N_max; ++N) {
        if (normalized)
            masks.push_back(degenerate_mask(r, N, opts.degeneracy, opts));
        dims.push_back(chain_basis(N, n, r.colors()).dimension);
    }
    for (int N = n; N <= N_max; ++N) {
        SparseIntMatrix d = boundary_matrix(r, N, conv, opts);
        if (normalized) {
            const auto& row_mask = masks[static_cast<std::size_t>(N - 1 - (n - 1))];
            const auto& col_mask = masks[static_cast<std::size_t>(N - (n - 1))];
            d = select_submatrix(d, row_mask, col_mask);
        }
        diffs.push_back(std::move(d));
    }
    if (normalized) {
        for (std::size_t i = 0; i < dims.size(); ++i) {
            std::uint64_t kept = 0;
            for (bool dropped : masks[i])
                if (!dropped) ++kept;
            dims[i] = kept;
        }
    }

    std::vector<std::int64_t> ranks(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        ranks[i] = rank_over(cochain ? diffs[i].transposed() : diffs[i], field);
    }

    for (int N = n - 1; N <= N_max; ++N) {
        std::size_t i = static_cast<std::size_t>(N - (n - 1));
        HomologyRow row;
        row.degree = N;
        row.dim = dims[i];
        row.rank_out = N >= n ? ranks[i - 1] : 0;
        row.rank_in = N < N_max ? ranks[i] : 0;
        row.truncated = N == N_max;
        row.betti = static_cast<std::int64_t>(row.dim) - row.rank_out - row.rank_in;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace

HomologyReport homology(const RMap& r, int N_max, FieldSpec field, bool normalized,
                        SignConvention conv, const ChainOptions& opts) {
    return homology_impl(r, N_max, field, normalized, conv, opts, false);
}

HomologyReport cohomology(const RMap& r, int N_max, FieldSpec field, bool normalized,
                          SignConvention conv, const ChainOptions& opts) {
    return homology_impl(r, N_max, field, normalized, conv, opts, true);
}

std::vector<std::vector<std::int64_t>> cocycle_space_basis(const RMap& r, int degree,
                                                           std::int64_t p,
                                                           SignConvention conv,
                                                           const ChainOptions& opts) {
    SparseIntMatrix d_next = boundary_matrix(r, degree + 1, conv, opts);
    return kernel_basis_mod_p(d_next.transposed(), p);
}

std::vector<SignedTriple> d4_explicit_terms(const RMap& r, std::span<const int> a) {
    if (r.arity() != 3) throw std::invalid_argument("eight-term expansion requires n = 3");
    if (a.size() != 6) throw std::invalid_argument("expected a 6-tuple");
    auto R = [&](int i, int x, int y, int z) {
        std::array<int, 3> in{x, y, z};
        return r.apply(in)[static_cast<std::size_t>(i - 1)];
    };
    const int a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a5 = a[4], a6 = a[5];
    std::vector<SignedTriple> terms;
    terms.push_back({+1, {a1, a2, a3}});
    terms.push_back({+1, {a3, a5, a6}});
    terms.push_back({-1,
                     {R(1, a1, R(2, a2, a4, R(3, a3, a5, a6)), R(2, a3, a5, a6)),
                      R(1, a2, a4, R(3, a3, a5, a6)), R(1, a3, a5, a6)}});
    terms.push_back({-1,
                     {R(3, a1, a2, a3), R(3, R(1, a1, a2, a3), a4, a5),
                      R(3, R(2, a1, a2, a3), R(2, R(1, a1, a2, a3), a4, a5), a6)}});
    terms.push_back({+1, {a1, R(2, a2, a4, R(3, a3, a5, a6)), R(2, a3, a5, a6)}});
    terms.push_back({-1, {a2, a4, R(3, a3, a5, a6)}});
    terms.push_back({+1, {R(2, a1, a2, a3), R(2, R(1, a1, a2, a3), a4, a5), a6}});
    terms.push_back({-1, {R(1, a1, a2, a3), a4, a5}});
    return terms;
}

} // namespace nsimplex

#include "nsimplex/propagation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "nsimplex/errors.hpp"
#include "nsimplex/parallel.hpp"

namespace nsimplex {

PropagationSchedule::PropagationSchedule(int N, int n) : N_(N), n_(n) {
    if (n < 2) throw std::invalid_argument("schedule requires n >= 2");
    if (N < n - 1) throw std::invalid_argument("schedule requires N >= n-1");
    faces_ = enumerate_faces(N, n - 1);

    auto rank_of = [&](const FaceCode& f) {
        auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
        return static_cast<std::size_t>(it - faces_.begin());
    };
    for (const FaceCode& f : absolutely_incoming_faces(N, n))
        incoming_slots_.push_back(rank_of(f));
    for (const FaceCode& f : absolutely_outgoing_faces(N, n))
        outgoing_slots_.push_back(rank_of(f));

    if (N < n) return; // no n-faces, nothing to propagate

    FaceGraph graph = build_face_graph(N, n);
    for (std::size_t v : graph.topo_order) {
        if (!graph.is_n_face(v)) continue;
        Step step;
        step.face = graph.n_faces[v];
        std::vector<Symbol> w = step.face.word();
        for (int p = 0; p < N; ++p) {
            if (w[static_cast<std::size_t>(p)] != Symbol::star) continue;
            for (Symbol d : {Symbol::zero, Symbol::one}) {
                w[static_cast<std::size_t>(p)] = d;
                FaceCode sub{w};
                if (classify_subface(step.face, sub) == FaceRole::incoming)
                    step.in.push_back(rank_of(sub));
                else
                    step.out.push_back(rank_of(sub));
            }
            w[static_cast<std::size_t>(p)] = Symbol::star;
        }
        steps_.push_back(std::move(step));
    }
}

std::size_t PropagationSchedule::face_rank(const FaceCode& f) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
    if (it == faces_.end() || !(*it == f))
        throw std::invalid_argument("face is not an (n-1)-face of this cube");
    return static_cast<std::size_t>(it - faces_.begin());
}

const PropagationSchedule& schedule_for(int N, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<PropagationSchedule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{N, n}];
    if (!slot) slot = std::make_unique<PropagationSchedule>(N, n);
    return *slot;
}

int PermittedColoring::color_of(const FaceCode& face) const {
    return colors[schedule_for(N, n).face_rank(face)];
}

std::vector<int> PermittedColoring::incoming_tuple() const {
    const auto& sched = schedule_for(N, n);
    std::vector<int> t;
    t.reserve(sched.incoming_slots().size());
    for (std::size_t r : sched.incoming_slots()) t.push_back(colors[r]);
    return t;
}

std::vector<int> PermittedColoring::outgoing_tuple() const {
    const auto& sched = schedule_for(N, n);
    std::vector<int> t;
    t.reserve(sched.outgoing_slots().size());
    for (std::size_t r : sched.outgoing_slots()) t.push_back(colors[r]);
    return t;
}

std::string PropagationConflict::describe() const {
    std::string s = "face " + face.str() + " receives colors " +
                    std::to_string(color_a) + " and " + std::to_string(color_b) +
                    " inside subcube " + subcube.str();
    return s;
}

namespace {

// The (n+1)-subcube spanned by the two n-faces that colored the same subface:
// its stars are the union of theirs.
FaceCode conflict_subcube(const FaceCode& sub, const FaceCode& first_writer,
                          const FaceCode& second_writer) {
    std::vector<Symbol> w = sub.word();
    for (int i = 0; i < sub.ambient_dim(); ++i)
        if (first_writer.at(i) == Symbol::star || second_writer.at(i) == Symbol::star)
            w[static_cast<std::size_t>(i)] = Symbol::star;
    return FaceCode(std::move(w));
}

// Core propagation. Returns the first conflict (in schedule order) if
// `check_all` is set; in fast mode already-colored faces are left alone.
std::optional<PropagationConflict> run_propagation(const RMap& r,
                                                   const PropagationSchedule& sched,
                                                   std::span<const int> incoming,
                                                   bool check_all,
                                                   std::vector<int>& colors) {
    const int n = sched.n();
    colors.assign(sched.faces().size(), -1);
    if (incoming.size() != sched.incoming_slots().size())
        throw std::invalid_argument("expected one color per absolutely incoming face");
    for (std::size_t i = 0; i < incoming.size(); ++i) {
        if (incoming[i] < 0 || incoming[i] >= r.colors())
            throw std::invalid_argument("incoming color out of range");
        colors[sched.incoming_slots()[i]] = incoming[i];
    }
    std::vector<std::int32_t> writer;
    if (check_all) writer.assign(sched.faces().size(), -1);
    std::vector<int> in_tuple(static_cast<std::size_t>(n));
    std::vector<int> out_tuple(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < sched.steps().size(); ++s) {
        const auto& step = sched.steps()[s];
        for (std::size_t j = 0; j < step.in.size(); ++j) {
            int c = colors[step.in[j]];
            if (c < 0)
                throw InvariantError("propagation order left an incoming face uncolored");
            in_tuple[j] = c;
        }
        r.apply(in_tuple, out_tuple);
        for (std::size_t j = 0; j < step.out.size(); ++j) {
            int& slot = colors[step.out[j]];
            if (slot < 0) {
                slot = out_tuple[j];
                if (check_all) writer[step.out[j]] = static_cast<std::int32_t>(s);
            } else if (check_all && slot != out_tuple[j]) {
                PropagationConflict c;
                c.assignment.assign(incoming.begin(), incoming.end());
                c.face = sched.faces()[step.out[j]];
                std::int32_t first = writer[step.out[j]];
                const FaceCode& other =
                    first >= 0 ? sched.steps()[static_cast<std::size_t>(first)].face
                               : step.face;
                c.subcube = conflict_subcube(c.face, other, step.face);
                c.color_a = slot;
                c.color_b = out_tuple[j];
                return c;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<PropagationConflict> propagate_checked(const RMap& r,
                                                     const PropagationSchedule& sched,
                                                     std::span<const int> incoming,
                                                     PermittedColoring* out) {
    std::vector<int> colors;
    auto conflict = run_propagation(r, sched, incoming, true, colors);
    if (!conflict && out) {
        out->N = sched.N();
        out->n = sched.n();
        out->m = r.colors();
        out->colors = std::move(colors);
    }
    return conflict;
}

void run_fast_propagation(const RMap& r, const PropagationSchedule& sched,
                          std::span<const int> incoming, std::vector<int>& colors) {
    run_propagation(r, sched, incoming, false, colors);
}

PermittedColoring propagate(const RMap& r, int N, std::span<const int> incoming,
                            bool strict) {
    const auto& sched = schedule_for(N, r.arity());
    PermittedColoring result;
    if (strict) {
        auto conflict = propagate_checked(r, sched, incoming, &result);
        if (conflict)
            throw InvariantError("R violates the n-simplex equation: " + conflict->describe());
        return result;
    }
    result.N = N;
    result.n = r.arity();
    result.m = r.colors();
    run_propagation(r, sched, incoming, false, result.colors);
    return result;
}

PermittedColoring restrict_coloring(const PermittedColoring& c, int axis, Side side) {
    if (c.N <= c.n - 1)
        throw std::invalid_argument("cannot restrict below dimension n-1");
    if (axis < 0 || axis >= c.N) throw std::invalid_argument("axis out of range");
    const auto& sched = schedule_for(c.N, c.n);
    const auto& sub_sched = schedule_for(c.N - 1, c.n);
    Symbol fixed = side == Side::front ? Symbol::zero : Symbol::one;
    PermittedColoring out;
    out.N = c.N - 1;
    out.n = c.n;
    out.m = c.m;
    out.colors.resize(sub_sched.faces().size());
    for (std::size_t i = 0; i < sub_sched.faces().size(); ++i) {
        std::vector<Symbol> w = sub_sched.faces()[i].word();
        w.insert(w.begin() + axis, fixed);
        out.colors[i] = c.colors[sched.face_rank(FaceCode(std::move(w)))];
    }
    return out;
}

namespace {

SimplexCheckResult exhaustive_seed_check(
    const RMap& r, std::uint64_t seeds, std::size_t slot_count, int threads,
    const std::function<std::optional<PropagationConflict>(std::span<const int>)>& test) {
    // Scans assignments in row-major order (slot 0 slowest); the reported
    // counterexample is the first failing assignment in that order.
    std::vector<std::optional<std::pair<std::uint64_t, PropagationConflict>>> found(
        static_cast<std::size_t>(effective_threads(threads)) + 1);
    parallel_chunks(seeds, threads, [&](std::uint64_t begin, std::uint64_t end, int chunk) {
        std::vector<int> seed(slot_count);
        for (std::uint64_t s = begin; s < end; ++s) {
            std::uint64_t v = s;
            for (std::size_t j = slot_count; j-- > 0;) {
                seed[j] = static_cast<int>(v % static_cast<std::uint64_t>(r.colors()));
                v /= static_cast<std::uint64_t>(r.colors());
            }
            auto conflict = test(seed);
            if (conflict) {
                found[static_cast<std::size_t>(chunk)] = {s, std::move(*conflict)};
                return;
            }
        }
    });
    SimplexCheckResult result;
    // Pick the failure with the smallest seed index across chunks.
    std::optional<std::pair<std::uint64_t, PropagationConflict>> best;
    for (auto& f : found)
        if (f && (!best || f->first < best->first)) best = std::move(f);
    if (best) {
        result.ok = false;
        result.conflict = std::move(best->second);
        result.counterexample = result.conflict->assignment;
    }
    return result;
}

} // namespace

SimplexCheckResult check_n_simplex(const RMap& r, int threads) {
    const int n = r.arity();
    const auto& sched = schedule_for(n + 1, n);
    std::uint64_t seeds = 1;
    for (std::size_t i = 0; i < sched.incoming_slots().size(); ++i)
        seeds *= static_cast<std::uint64_t>(r.colors());
    return exhaustive_seed_check(
        r, seeds, sched.incoming_slots().size(), threads,
        [&](std::span<const int> seed) { return propagate_checked(r, sched, seed, nullptr); });
}

CompositionPlan composition_plan(int n) {
    EquationGraph eg = build_equation_graph(n);
    std::vector<FaceCode> dirs = absolutely_incoming_faces(n + 1, n);
    auto slot_of_direction = [&](const FaceCode& face) {
        // Slot of an (n-1)-face = rank of the absolutely incoming face with
        // the same star pattern.
        std::vector<int> stars = face.star_positions();
        for (std::size_t i = 0; i < dirs.size(); ++i)
            if (dirs[i].star_positions() == stars) return static_cast<int>(i);
        throw InvariantError("direction not found");
    };
    auto slots_of_face = [&](const FaceCode& f) {
        std::vector<int> slots;
        std::vector<Symbol> w = f.word();
        for (int p = 0; p < n + 1; ++p) {
            if (w[static_cast<std::size_t>(p)] != Symbol::star) continue;
            for (Symbol d : {Symbol::zero, Symbol::one}) {
                w[static_cast<std::size_t>(p)] = d;
                FaceCode sub{w};
                if (classify_subface(f, sub) == FaceRole::incoming)
                    slots.push_back(slot_of_direction(sub));
            }
            w[static_cast<std::size_t>(p)] = Symbol::star;
        }
        return slots;
    };
    CompositionPlan plan;
    plan.state_len = static_cast<int>(dirs.size());
    for (const FaceCode& f : eg.lhs) plan.lhs.push_back(slots_of_face(f));
    for (auto it = eg.rhs.rbegin(); it != eg.rhs.rend(); ++it)
        plan.rhs.push_back(slots_of_face(*it)); // rhs is stored decreasing
    return plan;
}

SimplexCheckResult check_n_simplex_composition(const RMap& r, int threads) {
    const int n = r.arity();
    CompositionPlan plan = composition_plan(n);
    if (n == 3) {
        // The classic tetrahedron slot pattern, kept explicit.
        const CompositionPlan classic{
            6,
            {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}},
            {{2, 4, 5}, {1, 3, 5}, {0, 3, 4}, {0, 1, 2}}};
        if (plan.lhs != classic.lhs || plan.rhs != classic.rhs)
            throw InvariantError("derived tetrahedron slots differ from the classic pattern");
    }
    std::uint64_t seeds = 1;
    for (int i = 0; i < plan.state_len; ++i)
        seeds *= static_cast<std::uint64_t>(r.colors());
    return exhaustive_seed_check(
        r, seeds, static_cast<std::size_t>(plan.state_len), threads,
        [&](std::span<const int> seed) -> std::optional<PropagationConflict> {
            std::vector<int> a(seed.begin(), seed.end());
            std::vector<int> b(seed.begin(), seed.end());
            for (const auto& slots : plan.lhs) apply_on_slots_in_place(r, a, slots);
            for (const auto& slots : plan.rhs) apply_on_slots_in_place(r, b, slots);
            if (a == b) return std::nullopt;
            PropagationConflict c;
            c.assignment.assign(seed.begin(), seed.end());
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) {
                    c.color_a = a[i];
                    c.color_b = b[i];
                    break;
                }
            }
            return c;
        });
}

} // namespace nsimplex

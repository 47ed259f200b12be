#ifndef NSIMPLEX_PROPAGATION_HPP
#define NSIMPLEX_PROPAGATION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsimplex/face.hpp"
#include "nsimplex/face_graph.hpp"
#include "nsimplex/rmap.hpp"

namespace nsimplex {

/// Precomputed combinatorics of I^N for propagating (n-1)-face colors: the
/// face enumeration, the absolutely incoming/outgoing slots, and for every
/// n-face (in a topological order of the face graph) the ranks of its incoming
/// and outgoing subfaces, each list ordered by the position of the fixed
/// coordinate.
class PropagationSchedule {
public:
    PropagationSchedule(int N, int n);

    int N() const { return N_; }
    int n() const { return n_; }
    const std::vector<FaceCode>& faces() const { return faces_; }
    std::size_t face_rank(const FaceCode& f) const;
    const std::vector<std::size_t>& incoming_slots() const { return incoming_slots_; }
    const std::vector<std::size_t>& outgoing_slots() const { return outgoing_slots_; }

    struct Step {
        FaceCode face;                    // the n-face
        std::vector<std::size_t> in;      // ranks of incoming subfaces
        std::vector<std::size_t> out;     // ranks of outgoing subfaces
    };
    const std::vector<Step>& steps() const { return steps_; }

private:
    int N_;
    int n_;
    std::vector<FaceCode> faces_;
    std::vector<std::size_t> incoming_slots_;
    std::vector<std::size_t> outgoing_slots_;
    std::vector<Step> steps_;
};

/// Shared, lazily built schedule cache keyed by (N, n).
const PropagationSchedule& schedule_for(int N, int n);

/// A coloring of all (n-1)-faces of I^N that is consistent with R on every
/// n-face. Face colors are stored in face-enumeration order.
struct PermittedColoring {
    int N = 0;
    int n = 0;
    int m = 0;
    std::vector<int> colors;

    int color_of(const FaceCode& face) const;
    std::vector<int> incoming_tuple() const;
    std::vector<int> outgoing_tuple() const;
};

enum class Side { front, rear };

struct PropagationConflict {
    std::vector<int> assignment; // seed colors on the absolutely incoming slots
    FaceCode face;               // the (n-1)-face that received two colors
    FaceCode subcube;            // the (n+1)-subcube exhibiting the conflict
    int color_a = 0;
    int color_b = 0;
    std::string describe() const;
};

/// Extends `incoming` (one color per absolutely incoming slot) to the unique
/// permitted coloring. In strict mode every n-face derivation is checked and a
/// conflict throws InvariantError with diagnostics; otherwise each face color
/// is taken from the first n-face deriving it in schedule order.
PermittedColoring propagate(const RMap& r, int N, std::span<const int> incoming,
                            bool strict = false);

/// As above but reporting a conflict instead of throwing (strict mode only).
std::optional<PropagationConflict> propagate_checked(const RMap& r,
                                                     const PropagationSchedule& sched,
                                                     std::span<const int> incoming,
                                                     PermittedColoring* out);

/// Unchecked propagation into a reusable buffer, for hot loops.
void run_fast_propagation(const RMap& r, const PropagationSchedule& sched,
                          std::span<const int> incoming, std::vector<int>& colors);

/// Deletes coordinate `axis` (0-based), keeping the faces whose symbol there
/// is 0 (front) or 1 (rear). The result is a permitted coloring of I^(N-1).
PermittedColoring restrict_coloring(const PermittedColoring& c, int axis, Side side);

struct SimplexCheckResult {
    bool ok = true;
    std::optional<std::vector<int>> counterexample; // first failing assignment, slot order
    std::optional<PropagationConflict> conflict;    // consistency mode details
};

/// Checks the set-theoretic n-simplex equation for R by propagating every
/// coloring of the absolutely incoming (n-1)-faces of I^(n+1) and requiring
/// all multi-face derivations to agree.
SimplexCheckResult check_n_simplex(const RMap& r, int threads = 0);

/// Checks the same equation as equality of the two slot compositions read off
/// the equation graph. For n = 3 the slot pattern is the classic
/// {123,145,246,356} (0-based {0,1,2},{0,3,4},{1,3,5},{2,4,5}).
SimplexCheckResult check_n_simplex_composition(const RMap& r, int threads = 0);

/// Slot lists of the two composition sides, in application order.
struct CompositionPlan {
    int state_len = 0;
    std::vector<std::vector<int>> lhs; // applied first to last
    std::vector<std::vector<int>> rhs;
};
CompositionPlan composition_plan(int n);

} // namespace nsimplex

#endif

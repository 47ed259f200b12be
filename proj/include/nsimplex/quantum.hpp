#ifndef NSIMPLEX_QUANTUM_HPP
#define NSIMPLEX_QUANTUM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsimplex/cocycle.hpp"
#include "nsimplex/rmap.hpp"

namespace nsimplex {

/// A linear operator on (C^m)^(tensor arity) with exactly one nonzero entry
/// per column: e_t -> zeta^phase(t) e_perm(t), zeta a primitive modulus-th
/// root of unity. Stored as the permutation of basis index tuples plus the
/// phase exponent per input tuple, so composition and comparison stay exact.
struct MonomialOperator {
    int arity = 0;
    int colors = 0;
    std::int64_t modulus = 1;
    std::vector<std::uint32_t> perm;  // colors^arity entries
    std::vector<std::int32_t> phase;  // exponents mod modulus

    std::uint64_t states() const { return perm.size(); }
    bool is_invertible() const;

    bool operator==(const MonomialOperator&) const = default;

    /// Lines "t1 ... tc -> u1 ... uc e" in row-major input order.
    std::string serialize() const;
};

/// compose(b, a) = b after a; phases add along the trajectory.
MonomialOperator compose(const MonomialOperator& b, const MonomialOperator& a);

/// Inverse of an invertible monomial operator.
MonomialOperator inverse(const MonomialOperator& op);

/// The identity operator on the given space.
MonomialOperator identity_operator(int arity, int colors, std::int64_t modulus);

/// The permutation operator of R: perm = R's table, all phases zero.
MonomialOperator permutation_operator(const RMap& r, std::int64_t modulus = 1);

/// The cocycle-twisted operator: perm = R's table, phase = phi's exponents.
MonomialOperator twisted_operator(const RMap& r, const Cocycle& phi);

/// Extends an arity-3 operator to `total` tensor slots, acting on the given
/// (distinct, 0-based) slots and as the identity elsewhere.
MonomialOperator embed_on_slots(const MonomialOperator& op, std::span<const int> slots,
                                int total);

struct QteCheckResult {
    bool ok = true;
    std::optional<std::array<int, 6>> counterexample;
    std::uint64_t lhs_perm = 0, rhs_perm = 0; // images at the counterexample
    std::int64_t lhs_phase = 0, rhs_phase = 0;
};

/// Verifies the tetrahedron equation for an arity-3 monomial operator by
/// composing both sides on all colors^6 basis tuples and comparing the
/// permutation and phase parts exactly.
QteCheckResult check_qte(const MonomialOperator& op, std::uint64_t max_states = 10'000'000);

struct GaugeCheckResult {
    bool equivalent = false;
    std::string reason;
};

/// Diagonal gauge relation: same permutation part and
/// phase'(x,y,z) = phase(x,y,z) + psi(x)+psi(y)+psi(z)-psi(x')-psi(y')-psi(z').
GaugeCheckResult gauge_equivalent(const MonomialOperator& a, const MonomialOperator& b,
                                  const Potential& psi);

} // namespace nsimplex

#endif

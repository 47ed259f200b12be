#ifndef NSIMPLEX_COCYCLE_HPP
#define NSIMPLEX_COCYCLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsimplex/rmap.hpp"
#include "nsimplex/zm_solver.hpp"

namespace nsimplex {

/// A map X^3 -> Z/m, the exponent of a fixed primitive m-th root of unity.
/// Working with exponents keeps every comparison exact.
struct Cocycle {
    int colors = 0;
    std::int64_t modulus = 1;
    std::vector<std::int64_t> table; // colors^3 entries, row-major, reduced mod modulus

    std::int64_t operator()(int a, int b, int c) const {
        return table[static_cast<std::size_t>((a * colors + b) * colors + c)];
    }
    std::int64_t& at(int a, int b, int c) {
        return table[static_cast<std::size_t>((a * colors + b) * colors + c)];
    }

    static Cocycle zero(int colors, std::int64_t modulus);

    /// Text format, bit-exact:
    ///   simplex-cocycle v1
    ///   m_colors=<colors> modulus=<m>
    ///   a b c -> e        (colors^3 lines, inputs in row-major order)
    static Cocycle parse(std::string_view text);
    std::string serialize() const;

    bool operator==(const Cocycle&) const = default;
};

/// A per-color exponent table, the potential of a coboundary.
struct Potential {
    int colors = 0;
    std::int64_t modulus = 1;
    std::vector<std::int64_t> table; // one exponent per color

    static Potential zero(int colors, std::int64_t modulus);

    /// Text format: header "simplex-potential v1", parameter line as for
    /// cocycles, then one "x -> e" line per color.
    static Potential parse(std::string_view text);
    std::string serialize() const;

    bool operator==(const Potential&) const = default;
};

enum class TraceSide { left, right };

/// Exponent accumulated over the four R-applications of the chosen side of
/// the tetrahedron composition, evaluated at the state 6-tuple `a`: each
/// application contributes phi at its input triple.
std::int64_t twisted_product_trace(const RMap& r, const Cocycle& phi, TraceSide side,
                                   std::span<const int> a);

struct CocycleCheckResult {
    bool ok = true;
    std::optional<std::array<int, 6>> counterexample; // first failing 6-tuple
    std::int64_t left = 0, right = 0;                 // traces at the counterexample
};

/// Multiplicative cocycle condition: both trace sides agree mod m on all of
/// X^6. Exhaustive and exact.
CocycleCheckResult check_cocycle(const RMap& r, const Cocycle& phi, int threads = 0);

/// The coboundary of psi: (a,b,c) -> psi(a)+psi(b)+psi(c)
///                                  -psi(a')-psi(b')-psi(c') mod m.
Cocycle coboundary_of(const RMap& r, const Potential& psi);

struct CoboundarySolution {
    bool exists = false;
    std::optional<Potential> psi;
    std::optional<ZmLinearSystem::Certificate> certificate; // when none exists
};

/// Decides whether phi is a coboundary by solving the linear system over Z/m.
CoboundarySolution solve_coboundary(const RMap& r, const Cocycle& phi);

/// Triples fixed by R where phi does not vanish; any such triple certifies
/// that phi is not a coboundary (the six potential terms cancel pairwise at a
/// fixed point).
std::vector<std::array<int, 3>> fixed_point_obstruction(const RMap& r, const Cocycle& phi);

} // namespace nsimplex

#endif

#ifndef NSIMPLEX_ELECTRIC_HPP
#define NSIMPLEX_ELECTRIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nsimplex/cocycle.hpp"
#include "nsimplex/rmap.hpp"

namespace nsimplex {

/// The star-triangle map (x,y,z) -> (xy/w, w, yz/w), w = x+z+xyz, over exact
/// rationals. Throws SingularityError when w = 0.
std::array<mpq_class, 3> electric_apply_rational(const mpq_class& x, const mpq_class& y,
                                                 const mpq_class& z);

/// The color set X = { x in Z/p^k : x = eps mod p } where eps^2 = -1 mod p
/// (eps = 1 for p = 2, i.e. the odd residues). Elements are listed in
/// ascending representative order; the position in that list is the color.
struct ResidueColorSet {
    std::int64_t p = 0;
    int k = 0;
    std::int64_t modulus = 0; // p^k
    std::int64_t epsilon = 0;
    std::vector<std::int64_t> elements;

    /// Picks the smallest square root of -1 mod p when eps is not given.
    /// Requires p = 2 or p prime with p = 1 mod 4, and k >= 2.
    static ResidueColorSet make(std::int64_t p, int k,
                                std::optional<std::int64_t> eps = std::nullopt);

    int color_count() const { return static_cast<int>(elements.size()); }
    int color_of(std::int64_t x) const;
    std::int64_t element(int color) const {
        return elements[static_cast<std::size_t>(color)];
    }
};

/// The electric map restricted to X^3, tabulated as an arity-3 RMap. Closure
/// in X and bijectivity are asserted (they hold for every valid color set).
RMap electric_rmap(const ResidueColorSet& cs);

/// Reduced coordinate forms on color indices.
std::array<int, 3> reduced_form_z25(int n1, int n2, int n3);
std::array<int, 3> reduced_form_z8(int n1, int n2, int n3);

/// A homomorphism (Z/p^k)^* -> Z/m written additively: exponents of a fixed
/// primitive m-th root of unity, where m is the exponent of the unit group.
struct Character {
    std::int64_t modulus_ring = 0; // p^k
    std::int64_t order = 0;        // m, exponent of the unit group
    std::vector<std::int64_t> exponent_by_residue; // -1 for non-units
    std::vector<std::int64_t> generator_values;    // exponents on the generators

    std::int64_t operator()(std::int64_t unit) const;
    bool is_trivial() const;
};

/// All homomorphisms from (Z/p^k)^* to Z/m, m the group exponent. The unit
/// group is cyclic for odd p; for p = 2, k >= 3 it is generated by -1 and 5.
/// The enumeration order is deterministic (generator exponents row-major).
std::vector<Character> characters(const ResidueColorSet& cs);

/// The two tabulated cocycles attached to a character: c1(a,b,c) = eta(y) and
/// c2(a,b,c) = eta(y') with (x,y,z) the ring elements of the input colors and
/// y' the middle output of the electric map.
struct ElectricCocycles {
    Cocycle c1;
    Cocycle c2;
};
ElectricCocycles electric_cocycles(const ResidueColorSet& cs, const Character& eta);

struct CocycleVerdict {
    bool cocycle_ok = false;                         // passes the cocycle condition
    bool is_coboundary = false;
    std::optional<Potential> psi;                    // when a coboundary
    std::vector<std::array<int, 3>> fixed_witnesses; // nonzero values at fixed points
};

struct NontrivialityReport {
    CocycleVerdict c1;
    CocycleVerdict c2;
};

/// Runs the cocycle check, the fixed-point obstruction and the coboundary
/// solver for both cocycles of a character.
NontrivialityReport nontriviality_report(const ResidueColorSet& cs, const Character& eta,
                                         int threads = 0);

} // namespace nsimplex

#endif

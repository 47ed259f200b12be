#ifndef NSIMPLEX_CHAIN_COMPLEX_HPP
#define NSIMPLEX_CHAIN_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsimplex/matrix.hpp"
#include "nsimplex/propagation.hpp"
#include "nsimplex/rmap.hpp"

namespace nsimplex {

/// Sign convention for the boundary d = sum over axes of (front - rear)
/// restrictions. `alternating` weights axis k (1-based) by (-1)^k and is the
/// default: it gives d*d = 0 over the integers. `plain` leaves all axes at +1
/// (CLI alias "paper").
enum class SignConvention { alternating, plain };

struct FieldSpec {
    bool rational = true;
    std::int64_t p = 0; // prime when rational == false

    static FieldSpec rationals() { return {true, 0}; }
    static FieldSpec mod(std::int64_t p) { return {false, p}; }
    std::string str() const { return rational ? "q" : "fp:" + std::to_string(p); }
};

/// Which colorings count as degenerate for the normalized complex: equal
/// front/rear restrictions in a single direction (default), or any two equal
/// restrictions regardless of axis pairing.
enum class DegeneracyRule { opposite_pairs, any_pairs };

struct ChainOptions {
    std::uint64_t max_nnz = 10'000'000; // refuse larger boundary matrices
    int threads = 0;
    DegeneracyRule degeneracy = DegeneracyRule::opposite_pairs;
};

/// Basis bookkeeping for C_N: colorings indexed by tuples over the absolutely
/// incoming slots (slot 0 varies slowest).
struct ChainBasis {
    int N = 0;
    int n = 0;
    int m = 0;
    std::uint64_t slots = 0;
    std::uint64_t dimension = 0; // m^slots
};
ChainBasis chain_basis(int N, int n, int m);

/// The boundary d_N : C_N -> C_(N-1) in the incoming-colors basis. Requires
/// N >= n and a map R that satisfies the n-simplex equation.
SparseIntMatrix boundary_matrix(const RMap& r, int N, SignConvention conv,
                                const ChainOptions& opts = {});

/// True iff d_(N-1) * d_N is the zero matrix over the integers (exact).
bool verify_d_squared(const RMap& r, int N, SignConvention conv,
                      const ChainOptions& opts = {});

struct HomologyRow {
    int degree = 0;
    std::uint64_t dim = 0;       // of C_degree (normalized: non-degenerate part)
    std::int64_t rank_out = 0;   // rank of d_degree (resp. its transpose)
    std::int64_t rank_in = 0;    // rank of d_(degree+1); truncated to 0 at the top
    std::int64_t betti = 0;      // dim - rank_out - rank_in
    bool truncated = false;      // top degree: rank_in forced to 0 by truncation
};

struct HomologyReport {
    bool cochain = false;
    FieldSpec field;
    bool normalized = false;
    SignConvention convention = SignConvention::alternating;
    std::vector<HomologyRow> rows; // degrees n-1 .. N_max
};

HomologyReport homology(const RMap& r, int N_max, FieldSpec field, bool normalized,
                        SignConvention conv = SignConvention::alternating,
                        const ChainOptions& opts = {});
HomologyReport cohomology(const RMap& r, int N_max, FieldSpec field, bool normalized,
                          SignConvention conv = SignConvention::alternating,
                          const ChainOptions& opts = {});

/// Basis of the degree-`degree` cocycle space over F_p: the kernel of the
/// transposed d_(degree+1). Vectors have length dim C_degree.
std::vector<std::vector<std::int64_t>> cocycle_space_basis(
    const RMap& r, int degree, std::int64_t p,
    SignConvention conv = SignConvention::alternating, const ChainOptions& opts = {});

/// Indices of degenerate basis colorings in degree N under the given rule.
std::vector<bool> degenerate_mask(const RMap& r, int N, DegeneracyRule rule,
                                  const ChainOptions& opts = {});

/// One signed term of the classical eight-term expansion of d_4 applied to a
/// degree-4 basis coloring (n = 3 only). Kept as an independent oracle for the
/// matrix construction.
struct SignedTriple {
    int sign = 1;
    std::array<int, 3> triple{};
};
std::vector<SignedTriple> d4_explicit_terms(const RMap& r, std::span<const int> a);

} // namespace nsimplex

#endif

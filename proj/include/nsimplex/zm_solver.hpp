#ifndef NSIMPLEX_ZM_SOLVER_HPP
#define NSIMPLEX_ZM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace nsimplex {

/// Linear system A x = b over Z/m with composite m allowed. Solved by integer
/// row reduction to a small echelon system followed by a Smith-form split, so
/// zero divisors are handled exactly. On inconsistency the solver produces an
/// integer combination of the input equations whose unknown coefficients all
/// vanish mod m while the right-hand side does not.
class ZmLinearSystem {
public:
    ZmLinearSystem(std::size_t unknowns, std::int64_t modulus);

    void add_equation(std::span<const std::int64_t> coeffs, std::int64_t rhs);

    struct Certificate {
        std::vector<mpz_class> weights; // one per added equation, input order
        mpz_class rhs_value;            // combined right-hand side, != 0 mod m
    };

    struct Result {
        bool solvable = false;
        std::vector<std::int64_t> solution;  // values mod m, when solvable
        std::optional<Certificate> certificate;
    };

    Result solve() const;

    std::size_t unknowns() const { return unknowns_; }
    std::int64_t modulus() const { return modulus_; }
    std::size_t equation_count() const { return coeffs_.size(); }

private:
    std::size_t unknowns_;
    std::int64_t modulus_;
    std::vector<std::vector<std::int64_t>> coeffs_;
    std::vector<std::int64_t> rhs_;
};

} // namespace nsimplex

#endif

#include "nsimplex/zm_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsimplex/errors.hpp"

namespace nsimplex {

namespace {

// One work row: integer coefficients, right-hand side, and the combination of
// input equations it represents. Tautology rows (m * e_j) carry empty combos.
struct WorkRow {
    std::vector<mpz_class> v;   // unknown coefficients, width u, plus rhs at index u
    std::vector<mpz_class> combo;

    std::size_t lead() const {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    }
};

void combo_axpy(std::vector<mpz_class>& dst, const mpz_class& f,
                const std::vector<mpz_class>& src) {
    if (src.size() > dst.size()) dst.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] += f * src[i];
}

std::vector<mpz_class> combo_combine(const mpz_class& fa, const std::vector<mpz_class>& a,
                                     const mpz_class& fb, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = fa * a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += fb * b[i];
    return out;
}

} // namespace

ZmLinearSystem::ZmLinearSystem(std::size_t unknowns, std::int64_t modulus)
    : unknowns_(unknowns), modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
}

void ZmLinearSystem::add_equation(std::span<const std::int64_t> coeffs, std::int64_t rhs) {
    if (coeffs.size() != unknowns_)
        throw std::invalid_argument("coefficient count does not match unknown count");
    coeffs_.emplace_back(coeffs.begin(), coeffs.end());
    rhs_.push_back(rhs);
}

ZmLinearSystem::Result ZmLinearSystem::solve() const {
    const std::size_t u = unknowns_;
    const mpz_class m = modulus_;

    // Stage 1: reduce the row lattice of [A | b] plus the tautologies m*e_j to
    // an echelon set with at most one row per leading column. Unimodular row
    // combinations preserve the mod-m solution set.
    std::vector<std::optional<WorkRow>> basis(u + 1);
    auto insert = [&](WorkRow row) {
        while (true) {
            std::size_t c = row.lead();
            if (c == row.v.size()) return; // fully reduced away
            auto& slot = basis[c];
            if (!slot) {
                if (row.v[c] < 0) {
                    for (auto& x : row.v) x = -x;
                    for (auto& x : row.combo) x = -x;
                }
                slot = std::move(row);
                return;
            }
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       slot->v[c].get_mpz_t(), row.v[c].get_mpz_t());
            mpz_class fa = slot->v[c] / g, fb = row.v[c] / g;
            WorkRow pivot;
            pivot.v.resize(u + 1);
            for (std::size_t i = 0; i < u + 1; ++i)
                pivot.v[i] = s * slot->v[i] + t * row.v[i];
            pivot.combo = combo_combine(s, slot->combo, t, row.combo);
            WorkRow residue;
            residue.v.resize(u + 1);
            for (std::size_t i = 0; i < u + 1; ++i)
                residue.v[i] = fa * row.v[i] - fb * slot->v[i];
            residue.combo = combo_combine(fa, row.combo, -fb, slot->combo);
            *slot = std::move(pivot);
            row = std::move(residue); // leading column strictly increases
        }
    };

    for (std::size_t j = 0; j < u; ++j) {
        WorkRow taut;
        taut.v.resize(u + 1);
        taut.v[j] = m;
        insert(std::move(taut));
    }
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        WorkRow row;
        row.v.resize(u + 1);
        for (std::size_t j = 0; j < u; ++j) row.v[j] = coeffs_[e][j];
        row.v[u] = rhs_[e];
        row.combo.resize(e + 1);
        row.combo[e] = 1;
        insert(std::move(row));
    }

    Result result;
    auto make_certificate = [&](const std::vector<mpz_class>& combo,
                                const mpz_class& rhs_value) {
        Certificate cert;
        cert.weights.assign(coeffs_.size(), 0);
        for (std::size_t i = 0; i < combo.size() && i < cert.weights.size(); ++i)
            cert.weights[i] = combo[i];
        cert.rhs_value = rhs_value;
        result.certificate = std::move(cert);
        result.solvable = false;
    };

    // A row with zero unknown coefficients asserts 0 = rhs (mod m).
    if (basis[u]) {
        mpz_class r = basis[u]->v[u] % m;
        if (r != 0) {
            make_certificate(basis[u]->combo, basis[u]->v[u]);
            return result;
        }
    }

    // Stage 2: Smith split of the small echelon system T x = r (mod m).
    std::vector<const WorkRow*> pivots;
    for (std::size_t c = 0; c < u; ++c)
        if (basis[c]) pivots.push_back(&*basis[c]);
    const std::size_t rows = pivots.size();

    std::vector<std::vector<mpz_class>> T(rows, std::vector<mpz_class>(u));
    std::vector<mpz_class> r(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < u; ++j) T[i][j] = pivots[i]->v[j];
        r[i] = pivots[i]->v[u];
    }
    // Row transform U (rows x rows) and column transform V (u x u).
    std::vector<std::vector<mpz_class>> U(rows, std::vector<mpz_class>(rows));
    for (std::size_t i = 0; i < rows; ++i) U[i][i] = 1;
    std::vector<std::vector<mpz_class>> V(u, std::vector<mpz_class>(u));
    for (std::size_t j = 0; j < u; ++j) V[j][j] = 1;

    auto row_op = [&](std::size_t i1, std::size_t i2, const mpz_class& f) {
        // row i1 -= f * row i2
        for (std::size_t j = 0; j < u; ++j) T[i1][j] -= f * T[i2][j];
        for (std::size_t j = 0; j < rows; ++j) U[i1][j] -= f * U[i2][j];
    };
    auto col_op = [&](std::size_t j1, std::size_t j2, const mpz_class& f) {
        // col j1 -= f * col j2
        for (std::size_t i = 0; i < rows; ++i) T[i][j1] -= f * T[i][j2];
        for (std::size_t i = 0; i < u; ++i) V[i][j1] -= f * V[i][j2];
    };

    std::size_t diag = 0;
    while (diag < rows && diag < u) {
        // Find a nonzero entry in the remaining block.
        std::size_t pi = rows, pj = u;
        for (std::size_t i = diag; i < rows && pi == rows; ++i)
            for (std::size_t j = diag; j < u; ++j)
                if (T[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        std::swap(T[diag], T[pi]);
        std::swap(U[diag], U[pi]);
        std::swap(r[diag], r[pi]);
        if (pj != diag) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(T[i][diag], T[i][pj]);
            for (std::size_t i = 0; i < u; ++i) std::swap(V[i][diag], V[i][pj]);
        }
        // Clear the row and column at `diag` by gcd reduction.
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = diag + 1; i < rows; ++i) {
                if (T[i][diag] == 0) continue;
                mpz_class q = T[i][diag] / T[diag][diag];
                row_op(i, diag, q);
                r[i] -= q * r[diag];
                if (T[i][diag] != 0) {
                    std::swap(T[diag], T[i]);
                    std::swap(U[diag], U[i]);
                    std::swap(r[diag], r[i]);
                    again = true;
                }
            }
            for (std::size_t j = diag + 1; j < u; ++j) {
                if (T[diag][j] == 0) continue;
                mpz_class q = T[diag][j] / T[diag][diag];
                col_op(j, diag, q);
                if (T[diag][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(T[i][diag], T[i][j]);
                    for (std::size_t i = 0; i < u; ++i) std::swap(V[i][diag], V[i][j]);
                    again = true;
                }
            }
        }
        if (T[diag][diag] < 0) {
            for (std::size_t i = 0; i < u; ++i) V[i][diag] = -V[i][diag];
            T[diag][diag] = -T[diag][diag];
        }
        ++diag;
    }

    // Solve d_i z_i = c_i (mod m) for each diagonal entry, then x = V z.
    std::vector<mpz_class> z(u, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class d = i < diag ? T[i][i] : 0;
        mpz_class c = ((r[i] % m) + m) % m;
        if (d == 0) {
            if (c != 0) {
                std::vector<mpz_class> combo(coeffs_.size(), 0);
                for (std::size_t k = 0; k < rows; ++k)
                    combo_axpy(combo, U[i][k], pivots[k]->combo);
                make_certificate(combo, r[i]);
                return result;
            }
            continue;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        if (c % g != 0) {
            // (m/g) times this row is a vanishing combination with rhs != 0.
            mpz_class w = m / g;
            std::vector<mpz_class> combo(coeffs_.size(), 0);
            for (std::size_t k = 0; k < rows; ++k)
                combo_axpy(combo, w * U[i][k], pivots[k]->combo);
            make_certificate(combo, w * r[i]);
            return result;
        }
        mpz_class m_g = m / g;
        mpz_class d_g = (d / g) % m_g;
        mpz_class inv;
        if (m_g == 1) {
            z[i] = 0;
        } else {
            if (mpz_invert(inv.get_mpz_t(), d_g.get_mpz_t(), m_g.get_mpz_t()) == 0)
                throw InvariantError("smith diagonal not invertible after gcd split");
            z[i] = ((c / g) * inv) % m_g;
        }
    }

    result.solvable = true;
    result.solution.assign(u, 0);
    for (std::size_t i = 0; i < u; ++i) {
        mpz_class x = 0;
        for (std::size_t j = 0; j < u; ++j) x += V[i][j] * z[j];
        x = ((x % m) + m) % m;
        result.solution[i] = static_cast<std::int64_t>(x.get_si());
    }
    // Safety net: the solution must satisfy every input equation.
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < u; ++j) acc += mpz_class(coeffs_[e][j]) * result.solution[j];
        acc -= rhs_[e];
        if (acc % m != 0) throw InvariantError("zm solver produced an invalid solution");
    }
    return result;
}

} // namespace nsimplex

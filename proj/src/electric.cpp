#include "nsimplex/electric.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsimplex/errors.hpp"

namespace nsimplex {

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t mod) {
    std::int64_t t = 0, newt = 1, r = mod, newr = ((a % mod) + mod) % mod;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("element is not a unit");
    return t < 0 ? t + mod : t;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

std::array<mpq_class, 3> electric_apply_rational(const mpq_class& x, const mpq_class& y,
                                                 const mpq_class& z) {
    mpq_class w = x + z + x * y * z;
    if (w == 0) throw SingularityError("x + z + xyz vanishes");
    std::array<mpq_class, 3> out{x * y / w, w, y * z / w};
    for (auto& q : out) q.canonicalize();
    return out;
}

ResidueColorSet ResidueColorSet::make(std::int64_t p, int k,
                                      std::optional<std::int64_t> eps) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (p == 2) {
        if (eps && *eps != 1) throw std::invalid_argument("eps must be 1 for p = 2");
        eps = 1;
    } else {
        if (!is_prime(p) || p % 4 != 1)
            throw std::invalid_argument("p must be 2 or a prime with p = 1 mod 4");
        if (!eps) {
            for (std::int64_t e = 2; e < p; ++e)
                if (e * e % p == p - 1) {
                    eps = e;
                    break;
                }
        }
        if (!eps || *eps < 1 || *eps >= p || (*eps * *eps) % p != p - 1)
            throw std::invalid_argument("eps must satisfy eps^2 = -1 mod p");
    }
    ResidueColorSet cs;
    cs.p = p;
    cs.k = k;
    cs.epsilon = *eps;
    cs.modulus = 1;
    for (int i = 0; i < k; ++i) {
        if (cs.modulus > (std::int64_t(1) << 40) / p)
            throw std::invalid_argument("p^k too large");
        cs.modulus *= p;
    }
    for (std::int64_t x = cs.epsilon; x < cs.modulus; x += p) cs.elements.push_back(x);
    return cs;
}

int ResidueColorSet::color_of(std::int64_t x) const {
    x = ((x % modulus) + modulus) % modulus;
    if (x % p != epsilon % p) throw std::invalid_argument("value is not in the color set");
    return static_cast<int>((x - epsilon % p) / p);
}

RMap electric_rmap(const ResidueColorSet& cs) {
    const int m = cs.color_count();
    const std::int64_t mod = cs.modulus;
    std::vector<std::int32_t> flat;
    flat.reserve(static_cast<std::size_t>(m) * m * m * 3);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                std::int64_t x = cs.element(a), y = cs.element(b), z = cs.element(c);
                std::int64_t w = (x + z + x * y % mod * z) % mod;
                std::int64_t winv = inverse_mod(w, mod); // w is a unit on X
                std::int64_t xo = x * y % mod * winv % mod;
                std::int64_t zo = y * z % mod * winv % mod;
                flat.push_back(static_cast<std::int32_t>(cs.color_of(xo)));
                flat.push_back(static_cast<std::int32_t>(cs.color_of(w)));
                flat.push_back(static_cast<std::int32_t>(cs.color_of(zo)));
            }
    RMap r(3, m, std::move(flat));
    if (!r.is_bijective())
        throw InvariantError("electric restriction failed to be a bijection");
    return r;
}

std::array<int, 3> reduced_form_z25(int n1, int n2, int n3) {
    auto mod5 = [](int v) { return ((v % 5) + 5) % 5; };
    return {mod5(n1 + 2 * n2 - 2), mod5(2 - n2), mod5(n3 + 2 * n2 - 2)};
}

std::array<int, 3> reduced_form_z8(int n1, int n2, int n3) {
    auto mod4 = [](int v) { return ((v % 4) + 4) % 4; };
    int s = n1 * n2 + n1 * n3 + n2 * n3;
    return {mod4(n1 + 1 + 2 * (n2 + n3 + s)), mod4(n2 + 1 + 2 * (n1 + n3 + s)),
            mod4(n3 + 1 + 2 * (n1 + n2 + s))};
}

std::int64_t Character::operator()(std::int64_t unit) const {
    unit = ((unit % modulus_ring) + modulus_ring) % modulus_ring;
    std::int64_t e = exponent_by_residue[static_cast<std::size_t>(unit)];
    if (e < 0) throw std::invalid_argument("value is not a unit");
    return e;
}

bool Character::is_trivial() const {
    for (std::int64_t v : generator_values)
        if (v % order != 0) return false;
    return true;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t v) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q * q <= v; ++q) {
        if (v % q) continue;
        out.push_back(q);
        while (v % q == 0) v /= q;
    }
    if (v > 1) out.push_back(v);
    return out;
}

} // namespace

std::vector<Character> characters(const ResidueColorSet& cs) {
    const std::int64_t mod = cs.modulus;
    std::vector<Character> out;
    auto blank = [&](std::int64_t order) {
        Character c;
        c.modulus_ring = mod;
        c.order = order;
        c.exponent_by_residue.assign(static_cast<std::size_t>(mod), -1);
        return c;
    };

    if (cs.p != 2) {
        // Cyclic unit group of order p^(k-1)(p-1); smallest generator by trial.
        std::int64_t group_order = (mod / cs.p) * (cs.p - 1);
        std::vector<std::int64_t> qs = prime_factors(group_order);
        std::int64_t g = 0;
        for (std::int64_t cand = 2; cand < mod && g == 0; ++cand) {
            if (cand % cs.p == 0) continue;
            bool primitive = true;
            for (std::int64_t q : qs)
                if (pow_mod(cand, group_order / q, mod) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) g = cand;
        }
        if (g == 0) throw InvariantError("no primitive root found");
        std::vector<std::int64_t> dlog(static_cast<std::size_t>(mod), -1);
        std::int64_t v = 1;
        for (std::int64_t t = 0; t < group_order; ++t) {
            dlog[static_cast<std::size_t>(v)] = t;
            v = v * g % mod;
        }
        for (std::int64_t j = 0; j < group_order; ++j) {
            Character c = blank(group_order);
            c.generator_values = {j};
            for (std::int64_t u = 0; u < mod; ++u)
                if (dlog[static_cast<std::size_t>(u)] >= 0)
                    c.exponent_by_residue[static_cast<std::size_t>(u)] =
                        j * dlog[static_cast<std::size_t>(u)] % group_order;
            out.push_back(std::move(c));
        }
        return out;
    }

    if (cs.k == 2) {
        // (Z/4)^* = {1, 3}, generated by -1.
        for (std::int64_t e : {std::int64_t(0), std::int64_t(1)}) {
            Character c = blank(2);
            c.generator_values = {e};
            c.exponent_by_residue[1] = 0;
            c.exponent_by_residue[3] = e;
            out.push_back(std::move(c));
        }
        return out;
    }

    // (Z/2^k)^* = <-1> x <5> with |<5>| = 2^(k-2); exponent m = 2^(k-2).
    const std::int64_t m = mod / 4;
    std::vector<std::int64_t> sign_of(static_cast<std::size_t>(mod), -1);
    std::vector<std::int64_t> five_log(static_cast<std::size_t>(mod), -1);
    for (std::int64_t s = 0; s <= 1; ++s) {
        std::int64_t v = s ? mod - 1 : 1;
        for (std::int64_t t = 0; t < m; ++t) {
            sign_of[static_cast<std::size_t>(v)] = s;
            five_log[static_cast<std::size_t>(v)] = t;
            v = v * 5 % mod;
        }
    }
    // The image of -1 must have order dividing 2 in Z/m.
    for (std::int64_t e1 : {std::int64_t(0), m / 2}) {
        for (std::int64_t e2 = 0; e2 < m; ++e2) {
            Character c = blank(m);
            c.generator_values = {e1, e2};
            for (std::int64_t u = 1; u < mod; u += 2)
                c.exponent_by_residue[static_cast<std::size_t>(u)] =
                    (sign_of[static_cast<std::size_t>(u)] * e1 +
                     five_log[static_cast<std::size_t>(u)] * e2) %
                    m;
            out.push_back(std::move(c));
        }
    }
    return out;
}

NontrivialityReport nontriviality_report(const ResidueColorSet& cs, const Character& eta,
                                         int threads) {
    RMap r = electric_rmap(cs);
    ElectricCocycles cc = electric_cocycles(cs, eta);
    NontrivialityReport report;
    auto fill = [&](const Cocycle& phi, CocycleVerdict& v) {
        v.cocycle_ok = check_cocycle(r, phi, threads).ok;
        v.fixed_witnesses = fixed_point_obstruction(r, phi);
        CoboundarySolution sol = solve_coboundary(r, phi);
        v.is_coboundary = sol.exists;
        if (sol.exists) v.psi = std::move(sol.psi);
    };
    fill(cc.c1, report.c1);
    fill(cc.c2, report.c2);
    return report;
}

ElectricCocycles electric_cocycles(const ResidueColorSet& cs, const Character& eta) {
    RMap r = electric_rmap(cs);
    const int m = cs.color_count();
    ElectricCocycles cc{Cocycle::zero(m, eta.order), Cocycle::zero(m, eta.order)};
    std::array<int, 3> in;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                in = {a, b, c};
                std::vector<int> outc = r.apply(in);
                cc.c1.at(a, b, c) = eta(cs.element(b));
                cc.c2.at(a, b, c) = eta(cs.element(outc[1]));
            }
    return cc;
}

} // namespace nsimplex

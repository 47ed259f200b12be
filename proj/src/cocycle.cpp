#include "nsimplex/cocycle.hpp"

#include <stdexcept>

#include "nsimplex/errors.hpp"
#include "nsimplex/parallel.hpp"
#include "text_parse.hpp"

namespace nsimplex {

namespace {

std::int64_t positive_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// Application order of the four slot triples on each side (0-based slots).
constexpr std::array<std::array<int, 3>, 4> kLeftSequence{
    {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
constexpr std::array<std::array<int, 3>, 4> kRightSequence{
    {{2, 4, 5}, {1, 3, 5}, {0, 3, 4}, {0, 1, 2}}};

} // namespace

Cocycle Cocycle::zero(int colors, std::int64_t modulus) {
    if (colors < 1) throw std::invalid_argument("cocycle needs at least one color");
    if (modulus < 1) throw std::invalid_argument("cocycle modulus must be positive");
    Cocycle c;
    c.colors = colors;
    c.modulus = modulus;
    c.table.assign(static_cast<std::size_t>(colors) * colors * colors, 0);
    return c;
}

Cocycle Cocycle::parse(std::string_view text) {
    detail::LineCursor cur(text);
    cur.expect_line("simplex-cocycle v1", "header");
    if (!cur.next_line()) cur.fail("missing parameter line");
    cur.read_token("m_colors=", "parameter line");
    long long colors = cur.read_int("color count");
    cur.read_token("modulus=", "parameter line");
    long long modulus = cur.read_int("modulus");
    cur.expect_line_end();
    if (colors < 1 || colors > 4096) cur.fail("color count out of range");
    if (modulus < 1) cur.fail("modulus must be positive");
    Cocycle c = Cocycle::zero(static_cast<int>(colors), modulus);
    for (int a = 0; a < colors; ++a)
        for (int b = 0; b < colors; ++b)
            for (int d = 0; d < colors; ++d) {
                if (!cur.next_line()) cur.fail("missing table line");
                if (cur.read_int("first input") != a || cur.read_int("second input") != b ||
                    cur.read_int("third input") != d)
                    cur.fail("inputs must appear in row-major order");
                cur.read_token("->", "table line");
                c.at(a, b, d) = positive_mod(cur.read_int("exponent"), modulus);
                cur.expect_line_end();
            }
    while (cur.next_line())
        if (!cur.line().empty()) cur.fail("unexpected extra content");
    return c;
}

std::string Cocycle::serialize() const {
    std::string out = "simplex-cocycle v1\n";
    out += "m_colors=" + std::to_string(colors) + " modulus=" + std::to_string(modulus) + "\n";
    for (int a = 0; a < colors; ++a)
        for (int b = 0; b < colors; ++b)
            for (int c = 0; c < colors; ++c)
                out += std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) +
                       " -> " + std::to_string((*this)(a, b, c)) + "\n";
    return out;
}

Potential Potential::zero(int colors, std::int64_t modulus) {
    Potential p;
    p.colors = colors;
    p.modulus = modulus;
    p.table.assign(static_cast<std::size_t>(colors), 0);
    return p;
}

Potential Potential::parse(std::string_view text) {
    detail::LineCursor cur(text);
    cur.expect_line("simplex-potential v1", "header");
    if (!cur.next_line()) cur.fail("missing parameter line");
    cur.read_token("m_colors=", "parameter line");
    long long colors = cur.read_int("color count");
    cur.read_token("modulus=", "parameter line");
    long long modulus = cur.read_int("modulus");
    cur.expect_line_end();
    if (colors < 1 || colors > 65536) cur.fail("color count out of range");
    if (modulus < 1) cur.fail("modulus must be positive");
    Potential p = Potential::zero(static_cast<int>(colors), modulus);
    for (int x = 0; x < colors; ++x) {
        if (!cur.next_line()) cur.fail("missing table line");
        if (cur.read_int("color") != x) cur.fail("colors must appear in ascending order");
        cur.read_token("->", "table line");
        p.table[static_cast<std::size_t>(x)] = positive_mod(cur.read_int("exponent"), modulus);
        cur.expect_line_end();
    }
    while (cur.next_line())
        if (!cur.line().empty()) cur.fail("unexpected extra content");
    return p;
}

std::string Potential::serialize() const {
    std::string out = "simplex-potential v1\n";
    out += "m_colors=" + std::to_string(colors) + " modulus=" + std::to_string(modulus) + "\n";
    for (int x = 0; x < colors; ++x)
        out += std::to_string(x) + " -> " + std::to_string(table[static_cast<std::size_t>(x)]) + "\n";
    return out;
}

std::int64_t twisted_product_trace(const RMap& r, const Cocycle& phi, TraceSide side,
                                   std::span<const int> a) {
    if (r.arity() != 3) throw std::invalid_argument("trace requires an arity-3 map");
    if (a.size() != 6) throw std::invalid_argument("expected a 6-tuple");
    const auto& seq = side == TraceSide::left ? kLeftSequence : kRightSequence;
    std::array<int, 6> state;
    for (std::size_t i = 0; i < 6; ++i) state[i] = a[i];
    std::int64_t exponent = 0;
    for (const auto& slots : seq) {
        exponent += phi(state[static_cast<std::size_t>(slots[0])],
                        state[static_cast<std::size_t>(slots[1])],
                        state[static_cast<std::size_t>(slots[2])]);
        apply_on_slots_in_place(r, state, slots);
    }
    return positive_mod(exponent, phi.modulus);
}

CocycleCheckResult check_cocycle(const RMap& r, const Cocycle& phi, int threads) {
    if (r.arity() != 3) throw std::invalid_argument("cocycle check requires an arity-3 map");
    if (phi.colors != r.colors()) throw std::invalid_argument("color count mismatch");
    const std::uint64_t m = static_cast<std::uint64_t>(r.colors());
    std::uint64_t total = 1;
    for (int i = 0; i < 6; ++i) total *= m;

    std::vector<std::optional<std::uint64_t>> found(
        static_cast<std::size_t>(effective_threads(threads)) + 1);
    parallel_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end, int chunk) {
        std::array<int, 6> a;
        for (std::uint64_t s = begin; s < end; ++s) {
            std::uint64_t v = s;
            for (std::size_t j = 6; j-- > 0;) {
                a[j] = static_cast<int>(v % m);
                v /= m;
            }
            if (twisted_product_trace(r, phi, TraceSide::left, a) !=
                twisted_product_trace(r, phi, TraceSide::right, a)) {
                found[static_cast<std::size_t>(chunk)] = s;
                return;
            }
        }
    });
    std::optional<std::uint64_t> first;
    for (const auto& f : found)
        if (f && (!first || *f < *first)) first = f;
    CocycleCheckResult result;
    if (first) {
        result.ok = false;
        std::array<int, 6> a;
        std::uint64_t v = *first;
        for (std::size_t j = 6; j-- > 0;) {
            a[j] = static_cast<int>(v % m);
            v /= m;
        }
        result.counterexample = a;
        result.left = twisted_product_trace(r, phi, TraceSide::left, a);
        result.right = twisted_product_trace(r, phi, TraceSide::right, a);
    }
    return result;
}

Cocycle coboundary_of(const RMap& r, const Potential& psi) {
    if (r.arity() != 3) throw std::invalid_argument("coboundary requires an arity-3 map");
    if (psi.colors != r.colors()) throw std::invalid_argument("color count mismatch");
    Cocycle c = Cocycle::zero(r.colors(), psi.modulus);
    std::array<int, 3> in;
    for (int a = 0; a < r.colors(); ++a)
        for (int b = 0; b < r.colors(); ++b)
            for (int d = 0; d < r.colors(); ++d) {
                in = {a, b, d};
                std::vector<int> out = r.apply(in);
                std::int64_t v = psi.table[static_cast<std::size_t>(a)] +
                                 psi.table[static_cast<std::size_t>(b)] +
                                 psi.table[static_cast<std::size_t>(d)] -
                                 psi.table[static_cast<std::size_t>(out[0])] -
                                 psi.table[static_cast<std::size_t>(out[1])] -
                                 psi.table[static_cast<std::size_t>(out[2])];
                c.at(a, b, d) = positive_mod(v, psi.modulus);
            }
    return c;
}

CoboundarySolution solve_coboundary(const RMap& r, const Cocycle& phi) {
    if (phi.modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    if (r.arity() != 3) throw std::invalid_argument("coboundary solve requires arity 3");
    if (phi.colors != r.colors()) throw std::invalid_argument("color count mismatch");
    const int m_colors = r.colors();
    ZmLinearSystem system(static_cast<std::size_t>(m_colors), phi.modulus);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(m_colors));
    std::array<int, 3> in;
    for (int a = 0; a < m_colors; ++a)
        for (int b = 0; b < m_colors; ++b)
            for (int d = 0; d < m_colors; ++d) {
                std::fill(coeffs.begin(), coeffs.end(), 0);
                in = {a, b, d};
                std::vector<int> out = r.apply(in);
                coeffs[static_cast<std::size_t>(a)] += 1;
                coeffs[static_cast<std::size_t>(b)] += 1;
                coeffs[static_cast<std::size_t>(d)] += 1;
                coeffs[static_cast<std::size_t>(out[0])] -= 1;
                coeffs[static_cast<std::size_t>(out[1])] -= 1;
                coeffs[static_cast<std::size_t>(out[2])] -= 1;
                system.add_equation(coeffs, phi(a, b, d));
            }
    ZmLinearSystem::Result res = system.solve();
    CoboundarySolution sol;
    sol.exists = res.solvable;
    if (res.solvable) {
        Potential psi = Potential::zero(m_colors, phi.modulus);
        psi.table.assign(res.solution.begin(), res.solution.end());
        sol.psi = std::move(psi);
    } else {
        sol.certificate = std::move(res.certificate);
    }
    return sol;
}

std::vector<std::array<int, 3>> fixed_point_obstruction(const RMap& r, const Cocycle& phi) {
    if (r.arity() != 3) throw std::invalid_argument("obstruction requires arity 3");
    if (phi.colors != r.colors()) throw std::invalid_argument("color count mismatch");
    std::vector<std::array<int, 3>> witnesses;
    std::array<int, 3> in;
    for (int a = 0; a < r.colors(); ++a)
        for (int b = 0; b < r.colors(); ++b)
            for (int c = 0; c < r.colors(); ++c) {
                in = {a, b, c};
                std::vector<int> out = r.apply(in);
                if (out[0] == a && out[1] == b && out[2] == c &&
                    phi(a, b, c) % phi.modulus != 0)
                    witnesses.push_back(in);
            }
    return witnesses;
}

} // namespace nsimplex

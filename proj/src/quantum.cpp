#include "nsimplex/quantum.hpp"

#include <stdexcept>

#include "nsimplex/errors.hpp"

namespace nsimplex {

namespace {

std::int64_t positive_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

std::uint64_t checked_pow(int base, int exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / static_cast<std::uint64_t>(base))
            throw ResourceError("operator state space exceeds the cap", 0, cap);
        v *= static_cast<std::uint64_t>(base);
    }
    return v;
}

} // namespace

bool MonomialOperator::is_invertible() const {
    std::vector<bool> seen(perm.size(), false);
    for (std::uint32_t img : perm) {
        if (img >= perm.size() || seen[img]) return false;
        seen[img] = true;
    }
    return true;
}

std::string MonomialOperator::serialize() const {
    std::string out;
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    for (std::uint64_t t = 0; t < states(); ++t) {
        for (int j = 0; j < arity; ++j) {
            if (j) out += ' ';
            out += std::to_string(tuple[static_cast<std::size_t>(j)]);
        }
        out += " ->";
        std::uint64_t img = perm[t];
        std::vector<int> img_tuple(static_cast<std::size_t>(arity));
        for (int j = arity - 1; j >= 0; --j) {
            img_tuple[static_cast<std::size_t>(j)] = static_cast<int>(img % static_cast<std::uint64_t>(colors));
            img /= static_cast<std::uint64_t>(colors);
        }
        for (int j = 0; j < arity; ++j) {
            out += ' ';
            out += std::to_string(img_tuple[static_cast<std::size_t>(j)]);
        }
        out += ' ';
        out += std::to_string(phase[t]);
        out += '\n';
        for (int j = arity - 1; j >= 0; --j) {
            if (++tuple[static_cast<std::size_t>(j)] < colors) break;
            tuple[static_cast<std::size_t>(j)] = 0;
        }
    }
    return out;
}

MonomialOperator compose(const MonomialOperator& b, const MonomialOperator& a) {
    if (a.arity != b.arity || a.colors != b.colors || a.modulus != b.modulus)
        throw std::invalid_argument("operators are not composable");
    MonomialOperator c;
    c.arity = a.arity;
    c.colors = a.colors;
    c.modulus = a.modulus;
    c.perm.resize(a.perm.size());
    c.phase.resize(a.phase.size());
    for (std::uint64_t t = 0; t < a.states(); ++t) {
        std::uint32_t mid = a.perm[t];
        c.perm[t] = b.perm[mid];
        c.phase[t] = static_cast<std::int32_t>(
            positive_mod(static_cast<std::int64_t>(a.phase[t]) + b.phase[mid], c.modulus));
    }
    return c;
}

MonomialOperator inverse(const MonomialOperator& op) {
    if (!op.is_invertible())
        throw std::invalid_argument("operator permutation part is not a bijection");
    MonomialOperator inv;
    inv.arity = op.arity;
    inv.colors = op.colors;
    inv.modulus = op.modulus;
    inv.perm.resize(op.perm.size());
    inv.phase.resize(op.phase.size());
    for (std::uint64_t t = 0; t < op.states(); ++t) {
        inv.perm[op.perm[t]] = static_cast<std::uint32_t>(t);
        inv.phase[op.perm[t]] =
            static_cast<std::int32_t>(positive_mod(-op.phase[t], op.modulus));
    }
    return inv;
}

MonomialOperator identity_operator(int arity, int colors, std::int64_t modulus) {
    MonomialOperator op;
    op.arity = arity;
    op.colors = colors;
    op.modulus = modulus;
    std::uint64_t states = checked_pow(colors, arity, std::uint64_t(1) << 34);
    op.perm.resize(states);
    op.phase.assign(states, 0);
    for (std::uint64_t t = 0; t < states; ++t) op.perm[t] = static_cast<std::uint32_t>(t);
    return op;
}

MonomialOperator permutation_operator(const RMap& r, std::int64_t modulus) {
    if (r.arity() != 3) throw std::invalid_argument("permutation operator requires arity 3");
    MonomialOperator op;
    op.arity = 3;
    op.colors = r.colors();
    op.modulus = modulus;
    op.perm.resize(r.states());
    op.phase.assign(r.states(), 0);
    for (std::uint64_t t = 0; t < r.states(); ++t) {
        std::uint64_t img = 0;
        for (int j = 0; j < 3; ++j)
            img = img * static_cast<std::uint64_t>(r.colors()) +
                  static_cast<std::uint64_t>(r.output_component(t, j));
        op.perm[t] = static_cast<std::uint32_t>(img);
    }
    return op;
}

MonomialOperator twisted_operator(const RMap& r, const Cocycle& phi) {
    if (phi.colors != r.colors()) throw std::invalid_argument("color count mismatch");
    MonomialOperator op = permutation_operator(r, phi.modulus);
    for (std::uint64_t t = 0; t < op.states(); ++t)
        op.phase[t] = static_cast<std::int32_t>(positive_mod(phi.table[t], phi.modulus));
    return op;
}

MonomialOperator embed_on_slots(const MonomialOperator& op, std::span<const int> slots,
                                int total) {
    if (static_cast<int>(slots.size()) != op.arity)
        throw std::invalid_argument("slot count must match operator arity");
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] < 0 || slots[i] >= total)
            throw std::invalid_argument("slot index out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (slots[i] == slots[j]) throw std::invalid_argument("repeated slot index");
    }
    MonomialOperator big;
    big.arity = total;
    big.colors = op.colors;
    big.modulus = op.modulus;
    std::uint64_t states = checked_pow(op.colors, total, std::uint64_t(1) << 34);
    big.perm.resize(states);
    big.phase.resize(states);
    std::vector<int> tuple(static_cast<std::size_t>(total));
    for (std::uint64_t t = 0; t < states; ++t) {
        std::uint64_t v = t;
        for (std::size_t j = static_cast<std::size_t>(total); j-- > 0;) {
            tuple[j] = static_cast<int>(v % static_cast<std::uint64_t>(op.colors));
            v /= static_cast<std::uint64_t>(op.colors);
        }
        std::uint64_t sub = 0;
        for (int s : slots)
            sub = sub * static_cast<std::uint64_t>(op.colors) +
                  static_cast<std::uint64_t>(tuple[static_cast<std::size_t>(s)]);
        std::uint64_t sub_img = op.perm[sub];
        std::vector<int> sub_tuple(static_cast<std::size_t>(op.arity));
        for (int j = op.arity - 1; j >= 0; --j) {
            sub_tuple[static_cast<std::size_t>(j)] =
                static_cast<int>(sub_img % static_cast<std::uint64_t>(op.colors));
            sub_img /= static_cast<std::uint64_t>(op.colors);
        }
        std::uint64_t img = 0;
        for (int j = 0; j < total; ++j) {
            int value = tuple[static_cast<std::size_t>(j)];
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (slots[s] == j) value = sub_tuple[s];
            img = img * static_cast<std::uint64_t>(op.colors) + static_cast<std::uint64_t>(value);
        }
        big.perm[t] = static_cast<std::uint32_t>(img);
        big.phase[t] = op.phase[sub];
    }
    return big;
}

QteCheckResult check_qte(const MonomialOperator& op, std::uint64_t max_states) {
    if (op.arity != 3) throw std::invalid_argument("tetrahedron check requires arity 3");
    std::uint64_t states6 = checked_pow(op.colors, 6, std::uint64_t(1) << 62);
    if (states6 > max_states)
        throw ResourceError("tetrahedron check state space exceeds the cap", states6,
                            max_states);
    const std::array<std::array<int, 3>, 4> seq{
        {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
    MonomialOperator lhs = embed_on_slots(op, seq[0], 6);
    for (std::size_t i = 1; i < seq.size(); ++i)
        lhs = compose(embed_on_slots(op, seq[i], 6), lhs);
    MonomialOperator rhs = embed_on_slots(op, seq[3], 6);
    for (std::size_t i = seq.size() - 1; i-- > 0;)
        rhs = compose(embed_on_slots(op, seq[i], 6), rhs);

    QteCheckResult result;
    for (std::uint64_t t = 0; t < lhs.states(); ++t) {
        if (lhs.perm[t] == rhs.perm[t] && lhs.phase[t] == rhs.phase[t]) continue;
        result.ok = false;
        std::array<int, 6> a;
        std::uint64_t v = t;
        for (std::size_t j = 6; j-- > 0;) {
            a[j] = static_cast<int>(v % static_cast<std::uint64_t>(op.colors));
            v /= static_cast<std::uint64_t>(op.colors);
        }
        result.counterexample = a;
        result.lhs_perm = lhs.perm[t];
        result.rhs_perm = rhs.perm[t];
        result.lhs_phase = lhs.phase[t];
        result.rhs_phase = rhs.phase[t];
        break;
    }
    return result;
}

GaugeCheckResult gauge_equivalent(const MonomialOperator& a, const MonomialOperator& b,
                                  const Potential& psi) {
    GaugeCheckResult result;
    if (a.arity != 3 || b.arity != 3) {
        result.reason = "gauge check requires arity 3";
        return result;
    }
    if (a.colors != b.colors || a.modulus != b.modulus) {
        result.reason = "operators live on different spaces";
        return result;
    }
    if (psi.colors != a.colors || psi.modulus != a.modulus) {
        result.reason = "potential does not match the operators";
        return result;
    }
    if (a.perm != b.perm) {
        result.reason = "permutation parts differ; diagonal conjugation cannot match them";
        return result;
    }
    const std::int64_t m = a.modulus;
    for (std::uint64_t t = 0; t < a.states(); ++t) {
        std::uint64_t v = t;
        int z = static_cast<int>(v % static_cast<std::uint64_t>(a.colors));
        v /= static_cast<std::uint64_t>(a.colors);
        int y = static_cast<int>(v % static_cast<std::uint64_t>(a.colors));
        v /= static_cast<std::uint64_t>(a.colors);
        int x = static_cast<int>(v);
        std::uint64_t img = a.perm[t];
        int zp = static_cast<int>(img % static_cast<std::uint64_t>(a.colors));
        img /= static_cast<std::uint64_t>(a.colors);
        int yp = static_cast<int>(img % static_cast<std::uint64_t>(a.colors));
        img /= static_cast<std::uint64_t>(a.colors);
        int xp = static_cast<int>(img);
        std::int64_t expected =
            a.phase[t] + psi.table[static_cast<std::size_t>(x)] +
            psi.table[static_cast<std::size_t>(y)] + psi.table[static_cast<std::size_t>(z)] -
            psi.table[static_cast<std::size_t>(xp)] - psi.table[static_cast<std::size_t>(yp)] -
            psi.table[static_cast<std::size_t>(zp)];
        if (positive_mod(expected - b.phase[t], m) != 0) {
            result.reason = "phase mismatch at (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + ")";
            return result;
        }
    }
    result.equivalent = true;
    return result;
}

} // namespace nsimplex

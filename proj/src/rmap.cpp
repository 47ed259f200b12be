#include "nsimplex/rmap.hpp"

#include <numeric>
#include <stdexcept>

#include "nsimplex/errors.hpp"
#include "text_parse.hpp"

namespace nsimplex {

namespace {

std::uint64_t checked_pow(int base, int exp) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(base))
            throw ResourceError("state space too large", 0, std::uint64_t(1) << 62);
        v *= static_cast<std::uint64_t>(base);
    }
    return v;
}

} // namespace

RMap::RMap(int arity, int colors, std::vector<std::int32_t> flat_outputs)
    : arity_(arity), colors_(colors), out_(std::move(flat_outputs)) {
    if (arity_ < 2) throw std::invalid_argument("rmap arity must be at least 2");
    if (colors_ < 1) throw std::invalid_argument("rmap needs at least one color");
    states_ = checked_pow(colors_, arity_);
    if (out_.size() != states_ * static_cast<std::uint64_t>(arity_))
        throw std::invalid_argument("rmap table has wrong size");
    for (std::int32_t c : out_)
        if (c < 0 || c >= colors_)
            throw std::invalid_argument("rmap table entry out of color range");
}

RMap RMap::identity(int arity, int colors) {
    std::uint64_t states = checked_pow(colors, arity);
    std::vector<std::int32_t> flat(states * static_cast<std::uint64_t>(arity));
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    for (std::uint64_t s = 0; s < states; ++s) {
        for (int j = 0; j < arity; ++j)
            flat[s * static_cast<std::uint64_t>(arity) + static_cast<std::uint64_t>(j)] =
                tuple[static_cast<std::size_t>(j)];
        for (int j = arity - 1; j >= 0; --j) {
            if (++tuple[static_cast<std::size_t>(j)] < colors) break;
            tuple[static_cast<std::size_t>(j)] = 0;
        }
    }
    return RMap(arity, colors, std::move(flat));
}

std::uint64_t RMap::tuple_index(std::span<const int> tuple) const {
    std::uint64_t idx = 0;
    for (int c : tuple) idx = idx * static_cast<std::uint64_t>(colors_) + static_cast<std::uint64_t>(c);
    return idx;
}

std::vector<int> RMap::tuple_of(std::uint64_t index) const {
    std::vector<int> tuple(static_cast<std::size_t>(arity_));
    for (int j = arity_ - 1; j >= 0; --j) {
        tuple[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::uint64_t>(colors_));
        index /= static_cast<std::uint64_t>(colors_);
    }
    return tuple;
}

void RMap::apply(std::span<const int> in, std::span<int> out) const {
    std::uint64_t idx = tuple_index(in);
    for (int j = 0; j < arity_; ++j)
        out[static_cast<std::size_t>(j)] = output_component(idx, j);
}

std::vector<int> RMap::apply(std::span<const int> in) const {
    std::vector<int> out(static_cast<std::size_t>(arity_));
    apply(in, out);
    return out;
}

bool RMap::is_bijective() const {
    std::vector<bool> seen(states_, false);
    for (std::uint64_t s = 0; s < states_; ++s) {
        std::uint64_t img = 0;
        for (int j = 0; j < arity_; ++j)
            img = img * static_cast<std::uint64_t>(colors_) +
                  static_cast<std::uint64_t>(output_component(s, j));
        if (seen[img]) return false;
        seen[img] = true;
    }
    return true;
}

RMap RMap::parse(std::string_view text) {
    detail::LineCursor cur(text);
    cur.expect_line("simplex-rmap v1", "header");
    if (!cur.next_line()) cur.fail("missing parameter line");
    cur.read_token("n=", "parameter line");
    long long n = cur.read_int("arity");
    cur.read_token("m=", "parameter line");
    long long m = cur.read_int("color count");
    cur.expect_line_end();
    if (n < 2 || n > 16) cur.fail("arity out of range");
    if (m < 1 || m > 4096) cur.fail("color count out of range");

    std::uint64_t states = checked_pow(static_cast<int>(m), static_cast<int>(n));
    std::vector<std::int32_t> flat;
    flat.reserve(states * static_cast<std::uint64_t>(n));
    std::vector<int> expect(static_cast<std::size_t>(n), 0);
    for (std::uint64_t s = 0; s < states; ++s) {
        if (!cur.next_line()) cur.fail("missing table line");
        for (int j = 0; j < n; ++j) {
            long long v = cur.read_int("input color");
            if (v != expect[static_cast<std::size_t>(j)])
                cur.fail("inputs must appear in row-major order");
        }
        cur.read_token("->", "table line");
        for (int j = 0; j < n; ++j) {
            long long v = cur.read_int("output color");
            if (v < 0 || v >= m) cur.fail("output color out of range");
            flat.push_back(static_cast<std::int32_t>(v));
        }
        cur.expect_line_end();
        for (int j = static_cast<int>(n) - 1; j >= 0; --j) {
            if (++expect[static_cast<std::size_t>(j)] < m) break;
            expect[static_cast<std::size_t>(j)] = 0;
        }
    }
    while (cur.next_line())
        if (!cur.line().empty()) cur.fail("unexpected extra content");
    return RMap(static_cast<int>(n), static_cast<int>(m), std::move(flat));
}

std::string RMap::serialize() const {
    std::string out = "simplex-rmap v1\n";
    out += "n=" + std::to_string(arity_) + " m=" + std::to_string(colors_) + "\n";
    for (std::uint64_t s = 0; s < states_; ++s) {
        std::vector<int> in = tuple_of(s);
        for (int j = 0; j < arity_; ++j) {
            if (j) out += ' ';
            out += std::to_string(in[static_cast<std::size_t>(j)]);
        }
        out += " ->";
        for (int j = 0; j < arity_; ++j) {
            out += ' ';
            out += std::to_string(output_component(s, j));
        }
        out += '\n';
    }
    return out;
}

std::vector<int> apply_on_slots(const RMap& r, std::span<const int> state,
                                std::span<const int> slots) {
    std::vector<int> result(state.begin(), state.end());
    apply_on_slots_in_place(r, result, slots);
    return result;
}

void apply_on_slots_in_place(const RMap& r, std::span<int> state,
                             std::span<const int> slots) {
    if (static_cast<int>(slots.size()) != r.arity())
        throw std::invalid_argument("slot count must equal rmap arity");
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < slots.size(); ++j) {
        int s = slots[j];
        if (s < 0 || s >= static_cast<int>(state.size()))
            throw std::invalid_argument("slot index out of range");
        for (std::size_t l = 0; l < j; ++l)
            if (slots[l] == s) throw std::invalid_argument("repeated slot index");
        idx = idx * static_cast<std::uint64_t>(r.colors()) +
              static_cast<std::uint64_t>(state[static_cast<std::size_t>(s)]);
    }
    for (int j = 0; j < r.arity(); ++j)
        state[static_cast<std::size_t>(slots[static_cast<std::size_t>(j)])] =
            r.output_component(idx, j);
}

} // namespace nsimplex

#ifndef NSIMPLEX_RMAP_HPP
#define NSIMPLEX_RMAP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsimplex {

/// A map X^n -> X^n on colors X = {0..m-1}, given by an explicit table.
/// Input tuples are indexed in row-major order: the first color varies
/// slowest. Bijectivity is a checkable property, not a requirement.
class RMap {
public:
    RMap(int arity, int colors, std::vector<std::int32_t> flat_outputs);

    static RMap identity(int arity, int colors);

    /// Text format, bit-exact:
    ///   simplex-rmap v1
    ///   n=<arity> m=<colors>
    ///   i1 i2 ... in -> o1 o2 ... on      (m^n lines, inputs in row-major order)
    static RMap parse(std::string_view text);
    std::string serialize() const;

    int arity() const { return arity_; }
    int colors() const { return colors_; }
    std::uint64_t states() const { return states_; }

    std::uint64_t tuple_index(std::span<const int> tuple) const;
    std::vector<int> tuple_of(std::uint64_t index) const;

    void apply(std::span<const int> in, std::span<int> out) const;
    std::vector<int> apply(std::span<const int> in) const;
    int output_component(std::uint64_t in_index, int component) const {
        return out_[in_index * static_cast<std::uint64_t>(arity_) +
                    static_cast<std::uint64_t>(component)];
    }

    bool is_bijective() const;

    bool operator==(const RMap&) const = default;

private:
    int arity_;
    int colors_;
    std::uint64_t states_;
    std::vector<std::int32_t> out_; // states_ * arity_ entries
};

/// Applies R to the sub-tuple of `state` at the given slot positions (read and
/// written in slot-list order); other entries pass through. Slots are 0-based
/// and must be distinct.
std::vector<int> apply_on_slots(const RMap& r, std::span<const int> state,
                                std::span<const int> slots);
void apply_on_slots_in_place(const RMap& r, std::span<int> state,
                             std::span<const int> slots);

} // namespace nsimplex

#endif

#ifndef NSIMPLEX_FACE_HPP
#define NSIMPLEX_FACE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nsimplex {

/// One coordinate entry of a face word. Ordering zero < one < star is part of
/// the external contract: face enumeration and every basis index derived from
/// it use lexicographic order under this symbol order.
enum class Symbol : std::uint8_t { zero = 0, one = 1, star = 2 };

char symbol_char(Symbol s);

/// A face of the cube I^N, written as a word of N symbols over {0, 1, *}.
/// Positions with a digit are fixed coordinates, stars are free; the dimension
/// of the face is the number of stars.
class FaceCode {
public:
    FaceCode() = default;
    explicit FaceCode(std::vector<Symbol> word);

    /// Parses the ASCII form, e.g. "0**1". Leftmost symbol is coordinate 0.
    static FaceCode parse(std::string_view text);

    int ambient_dim() const { return static_cast<int>(word_.size()); }
    int dim() const;
    Symbol at(int pos) const { return word_[static_cast<std::size_t>(pos)]; }
    const std::vector<Symbol>& word() const { return word_; }

    /// 0-based positions of the stars, ascending.
    std::vector<int> star_positions() const;

    /// True iff g is a (weak) subface of this face.
    bool contains(const FaceCode& g) const;

    std::string str() const;

    bool operator==(const FaceCode&) const = default;
    std::strong_ordering operator<=>(const FaceCode& other) const;

private:
    std::vector<Symbol> word_;
};

enum class FaceRole { incoming, outgoing };

/// All k-dimensional faces of I^N in lexicographic word order
/// (zero < one < star). There are C(N,k) * 2^(N-k) of them.
std::vector<FaceCode> enumerate_faces(int N, int k);

/// Classifies a codimension-1 subface g of f as incoming or outgoing.
///
/// Convention: let the stars of f sit at positions j_1 < ... < j_n and set
/// kappa = 0, 1, 0, 1, ... along that list. g is obtained from f by replacing
/// the star at some j_r with a digit; g is incoming iff that digit equals the
/// kappa value at rank r.
FaceRole classify_subface(const FaceCode& f, const FaceCode& g);

/// Number of n-faces containing g for which g is incoming.
/// Requires dim g = n - 1 and n <= ambient dimension.
int face_order(const FaceCode& g, int n);

/// The (n-1)-faces that are incoming for every n-face containing them; exactly
/// one per (n-1)-subset of axes, listed in lexicographic word order. This
/// order defines the slot indices used by propagation and by chain bases.
std::vector<FaceCode> absolutely_incoming_faces(int N, int n);

/// Same with the complementary digit convention (outgoing for every n-face).
std::vector<FaceCode> absolutely_outgoing_faces(int N, int n);

} // namespace nsimplex

#endif

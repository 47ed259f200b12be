#include "nsimplex/face.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsimplex {

char symbol_char(Symbol s) {
    switch (s) {
        case Symbol::zero: return '0';
        case Symbol::one: return '1';
        default: return '*';
    }
}

FaceCode::FaceCode(std::vector<Symbol> word) : word_(std::move(word)) {
    if (word_.empty())
        throw std::invalid_argument("face word must be non-empty");
}

FaceCode FaceCode::parse(std::string_view text) {
    std::vector<Symbol> w;
    w.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '0': w.push_back(Symbol::zero); break;
            case '1': w.push_back(Symbol::one); break;
            case '*': w.push_back(Symbol::star); break;
            default:
                throw std::invalid_argument(std::string("bad face symbol '") + c + "'");
        }
    }
    return FaceCode(std::move(w));
}

int FaceCode::dim() const {
    return static_cast<int>(std::count(word_.begin(), word_.end(), Symbol::star));
}

std::vector<int> FaceCode::star_positions() const {
    std::vector<int> out;
    for (int i = 0; i < ambient_dim(); ++i)
        if (word_[static_cast<std::size_t>(i)] == Symbol::star) out.push_back(i);
    return out;
}

bool FaceCode::contains(const FaceCode& g) const {
    if (g.ambient_dim() != ambient_dim()) return false;
    for (int i = 0; i < ambient_dim(); ++i) {
        Symbol mine = at(i), theirs = g.at(i);
        if (mine != Symbol::star && mine != theirs) return false;
    }
    return true;
}

std::string FaceCode::str() const {
    std::string s;
    s.reserve(word_.size());
    for (Symbol sym : word_) s.push_back(symbol_char(sym));
    return s;
}

std::strong_ordering FaceCode::operator<=>(const FaceCode& other) const {
    return std::lexicographical_compare_three_way(
        word_.begin(), word_.end(), other.word_.begin(), other.word_.end(),
        [](Symbol a, Symbol b) {
            return static_cast<std::uint8_t>(a) <=> static_cast<std::uint8_t>(b);
        });
}

namespace {

void enumerate_rec(int N, int stars_left, std::vector<Symbol>& prefix,
                   std::vector<FaceCode>& out) {
    int pos = static_cast<int>(prefix.size());
    int remaining = N - pos;
    if (stars_left > remaining) return;
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (Symbol s : {Symbol::zero, Symbol::one, Symbol::star}) {
        if (s == Symbol::star && stars_left == 0) continue;
        prefix.push_back(s);
        enumerate_rec(N, stars_left - (s == Symbol::star ? 1 : 0), prefix, out);
        prefix.pop_back();
    }
}

// kappa value for the star of f at 0-based word position pos: 0 for the first
// star, 1 for the second, alternating.
int kappa_at(const FaceCode& f, int pos) {
    int rank = 0;
    for (int i = 0; i < pos; ++i)
        if (f.at(i) == Symbol::star) ++rank;
    return rank % 2;
}

} // namespace

std::vector<FaceCode> enumerate_faces(int N, int k) {
    if (N < 1) throw std::invalid_argument("ambient dimension must be positive");
    if (k < 0 || k > N) throw std::invalid_argument("face dimension out of range");
    std::vector<FaceCode> out;
    std::vector<Symbol> prefix;
    prefix.reserve(static_cast<std::size_t>(N));
    enumerate_rec(N, k, prefix, out);
    return out;
}

FaceRole classify_subface(const FaceCode& f, const FaceCode& g) {
    if (f.ambient_dim() != g.ambient_dim())
        throw std::invalid_argument("subface has different ambient dimension");
    int replaced = -1;
    for (int i = 0; i < f.ambient_dim(); ++i) {
        if (f.at(i) == g.at(i)) continue;
        if (f.at(i) == Symbol::star && g.at(i) != Symbol::star && replaced < 0) {
            replaced = i;
            continue;
        }
        throw std::invalid_argument("not a codimension-1 subface");
    }
    if (replaced < 0) throw std::invalid_argument("not a codimension-1 subface");
    int digit = g.at(replaced) == Symbol::one ? 1 : 0;
    return digit == kappa_at(f, replaced) ? FaceRole::incoming : FaceRole::outgoing;
}

int face_order(const FaceCode& g, int n) {
    if (g.dim() != n - 1)
        throw std::invalid_argument("face_order requires a face of dimension n-1");
    if (n > g.ambient_dim())
        throw std::invalid_argument("no n-faces in this ambient dimension");
    int order = 0;
    std::vector<Symbol> w = g.word();
    for (int i = 0; i < g.ambient_dim(); ++i) {
        if (w[static_cast<std::size_t>(i)] == Symbol::star) continue;
        Symbol saved = w[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(i)] = Symbol::star;
        FaceCode f{w};
        if (classify_subface(f, g) == FaceRole::incoming) ++order;
        w[static_cast<std::size_t>(i)] = saved;
    }
    return order;
}

namespace {

// Direct construction: for the axis set S (|S| = n-1, the star positions),
// the digit at every non-star position p is forced by the incoming/outgoing
// condition on the n-face obtained by starring p.
std::vector<FaceCode> absolute_faces(int N, int n, bool incoming) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (n - 1 > N) throw std::invalid_argument("n-1 exceeds ambient dimension");
    std::vector<FaceCode> out;
    std::vector<int> subset(static_cast<std::size_t>(n - 1));
    // Lexicographically ordered (n-1)-subsets of {0..N-1}.
    auto emit = [&]() {
        std::vector<Symbol> w(static_cast<std::size_t>(N));
        std::vector<bool> is_star(static_cast<std::size_t>(N), false);
        for (int s : subset) is_star[static_cast<std::size_t>(s)] = true;
        for (int p = 0; p < N; ++p) {
            if (is_star[static_cast<std::size_t>(p)]) {
                w[static_cast<std::size_t>(p)] = Symbol::star;
                continue;
            }
            int rank = 0; // rank of p among subset + {p}
            for (int s : subset)
                if (s < p) ++rank;
            int kappa = rank % 2;
            int digit = incoming ? kappa : 1 - kappa;
            w[static_cast<std::size_t>(p)] = digit ? Symbol::one : Symbol::zero;
        }
        out.emplace_back(std::move(w));
    };
    // Standard subset enumeration in lexicographic order.
    for (int i = 0; i < n - 1; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        emit();
        int i = n - 2;
        if (i < 0) break; // n == 1 cannot happen; n-1 == 0 means single empty subset
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == N - (n - 1) + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n - 1; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    // Slot order contract: lexicographic in the face word itself.
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<FaceCode> absolutely_incoming_faces(int N, int n) {
    return absolute_faces(N, n, true);
}

std::vector<FaceCode> absolutely_outgoing_faces(int N, int n) {
    return absolute_faces(N, n, false);
}

} // namespace nsimplex

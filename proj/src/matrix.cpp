#include "nsimplex/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include <gmpxx.h>

#include "nsimplex/errors.hpp"

namespace nsimplex {

void SparseIntMatrix::normalize() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (const Entry& e : entries) {
        if (!merged.empty() && merged.back().col == e.col && merged.back().row == e.row)
            merged.back().value += e.value;
        else
            merged.push_back(e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Entry& e) { return e.value == 0; }),
                 merged.end());
    entries = std::move(merged);
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.entries.reserve(entries.size());
    for (const Entry& e : entries) t.entries.push_back({e.col, e.row, e.value});
    t.normalize();
    return t;
}

bool SparseIntMatrix::is_zero_mod(std::int64_t p) const {
    for (const Entry& e : entries)
        if (e.value % p != 0) return false;
    return true;
}

std::string SparseIntMatrix::serialize_coord() const {
    std::string out = std::to_string(rows) + " " + std::to_string(cols) + " " +
                      std::to_string(entries.size()) + "\n";
    for (const Entry& e : entries)
        out += std::to_string(e.row) + " " + std::to_string(e.col) + " " +
               std::to_string(e.value) + "\n";
    return out;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    SparseIntMatrix c;
    c.rows = a.rows;
    c.cols = b.cols;
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> a_by_col(
        static_cast<std::size_t>(a.cols));
    for (const auto& e : a.entries)
        a_by_col[static_cast<std::size_t>(e.col)].push_back({e.row, e.value});
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> b_by_col(
        static_cast<std::size_t>(b.cols));
    for (const auto& e : b.entries)
        b_by_col[static_cast<std::size_t>(e.col)].push_back({e.row, e.value});

    std::vector<std::int64_t> acc(static_cast<std::size_t>(a.rows), 0);
    std::vector<std::int64_t> mark(static_cast<std::size_t>(a.rows), -1);
    std::vector<std::int64_t> touched;
    for (std::int64_t col = 0; col < b.cols; ++col) {
        touched.clear();
        for (const auto& [k, bv] : b_by_col[static_cast<std::size_t>(col)]) {
            for (const auto& [r, av] : a_by_col[static_cast<std::size_t>(k)]) {
                if (mark[static_cast<std::size_t>(r)] != col) {
                    mark[static_cast<std::size_t>(r)] = col;
                    acc[static_cast<std::size_t>(r)] = 0;
                    touched.push_back(r);
                }
                acc[static_cast<std::size_t>(r)] += av * bv;
            }
        }
        for (std::int64_t r : touched)
            if (acc[static_cast<std::size_t>(r)] != 0)
                c.entries.push_back({r, col, acc[static_cast<std::size_t>(r)]});
    }
    c.normalize();
    return c;
}

namespace {

constexpr std::uint64_t kDenseCellCap = 8ull * 1000 * 1000;

std::vector<std::vector<mpz_class>> densify(const SparseIntMatrix& m) {
    std::uint64_t cells = static_cast<std::uint64_t>(m.rows) * static_cast<std::uint64_t>(m.cols);
    if (m.rows && cells > kDenseCellCap)
        throw ResourceError("matrix too large for dense elimination", cells, kDenseCellCap);
    std::vector<std::vector<mpz_class>> d(static_cast<std::size_t>(m.rows),
                                          std::vector<mpz_class>(static_cast<std::size_t>(m.cols)));
    for (const auto& e : m.entries)
        d[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
    return d;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("element not invertible mod p");
    return t < 0 ? t + p : t;
}

} // namespace

std::int64_t rank_fraction_free(const SparseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
    auto a = densify(m);
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    mpz_class prev_pivot = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        const mpz_class pivot = a[pivot_row][col];
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            // Bareiss update: exact division by the previous pivot.
            for (std::size_t c2 = col + 1; c2 < cols; ++c2) {
                mpz_class num = a[r][c2] * pivot - a[r][col] * a[pivot_row][c2];
                mpz_divexact(a[r][c2].get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev_pivot = pivot;
        ++pivot_row;
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

std::int64_t rank_rational(const SparseIntMatrix& m) {
    // Insert rows one at a time into a reduced echelon set of mpq rows.
    struct EchelonRow {
        std::size_t lead;
        std::vector<mpq_class> v; // normalized so v[lead] == 1
    };
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> by_row(
        static_cast<std::size_t>(m.rows));
    for (const auto& e : m.entries)
        by_row[static_cast<std::size_t>(e.row)].push_back({e.col, e.value});

    std::vector<EchelonRow> basis;
    const std::size_t width = static_cast<std::size_t>(m.cols);
    for (const auto& row : by_row) {
        if (row.empty()) continue;
        std::vector<mpq_class> v(width);
        for (const auto& [c, val] : row) v[static_cast<std::size_t>(c)] = val;
        for (const auto& er : basis) {
            if (v[er.lead] == 0) continue;
            mpq_class f = v[er.lead];
            for (std::size_t c = er.lead; c < width; ++c)
                if (er.v[c] != 0) v[c] -= f * er.v[c];
        }
        std::size_t lead = 0;
        while (lead < width && v[lead] == 0) ++lead;
        if (lead == width) continue;
        mpq_class inv = 1 / v[lead];
        for (std::size_t c = lead; c < width; ++c) v[c] *= inv;
        basis.push_back({lead, std::move(v)});
    }
    return static_cast<std::int64_t>(basis.size());
}

std::int64_t rank_mod_p(const SparseIntMatrix& m, std::int64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    struct EchelonRow {
        std::size_t lead;
        std::vector<std::int64_t> v;
    };
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> by_row(
        static_cast<std::size_t>(m.rows));
    for (const auto& e : m.entries)
        by_row[static_cast<std::size_t>(e.row)].push_back({e.col, e.value});
    std::vector<EchelonRow> basis;
    const std::size_t width = static_cast<std::size_t>(m.cols);
    for (const auto& row : by_row) {
        if (row.empty()) continue;
        std::vector<std::int64_t> v(width, 0);
        for (const auto& [c, val] : row) {
            std::int64_t r = val % p;
            v[static_cast<std::size_t>(c)] = r < 0 ? r + p : r;
        }
        for (const auto& er : basis) {
            std::int64_t f = v[er.lead];
            if (f == 0) continue;
            for (std::size_t c = er.lead; c < width; ++c)
                if (er.v[c]) v[c] = ((v[c] - f * er.v[c]) % p + p) % p;
        }
        std::size_t lead = 0;
        while (lead < width && v[lead] == 0) ++lead;
        if (lead == width) continue;
        std::int64_t inv = mod_inverse(v[lead], p);
        for (std::size_t c = lead; c < width; ++c) v[c] = v[c] * inv % p;
        basis.push_back({lead, std::move(v)});
    }
    return static_cast<std::int64_t>(basis.size());
}

std::vector<std::vector<std::int64_t>> kernel_basis_mod_p(const SparseIntMatrix& m,
                                                          std::int64_t p) {
    // Reduced row echelon form of m over F_p, then the standard kernel basis
    // from the free columns.
    const std::size_t rows = static_cast<std::size_t>(m.rows);
    const std::size_t cols = static_cast<std::size_t>(m.cols);
    std::uint64_t cells = static_cast<std::uint64_t>(m.rows) * static_cast<std::uint64_t>(m.cols);
    if (cells > kDenseCellCap)
        throw ResourceError("matrix too large for dense kernel computation", cells, kDenseCellCap);
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
    for (const auto& e : m.entries) {
        std::int64_t r = e.value % p;
        a[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = r < 0 ? r + p : r;
    }
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = pr;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pr]);
        std::int64_t inv = mod_inverse(a[pr][c], p);
        for (std::size_t c2 = c; c2 < cols; ++c2) a[pr][c2] = a[pr][c2] * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][c] == 0) continue;
            std::int64_t f = a[r][c];
            for (std::size_t c2 = c; c2 < cols; ++c2)
                a[r][c2] = ((a[r][c2] - f * a[pr][c2]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++pr;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::int64_t>> kernel;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<std::int64_t> v(cols, 0);
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            std::int64_t coeff = a[i][free_c];
            if (coeff) v[pivot_col[i]] = (p - coeff) % p;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool in_span_mod_p(const std::vector<std::vector<std::int64_t>>& span,
                   const std::vector<std::int64_t>& v, std::int64_t p) {
    if (span.empty()) {
        for (std::int64_t x : v)
            if (x % p != 0) return false;
        return true;
    }
    SparseIntMatrix m;
    m.rows = static_cast<std::int64_t>(span.size());
    m.cols = static_cast<std::int64_t>(v.size());
    for (std::size_t r = 0; r < span.size(); ++r)
        for (std::size_t c = 0; c < span[r].size(); ++c)
            if (span[r][c] % p != 0)
                m.entries.push_back({static_cast<std::int64_t>(r),
                                     static_cast<std::int64_t>(c), span[r][c]});
    std::int64_t base = rank_mod_p(m, p);
    m.rows += 1;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] % p != 0)
            m.entries.push_back({m.rows - 1, static_cast<std::int64_t>(c), v[c]});
    return rank_mod_p(m, p) == base;
}

} // namespace nsimplex

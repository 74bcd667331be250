#include "cyclequiv/matrix.hpp"

#include <algorithm>

namespace cyclequiv {

RowList rref_dense(const Field& f, RowList rows) {
    if (rows.empty()) return rows;
    const int n = static_cast<int>(rows[0].size());
    const int m = static_cast<int>(rows.size());
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int pivot = -1;
        for (int i = r; i < m; ++i) {
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        Elem inv = f.inv(rows[r][col]);
        if (inv != f.one()) {
            for (int j = col; j < n; ++j) rows[r][j] = f.mul(rows[r][j], inv);
        }
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            Elem c = rows[i][col];
            if (c == 0) continue;
            for (int j = col; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

BitRows pack_gf2(const RowList& rows, int cols) {
    BitRows out;
    out.cols = cols;
    const int words = (cols + 63) / 64;
    out.rows.reserve(rows.size());
    for (const Row& r : rows) {
        std::vector<std::uint64_t> w(words, 0);
        for (int j = 0; j < cols; ++j) {
            if (r[j]) w[j >> 6] |= (std::uint64_t{1} << (j & 63));
        }
        out.rows.push_back(std::move(w));
    }
    return out;
}

RowList unpack_gf2(const BitRows& m) {
    RowList out;
    out.reserve(m.rows.size());
    for (const auto& w : m.rows) {
        Row r(m.cols, 0);
        for (int j = 0; j < m.cols; ++j) {
            r[j] = static_cast<Elem>((w[j >> 6] >> (j & 63)) & 1);
        }
        out.push_back(std::move(r));
    }
    return out;
}

void rref_gf2_inplace(BitRows& m) {
    const int rows = static_cast<int>(m.rows.size());
    int r = 0;
    for (int col = 0; col < m.cols && r < rows; ++col) {
        const int word = col >> 6;
        const std::uint64_t mask = std::uint64_t{1} << (col & 63);
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m.rows[i][word] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m.rows[r], m.rows[pivot]);
        const auto& prow = m.rows[r];
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            if (m.rows[i][word] & mask) {
                auto& row = m.rows[i];
                for (size_t w = word; w < row.size(); ++w) row[w] ^= prow[w];
            }
        }
        ++r;
    }
    m.rows.resize(r);
}

RowList rref_canonical(const Field& f, int cols, RowList rows) {
    for (const Row& r : rows) {
        if (static_cast<int>(r.size()) != cols)
            throw Error(ErrorCode::LengthMismatch, "row length differs from column count");
    }
    if (f.q() == 2) {
        BitRows packed = pack_gf2(rows, cols);
        rref_gf2_inplace(packed);
        return unpack_gf2(packed);
    }
    return rref_dense(f, std::move(rows));
}

bool reduce_against_rref(const Field& f, const RowList& rref, Row& v) {
    for (const Row& row : rref) {
        int pivot = 0;
        while (pivot < static_cast<int>(row.size()) && row[pivot] == 0) ++pivot;
        if (pivot >= static_cast<int>(row.size())) continue;
        Elem c = v[pivot];
        if (c == 0) continue;
        for (size_t j = pivot; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
    return std::all_of(v.begin(), v.end(), [](Elem c) { return c == 0; });
}

RowList mat_mul(const Field& f, const RowList& a, const RowList& b) {
    if (a.empty() || b.empty()) return {};
    const int m = static_cast<int>(a.size());
    const int inner = static_cast<int>(b.size());
    const int n = static_cast<int>(b[0].size());
    RowList out(m, Row(n, 0));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != inner)
            throw Error(ErrorCode::LengthMismatch, "matrix dimension mismatch in product");
        for (int k = 0; k < inner; ++k) {
            Elem aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                out[i][j] = f.add(out[i][j], f.mul(aik, b[k][j]));
            }
        }
    }
    return out;
}

RowList mat_transpose(const RowList& rows, int cols) {
    RowList out(cols, Row(rows.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < cols; ++j) out[j][i] = rows[i][j];
    }
    return out;
}

RowList kernel_basis(const Field& f, const RowList& rows, int cols) {
    RowList r = rref_dense(f, rows);
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(cols, 0);
    for (const Row& row : r) {
        int p = 0;
        while (p < cols && row[p] == 0) ++p;
        pivot_col.push_back(p);
        if (p < cols) is_pivot[p] = 1;
    }
    RowList basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, 0);
        v[free] = f.one();
        for (size_t i = 0; i < r.size(); ++i) {
            if (pivot_col[i] < cols) v[pivot_col[i]] = f.neg(r[i][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Row> solve_linear(const Field& f, const RowList& a, int cols, const Row& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::LengthMismatch, "right-hand side length differs from row count");
    RowList aug(a.size(), Row(cols + 1, 0));
    for (size_t i = 0; i < a.size(); ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    RowList r = rref_dense(f, std::move(aug));
    Row x(cols, 0);
    for (const Row& row : r) {
        int p = 0;
        while (p <= cols && row[p] == 0) ++p;
        if (p == cols) return std::nullopt; // 0 = nonzero
        if (p > cols) continue;
        x[p] = row[cols];
    }
    return x;
}

} // namespace cyclequiv

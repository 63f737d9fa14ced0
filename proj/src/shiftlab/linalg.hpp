#ifndef SHIFTLAB_LINALG_HPP
#define SHIFTLAB_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "common.hpp"

namespace shiftlab {

// Dense matrix over the field K, row-major.
template <class K>
using Matrix = std::vector<std::vector<K>>;

// In-place forward elimination choosing pivots left to right. Returns the
// pivot column indices in increasing order. Column order is significant:
// callers arrange columns by decreasing monomial so that pivot columns are
// exactly the leading monomials of the row space.
template <class K>
std::vector<int> row_reduce(Matrix<K>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        K inv = m[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            K f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return static_cast<int>(row_reduce(m).size());
}

template <class K>
bool invertible(const Matrix<K>& m) {
    if (m.empty()) return true;
    Matrix<K> copy = m;
    return row_reduce(copy).size() == m.size();
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    std::size_t n = m.size();
    Matrix<K> work(n, std::vector<K>(2 * n, K::zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = m[i][j];
        work[i][n + i] = K::one();
    }
    auto pivots = row_reduce(work);
    if (pivots.size() != n || (n > 0 && pivots.back() != static_cast<int>(n) - 1))
        throw ContractError("matrix is singular");
    Matrix<K> out(n, std::vector<K>(n, K::zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = work[i][n + j];
    return out;
}

// Exact rank of an integer matrix via Bareiss fraction-free elimination.
// Used for homology over Q independently of the session prime.
inline int integer_rank(std::vector<std::vector<long long>> m) {
    using big = boost::multiprecision::cpp_int;
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<big>> a(rows, std::vector<big>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    big prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[row], a[sel]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

} // namespace shiftlab

#endif

#include "esla/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace esla::linalg {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyc::one();
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("Mat: shape mismatch");
    Mat r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Cyc& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols; ++j) {
                const Cyc& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

Vec Mat::operator*(const Vec& v) const {
    if (cols != v.size()) throw std::invalid_argument("Mat*Vec: shape mismatch");
    Vec r(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Cyc& x = at(i, j);
            if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
        }
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Cyc& x) { return x.is_zero(); });
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && m.at(p, col).is_zero()) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Cyc inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Cyc f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Mat& A) {
    Mat m = A;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(A.cols);
        v[free] = Cyc::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    Mat aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;  // inconsistent
    Vec x(A.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols);
    return x;
}

std::optional<Mat> inverse(const Mat& A) {
    if (A.rows != A.cols) return std::nullopt;
    Mat aug(A.rows, 2 * A.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols + i) = Cyc::one();
    }
    auto pivots = rref(aug);
    if (pivots.size() != A.rows || pivots.back() != A.rows - 1) return std::nullopt;
    Mat inv(A.rows, A.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) inv.at(i, j) = aug.at(i, A.cols + j);
    return inv;
}

Mat kron(const Mat& A, const Mat& B) {
    Mat out(A.rows * B.rows, A.cols * B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < B.rows; ++k)
                for (std::size_t l = 0; l < B.cols; ++l)
                    out.at(i * B.rows + k, j * B.cols + l) = A.at(i, j) * B.at(k, l);
        }
    return out;
}

Mat from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat(0, 0);
    Mat P(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != P.rows) throw std::invalid_argument("from_columns: ragged input");
        for (std::size_t i = 0; i < P.rows; ++i) P.at(i, j) = cols[j][i];
    }
    return P;
}

std::vector<Mat> conjugate_operators(const std::vector<Mat>& ops, const std::vector<Vec>& cols) {
    Mat P = from_columns(cols);
    auto Pinv = inverse(P);
    if (!Pinv) throw std::invalid_argument("conjugate_operators: basis is singular");
    std::vector<Mat> out;
    out.reserve(ops.size());
    for (const auto& op : ops) out.push_back(*Pinv * op * P);
    return out;
}

void SpanBasis::reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Cyc& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Cyc f = c;  // row pivot is 1
        for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
}

bool SpanBasis::add(Vec v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanBasis: wrong dimension");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    Cyc inv = v[p].inv();
    for (auto& x : v) x *= inv;
    // back-reduce existing rows to keep the reduce() loop one-pass
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Cyc f = rows_[r][p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
    return true;
}

bool SpanBasis::contains(Vec v) const {
    reduce(v);
    return is_zero_vec(v);
}

} // namespace esla::linalg

namespace esla::cyclo {

std::vector<Cyc> operator+(const std::vector<Cyc>& x, const std::vector<Cyc>& y) {
    std::vector<Cyc> r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

std::vector<Cyc> operator-(const std::vector<Cyc>& x, const std::vector<Cyc>& y) {
    std::vector<Cyc> r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

std::vector<Cyc> operator*(const Cyc& s, const std::vector<Cyc>& v) {
    std::vector<Cyc> r = v;
    for (auto& x : r) x = s * x;
    return r;
}

} // namespace esla::cyclo

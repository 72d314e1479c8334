#ifndef ESLA_LINALG_HPP
#define ESLA_LINALG_HPP

#include <optional>
#include <vector>

#include "esla/cyclo.hpp"

namespace esla::linalg {

using cyclo::Cyc;
using Vec = std::vector<Cyc>;

/// Dense matrix over Q(zeta_24), row major.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Cyc> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static Mat identity(std::size_t n);

    Cyc& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Cyc& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    bool operator==(const Mat& o) const = default;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat transpose() const;
};

bool is_zero_vec(const Vec& v);

} // namespace esla::linalg

/// Componentwise vector arithmetic. Declared in the namespace of Cyc so that
/// argument-dependent lookup finds the operators from any namespace.
namespace esla::cyclo {
std::vector<Cyc> operator+(const std::vector<Cyc>& x, const std::vector<Cyc>& y);
std::vector<Cyc> operator-(const std::vector<Cyc>& x, const std::vector<Cyc>& y);
std::vector<Cyc> operator*(const Cyc& s, const std::vector<Cyc>& v);
} // namespace esla::cyclo

namespace esla::linalg {

/// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

/// Basis of { x : A x = 0 }.
std::vector<Vec> nullspace(const Mat& A);

/// One solution of A x = b, if consistent.
std::optional<Vec> solve(const Mat& A, const Vec& b);

/// Inverse, if square and nonsingular.
std::optional<Mat> inverse(const Mat& A);

/// Kronecker product: (A (x) B)(x (x) y) = Ax (x) By, index i*B.rows + j.
Mat kron(const Mat& A, const Mat& B);

/// Square matrix whose columns are the given vectors.
Mat from_columns(const std::vector<Vec>& cols);

/// Rewrites operator matrices in the basis given by `cols`: P^-1 op P.
std::vector<Mat> conjugate_operators(const std::vector<Mat>& ops, const std::vector<Vec>& cols);

/// Incremental echelonized span; used for bracket closures and simplicity
/// certificates. Vectors are stored normalized (pivot 1, echelon order).
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    /// Returns true when v enlarges the span.
    bool add(Vec v);
    bool contains(Vec v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& basis() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<Vec> rows_;                // echelonized, sorted by pivot
    std::vector<std::size_t> pivots_;
    void reduce(Vec& v) const;
};

} // namespace esla::linalg

#endif

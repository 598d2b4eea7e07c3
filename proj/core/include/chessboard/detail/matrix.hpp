#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace chessboard {

// Dense square matrix over an arbitrary commutative-or-not ring T.
// T needs: default construction (= additive zero), construction from int,
// +=, -=, *, unary -, ==.  Indexing is 0-based; the cubic-matrix layer keeps
// its own 1-based interface.
template <class T>
class Matrix {
  public:
    explicit Matrix(int n)
        : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n <= 0) throw std::invalid_argument("Matrix: dimension must be positive");
    }

    static Matrix zero(int n) { return Matrix(n); }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int r = 0; r < n; ++r) m(r, r) = T(1);
        return m;
    }

    int n() const { return n_; }

    T& operator()(int r, int c) { return e_[idx(r, c)]; }
    const T& operator()(int r, int c) const { return e_[idx(r, c)]; }

    Matrix& operator+=(const Matrix& o) {
        check_dim(o);
        for (std::size_t t = 0; t < e_.size(); ++t) e_[t] += o.e_[t];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_dim(o);
        for (std::size_t t = 0; t < e_.size(); ++t) e_[t] -= o.e_[t];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    Matrix operator-() const {
        Matrix r(n_);
        for (std::size_t t = 0; t < e_.size(); ++t) r.e_[t] = -e_[t];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_dim(b);
        Matrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (int j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.e_) x = s * x;
        return m;
    }
    friend Matrix operator*(Matrix m, const T& s) {
        for (auto& x : m.e_) x = x * s;
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    T trace() const {
        T t{};
        for (int r = 0; r < n_; ++r) t += (*this)(r, r);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!(x == T())) return false;
        return true;
    }

    /// Applies f to every entry; the result entry type follows f.
    template <class F>
    auto map(F&& f) const {
        Matrix<std::decay_t<std::invoke_result_t<F&, const T&>>> r(n_);
        for (int row = 0; row < n_; ++row)
            for (int col = 0; col < n_; ++col) r(row, col) = f((*this)(row, col));
        return r;
    }

  private:
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= n_ || c < 0 || c >= n_)
            throw std::out_of_range("Matrix: index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(c);
    }
    void check_dim(const Matrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    int n_;
    std::vector<T> e_;
};

}  // namespace chessboard

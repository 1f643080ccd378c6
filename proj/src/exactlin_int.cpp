#include <boost/multiprecision/cpp_int.hpp>

#include "cwres/exactlin.hpp"

namespace cwres {

using Rational = boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw SizeMismatch("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

FpMatrix IntMatrix::mod(Scalar p) const {
    FpMatrix out(rows_, cols_, p);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            Int v = at(r, c) % p;
            if (v < 0) v += p;
            if (v != 0) out.set(r, c, static_cast<Scalar>(v));
        }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw SizeMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                           " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    IntMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Int& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Int& w = b.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int pr = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pr, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

// Gauss-Jordan over Q; returns pivot count, optionally accumulating the
// inverse when inv != nullptr (requires square full-rank input).
int rational_eliminate(std::vector<std::vector<Rational>>& a, std::vector<std::vector<Rational>>* inv) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    int prow = 0;
    for (int c = 0; c < cols && prow < rows; ++c) {
        int pr = -1;
        for (int r = prow; r < rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(prow)]);
        if (inv) std::swap((*inv)[static_cast<std::size_t>(pr)], (*inv)[static_cast<std::size_t>(prow)]);
        Rational piv = a[static_cast<std::size_t>(prow)][static_cast<std::size_t>(c)];
        for (auto& v : a[static_cast<std::size_t>(prow)]) v /= piv;
        if (inv)
            for (auto& v : (*inv)[static_cast<std::size_t>(prow)]) v /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                    factor * a[static_cast<std::size_t>(prow)][static_cast<std::size_t>(j)];
            if (inv)
                for (int j = 0; j < static_cast<int>((*inv)[0].size()); ++j)
                    (*inv)[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                        factor * (*inv)[static_cast<std::size_t>(prow)][static_cast<std::size_t>(j)];
        }
        ++prow;
    }
    return prow;
}

}  // namespace

int rank_over_q(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.rows()),
                                         std::vector<Rational>(static_cast<std::size_t>(m.cols()), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    return rational_eliminate(a, nullptr);
}

IntMatrix int_inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("inverse of non-square matrix");
    Int d = det(m);
    if (d != 1 && d != -1)
        throw NotUnimodular("determinant " + d.str() + " is not +-1");
    int n = m.rows();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
    for (int r = 0; r < n; ++r) {
        inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    }
    rational_eliminate(a, &inv);
    IntMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Rational& v = inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (denominator(v) != 1)
                throw Error("internal: unimodular inverse produced non-integer entry");
            out.at(r, c) = numerator(v);
        }
    return out;
}

}  // namespace cwres

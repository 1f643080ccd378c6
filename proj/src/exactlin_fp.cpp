#include <algorithm>

#include "cwres/exactlin.hpp"

namespace cwres {

bool is_prime(Scalar p) {
    if (p < 2) return false;
    for (Scalar d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Fp::Fp(Scalar p) : p_(p) {
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
}

Scalar Fp::inv(Scalar a) const {
    a = normalize(a);
    if (a == 0) throw SingularMatrix("inverse of 0 in GF(" + std::to_string(p_) + ")");
    // extended Euclid
    Scalar old_r = p_, r = a, old_t = 0, t = 1;
    while (r != 0) {
        Scalar q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    return normalize(old_t);
}

FpMatrix::FpMatrix(int rows, int cols, Scalar p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw SizeMismatch("negative matrix dimension");
    Fp check(p);
    (void)check;
}

FpMatrix FpMatrix::identity(int n, Scalar p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw SizeMismatch("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                           ") out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

Scalar FpMatrix::get(int r, int c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? 0 : it->second;
}

void FpMatrix::set(int r, int c, Scalar v) {
    check_index(r, c);
    Fp f(p_);
    v = f.normalize(v);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(cols_, rows_, p_);
    for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, v);
    return out;
}

FpMatrix FpMatrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    FpMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()), p_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            Scalar v = get(row_idx[i], col_idx[j]);
            if (v != 0) out.set(static_cast<int>(i), static_cast<int>(j), v);
        }
    return out;
}

FpVector FpMatrix::apply(const FpVector& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw SizeMismatch("apply: vector length " + std::to_string(v.size()) + " vs cols " +
                           std::to_string(cols_));
    Fp f(p_);
    FpVector out(static_cast<std::size_t>(rows_), 0);
    for (const auto& [rc, val] : entries_)
        out[static_cast<std::size_t>(rc.first)] =
            f.add(out[static_cast<std::size_t>(rc.first)], f.mul(val, f.normalize(v[static_cast<std::size_t>(rc.second)])));
    return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_)
        throw SizeMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                           " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    if (a.p_ != b.p_) throw SizeMismatch("moduli differ in matrix product");
    Fp f(a.p_);
    // row index for b
    std::vector<std::vector<std::pair<int, Scalar>>> brows(static_cast<std::size_t>(b.rows_));
    for (const auto& [rc, v] : b.entries_) brows[static_cast<std::size_t>(rc.first)].push_back({rc.second, v});
    FpMatrix out(a.rows_, b.cols_, a.p_);
    std::map<std::pair<int, int>, Scalar> acc;
    for (const auto& [rc, v] : a.entries_)
        for (const auto& [j, w] : brows[static_cast<std::size_t>(rc.second)]) {
            Scalar& slot = acc[{rc.first, j}];
            slot = f.add(slot, f.mul(v, w));
        }
    for (const auto& [rc, v] : acc)
        if (v != 0) out.set(rc.first, rc.second, v);
    return out;
}

FpMatrix from_rows(const std::vector<FpVector>& rows, Scalar p) {
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    FpMatrix out(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw SizeMismatch("ragged rows in from_rows");
        for (int j = 0; j < c; ++j) out.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return out;
}

FpMatrix from_columns(const std::vector<FpVector>& cols, Scalar p) {
    int c = static_cast<int>(cols.size());
    int r = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    FpMatrix out(r, c, p);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[static_cast<std::size_t>(j)].size()) != r)
            throw SizeMismatch("ragged columns in from_columns");
        for (int i = 0; i < r; ++i) out.set(i, j, cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    }
    return out;
}

FpMatrix from_dense(int rows, int cols, Scalar p, const std::vector<Scalar>& rowmajor) {
    if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != rowmajor.size())
        throw SizeMismatch("from_dense: size mismatch");
    FpMatrix out(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            out.set(i, j, rowmajor[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]);
    return out;
}

namespace {

constexpr int kDenseLimit = 64;

// Dense RREF in place; returns pivot columns.
std::vector<int> rref_dense(std::vector<Scalar>& a, int rows, int cols, const Fp& f) {
    std::vector<int> pivots;
    int prow = 0;
    auto at = [&](int r, int c) -> Scalar& { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; };
    for (int c = 0; c < cols && prow < rows; ++c) {
        int pr = -1;
        for (int r = prow; r < rows; ++r)
            if (at(r, c) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != prow)
            for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(prow, j));
        Scalar piv = f.inv(at(prow, c));
        for (int j = 0; j < cols; ++j) at(prow, j) = f.mul(at(prow, j), piv);
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            Scalar v = at(r, c);
            if (v == 0) continue;
            for (int j = 0; j < cols; ++j) at(r, j) = f.sub(at(r, j), f.mul(v, at(prow, j)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

// Sparse RREF on row maps; same canonical result as the dense path.
std::vector<int> rref_sparse(std::vector<std::map<int, Scalar>>& rows_data, int cols, const Fp& f) {
    std::vector<int> pivots;
    std::size_t prow = 0;
    for (int c = 0; c < cols && prow < rows_data.size(); ++c) {
        std::size_t pr = rows_data.size();
        for (std::size_t r = prow; r < rows_data.size(); ++r) {
            auto it = rows_data[r].find(c);
            if (it != rows_data[r].end()) {
                pr = r;
                break;
            }
        }
        if (pr == rows_data.size()) continue;
        std::swap(rows_data[pr], rows_data[prow]);
        Scalar piv = f.inv(rows_data[prow][c]);
        if (piv != 1)
            for (auto& [j, v] : rows_data[prow]) v = f.mul(v, piv);
        for (std::size_t r = 0; r < rows_data.size(); ++r) {
            if (r == prow) continue;
            auto it = rows_data[r].find(c);
            if (it == rows_data[r].end()) continue;
            Scalar factor = it->second;
            for (const auto& [j, v] : rows_data[prow]) {
                Scalar nv = f.sub(rows_data[r].count(j) ? rows_data[r][j] : 0, f.mul(factor, v));
                if (nv == 0)
                    rows_data[r].erase(j);
                else
                    rows_data[r][j] = nv;
            }
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
    Fp f(m.p());
    RrefResult out;
    if (m.rows() <= kDenseLimit && m.cols() <= kDenseLimit) {
        std::vector<Scalar> a(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()), 0);
        for (const auto& [rc, v] : m.entries())
            a[static_cast<std::size_t>(rc.first) * static_cast<std::size_t>(m.cols()) + static_cast<std::size_t>(rc.second)] = v;
        out.pivots = rref_dense(a, m.rows(), m.cols(), f);
        out.reduced = from_dense(m.rows(), m.cols(), m.p(), a);
    } else {
        std::vector<std::map<int, Scalar>> rows_data(static_cast<std::size_t>(m.rows()));
        for (const auto& [rc, v] : m.entries()) rows_data[static_cast<std::size_t>(rc.first)][rc.second] = v;
        out.pivots = rref_sparse(rows_data, m.cols(), f);
        out.reduced = FpMatrix(m.rows(), m.cols(), m.p());
        for (std::size_t r = 0; r < rows_data.size(); ++r)
            for (const auto& [j, v] : rows_data[r]) out.reduced.set(static_cast<int>(r), j, v);
    }
    out.rank = static_cast<int>(out.pivots.size());
    return out;
}

int rank(const FpMatrix& m) { return rref(m).rank; }

Scalar det(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("determinant of non-square matrix");
    Fp f(m.p());
    int n = m.rows();
    std::vector<Scalar> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& [rc, v] : m.entries()) a[static_cast<std::size_t>(rc.first) * static_cast<std::size_t>(n) + static_cast<std::size_t>(rc.second)] = v;
    auto at = [&](int r, int c) -> Scalar& { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]; };
    Scalar result = 1;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = c; r < n; ++r)
            if (at(r, c) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) return 0;
        if (pr != c) {
            for (int j = 0; j < n; ++j) std::swap(at(pr, j), at(c, j));
            result = f.neg(result);
        }
        result = f.mul(result, at(c, c));
        Scalar piv = f.inv(at(c, c));
        for (int r = c + 1; r < n; ++r) {
            Scalar v = f.mul(at(r, c), piv);
            if (v == 0) continue;
            for (int j = c; j < n; ++j) at(r, j) = f.sub(at(r, j), f.mul(v, at(c, j)));
        }
    }
    return result;
}

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
    RrefResult r = rref(m);
    Fp f(m.p());
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<FpVector> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        FpVector v(static_cast<std::size_t>(m.cols()), 0);
        v[static_cast<std::size_t>(fc)] = 1;
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr) {
            Scalar coeff = r.reduced.get(static_cast<int>(pr), fc);
            if (coeff != 0) v[static_cast<std::size_t>(r.pivots[pr])] = f.neg(coeff);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMatrix inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("inverse of non-square matrix");
    int n = m.rows();
    FpMatrix aug(n, 2 * n, m.p());
    for (const auto& [rc, v] : m.entries()) aug.set(rc.first, rc.second, v);
    for (int i = 0; i < n; ++i) aug.set(i, n + i, 1);
    RrefResult r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] >= n))
        throw SingularMatrix("matrix is singular over GF(" + std::to_string(m.p()) + ")");
    FpMatrix out(n, n, m.p());
    for (const auto& [rc, v] : r.reduced.entries())
        if (rc.second >= n) out.set(rc.first, rc.second - n, v);
    return out;
}

std::optional<FpVector> solve(const FpMatrix& m, const FpVector& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw SizeMismatch("solve: rhs length mismatch");
    FpMatrix aug(m.rows(), m.cols() + 1, m.p());
    for (const auto& [rc, v] : m.entries()) aug.set(rc.first, rc.second, v);
    for (int i = 0; i < m.rows(); ++i) aug.set(i, m.cols(), rhs[static_cast<std::size_t>(i)]);
    RrefResult r = rref(aug);
    for (int c : r.pivots)
        if (c == m.cols()) return std::nullopt;
    FpVector x(static_cast<std::size_t>(m.cols()), 0);
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
        x[static_cast<std::size_t>(r.pivots[pr])] = r.reduced.get(static_cast<int>(pr), m.cols());
    return x;
}

bool in_column_space(const FpMatrix& m, const FpVector& rhs) {
    return solve(m, rhs).has_value();
}

std::vector<Transvection> factor_sl_transvections(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw SizeMismatch("transvection factorization of non-square matrix");
    Scalar d = det(m);
    if (d == 0) throw SingularMatrix("transvection factorization: determinant 0");
    if (d != 1)
        throw NotSL("transvection factorization: determinant " + std::to_string(d) + " != 1 mod " +
                    std::to_string(m.p()));
    Fp f(m.p());
    int n = m.rows();
    std::vector<Scalar> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& [rc, v] : m.entries()) a[static_cast<std::size_t>(rc.first) * static_cast<std::size_t>(n) + static_cast<std::size_t>(rc.second)] = v;
    auto at = [&](int r, int c) -> Scalar& { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]; };

    std::vector<Transvection> applied;  // left-multiplications reducing m to I
    auto apply = [&](int i, int j, Scalar coeff) {
        coeff = f.normalize(coeff);
        if (coeff == 0) return;
        for (int col = 0; col < n; ++col) at(i, col) = f.add(at(i, col), f.mul(coeff, at(j, col)));
        applied.push_back({i, j, coeff});
    };

    for (int c = 0; c + 1 < n; ++c) {
        if (at(c, c) != 1) {
            int r = -1;
            for (int k = c + 1; k < n; ++k)
                if (at(k, c) != 0) {
                    r = k;
                    break;
                }
            if (r < 0) {
                // nonzero diagonal guaranteed: det != 0
                r = c + 1;
                apply(r, c, 1);
            }
            apply(c, r, f.mul(f.sub(1, at(c, c)), f.inv(at(r, c))));
        }
        for (int r = c + 1; r < n; ++r)
            if (at(r, c) != 0) apply(r, c, f.neg(at(r, c)));
    }
    // transvections preserve the determinant, so the last pivot is det(m) = 1
    if (n > 0 && at(n - 1, n - 1) != 1)
        throw Error("internal: transvection reduction left pivot != 1");
    for (int c = n - 1; c >= 1; --c)
        for (int r = 0; r < c; ++r)
            if (at(r, c) != 0) apply(r, c, f.neg(at(r, c)));

    // applied_k ... applied_1 m = I, so m = inv(applied_1) ... inv(applied_k)
    std::vector<Transvection> factors;
    factors.reserve(applied.size());
    for (auto it = applied.rbegin(); it != applied.rend(); ++it)
        factors.push_back({it->i, it->j, f.neg(it->a)});
    return factors;
}

IntMatrix lift_sl(const FpMatrix& m) {
    std::vector<Transvection> factors = factor_sl_transvections(m);
    int n = m.rows();
    IntMatrix out = IntMatrix::identity(n);
    // right-multiply by E_{ij}(a): column j += a * column i
    for (const Transvection& t : factors)
        for (int r = 0; r < n; ++r) out.at(r, t.j) += Int(t.a) * out.at(r, t.i);
    return out;
}

}  // namespace cwres

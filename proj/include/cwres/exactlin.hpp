#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwres/errors.hpp"

namespace cwres {

using Scalar = std::int64_t;
using Int = boost::multiprecision::cpp_int;

bool is_prime(Scalar p);

/// Arithmetic context for GF(p). All values are canonical residues in [0, p).
class Fp {
public:
    explicit Fp(Scalar p);
    Scalar p() const { return p_; }
    Scalar normalize(Scalar v) const {
        Scalar r = v % p_;
        return r < 0 ? r + p_ : r;
    }
    Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
    Scalar sub(Scalar a, Scalar b) const { return normalize(a - b); }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar inv(Scalar a) const;  // throws SingularMatrix on 0

private:
    Scalar p_;
};

using FpVector = std::vector<Scalar>;

/// Sparse matrix over GF(p): (row, col) -> nonzero canonical residue.
/// Elimination routines fall back to a dense working copy below 64x64.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int rows, int cols, Scalar p);
    static FpMatrix identity(int n, Scalar p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar p() const { return p_; }

    Scalar get(int r, int c) const;
    void set(int r, int c, Scalar v);
    const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    FpMatrix transpose() const;
    FpMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    FpVector apply(const FpVector& v) const;  // this * v

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    bool operator==(const FpMatrix&) const = default;

private:
    void check_index(int r, int c) const;
    int rows_ = 0, cols_ = 0;
    Scalar p_ = 2;
    std::map<std::pair<int, int>, Scalar> entries_;
};

FpMatrix from_rows(const std::vector<FpVector>& rows, Scalar p);
FpMatrix from_columns(const std::vector<FpVector>& cols, Scalar p);
FpMatrix from_dense(int rows, int cols, Scalar p, const std::vector<Scalar>& rowmajor);

struct RrefResult {
    int rank = 0;
    std::vector<int> pivots;
    FpMatrix reduced;
};

/// Reduced row echelon form over GF(p).
RrefResult rref(const FpMatrix& m);
int rank(const FpMatrix& m);
Scalar det(const FpMatrix& m);

/// Basis of the right kernel; size = cols - rank. Deterministic: one vector
/// per free column, in ascending column order.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

/// Throws SingularMatrix when rank < size.
FpMatrix inverse(const FpMatrix& m);

/// One solution of m x = rhs, or nullopt when inconsistent.
std::optional<FpVector> solve(const FpMatrix& m, const FpVector& rhs);
bool in_column_space(const FpMatrix& m, const FpVector& rhs);

/// Elementary matrix E_{ij}(a) = I + a e_{ij}: left multiplication adds
/// a times row j to row i.
struct Transvection {
    int i;
    int j;
    Scalar a;
    bool operator==(const Transvection&) const = default;
};

/// Ordered factorization m = E_{i1 j1}(a1) * ... * E_{ik jk}(ak) over GF(p).
/// Throws SingularMatrix when det = 0, NotSL when det != 1.
std::vector<Transvection> factor_sl_transvections(const FpMatrix& m);

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
    const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
    bool is_zero() const;

    FpMatrix mod(Scalar p) const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

Int det(const IntMatrix& m);       // fraction-free (Bareiss)
int rank_over_q(const IntMatrix& m);

/// Exact inverse of a determinant +-1 matrix. Throws NotUnimodular.
IntMatrix int_inverse_unimodular(const IntMatrix& m);

/// Integer matrix with det exactly 1 reducing to m mod p. Requires
/// det(m) = 1 over GF(p); factors into transvections and lifts each
/// entry to its canonical representative in {0,...,p-1}.
IntMatrix lift_sl(const FpMatrix& m);

}  // namespace cwres

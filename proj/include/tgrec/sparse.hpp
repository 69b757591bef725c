#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgrec {

/// Compressed sparse row matrix.
/// Invariant: within each row column indices are strictly increasing,
/// so the stored pattern is canonical and summation order is reproducible.
struct SparseMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::size_t> row_offsets;  // size n_rows + 1
    std::vector<std::size_t> col_indices;
    std::vector<double> values;

    std::size_t nnz() const { return values.size(); }

    /// Index into values of entry (i,j); throws if (i,j) is not stored.
    std::size_t entry_index(std::size_t i, std::size_t j) const;

    double at(std::size_t i, std::size_t j) const;  // 0.0 when not stored

    /// Copy with every stored value multiplied by s (pattern unchanged).
    SparseMatrix scaled(double s) const;

    /// values[ (i,i) ] += scale * d[i] for all rows. Every diagonal entry
    /// must be stored; FEM matrices assembled here always store it.
    void add_diagonal(const std::vector<double>& d, double scale = 1.0);

    void check_canonical() const;  // throws std::logic_error on violation
};

/// Accumulates (i, j, value) triplets in insertion order; compress() sorts
/// them canonically and sums duplicates, independent of insertion order.
class TripletAccumulator {
  public:
    TripletAccumulator(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    void add(std::size_t i, std::size_t j, double v);
    SparseMatrix compress() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

  private:
    struct Triplet {
        std::size_t i, j;
        double v;
    };
    std::size_t rows_, cols_;
    std::vector<Triplet> entries_;
};

enum class Preconditioner { none, jacobi };

struct SolveOptions {
    double tolerance = 1e-10;      // relative to ||b||
    std::size_t max_iterations = 0;  // 0 means 10 * n_rows
    Preconditioner preconditioner = Preconditioner::jacobi;
};

struct CgResult {
    std::vector<double> x;
    std::size_t iterations = 0;
    double residual = 0.0;  // final ||b - Ax|| / ||b||, 0 when b == 0
};

/// Conjugate gradient failed to reach tolerance; carries the best iterate.
class CgFailure : public std::runtime_error {
  public:
    CgFailure(std::string what, std::vector<double> best, double residual, std::size_t iterations)
        : std::runtime_error(std::move(what)),
          best_x(std::move(best)),
          residual(residual),
          iterations(iterations) {}

    std::vector<double> best_x;
    double residual;
    std::size_t iterations;
};

std::vector<double> spmv(const SparseMatrix& a, const std::vector<double>& x);

/// Preconditioned conjugate gradient for symmetric positive definite systems.
/// Starts from x = 0. Throws CgFailure when max_iterations is exhausted and
/// std::invalid_argument on dimension errors or a zero diagonal with Jacobi.
CgResult cg_solve(const SparseMatrix& a, const std::vector<double>& b, const SolveOptions& opts = {});

bool is_symmetric(const SparseMatrix& a, double rel_tol = 1e-12);

/// MatrixMarket "coordinate real general" dump, 1-based indices.
void write_matrix_market(std::ostream& out, const SparseMatrix& a);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

}  // namespace tgrec

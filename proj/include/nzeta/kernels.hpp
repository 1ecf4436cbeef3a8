#pragma once
#include <utility>
#include <vector>

#include "nzeta/poly.hpp"

namespace nzeta::kernels {

// Sparse integer column, entries sorted by row index (row = basis monomial index).
using SparseColumn = std::vector<std::pair<int, Integer>>;
using Columns = std::vector<SparseColumn>;

// Monomials of degree <= m in n variables, ascending graded-lex.
std::vector<Exponent> truncated_basis(int n, int m);

// Generators pi_m(M_j * df/dz_i) of the Jacobian span, f scaled to integer
// coefficients; zero and repeated columns dropped.
Columns jacobian_columns_serial(const Polynomial& f, int m);
Columns jacobian_columns_omp(const Polynomial& f, int m);

// Exact rank by fraction-free elimination with content removal.
// The serial version is the reference; the OpenMP one reduces column batches
// in parallel against a frozen pivot table and merges serially.
long rank_serial(const Columns& cols);
long rank_omp(const Columns& cols, int batch = 64);

}  // namespace nzeta::kernels

#pragma once
#include <vector>

#include "nzeta/poly.hpp"
#include "nzeta/rational.hpp"

namespace nzeta {

// Small exact integer linear algebra used by the polyhedral code.
// Matrices are row-major IntMatrix (std::vector<std::vector<long>>).

Integer determinant(const IntMatrix& a);  // square
int rank(const IntMatrix& a);
// rows: (k-1) x k of rank k-1 -> primitive generator of the kernel (sign unspecified)
std::vector<long> primitive_kernel_vector(const IntMatrix& rows);
// gcd of all maximal minors of a (rows <= cols); 0 if rank deficient
Integer maximal_minor_gcd(const IntMatrix& a);

// Column-style Hermite reduction: returns unimodular U (cols x cols) with a*U = [H | 0],
// H having exactly rank(a) nonzero columns.
IntMatrix column_reduce(const IntMatrix& a, int* rank_out = nullptr);
IntMatrix inverse_unimodular(const IntMatrix& u);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);
// unimodular matrix whose first column is the primitive vector w
IntMatrix unimodular_completion(const std::vector<long>& w);

}  // namespace nzeta

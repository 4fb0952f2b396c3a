#pragma once

#include <vector>

#include "fusionkit/intmat.hpp"

namespace fk {

// OpenMP kernels; the *_serial variants are the plain reference versions.
IMat matmul(const IMat& A, const IMat& B);
IMat matmul_serial(const IMat& A, const IMat& B);

// K[(l,m),(r,s)] = (N_{conj l} Z N_{conj m}^t)_{r s}
IMat splitting_matrix(const std::vector<IMat>& N, const IMat& Z, const std::vector<int>& conj);
IMat splitting_matrix_serial(const std::vector<IMat>& N, const IMat& Z, const std::vector<int>& conj);

// sum of entries of every matrix
std::vector<int64_t> entry_sums(const std::vector<IMat>& Ms);
std::vector<int64_t> entry_sums_serial(const std::vector<IMat>& Ms);

int kernel_threads();

}  // namespace fk

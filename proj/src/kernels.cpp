#include "fusionkit/kernels.hpp"

#include <omp.h>

#include <stdexcept>

namespace fk {

namespace {

struct Csr {
  std::vector<int> start, col;
  std::vector<int64_t> val;
};

Csr to_csr(const IMat& B) {
  Csr c;
  c.start.assign(B.rows + 1, 0);
  for (int i = 0; i < B.rows; ++i) {
    for (int j = 0; j < B.cols; ++j)
      if (B(i, j)) {
        c.col.push_back(j);
        c.val.push_back(B(i, j));
      }
    c.start[i + 1] = int(c.col.size());
  }
  return c;
}

void check_shapes(const IMat& A, const IMat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matmul shape mismatch");
}

}  // namespace

IMat matmul(const IMat& A, const IMat& B) {
  check_shapes(A, B);
  Csr b = to_csr(B);
  IMat C(A.rows, B.cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < A.rows; ++i) {
    int64_t* out = &C.a[size_t(i) * C.cols];
    for (int k = 0; k < A.cols; ++k) {
      int64_t x = A(i, k);
      if (!x) continue;
      for (int p = b.start[k]; p < b.start[k + 1]; ++p) out[b.col[p]] += x * b.val[p];
    }
  }
  return C;
}

IMat matmul_serial(const IMat& A, const IMat& B) {
  check_shapes(A, B);
  IMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      int64_t s = 0;
      for (int k = 0; k < A.cols; ++k) s += A(i, k) * B(k, j);
      C(i, j) = s;
    }
  return C;
}

IMat splitting_matrix(const std::vector<IMat>& N, const IMat& Z, const std::vector<int>& conj) {
  int r = Z.rows;
  int n = r * r;
  std::vector<IMat> NZ(r), Nt(r);
  for (int l = 0; l < r; ++l) {
    NZ[l] = matmul(N[conj[l]], Z);
    Nt[l] = N[conj[l]].transpose();
  }
  IMat K(n, n);
#pragma omp parallel for schedule(dynamic)
  for (int l = 0; l < r; ++l) {
    Csr z = to_csr(NZ[l]);
    for (int m = 0; m < r; ++m) {
      // row (l, m) of K is vec(NZ[l] * Nt[m])
      const IMat& B = Nt[m];
      int64_t* out = &K.a[size_t(l * r + m) * n];
      for (int i = 0; i < r; ++i)
        for (int p = z.start[i]; p < z.start[i + 1]; ++p) {
          int k = z.col[p];
          int64_t x = z.val[p];
          for (int j = 0; j < r; ++j) out[i * r + j] += x * B(k, j);
        }
    }
  }
  return K;
}

IMat splitting_matrix_serial(const std::vector<IMat>& N, const IMat& Z, const std::vector<int>& conj) {
  int r = Z.rows;
  int n = r * r;
  IMat K(n, n);
  for (int l = 0; l < r; ++l)
    for (int m = 0; m < r; ++m) {
      IMat P = matmul_serial(matmul_serial(N[conj[l]], Z), N[conj[m]].transpose());
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) K(l * r + m, i * r + j) = P(i, j);
    }
  return K;
}

std::vector<int64_t> entry_sums(const std::vector<IMat>& Ms) {
  std::vector<int64_t> s(Ms.size(), 0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < int(Ms.size()); ++i) {
    int64_t t = 0;
    for (auto x : Ms[i].a) t += x;
    s[i] = t;
  }
  return s;
}

std::vector<int64_t> entry_sums_serial(const std::vector<IMat>& Ms) {
  std::vector<int64_t> s;
  for (auto& m : Ms) s.push_back(m.sum());
  return s;
}

int kernel_threads() { return omp_get_max_threads(); }

}  // namespace fk

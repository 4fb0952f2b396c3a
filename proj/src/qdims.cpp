#include "fusionkit/qdims.hpp"

#include <cmath>
#include <map>
#include <set>

namespace fk {

std::vector<CycReal> vertex_qdims(const AnnularFamily& fam, const FusionSystem& sys) {
  CycReal g0 = gamma_dim(fam, 0, sys);
  std::vector<CycReal> mu;
  for (int a = 0; a < fam.rank(); ++a) mu.push_back(gamma_dim(fam, a, sys) / g0);
  return mu;
}

OrderReport order_report(const AnnularFamily& fam, const FusionSystem& sys, const ModularInvariant& inv) {
  OrderReport rep;
  rep.graph = fam.graph.name;
  rep.mu = vertex_qdims(fam, sys);
  rep.order_E = CycReal(sys.kappa);
  for (auto& m : rep.mu) rep.order_E += m * m;
  rep.order_quotient = gamma_dim(fam, 0, sys);
  if (!fam.graph.self_fusion) return rep;

  ModularBlocks mb = modular_blocks(inv);
  std::map<std::vector<int>, size_t> block_of;
  for (size_t b = 0; b < mb.blocks.size(); ++b) block_of[mb.blocks[b]] = b;
  std::vector<int> J;
  std::vector<int64_t> hits(mb.blocks.size(), 0);
  for (int c = 0; c < fam.rank(); ++c) {
    std::vector<int> supp;
    for (auto& [n, mult] : induction(fam, c)) supp.push_back(n);
    auto it = block_of.find(supp);
    if (it == block_of.end()) continue;
    J.push_back(c);
    ++hits[it->second];
  }
  for (size_t b = 0; b < mb.blocks.size(); ++b)
    if (hits[b] != mb.multiplicity[b]) {
      rep.warning = "J undetermined: block " + std::to_string(b) + " matched by " + std::to_string(hits[b]) +
                    " vertices, multiplicity " + std::to_string(mb.multiplicity[b]);
      return rep;
    }
  CycReal oj(sys.kappa);
  for (int c : J) oj += rep.mu[c] * rep.mu[c];
  rep.order_J = oj;
  rep.J_vertices = J;
  return rep;
}

OrderChecks check_orders(const AnnularFamily& fam, const FusionSystem& sys, const OrderReport& rep) {
  OrderChecks c;
  CycReal A = order_A(sys);
  c.product = rep.order_quotient * rep.order_E == A;
  if (fam.graph.self_fusion) {
    if (!rep.order_J) {
      c.self_fusion = c.J_sum = false;
    } else {
      c.self_fusion = A / rep.order_E == rep.order_E / *rep.order_J;
      CycReal s(sys.kappa);
      for (int v : *rep.J_vertices) {
        CycReal g = gamma_dim(fam, v, sys);
        s += g * g;
      }
      c.J_sum = s == A;
    }
  }
  CycReal ev = quantum_dim(sys, 1);
  const IMat& G = fam.graph.adjacency;
  c.eigen = true;
  for (int a = 0; a < G.rows && c.eigen; ++a) {
    CycReal s(sys.kappa);
    for (int b = 0; b < G.cols; ++b)
      if (G(a, b)) s += CycReal(sys.kappa, long(G(a, b))) * rep.mu[b];
    c.eigen = s == ev * rep.mu[a];
  }
  return c;
}

TrigResult trig_identity_check(const FusionSystem& sys, const ModularInvariant& inv, double tol) {
  TrigResult t;
  double K = sys.kappa;
  auto s = [&](int i) {
    const Weight& w = sys.irreps[i];
    if (sys.kind == Kind::sl2) return std::sin(M_PI * (w.p + 1) / K);
    double a = w.p + 1, b = w.q + 1;
    return std::sin(a * M_PI / K) * std::sin(b * M_PI / K) * std::sin((a + b) * M_PI / K);
  };
  std::vector<CycReal> mu = quantum_dims(sys);
  CycReal lhs(sys.kappa), rhs(sys.kappa);
  int r = sys.rank();
  for (int m = 0; m < r; ++m) {
    rhs += mu[m] * mu[m];
    for (int n = 0; n < r; ++n) {
      int64_t z = inv.Z(m, n);
      if (!z) continue;
      t.sum += double(z) * s(m) * s(n);
      lhs += CycReal(sys.kappa, long(z)) * mu[m] * mu[n];
    }
  }
  t.expected = sys.kind == Kind::sl2 ? K / 2 : 3 * K * K / 64;
  t.numeric = std::abs(t.sum - t.expected) < tol;
  t.exact = lhs == rhs;
  return t;
}

std::vector<mpz_class> char_poly(const IMat& M) {
  int n = M.rows;
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<mpz_class> A(size_t(n) * n), Mk(size_t(n) * n, 0), T(size_t(n) * n);
  for (size_t i = 0; i < A.size(); ++i) A[i] = long(M.a[i]);
  for (int k = 1; k <= n; ++k) {
    // Mk = A Mk + c[n-k+1] I ; c[n-k] = -tr(A Mk)/k
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (int l = 0; l < n; ++l) s += A[i * n + l] * Mk[l * n + j];
        T[i * n + j] = s;
      }
    for (int i = 0; i < n; ++i) T[i * n + i] += c[n - k + 1];
    Mk.swap(T);
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i * n + l] * Mk[l * n + i];
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {

// Bareiss fraction-free determinant
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
  int n = int(m.size());
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

mpz_class poly_discriminant(const std::vector<mpz_class>& p) {
  int n = int(p.size()) - 1;
  if (n < 1) throw std::invalid_argument("discriminant of a constant");
  if (n == 1) return 1;
  std::vector<mpz_class> dp(n);
  for (int i = 1; i <= n; ++i) dp[i - 1] = p[i] * i;
  int m = n - 1, N = n + m;
  std::vector<std::vector<mpz_class>> S(N, std::vector<mpz_class>(N, 0));
  // rows hold coefficients highest degree first
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) S[r][r + i] = p[n - i];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) S[m + r][r + i] = dp[m - i];
  mpz_class res = det_bareiss(S);
  mpz_class d = res / p[n];
  if ((n * (n - 1) / 2) % 2) d = -d;
  return d;
}

DiscriminantReport discriminant_suite(const FusionSystem& sys) {
  DiscriminantReport rep;
  int K = sys.kappa, r = sys.rank();
  std::vector<CycReal> mu = quantum_dims(sys);
  CycReal P(K, 1L), S(K);
  for (auto& m : mu) {
    P *= m * m;
    S += m * m;
  }
  rep.prod_mu_sq = P;
  CycReal D = S.pow(unsigned(r)) / P;
  rep.integral = D.is_rational() && D.rational().get_den() == 1;
  if (rep.integral) rep.D = D.rational().get_num();
  mpz_class kz = K;
  mpz_class a, b;
  double sn = std::sin(M_PI / K), cs = std::cos(M_PI / K);
  if (sys.kind == Kind::sl2) {
    mpz_pow_ui(a.get_mpz_t(), mpz_class(2).get_mpz_t(), K - 1);
    mpz_pow_ui(b.get_mpz_t(), kz.get_mpz_t(), K - 3);
    double lp = -(K - 1) * std::log(2.0) + std::log(double(K)) - (K - 1) * std::log(sn);
    rep.prod_mu_sq_closed = std::exp(2 * lp);
    rep.charpoly = char_poly(sys.generator());
    rep.charpoly_disc = poly_discriminant(rep.charpoly);
  } else {
    mpz_pow_ui(a.get_mpz_t(), mpz_class(3).get_mpz_t(), (K - 2) * (K - 1) / 2);
    mpz_pow_ui(b.get_mpz_t(), kz.get_mpz_t(), (K - 4) * (K - 2));
    double e = double(K - 2) * (K - 1);
    double lp = -e * std::log(16.0) + 3 * (K - 2) * std::log(double(K)) - e * std::log(cs * sn * sn * sn);
    rep.prod_mu_sq_closed = std::exp(lp);
  }
  rep.closed_form = a * b;
  return rep;
}

}  // namespace fk

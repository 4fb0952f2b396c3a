#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "fusionkit/exactnum.hpp"

using namespace fk;

namespace {

double qnum(int n, int K) { return std::sin(n * M_PI / K) / std::sin(M_PI / K); }

// horner on integer coefficients, lowest degree first
double eval(const ZPoly& p, double x) {
  double v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i].get_d();
  return v;
}

CycReal random_elt(int K, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<mpq_class> c(CycReal::beta(K).degree());
  for (auto& x : c) x = mpq_class(d(rng), 1 + std::abs(d(rng)));
  return CycReal::from_coeffs(K, c);
}

// the same element evaluated at 2cos(pi/K) directly from its coefficients
double direct(const CycReal& x) {
  double b = 2 * std::cos(M_PI / x.kappa()), v = 0;
  const auto& c = x.coeffs();
  for (size_t i = c.size(); i-- > 0;) v = v * b + c[i].get_d();
  return v;
}

}  // namespace

TEST_CASE("minimal polynomials") {
  CHECK(zpoly_string(minpoly(4)) == "x^2 - 2");
  CHECK(zpoly_string(minpoly(6)) == "x^2 - 3");
  CHECK(zpoly_string(minpoly(12)) == "x^4 - 4x^2 + 1");
  for (int K = 2; K <= 40; ++K) {
    ZPoly p = minpoly(K);
    CHECK(int(p.size()) - 1 == euler_phi(2 * K) / 2);
    CHECK(p.back() == 1);
    CHECK(std::abs(eval(p, 2 * std::cos(M_PI / K))) < 1e-9);
  }
}

TEST_CASE("q-integers") {
  CHECK(qint(1, 12) == CycReal(12, 1L));
  CycReal b = CycReal::beta(12);
  CycReal sqrt3 = b * b - CycReal(12, 2L);  // 2cos(pi/6)
  CHECK(qint(7, 12) == CycReal(12, 2L) + sqrt3);
  CHECK(qint(2, 12) * qint(2, 12) == CycReal(12, 2L) + sqrt3);
  CHECK(qint(3, 12) == b * b - CycReal(12, 1L));
  CHECK(qint(1, 12) + qint(7, 12) == CycReal(12, 3L) + sqrt3);
  for (int K = 4; K <= 30; ++K) CHECK(qint(K, K).is_zero());
  for (int K = 3; K <= 40; ++K)
    for (int n = 0; n <= K; ++n) {
      CycReal q = qint(n, K);
      CHECK(std::abs(q.to_double() - qnum(n, K)) < 1e-12 * std::max(1.0, qnum(n, K)));
      if (n >= 2 && n <= K - 2) CHECK(q * qint(2, K) == qint(n - 1, K) + qint(n + 1, K));
      if (n <= K) CHECK(qint(K - n, K) == q);
    }
  CHECK_THROWS_AS(qint(3, 1), std::domain_error);
}

TEST_CASE("field arithmetic") {
  std::mt19937 rng(7);
  for (int K : {5, 8, 12, 13, 24, 29}) {
    for (int t = 0; t < 20; ++t) {
      CycReal x = random_elt(K, rng), y = random_elt(K, rng), z = random_elt(K, rng);
      CHECK((x + y) * z == x * z + y * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK(std::abs((x * y).to_double() - direct(x) * direct(y)) < 1e-9 * (1 + std::abs(direct(x) * direct(y))));
      if (!y.is_zero()) {
        CHECK((x / y) * y == x);
        CHECK(y / y == CycReal(K, 1L));
      }
      CHECK(arith(x, y, ArithOp::sub) == x - y);
      // Galois conjugates multiply to a rational norm
      CycReal norm(K, 1L);
      std::vector<CycReal> seen;
      for (int j = 1; j < 2 * K; j += 2) {
        if (std::gcd(j, 2 * K) != 1) continue;
        CycReal g = x.galois(j);
        bool dup = false;
        for (auto& s : seen) dup = dup || s == g;
        if (!dup) seen.push_back(g);
      }
      if (int(seen.size()) == x.degree())
        for (auto& g : seen) norm *= g;
      if (int(seen.size()) == x.degree()) CHECK(norm.is_rational());
    }
  }
  CHECK_THROWS_AS(CycReal(5, 1L) + CycReal(6, 1L), std::domain_error);
  CHECK_THROWS(CycReal(5, 1L) / CycReal(5, 0L));
}

TEST_CASE("rendering") {
  CHECK(qint(2, 12).radical_string() == "√(2+√3)");
  CHECK(qint(3, 12).radical_string() == "1+√3");
  CHECK(qint(2, 8).radical_string() == "√(2+√2)");
  CycReal e6 = CycReal(12, 4L) * (CycReal(12, 3L) + qint(7, 12) - CycReal(12, 2L));
  CHECK(e6.radical_string() == "4(3+√3)");
  CHECK(e6.pretty() == "4(3+√3) ≈ 18.9282");
  CHECK(CycReal(12, 5L).pretty() == "5");
  CHECK(decimal_string(106.02734, 6) == "106.027");
  CHECK(CycReal::beta(9).poly_string() == "b");
}

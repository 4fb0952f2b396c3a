#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fk {

// integer polynomial, lowest degree first
using ZPoly = std::vector<mpz_class>;

ZPoly cyclotomic(int n);
// minimal polynomial of 2cos(pi/kappa)
ZPoly minpoly(int kappa);
std::string zpoly_string(const ZPoly& p, const std::string& var = "x");
int euler_phi(int n);

struct FieldData;

// Element of Q(b), b = 2cos(pi/kappa), stored as the reduced remainder mod minpoly(kappa).
class CycReal {
 public:
  CycReal() = default;
  explicit CycReal(int kappa);
  CycReal(int kappa, long n);
  CycReal(int kappa, const mpq_class& q);
  static CycReal beta(int kappa);
  static CycReal from_coeffs(int kappa, std::vector<mpq_class> c);

  int kappa() const;
  int degree() const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational() const;
  int sign() const;

  CycReal operator-() const;
  CycReal& operator+=(const CycReal& o);
  CycReal& operator-=(const CycReal& o);
  CycReal& operator*=(const CycReal& o);
  CycReal& operator/=(const CycReal& o);
  friend CycReal operator+(CycReal a, const CycReal& b) { return a += b; }
  friend CycReal operator-(CycReal a, const CycReal& b) { return a -= b; }
  friend CycReal operator*(CycReal a, const CycReal& b) { return a *= b; }
  friend CycReal operator/(CycReal a, const CycReal& b) { return a /= b; }
  bool operator==(const CycReal& o) const;
  bool operator!=(const CycReal& o) const { return !(*this == o); }

  CycReal inverse() const;
  CycReal pow(unsigned e) const;
  // automorphism b -> 2cos(j pi/kappa), j odd and coprime to kappa
  CycReal galois(int j) const;

  double to_double() const;
  std::string decimal(int digits = 6) const;
  std::string poly_string() const;
  // a+c*sqrt(d) or u+sqrt(t) shapes when they apply, otherwise empty
  std::string radical_string() const;
  std::string pretty(int digits = 6) const;

 private:
  std::shared_ptr<const FieldData> f_;
  std::vector<mpq_class> c_;
  void check_same(const CycReal& o) const;
};

CycReal qint(long n, int kappa);

enum class ArithOp { add, sub, mul, div };
CycReal arith(const CycReal& a, const CycReal& b, ArithOp op);

// small helpers used by renderers
std::string rational_string(const mpq_class& q);
std::string decimal_string(double v, int digits = 6);

}  // namespace fk

#ifndef QMK_CYCLOTOMIC_HPP
#define QMK_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "qmk/rational.hpp"

namespace qmk {

/// Monic integer coefficients of the N-th cyclotomic polynomial, ascending
/// degree.  Computed by exact division of x^N - 1 by the proper-divisor
/// cyclotomic polynomials.
std::vector<Int> cyclotomic_polynomial(long n);

/// Exact element of Q(zeta_N), stored in normal form: a rational polynomial
/// in zeta_N of degree < deg Phi_N, reduced modulo Phi_N.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coeffs_{Rat(0)} {}
    explicit Cyclotomic(const Rat& v) : order_(1), coeffs_{v} {}

    /// zeta_N^k, k taken modulo N.
    static Cyclotomic root_of_unity(long n, long k);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Cyclotomic conj() const;
    bool is_zero() const;
    bool is_rational() const;
    Rat as_rational() const;  // throws NotRationalError on non-constant normal form

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic pow(long e) const;

    /// Rewrites the element in Q(zeta_m); m must be a multiple of order().
    Cyclotomic raised_to_order(long m) const;

    /// Formal-sum rendering "c0 + c1*z(N)^1 + ...".
    std::string str() const;
    static Cyclotomic parse(const std::string& s);

    /// lcm cap for mixed-order arithmetic; QMK_CYC_ORDER_CAP overrides 720.
    static long order_cap();

  private:
    Cyclotomic(long order, std::vector<Rat> raw);  // reduces mod Phi_order
    long order_;
    std::vector<Rat> coeffs_;  // size deg Phi_order, ascending
};

}  // namespace qmk

#endif

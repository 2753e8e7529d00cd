#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncdisk/ncseries.hpp"

namespace ncdisk {

// Polynomial in m commuting base variables b_1..b_m over Q; finitely many
// terms, no stored zeros. Chart-level objects truncate these at a separate
// base-degree bound carried by the operation, not by the value.
class BasePoly {
  public:
    using TermMap = std::map<ExpVec, Rat, ExpVecLess>;

    explicit BasePoly(int m);
    static BasePoly zero(int m) { return BasePoly(m); }
    static BasePoly constant(int m, Rat c);
    static BasePoly variable(int m, int index);
    static BasePoly monomial(int m, ExpVec e, Rat c);

    int vars() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat coeff(const ExpVec& e) const;
    Rat constant_term() const { return coeff(ExpVec(static_cast<size_t>(m_), 0)); }
    void add_term(const ExpVec& e, const Rat& c);
    int degree() const; // -1 for the zero polynomial

    BasePoly truncated(int max_degree) const;

    friend bool operator==(const BasePoly& a, const BasePoly& b)
    {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

  private:
    int m_;
    TermMap terms_;
};

BasePoly poly_add(const BasePoly& a, const BasePoly& b);
BasePoly poly_sub(const BasePoly& a, const BasePoly& b);
BasePoly poly_neg(const BasePoly& a);
BasePoly poly_scale(const Rat& c, const BasePoly& a);
// Product truncated at base degree `max_degree` (pass a negative value for no
// truncation).
BasePoly poly_mul(const BasePoly& a, const BasePoly& b, int max_degree = -1);
BasePoly poly_derivative(const BasePoly& a, int var_index);
// b_i := images[i-1], truncated at max_degree (negative = exact).
BasePoly poly_substitute(const BasePoly& a, const std::vector<BasePoly>& images, int max_degree = -1);

inline BasePoly operator+(const BasePoly& a, const BasePoly& b) { return poly_add(a, b); }
inline BasePoly operator-(const BasePoly& a, const BasePoly& b) { return poly_sub(a, b); }
inline BasePoly operator-(const BasePoly& a) { return poly_neg(a); }

// Same grammar as the series, with variables spelled "b<i>".
BasePoly poly_parse(const std::string& text, int m);
std::string poly_format(const BasePoly& a);

// Compositional inverse of a base coordinate change phi (zero constant
// terms, invertible Jacobian at the origin), as polynomials modulo degree >
// max_degree.
std::vector<BasePoly> poly_compositional_inverse(const std::vector<BasePoly>& phi, int max_degree);

// Given 1-form components p_i (the form sum_i p_i db_i), the radial
// antiderivative q with dq = the form whenever the form is closed:
// q = sum_i int_0^1 b_i p_i(t b) dt.
BasePoly poly_radial_antiderivative(const std::vector<BasePoly>& components);

} // namespace ncdisk

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncdisk/poly.hpp"

namespace ncdisk {

// Strictly increasing subset of base indices {1..m}; the structural way to
// keep wedge antisymmetry.
using FormSet = std::vector<Letter>;

int merge_form_sign(const FormSet& a, const FormSet& b, FormSet& out); // 0 when not disjoint

// Homogeneous differential form of degree p on the affine chart, with
// polynomial coefficients.
class BaseForm {
  public:
    using TermMap = std::map<FormSet, BasePoly>;

    BaseForm(int m, int p);
    static BaseForm from_poly(const BasePoly& f) ;

    int vars() const { return m_; }
    int form_degree() const { return p_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const FormSet& s, const BasePoly& c);

    friend bool operator==(const BaseForm& a, const BaseForm& b)
    {
        return a.m_ == b.m_ && a.p_ == b.p_ && a.terms_ == b.terms_;
    }

  private:
    int m_;
    int p_;
    TermMap terms_;
};

BaseForm form_add(const BaseForm& a, const BaseForm& b);
BaseForm form_wedge(const BaseForm& a, const BaseForm& b);
// Exterior derivative; d(d(w)) = 0.
BaseForm de_rham(const BaseForm& w);

std::string form_format(const BaseForm& w);

// Series in the fiber generators of the noncommutative disk with polynomial
// base coefficients: a family of disk elements over the chart. Truncated at
// fiber degree <= fiber_trunc and base degree <= base_trunc.
class FiberSeries {
  public:
    using TermMap = std::map<Word, BasePoly, GradedLexLess>;

    FiberSeries(int n, int fiber_trunc, int base_trunc);
    static FiberSeries constant(int n, int N, int B, BasePoly c);
    static FiberSeries generator(int n, int N, int B, int index);
    static FiberSeries from_ncseries(const NCSeries& s, int base_trunc);

    int num_generators() const { return n_; }
    int fiber_trunc() const { return fiber_trunc_; }
    int base_trunc() const { return base_trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BasePoly coeff(const Word& w) const;
    void add_term(const Word& w, const BasePoly& c);
    int min_fiber_degree() const; // fiber_trunc + 1 when zero
    FiberSeries fiber_degree_part(int k) const;

    friend bool operator==(const FiberSeries& a, const FiberSeries& b)
    {
        return a.n_ == b.n_ && a.fiber_trunc_ == b.fiber_trunc_ &&
               a.base_trunc_ == b.base_trunc_ && a.terms_ == b.terms_;
    }

  private:
    int n_;
    int fiber_trunc_;
    int base_trunc_;
    TermMap terms_;
};

FiberSeries fiber_add(const FiberSeries& a, const FiberSeries& b);
FiberSeries fiber_sub(const FiberSeries& a, const FiberSeries& b);
FiberSeries fiber_neg(const FiberSeries& a);
FiberSeries fiber_scale(const BasePoly& c, const FiberSeries& a);
FiberSeries fiber_mul(const FiberSeries& a, const FiberSeries& b);
// Fiber letters replaced by images (zero fiber-constant terms); base
// coefficients are untouched and multiply through.
FiberSeries fiber_substitute(const FiberSeries& a, const std::vector<FiberSeries>& images);
// Base variables replaced inside every coefficient, truncated at base_trunc.
FiberSeries fiber_base_substitute(const FiberSeries& a, const std::vector<BasePoly>& images);

// The connection form of a trivialized noncommutative coordinate system on
// the chart: per base direction i, the derivation-valued contraction
// theta_i, stored through its generator images theta[i][alpha] =
// theta_i(xi_{alpha+1}). The images may depend polynomially on the base
// point. A well-formed form has fiber-constant part theta_i(xi_a) = delta_ia
// (the tautological leading normalization).
struct GKForm {
    int n = 0;         // base and fiber dimension agree on a chart
    int fiber_trunc = 0;
    int base_trunc = 0;
    std::vector<std::vector<FiberSeries>> theta;

    bool leading_is_tautological() const;
};

// theta_i = the constant derivation xi_i -> 1: base translation matches
// fiber translation and every higher component vanishes.
GKForm tautological_gk(int n, int fiber_trunc, int base_trunc);

// A change of trivialization: a base coordinate change phi (fixing the
// origin, invertible Jacobian) together with a fiberwise automorphism family
// psi with polynomial coefficients. The fiber-linear part of psi must be the
// Jacobian of phi: the fiber generators transform like the db_i.
struct Gauge {
    std::vector<BasePoly> phi;
    std::vector<FiberSeries> psi;
};

// The canonical lift with fiber-linear part = Jacobian(phi) and no tail.
Gauge linear_lift_gauge(const std::vector<BasePoly>& phi, int fiber_trunc, int base_trunc);

// Composite gauge with Psi_{out} = Psi_g o Psi_h, so that
// gauge_gk(gauge_gk(theta, g), h) = gauge_gk(theta, compose_gauges(g, h)).
Gauge compose_gauges(const Gauge& g, const Gauge& h);

// Pointwise-in-b inverse of the fiber automorphism family.
std::vector<FiberSeries> fiber_family_invert(const std::vector<FiberSeries>& psi);

// The transformed connection form representing the same connection in the
// new trivialization; flatness is preserved.
GKForm gauge_gk(const GKForm& theta, const Gauge& gauge);

} // namespace ncdisk

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncdisk/rational.hpp"
#include "ncdisk/word.hpp"

namespace ncdisk {

// Truncated series in n noncommuting generators over Q. Terms are a sparse
// word -> coefficient map with no stored zeros; every stored word has degree
// <= trunc. The truncation order is part of the value and is checked on
// every binary operation: silent re-truncation is forbidden.
class NCSeries {
  public:
    using TermMap = std::map<Word, Rat, GradedLexLess>;

    NCSeries(int num_generators, int trunc);

    static NCSeries zero(int n, int trunc) { return NCSeries(n, trunc); }
    static NCSeries constant(int n, int trunc, Rat c);
    static NCSeries generator(int n, int trunc, int index);
    static NCSeries monomial(int n, int trunc, Word w, Rat c);

    int num_generators() const { return n_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Word& w) const;
    Rat constant_term() const { return coeff(Word{}); }
    void set_coeff(Word w, Rat c);
    void add_term(const Word& w, const Rat& c);

    // Lowest degree of a nonzero term; trunc()+1 when zero.
    int min_degree() const;
    int max_degree() const;

    // Homogeneous part of the given degree.
    NCSeries degree_part(int d) const;
    // Same terms, new truncation order (allowed only upward).
    NCSeries lifted_to(int trunc) const;

    friend bool operator==(const NCSeries& a, const NCSeries& b)
    {
        return a.n_ == b.n_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

  private:
    int n_;
    int trunc_;
    TermMap terms_;
};

NCSeries series_add(const NCSeries& a, const NCSeries& b);
NCSeries series_sub(const NCSeries& a, const NCSeries& b);
NCSeries series_neg(const NCSeries& a);
NCSeries series_scale(const Rat& c, const NCSeries& a);
NCSeries series_mul(const NCSeries& a, const NCSeries& b);
NCSeries series_commutator(const NCSeries& a, const NCSeries& b);

// The unique continuous algebra map sending x_i to images[i], applied to a.
// Every image must have zero constant term, otherwise the substitution does
// not converge on the completed algebra.
NCSeries series_substitute(const NCSeries& a, const std::vector<NCSeries>& images);

inline NCSeries operator+(const NCSeries& a, const NCSeries& b) { return series_add(a, b); }
inline NCSeries operator-(const NCSeries& a, const NCSeries& b) { return series_sub(a, b); }
inline NCSeries operator-(const NCSeries& a) { return series_neg(a); }
inline NCSeries operator*(const NCSeries& a, const NCSeries& b) { return series_mul(a, b); }
inline NCSeries operator*(const Rat& c, const NCSeries& a) { return series_scale(c, a); }

// Commutative exponent vectors, ordered by degree then lexicographically
// descending, which matches the order induced by sorted words.
using ExpVec = std::vector<int>;

inline int expvec_degree(const ExpVec& e)
{
    int d = 0;
    for (int k : e)
        d += k;
    return d;
}

struct ExpVecLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const
    {
        int da = expvec_degree(a), db = expvec_degree(b);
        if (da != db)
            return da < db;
        return a > b;
    }
};

// Truncated series in n commuting variables; the commutative shadow of
// NCSeries under abelianization.
class CommSeries {
  public:
    using TermMap = std::map<ExpVec, Rat, ExpVecLess>;

    CommSeries(int num_generators, int trunc);

    static CommSeries zero(int n, int trunc) { return CommSeries(n, trunc); }
    static CommSeries constant(int n, int trunc, Rat c);
    static CommSeries generator(int n, int trunc, int index);

    int num_generators() const { return n_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const ExpVec& e) const;
    Rat constant_term() const { return coeff(ExpVec(static_cast<size_t>(n_), 0)); }
    void add_term(const ExpVec& e, const Rat& c);

    friend bool operator==(const CommSeries& a, const CommSeries& b)
    {
        return a.n_ == b.n_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

  private:
    int n_;
    int trunc_;
    TermMap terms_;
};

CommSeries comm_add(const CommSeries& a, const CommSeries& b);
CommSeries comm_sub(const CommSeries& a, const CommSeries& b);
CommSeries comm_mul(const CommSeries& a, const CommSeries& b);
CommSeries comm_substitute(const CommSeries& a, const std::vector<CommSeries>& images);

// Abelianization: each word maps to its exponent vector; coefficients of
// merged monomials add. An algebra map.
CommSeries series_abelianize(const NCSeries& a);

// Text grammar (bit-exact):
//   term     := [sign] (rational | [rational "*"] factor ("*" factor)*)
//   factor   := "x"<index> ["^"<power>]
//   rational := int ["/" int]
// Whitespace is insignificant; "^k" abbreviates k-fold self-concatenation.
// Canonical output uses graded-lex term order, explicit "*", and collapses
// runs of a repeated generator back into "^".
NCSeries series_parse(const std::string& text, int n, int trunc);
std::string series_format(const NCSeries& a);

CommSeries comm_parse(const std::string& text, int n, int trunc);
std::string comm_format(const CommSeries& a);

} // namespace ncdisk

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncdisk/chart.hpp"
#include "ncdisk/linalg.hpp"

namespace ncdisk {

// Element of the chart-level differential graded algebra: forms on the base
// tensored with the completed tensor algebra of the fiber, with polynomial
// coefficients. Terms are (form index set, fiber word) -> polynomial, with
// form degree <= m, fiber degree <= fiber_trunc, base degree <= base_trunc.
class DGAElement {
  public:
    struct Key {
        FormSet form;
        Word fiber;
        friend bool operator==(const Key& a, const Key& b) = default;
    };
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const
        {
            if (a.form.size() != b.form.size())
                return a.form.size() < b.form.size();
            if (a.form != b.form)
                return a.form < b.form;
            return GradedLexLess{}(a.fiber, b.fiber);
        }
    };
    using TermMap = std::map<Key, BasePoly, KeyLess>;

    DGAElement(int m, int fiber_trunc, int base_trunc);
    static DGAElement one(int m, int N, int B);
    static DGAElement base_variable(int m, int N, int B, int i);
    static DGAElement base_one_form(int m, int N, int B, int i);
    static DGAElement fiber_generator(int m, int N, int B, int i);
    static DGAElement from_fiber_series(const FiberSeries& s);

    int vars() const { return m_; }
    int fiber_trunc() const { return fiber_trunc_; }
    int base_trunc() const { return base_trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const FormSet& s, const Word& w, const BasePoly& c);
    BasePoly coeff(const FormSet& s, const Word& w) const;

    int max_form_degree() const;
    bool is_form_degree_zero() const;
    // Largest fiber degree among the stored terms (-1 when zero).
    int max_fiber_degree() const;

    friend bool operator==(const DGAElement& a, const DGAElement& b)
    {
        return a.m_ == b.m_ && a.fiber_trunc_ == b.fiber_trunc_ &&
               a.base_trunc_ == b.base_trunc_ && a.terms_ == b.terms_;
    }

  private:
    int m_;
    int fiber_trunc_;
    int base_trunc_;
    TermMap terms_;
};

DGAElement dga_add(const DGAElement& a, const DGAElement& b);
DGAElement dga_sub(const DGAElement& a, const DGAElement& b);
DGAElement dga_neg(const DGAElement& a);
DGAElement dga_scale(const Rat& c, const DGAElement& a);
// Product: forms anticommute, fiber letters commute with forms and
// concatenate among themselves; contributions beyond either truncation are
// dropped.
DGAElement dga_mul(const DGAElement& a, const DGAElement& b);

// Text grammar: each term is
//   [sign] [rational "*"] [base factors] [form factors] [fiber factors]
// with base factors "b<i>[^k]", form factors "db<i>" joined by "^", fiber
// factors "x<i>[^k]", all blocks joined by "*".
std::string dga_format(const DGAElement& e);
DGAElement dga_parse(const std::string& text, int m, int fiber_trunc, int base_trunc);

// The connection tensors of a twisted differential: D(xi_from) =
// sum entries coeff * db_form (x) xi_word, the word-length-0 entries being
// the leading identification (the identity for a well-formed connection) and
// word length k >= 1 the degree-k tail. Tails are stored for
// k <= fiber_trunc - 1.
class ConnectionData {
  public:
    struct Key {
        int from = 0; // generator index 1..n
        int form = 0; // base index 1..n
        Word word;
        friend bool operator==(const Key& a, const Key& b) = default;
        friend auto operator<=>(const Key& a, const Key& b)
        {
            if (auto c = a.from <=> b.from; c != 0)
                return c;
            if (auto c = a.form <=> b.form; c != 0)
                return c;
            if (auto c = a.word.size() <=> b.word.size(); c != 0)
                return c;
            return a.word <=> b.word;
        }
    };
    using EntryMap = std::map<Key, BasePoly>;

    ConnectionData(int n, int fiber_trunc, int base_trunc);

    int num_generators() const { return n_; }
    int fiber_trunc() const { return fiber_trunc_; }
    int base_trunc() const { return base_trunc_; }
    const EntryMap& entries() const { return entries_; }
    void set_entry(const Key& k, const BasePoly& c);
    BasePoly entry(const Key& k) const;

    // Degree-k tail as a map (from, form, word) with |word| = k.
    EntryMap tail(int k) const;

    std::string to_json() const;
    static ConnectionData from_json(const std::string& text);

    friend bool operator==(const ConnectionData& a, const ConnectionData& b)
    {
        return a.n_ == b.n_ && a.fiber_trunc_ == b.fiber_trunc_ &&
               a.base_trunc_ == b.base_trunc_ && a.entries_ == b.entries_;
    }

  private:
    int n_;
    int fiber_trunc_;
    int base_trunc_;
    EntryMap entries_;
};

// Reads the connection off a trivialized connection form: the fiber-constant
// components must be the tautological normalization (leading term alpha (x)
// 1), the degree-k image components give the k-th tail.
ConnectionData connection_from_gk(const GKForm& theta);

// Inverse repackaging: the connection form whose contraction blocks are the
// stored tensors.
GKForm gk_from_connection(const ConnectionData& c);

// The differential: unique degree-1 derivation restricting to de Rham on the
// base and acting on fiber generators by the stored tensors. Output is
// truncated at the (fiber, base) bounds; contributions beyond either bound
// are dropped.
DGAElement apply_D(const ConnectionData& c, const DGAElement& e);

struct FlatnessReport {
    bool flat = true;
    std::string witness_generator; // which generator exposed D^2 != 0
    std::optional<DGAElement> failure;
};

// Applies D twice to every fiber generator and every base coordinate.
FlatnessReport flatness_check(const ConnectionData& c);

struct ShapeReport {
    bool ok = true;
    std::string violation; // names the offending generator or coordinate
};

// Checks the leading identification (image of each fiber generator mod the
// fiber-positive ideal equals its own db) and that D restricts to de Rham on
// the base coordinates.
ShapeReport validate_twisted_shape(const ConnectionData& c);

struct FlatSections {
    std::vector<DGAElement> basis;    // echelon over the documented column order
    std::vector<int> pivot_fiber_degree;

    // Number of basis elements whose pivot has the exact fiber degree d.
    long long census(int fiber_degree) const;
};

// Exact kernel of D on form-degree-0 elements with fiber degree <=
// fiber_deg_max and base degree <= base_deg_max. Columns are ordered by
// descending fiber degree (then word, then base monomial), so pivot fiber
// degrees count the filtration quotients.
FlatSections flat_sections(const ConnectionData& c, int fiber_deg_max, int base_deg_max);

} // namespace ncdisk

#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncdisk/ncconn.hpp"

namespace ncdisk {

// A 1-form on the chart valued in bilinear maps on the tangent sheaf:
// entries db_base (x) (xi_in1 (x) xi_in2 -> xi_out).
class BilinearMapForm {
  public:
    struct Key {
        int base = 0;
        int in1 = 0;
        int in2 = 0;
        int out = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using EntryMap = std::map<Key, BasePoly>;

    explicit BilinearMapForm(int n) : n_(n) {}
    int num_generators() const { return n_; }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    void add_entry(const Key& k, const BasePoly& c);
    BasePoly entry(const Key& k) const;

    std::string to_json() const;
    static BilinearMapForm from_json(const std::string& text);

    friend bool operator==(const BilinearMapForm& a, const BilinearMapForm& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

  private:
    int n_;
    EntryMap entries_;
};

// The 0-cochain sibling: a bilinear map xi_in1 (x) xi_in2 -> xi_out with
// polynomial coefficients; the witness type for coboundary solving.
class BilinearMap {
  public:
    struct Key {
        int in1 = 0;
        int in2 = 0;
        int out = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using EntryMap = std::map<Key, BasePoly>;

    explicit BilinearMap(int n) : n_(n) {}
    int num_generators() const { return n_; }
    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    void add_entry(const Key& k, const BasePoly& c);
    BasePoly entry(const Key& k) const;

    std::string to_json() const;
    static BilinearMap from_json(const std::string& text);

    friend bool operator==(const BilinearMap& a, const BilinearMap& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

  private:
    int n_;
    EntryMap entries_;
};

// Entrywise exterior derivative, the de Rham coboundary of a 0-cochain.
BilinearMapForm bilinear_d(const BilinearMap& g);

// The first tail block of the connection reshaped as a bilinear map: the
// form slot of the block pairs with the source generator, so
// (d/db_j, d/db_k) -> sum_l  (tail entry from=l, form=j, word={k}) xi_l.
BilinearMap connection_weight_block(const ConnectionData& c);

// The chart-level representative of the degree-2 class of the connection:
// the de Rham image of the reshaped first tail block. Zero for the
// tautological connection; extraction is linear in the tail.
BilinearMapForm omega2_extract(const ConnectionData& c);

// Entrywise difference: the 1-cochain comparing two trivializations.
BilinearMapForm cech_difference(const BilinearMapForm& a, const BilinearMapForm& b);

struct CoboundaryResult {
    bool found = false;
    int bound = 0; // the polynomial-degree bound the verdict refers to
    std::optional<BilinearMap> witness;
};

// Solves d(g) = delta over polynomial entries of degree <= base_deg_max.
// Every returned witness satisfies d(g) = delta exactly (re-verified by
// substitution before returning); infeasibility is only meaningful relative
// to the stated bound.
CoboundaryResult coboundary_solve(const BilinearMapForm& delta, int base_deg_max);

} // namespace ncdisk

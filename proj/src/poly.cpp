#include "ncdisk/poly.hpp"

#include <cctype>

#include "ncdisk/linalg.hpp"

namespace ncdisk {

BasePoly::BasePoly(int m) : m_(m)
{
    require(m >= 1, errc::dimension_mismatch, "need at least one base variable");
}

BasePoly BasePoly::constant(int m, Rat c)
{
    BasePoly p(m);
    p.add_term(ExpVec(static_cast<size_t>(m), 0), c);
    return p;
}

BasePoly BasePoly::variable(int m, int index)
{
    require(index >= 1 && index <= m, errc::index_out_of_range,
            "variable index " + std::to_string(index));
    BasePoly p(m);
    ExpVec e(static_cast<size_t>(m), 0);
    e[static_cast<size_t>(index - 1)] = 1;
    p.add_term(e, Rat(1));
    return p;
}

BasePoly BasePoly::monomial(int m, ExpVec e, Rat c)
{
    require(static_cast<int>(e.size()) == m, errc::dimension_mismatch, "exponent vector arity");
    BasePoly p(m);
    p.add_term(e, c);
    return p;
}

bool BasePoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && expvec_degree(terms_.begin()->first) == 0);
}

Rat BasePoly::coeff(const ExpVec& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void BasePoly::add_term(const ExpVec& e, const Rat& c)
{
    require(static_cast<int>(e.size()) == m_, errc::dimension_mismatch, "exponent vector arity");
    if (ncdisk::is_zero(c))
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (ncdisk::is_zero(it->second))
            terms_.erase(it);
    }
}

int BasePoly::degree() const
{
    if (terms_.empty())
        return -1;
    return expvec_degree(terms_.rbegin()->first);
}

BasePoly BasePoly::truncated(int max_degree) const
{
    BasePoly out(m_);
    for (const auto& [e, c] : terms_)
        if (expvec_degree(e) <= max_degree)
            out.add_term(e, c);
    return out;
}

namespace {

void check_vars(const BasePoly& a, const BasePoly& b)
{
    require(a.vars() == b.vars(), errc::dimension_mismatch, "base variable counts differ");
}

} // namespace

BasePoly poly_add(const BasePoly& a, const BasePoly& b)
{
    check_vars(a, b);
    BasePoly out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, c);
    return out;
}

BasePoly poly_neg(const BasePoly& a)
{
    BasePoly out(a.vars());
    for (const auto& [e, c] : a.terms())
        out.add_term(e, -c);
    return out;
}

BasePoly poly_sub(const BasePoly& a, const BasePoly& b)
{
    return poly_add(a, poly_neg(b));
}

BasePoly poly_scale(const Rat& c, const BasePoly& a)
{
    BasePoly out(a.vars());
    if (is_zero(c))
        return out;
    for (const auto& [e, k] : a.terms())
        out.add_term(e, c * k);
    return out;
}

BasePoly poly_mul(const BasePoly& a, const BasePoly& b, int max_degree)
{
    check_vars(a, b);
    BasePoly out(a.vars());
    size_t m = static_cast<size_t>(a.vars());
    for (const auto& [ea, ca] : a.terms()) {
        int da = expvec_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (max_degree >= 0 && da + expvec_degree(eb) > max_degree)
                break;
            ExpVec e(m);
            for (size_t i = 0; i < m; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

BasePoly poly_derivative(const BasePoly& a, int var_index)
{
    require(var_index >= 1 && var_index <= a.vars(), errc::index_out_of_range, "variable index");
    BasePoly out(a.vars());
    size_t i = static_cast<size_t>(var_index - 1);
    for (const auto& [e, c] : a.terms()) {
        if (e[i] == 0)
            continue;
        ExpVec f = e;
        --f[i];
        out.add_term(f, c * e[i]);
    }
    return out;
}

BasePoly poly_substitute(const BasePoly& a, const std::vector<BasePoly>& images, int max_degree)
{
    require(static_cast<int>(images.size()) == a.vars(), errc::dimension_mismatch,
            "need one image per variable");
    int m = images.empty() ? a.vars() : images[0].vars();
    BasePoly out(m);
    for (const auto& [e, c] : a.terms()) {
        BasePoly acc = BasePoly::constant(m, c);
        for (size_t i = 0; i < e.size() && !acc.is_zero(); ++i)
            for (int k = 0; k < e[i]; ++k)
                acc = poly_mul(acc, images[i], max_degree);
        out = poly_add(out, acc);
    }
    return out;
}

BasePoly poly_parse(const std::string& text, int m)
{
    // reuse the series scanner via the noncommutative grammar with x -> b
    std::string t = text;
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] == 'b' && (i == 0 || !std::isalnum(static_cast<unsigned char>(t[i - 1]))))
            t[i] = 'x';
    // base polynomials are never truncated at parse time; use a generous bound
    NCSeries s = series_parse(t, m, 1 << 20);
    BasePoly out(m);
    for (const auto& [w, c] : s.terms()) {
        ExpVec e(static_cast<size_t>(m), 0);
        for (Letter l : w)
            ++e[static_cast<size_t>(l - 1)];
        out.add_term(e, c);
    }
    return out;
}

std::string poly_format(const BasePoly& a)
{
    CommSeries s(a.vars(), a.is_zero() ? 0 : a.degree());
    for (const auto& [e, c] : a.terms())
        s.add_term(e, c);
    std::string txt = comm_format(s);
    for (size_t i = 0; i < txt.size(); ++i)
        if (txt[i] == 'x')
            txt[i] = 'b';
    return txt;
}

std::vector<BasePoly> poly_compositional_inverse(const std::vector<BasePoly>& phi, int max_degree)
{
    require(!phi.empty(), errc::dimension_mismatch, "empty coordinate change");
    int m = phi[0].vars();
    require(static_cast<int>(phi.size()) == m, errc::dimension_mismatch,
            "coordinate change needs m components");
    for (const auto& p : phi) {
        require(p.vars() == m, errc::dimension_mismatch, "mixed variable counts");
        require(is_zero(p.constant_term()), errc::non_recentred,
                "coordinate change must fix the origin");
    }
    // Jacobian at the origin
    std::vector<RatVec> jac(static_cast<size_t>(m), RatVec(static_cast<size_t>(m), Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ExpVec e(static_cast<size_t>(m), 0);
            e[static_cast<size_t>(j)] = 1;
            jac[static_cast<size_t>(i)][static_cast<size_t>(j)] = phi[static_cast<size_t>(i)].coeff(e);
        }
    auto inv = invert_matrix(jac);
    require(inv.has_value(), errc::singular_jacobian, "Jacobian at the origin is singular");

    // chi_1 = J^{-1}; chi_{d} corrects the degree-d failure of chi(phi) = id.
    std::vector<BasePoly> chi;
    for (int i = 0; i < m; ++i) {
        BasePoly s(m);
        for (int j = 0; j < m; ++j) {
            ExpVec e(static_cast<size_t>(m), 0);
            e[static_cast<size_t>(j)] = 1;
            s.add_term(e, (*inv)[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        chi.push_back(std::move(s));
    }
    std::vector<BasePoly> lin_inv = chi;
    for (int d = 2; d <= max_degree; ++d) {
        for (int i = 0; i < m; ++i) {
            BasePoly residue = poly_substitute(chi[static_cast<size_t>(i)], phi, max_degree);
            ExpVec xi(static_cast<size_t>(m), 0);
            xi[static_cast<size_t>(i)] = 1;
            residue.add_term(xi, Rat(-1));
            // keep only the degree-d failure
            BasePoly rd(m);
            for (const auto& [e, c] : residue.terms())
                if (expvec_degree(e) == d)
                    rd.add_term(e, c);
            if (rd.is_zero())
                continue;
            chi[static_cast<size_t>(i)] =
                poly_sub(chi[static_cast<size_t>(i)], poly_substitute(rd, lin_inv, max_degree));
        }
    }
    return chi;
}

BasePoly poly_radial_antiderivative(const std::vector<BasePoly>& components)
{
    require(!components.empty(), errc::dimension_mismatch, "no components");
    int m = components[0].vars();
    require(static_cast<int>(components.size()) == m, errc::dimension_mismatch,
            "need one component per variable");
    BasePoly out(m);
    for (int i = 0; i < m; ++i) {
        for (const auto& [e, c] : components[static_cast<size_t>(i)].terms()) {
            ExpVec f = e;
            ++f[static_cast<size_t>(i)];
            out.add_term(f, c / Rat(expvec_degree(e) + 1));
        }
    }
    return out;
}

} // namespace ncdisk

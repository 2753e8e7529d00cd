#include "ncdisk/chart.hpp"

#include <sstream>

#include "ncdisk/linalg.hpp"

namespace ncdisk {

int merge_form_sign(const FormSet& a, const FormSet& b, FormSet& out)
{
    out.clear();
    out.reserve(a.size() + b.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] moves left past the remaining a-elements
            if ((a.size() - i) % 2 == 1)
                sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size())
        out.push_back(a[i++]);
    while (j < b.size())
        out.push_back(b[j++]);
    return sign;
}

BaseForm::BaseForm(int m, int p) : m_(m), p_(p)
{
    require(m >= 1, errc::dimension_mismatch, "need at least one base variable");
    require(p >= 0 && p <= m, errc::degree_out_of_range, "form degree outside [0, m]");
}

BaseForm BaseForm::from_poly(const BasePoly& f)
{
    BaseForm w(f.vars(), 0);
    w.add_term(FormSet{}, f);
    return w;
}

void BaseForm::add_term(const FormSet& s, const BasePoly& c)
{
    require(static_cast<int>(s.size()) == p_, errc::degree_out_of_range,
            "term form degree differs from the form's degree");
    for (std::size_t i = 0; i < s.size(); ++i) {
        require(s[i] >= 1 && static_cast<int>(s[i]) <= m_, errc::index_out_of_range, "form index");
        require(i == 0 || s[i - 1] < s[i], errc::index_out_of_range,
                "form indices must be strictly increasing");
    }
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second = poly_add(it->second, c);
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BaseForm form_add(const BaseForm& a, const BaseForm& b)
{
    require(a.vars() == b.vars() && a.form_degree() == b.form_degree(), errc::dimension_mismatch,
            "form shapes differ");
    BaseForm out = a;
    for (const auto& [s, c] : b.terms())
        out.add_term(s, c);
    return out;
}

BaseForm form_wedge(const BaseForm& a, const BaseForm& b)
{
    require(a.vars() == b.vars(), errc::dimension_mismatch, "form variable counts differ");
    require(a.form_degree() + b.form_degree() <= a.vars(), errc::degree_out_of_range,
            "wedge degree exceeds the chart dimension");
    BaseForm out(a.vars(), a.form_degree() + b.form_degree());
    for (const auto& [sa, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms()) {
            FormSet merged;
            int sign = merge_form_sign(sa, sb, merged);
            if (sign == 0)
                continue;
            out.add_term(merged, poly_scale(Rat(sign), poly_mul(ca, cb)));
        }
    return out;
}

BaseForm de_rham(const BaseForm& w)
{
    BaseForm out(w.vars(), std::min(w.form_degree() + 1, w.vars()));
    if (w.form_degree() + 1 > w.vars())
        return out; // top forms die
    for (const auto& [s, c] : w.terms())
        for (int j = 1; j <= w.vars(); ++j) {
            BasePoly dj = poly_derivative(c, j);
            if (dj.is_zero())
                continue;
            FormSet merged;
            int sign = merge_form_sign(FormSet{static_cast<Letter>(j)}, s, merged);
            if (sign == 0)
                continue;
            out.add_term(merged, poly_scale(Rat(sign), dj));
        }
    return out;
}

std::string form_format(const BaseForm& w)
{
    if (w.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : w.terms()) {
        os << (first ? "" : " + ") << "(" << poly_format(c) << ")";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i == 0 ? "*" : "^") << "db" << int(s[i]);
        first = false;
    }
    return os.str();
}

FiberSeries::FiberSeries(int n, int fiber_trunc, int base_trunc)
    : n_(n), fiber_trunc_(fiber_trunc), base_trunc_(base_trunc)
{
    require(n >= 1, errc::dimension_mismatch, "need at least one generator");
    require(fiber_trunc >= 0 && base_trunc >= 0, errc::degree_out_of_range, "negative truncation");
}

FiberSeries FiberSeries::constant(int n, int N, int B, BasePoly c)
{
    FiberSeries s(n, N, B);
    s.add_term(Word{}, c.truncated(B));
    return s;
}

FiberSeries FiberSeries::generator(int n, int N, int B, int index)
{
    require(index >= 1 && index <= n, errc::index_out_of_range, "generator index");
    require(N >= 1, errc::degree_out_of_range, "fiber truncation below 1");
    FiberSeries s(n, N, B);
    s.add_term(Word{static_cast<Letter>(index)}, BasePoly::constant(n, Rat(1)));
    return s;
}

FiberSeries FiberSeries::from_ncseries(const NCSeries& a, int base_trunc)
{
    FiberSeries s(a.num_generators(), a.trunc(), base_trunc);
    for (const auto& [w, c] : a.terms())
        s.add_term(w, BasePoly::constant(a.num_generators(), c));
    return s;
}

BasePoly FiberSeries::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? BasePoly::zero(n_) : it->second;
}

void FiberSeries::add_term(const Word& w, const BasePoly& c)
{
    check_word(w, n_);
    require(word_degree(w) <= fiber_trunc_, errc::degree_out_of_range,
            "fiber degree exceeds truncation");
    BasePoly cut = c.truncated(base_trunc_);
    if (cut.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, cut);
    if (!inserted) {
        it->second = poly_add(it->second, cut);
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int FiberSeries::min_fiber_degree() const
{
    if (terms_.empty())
        return fiber_trunc_ + 1;
    return word_degree(terms_.begin()->first);
}

FiberSeries FiberSeries::fiber_degree_part(int k) const
{
    FiberSeries out(n_, fiber_trunc_, base_trunc_);
    for (const auto& [w, c] : terms_)
        if (word_degree(w) == k)
            out.add_term(w, c);
    return out;
}

namespace {

void check_fiber_shape(const FiberSeries& a, const FiberSeries& b)
{
    require(a.num_generators() == b.num_generators() && a.fiber_trunc() == b.fiber_trunc() &&
                a.base_trunc() == b.base_trunc(),
            errc::dimension_mismatch, "fiber series shapes differ");
}

} // namespace

FiberSeries fiber_add(const FiberSeries& a, const FiberSeries& b)
{
    check_fiber_shape(a, b);
    FiberSeries out = a;
    for (const auto& [w, c] : b.terms())
        out.add_term(w, c);
    return out;
}

FiberSeries fiber_neg(const FiberSeries& a)
{
    FiberSeries out(a.num_generators(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [w, c] : a.terms())
        out.add_term(w, poly_neg(c));
    return out;
}

FiberSeries fiber_sub(const FiberSeries& a, const FiberSeries& b)
{
    return fiber_add(a, fiber_neg(b));
}

FiberSeries fiber_scale(const BasePoly& c, const FiberSeries& a)
{
    FiberSeries out(a.num_generators(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [w, k] : a.terms())
        out.add_term(w, poly_mul(c, k, a.base_trunc()));
    return out;
}

FiberSeries fiber_mul(const FiberSeries& a, const FiberSeries& b)
{
    check_fiber_shape(a, b);
    FiberSeries out(a.num_generators(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            if (word_degree(wa) + word_degree(wb) > a.fiber_trunc())
                break;
            out.add_term(word_concat(wa, wb), poly_mul(ca, cb, a.base_trunc()));
        }
    return out;
}

FiberSeries fiber_substitute(const FiberSeries& a, const std::vector<FiberSeries>& images)
{
    require(static_cast<int>(images.size()) == a.num_generators(), errc::dimension_mismatch,
            "need one image per generator");
    for (const auto& im : images) {
        check_fiber_shape(a, im);
        require(im.coeff(Word{}).is_zero(), errc::divergent_substitution,
                "image has a fiber-constant term");
    }
    FiberSeries out(a.num_generators(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [w, c] : a.terms()) {
        FiberSeries acc = FiberSeries::constant(a.num_generators(), a.fiber_trunc(), a.base_trunc(), c);
        for (Letter l : w) {
            acc = fiber_mul(acc, images[static_cast<std::size_t>(l - 1)]);
            if (acc.is_zero())
                break;
        }
        out = fiber_add(out, acc);
    }
    return out;
}

FiberSeries fiber_base_substitute(const FiberSeries& a, const std::vector<BasePoly>& images)
{
    FiberSeries out(a.num_generators(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [w, c] : a.terms())
        out.add_term(w, poly_substitute(c, images, a.base_trunc()));
    return out;
}

bool GKForm::leading_is_tautological() const
{
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            BasePoly c = theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)].coeff(Word{});
            BasePoly want = i == a ? BasePoly::constant(n, Rat(1)) : BasePoly::zero(n);
            if (!(c == want))
                return false;
        }
    return true;
}

GKForm tautological_gk(int n, int fiber_trunc, int base_trunc)
{
    GKForm gk;
    gk.n = n;
    gk.fiber_trunc = fiber_trunc;
    gk.base_trunc = base_trunc;
    gk.theta.assign(static_cast<std::size_t>(n),
                    std::vector<FiberSeries>(static_cast<std::size_t>(n),
                                             FiberSeries(n, fiber_trunc, base_trunc)));
    for (int i = 0; i < n; ++i)
        gk.theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            FiberSeries::constant(n, fiber_trunc, base_trunc, BasePoly::constant(n, Rat(1)));
    return gk;
}

namespace {

// Polynomial matrices over the truncated base ring.
using PolyMat = std::vector<std::vector<BasePoly>>;

PolyMat jacobian(const std::vector<BasePoly>& phi)
{
    int m = static_cast<int>(phi.size());
    PolyMat J(static_cast<std::size_t>(m),
              std::vector<BasePoly>(static_cast<std::size_t>(m), BasePoly::zero(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                poly_derivative(phi[static_cast<std::size_t>(i)], j + 1);
    return J;
}

PolyMat polymat_mul(const PolyMat& a, const PolyMat& b, int B)
{
    std::size_t m = a.size();
    int vars = a[0][0].vars();
    PolyMat out(m, std::vector<BasePoly>(m, BasePoly::zero(vars)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            BasePoly acc = BasePoly::zero(vars);
            for (std::size_t l = 0; l < m; ++l)
                acc = poly_add(acc, poly_mul(a[i][l], b[l][j], B));
            out[i][j] = acc;
        }
    return out;
}

// Inverse over Q[b]/(degree > B): the constant part must be invertible, the
// positive-degree part is nilpotent in the quotient.
PolyMat polymat_invert(const PolyMat& M, int B)
{
    std::size_t m = M.size();
    int vars = M[0][0].vars();
    std::vector<RatVec> m0(m, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            m0[i][j] = M[i][j].constant_term();
    auto inv0 = invert_matrix(m0);
    require(inv0.has_value(), errc::singular_jacobian, "matrix is singular at the origin");

    PolyMat inv0p(m, std::vector<BasePoly>(m, BasePoly::zero(vars)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            inv0p[i][j] = BasePoly::constant(vars, (*inv0)[i][j]);

    // E = I - inv0 * M has entries of positive degree; geometric series stops
    // at B.
    PolyMat E(m, std::vector<BasePoly>(m, BasePoly::zero(vars)));
    PolyMat prod = polymat_mul(inv0p, M, B);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            BasePoly e = poly_neg(prod[i][j]);
            if (i == j)
                e = poly_add(e, BasePoly::constant(vars, Rat(1)));
            E[i][j] = e;
        }
    PolyMat series(m, std::vector<BasePoly>(m, BasePoly::zero(vars)));
    for (std::size_t i = 0; i < m; ++i)
        series[i][i] = BasePoly::constant(vars, Rat(1));
    PolyMat power = series;
    for (int k = 1; k <= B; ++k) {
        power = polymat_mul(power, E, B);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                series[i][j] = poly_add(series[i][j], power[i][j]);
    }
    return polymat_mul(series, inv0p, B);
}

// Fiber-linear part of a family as a polynomial matrix P[a][b] = coeff of
// xi_{b+1} in psi[a].
PolyMat fiber_linear_part(const std::vector<FiberSeries>& psi)
{
    std::size_t m = psi.size();
    int vars = psi[0].num_generators();
    PolyMat P(m, std::vector<BasePoly>(m, BasePoly::zero(vars)));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            P[a][b] = psi[a].coeff(Word{static_cast<Letter>(b + 1)});
    return P;
}

std::vector<FiberSeries> linear_family(const PolyMat& P, int n, int N, int B)
{
    std::vector<FiberSeries> out;
    for (int a = 0; a < n; ++a) {
        FiberSeries s(n, N, B);
        for (int b = 0; b < n; ++b)
            s.add_term(Word{static_cast<Letter>(b + 1)}, P[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::vector<FiberSeries> fiber_family_invert(const std::vector<FiberSeries>& psi)
{
    require(!psi.empty(), errc::dimension_mismatch, "empty family");
    int n = static_cast<int>(psi.size());
    int N = psi[0].fiber_trunc();
    int B = psi[0].base_trunc();
    for (const auto& s : psi) {
        require(s.num_generators() == n, errc::dimension_mismatch, "family arity");
        require(s.coeff(Word{}).is_zero(), errc::nonzero_constant_term,
                "family must fix the fiber origin");
    }
    PolyMat P = fiber_linear_part(psi);
    PolyMat Pinv = polymat_invert(P, B);
    std::vector<FiberSeries> lin_inv = linear_family(Pinv, n, N, B);

    // Same degree-by-degree solve as the rational automorphism inverse, with
    // coefficients in the truncated base ring.
    std::vector<FiberSeries> h;
    for (int a = 0; a < n; ++a) {
        FiberSeries ha = lin_inv[static_cast<std::size_t>(a)];
        for (int d = 2; d <= N; ++d) {
            FiberSeries residue =
                fiber_sub(fiber_substitute(ha, psi), FiberSeries::generator(n, N, B, a + 1));
            FiberSeries rd = residue.fiber_degree_part(d);
            if (rd.is_zero())
                continue;
            ha = fiber_sub(ha, fiber_substitute(rd, lin_inv));
        }
        h.push_back(std::move(ha));
    }
    return h;
}

Gauge linear_lift_gauge(const std::vector<BasePoly>& phi, int fiber_trunc, int base_trunc)
{
    require(!phi.empty(), errc::dimension_mismatch, "empty coordinate change");
    int n = static_cast<int>(phi.size());
    Gauge g;
    g.phi = phi;
    PolyMat J = jacobian(phi);
    g.psi = linear_family(J, n, fiber_trunc, base_trunc);
    return g;
}

Gauge compose_gauges(const Gauge& g, const Gauge& h)
{
    require(g.phi.size() == h.phi.size(), errc::dimension_mismatch, "gauge arities differ");
    int B = g.psi[0].base_trunc();
    Gauge out;
    for (std::size_t i = 0; i < h.phi.size(); ++i)
        out.phi.push_back(poly_substitute(h.phi[i], g.phi, B));
    for (std::size_t a = 0; a < h.psi.size(); ++a)
        out.psi.push_back(fiber_substitute(fiber_base_substitute(h.psi[a], g.phi), g.psi));
    return out;
}

namespace {

// One-form with fiber-series components: sum_j db_j (x) comp[j].
using OneFormFiber = std::vector<FiberSeries>;

// Covariant differential of a (form-degree 0) fiber series under the
// connection form theta: de Rham on coefficients plus the letterwise theta
// insertion.
OneFormFiber apply_theta_D(const GKForm& gk, const FiberSeries& s)
{
    int n = gk.n;
    OneFormFiber out(static_cast<std::size_t>(n), FiberSeries(n, gk.fiber_trunc, gk.base_trunc));
    for (const auto& [w, c] : s.terms()) {
        for (int j = 0; j < n; ++j) {
            BasePoly dj = poly_derivative(c, j + 1);
            if (!dj.is_zero()) {
                FiberSeries t(n, gk.fiber_trunc, gk.base_trunc);
                t.add_term(w, dj);
                out[static_cast<std::size_t>(j)] = fiber_add(out[static_cast<std::size_t>(j)], t);
            }
        }
        for (std::size_t r = 0; r < w.size(); ++r) {
            int alpha = w[r] - 1;
            for (int j = 0; j < n; ++j) {
                const FiberSeries& img =
                    gk.theta[static_cast<std::size_t>(j)][static_cast<std::size_t>(alpha)];
                for (const auto& [u, cu] : img.terms()) {
                    if (static_cast<int>(w.size()) - 1 + word_degree(u) > gk.fiber_trunc)
                        break;
                    Word nw;
                    nw.reserve(w.size() - 1 + u.size());
                    nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
                    nw.insert(nw.end(), u.begin(), u.end());
                    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(r) + 1, w.end());
                    FiberSeries t(n, gk.fiber_trunc, gk.base_trunc);
                    t.add_term(nw, poly_mul(c, cu, gk.base_trunc));
                    out[static_cast<std::size_t>(j)] = fiber_add(out[static_cast<std::size_t>(j)], t);
                }
            }
        }
    }
    return out;
}

} // namespace

GKForm gauge_gk(const GKForm& theta, const Gauge& gauge)
{
    int n = theta.n;
    int N = theta.fiber_trunc;
    int B = theta.base_trunc;
    require(static_cast<int>(gauge.phi.size()) == n && static_cast<int>(gauge.psi.size()) == n,
            errc::dimension_mismatch, "gauge arity differs from the chart dimension");
    for (const auto& p : gauge.phi)
        require(is_zero(p.constant_term()), errc::non_recentred,
                "base coordinate change must fix the origin");
    for (const auto& s : gauge.psi) {
        require(s.fiber_trunc() == N && s.base_trunc() == B, errc::dimension_mismatch,
                "gauge truncations differ from the connection form");
        require(s.coeff(Word{}).is_zero(), errc::malformed_gauge,
                "fiber family must fix the fiber origin");
    }

    // the fiber generators transform like the db_i: linear part = Jacobian
    PolyMat J = jacobian(gauge.phi);
    {
        std::vector<RatVec> j0(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                j0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].constant_term();
        require(invert_matrix(j0).has_value(), errc::singular_jacobian,
                "Jacobian at the origin is singular");
    }
    PolyMat P = fiber_linear_part(gauge.psi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            require(P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].truncated(B) ==
                        J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].truncated(B),
                    errc::malformed_gauge,
                    "fiber-linear part of the lift must equal the Jacobian of the base change");

    std::vector<BasePoly> chi = poly_compositional_inverse(gauge.phi, B);
    PolyMat Jchi = jacobian(chi);
    for (auto& row : Jchi)
        for (auto& e : row)
            e = e.truncated(B);

    // eta_a = psi^{-1}(xi_a) with base coefficients composed with chi
    std::vector<FiberSeries> psi_inv = fiber_family_invert(gauge.psi);
    std::vector<FiberSeries> eta;
    eta.reserve(static_cast<std::size_t>(n));
    for (const auto& s : psi_inv)
        eta.push_back(fiber_base_substitute(s, chi));

    GKForm out;
    out.n = n;
    out.fiber_trunc = N;
    out.base_trunc = B;
    out.theta.assign(static_cast<std::size_t>(n),
                     std::vector<FiberSeries>(static_cast<std::size_t>(n), FiberSeries(n, N, B)));

    for (int a = 0; a < n; ++a) {
        // E_a = Psi^{-1}( D( Psi(xi_a) ) )
        OneFormFiber E = apply_theta_D(theta, gauge.psi[static_cast<std::size_t>(a)]);
        // pull each component back through Psi^{-1} and transform the db slot
        std::vector<FiberSeries> pulled;
        pulled.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            pulled.push_back(
                fiber_substitute(fiber_base_substitute(E[static_cast<std::size_t>(j)], chi), eta));
        for (int l = 0; l < n; ++l) {
            FiberSeries comp(n, N, B);
            for (int j = 0; j < n; ++j)
                comp = fiber_add(comp, fiber_scale(Jchi[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)],
                                                   pulled[static_cast<std::size_t>(j)]));
            out.theta[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)] = comp;
        }
    }
    require(out.leading_is_tautological(), errc::malformed_gauge,
            "gauge did not preserve the leading normalization");
    return out;
}

} // namespace ncdisk

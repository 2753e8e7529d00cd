#include "ncdisk/ncconn.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "ncdisk/lcs.hpp"

namespace ncdisk {

DGAElement::DGAElement(int m, int fiber_trunc, int base_trunc)
    : m_(m), fiber_trunc_(fiber_trunc), base_trunc_(base_trunc)
{
    require(m >= 1, errc::dimension_mismatch, "need at least one base variable");
    require(fiber_trunc >= 0 && base_trunc >= 0, errc::degree_out_of_range, "negative truncation");
}

DGAElement DGAElement::one(int m, int N, int B)
{
    DGAElement e(m, N, B);
    e.add_term(FormSet{}, Word{}, BasePoly::constant(m, Rat(1)));
    return e;
}

DGAElement DGAElement::base_variable(int m, int N, int B, int i)
{
    DGAElement e(m, N, B);
    e.add_term(FormSet{}, Word{}, BasePoly::variable(m, i));
    return e;
}

DGAElement DGAElement::base_one_form(int m, int N, int B, int i)
{
    require(i >= 1 && i <= m, errc::index_out_of_range, "form index");
    DGAElement e(m, N, B);
    e.add_term(FormSet{static_cast<Letter>(i)}, Word{}, BasePoly::constant(m, Rat(1)));
    return e;
}

DGAElement DGAElement::fiber_generator(int m, int N, int B, int i)
{
    require(i >= 1 && i <= m, errc::index_out_of_range, "fiber index");
    require(N >= 1, errc::degree_out_of_range, "fiber truncation below 1");
    DGAElement e(m, N, B);
    e.add_term(FormSet{}, Word{static_cast<Letter>(i)}, BasePoly::constant(m, Rat(1)));
    return e;
}

DGAElement DGAElement::from_fiber_series(const FiberSeries& s)
{
    DGAElement e(s.num_generators(), s.fiber_trunc(), s.base_trunc());
    for (const auto& [w, c] : s.terms())
        e.add_term(FormSet{}, w, c);
    return e;
}

void DGAElement::add_term(const FormSet& s, const Word& w, const BasePoly& c)
{
    require(static_cast<int>(s.size()) <= m_, errc::degree_out_of_range, "form degree exceeds m");
    for (std::size_t i = 0; i < s.size(); ++i) {
        require(s[i] >= 1 && static_cast<int>(s[i]) <= m_, errc::index_out_of_range, "form index");
        require(i == 0 || s[i - 1] < s[i], errc::index_out_of_range, "form set must increase");
    }
    check_word(w, m_);
    require(word_degree(w) <= fiber_trunc_, errc::degree_out_of_range,
            "fiber degree exceeds truncation");
    require(c.vars() == m_, errc::dimension_mismatch, "coefficient variable count");
    BasePoly cut = c.truncated(base_trunc_);
    if (cut.is_zero())
        return;
    Key k{s, w};
    auto [it, inserted] = terms_.emplace(std::move(k), cut);
    if (!inserted) {
        it->second = poly_add(it->second, cut);
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BasePoly DGAElement::coeff(const FormSet& s, const Word& w) const
{
    auto it = terms_.find(Key{s, w});
    return it == terms_.end() ? BasePoly::zero(m_) : it->second;
}

int DGAElement::max_form_degree() const
{
    int d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, static_cast<int>(k.form.size()));
    return d;
}

bool DGAElement::is_form_degree_zero() const
{
    return max_form_degree() == 0;
}

int DGAElement::max_fiber_degree() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, word_degree(k.fiber));
    return d;
}

namespace {

void check_dga_shape(const DGAElement& a, const DGAElement& b)
{
    require(a.vars() == b.vars() && a.fiber_trunc() == b.fiber_trunc() &&
                a.base_trunc() == b.base_trunc(),
            errc::dimension_mismatch, "DGA element shapes differ");
}

} // namespace

DGAElement dga_add(const DGAElement& a, const DGAElement& b)
{
    check_dga_shape(a, b);
    DGAElement out = a;
    for (const auto& [k, c] : b.terms())
        out.add_term(k.form, k.fiber, c);
    return out;
}

DGAElement dga_neg(const DGAElement& a)
{
    DGAElement out(a.vars(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [k, c] : a.terms())
        out.add_term(k.form, k.fiber, poly_neg(c));
    return out;
}

DGAElement dga_sub(const DGAElement& a, const DGAElement& b)
{
    return dga_add(a, dga_neg(b));
}

DGAElement dga_scale(const Rat& c, const DGAElement& a)
{
    DGAElement out(a.vars(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [k, q] : a.terms())
        out.add_term(k.form, k.fiber, poly_scale(c, q));
    return out;
}

DGAElement dga_mul(const DGAElement& a, const DGAElement& b)
{
    check_dga_shape(a, b);
    DGAElement out(a.vars(), a.fiber_trunc(), a.base_trunc());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (word_degree(ka.fiber) + word_degree(kb.fiber) > a.fiber_trunc())
                continue;
            FormSet merged;
            int sign = merge_form_sign(ka.form, kb.form, merged);
            if (sign == 0)
                continue;
            // fiber letters are even: no sign from moving forms across them
            out.add_term(merged, word_concat(ka.fiber, kb.fiber),
                         poly_scale(Rat(sign), poly_mul(ca, cb, a.base_trunc())));
        }
    return out;
}

// ---------------------------------------------------------------------------
// ConnectionData

ConnectionData::ConnectionData(int n, int fiber_trunc, int base_trunc)
    : n_(n), fiber_trunc_(fiber_trunc), base_trunc_(base_trunc)
{
    require(n >= 1, errc::dimension_mismatch, "need at least one generator");
    require(fiber_trunc >= 1, errc::degree_out_of_range, "fiber truncation below 1");
    require(base_trunc >= 0, errc::degree_out_of_range, "negative base truncation");
}

void ConnectionData::set_entry(const Key& k, const BasePoly& c)
{
    require(k.from >= 1 && k.from <= n_, errc::index_out_of_range, "entry source index");
    require(k.form >= 1 && k.form <= n_, errc::index_out_of_range, "entry form index");
    check_word(k.word, n_);
    require(word_degree(k.word) <= std::max(fiber_trunc_ - 1, 0), errc::degree_out_of_range,
            "tail degree exceeds fiber truncation - 1");
    require(c.vars() == n_, errc::dimension_mismatch, "coefficient variable count");
    BasePoly cut = c.truncated(base_trunc_);
    if (cut.is_zero())
        entries_.erase(k);
    else
        entries_[k] = cut;
}

BasePoly ConnectionData::entry(const Key& k) const
{
    auto it = entries_.find(k);
    return it == entries_.end() ? BasePoly::zero(n_) : it->second;
}

ConnectionData::EntryMap ConnectionData::tail(int k) const
{
    EntryMap out;
    for (const auto& [key, c] : entries_)
        if (word_degree(key.word) == k)
            out.emplace(key, c);
    return out;
}

ConnectionData connection_from_gk(const GKForm& theta)
{
    int n = theta.n;
    ConnectionData c(n, theta.fiber_trunc, theta.base_trunc);
    require(static_cast<int>(theta.theta.size()) == n, errc::malformed_gk,
            "connection form needs one block per base direction");
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(theta.theta[static_cast<std::size_t>(i)].size()) == n,
                errc::malformed_gk, "block needs one image per generator");
        for (int a = 0; a < n; ++a) {
            const FiberSeries& img = theta.theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
            BasePoly lead = img.coeff(Word{});
            BasePoly want = (i == a) ? BasePoly::constant(n, Rat(1)) : BasePoly::zero(n);
            require(lead == want, errc::malformed_gk,
                    "fiber-constant components must be the tautological normalization");
            for (const auto& [w, q] : img.terms()) {
                if (word_degree(w) > theta.fiber_trunc - 1)
                    continue; // tails beyond the stored range are invisible at this truncation
                c.set_entry(ConnectionData::Key{a + 1, i + 1, w}, q);
            }
        }
    }
    return c;
}

GKForm gk_from_connection(const ConnectionData& c)
{
    GKForm gk;
    gk.n = c.num_generators();
    gk.fiber_trunc = c.fiber_trunc();
    gk.base_trunc = c.base_trunc();
    gk.theta.assign(static_cast<std::size_t>(gk.n),
                    std::vector<FiberSeries>(static_cast<std::size_t>(gk.n),
                                             FiberSeries(gk.n, gk.fiber_trunc, gk.base_trunc)));
    for (const auto& [k, q] : c.entries())
        gk.theta[static_cast<std::size_t>(k.form - 1)][static_cast<std::size_t>(k.from - 1)]
            .add_term(k.word, q);
    return gk;
}

DGAElement apply_D(const ConnectionData& c, const DGAElement& e)
{
    require(c.num_generators() == e.vars() && c.fiber_trunc() == e.fiber_trunc() &&
                c.base_trunc() == e.base_trunc(),
            errc::dimension_mismatch, "connection and element shapes differ");
    int n = c.num_generators();
    DGAElement out(n, e.fiber_trunc(), e.base_trunc());

    for (const auto& [key, p] : e.terms()) {
        // de Rham part on the coefficient
        for (int j = 1; j <= n; ++j) {
            BasePoly dj = poly_derivative(p, j);
            if (dj.is_zero())
                continue;
            FormSet merged;
            int sign = merge_form_sign(FormSet{static_cast<Letter>(j)}, key.form, merged);
            if (sign == 0)
                continue;
            out.add_term(merged, key.fiber, poly_scale(Rat(sign), dj));
        }
        // letterwise action on the fiber word
        const Word& w = key.fiber;
        for (std::size_t r = 0; r < w.size(); ++r) {
            int alpha = w[r];
            for (const auto& [ck, q] : c.entries()) {
                if (ck.from != alpha)
                    continue;
                if (static_cast<int>(w.size()) - 1 + word_degree(ck.word) > e.fiber_trunc())
                    continue;
                FormSet merged;
                int sign = merge_form_sign(FormSet{static_cast<Letter>(ck.form)}, key.form, merged);
                if (sign == 0)
                    continue;
                Word nw;
                nw.reserve(w.size() - 1 + ck.word.size());
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
                nw.insert(nw.end(), ck.word.begin(), ck.word.end());
                nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(r) + 1, w.end());
                out.add_term(merged, nw, poly_scale(Rat(sign), poly_mul(p, q, e.base_trunc())));
            }
        }
    }
    return out;
}

FlatnessReport flatness_check(const ConnectionData& c)
{
    int n = c.num_generators();
    FlatnessReport rep;
    for (int i = 1; i <= n; ++i) {
        DGAElement b = DGAElement::base_variable(n, c.fiber_trunc(), c.base_trunc(), i);
        DGAElement dd = apply_D(c, apply_D(c, b));
        if (!dd.is_zero()) {
            rep.flat = false;
            rep.witness_generator = "b" + std::to_string(i);
            rep.failure = dd;
            return rep;
        }
    }
    for (int i = 1; i <= n; ++i) {
        DGAElement g = DGAElement::fiber_generator(n, c.fiber_trunc(), c.base_trunc(), i);
        DGAElement dd = apply_D(c, apply_D(c, g));
        if (!dd.is_zero()) {
            rep.flat = false;
            rep.witness_generator = "x" + std::to_string(i);
            rep.failure = dd;
            return rep;
        }
    }
    return rep;
}

ShapeReport validate_twisted_shape(const ConnectionData& c)
{
    int n = c.num_generators();
    ShapeReport rep;
    // leading identification: D(xi_a) = db_a mod fiber-positive terms
    for (int a = 1; a <= n; ++a)
        for (int j = 1; j <= n; ++j) {
            BasePoly lead = c.entry(ConnectionData::Key{a, j, Word{}});
            BasePoly want = (a == j) ? BasePoly::constant(n, Rat(1)) : BasePoly::zero(n);
            if (!(lead == want)) {
                rep.ok = false;
                rep.violation = "leading identification fails on x" + std::to_string(a);
                return rep;
            }
        }
    // D restricted to the base is the de Rham differential
    for (int i = 1; i <= n; ++i) {
        DGAElement b = DGAElement::base_variable(n, c.fiber_trunc(), c.base_trunc(), i);
        DGAElement want = DGAElement::base_one_form(n, c.fiber_trunc(), c.base_trunc(), i);
        if (!(apply_D(c, b) == want)) {
            rep.ok = false;
            rep.violation = "D(b" + std::to_string(i) + ") is not db" + std::to_string(i);
            return rep;
        }
    }
    return rep;
}

namespace {

std::vector<ExpVec> monomials_up_to(int m, int dmax)
{
    std::vector<ExpVec> cur{ExpVec(static_cast<std::size_t>(m), 0)};
    std::vector<ExpVec> all = cur;
    for (int d = 1; d <= dmax; ++d) {
        std::vector<ExpVec> nxt;
        for (const auto& e : cur)
            for (int i = 0; i < m; ++i) {
                ExpVec f = e;
                ++f[static_cast<std::size_t>(i)];
                nxt.push_back(f);
            }
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        all.insert(all.end(), nxt.begin(), nxt.end());
        cur = std::move(nxt);
    }
    std::sort(all.begin(), all.end(), ExpVecLess{});
    return all;
}

} // namespace

long long FlatSections::census(int fiber_degree) const
{
    long long c = 0;
    for (int d : pivot_fiber_degree)
        if (d == fiber_degree)
            ++c;
    return c;
}

FlatSections flat_sections(const ConnectionData& c, int fiber_deg_max, int base_deg_max)
{
    int n = c.num_generators();
    require(fiber_deg_max >= 0 && fiber_deg_max <= c.fiber_trunc(), errc::degree_out_of_range,
            "fiber degree bound exceeds the truncation");
    require(base_deg_max >= 0 && base_deg_max <= c.base_trunc(), errc::degree_out_of_range,
            "base degree bound exceeds the truncation");

    // columns: fiber degree descending, then word, then base monomial
    std::vector<ExpVec> monos = monomials_up_to(n, base_deg_max);
    struct Column {
        Word w;
        ExpVec e;
    };
    std::vector<Column> cols;
    for (int fd = fiber_deg_max; fd >= 0; --fd)
        for (const Word& w : words_of_degree(n, fd))
            for (const ExpVec& e : monos)
                cols.push_back(Column{w, e});
    require(static_cast<long long>(cols.size()) <= degree_cap(), errc::cap_exceeded,
            "flat-section space exceeds the enumeration cap");

    // image coordinates: (form index, fiber word, base monomial)
    struct RowKey {
        FormSet s;
        Word w;
        ExpVec e;
        friend bool operator<(const RowKey& a, const RowKey& b)
        {
            if (a.s != b.s)
                return a.s < b.s;
            if (GradedLexLess{}(a.w, b.w))
                return true;
            if (GradedLexLess{}(b.w, a.w))
                return false;
            return ExpVecLess{}(a.e, b.e);
        }
    };
    std::map<RowKey, std::size_t> row_index;
    std::vector<std::map<std::size_t, Rat>> col_images(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        DGAElement e(n, c.fiber_trunc(), c.base_trunc());
        e.add_term(FormSet{}, cols[k].w, BasePoly::monomial(n, cols[k].e, Rat(1)));
        DGAElement im = apply_D(c, e);
        for (const auto& [key, p] : im.terms())
            for (const auto& [mono, q] : p.terms()) {
                RowKey rk{key.form, key.fiber, mono};
                auto [it, fresh] = row_index.try_emplace(rk, row_index.size());
                col_images[k][it->second] += q;
            }
    }
    std::vector<RatVec> rows(row_index.size(), RatVec(cols.size(), Rat(0)));
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (const auto& [r, q] : col_images[k])
            rows[r][k] = q;

    RowSpace ker = kernel_of(rows, cols.size());

    FlatSections out;
    for (std::size_t i = 0; i < ker.rows().size(); ++i) {
        const RatVec& v = ker.rows()[i];
        DGAElement e(n, c.fiber_trunc(), c.base_trunc());
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (!is_zero(v[k]))
                e.add_term(FormSet{}, cols[k].w, BasePoly::monomial(n, cols[k].e, v[k]));
        out.basis.push_back(std::move(e));
        out.pivot_fiber_degree.push_back(word_degree(cols[ker.pivots()[i]].w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

std::string ConnectionData::to_json() const
{
    nlohmann::json j;
    j["n"] = n_;
    j["fiber_trunc"] = fiber_trunc_;
    j["base_trunc"] = base_trunc_;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, c] : entries_) {
        nlohmann::json e;
        e["from"] = k.from;
        e["form"] = k.form;
        e["word"] = k.word;
        e["coeff_poly"] = poly_format(c);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

ConnectionData ConnectionData::from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), errc::io_error, "invalid JSON");
    require(j.contains("n") && j.contains("fiber_trunc") && j.contains("base_trunc"),
            errc::io_error, "connection JSON needs n, fiber_trunc, base_trunc");
    ConnectionData c(j["n"].get<int>(), j["fiber_trunc"].get<int>(), j["base_trunc"].get<int>());
    for (const auto& e : j.value("entries", nlohmann::json::array())) {
        Key k;
        k.from = e.at("from").get<int>();
        k.form = e.at("form").get<int>();
        for (const auto& l : e.at("word"))
            k.word.push_back(static_cast<Letter>(l.get<int>()));
        BasePoly p = poly_parse(e.at("coeff_poly").get<std::string>(), c.num_generators());
        BasePoly prev = c.entry(k);
        c.set_entry(k, poly_add(prev, p));
    }
    return c;
}

std::string dga_format(const DGAElement& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, p] : e.terms()) {
        for (const auto& [mono, q] : p.terms()) {
            Rat a = abs(q);
            bool neg = sgn(q) < 0;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;

            std::vector<std::string> blocks;
            // base monomial factors
            std::string base;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (mono[i] == 0)
                    continue;
                if (!base.empty())
                    base += "*";
                base += "b" + std::to_string(i + 1);
                if (mono[i] > 1)
                    base += "^" + std::to_string(mono[i]);
            }
            if (!base.empty())
                blocks.push_back(base);
            // form factors joined by '^'
            if (!key.form.empty()) {
                std::string fs;
                for (std::size_t i = 0; i < key.form.size(); ++i)
                    fs += (i ? "^db" : "db") + std::to_string(int(key.form[i]));
                blocks.push_back(fs);
            }
            // fiber word
            if (!key.fiber.empty()) {
                std::string w;
                std::size_t i = 0;
                while (i < key.fiber.size()) {
                    std::size_t jj = i;
                    while (jj < key.fiber.size() && key.fiber[jj] == key.fiber[i])
                        ++jj;
                    if (!w.empty())
                        w += "*";
                    w += "x" + std::to_string(int(key.fiber[i]));
                    if (jj - i > 1)
                        w += "^" + std::to_string(jj - i);
                    i = jj;
                }
                blocks.push_back(w);
            }

            std::string body;
            for (std::size_t i = 0; i < blocks.size(); ++i)
                body += (i ? "*" : "") + blocks[i];
            if (body.empty()) {
                os << rat_to_string(a);
            } else {
                if (a != 1)
                    os << rat_to_string(a) << "*";
                os << body;
            }
        }
    }
    return os.str();
}

DGAElement dga_parse(const std::string& text, int m, int fiber_trunc, int base_trunc)
{
    DGAElement out(m, fiber_trunc, base_trunc);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto syntax = [&](const std::string& msg) -> void {
        fail(errc::syntax_error, msg + " at position " + std::to_string(pos));
    };
    auto digits = [&]() -> std::string {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            syntax("expected digits");
        return text.substr(start, pos - start);
    };
    auto accept = [&](char c) -> bool {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    };
    auto peek = [&]() -> char {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    };

    skip_ws();
    if (pos >= text.size())
        syntax("empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size())
            break;
        int sign = 1;
        if (accept('-'))
            sign = -1;
        else if (accept('+')) {
            if (first)
                syntax("leading '+'");
        } else if (!first)
            syntax("expected '+' or '-'");
        first = false;

        Rat coeff(sign);
        ExpVec mono(static_cast<std::size_t>(m), 0);
        std::vector<int> forms;
        int form_sign = 1;
        Word fiber;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            std::string rat = num;
            if (accept('/'))
                rat += "/" + digits();
            coeff *= rat_from_string(rat);
            need_factor = accept('*');
        }
        while (need_factor) {
            skip_ws();
            if (pos + 1 < text.size() && text[pos] == 'd' && text[pos + 1] == 'b') {
                // a chain of wedge factors db<i>^db<j>^...
                while (true) {
                    pos += 2;
                    long idx = std::stol(digits());
                    if (idx < 1 || idx > m)
                        fail(errc::index_out_of_range, "form index db" + std::to_string(idx));
                    // insertion sort with sign; duplicates kill the chain
                    int at = static_cast<int>(forms.size());
                    for (int i = 0; i < static_cast<int>(forms.size()); ++i)
                        if (forms[static_cast<std::size_t>(i)] == static_cast<int>(idx))
                            syntax("repeated form factor");
                        else if (forms[static_cast<std::size_t>(i)] > static_cast<int>(idx)) {
                            at = i;
                            break;
                        }
                    form_sign *= ((static_cast<int>(forms.size()) - at) % 2 == 0) ? 1 : -1;
                    forms.insert(forms.begin() + at, static_cast<int>(idx));
                    skip_ws();
                    if (pos + 2 < text.size() && text[pos] == '^' && text[pos + 1] == 'd' &&
                        text[pos + 2] == 'b') {
                        ++pos;
                        continue;
                    }
                    break;
                }
            } else if (peek() == 'b') {
                ++pos;
                long idx = std::stol(digits());
                if (idx < 1 || idx > m)
                    fail(errc::index_out_of_range, "base variable b" + std::to_string(idx));
                long pw = 1;
                if (accept('^'))
                    pw = std::stol(digits());
                mono[static_cast<std::size_t>(idx - 1)] += static_cast<int>(pw);
            } else if (peek() == 'x') {
                ++pos;
                long idx = std::stol(digits());
                if (idx < 1 || idx > m)
                    fail(errc::index_out_of_range, "fiber generator x" + std::to_string(idx));
                long pw = 1;
                if (accept('^'))
                    pw = std::stol(digits());
                for (long k = 0; k < pw; ++k)
                    fiber.push_back(static_cast<Letter>(idx));
                if (word_degree(fiber) > fiber_trunc)
                    fail(errc::degree_out_of_range, "fiber degree exceeds truncation");
            } else {
                syntax("expected factor");
            }
            need_factor = accept('*');
        }
        FormSet fs;
        for (int f : forms)
            fs.push_back(static_cast<Letter>(f));
        out.add_term(fs, fiber, BasePoly::monomial(m, mono, coeff * Rat(form_sign)));
    }
    return out;
}

} // namespace ncdisk

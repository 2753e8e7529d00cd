#include "ncdisk/ncseries.hpp"

#include <cctype>
#include <sstream>

namespace ncdisk {

namespace {

void check_same_shape(int na, int ta, int nb, int tb)
{
    require(na == nb, errc::dimension_mismatch,
            "generator counts differ: " + std::to_string(na) + " vs " + std::to_string(nb));
    require(ta == tb, errc::dimension_mismatch,
            "truncation orders differ: " + std::to_string(ta) + " vs " + std::to_string(tb));
}

} // namespace

NCSeries::NCSeries(int num_generators, int trunc) : n_(num_generators), trunc_(trunc)
{
    require(n_ >= 1, errc::dimension_mismatch, "need at least one generator");
    require(trunc_ >= 0, errc::degree_out_of_range, "negative truncation order");
}

NCSeries NCSeries::constant(int n, int trunc, Rat c)
{
    NCSeries s(n, trunc);
    s.add_term(Word{}, c);
    return s;
}

NCSeries NCSeries::generator(int n, int trunc, int index)
{
    require(index >= 1 && index <= n, errc::index_out_of_range,
            "generator index " + std::to_string(index));
    require(trunc >= 1, errc::degree_out_of_range, "truncation order below 1");
    NCSeries s(n, trunc);
    s.add_term(Word{static_cast<Letter>(index)}, Rat(1));
    return s;
}

NCSeries NCSeries::monomial(int n, int trunc, Word w, Rat c)
{
    check_word(w, n);
    require(word_degree(w) <= trunc, errc::degree_out_of_range,
            "monomial degree exceeds truncation order");
    NCSeries s(n, trunc);
    s.add_term(w, c);
    return s;
}

Rat NCSeries::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NCSeries::set_coeff(Word w, Rat c)
{
    if (ncdisk::is_zero(c))
        terms_.erase(w);
    else
        terms_[std::move(w)] = std::move(c);
}

void NCSeries::add_term(const Word& w, const Rat& c)
{
    if (ncdisk::is_zero(c))
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (ncdisk::is_zero(it->second))
            terms_.erase(it);
    }
}

int NCSeries::min_degree() const
{
    if (terms_.empty())
        return trunc_ + 1;
    return word_degree(terms_.begin()->first);
}

int NCSeries::max_degree() const
{
    if (terms_.empty())
        return -1;
    return word_degree(terms_.rbegin()->first);
}

NCSeries NCSeries::degree_part(int d) const
{
    NCSeries out(n_, trunc_);
    for (const auto& [w, c] : terms_)
        if (word_degree(w) == d)
            out.add_term(w, c);
    return out;
}

NCSeries NCSeries::lifted_to(int trunc) const
{
    require(trunc >= trunc_, errc::degree_out_of_range, "lifted_to only raises the truncation order");
    NCSeries out(n_, trunc);
    for (const auto& [w, c] : terms_)
        out.add_term(w, c);
    return out;
}

NCSeries series_add(const NCSeries& a, const NCSeries& b)
{
    check_same_shape(a.num_generators(), a.trunc(), b.num_generators(), b.trunc());
    NCSeries out = a;
    for (const auto& [w, c] : b.terms())
        out.add_term(w, c);
    return out;
}

NCSeries series_neg(const NCSeries& a)
{
    NCSeries out(a.num_generators(), a.trunc());
    for (const auto& [w, c] : a.terms())
        out.add_term(w, -c);
    return out;
}

NCSeries series_sub(const NCSeries& a, const NCSeries& b)
{
    return series_add(a, series_neg(b));
}

NCSeries series_scale(const Rat& c, const NCSeries& a)
{
    NCSeries out(a.num_generators(), a.trunc());
    if (is_zero(c))
        return out;
    for (const auto& [w, k] : a.terms())
        out.add_term(w, c * k);
    return out;
}

NCSeries series_mul(const NCSeries& a, const NCSeries& b)
{
    check_same_shape(a.num_generators(), a.trunc(), b.num_generators(), b.trunc());
    NCSeries out(a.num_generators(), a.trunc());
    int trunc = a.trunc();
    for (const auto& [wa, ca] : a.terms()) {
        int da = word_degree(wa);
        if (da > trunc)
            continue;
        for (const auto& [wb, cb] : b.terms()) {
            if (da + word_degree(wb) > trunc)
                break; // terms are sorted by degree
            out.add_term(word_concat(wa, wb), ca * cb);
        }
    }
    return out;
}

NCSeries series_commutator(const NCSeries& a, const NCSeries& b)
{
    return series_sub(series_mul(a, b), series_mul(b, a));
}

NCSeries series_substitute(const NCSeries& a, const std::vector<NCSeries>& images)
{
    require(static_cast<int>(images.size()) == a.num_generators(), errc::dimension_mismatch,
            "need one image per generator");
    for (const auto& im : images) {
        check_same_shape(a.num_generators(), a.trunc(), im.num_generators(), im.trunc());
        require(is_zero(im.constant_term()), errc::divergent_substitution,
                "image has nonzero constant term");
    }
    NCSeries out(a.num_generators(), a.trunc());
    for (const auto& [w, c] : a.terms()) {
        NCSeries acc = NCSeries::constant(a.num_generators(), a.trunc(), c);
        for (Letter l : w) {
            acc = series_mul(acc, images[static_cast<size_t>(l - 1)]);
            if (acc.is_zero())
                break;
        }
        out = series_add(out, acc);
    }
    return out;
}

CommSeries::CommSeries(int num_generators, int trunc) : n_(num_generators), trunc_(trunc)
{
    require(n_ >= 1, errc::dimension_mismatch, "need at least one generator");
    require(trunc_ >= 0, errc::degree_out_of_range, "negative truncation order");
}

CommSeries CommSeries::constant(int n, int trunc, Rat c)
{
    CommSeries s(n, trunc);
    s.add_term(ExpVec(static_cast<size_t>(n), 0), c);
    return s;
}

CommSeries CommSeries::generator(int n, int trunc, int index)
{
    require(index >= 1 && index <= n, errc::index_out_of_range,
            "generator index " + std::to_string(index));
    CommSeries s(n, trunc);
    ExpVec e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(index - 1)] = 1;
    s.add_term(e, Rat(1));
    return s;
}

Rat CommSeries::coeff(const ExpVec& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void CommSeries::add_term(const ExpVec& e, const Rat& c)
{
    if (ncdisk::is_zero(c))
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (ncdisk::is_zero(it->second))
            terms_.erase(it);
    }
}

CommSeries comm_add(const CommSeries& a, const CommSeries& b)
{
    check_same_shape(a.num_generators(), a.trunc(), b.num_generators(), b.trunc());
    CommSeries out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, c);
    return out;
}

CommSeries comm_sub(const CommSeries& a, const CommSeries& b)
{
    check_same_shape(a.num_generators(), a.trunc(), b.num_generators(), b.trunc());
    CommSeries out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, -c);
    return out;
}

CommSeries comm_mul(const CommSeries& a, const CommSeries& b)
{
    check_same_shape(a.num_generators(), a.trunc(), b.num_generators(), b.trunc());
    CommSeries out(a.num_generators(), a.trunc());
    int trunc = a.trunc();
    size_t n = static_cast<size_t>(a.num_generators());
    for (const auto& [ea, ca] : a.terms()) {
        int da = expvec_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + expvec_degree(eb) > trunc)
                break;
            ExpVec e(n);
            for (size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

CommSeries comm_substitute(const CommSeries& a, const std::vector<CommSeries>& images)
{
    require(static_cast<int>(images.size()) == a.num_generators(), errc::dimension_mismatch,
            "need one image per generator");
    for (const auto& im : images) {
        check_same_shape(a.num_generators(), a.trunc(), im.num_generators(), im.trunc());
        require(is_zero(im.constant_term()), errc::divergent_substitution,
                "image has nonzero constant term");
    }
    CommSeries out(a.num_generators(), a.trunc());
    for (const auto& [e, c] : a.terms()) {
        CommSeries acc = CommSeries::constant(a.num_generators(), a.trunc(), c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i] && !acc.is_zero(); ++k)
                acc = comm_mul(acc, images[i]);
        out = comm_add(out, acc);
    }
    return out;
}

CommSeries series_abelianize(const NCSeries& a)
{
    CommSeries out(a.num_generators(), a.trunc());
    size_t n = static_cast<size_t>(a.num_generators());
    for (const auto& [w, c] : a.terms()) {
        ExpVec e(n, 0);
        for (Letter l : w)
            ++e[static_cast<size_t>(l - 1)];
        out.add_term(e, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string& msg)
    {
        fail(errc::syntax_error, msg + " at position " + std::to_string(pos));
    }
    std::string digits()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            error("expected digits");
        return s.substr(start, pos - start);
    }
    long parse_index()
    {
        std::string d = digits();
        if (d.size() > 6)
            error("index too large");
        return std::stol(d);
    }
    Rat parse_rational()
    {
        std::string num = digits();
        if (accept('/')) {
            std::string den = digits();
            return rat_from_string(num + "/" + den);
        }
        return rat_from_string(num);
    }
};

} // namespace

NCSeries series_parse(const std::string& text, int n, int trunc)
{
    NCSeries out(n, trunc);
    Scanner sc{text};
    if (sc.eof())
        sc.error("empty input");
    bool first = true;
    while (!sc.eof()) {
        int sign = 1;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+')) {
            if (first)
                sc.error("leading '+'");
        } else if (!first)
            sc.error("expected '+' or '-'");
        first = false;

        Rat coeff(sign);
        Word w;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            coeff *= sc.parse_rational();
            need_factor = sc.accept('*'); // bare rational = unit word
        }
        while (need_factor) {
            if (sc.peek() != 'x')
                sc.error("expected generator 'x<i>'");
            ++sc.pos;
            long idx = sc.parse_index();
            if (idx < 1 || idx > n)
                fail(errc::index_out_of_range,
                     "generator x" + std::to_string(idx) + " outside [1," + std::to_string(n) + "]");
            long pow = 1;
            if (sc.accept('^')) {
                std::string p = sc.digits();
                if (p.size() > 4)
                    sc.error("power too large");
                pow = std::stol(p);
            }
            for (long k = 0; k < pow; ++k)
                w.push_back(static_cast<Letter>(idx));
            if (static_cast<int>(w.size()) > trunc)
                fail(errc::degree_out_of_range,
                     "term degree exceeds truncation order " + std::to_string(trunc));
            need_factor = sc.accept('*');
        }
        out.add_term(w, coeff);
    }
    return out;
}

namespace {

std::string word_to_string(const Word& w)
{
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(int(w[i]));
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string expvec_to_string(const ExpVec& e)
{
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(i + 1);
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

// Renders one (monomial string, coefficient) pair into the running sum.
void append_term(std::string& out, const Rat& c, const std::string& mono)
{
    Rat a = abs(c);
    bool neg = sgn(c) < 0;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (mono.empty()) {
        out += rat_to_string(a);
        return;
    }
    if (a != 1)
        out += rat_to_string(a) + "*";
    out += mono;
}

} // namespace

std::string series_format(const NCSeries& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [w, c] : a.terms())
        append_term(out, c, word_to_string(w));
    return out;
}

std::string comm_format(const CommSeries& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : a.terms())
        append_term(out, c, expvec_to_string(e));
    return out;
}

CommSeries comm_parse(const std::string& text, int n, int trunc)
{
    NCSeries nc = series_parse(text, n, trunc);
    return series_abelianize(nc);
}

} // namespace ncdisk

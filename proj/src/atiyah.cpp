#include "ncdisk/atiyah.hpp"

#include <json.hpp>

#include "ncdisk/lcs.hpp"

namespace ncdisk {

namespace {

void check_index(int v, int n, const char* what)
{
    require(v >= 1 && v <= n, errc::index_out_of_range,
            std::string(what) + " index " + std::to_string(v));
}

} // namespace

void BilinearMapForm::add_entry(const Key& k, const BasePoly& c)
{
    check_index(k.base, n_, "base");
    check_index(k.in1, n_, "input");
    check_index(k.in2, n_, "input");
    check_index(k.out, n_, "output");
    require(c.vars() == n_, errc::dimension_mismatch, "coefficient variable count");
    if (c.is_zero())
        return;
    auto [it, inserted] = entries_.emplace(k, c);
    if (!inserted) {
        it->second = poly_add(it->second, c);
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

BasePoly BilinearMapForm::entry(const Key& k) const
{
    auto it = entries_.find(k);
    return it == entries_.end() ? BasePoly::zero(n_) : it->second;
}

void BilinearMap::add_entry(const Key& k, const BasePoly& c)
{
    check_index(k.in1, n_, "input");
    check_index(k.in2, n_, "input");
    check_index(k.out, n_, "output");
    require(c.vars() == n_, errc::dimension_mismatch, "coefficient variable count");
    if (c.is_zero())
        return;
    auto [it, inserted] = entries_.emplace(k, c);
    if (!inserted) {
        it->second = poly_add(it->second, c);
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

BasePoly BilinearMap::entry(const Key& k) const
{
    auto it = entries_.find(k);
    return it == entries_.end() ? BasePoly::zero(n_) : it->second;
}

BilinearMapForm bilinear_d(const BilinearMap& g)
{
    BilinearMapForm out(g.num_generators());
    for (const auto& [k, c] : g.entries())
        for (int i = 1; i <= g.num_generators(); ++i) {
            BasePoly di = poly_derivative(c, i);
            if (!di.is_zero())
                out.add_entry(BilinearMapForm::Key{i, k.in1, k.in2, k.out}, di);
        }
    return out;
}

BilinearMap connection_weight_block(const ConnectionData& c)
{
    BilinearMap g(c.num_generators());
    for (const auto& [k, q] : c.tail(1))
        g.add_entry(BilinearMap::Key{k.form, int(k.word[0]), k.from}, q);
    return g;
}

BilinearMapForm omega2_extract(const ConnectionData& c)
{
    return bilinear_d(connection_weight_block(c));
}

BilinearMapForm cech_difference(const BilinearMapForm& a, const BilinearMapForm& b)
{
    require(a.num_generators() == b.num_generators(), errc::dimension_mismatch,
            "chart dimensions differ");
    BilinearMapForm out = a;
    for (const auto& [k, c] : b.entries())
        out.add_entry(k, poly_neg(c));
    return out;
}

CoboundaryResult coboundary_solve(const BilinearMapForm& delta, int base_deg_max)
{
    int n = delta.num_generators();
    require(base_deg_max >= 0, errc::degree_out_of_range, "negative degree bound");
    require(static_cast<long long>(n) * n * n <= degree_cap(), errc::cap_exceeded,
            "bilinear index space exceeds the cap");

    CoboundaryResult res;
    res.bound = base_deg_max;

    BilinearMap g(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                std::vector<BasePoly> comps;
                comps.reserve(static_cast<std::size_t>(n));
                bool any = false;
                for (int i = 1; i <= n; ++i) {
                    BasePoly c = delta.entry(BilinearMapForm::Key{i, j, k, l});
                    if (!c.is_zero())
                        any = true;
                    comps.push_back(c);
                }
                if (!any)
                    continue;
                BasePoly q = poly_radial_antiderivative(comps);
                if (q.degree() > base_deg_max)
                    return res; // no witness within the stated bound
                g.add_entry(BilinearMap::Key{j, k, l}, q);
            }

    // soundness: the candidate must reproduce delta exactly
    if (!(bilinear_d(g) == delta))
        return res;
    res.found = true;
    res.witness = std::move(g);
    return res;
}

// ---------------------------------------------------------------------------
// Serialization

std::string BilinearMapForm::to_json() const
{
    nlohmann::json j;
    j["n"] = n_;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, c] : entries_) {
        nlohmann::json e;
        e["base"] = k.base;
        e["from"] = nlohmann::json::array({k.in1, k.in2});
        e["to"] = k.out;
        e["coeff_poly"] = poly_format(c);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

BilinearMapForm BilinearMapForm::from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), errc::io_error, "invalid JSON");
    require(j.contains("n"), errc::io_error, "bilinear form JSON needs n");
    BilinearMapForm out(j["n"].get<int>());
    for (const auto& e : j.value("entries", nlohmann::json::array())) {
        Key k;
        k.base = e.at("base").get<int>();
        k.in1 = e.at("from").at(0).get<int>();
        k.in2 = e.at("from").at(1).get<int>();
        k.out = e.at("to").get<int>();
        out.add_entry(k, poly_parse(e.at("coeff_poly").get<std::string>(), out.num_generators()));
    }
    return out;
}

std::string BilinearMap::to_json() const
{
    nlohmann::json j;
    j["n"] = n_;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, c] : entries_) {
        nlohmann::json e;
        e["from"] = nlohmann::json::array({k.in1, k.in2});
        e["to"] = k.out;
        e["coeff_poly"] = poly_format(c);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

BilinearMap BilinearMap::from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), errc::io_error, "invalid JSON");
    require(j.contains("n"), errc::io_error, "bilinear map JSON needs n");
    BilinearMap out(j["n"].get<int>());
    for (const auto& e : j.value("entries", nlohmann::json::array())) {
        Key k;
        k.in1 = e.at("from").at(0).get<int>();
        k.in2 = e.at("from").at(1).get<int>();
        k.out = e.at("to").get<int>();
        out.add_entry(k, poly_parse(e.at("coeff_poly").get<std::string>(), out.num_generators()));
    }
    return out;
}

} // namespace ncdisk

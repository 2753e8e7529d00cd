#pragma once

#include <gmpxx.h>
#include <string>

#include "ncdisk/error.hpp"

namespace ncdisk {

// Exact rational coefficients. All arithmetic in the engine is over Q;
// nothing is ever rounded.
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_to_string(const Rat& q)
{
    return q.get_str();
}

// Parses "int" or "int/int" with an optional leading sign. Positions are
// byte offsets used by the series parser for error messages.
inline Rat rat_from_string(const std::string& s)
{
    if (s.empty())
        fail(errc::syntax_error, "empty rational");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail(errc::syntax_error, "bad rational '" + s + "'");
    if (sgn(mpq_denref(q.get_mpq_t())) == 0)
        fail(errc::syntax_error, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace ncdisk

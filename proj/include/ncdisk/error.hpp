#pragma once

#include <stdexcept>
#include <string>

namespace ncdisk {

// Error vocabulary shared by all modules. Every precondition violation maps
// to one of these codes; messages carry the offending detail.
enum class errc {
    dimension_mismatch,
    divergent_substitution,
    syntax_error,
    index_out_of_range,
    degree_out_of_range,
    nonzero_constant_term,
    singular_linear_part,
    non_nilpotent_at_truncation,
    cap_exceeded,
    non_recentred,
    inhomogeneous_generator,
    malformed_gk,
    malformed_gauge,
    singular_jacobian,
    io_error,
};

inline const char* errc_name(errc c)
{
    switch (c) {
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::divergent_substitution: return "divergent_substitution";
    case errc::syntax_error: return "syntax_error";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::degree_out_of_range: return "degree_out_of_range";
    case errc::nonzero_constant_term: return "nonzero_constant_term";
    case errc::singular_linear_part: return "singular_linear_part";
    case errc::non_nilpotent_at_truncation: return "non_nilpotent_at_truncation";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::non_recentred: return "non_recentred";
    case errc::inhomogeneous_generator: return "inhomogeneous_generator";
    case errc::malformed_gk: return "malformed_gk";
    case errc::malformed_gauge: return "malformed_gauge";
    case errc::singular_jacobian: return "singular_jacobian";
    case errc::io_error: return "io_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what)
{
    throw Error(code, what);
}

inline void require(bool cond, errc code, const std::string& what)
{
    if (!cond)
        fail(code, what);
}

} // namespace ncdisk

#pragma once

#include "ncdisk/chart.hpp"
#include "test_util.hpp"

namespace ncdisk::testutil {

// Random gauges drawn from a class whose transformed connections are exactly
// representable at the working truncation: triangular base changes (one
// variable shifted by a polynomial in the other, both scaled) have polynomial
// inverses of the same degree, and single triangular fiber tails have exact
// polynomial inverses. For these the transformed tails live in the stored
// degree range, so the flatness identity survives truncation verbatim.

inline Rat random_unit(Rng& rng)
{
    static const Rat units[] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(3)};
    return units[rng() % 5];
}

// phi_{s1} = c1 b_{s1} + q(b_{s2}), phi_{s2} = c2 b_{s2}, deg q <= 2.
inline std::vector<BasePoly> random_triangular_base(Rng& rng, int n, int max_tail_deg = 2)
{
    std::uniform_int_distribution<int> coin(0, 1);
    int s1 = (n == 2 && coin(rng)) ? 2 : 1;
    int s2 = (n == 2) ? 3 - s1 : 1;
    std::vector<BasePoly> phi;
    for (int i = 1; i <= n; ++i)
        phi.push_back(poly_scale(random_unit(rng), BasePoly::variable(n, i)));
    if (n >= 2) {
        BasePoly q(n);
        for (int d = 1; d <= max_tail_deg; ++d) {
            ExpVec e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(s2 - 1)] = d;
            q.add_term(e, random_rational(rng, 2, 2));
        }
        phi[static_cast<size_t>(s1 - 1)] = poly_add(phi[static_cast<size_t>(s1 - 1)], q);
    }
    return phi;
}

// psi: xi_{s1} -> xi_{s1} + c(b) xi_{s2}^len over the identity base change.
inline Gauge random_fiber_tail_gauge(Rng& rng, int n, int N, int B)
{
    std::uniform_int_distribution<int> coin(0, 1);
    int s1 = (n == 2 && coin(rng)) ? 2 : 1;
    int s2 = (n == 2) ? 3 - s1 : s1;
    std::uniform_int_distribution<int> len_dist(2, std::max(2, std::min(N - 1, 3)));
    int len = len_dist(rng);

    BasePoly c(n);
    int cdeg = std::min(B, 2);
    for (int d = 0; d <= cdeg; ++d) {
        ExpVec e(static_cast<size_t>(n), 0);
        if (d > 0)
            e[static_cast<size_t>((rng() % static_cast<unsigned>(n)))] = d;
        c.add_term(e, random_rational(rng, 2, 2));
    }
    if (c.is_zero())
        c = BasePoly::constant(n, Rat(1));

    std::vector<BasePoly> id_phi;
    for (int i = 1; i <= n; ++i)
        id_phi.push_back(BasePoly::variable(n, i));
    Gauge g = linear_lift_gauge(id_phi, N, B);
    Word tail(static_cast<size_t>(len), static_cast<Letter>(s2));
    if (n == 1 && len > N - 1)
        return g; // nothing to add at this truncation
    g.psi[static_cast<size_t>(s1 - 1)].add_term(tail, c);
    return g;
}

inline Gauge random_base_gauge(Rng& rng, int n, int N, int B, int max_tail_deg = 2)
{
    return linear_lift_gauge(random_triangular_base(rng, n, max_tail_deg), N, B);
}

// Mixed stream of exactly representable gauges.
inline Gauge random_exact_gauge(Rng& rng, int n, int N, int B)
{
    if (N >= 3 && rng() % 2 == 0)
        return random_fiber_tail_gauge(rng, n, N, B);
    return random_base_gauge(rng, n, N, B);
}

} // namespace ncdisk::testutil

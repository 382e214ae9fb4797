#pragma once

#include <concepts>
#include <cstddef>
#include <random>

#include "cohomology_class.hpp"

namespace mukai {

/// Small random Gaussian rational with numerators in [-bound, bound] and denominators in [1, 3].
template <class Rng>
gauss_rational random_scalar(Rng& rng, long bound = 3, bool complex = false)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, 3);
    rational re(num(rng), den(rng));
    re.canonicalize();
    if (!complex) return gauss_rational(re);
    rational im(num(rng), den(rng));
    im.canonicalize();
    return gauss_rational(re, im);
}

/// Random class whose support is restricted to basis indices accepted by keep(index).
template <class Rng, std::predicate<std::size_t> Keep>
coh_class random_class(const space_ptr& s, Rng& rng, Keep keep, long bound = 3, bool complex = false)
{
    sparse_vector v;
    for (std::size_t k = 0; k < s->size(); ++k)
        if (keep(k)) accumulate(v, k, random_scalar(rng, bound, complex));
    return coh_class(s, std::move(v));
}

template <class Rng>
coh_class random_class(const space_ptr& s, Rng& rng, long bound = 3, bool complex = false)
{
    return random_class(s, rng, [](std::size_t) { return true; }, bound, complex);
}

/// 1 + random positive-degree part; even = true restricts to even total degree.
template <class Rng>
coh_class random_unit_class(const space_ptr& s, Rng& rng, bool even = true, long bound = 3)
{
    coh_class x = random_class(s, rng, [&](std::size_t k) {
        return k != s->unit_index() && (!even || s->degree(k) % 2 == 0);
    }, bound);
    return coh_class::unit(s) + x;
}

/// Random class supported on (p,p) components.
template <class Rng>
coh_class random_algebraic_class(const space_ptr& s, Rng& rng, long bound = 3)
{
    return random_class(s, rng, [&](std::size_t k) { return s->basis(k).p == s->basis(k).q; }, bound);
}

} // namespace mukai

#pragma once

#include <memory>

#include "skewseries/automorphism.hpp"
#include "skewseries/field.hpp"
#include "skewseries/series.hpp"

namespace skewseries {

// Fixed working environment for one ring instance: base field, working X-adic
// precision N, the Laurent valuation floor vmax, and the automorphism alpha.
// Everything in a context is immutable after construction.
struct RingContext {
    Field field;
    int prec;  // all equalities are claims mod X^prec
    int vmax;  // valuations below -vmax are an error
    Automorphism alpha;

    RingContext(Field f, Series q, int prec_, int vmax_);
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr make_context(Field field, Series q, int prec = 16, int vmax = 32);
// Convenience: q given by its low-order integer coefficients (q[0] + q[1] X + ...).
ContextPtr make_context(Field field, const std::vector<long>& q_coeffs, int prec = 16,
                        int vmax = 32);

}  // namespace skewseries

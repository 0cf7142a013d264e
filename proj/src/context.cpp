#include "skewseries/context.hpp"

#include <utility>
#include <vector>

#include "skewseries/errors.hpp"

namespace skewseries {

RingContext::RingContext(Field f, Series q, int prec_, int vmax_)
    : field(f), prec(prec_), vmax(vmax_), alpha(std::move(q)) {
    if (prec < 1) {
        throw usage_error("context precision must be at least 1");
    }
    if (vmax < 0) {
        throw usage_error("context valuation floor must be nonnegative");
    }
    if (alpha.prec() < prec) {
        throw usage_error("q must be given to at least the context precision");
    }
}

ContextPtr make_context(Field field, Series q, int prec, int vmax) {
    return std::make_shared<const RingContext>(field, std::move(q), prec, vmax);
}

ContextPtr make_context(Field field, const std::vector<long>& q_coeffs, int prec,
                        int vmax) {
    std::vector<FieldElem> coeffs;
    coeffs.reserve(q_coeffs.size());
    for (long c : q_coeffs) {
        coeffs.emplace_back(field, c);
    }
    return make_context(field, Series(field, 0, std::move(coeffs), prec), prec, vmax);
}

}  // namespace skewseries

#include "skewseries/automorphism.hpp"

#include <algorithm>
#include <utility>

#include "skewseries/errors.hpp"

namespace skewseries {

Automorphism::Automorphism(Series q) : q_(std::move(q)) {
    if (!q_.is_unit()) {
        throw not_a_unit("automorphism parameter q must be a unit series");
    }
}

Series Automorphism::apply(const Series& a, int r) const {
    if (a.field().kind() != q_.field().kind() ||
        a.field().modulus() != q_.field().modulus()) {
        throw usage_error("series field does not match the automorphism's field");
    }
    std::lock_guard<std::mutex> lock(mu_);
    return apply_locked(a, r);
}

Series Automorphism::norm(int n) const {
    if (n < 0) {
        throw usage_error("alpha-norm index must be nonnegative");
    }
    std::lock_guard<std::mutex> lock(mu_);
    return norm_locked(n);
}

Series Automorphism::x_unit(int r) const {
    std::lock_guard<std::mutex> lock(mu_);
    return x_unit_locked(r);
}

Automorphism::OrderResult Automorphism::finite_order_check(int n_max) const {
    std::lock_guard<std::mutex> lock(mu_);
    const Series one = Series::one(q_.field(), prec());
    for (int n = 1; n <= n_max; ++n) {
        if ((norm_locked(n) - one).is_zero()) {
            return OrderResult{true, n, n_max};
        }
    }
    return OrderResult{false, 0, n_max};
}

Series Automorphism::apply_locked(const Series& a, int r) const {
    if (r == 0 || a.is_zero()) {
        return a;
    }
    // alpha^r(sum a_p X^p) = sum a_p u_r^p X^p. Exact-zero coefficients inside
    // the window contribute nothing and impose no precision limit.
    bool have = false;
    Series acc(a.field(), a.abs_prec());
    for (int p = a.eff_val(); p < a.abs_prec(); ++p) {
        FieldElem c = a.coeff(p);
        if (c.is_zero()) {
            continue;
        }
        Series term = (c * unit_power_locked(r, p)).shifted(p);
        acc = have ? acc + term : term;
        have = true;
    }
    return acc.truncated(std::min(acc.abs_prec(), a.abs_prec()));
}

const Series& Automorphism::norm_locked(int n) const {
    auto it = norms_.find(n);
    if (it != norms_.end()) {
        return it->second;
    }
    Series value = (n == 0) ? Series::one(q_.field(), prec())
                            : norm_locked(n - 1) * apply_locked(q_, n - 1);
    return norms_.emplace(n, std::move(value)).first->second;
}

const Series& Automorphism::x_unit_locked(int r) const {
    auto it = units_.find(r);
    if (it != units_.end()) {
        return it->second;
    }
    Series value(q_.field(), prec());
    if (r >= 0) {
        value = norm_locked(r);
    } else if (r == -1) {
        // Solve alpha(t) = X for t = sum_{m>=1} t_m X^m, i.e. match the
        // coefficient of X^j in sum_m t_m q^m X^m for j = 1..prec. Equation j
        // only reads q-coefficients below index j, so all of t_1..t_prec are
        // determined by the known window and u_{-1} = t / X has full precision.
        const Field& f = q_.field();
        const int p = prec();
        std::vector<Series> qpow;
        qpow.reserve(static_cast<std::size_t>(p) + 1);
        qpow.push_back(Series::one(f, p));
        for (int m = 1; m <= p; ++m) {
            qpow.push_back(qpow.back() * q_);
        }
        std::vector<FieldElem> t(static_cast<std::size_t>(p) + 1,
                                 FieldElem::zero(f));
        std::vector<FieldElem> u;
        u.reserve(static_cast<std::size_t>(p));
        for (int j = 1; j <= p; ++j) {
            FieldElem rhs = (j == 1) ? FieldElem::one(f) : FieldElem::zero(f);
            for (int m = 1; m < j; ++m) {
                rhs = rhs - t[static_cast<std::size_t>(m)] *
                                qpow[static_cast<std::size_t>(m)].coeff(j - m);
            }
            t[static_cast<std::size_t>(j)] =
                rhs / qpow[static_cast<std::size_t>(j)].coeff(0);
            u.push_back(t[static_cast<std::size_t>(j)]);
        }
        value = Series(f, 0, std::move(u), p);
    } else {
        // alpha^r(X) = alpha^{-1}(alpha^{r+1}(X)) = alpha^{-1}(u_{r+1}) u_{-1} X.
        value = apply_locked(x_unit_locked(r + 1), -1) * x_unit_locked(-1);
    }
    return units_.emplace(r, std::move(value)).first->second;
}

const Series& Automorphism::unit_power_locked(int r, int p) const {
    PowerCache& cache = powers_[r];
    if (cache.pos.empty()) {
        // u_r^0 = 1 exactly; cap at the context window like everything else.
        cache.pos.push_back(Series::one(q_.field(), prec()));
    }
    if (p >= 0) {
        while (static_cast<int>(cache.pos.size()) <= p) {
            cache.pos.push_back(cache.pos.back() * x_unit_locked(r));
        }
        return cache.pos[static_cast<std::size_t>(p)];
    }
    if (cache.neg.empty()) {
        cache.neg.push_back(inverse(x_unit_locked(r)));
    }
    while (static_cast<int>(cache.neg.size()) < -p) {
        cache.neg.push_back(cache.neg.back() * cache.neg.front());
    }
    return cache.neg[static_cast<std::size_t>(-p) - 1];
}

}  // namespace skewseries

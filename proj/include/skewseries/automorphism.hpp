#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "skewseries/series.hpp"

namespace skewseries {

// The k-algebra automorphism alpha of k[[X]] with alpha(X) = qX for a unit q,
// extended to Laurent series. For every integer r, alpha^r(X) = u_r * X for a
// unit series u_r (u_r = N_r(q) when r >= 0; negative powers come from the
// cached triangular solve for alpha^{-1}(X)), so alpha^r acts coefficient-wise:
// alpha^r(sum a_p X^p) = sum a_p u_r^p X^p. Caches are guarded; instances are
// safe to share read-only.
class Automorphism {
  public:
    explicit Automorphism(Series q);  // q must be a unit at full precision

    Automorphism(const Automorphism&) = delete;
    Automorphism& operator=(const Automorphism&) = delete;

    const Series& q() const { return q_; }
    int prec() const { return q_.abs_prec(); }

    // alpha^r(a) for any integer r. Power series keep their precision; a
    // coefficient at X^p with p < 0 costs |p| X-degrees of precision, since
    // u_r^p then depends on the unknown tail of q.
    Series apply(const Series& a, int r = 1) const;

    // N_n(q) = q * alpha(q) * ... * alpha^{n-1}(q); N_0 = 1.
    Series norm(int n) const;

    // The unit u_r with alpha^r(X) = u_r * X.
    Series x_unit(int r) const;

    struct OrderResult {
        bool found;
        int n;      // least n with N_n(q) == 1 mod X^prec, when found
        int n_max;  // the searched bound
    };
    // Semidecision: not finding an order up to n_max proves nothing.
    OrderResult finite_order_check(int n_max) const;

  private:
    struct PowerCache {
        std::vector<Series> pos;  // u_r^0, u_r^1, ...
        std::vector<Series> neg;  // u_r^-1, u_r^-2, ...
    };

    Series apply_locked(const Series& a, int r) const;
    const Series& x_unit_locked(int r) const;
    const Series& norm_locked(int n) const;
    const Series& unit_power_locked(int r, int p) const;

    Series q_;
    mutable std::mutex mu_;
    mutable std::map<int, Series> norms_;
    mutable std::map<int, Series> units_;  // r -> u_r with alpha^r(X) = u_r X
    mutable std::map<int, PowerCache> powers_;
};

}  // namespace skewseries

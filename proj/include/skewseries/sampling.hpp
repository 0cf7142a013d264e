#pragma once

#include <random>

#include "skewseries/skew_poly.hpp"

namespace skewseries {

// Seeded random generators for property tests and the CLI audit driver.
// All draws are small (rational numerators in [-9, 9], denominators in [1, 9])
// so derived values stay readable in failure output.
class Sampler {
  public:
    Sampler(ContextPtr ctx, std::uint64_t seed) : ctx_(std::move(ctx)), rng_(seed) {}

    const ContextPtr& ctx() const { return ctx_; }

    FieldElem scalar(bool nonzero = false);
    // Uniform-ish series with valuation in [val_min, val_max]; never zero when
    // nonzero is set.
    Series series(int val_min, int val_max, bool nonzero = false);
    Series unit_series(bool constant_term_one = false);

    SkewPoly skew(RingTag tag, int deg_max, int val_min = 0, int val_max = 2);
    SkewPoly nonzero_skew(RingTag tag, int deg_max, int val_min = 0, int val_max = 2);

    // b = 1 + X*s of theta-degree exactly l >= 1 (TypeB-normalized).
    SkewPoly type_b(int l);
    // Canonical TypeC: monic of degree exactly n >= 1 with nonzero theta^0
    // coefficient.
    SkewPoly type_c(int n);
    // Element satisfying the extraction hypothesis with unit index n and degree
    // m; when f_n_constant_one, the coefficient at n has constant term 1.
    SkewPoly notirr_admissible(int n, int m, bool f_n_constant_one = true);

    int uniform_int(int lo, int hi);

  private:
    ContextPtr ctx_;
    std::mt19937_64 rng_;
};

}  // namespace skewseries

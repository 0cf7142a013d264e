#pragma once

#include <string>
#include <vector>

#include "skewseries/field.hpp"

namespace skewseries {

// Truncated Laurent series over an exact field. A nonzero value stores the full
// coefficient window [val, abs_prec) with coeffs.front() != 0; the represented
// claim is "equal to sum coeffs[e-val]*X^e, modulo X^abs_prec". Zero at a given
// precision stores no coefficients (val() is then undefined and eff_val() ==
// abs_prec). Absolute precision is tracked through every operation and never
// silently inflated. Power series are the val >= 0 case.
class Series {
  public:
    Series(Field field, int abs_prec);  // zero mod X^abs_prec
    Series(Field field, int val, std::vector<FieldElem> coeffs, int abs_prec);

    static Series constant(const FieldElem& c, int abs_prec);
    static Series x_power(Field field, int exponent, int abs_prec);
    static Series one(Field field, int abs_prec);

    const Field& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    int val() const;                                // requires a nonzero value
    int eff_val() const;                            // val(), or abs_prec for zero
    int abs_prec() const { return abs_prec_; }
    bool is_unit() const { return !is_zero() && val() == 0; }

    // Coefficient of X^e; exact zero below the window, throws beyond abs_prec.
    FieldElem coeff(int e) const;
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    Series truncated(int new_abs) const;
    Series shifted(int e) const;  // multiply by X^e

    std::string to_string(const std::string& var = "X") const;

  private:
    void normalize();

    Field field_;
    int val_;
    int abs_prec_;
    std::vector<FieldElem> coeffs_;  // window [val_, abs_prec_), front() != 0
};

Series operator-(const Series& a);
Series operator+(const Series& a, const Series& b);  // abs = min
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);  // abs = min(v1+a2, v2+a1)
Series operator*(const FieldElem& c, const Series& a);

// Multiplicative inverse of a nonzero Laurent value; result abs = abs - 2*val.
// Throws not_a_unit for zero and precision_error when nothing of the inverse
// window is determined.
Series inverse(const Series& a);

// True when a and b agree coefficient-wise mod X^upto. Demanding agreement
// beyond the precision of either operand throws precision_error.
bool eq_mod(const Series& a, const Series& b, int upto);
// Agreement modulo min(a.abs_prec(), b.abs_prec()).
bool eq_at_shared_prec(const Series& a, const Series& b);

}  // namespace skewseries

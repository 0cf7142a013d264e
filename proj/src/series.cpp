#include "skewseries/series.hpp"

#include <algorithm>
#include <sstream>

namespace skewseries {

Series::Series(Field field, int abs_prec) : field_(field), val_(abs_prec), abs_prec_(abs_prec) {}

Series::Series(Field field, int val, std::vector<FieldElem> coeffs, int abs_prec)
    : field_(field), val_(val), abs_prec_(abs_prec), coeffs_(std::move(coeffs)) {
    if (val_ + static_cast<int>(coeffs_.size()) > abs_prec_)
        throw usage_error("series window exceeds its absolute precision");
    coeffs_.resize(static_cast<std::size_t>(abs_prec_ - val_), FieldElem::zero(field_));
    normalize();
}

void Series::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = abs_prec_;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<int>(lead);
}

Series Series::constant(const FieldElem& c, int abs_prec) {
    if (abs_prec <= 0 || c.is_zero()) return Series(c.field(), abs_prec);
    return Series(c.field(), 0, {c}, abs_prec);
}

Series Series::x_power(Field field, int exponent, int abs_prec) {
    if (exponent >= abs_prec) return Series(field, abs_prec);
    return Series(field, exponent, {FieldElem::one(field)}, abs_prec);
}

Series Series::one(Field field, int abs_prec) {
    return constant(FieldElem::one(field), abs_prec);
}

int Series::val() const {
    if (is_zero()) throw usage_error("valuation of a zero-at-precision series is undefined");
    return val_;
}

int Series::eff_val() const { return is_zero() ? abs_prec_ : val_; }

FieldElem Series::coeff(int e) const {
    if (e >= abs_prec_)
        throw precision_error("coefficient of X^" + std::to_string(e) +
                              " requested beyond precision X^" + std::to_string(abs_prec_));
    if (is_zero() || e < val_) return FieldElem::zero(field_);
    return coeffs_[static_cast<std::size_t>(e - val_)];
}

Series Series::truncated(int new_abs) const {
    if (new_abs > abs_prec_)
        throw precision_error("cannot extend a series from precision X^" +
                              std::to_string(abs_prec_) + " to X^" + std::to_string(new_abs));
    if (is_zero() || val_ >= new_abs) return Series(field_, new_abs);
    std::vector<FieldElem> window(coeffs_.begin(),
                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(new_abs - val_));
    return Series(field_, val_, std::move(window), new_abs);
}

Series Series::shifted(int e) const {
    if (is_zero()) return Series(field_, abs_prec_ + e);
    return Series(field_, val_ + e, coeffs_, abs_prec_ + e);
}

Series operator-(const Series& a) {
    if (a.is_zero()) return a;
    std::vector<FieldElem> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(-x);
    return Series(a.field(), a.val(), std::move(c), a.abs_prec());
}

Series operator+(const Series& a, const Series& b) {
    if (!(a.field() == b.field())) throw usage_error("mixed base fields in series arithmetic");
    int abs = std::min(a.abs_prec(), b.abs_prec());
    int lo = std::min(a.eff_val(), b.eff_val());
    if (lo >= abs) return Series(a.field(), abs);
    std::vector<FieldElem> c;
    c.reserve(static_cast<std::size_t>(abs - lo));
    for (int e = lo; e < abs; ++e) c.push_back(a.coeff(e) + b.coeff(e));
    return Series(a.field(), lo, std::move(c), abs);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    if (!(a.field() == b.field())) throw usage_error("mixed base fields in series arithmetic");
    int abs = std::min(a.eff_val() + b.abs_prec(), b.eff_val() + a.abs_prec());
    if (a.is_zero() || b.is_zero()) return Series(a.field(), abs);
    int lo = a.val() + b.val();
    if (lo >= abs) return Series(a.field(), abs);
    std::vector<FieldElem> c(static_cast<std::size_t>(abs - lo), FieldElem::zero(a.field()));
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t out_len = static_cast<std::size_t>(abs - lo);
    for (std::size_t i = 0; i < ac.size() && i < out_len; ++i) {
        if (ac[i].is_zero()) continue;
        std::size_t jmax = std::min(bc.size(), out_len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (bc[j].is_zero()) continue;
            c[i + j] = c[i + j] + ac[i] * bc[j];
        }
    }
    return Series(a.field(), lo, std::move(c), abs);
}

Series operator*(const FieldElem& c, const Series& a) {
    if (c.is_zero() || a.is_zero()) return Series(a.field(), a.abs_prec());
    std::vector<FieldElem> out;
    out.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) out.push_back(c * x);
    return Series(a.field(), a.val(), std::move(out), a.abs_prec());
}

Series inverse(const Series& a) {
    if (a.is_zero()) throw not_a_unit("inverse of a series that is zero at precision X^" +
                                      std::to_string(a.abs_prec()));
    int v = a.val();
    int rel = a.abs_prec() - v;  // number of known coefficients, >= 1
    // (X^v u)^{-1} = X^{-v} u^{-1}; u^{-1} is known to the same relative
    // precision, so the absolute precision drops to abs - 2v.
    const auto& ac = a.coeffs();
    std::vector<FieldElem> inv_c;
    inv_c.reserve(static_cast<std::size_t>(rel));
    FieldElem lead_inv = ac[0].inv();
    inv_c.push_back(lead_inv);
    for (int m = 1; m < rel; ++m) {
        FieldElem acc = FieldElem::zero(a.field());
        for (int i = 1; i <= m; ++i) acc = acc + ac[static_cast<std::size_t>(i)] * inv_c[static_cast<std::size_t>(m - i)];
        inv_c.push_back(-(lead_inv * acc));
    }
    return Series(a.field(), -v, std::move(inv_c), -v + rel);
}

bool eq_mod(const Series& a, const Series& b, int upto) {
    if (upto > a.abs_prec() || upto > b.abs_prec())
        throw precision_error("equality mod X^" + std::to_string(upto) +
                              " asked beyond operand precision");
    int lo = std::min(a.eff_val(), b.eff_val());
    for (int e = lo; e < upto; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

bool eq_at_shared_prec(const Series& a, const Series& b) {
    return eq_mod(a, b, std::min(a.abs_prec(), b.abs_prec()));
}

std::string Series::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = val_; e < abs_prec_; ++e) {
        const FieldElem& c = coeff(e);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) out << "-", cs = cs.substr(1);
        } else {
            out << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        first = false;
        if (e == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return first ? "0" : out.str();
}

}  // namespace skewseries

#include "skewseries/field.hpp"

#include <utility>

namespace skewseries {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Inverse mod p via extended Euclid; a in 1..p-1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = std::exchange(r, t);
        t = old_s - q * s;
        old_s = std::exchange(s, t);
    }
    return mod_reduce(old_s, p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (!is_prime(p)) throw usage_error("field modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

std::string Field::describe() const {
    return kind_ == Kind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

FieldElem::FieldElem(Field field, long value) : field_(field) {
    if (field_.is_prime_field()) {
        res_ = mod_reduce(value, field_.modulus());
    } else {
        rat_ = value;
    }
}

FieldElem::FieldElem(Field field, const Rational& value) : field_(field), rat_(value) {
    if (field_.is_prime_field())
        throw usage_error("rational value used to build a prime-field element");
}

bool FieldElem::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_.is_zero();
}

bool FieldElem::is_one() const {
    return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

void FieldElem::check_same_field(const FieldElem& other) const {
    if (!(field_ == other.field_)) throw usage_error("mixed base fields in scalar arithmetic");
}

FieldElem FieldElem::operator-() const {
    if (field_.is_prime_field()) return FieldElem(field_, -res_);
    return FieldElem(field_, Rational(-rat_));
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    check_same_field(rhs);
    if (field_.is_prime_field()) return FieldElem(field_, res_ + rhs.res_);
    return FieldElem(field_, Rational(rat_ + rhs.rat_));
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
    check_same_field(rhs);
    if (field_.is_prime_field()) return FieldElem(field_, res_ - rhs.res_);
    return FieldElem(field_, Rational(rat_ - rhs.rat_));
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    check_same_field(rhs);
    if (field_.is_prime_field()) return FieldElem(field_, res_ * rhs.res_);
    return FieldElem(field_, Rational(rat_ * rhs.rat_));
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw not_a_unit("inverse of zero scalar");
    if (field_.is_prime_field())
        return FieldElem(field_, mod_inverse(res_, field_.modulus()));
    return FieldElem(field_, Rational(1 / rat_));
}

bool FieldElem::operator==(const FieldElem& rhs) const {
    check_same_field(rhs);
    return field_.is_prime_field() ? res_ == rhs.res_ : rat_ == rhs.rat_;
}

std::string FieldElem::to_string() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    return rat_.str();
}

FieldElem FieldElem::from_string(Field field, const std::string& text) {
    if (text.empty()) throw parse_error("empty scalar literal");
    auto slash = text.find('/');
    try {
        if (field.is_prime_field()) {
            if (slash == std::string::npos)
                return FieldElem(field, static_cast<long>(std::stoll(text)));
            FieldElem num(field, static_cast<long>(std::stoll(text.substr(0, slash))));
            FieldElem den(field, static_cast<long>(std::stoll(text.substr(slash + 1))));
            return num / den;
        }
        return FieldElem(field, Rational(text));
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("bad scalar literal '" + text + "'");
    }
}

const Rational& FieldElem::rational() const {
    if (field_.is_prime_field()) throw usage_error("rational() called on a prime-field element");
    return rat_;
}

std::int64_t FieldElem::residue() const {
    if (!field_.is_prime_field()) throw usage_error("residue() called on a rational");
    return res_;
}

}  // namespace skewseries

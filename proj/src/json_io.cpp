#include "skewseries/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "skewseries/errors.hpp"
#include "skewseries/euclid.hpp"

namespace skewseries {

namespace {

Field field_from_tag(const std::string& tag) {
    if (tag == "q") return Field::rationals();
    if (tag.rfind("fp:", 0) == 0) {
        try {
            return Field::prime(std::stoll(tag.substr(3)));
        } catch (const std::exception&) {
            throw parse_error("bad field tag: " + tag);
        }
    }
    throw parse_error("bad field tag: " + tag);
}

std::string field_tag(const Field& field) {
    if (field.is_prime_field()) return "fp:" + std::to_string(field.modulus());
    return "q";
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw parse_error(std::string("missing key \"") + key + "\"");
    }
    return j.at(key);
}

int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) throw parse_error(std::string("key \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string need_str(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_string()) throw parse_error(std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace

Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"val", s.eff_val()}, {"prec", s.abs_prec()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const Json& j, Field field) {
    const int val = need_int(j, "val");
    const int prec = need_int(j, "prec");
    const Json& coeffs = need(j, "coeffs");
    if (!coeffs.is_array()) throw parse_error("\"coeffs\" must be an array");
    std::vector<FieldElem> window;
    window.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_string()) throw parse_error("series coefficients must be strings");
        window.push_back(FieldElem::from_string(field, c.get<std::string>()));
    }
    if (window.empty()) return Series(field, prec);
    return Series(field, val, std::move(window), prec);
}

Json to_json(const SkewPoly& z) {
    Json coeffs = Json::object();
    for (const auto& [i, s] : z.coeffs()) coeffs[std::to_string(i)] = to_json(s);
    return Json{{"context", to_string(z.tag())}, {"coeffs", std::move(coeffs)}};
}

SkewPoly skew_from_json(const Json& j, ContextPtr ctx) {
    const std::string tag_str = need_str(j, "context");
    if (tag_str != "S" && tag_str != "T") throw parse_error("\"context\" must be \"S\" or \"T\"");
    RingTag tag = tag_str == "S" ? RingTag::S : RingTag::T;
    const Json& coeffs = need(j, "coeffs");
    if (!coeffs.is_object()) throw parse_error("\"coeffs\" must be an object");
    std::map<int, Series> m;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        int idx = 0;
        try {
            idx = std::stoi(it.key());
        } catch (const std::exception&) {
            throw parse_error("bad theta exponent key: " + it.key());
        }
        m.emplace(idx, series_from_json(it.value(), ctx->field));
    }
    return SkewPoly::from_coeffs(std::move(ctx), tag, std::move(m));
}

Json to_json(const Shape& shape) {
    Json j{{"kind", shape.describe()}};
    if (shape.kind == Shape::Kind::TypeC) {
        Json f = Json::array();
        for (const auto& c : shape.f) f.push_back(c.to_string());
        j["f"] = std::move(f);
        j["n"] = shape.n;
    }
    return j;
}

Json to_json(const NormalizationCertificate& cert) {
    return Json{{"kind", "normalization"},
                {"x_exp", cert.x_exp},
                {"theta_exp", cert.theta_exp},
                {"unit", cert.unit.to_string()},
                {"core", to_json(cert.core)},
                {"shape", to_json(cert.shape)},
                {"prec", cert.prec}};
}

Json to_json(const EisensteinCertificate& cert) {
    return Json{{"kind", "eisenstein"}, {"m", cert.m}, {"prec", cert.prec}};
}

Json context_to_json(const RingContext& ctx) {
    return Json{{"field", field_tag(ctx.field)},
                {"q", to_json(ctx.alpha.q())},
                {"prec", ctx.prec},
                {"vmax", ctx.vmax}};
}

ContextPtr context_from_json(const Json& j) {
    Field field = field_from_tag(need_str(j, "field"));
    const int prec = need_int(j, "prec");
    const int vmax = need_int(j, "vmax");
    Series q = series_from_json(need(j, "q"), field);
    return make_context(field, std::move(q), prec, vmax);
}

Json witness_to_json(const SkewPoly& input, const RightFactorWitness& w) {
    Json h = Json::array();
    for (const auto& s : w.h) h.push_back(to_json(s));
    return Json{{"kind", "right_factor"},
                {"context", context_to_json(*input.ctx())},
                {"input", to_json(input)},
                {"divisor", to_json(w.divisor)},
                {"quotient", to_json(w.quotient)},
                {"h", std::move(h)},
                {"n", w.n},
                {"prec", w.prec}};
}

Json witness_to_json(const SkewPoly& c, const SkewPoly& b, const CommutationWitness& w) {
    return Json{{"kind", "commutation"},
                {"context", context_to_json(*c.ctx())},
                {"c", to_json(c)},
                {"b", to_json(b)},
                {"b_prime", to_json(w.b_prime)},
                {"c_prime", to_json(w.c_prime)},
                {"prec", w.prec}};
}

Json witness_to_json(const SkewPoly& a, const SkewPoly& b, const SimilarityWitness& w) {
    return Json{{"kind", "similarity"},
                {"context", context_to_json(*a.ctx())},
                {"a", to_json(a)},
                {"b", to_json(b)},
                {"u", to_json(w.u)},
                {"prec", w.prec}};
}

Json witness_to_json(const SkewPoly& a, const SkewPoly& b, const ExtWitness& w) {
    return Json{{"kind", "ext_vanishing"},
                {"context", context_to_json(*a.ctx())},
                {"a", to_json(a)},
                {"b", to_json(b)},
                {"u", to_json(w.u)},
                {"v", to_json(w.v)},
                {"prec", w.prec}};
}

Json report_to_json(const SkewPoly& input, const FactorizationReport& report) {
    Json factors = Json::array();
    for (const auto& e : report.factors) {
        Json entry{{"factor", to_json(e.factor)},
                   {"shape", to_json(e.shape)},
                   {"atom_at_precision", e.atom_at_precision}};
        if (e.eisenstein) entry["eisenstein"] = to_json(*e.eisenstein);
        factors.push_back(std::move(entry));
    }
    return Json{{"kind", "factorization"},
                {"context", context_to_json(*input.ctx())},
                {"input", to_json(input)},
                {"factors", std::move(factors)},
                {"prec", report.prec},
                {"product_verified", report.product_verified}};
}

namespace {

// Equality of the claim "left == right mod X^prec", demanding that both sides
// actually carry that much precision.
bool agree(const SkewPoly& left, const SkewPoly& right, int prec) {
    return eq_mod(left, right, prec);
}

std::string verify_right_factor(const Json& doc, ContextPtr ctx) {
    SkewPoly input = skew_from_json(need(doc, "input"), ctx);
    SkewPoly divisor = skew_from_json(need(doc, "divisor"), ctx);
    SkewPoly quotient = skew_from_json(need(doc, "quotient"), ctx);
    const int n = need_int(doc, "n");
    const int prec = need_int(doc, "prec");
    if (divisor.is_zero() || divisor.degree() != n) return "divisor degree differs from n";
    Series lead = divisor.coeff(n);
    if (!(lead - Series::one(ctx->field, lead.abs_prec())).is_zero()) return "divisor is not monic";
    if (!agree(input, quotient * divisor, prec)) return "input != quotient * divisor mod X^prec";
    return "";
}

std::string verify_commutation(const Json& doc, ContextPtr ctx) {
    SkewPoly c = skew_from_json(need(doc, "c"), ctx);
    SkewPoly b = skew_from_json(need(doc, "b"), ctx);
    SkewPoly b_prime = skew_from_json(need(doc, "b_prime"), ctx);
    SkewPoly c_prime = skew_from_json(need(doc, "c_prime"), ctx);
    const int prec = need_int(doc, "prec");
    if (c_prime.is_zero() || c.is_zero() || c_prime.degree() != c.degree())
        return "c' degree differs from deg c";
    Series lead = c_prime.coeff(c_prime.degree());
    if (!(lead - Series::one(ctx->field, lead.abs_prec())).is_zero()) return "c' is not monic";
    if (c_prime.coeff(0).is_zero()) return "c' has a zero constant theta-coefficient";
    if (b_prime.is_zero() || b.is_zero() || b_prime.degree() != b.degree())
        return "b' degree differs from deg b";
    if (!condition_CO(b_prime)) return "b' is not congruent to a unit mod XS";
    if (!agree(c * b, b_prime * c_prime, prec)) return "cb != b'c' mod X^prec";
    return "";
}

std::string verify_similarity_doc(const Json& doc, ContextPtr ctx) {
    SkewPoly a = skew_from_json(need(doc, "a"), ctx);
    SkewPoly b = skew_from_json(need(doc, "b"), ctx);
    SkewPoly u = skew_from_json(need(doc, "u"), ctx);
    if (verify_similarity(a, b, u) != SimilarityCheck::Verified)
        return "similarity clauses failed";
    return "";
}

std::string verify_ext(const Json& doc, ContextPtr ctx) {
    SkewPoly a = skew_from_json(need(doc, "a"), ctx).with_tag(RingTag::T);
    SkewPoly b = skew_from_json(need(doc, "b"), ctx).with_tag(RingTag::T);
    SkewPoly u = skew_from_json(need(doc, "u"), ctx).with_tag(RingTag::T);
    SkewPoly v = skew_from_json(need(doc, "v"), ctx).with_tag(RingTag::T);
    const int prec = need_int(doc, "prec");
    SkewPoly one = SkewPoly::scalar(ctx, RingTag::T, FieldElem::one(ctx->field));
    if (!agree(u * a + b * v, one, prec)) return "u*a + b*v != 1 mod X^prec";
    return "";
}

std::string verify_factorization(const Json& doc, ContextPtr ctx) {
    SkewPoly input = skew_from_json(need(doc, "input"), ctx);
    const Json& factors = need(doc, "factors");
    if (!factors.is_array()) return "\"factors\" must be an array";
    const int prec = need_int(doc, "prec");
    SkewPoly prod = SkewPoly::scalar(ctx, RingTag::T, FieldElem::one(ctx->field));
    for (const auto& e : factors) {
        prod = prod * skew_from_json(need(e, "factor"), ctx).with_tag(RingTag::T);
    }
    if (!agree(input.with_tag(RingTag::T), prod, prec)) return "factor product != input mod X^prec";
    return "";
}

}  // namespace

std::string verify_witness_json(const Json& doc) {
    try {
        const std::string kind = need_str(doc, "kind");
        ContextPtr ctx = context_from_json(need(doc, "context"));
        if (kind == "right_factor") return verify_right_factor(doc, ctx);
        if (kind == "commutation") return verify_commutation(doc, ctx);
        if (kind == "similarity") return verify_similarity_doc(doc, ctx);
        if (kind == "ext_vanishing") return verify_ext(doc, ctx);
        if (kind == "factorization") return verify_factorization(doc, ctx);
        return "unknown witness kind: " + kind;
    } catch (const error& e) {
        return std::string("verification error: ") + e.what();
    } catch (const Json::exception& e) {
        return std::string("malformed document: ") + e.what();
    }
}

}  // namespace skewseries

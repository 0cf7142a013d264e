// skewcalc — exact arithmetic in S = k[[X]][theta; alpha] with alpha(X) = qX,
// at a fixed X-adic working precision, plus the taxonomy / factorization /
// similarity toolbox built on it. Every witness-producing subcommand can emit
// a self-contained JSON document that `skewcalc verify` re-checks from scratch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "skewseries/errors.hpp"
#include "skewseries/euclid.hpp"
#include "skewseries/factor.hpp"
#include "skewseries/homtools.hpp"
#include "skewseries/json_io.hpp"
#include "skewseries/parse.hpp"
#include "skewseries/sampling.hpp"
#include "skewseries/taxonomy.hpp"

namespace {

using namespace skewseries;

constexpr int kExitOk = 0;
constexpr int kExitOperation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitFalsified = 3;

struct Options {
    // ring configuration (global flags)
    std::string field = "q";
    std::string q = "2";
    int prec = 16;
    int vmax = 32;
    bool json = false;
    std::uint64_t seed = 0;

    // subcommand payloads
    std::vector<std::string> exprs;
    std::string ring = "S";
    std::string side = "right";
    std::string c_src;
    std::string b_src;
    int bound = 0;
    int nmax = 64;
    int count = 100;
    std::string file = "-";
};

Field field_from_flag(const std::string& tag) {
    if (tag == "q") return Field::rationals();
    if (tag.rfind("fp:", 0) == 0) {
        try {
            return Field::prime(std::stoll(tag.substr(3)));
        } catch (const error&) {
            throw;
        } catch (const std::exception&) {
            throw usage_error("bad --field value: " + tag);
        }
    }
    throw usage_error("--field must be 'q' or 'fp:<p>', got: " + tag);
}

ContextPtr build_context(const Options& o) {
    if (o.prec < 4) {
        throw usage_error("--prec must be at least 4");
    }
    Field f = field_from_flag(o.field);
    Series q = parse_series(o.q, f, o.prec);
    return make_context(std::move(f), std::move(q), o.prec, o.vmax);
}

RingTag tag_of(const std::string& ring) { return ring == "T" ? RingTag::T : RingTag::S; }

void emit(const Options& o, const Json& doc, const std::string& text) {
    if (o.json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int run_mul(const Options& o, const ContextPtr& ctx) {
    RingTag tag = tag_of(o.ring);
    SkewPoly acc = parse_element(o.exprs.front(), ctx, tag);
    for (std::size_t i = 1; i < o.exprs.size(); ++i) {
        acc = acc * parse_element(o.exprs[i], ctx, tag);
    }
    emit(o,
         Json{{"kind", "product"},
              {"context", context_to_json(*ctx)},
              {"result", to_json(acc)}},
         print_element(acc) + "\n");
    return kExitOk;
}

int run_divmod(const Options& o, const ContextPtr& ctx) {
    RingTag tag = tag_of(o.ring);
    SkewPoly z = parse_element(o.exprs[0], ctx, tag);
    SkewPoly d = parse_element(o.exprs[1], ctx, tag);
    DivisionResult r = o.side == "left" ? left_divmod(z, d) : right_divmod(z, d);
    emit(o,
         Json{{"kind", "division"},
              {"context", context_to_json(*ctx)},
              {"side", o.side},
              {"quotient", to_json(r.quotient)},
              {"remainder", to_json(r.remainder)},
              {"prec", r.prec}},
         "quotient:  " + print_element(r.quotient) + "\nremainder: " +
             print_element(r.remainder) + "\nprec:      " + std::to_string(r.prec) + "\n");
    return kExitOk;
}

int run_classify(const Options& o, const ContextPtr& ctx) {
    SkewPoly z = parse_element(o.exprs[0], ctx, RingTag::S);
    NormalizationCertificate cert = strip_and_classify(z);
    Json doc = to_json(cert);
    doc["context"] = context_to_json(*ctx);
    emit(o, doc,
         "shape:     " + cert.shape.describe() + "\nx_exp:     " +
             std::to_string(cert.x_exp) + "\ntheta_exp: " + std::to_string(cert.theta_exp) +
             "\nunit:      " + cert.unit.to_string() + "\ncore:      " +
             print_element(cert.core) + "\nprec:      " + std::to_string(cert.prec) + "\n");
    return kExitOk;
}

int run_eisenstein(const Options& o, const ContextPtr& ctx) {
    SkewPoly z = parse_element(o.exprs[0], ctx, RingTag::S);
    std::optional<EisensteinCertificate> cert = eisenstein_irreducible(z);
    Json doc{{"kind", "eisenstein"},
             {"context", context_to_json(*ctx)},
             {"input", to_json(z)},
             {"applies", cert.has_value()}};
    std::string text = "eisenstein: not applicable\n";
    if (cert) {
        doc["m"] = cert->m;
        doc["prec"] = cert->prec;
        text = "eisenstein: irreducible, certificate m = " + std::to_string(cert->m) +
               " (prec " + std::to_string(cert->prec) + ")\n";
    }
    emit(o, doc, text);
    return kExitOk;
}

int run_co(const Options& o, const ContextPtr& ctx) {
    SkewPoly z = parse_element(o.exprs[0], ctx, RingTag::S);
    bool holds = condition_CO(z);
    emit(o,
         Json{{"kind", "co"},
              {"context", context_to_json(*ctx)},
              {"input", to_json(z)},
              {"holds", holds}},
         std::string("condition CO (S = XS + zS): ") + (holds ? "holds" : "does not hold") +
             "\n");
    return kExitOk;
}

int run_order(const Options& o, const ContextPtr& ctx) {
    Automorphism::OrderResult r = ctx->alpha.finite_order_check(o.nmax);
    emit(o,
         Json{{"kind", "order"},
              {"context", context_to_json(*ctx)},
              {"found", r.found},
              {"n", r.n},
              {"n_max", r.n_max}},
         r.found ? "order: " + std::to_string(r.n) + "\n"
                 : "order: not found up to " + std::to_string(r.n_max) + "\n");
    return kExitOk;
}

int run_extract(const Options& o, const ContextPtr& ctx) {
    SkewPoly z = parse_element(o.exprs[0], ctx, RingTag::S);
    ExtractResult r = extract_right_factor(z);
    if (!r.ok()) {
        emit(o,
             Json{{"kind", "right_factor"},
                  {"context", context_to_json(*ctx)},
                  {"input", to_json(z)},
                  {"ok", false},
                  {"failure", r.failure}},
             "");
        std::cerr << "extract failed: " << r.failure << "\n";
        return kExitOperation;
    }
    const RightFactorWitness& w = *r.witness;
    std::ostringstream text;
    text << "divisor:  " << print_element(w.divisor) << "\n"
         << "quotient: " << print_element(w.quotient) << "\n";
    for (std::size_t i = 0; i < w.h.size(); ++i) {
        text << "h[" << i << "]:     " << w.h[i].to_string() << "\n";
    }
    text << "n:        " << w.n << "\nprec:     " << w.prec << "\n";
    emit(o, witness_to_json(z, w), text.str());
    return kExitOk;
}

int run_canonc(const Options& o, const ContextPtr& ctx) {
    SkewPoly c = parse_element(o.exprs[0], ctx, RingTag::S);
    CanonicalizeResult r = canonicalize_typeC(c);
    if (r.kind == CanonicalizeResult::Kind::Canonical) {
        emit(o,
             Json{{"kind", "canonical_typeC"},
                  {"context", context_to_json(*ctx)},
                  {"input", to_json(c)},
                  {"result", "canonical"},
                  {"c_hat", to_json(*r.c_hat)},
                  {"u", to_json(*r.u)}},
             "canonical: " + print_element(*r.c_hat) + "\nunit u:    " + r.u->to_string() +
                 "\n");
        return kExitOk;
    }
    Json doc = witness_to_json(c, *r.witness);
    doc["result"] = "reducible";
    emit(o, doc,
         "not canonicalizable: the element is reducible\ndivisor:  " +
             print_element(r.witness->divisor) + "\nquotient: " +
             print_element(r.witness->quotient) + "\nprec:     " +
             std::to_string(r.witness->prec) + "\n");
    return kExitOk;
}

int run_commute(const Options& o, const ContextPtr& ctx) {
    SkewPoly c = parse_element(o.c_src, ctx, RingTag::S);
    SkewPoly b = parse_element(o.b_src, ctx, RingTag::S);
    CommuteResult r = commute_CB(c, b);
    if (!r.ok()) {
        emit(o,
             Json{{"kind", "commutation"},
                  {"context", context_to_json(*ctx)},
                  {"c", to_json(c)},
                  {"b", to_json(b)},
                  {"ok", false},
                  {"falsification", r.falsification}},
             "");
        std::cerr << "commute falsified: " << r.falsification << "\n";
        return kExitOperation;
    }
    emit(o, witness_to_json(c, b, *r.witness),
         "b': " + print_element(r.witness->b_prime) + "\nc': " +
             print_element(r.witness->c_prime) + "\nprec: " + std::to_string(r.witness->prec) +
             "\n");
    return kExitOk;
}

int run_factor(const Options& o, const ContextPtr& ctx) {
    SkewPoly z = parse_element(o.exprs[0], ctx, RingTag::S);
    FactorizationReport rep = factor_best_effort(z);
    std::ostringstream text;
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        const FactorEntry& e = rep.factors[i];
        text << "factor " << i << ": " << print_element(e.factor) << "  ["
             << e.shape.describe() << "]";
        if (e.atom_at_precision) text << " atom";
        if (e.eisenstein) text << " eisenstein(m = " << e.eisenstein->m << ")";
        text << "\n";
    }
    text << "product verified: " << (rep.product_verified ? "yes" : "NO") << "\nprec: "
         << rep.prec << "\n";
    emit(o, report_to_json(z, rep), text.str());
    return rep.product_verified ? kExitOk : kExitOperation;
}

int run_gcrd(const Options& o, const ContextPtr& ctx) {
    SkewPoly a = parse_element(o.exprs[0], ctx, RingTag::T);
    SkewPoly b = parse_element(o.exprs[1], ctx, RingTag::T);
    GcrdResult r = gcrd(a, b);
    emit(o,
         Json{{"kind", "gcrd"},
              {"context", context_to_json(*ctx)},
              {"a", to_json(a)},
              {"b", to_json(b)},
              {"g", to_json(r.g)},
              {"u", to_json(r.u)},
              {"v", to_json(r.v)},
              {"prec", r.prec}},
         "gcrd: " + print_element(r.g) + "\nu:    " + print_element(r.u) + "\nv:    " +
             print_element(r.v) + "\nprec: " + std::to_string(r.prec) + "\n");
    return kExitOk;
}

int run_lclm(const Options& o, const ContextPtr& ctx) {
    SkewPoly a = parse_element(o.exprs[0], ctx, RingTag::T);
    SkewPoly b = parse_element(o.exprs[1], ctx, RingTag::T);
    SkewPoly m = lclm(a, b);
    emit(o,
         Json{{"kind", "lclm"},
              {"context", context_to_json(*ctx)},
              {"a", to_json(a)},
              {"b", to_json(b)},
              {"lclm", to_json(m)}},
         "lclm: " + print_element(m) + "\n");
    return kExitOk;
}

int run_similar(const Options& o, const ContextPtr& ctx) {
    SkewPoly a = parse_element(o.exprs[0], ctx, RingTag::T);
    SkewPoly b = parse_element(o.exprs[1], ctx, RingTag::T);
    SimilaritySearchResult r = search_similarity(a, b, o.bound);
    if (!r.found()) {
        emit(o,
             Json{{"kind", "similarity"},
                  {"context", context_to_json(*ctx)},
                  {"a", to_json(a)},
                  {"b", to_json(b)},
                  {"found", false},
                  {"deg_bound", r.deg_bound},
                  {"reason", r.reason}},
             "no witness found (" + r.reason + ", bound " + std::to_string(r.deg_bound) +
                 ")\n");
        return kExitOk;
    }
    emit(o, witness_to_json(a, b, *r.witness),
         "witness u: " + print_element(r.witness->u) + "\nprec:      " +
             std::to_string(r.witness->prec) + "\n");
    return kExitOk;
}

int run_ext(const Options& o, const ContextPtr& ctx) {
    SkewPoly a = parse_element(o.exprs[0], ctx, RingTag::T);
    SkewPoly b = parse_element(o.exprs[1], ctx, RingTag::T);
    ExtSearchResult r = ext_vanishing_search(a, b);
    if (!r.found()) {
        emit(o,
             Json{{"kind", "ext_vanishing"},
                  {"context", context_to_json(*ctx)},
                  {"a", to_json(a)},
                  {"b", to_json(b)},
                  {"found", false},
                  {"slack", r.bounds.slack},
                  {"min_val", r.bounds.min_val}},
             "no witness found (searched to slack " + std::to_string(r.bounds.slack) +
                 ", min_val " + std::to_string(r.bounds.min_val) + ")\n");
        return kExitOk;
    }
    emit(o, witness_to_json(a, b, *r.witness),
         "u: " + print_element(r.witness->u) + "\nv: " + print_element(r.witness->v) +
             "\nprec: " + std::to_string(r.witness->prec) + "\n");
    return kExitOk;
}

int run_audit(const Options& o, const ContextPtr& ctx) {
    Sampler sampler(ctx, o.seed);
    int passed = 0;
    Json falsifications = Json::array();
    std::ostringstream detail;
    for (int i = 0; i < o.count; ++i) {
        SkewPoly c = sampler.type_c(sampler.uniform_int(1, 3));
        SkewPoly b = sampler.type_b(sampler.uniform_int(1, 3));
        CommuteResult r = commute_CB(c, b);
        if (r.ok()) {
            ++passed;
        } else {
            falsifications.push_back(Json{{"c", to_json(c)},
                                          {"b", to_json(b)},
                                          {"reason", r.falsification}});
            detail << "falsified: c = " << print_element(c) << ", b = " << print_element(b)
                   << " — " << r.falsification << "\n";
        }
    }
    const int failed = o.count - passed;
    emit(o,
         Json{{"kind", "audit"},
              {"context", context_to_json(*ctx)},
              {"total", o.count},
              {"passed", passed},
              {"falsifications", std::move(falsifications)}},
         "audit: " + std::to_string(o.count) + " commutation pairs, " +
             std::to_string(passed) + " passed, " + std::to_string(failed) + " falsified\n" +
             detail.str());
    return failed == 0 ? kExitOk : kExitFalsified;
}

int run_verify(const Options& o) {
    std::string raw;
    if (o.file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        raw = buf.str();
    } else {
        std::ifstream in(o.file);
        if (!in) {
            std::cerr << "cannot open " << o.file << "\n";
            return kExitConfig;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        raw = buf.str();
    }
    Json doc;
    try {
        doc = Json::parse(raw);
    } catch (const Json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return kExitConfig;
    }
    std::string reason = verify_witness_json(doc);
    emit(o,
         Json{{"kind", "verify"}, {"ok", reason.empty()}, {"reason", reason}},
         reason.empty() ? "verified\n" : "NOT verified: " + reason + "\n");
    return reason.empty() ? kExitOk : kExitOperation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "skewcalc — exact arithmetic and factorization in k[[X]][theta; alpha], "
        "alpha(X) = qX, at fixed X-adic precision"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--field", o.field, "base field: q (rationals) or fp:<p>")
        ->capture_default_str();
    app.add_option("--q", o.q, "series literal for q = alpha(X)/X (unit constant term)")
        ->capture_default_str();
    app.add_option("--prec", o.prec, "X-adic working precision (>= 4)")->capture_default_str();
    app.add_option("--vmax", o.vmax, "Laurent valuation floor (valuations below -vmax error)")
        ->capture_default_str();
    app.add_flag("--json", o.json, "emit machine-readable JSON documents");
    app.add_option("--seed", o.seed, "seed for randomized drivers")->capture_default_str();

    auto add_sub = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    CLI::App* mul = add_sub("mul", "multiply elements left to right in ring order");
    mul->add_option("expr", o.exprs, "element expressions")->required()->expected(2, -1);
    mul->add_option("--ring", o.ring, "S or T")->check(CLI::IsMember({"S", "T"}));

    CLI::App* divmod = add_sub("divmod", "divide with remainder (deg rem < deg divisor)");
    divmod->add_option("expr", o.exprs, "dividend and divisor")->required()->expected(2);
    divmod->add_option("--side", o.side, "right: z = q*d + r; left: z = d*q + r")
        ->check(CLI::IsMember({"right", "left"}));
    divmod->add_option("--ring", o.ring, "S or T")->check(CLI::IsMember({"S", "T"}));

    CLI::App* classify = add_sub("classify", "normalization certificate and shape taxonomy");
    classify->add_option("expr", o.exprs, "element of S")->required()->expected(1);

    CLI::App* eis = add_sub("eisenstein", "Eisenstein-style irreducibility certificate");
    eis->add_option("expr", o.exprs, "element of S")->required()->expected(1);

    CLI::App* co = add_sub("co", "check condition CO: S = XS + zS");
    co->add_option("expr", o.exprs, "element of S")->required()->expected(1);

    CLI::App* order = add_sub("order", "search for the multiplicative order of alpha");
    order->add_option("--nmax", o.nmax, "search bound")->capture_default_str();

    CLI::App* extract = add_sub("extract", "converse-Eisenstein monic right factor");
    extract->add_option("expr", o.exprs, "element of S")->required()->expected(1);

    CLI::App* canonc = add_sub("canonc", "canonical form of a type C element");
    canonc->add_option("expr", o.exprs, "type C element of S")->required()->expected(1);

    CLI::App* commute = add_sub("commute", "swap cb into b'c' (monoid commutation witness)");
    commute->add_option("--c", o.c_src, "type C element")->required();
    commute->add_option("--b", o.b_src, "type B element (1 mod XS)")->required();

    CLI::App* factor = add_sub("factor", "best-effort factorization into tagged atoms");
    factor->add_option("expr", o.exprs, "element of S")->required()->expected(1);

    CLI::App* gcrd_cmd = add_sub("gcrd", "greatest common right divisor with Bezout data");
    gcrd_cmd->add_option("expr", o.exprs, "two elements of T")->required()->expected(2);

    CLI::App* lclm_cmd = add_sub("lclm", "least common left multiple");
    lclm_cmd->add_option("expr", o.exprs, "two elements of T")->required()->expected(2);

    CLI::App* similar = add_sub("similar", "bounded search for a similarity witness");
    similar->add_option("expr", o.exprs, "two elements of T")->required()->expected(2);
    similar->add_option("--bound", o.bound, "degree bound for the witness (0 = automatic)")
        ->capture_default_str();

    CLI::App* ext = add_sub("ext", "search for u, v with u*a + b*v = 1");
    ext->add_option("expr", o.exprs, "two elements of T")->required()->expected(2);

    CLI::App* audit = add_sub("audit", "randomized commutation audit (exit 3 on falsification)");
    audit->add_option("--count", o.count, "number of sampled (c, b) pairs")
        ->capture_default_str();

    CLI::App* verify = add_sub("verify", "re-check a witness JSON document from scratch");
    verify->add_option("file", o.file, "path to the document, or - for stdin")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    // `verify` documents carry their own context envelope.
    if (verify->parsed()) {
        return run_verify(o);
    }

    ContextPtr ctx;
    try {
        ctx = build_context(o);
    } catch (const error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (mul->parsed()) return run_mul(o, ctx);
        if (divmod->parsed()) return run_divmod(o, ctx);
        if (classify->parsed()) return run_classify(o, ctx);
        if (eis->parsed()) return run_eisenstein(o, ctx);
        if (co->parsed()) return run_co(o, ctx);
        if (order->parsed()) return run_order(o, ctx);
        if (extract->parsed()) return run_extract(o, ctx);
        if (canonc->parsed()) return run_canonc(o, ctx);
        if (commute->parsed()) return run_commute(o, ctx);
        if (factor->parsed()) return run_factor(o, ctx);
        if (gcrd_cmd->parsed()) return run_gcrd(o, ctx);
        if (lclm_cmd->parsed()) return run_lclm(o, ctx);
        if (similar->parsed()) return run_similar(o, ctx);
        if (ext->parsed()) return run_ext(o, ctx);
        if (audit->parsed()) return run_audit(o, ctx);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperation;
    }
    return kExitConfig;
}

#pragma once

#include <stdexcept>
#include <string>

namespace skewseries {

// Root of all library errors so callers can catch the whole family at once.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Inversion of a non-unit (series with zero constant term, zero scalar, ...).
struct not_a_unit : error {
    explicit not_a_unit(const std::string& what) : error(what) {}
};

// An operation ran out of X-adic precision before it could certify its result.
struct precision_error : error {
    explicit precision_error(const std::string& what) : error(what) {}
};

// A Laurent valuation dropped below the configured floor -vmax.
struct valuation_error : error {
    explicit valuation_error(const std::string& what) : error(what) {}
};

// Misuse of the API: mixed fields/contexts, violated preconditions.
struct usage_error : error {
    explicit usage_error(const std::string& what) : error(what) {}
};

// Expression or JSON syntax error; carries a character position when known.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    explicit parse_error(const std::string& what) : error(what), pos(std::string::npos) {}
    std::size_t pos;
};

}  // namespace skewseries

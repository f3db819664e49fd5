#pragma once

#include <stdexcept>
#include <string>

namespace mjw {

enum class errc {
    domain,
    parameter,
    analyticity,
    branch,
    numerical,
    contour,
    unsupported_order,
    invalid_function,
    precision_exhausted,
    truncation,
    indexing,
};

inline const char* to_string(errc e) {
    switch (e) {
        case errc::domain: return "domain";
        case errc::parameter: return "parameter";
        case errc::analyticity: return "analyticity";
        case errc::branch: return "branch";
        case errc::numerical: return "numerical";
        case errc::contour: return "contour";
        case errc::unsupported_order: return "unsupported_order";
        case errc::invalid_function: return "invalid_function";
        case errc::precision_exhausted: return "precision_exhausted";
        case errc::truncation: return "truncation";
        case errc::indexing: return "indexing";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

// Raised by the recurrence builder; carries the last degree that succeeded.
class precision_exhausted : public error {
public:
    precision_exhausted(int degree, const std::string& what)
        : error(errc::precision_exhausted, what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

}  // namespace mjw

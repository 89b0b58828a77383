#pragma once

#include <string>
#include <vector>

#include "tropgb/poly.hpp"

namespace tropgb {

/// Parsed problem file: field data, order, mode, degree bound, generators.
struct ProblemFile {
    std::int64_t prime = 2;
    std::vector<std::string> vars;
    TropicalOrder order;
    /// Degree bound: an explicit value, or the Macaulay bound of the
    /// generator degrees (keyword `macaulay`, also the default when the
    /// number of generators equals the number of variables).
    bool degree_bound_is_macaulay = false;
    std::int64_t degree_bound = -1;
    bool capped = false;
    std::int64_t capped_precision = 0;
    std::vector<HomogeneousPoly> gens;

    std::int64_t resolved_degree_bound() const;
};

ProblemFile parse_problem(const std::string& text);

/// Canonical text form; parse_problem(print_problem(p)) reproduces p.
std::string print_problem(const ProblemFile& p);

/// Standalone scalar literal: integer, rational `a/b`, or capped
/// `a + O(p^m)` / `O(p^m)` (whitespace-insensitive). Exact literals are
/// truncated when `capped_precision` >= 0; capped literals are rejected
/// when it is < 0.
Scalar parse_scalar_literal(const std::string& text, std::int64_t prime,
                            std::int64_t capped_precision);

/// Polynomial in the problem-file syntax, e.g.
/// `3*x^2*y - 1/7*z^3 + (4 + O(7^10))*x*y*z`.
HomogeneousPoly parse_polynomial(const std::string& text,
                                 const std::vector<std::string>& vars,
                                 std::int64_t prime, std::int64_t capped_precision);

std::string print_scalar(const Scalar& s);

} // namespace tropgb

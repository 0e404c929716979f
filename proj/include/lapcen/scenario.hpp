#pragma once

#include <string_view>

#include "lapcen/econ.hpp"

namespace lapcen {

/// Named shock: "uniform" (all ones), "eigvec:k" (q_k, k in 0..n-1),
/// "unit:<label>" (e_i). Comma-separated numbers give theta directly.
Vector<double> parse_theta(std::string_view text, const Graph& g, const Spectrum<double>& s);

/// Comma-separated labels, or "all".
std::vector<Index> parse_targets(std::string_view text, const Graph& g);

/// JSON scenario:
///   {"beta": 1.0, "theta": "uniform" | "eigvec:1" | "unit:a" | [..],
///    "beta_tilde": 0.2, "targets": ["a", "b"] | "all"}
/// beta is required; theta defaults to "uniform", beta_tilde to 0, targets to
/// all nodes. Throws ParseError.
EconScenario<double> parse_scenario(std::string_view json_text, const Graph& g, const Spectrum<double>& s);

}  // namespace lapcen

#pragma once

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <vector>

#include "cnull/polynomial.hpp"

namespace cnull {

/// Polynomial together with the variable names it was written in.
struct NamedPoly {
  std::vector<std::string> vars;
  MPoly poly;
};

/// {"vars": [...], "terms": [{"c": "-3/2", "e": [3, 0]}, ...]}
/// Terms are emitted in graded-lex order, leading term first.
nlohmann::json poly_to_json(const MPoly& p, std::span<const std::string> vars);

/// Reads a polynomial in its own variables. Throws Error{SchemaError}.
NamedPoly poly_from_json(const nlohmann::json& j);

/// Reads a polynomial and re-expresses it over `context_vars`: each of its
/// variable names must occur in the context. A document without "vars" is
/// taken to be written over the context directly.
MPoly poly_from_json(const nlohmann::json& j, std::span<const std::string> context_vars);

/// Names "prefix1", "prefix2", ...
std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count);

}  // namespace cnull

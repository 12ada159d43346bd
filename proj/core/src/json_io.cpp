#include "cnull/json_io.hpp"

#include <algorithm>

#include "cnull/error.hpp"

namespace cnull {

using nlohmann::json;

json poly_to_json(const MPoly& p, std::span<const std::string> vars) {
  if (vars.size() != p.var_count()) {
    throw Error(ErrorKind::LengthMismatch, "variable names do not match var_count");
  }
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"c", format_rat(c)}, {"e", e}});
  }
  return {{"vars", std::vector<std::string>(vars.begin(), vars.end())}, {"terms", terms}};
}

namespace {

MPoly read_terms(const json& j, std::size_t var_count) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw Error(ErrorKind::SchemaError, "polynomial needs a \"terms\" array");
  }
  MPoly p(var_count);
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("c") || !term.contains("e") || !term.at("c").is_string() ||
        !term.at("e").is_array()) {
      throw Error(ErrorKind::SchemaError, "term needs string \"c\" and array \"e\"");
    }
    Exponent e;
    for (const auto& v : term.at("e")) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw Error(ErrorKind::SchemaError, "exponents must be nonnegative integers");
      }
      e.push_back(v.get<std::uint32_t>());
    }
    if (e.size() != var_count) {
      throw Error(ErrorKind::SchemaError, "exponent vector length " + std::to_string(e.size()) +
                                              " differs from " + std::to_string(var_count) + " variables");
    }
    p.add_term(e, parse_rat(term.at("c").get<std::string>()));
  }
  return p;
}

}  // namespace

NamedPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.at("vars").is_array()) {
    throw Error(ErrorKind::SchemaError, "polynomial needs a \"vars\" array");
  }
  std::vector<std::string> vars;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) throw Error(ErrorKind::SchemaError, "variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  if (vars.empty()) throw Error(ErrorKind::SchemaError, "polynomial needs at least one variable");
  MPoly p = read_terms(j, vars.size());
  return {std::move(vars), std::move(p)};
}

MPoly poly_from_json(const json& j, std::span<const std::string> context_vars) {
  if (j.is_object() && !j.contains("vars")) return read_terms(j, context_vars.size());
  NamedPoly named = poly_from_json(j);
  std::vector<MPoly> subs;
  for (const auto& name : named.vars) {
    auto it = std::find(context_vars.begin(), context_vars.end(), name);
    if (it == context_vars.end()) {
      throw Error(ErrorKind::SchemaError, "unknown variable '" + name + "'");
    }
    subs.push_back(MPoly::variable(context_vars.size(), static_cast<std::size_t>(it - context_vars.begin())));
  }
  return compose(named.poly, subs);
}

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace cnull

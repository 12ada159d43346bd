#pragma once

#include <fstream>
#include <memory>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "cnull/variety.hpp"

namespace cnull::test {

inline std::string fixture_path(const std::string& name) { return std::string(CNULL_FIXTURES) + "/" + name; }

inline nlohmann::json read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  return nlohmann::json::parse(in);
}

inline std::shared_ptr<const Variety> variety(const std::string& name) {
  return std::make_shared<const Variety>(load_variety(read_fixture(name)));
}

inline CAMap map(const std::string& name, const std::shared_ptr<const Variety>& domain) {
  return load_map(read_fixture(name), domain);
}

/// A proper map with a function on its domain, as stored in the fixtures.
struct Case {
  std::string label;
  std::shared_ptr<const Variety> domain;
  CAMap f;
  CAMap g;
};

inline Case make_case(const std::string& label, const std::string& v, const std::string& f, const std::string& g) {
  auto dom = variety(v);
  return {label, dom, map(f, dom), map(g, dom)};
}

/// Proper k = n = 1 fixtures on which the resultant oracle applies.
inline std::vector<Case> curve_cases() {
  return {
      make_case("cusp", "cusp.json", "cusp_f.json", "cusp_g.json"),
      make_case("parabola", "parabola.json", "parabola_f.json", "parabola_g.json"),
      make_case("line t, t^2", "line.json", "line_x.json", "line_x2.json"),
      make_case("line t^2, t^3", "line.json", "line_x2.json", "line_x3.json"),
      make_case("line t^3, t^2", "line.json", "line_x3.json", "line_x2.json"),
      make_case("line t, t", "line.json", "line_x.json", "line_x.json"),
      make_case("cusp x, x", "cusp.json", "cusp_f.json", "cusp_f.json"),
  };
}

/// Random polynomials with small integer coefficients.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : engine_(seed) {}

  MPoly poly(std::size_t vars, int max_degree, int max_terms) {
    MPoly p(vars);
    const int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) {
      Exponent e(vars, 0);
      int left = uniform(0, max_degree);
      for (std::size_t v = 0; v < vars && left > 0; ++v) {
        const int take = v + 1 == vars ? left : uniform(0, left);
        e[v] = static_cast<std::uint32_t>(take);
        left -= take;
      }
      p.add_term(e, Rat(uniform(-9, 9), uniform(1, 4)));
    }
    return p;
  }

  Rat rat(int height) {
    Rat r(uniform(-height, height), uniform(1, height));
    r.canonicalize();
    return r;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cnull::test

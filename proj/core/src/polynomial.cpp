#include "cnull/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cnull/error.hpp"

namespace cnull {

namespace {

std::uint64_t exponent_sum(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = exponent_sum(a);
  const auto db = exponent_sum(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(std::size_t var_count) : var_count_(var_count) {}

MPoly MPoly::constant(std::size_t var_count, const Rat& c) {
  MPoly p(var_count);
  p.add_term(Exponent(var_count, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t var_count, std::size_t index) {
  if (index >= var_count) {
    throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  }
  Exponent e(var_count, 0);
  e[index] = 1;
  return monomial(std::move(e), Rat(1));
}

MPoly MPoly::monomial(Exponent exponent, const Rat& c) {
  MPoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0);
}

Rat MPoly::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::constant_term() const { return coefficient(Exponent(var_count_, 0)); }

void MPoly::add_term(const Exponent& exponent, const Rat& c) {
  if (exponent.size() != var_count_) {
    throw Error(ErrorKind::VariableCountMismatch, "exponent length differs from var_count");
  }
  if (c == 0) return;
  Rat value(c);
  value.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponent, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> MPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order: the leading term has maximal total degree.
  return static_cast<int>(exponent_sum(terms_.begin()->first));
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

const std::pair<const Exponent, Rat>& MPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
  return *terms_.begin();
}

void MPoly::check_same_ring(const MPoly& other, const char* op) const {
  if (other.var_count_ != var_count_) {
    throw Error(ErrorKind::VariableCountMismatch,
                std::string(op) + ": " + std::to_string(var_count_) + " vs " +
                    std::to_string(other.var_count_) + " variables");
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_same_ring(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_same_ring(other, "sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_ring(b, "mul");
  MPoly r(a.var_count_);
  Exponent e(a.var_count_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.var_count_ == b.var_count_ && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& out, const MPoly& p) { return out << p.to_string(); }

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result = constant(var_count_, Rat(1));
  MPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
  if (point.size() != var_count_) {
    throw Error(ErrorKind::LengthMismatch, "evaluation point has wrong length");
  }
  return evaluate_with<Rat>(point, [](const Rat& q) { return q; });
}

std::complex<double> MPoly::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != var_count_) {
    throw Error(ErrorKind::LengthMismatch, "evaluation point has wrong length");
  }
  return evaluate_with<std::complex<double>>(
      point, [](const Rat& q) { return std::complex<double>(q.get_d(), 0.0); });
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(var_count_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

MPoly MPoly::homogeneous_part(int degree) const {
  MPoly r(var_count_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(exponent_sum(e)) == degree) r.add_term(e, c);
  }
  return r;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || exponent_sum(e) == 0) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << name(i);
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

MPoly arith(const MPoly& p, const MPoly& q, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return p + q;
    case ArithKind::Sub: return p - q;
    case ArithKind::Mul: return p * q;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown arithmetic kind");
}

MPoly compose(const MPoly& p, std::span<const MPoly> subs) {
  if (subs.size() != p.var_count()) {
    throw Error(ErrorKind::LengthMismatch, "compose: substitution count differs from var_count");
  }
  if (subs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "compose: empty substitution");
  }
  const std::size_t target = subs.front().var_count();
  for (const auto& s : subs) {
    if (s.var_count() != target) {
      throw Error(ErrorKind::VariableCountMismatch, "compose: substitutes live in different rings");
    }
  }
  return p.evaluate_with<MPoly>(subs, [target](const Rat& q) { return MPoly::constant(target, q); });
}

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (p.var_count() != q.var_count()) {
    throw Error(ErrorKind::VariableCountMismatch, "exact_divide: different rings");
  }
  // If q | p then LT(p) = LT(r)·LT(q); any failure of monomial divisibility
  // of the current leading term proves non-divisibility.
  MPoly rem = p;
  MPoly quot(p.var_count());
  const auto& [lq_exp, lq_coeff] = q.leading_term();
  while (!rem.is_zero()) {
    const auto& [lp_exp, lp_coeff] = rem.leading_term();
    if (!divides(lq_exp, lp_exp)) return std::nullopt;
    Exponent e(lp_exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = lp_exp[i] - lq_exp[i];
    const MPoly step = MPoly::monomial(e, lp_coeff / lq_coeff);
    quot += step;
    rem -= step * q;
  }
  return quot;
}

MPoly exact_divide(const MPoly& p, const MPoly& q) {
  auto r = try_divide(p, q);
  if (!r) throw Error(ErrorKind::NotDivisible, "divisor does not divide dividend exactly");
  return std::move(*r);
}

std::vector<MPoly> coefficients_in(const MPoly& p, std::size_t var) {
  if (var >= p.var_count()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  const int deg = p.degree_in(var);
  std::vector<MPoly> out(deg < 0 ? 0 : static_cast<std::size_t>(deg) + 1, MPoly(p.var_count()));
  for (const auto& [e, c] : p.terms()) {
    Exponent stripped = e;
    stripped[var] = 0;
    out[e[var]].add_term(stripped, c);
  }
  return out;
}

MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var) {
  if (p.var_count() != q.var_count()) {
    throw Error(ErrorKind::VariableCountMismatch, "resultant: different rings");
  }
  const std::size_t n = p.var_count();
  if (p.is_zero() || q.is_zero()) return MPoly(n);
  const auto pc = coefficients_in(p, var);
  const auto qc = coefficients_in(q, var);
  const std::size_t dp = pc.size() - 1;
  const std::size_t dq = qc.size() - 1;
  if (dp == 0 && dq == 0) return MPoly::constant(n, Rat(1));
  if (dp == 0) return p.pow(static_cast<unsigned>(dq));
  if (dq == 0) return q.pow(static_cast<unsigned>(dp));

  const std::size_t size = dp + dq;
  std::vector<std::vector<MPoly>> m(size, std::vector<MPoly>(size, MPoly(n)));
  for (std::size_t row = 0; row < dq; ++row) {
    for (std::size_t i = 0; i <= dp; ++i) m[row][row + i] = pc[dp - i];
  }
  for (std::size_t row = 0; row < dp; ++row) {
    for (std::size_t i = 0; i <= dq; ++i) m[dq + row][row + i] = qc[dq - i];
  }

  // Bareiss elimination; every division below is exact in Q[vars].
  bool negate = false;
  MPoly prev_pivot = MPoly::constant(n, Rat(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return MPoly(n);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev_pivot);
      }
      m[i][k] = MPoly(n);
    }
    prev_pivot = m[k][k];
  }
  MPoly det = m[size - 1][size - 1];
  return negate ? -det : det;
}

std::vector<Rat> dense_coefficients(const MPoly& p) {
  if (p.var_count() != 1) throw Error(ErrorKind::VariableCountMismatch, "expected univariate polynomial");
  std::vector<Rat> out(static_cast<std::size_t>(p.degree_in(0) + 1));
  for (const auto& [e, c] : p.terms()) out[e[0]] = c;
  return out;
}

MPoly from_dense(std::span<const Rat> coeffs) {
  MPoly p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term(Exponent{static_cast<std::uint32_t>(i)}, coeffs[i]);
  }
  return p;
}

namespace {

// Remainder of a by b (b nonzero), both dense lowest-degree-first.
std::vector<Rat> dense_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

MPoly make_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * Rat(1 / p.leading_term().second);
}

}  // namespace

MPoly remainder_univariate(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  return from_dense(dense_rem(dense_coefficients(p), dense_coefficients(q)));
}

MPoly gcd_univariate(const MPoly& p, const MPoly& q) {
  auto a = dense_coefficients(p);
  auto b = dense_coefficients(q);
  while (!b.empty()) {
    auto r = dense_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(from_dense(a));
}

std::vector<MPoly> squarefree_decomposition(const MPoly& p) {
  if (p.var_count() != 1 || p.is_constant()) {
    throw Error(ErrorKind::InvalidArgument, "square-free decomposition needs a non-constant univariate polynomial");
  }
  std::vector<MPoly> factors;
  const MPoly f = make_monic(p);
  const MPoly df = f.derivative(0);
  MPoly a = gcd_univariate(f, df);
  MPoly b = exact_divide(f, a);
  MPoly c = exact_divide(df, a);
  MPoly d = c - b.derivative(0);
  while (!b.is_constant()) {
    MPoly g = gcd_univariate(b, d);
    factors.push_back(g);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - b.derivative(0);
  }
  while (!factors.empty() && factors.back().is_constant()) factors.pop_back();
  return factors;
}

namespace {

// Lagrange-form interpolation in one variable with polynomial values:
// returns sum_i values[i] * prod_{j != i} (x - nodes[j]) / (nodes[i] - nodes[j]),
// where x is variable `var` of the `var_count`-variable ring.
MPoly interpolate_line(std::span<const Rat> nodes, std::span<const MPoly> values, std::size_t var,
                       std::size_t var_count) {
  MPoly result(var_count);
  const MPoly x = MPoly::variable(var_count, var);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (values[i].is_zero()) continue;
    MPoly basis = MPoly::constant(var_count, Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      basis *= x - MPoly::constant(var_count, nodes[j]);
      denom *= nodes[i] - nodes[j];
    }
    result += values[i] * basis * Rat(1 / denom);
  }
  return result;
}

struct PointLess {
  bool operator()(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace

MPoly interpolate(std::span<const Sample> samples, std::span<const int> degree_bounds) {
  const std::size_t n = degree_bounds.size();
  if (n == 0) throw Error(ErrorKind::GridMalformed, "no variables");
  for (int b : degree_bounds) {
    if (b < 0) throw Error(ErrorKind::GridMalformed, "negative degree bound");
  }

  // Distinct coordinates per variable in order of first appearance.
  std::vector<std::vector<Rat>> axes(n);
  std::map<std::vector<Rat>, Rat, PointLess> table;
  for (const auto& s : samples) {
    if (s.point.size() != n) throw Error(ErrorKind::GridMalformed, "sample dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(axes[i].begin(), axes[i].end(), s.point[i]) == axes[i].end()) {
        axes[i].push_back(s.point[i]);
      }
    }
    auto [it, inserted] = table.try_emplace(s.point, s.value);
    if (!inserted && it->second != s.value) {
      throw Error(ErrorKind::InconsistentSamples, "duplicate sample point with different values");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (axes[i].size() < static_cast<std::size_t>(degree_bounds[i]) + 1) {
      throw Error(ErrorKind::GridMalformed, "variable " + std::to_string(i + 1) + " has " +
                                                std::to_string(axes[i].size()) +
                                                " distinct coordinates, need " +
                                                std::to_string(degree_bounds[i] + 1));
    }
    axes[i].resize(static_cast<std::size_t>(degree_bounds[i]) + 1);
  }

  // Sequential interpolation: innermost variable first, then lift.
  std::vector<Rat> point(n);
  auto recurse = [&](auto&& self, std::size_t var) -> MPoly {
    if (var == n) {
      auto it = table.find(point);
      if (it == table.end()) throw Error(ErrorKind::GridMalformed, "tensor grid has a missing node");
      return MPoly::constant(n, it->second);
    }
    std::vector<MPoly> line;
    line.reserve(axes[var].size());
    for (const auto& node : axes[var]) {
      point[var] = node;
      line.push_back(self(self, var + 1));
    }
    return interpolate_line(axes[var], line, var, n);
  };
  MPoly result = recurse(recurse, 0);

  for (const auto& [pt, value] : table) {
    if (result.evaluate(pt) != value) {
      throw Error(ErrorKind::InconsistentSamples, "no interpolant within the degree bounds");
    }
  }
  return result;
}

}  // namespace cnull

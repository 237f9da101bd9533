#include "discdeg/degree_engine.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "discdeg/errors.hpp"
#include "discdeg/rational_matrix.hpp"

namespace discdeg {

namespace {

constexpr long long kCoordinateRange = 1'000'000;
constexpr int kRedrawBudget = 1000;

// Exact sum of term(i) for i < count, fanned out over `jobs` threads.
template <typename Term>
Rational parallel_sum(std::size_t count, unsigned jobs, const Term& term) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    Rational acc(0);
    for (std::size_t i = 0; i < count; ++i) acc += term(i);
    return acc;
  }
  std::vector<Rational> partial(jobs);
  std::vector<std::exception_ptr> failure(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < count; i += jobs) partial[j] += term(i);
        } catch (...) {
          failure[j] = std::current_exception();
        }
      });
  }
  for (auto& f : failure)
    if (f) std::rethrow_exception(f);
  Rational acc(0);
  for (const auto& p : partial) acc += p;
  return acc;
}

// (m + u) prod (m + b_k + u) / prod (-b_k); b_k = beta_k(t).
Rational localized_term(const Rational& m, std::span<const Rational> betas, const Rational& u) {
  Rational num = m + u;
  Rational den(1);
  for (const auto& b : betas) {
    if (b.is_zero()) throw NonGenericPoint("a root vanishes at the evaluation point");
    num *= m + b + u;
    den *= -b;
  }
  return num / den;
}

std::vector<Rational> values_at(std::span<const Weight> roots, std::span<const Rational> t) {
  std::vector<Rational> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(evaluate(r, t));
  return out;
}

Rational degree_at(const auto& class_sum, std::span<const Rational> t) {
  return -(class_sum(t, Rational(1)) - class_sum(t, Rational(0)));
}

// Evaluates at two generic points; on disagreement a third point decides by
// majority, otherwise InconsistencyError.
DegreeReport two_point_degree(const RootSystem& rs, std::uint64_t seed, const auto& class_sum,
                              std::span<const Weight> distinct) {
  DegreeReport report;
  std::vector<Rational> values;
  for (std::uint64_t k = 0; k < 2; ++k) {
    report.points_used.push_back(pick_generic_point(rs, seed + k, distinct));
    values.push_back(degree_at(class_sum, report.points_used.back().coords));
  }
  Rational value = values[0];
  if (values[0] != values[1]) {
    report.points_used.push_back(pick_generic_point(rs, seed + 2, distinct));
    const Rational third = degree_at(class_sum, report.points_used.back().coords);
    if (third != values[0] && third != values[1])
      throw InconsistencyError("generic points disagree: " + values[0].to_string() + ", " +
                               values[1].to_string() + ", " + third.to_string());
    value = third;
  }
  if (!value.is_integer() || value.sign() < 0)
    throw InconsistencyError("degree is not a nonnegative integer: " + value.to_string());
  report.degree = value;
  report.is_hypersurface = !value.is_zero();
  return report;
}

}  // namespace

Weight normalize_weight(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.ambient_dim())
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) +
                                " coordinates, expected " + std::to_string(rs.ambient_dim()));
  Weight w = rs.project_to_root_span(lambda);
  if (w.is_zero()) throw std::invalid_argument("the zero weight is not supported");
  if (!rs.is_dominant(w)) throw std::invalid_argument("weight " + w.to_string() + " is not dominant");
  if (!rs.is_integral(w)) throw std::invalid_argument("weight " + w.to_string() + " is not integral");
  return w;
}

TangentData tangent_data(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("weight " + lambda.to_string() + " is not dominant");
  TangentData data;
  for (const auto& beta : rs.negative_roots()) {
    switch (rs.pairing_sign(beta, lambda)) {
      case PairingSign::negative: data.tangent.push_back(beta); break;
      case PairingSign::zero: data.zero.push_back(beta); break;
      case PairingSign::positive:
        throw InconsistencyError("negative root pairs positively with a dominant weight");
    }
  }
  data.epsilon = data.zero.size() % 2 == 0 ? 1 : -1;

  // stabilizer: closure of a regular vector under the simple reflections
  // that fix lambda
  std::vector<Weight> generators;
  for (const auto& alpha : rs.simple_roots())
    if (dot(alpha, lambda).is_zero()) generators.push_back(alpha);
  Weight rho = Weight::zero(rs.ambient_dim());
  for (const auto& w : rs.fundamental_weights()) rho += w;
  std::set<Weight> seen{rho};
  std::vector<Weight> frontier{rho};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& v : frontier)
      for (const auto& alpha : generators) {
        Weight img = rs.reflect(v, alpha);
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  data.stabilizer_order = seen.size();
  return data;
}

GenericPoint pick_generic_point(const RootSystem& rs, std::uint64_t seed,
                                std::span<const Weight> distinct) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> draw(-kCoordinateRange, kCoordinateRange);
  for (int attempt = 0; attempt < kRedrawBudget; ++attempt) {
    GenericPoint p{std::vector<Rational>(rs.ambient_dim()), seed};
    for (auto& c : p.coords) c = Rational(draw(rng));
    const bool roots_ok = std::none_of(rs.positive_roots().begin(), rs.positive_roots().end(),
                                       [&](const Weight& b) { return evaluate(b, p.coords).is_zero(); });
    if (!roots_ok) continue;
    std::set<Rational> values;
    bool distinct_ok = true;
    for (const auto& w : distinct)
      if (!values.insert(evaluate(w, p.coords)).second) {
        distinct_ok = false;
        break;
      }
    if (distinct_ok) return p;
  }
  throw NonGenericPoint("no generic point found after " + std::to_string(kRedrawBudget) + " draws");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::orbit: return "orbit";
    case Method::symmetric: return "symmetric";
    case Method::fg: return "fg";
    case Method::closed_form: return "closed-form";
    case Method::permanent: return "permanent";
    case Method::jacobi: return "jacobi";
    case Method::scalar_product: return "scalar";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::orbit, Method::symmetric, Method::fg, Method::closed_form,
                   Method::permanent, Method::jacobi, Method::scalar_product})
    if (to_string(m) == name) return m;
  if (name == "scalar-product") return Method::scalar_product;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

Rational class_sum_orbit(const OrbitTable& orbit, std::span<const Rational> t, const Rational& u,
                         const EngineOptions& opts) {
  const Rational sum = parallel_sum(orbit.points.size(), opts.jobs, [&](std::size_t i) {
    const auto& p = orbit.points[i];
    return localized_term(evaluate(p.weight, t), values_at(p.tangent, t), u);
  });
  return -sum;
}

Rational class_sum_orbit(const RootSystem& rs, const Weight& lambda, std::span<const Rational> t,
                         const Rational& u, const EngineOptions& opts) {
  return class_sum_orbit(weyl_orbit(rs, lambda, opts.bound), t, u, opts);
}

namespace {

Rational symmetric_sum(const std::vector<WeylElement>& elements, const RootSystem& rs,
                       const Weight& lambda, const TangentData& td, std::span<const Rational> t,
                       const Rational& u, const EngineOptions& opts) {
  const auto& negative = rs.negative_roots();
  const Rational sum = parallel_sum(elements.size(), opts.jobs, [&](std::size_t i) {
    // (w f)(t) = f(w^{-1} t)
    const auto moved = elements[i].apply_inverse(t);
    return localized_term(evaluate(lambda, moved), values_at(negative, moved), u);
  });
  return -(Rational(td.epsilon) / Rational(static_cast<long long>(td.stabilizer_order))) * sum;
}

}  // namespace

Rational class_sum_symmetric(const RootSystem& rs, const Weight& lambda,
                             std::span<const Rational> t, const Rational& u,
                             const EngineOptions& opts) {
  const auto elements = weyl_elements(rs, opts.bound);
  return symmetric_sum(elements, rs, lambda, tangent_data(rs, lambda), t, u, opts);
}

DegreeReport degree(const RootSystem& rs, const Weight& lambda, std::uint64_t seed,
                    const EngineOptions& opts) {
  const Weight lam = normalize_weight(rs, lambda);
  const OrbitTable orbit = weyl_orbit(rs, lam, opts.bound);
  const TangentData td = tangent_data(rs, lam);
  if (td.stabilizer_order * orbit.points.size() != rs.weyl_order())
    throw InconsistencyError("orbit size and stabilizer order do not multiply to |W|");
  std::vector<Weight> orbit_weights;
  for (const auto& p : orbit.points) orbit_weights.push_back(p.weight);
  auto report = two_point_degree(
      rs, seed,
      [&](std::span<const Rational> t, const Rational& u) { return class_sum_orbit(orbit, t, u, opts); },
      orbit_weights);
  report.epsilon = td.epsilon;
  report.stabilizer_order = td.stabilizer_order;
  report.method = Method::orbit;
  return report;
}

DegreeReport degree_symmetric(const RootSystem& rs, const Weight& lambda, std::uint64_t seed,
                              const EngineOptions& opts) {
  const Weight lam = normalize_weight(rs, lambda);
  const TangentData td = tangent_data(rs, lam);
  const auto elements = weyl_elements(rs, opts.bound);
  auto report = two_point_degree(
      rs, seed,
      [&](std::span<const Rational> t, const Rational& u) {
        return symmetric_sum(elements, rs, lam, td, t, u, opts);
      },
      {});
  report.epsilon = td.epsilon;
  report.stabilizer_order = td.stabilizer_order;
  report.method = Method::symmetric;
  return report;
}

LinearClass equivariant_class(const RootSystem& rs, const Weight& lambda, std::uint64_t seed,
                              const EngineOptions& opts) {
  const Weight lam = normalize_weight(rs, lambda);
  const OrbitTable orbit = weyl_orbit(rs, lam, opts.bound);
  const std::size_t d = rs.ambient_dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> draw_u(-kCoordinateRange, kCoordinateRange);

  for (int attempt = 0; attempt < kRedrawBudget; ++attempt) {
    RationalMatrix samples(d + 1, d + 1);
    std::vector<Rational> values(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
      const auto p = pick_generic_point(rs, rng());
      const Rational u(draw_u(rng));
      for (std::size_t i = 0; i < d; ++i) samples(k, i) = p.coords[i];
      samples(k, d) = u;
      values[k] = class_sum_orbit(orbit, p.coords, u, opts);
    }
    if (samples.determinant().is_zero()) continue;
    auto solution = solve_linear(samples, values);
    LinearClass cls{{solution.begin(), solution.begin() + static_cast<std::ptrdiff_t>(d)}, solution[d]};

    const auto check = pick_generic_point(rs, rng());
    const Rational u(draw_u(rng));
    Rational predicted = cls.u_coefficient * u;
    for (std::size_t i = 0; i < d; ++i) predicted += cls.coords[i] * check.coords[i];
    if (predicted != class_sum_orbit(orbit, check.coords, u, opts))
      throw InconsistencyError("equivariant class is not a linear form in (t, u)");
    return cls;
  }
  throw NonGenericPoint("could not find affinely independent sample points");
}

bool weight_shift_check(const RootSystem& rs, const Weight& lambda, int a, std::uint64_t seed,
                        const EngineOptions& opts) {
  if (rs.factors().size() != 1 || rs.factors()[0].kind != FactorKind::GL)
    throw std::invalid_argument("weight_shift_check needs a single GL(n) factor");
  const std::size_t n = rs.ambient_dim();
  Weight shifted = lambda;
  Weight dual = Weight::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i] += Rational(a);
    dual[i] = Rational(a) - lambda[n - 1 - i];
  }
  const Rational base = degree(rs, lambda, seed, opts).degree;
  return degree(rs, shifted, seed, opts).degree == base && degree(rs, dual, seed, opts).degree == base;
}

}  // namespace discdeg

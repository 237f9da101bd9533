#include "discdeg/weyl_group.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "discdeg/errors.hpp"

namespace discdeg {

namespace {

// M s_a = M - c (M a) a^T with c = 2/(a,a)
void multiply_right_by_reflection(RationalMatrix& m, const Weight& alpha) {
  const Rational c = Rational(2) / dot(alpha, alpha);
  const auto ma = m.apply(alpha.coords());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (ma[i].is_zero()) continue;
    const Rational row = c * ma[i];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!alpha[j].is_zero()) m(i, j) -= row * alpha[j];
  }
}

// s_a M = M - c a (a^T M)
void multiply_left_by_reflection(RationalMatrix& m, const Weight& alpha) {
  const Rational c = Rational(2) / dot(alpha, alpha);
  const auto atm = m.apply_transpose(alpha.coords());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (alpha[i].is_zero()) continue;
    const Rational col = c * alpha[i];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!atm[j].is_zero()) m(i, j) -= col * atm[j];
  }
}

int determinant_sign(const RationalMatrix& m) {
  const Rational det = m.determinant();
  if (det != Rational(1) && det != Rational(-1))
    throw InconsistencyError("Weyl group element with determinant " + det.to_string());
  return det.sign();
}

Weight regular_vector(const RootSystem& rs) {
  Weight rho = Weight::zero(rs.ambient_dim());
  for (const auto& w : rs.fundamental_weights()) rho += w;
  return rho;
}

}  // namespace

void for_each_weyl_element(const RootSystem& rs,
                           const std::function<void(const WeylElement&)>& visit,
                           std::uint64_t bound) {
  if (rs.weyl_order() > bound)
    throw BoundExceeded("Weyl group of " + rs.label() + " has " + std::to_string(rs.weyl_order()) +
                        " elements, above the bound " + std::to_string(bound));
  const auto& simple = rs.simple_roots();
  const Weight rho = regular_vector(rs);

  std::set<Weight> seen;
  std::deque<WeylElement> queue;
  WeylElement id{{}, RationalMatrix::identity(rs.ambient_dim()), 1};
  seen.insert(rho);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < simple.size(); ++i) {
      WeylElement next{w.word, w.matrix, 1};
      multiply_right_by_reflection(next.matrix, simple[i]);
      if (!seen.insert(next.apply(rho)).second) continue;
      next.word.push_back(i);
      next.sign = determinant_sign(next.matrix);
      queue.push_back(std::move(next));
    }
    visit(w);
  }
  if (seen.size() != rs.weyl_order())
    throw InconsistencyError("Weyl group enumeration produced " + std::to_string(seen.size()) +
                             " elements, expected " + std::to_string(rs.weyl_order()));
}

std::vector<WeylElement> weyl_elements(const RootSystem& rs, std::uint64_t bound) {
  std::vector<WeylElement> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(rs.weyl_order(), bound)));
  for_each_weyl_element(rs, [&](const WeylElement& w) { out.push_back(w); }, bound);
  return out;
}

OrbitTable weyl_orbit(const RootSystem& rs, const Weight& lambda, std::uint64_t bound) {
  if (lambda.size() != rs.ambient_dim()) throw std::invalid_argument("weight has wrong dimension");
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("weight " + lambda.to_string() + " is not dominant");
  const auto& simple = rs.simple_roots();

  OrbitTable table;
  table.dominant = lambda;
  std::vector<Weight> tangent;
  for (const auto& beta : rs.negative_roots())
    if (rs.pairing_sign(beta, lambda) == PairingSign::negative) tangent.push_back(beta);

  std::map<Weight, std::size_t> index;
  index.emplace(lambda, 0);
  table.points.push_back({lambda, tangent, {{}, RationalMatrix::identity(rs.ambient_dim()), 1}});
  for (std::size_t head = 0; head < table.points.size(); ++head) {
    for (std::size_t i = 0; i < simple.size(); ++i) {
      const OrbitPoint& p = table.points[head];
      Weight mu = rs.reflect(p.weight, simple[i]);
      if (index.contains(mu)) continue;
      if (table.points.size() >= bound)
        throw BoundExceeded("orbit of " + lambda.to_string() + " exceeds the bound " +
                            std::to_string(bound));
      OrbitPoint q{std::move(mu), {}, p.witness};
      q.tangent.reserve(p.tangent.size());
      for (const auto& beta : p.tangent) q.tangent.push_back(rs.reflect(beta, simple[i]));
      q.witness.word.insert(q.witness.word.begin(), i);
      multiply_left_by_reflection(q.witness.matrix, simple[i]);
      q.witness.sign = determinant_sign(q.witness.matrix);
      index.emplace(q.weight, table.points.size());
      table.points.push_back(std::move(q));
    }
  }
  return table;
}

std::uint64_t stabilizer_order(const RootSystem& rs, const Weight& lambda, std::uint64_t bound) {
  const auto orbit = weyl_orbit(rs, lambda, bound);
  return rs.weyl_order() / orbit.points.size();
}

}  // namespace discdeg

#include "ng/debruijn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ng/numth.hpp"

namespace ng {

MultiDigraph::MultiDigraph(uint32_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  mult_.assign(static_cast<size_t>(n) * n, 0);
}

void MultiDigraph::add_edges(uint32_t from, uint32_t to, uint32_t multiplicity) {
  if (from >= n_ || to >= n_) throw std::invalid_argument("vertex out of range");
  mult_[static_cast<size_t>(from) * n_ + to] += multiplicity;
}

uint32_t MultiDigraph::edge_mult(uint32_t i, uint32_t j) const {
  if (i >= n_ || j >= n_) throw std::invalid_argument("vertex out of range");
  return mult_[static_cast<size_t>(i) * n_ + j];
}

uint32_t MultiDigraph::indegree(uint32_t v) const {
  if (v >= n_) throw std::invalid_argument("vertex out of range");
  uint32_t d = 0;
  for (uint32_t i = 0; i < n_; ++i)
    if (i != v) d += mult_[static_cast<size_t>(i) * n_ + v];
  return d;
}

uint32_t MultiDigraph::outdegree(uint32_t v) const {
  if (v >= n_) throw std::invalid_argument("vertex out of range");
  uint32_t d = 0;
  for (uint32_t j = 0; j < n_; ++j)
    if (j != v) d += mult_[static_cast<size_t>(v) * n_ + j];
  return d;
}

bool MultiDigraph::is_eulerian() const {
  for (uint32_t v = 0; v < n_; ++v)
    if (indegree(v) != outdegree(v)) return false;
  return true;
}

bool MultiDigraph::is_strongly_connected() const {
  auto reach_all = [&](bool transpose) {
    std::vector<bool> seen(n_, false);
    std::vector<uint32_t> stack{0};
    seen[0] = true;
    uint32_t count = 1;
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      for (uint32_t w = 0; w < n_; ++w) {
        uint32_t m = transpose ? mult_[static_cast<size_t>(w) * n_ + v]
                               : mult_[static_cast<size_t>(v) * n_ + w];
        if (m && !seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  };
  return reach_all(false) && reach_all(true);
}

MultiDigraph build_gamma(uint32_t p, uint32_t n) {
  if (p < 2) throw std::invalid_argument("edge fan-out must be >= 2");
  if (n == 0) throw std::invalid_argument("vertex count must be >= 1");
  MultiDigraph g(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < p; ++j)
      g.add_edges(i, static_cast<uint32_t>((static_cast<uint64_t>(p) * i + j) % n));
  if (!g.is_eulerian()) throw invariant_error("generalized de Bruijn graph is not Eulerian");
  if (!g.is_strongly_connected())
    throw invariant_error("generalized de Bruijn graph is not strongly connected");
  return g;
}

BigMatrix laplacian(const MultiDigraph& g) {
  if (!g.is_eulerian()) throw std::domain_error("laplacian requires an Eulerian graph");
  const uint32_t n = g.vertex_count();
  BigMatrix l(n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      l.at(i, j) = (i == j) ? -BigInt(g.indegree(i)) : BigInt(g.edge_mult(i, j));
  return l;
}

AbelianType sandpile_group(const MultiDigraph& g, SandpileMethod method) {
  if (!g.is_strongly_connected())
    throw std::domain_error("sandpile group requires a strongly connected graph");
  BigMatrix l = laplacian(g);
  if (method == SandpileMethod::full) {
    CokernelDecomposition d = cokernel_type(l);
    if (d.free_rank != 1)
      throw invariant_error("full Laplacian must leave exactly one free factor");
    return d.torsion;
  }
  if (g.vertex_count() == 1) return AbelianType();
  CokernelDecomposition d = cokernel_type(l.without_row_col(0, 0));
  if (d.free_rank != 0) throw invariant_error("reduced Laplacian must have full rank");
  return d.torsion;
}

std::vector<uint32_t> DoublingOrbits::reps() const {
  std::vector<uint32_t> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back(o.front());
  return out;
}

std::vector<uint32_t> DoublingOrbits::lengths() const {
  std::vector<uint32_t> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back(static_cast<uint32_t>(o.size()));
  return out;
}

uint32_t DoublingOrbits::orbit_length_of(uint32_t v) const {
  v %= modulus;
  if (v == 0) throw std::invalid_argument("zero has no orbit");
  for (const auto& o : orbits)
    if (std::find(o.begin(), o.end(), v) != o.end())
      return static_cast<uint32_t>(o.size());
  throw invariant_error("value missing from orbit partition");
}

DoublingOrbits doubling_orbits(uint32_t multiplier, uint32_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be >= 1");
  if (std::gcd<uint64_t>(multiplier, n) != 1)
    throw std::domain_error("multiplier must be invertible modulo n");
  DoublingOrbits d;
  d.multiplier = multiplier;
  d.modulus = n;
  std::vector<bool> seen(n, false);
  for (uint32_t s = 1; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> orbit;
    uint32_t t = s;
    do {
      seen[t] = true;
      orbit.push_back(t);
      t = static_cast<uint32_t>(static_cast<uint64_t>(t) * multiplier % n);
    } while (t != s);
    d.orbits.push_back(std::move(orbit));
  }
  return d;
}

AbelianType closed_form_odd(uint32_t n) {
  if (n % 2 == 0) throw std::invalid_argument("closed_form_odd needs odd n");
  if (n == 1) return AbelianType();
  DoublingOrbits orbits = doubling_orbits(2, n);
  auto mersenne = [](uint32_t l) {
    if (l >= 64) throw resource_limit_error("orbit length exceeds 64-bit range");
    return (uint64_t{1} << l) - 1;
  };
  AbelianType acc;
  // One summand per prime q | n: with q' the q-power part of n, the cyclic
  // group of order 2^l - 1 (l the doubling orbit length of n/q') scaled by q'.
  std::vector<uint32_t> consumed;  // the values n / q', each minimal in its orbit
  for (auto [q, e] : numth::factorize(n)) {
    uint64_t qp = 1;
    for (unsigned j = 0; j < e; ++j) qp *= q;
    uint32_t rest = static_cast<uint32_t>(n / qp);
    consumed.push_back(rest);
    uint64_t cyc = mersenne(orbits.orbit_length_of(rest));
    acc = direct_sum(acc,
                     multiple_subgroup(qp, AbelianType::from_cyclic_orders(
                                               std::vector<uint64_t>{cyc})));
  }
  // Every other doubling orbit contributes one copy of Z_{2^l - 1}.
  std::sort(consumed.begin(), consumed.end());
  std::vector<uint64_t> rest_factors;
  for (const auto& o : orbits.orbits) {
    uint32_t rep = o.front();
    if (std::binary_search(consumed.begin(), consumed.end(), rep)) continue;
    rest_factors.push_back(mersenne(static_cast<uint32_t>(o.size())));
  }
  return direct_sum(acc, AbelianType::from_cyclic_orders(rest_factors));
}

AbelianType closed_form_doubling(uint32_t n) {
  if (n % 2 != 0) throw std::invalid_argument("closed_form_doubling needs even n");
  uint32_t k = 0, m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++k;
  }
  if (k >= 64) throw resource_limit_error("power-of-two part exceeds 64-bit range");
  std::vector<uint64_t> orders;
  AbelianType odd_part = closed_form_odd(m);
  for (uint64_t f : odd_part.invariant_factors()) orders.push_back(f);
  for (uint32_t i = 1; i < m; ++i) orders.push_back(uint64_t{1} << k);
  for (uint32_t i = 2; i <= k; ++i) {
    uint64_t copies = (uint64_t{1} << (i - 2)) * m;
    for (uint64_t c = 0; c < copies; ++c) orders.push_back(uint64_t{1} << (k + 1 - i));
  }
  return AbelianType::from_cyclic_orders(orders);
}

}  // namespace ng

#include "ng/abgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ng/numth.hpp"
#include "ng/zlinalg.hpp"

namespace ng {

// --- AbelianType ------------------------------------------------------------

namespace {

uint64_t checked_mul_u64(uint64_t a, uint64_t b) {
  unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  if (t > UINT64_MAX) throw std::overflow_error("invariant factor exceeds 64 bits");
  return static_cast<uint64_t>(t);
}

}  // namespace

AbelianType AbelianType::from_cyclic_orders(std::span<const uint64_t> orders) {
  std::map<uint64_t, std::vector<uint32_t>> parts;
  for (uint64_t m : orders) {
    if (m == 0) throw std::invalid_argument("cyclic order must be >= 1");
    if (m == 1) continue;
    for (auto [q, e] : numth::factorize(m)) parts[q].push_back(e);
  }
  size_t k = 0;
  for (auto& [q, es] : parts) {
    (void)q;
    std::sort(es.begin(), es.end(), std::greater<>());
    k = std::max(k, es.size());
  }
  AbelianType t;
  t.d_.resize(k, 1);
  // slot k-1 collects the largest exponent of every prime
  for (auto& [q, es] : parts)
    for (size_t i = 0; i < es.size(); ++i) {
      uint64_t qe = 1;
      for (uint32_t j = 0; j < es[i]; ++j) qe = checked_mul_u64(qe, q);
      t.d_[k - 1 - i] = checked_mul_u64(t.d_[k - 1 - i], qe);
    }
  return t;
}

AbelianType AbelianType::from_invariant_factors(std::vector<uint64_t> factors) {
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
  AbelianType t;
  t.d_ = std::move(factors);
  return t;
}

BigInt AbelianType::order() const {
  BigInt o = 1;
  for (uint64_t d : d_) o *= d;
  return o;
}

std::map<uint64_t, std::vector<uint32_t>> AbelianType::primary_decomposition() const {
  std::map<uint64_t, std::vector<uint32_t>> out;
  for (uint64_t d : d_)
    for (auto [q, e] : numth::factorize(d)) out[q].push_back(e);
  for (auto& [q, es] : out) {
    (void)q;
    std::sort(es.begin(), es.end(), std::greater<>());
  }
  return out;
}

std::string AbelianType::to_string() const {
  if (d_.empty()) return "Z_1";
  std::ostringstream os;
  for (size_t i = 0; i < d_.size(); ++i) {
    if (i) os << "⊕";
    os << "Z_" << d_[i];
  }
  return os.str();
}

AbelianType direct_sum(const AbelianType& a, const AbelianType& b) {
  std::vector<uint64_t> orders(a.invariant_factors().begin(), a.invariant_factors().end());
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return AbelianType::from_cyclic_orders(orders);
}

AbelianType multiple_subgroup(uint64_t k, const AbelianType& g) {
  std::vector<uint64_t> orders;
  for (uint64_t m : g.invariant_factors()) orders.push_back(m / std::gcd(k, m));
  return AbelianType::from_cyclic_orders(orders);
}

// --- PermTable ----------------------------------------------------------------

PermTable::PermTable(std::vector<uint32_t> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    if (v >= img_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

PermTable PermTable::identity(uint32_t size) {
  std::vector<uint32_t> img(size);
  std::iota(img.begin(), img.end(), 0u);
  return PermTable(std::move(img));
}

PermTable PermTable::compose(const PermTable& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  PermTable out = *this;  // reuse storage; overwritten below
  for (uint32_t i = 0; i < size(); ++i) out.img_[i] = img_[other.img_[i]];
  return out;
}

PermTable PermTable::inverse() const {
  PermTable out = *this;
  for (uint32_t i = 0; i < size(); ++i) out.img_[img_[i]] = i;
  return out;
}

bool PermTable::is_identity() const {
  for (uint32_t i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

uint64_t PermTable::order() const {
  std::vector<bool> seen(size(), false);
  uint64_t ord = 1;
  for (uint32_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    uint64_t len = 0;
    uint32_t t = s;
    do {
      seen[t] = true;
      t = img_[t];
      ++len;
    } while (t != s);
    uint64_t g = std::gcd(ord, len);
    ord = checked_mul_u64(ord / g, len);
  }
  return ord;
}

// --- group generation ---------------------------------------------------------

namespace {

struct SpanHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

GeneratedGroup generate_group(std::span<const PermTable> generators, uint64_t max_order) {
  if (generators.empty()) throw std::invalid_argument("at least one generator required");
  const uint32_t npoints = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != npoints) throw std::invalid_argument("permutation size mismatch");

  std::vector<PermTable> elems{PermTable::identity(npoints)};
  std::unordered_map<std::vector<uint32_t>, uint32_t, SpanHash> index;
  index.emplace(std::vector<uint32_t>(elems[0].images().begin(), elems[0].images().end()), 0u);
  std::vector<PermTable> used;  // generators that extended the closure

  for (const auto& g : generators) {
    const size_t base_count = elems.size();  // |H| before adjoining g
    auto in_base = [&](const PermTable& t) {
      auto it = index.find(std::vector<uint32_t>(t.images().begin(), t.images().end()));
      return it != index.end() && it->second < base_count;
    };
    if (in_base(g)) continue;
    used.push_back(g);
    // Adjoin cosets H, Hg, Hg^2, ... until g^k falls back into H. Correct
    // provided the result is abelian, which is verified below.
    PermTable pw = g;
    while (!in_base(pw)) {
      for (size_t i = 0; i < base_count; ++i) {
        PermTable e = elems[i].compose(pw);
        if (elems.size() >= max_order)
          throw resource_limit_error("group closure exceeds the configured cap");
        index.emplace(std::vector<uint32_t>(e.images().begin(), e.images().end()),
                      static_cast<uint32_t>(elems.size()));
        elems.push_back(std::move(e));
      }
      pw = pw.compose(g);
    }
  }

  for (size_t i = 0; i < used.size(); ++i)
    for (size_t j = i + 1; j < used.size(); ++j)
      if (!(used[i].compose(used[j]) == used[j].compose(used[i])))
        throw std::domain_error("not abelian");

  std::sort(elems.begin(), elems.end());
  std::vector<uint64_t> orders;
  orders.reserve(elems.size());
  for (const auto& e : elems) orders.push_back(e.order());
  GeneratedGroup out;
  out.type = type_from_order_statistics(orders);
  out.elements = std::move(elems);
  return out;
}

// --- order statistics -----------------------------------------------------------

namespace {

// Count of elements whose order divides m, for the given type.
uint64_t count_dividing(const std::map<uint64_t, std::vector<uint32_t>>& primary, uint64_t m) {
  uint64_t total = 1;
  for (const auto& [q, lambda] : primary) {
    uint32_t vq = 0;
    uint64_t mm = m;
    while (mm % q == 0) {
      mm /= q;
      ++vq;
    }
    uint32_t esum = 0;
    for (uint32_t l : lambda) esum += std::min(vq, l);
    uint64_t qe = 1;
    for (uint32_t j = 0; j < esum; ++j) qe = checked_mul_u64(qe, q);
    total = checked_mul_u64(total, qe);
  }
  return total;
}

}  // namespace

std::vector<std::pair<uint64_t, uint64_t>> order_statistics(const AbelianType& type) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  if (type.is_trivial()) {
    out.emplace_back(1, 1);
    return out;
  }
  auto primary = type.primary_decomposition();
  uint64_t exponent = type.invariant_factors().back();
  for (uint64_t d : numth::divisors(exponent)) {
    // exact count by Moebius inversion over the divisors of d
    int64_t cnt = 0;
    for (uint64_t e : numth::divisors(d)) {
      int mu = numth::mobius(d / e);
      if (mu == 0) continue;
      cnt += mu * static_cast<int64_t>(count_dividing(primary, e));
    }
    if (cnt < 0) throw invariant_error("negative order count");
    if (cnt > 0) out.emplace_back(d, static_cast<uint64_t>(cnt));
  }
  return out;
}

AbelianType type_from_order_statistics(
    std::span<const std::pair<uint64_t, uint64_t>> order_counts) {
  std::map<uint64_t, uint64_t> counts;
  uint64_t total = 0;
  for (auto [m, c] : order_counts) {
    if (m == 0 || c == 0) throw std::invalid_argument("bad order multiset entry");
    counts[m] += c;
    total += c;
  }
  if (counts.empty()) throw std::invalid_argument("empty order multiset");
  if (counts.count(1) == 0 || counts[1] != 1)
    throw invariant_error("order multiset must contain exactly one identity");
  if (total == 1) return AbelianType();

  // Primes appearing in any element order; for a finite abelian group these
  // are exactly the primes of |G|.
  std::map<uint64_t, std::vector<uint32_t>> lambda;
  BigInt sylow_product = 1;
  std::vector<uint64_t> primes;
  for (const auto& [m, c] : counts) {
    (void)c;
    for (auto [q, e] : numth::factorize(m)) {
      (void)e;
      if (primes.empty() || primes.back() != q) primes.push_back(q);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  for (uint64_t q : primes) {
    // N_k = #{g : ord(g) divides q^k}; log_q N_k must be the partial sums of
    // a non-increasing sequence, whose conjugate is the exponent partition.
    std::vector<uint32_t> esums{0};
    while (true) {
      uint32_t k = static_cast<uint32_t>(esums.size());
      uint64_t qk = 1;
      bool overflow = false;
      for (uint32_t j = 0; j < k; ++j) {
        unsigned __int128 t = static_cast<unsigned __int128>(qk) * q;
        if (t > UINT64_MAX) {
          overflow = true;
          break;
        }
        qk = static_cast<uint64_t>(t);
      }
      uint64_t nk = 0;
      for (const auto& [m, c] : counts) {
        // contributes when m is a power of q not exceeding q^k
        uint64_t mm = m;
        while (mm % q == 0) mm /= q;
        if (mm != 1) continue;
        if (overflow || m <= qk) nk += c;
      }
      uint32_t e = 0;
      uint64_t v = nk;
      while (v % q == 0) {
        v /= q;
        ++e;
      }
      if (v != 1) throw invariant_error("q-torsion count is not a power of q");
      if (e == esums.back()) break;  // stabilized at the Sylow subgroup size
      esums.push_back(e);
    }
    std::vector<uint32_t> delta;
    for (size_t k = 1; k < esums.size(); ++k) {
      if (esums[k] < esums[k - 1]) throw invariant_error("decreasing torsion count");
      delta.push_back(esums[k] - esums[k - 1]);
    }
    for (size_t k = 1; k < delta.size(); ++k)
      if (delta[k] > delta[k - 1])
        throw invariant_error("torsion counts do not form a valid partition");
    if (!delta.empty()) {
      std::vector<uint32_t> part;  // conjugate partition
      for (uint32_t i = 1; i <= delta[0]; ++i) {
        uint32_t cnt = 0;
        for (uint32_t dk : delta)
          if (dk >= i) ++cnt;
        part.push_back(cnt);
      }
      // part is the exponent partition, largest first, as column heights
      std::sort(part.begin(), part.end(), std::greater<>());
      lambda[q] = std::move(part);
      uint64_t qsize = 1;
      for (uint32_t e : lambda[q])
        for (uint32_t j = 0; j < e; ++j) qsize = checked_mul_u64(qsize, q);
      sylow_product *= qsize;
    }
  }
  if (sylow_product != BigInt(total))
    throw invariant_error("order statistics do not multiply out to the group order");

  // Assemble invariant factors from the per-prime exponent partitions.
  size_t k = 0;
  for (const auto& [q, part] : lambda) {
    (void)q;
    k = std::max(k, part.size());
  }
  std::vector<uint64_t> factors(k, 1);
  for (const auto& [q, part] : lambda)
    for (size_t i = 0; i < part.size(); ++i) {
      uint64_t qe = 1;
      for (uint32_t j = 0; j < part[i]; ++j) qe = checked_mul_u64(qe, q);
      factors[k - 1 - i] = checked_mul_u64(factors[k - 1 - i], qe);
    }
  AbelianType type = AbelianType::from_invariant_factors(
      std::vector<uint64_t>(factors.begin(), factors.end()));

  // Roundtrip: the inferred type must reproduce the input multiset exactly.
  auto expect = order_statistics(type);
  if (expect.size() != counts.size()) throw invariant_error("order multiset roundtrip failed");
  for (auto [m, c] : expect)
    if (counts.find(m) == counts.end() || counts[m] != c)
      throw invariant_error("order multiset roundtrip failed");
  return type;
}

AbelianType type_from_order_statistics(std::span<const uint64_t> orders) {
  std::map<uint64_t, uint64_t> counts;
  for (uint64_t m : orders) ++counts[m];
  std::vector<std::pair<uint64_t, uint64_t>> pairs(counts.begin(), counts.end());
  return type_from_order_statistics(pairs);
}

// --- orbits -----------------------------------------------------------------

std::vector<std::vector<uint32_t>> orbit_partition(std::span<const PermTable> tables) {
  if (tables.empty()) throw std::invalid_argument("at least one permutation required");
  const uint32_t npoints = tables.front().size();
  for (const auto& t : tables)
    if (t.size() != npoints) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(npoints, false);
  std::vector<std::vector<uint32_t>> orbits;
  for (uint32_t s = 0; s < npoints; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> orbit{s};
    seen[s] = true;
    for (size_t head = 0; head < orbit.size(); ++head) {
      uint32_t v = orbit[head];
      for (const auto& t : tables) {
        uint32_t w = t[v];
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// --- relation lattice oracle --------------------------------------------------

AbelianType type_via_relation_lattice(std::span<const PermTable> generators, uint64_t box_cap) {
  if (generators.empty()) throw std::invalid_argument("at least one generator required");
  // Reduce to an irredundant generating list first so the exponent box stays small.
  std::vector<PermTable> gens;
  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    std::vector<PermTable> trial(gens.begin(), gens.end());
    trial.push_back(g);
    if (gens.empty() || generate_group(gens).elements.size() <
                            generate_group(trial).elements.size())
      gens.push_back(g);
  }
  if (gens.empty()) return AbelianType();

  const size_t k = gens.size();
  std::vector<uint64_t> ords;
  uint64_t box = 1;
  for (const auto& g : gens) {
    ords.push_back(g.order());
    box = checked_mul_u64(box, ords.back());
    if (box > box_cap) throw resource_limit_error("relation box exceeds the configured cap");
  }
  // Precompute generator powers.
  std::vector<std::vector<PermTable>> pows(k);
  for (size_t i = 0; i < k; ++i) {
    pows[i].push_back(PermTable::identity(gens[i].size()));
    for (uint64_t e = 1; e < ords[i]; ++e) pows[i].push_back(pows[i].back().compose(gens[i]));
  }
  // Rows: every exponent vector in the box whose product is the identity,
  // plus ord_i * e_i. Their lattice is the full relation lattice.
  std::vector<std::vector<BigInt>> rows;
  std::vector<uint64_t> expv(k, 0);
  while (true) {
    PermTable prod = pows[0][expv[0]];
    for (size_t i = 1; i < k; ++i) prod = prod.compose(pows[i][expv[i]]);
    if (prod.is_identity()) {
      std::vector<BigInt> row(k);
      for (size_t i = 0; i < k; ++i) row[i] = expv[i];
      rows.push_back(std::move(row));
    }
    size_t i = 0;
    while (i < k && expv[i] + 1 == ords[i]) expv[i++] = 0;
    if (i == k) break;
    ++expv[i];
  }
  for (size_t i = 0; i < k; ++i) {
    std::vector<BigInt> row(k);
    row[i] = ords[i];
    rows.push_back(std::move(row));
  }
  BigMatrix m(rows.size(), k);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < k; ++j) m.at(i, j) = rows[i][j];
  CokernelDecomposition coker = cokernel_type(m);
  if (coker.free_rank != 0) throw invariant_error("relation lattice is not full rank");
  return coker.torsion;
}

}  // namespace ng

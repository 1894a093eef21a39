// Acceptance suite: one line per criterion, PASS or FAIL, exit 1 on any FAIL.
// Each criterion exercises a full construction path end to end.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ng/abgroup.hpp"
#include "ng/bijection.hpp"
#include "ng/circulant.hpp"
#include "ng/debruijn.hpp"
#include "ng/gfpoly.hpp"
#include "ng/golden.hpp"
#include "ng/necklace.hpp"
#include "ng/orbitlab.hpp"
#include "ng/zlinalg.hpp"

using namespace ng;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

AbelianType necklace_group_type(MapKind kind, uint32_t p, uint32_t n) {
  auto fam = build_family(kind, p, n);
  return generate_group(fam.necklace_generators()).type;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return "";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Determinant by fraction-free elimination, for unimodularity checks.
BigInt det(BigMatrix m) {
  size_t n = m.rows();
  BigInt sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && m.at(s, k) == 0) ++s;
      if (s == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(s, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

bool table_matches(MapKind kind, const std::vector<golden::TableRow>& want,
                   std::string& detail) {
  for (const auto& row : want) {
    auto fam = build_family(kind, 2, row.n);
    auto rep = orbit_report(fam);
    if (rep.universe.size() != row.necklace_count ||
        rep.group_order != row.group_order ||
        rep.group_type.to_string() != row.group ||
        rep.orbit_sizes() != row.orbit_sizes) {
      detail = "n=" + std::to_string(row.n) + " computed " +
               std::to_string(rep.group_order) + " " + rep.group_type.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  // 1: necklace table for the Reutenauer family, n = 2..15
  {
    std::string detail;
    bool ok = table_matches(MapKind::reutenauer, golden::reutenauer_table(), detail);
    report(1, "Reutenauer family matches the reference table for n = 2..15", ok, detail);
  }

  // 2: necklace table for the Golomb family, n = 2..12
  {
    std::string detail;
    bool ok = table_matches(MapKind::golomb, golden::golomb_table(), detail);
    report(2, "Golomb family matches the reference table for n = 2..12", ok, detail);
  }

  // 3: binary necklace groups match de Bruijn sandpile groups, n = 2..16
  {
    bool ok = true;
    std::string detail;
    for (uint32_t n = 2; n <= 16 && ok; ++n) {
      auto lhs = necklace_group_type(MapKind::reutenauer, 2, n);
      auto rhs = sandpile_group(build_gamma(2, n), SandpileMethod::minor);
      if (!is_isomorphic(lhs, rhs)) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + lhs.to_string() + " vs " + rhs.to_string();
      }
    }
    report(3, "necklace group equals the sandpile group at p = 2 for n = 2..16", ok, detail);
  }

  // 4: odd characteristic needs an extra Z_{p-1} factor
  {
    bool ok = true;
    std::string detail;
    for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {3u, 4u}, {3u, 5u}, {5u, 2u}, {5u, 3u}}) {
      auto lhs = necklace_group_type(MapKind::reutenauer, p, n);
      auto rhs = direct_sum(sandpile_group(build_gamma(p, n), SandpileMethod::minor),
                            AbelianType::from_cyclic_orders(std::vector<uint64_t>{p - 1}));
      if (!is_isomorphic(lhs, rhs)) {
        ok = false;
        detail = "p=" + std::to_string(p) + " n=" + std::to_string(n);
        break;
      }
    }
    report(4, "necklace group equals sandpile plus Z_{p-1} at p = 3, 5", ok, detail);
  }

  // 5: closed form from doubling orbits, odd n <= 35
  {
    bool ok = closed_form_odd(9).to_string() == "Z_21" &&
              closed_form_odd(21).to_string() == "Z_7⊕Z_63⊕Z_63";
    std::string detail = ok ? "" : "fixed values disagree";
    for (uint32_t n = 1; n <= 35 && ok; n += 2) {
      if (closed_form_odd(n) != sandpile_group(build_gamma(2, n), SandpileMethod::minor)) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    }
    report(5, "doubling-orbit closed form matches the matrix route for odd n <= 35", ok,
           detail);
  }

  // 6: closed form for even n <= 64 (odd part <= 35)
  {
    bool ok = true;
    std::string detail;
    for (uint32_t n = 2; n <= 64 && ok; n += 2) {
      uint32_t m = n;
      while (m % 2 == 0) m /= 2;
      if (m > 35) continue;
      if (closed_form_doubling(n) !=
          sandpile_group(build_gamma(2, n), SandpileMethod::minor)) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    }
    report(6, "power-of-two reduction matches the matrix route for even n <= 64", ok, detail);
  }

  // 7: circulant unit quotients
  {
    bool ok = true;
    std::string detail;
    for (uint32_t n = 2; n <= 12 && ok; ++n) {
      auto quot = quotient_group_type(2, n);
      auto neck = necklace_group_type(MapKind::reutenauer, 2, n);
      if (!is_isomorphic(quot, neck)) {
        ok = false;
        detail = "quotient mismatch at n=" + std::to_string(n);
      }
    }
    for (uint32_t n = 1; n <= 16 && ok; ++n) {
      if (BigInt(count_units_bruteforce(2, n)) != unit_group_order(2, n)) {
        ok = false;
        detail = "unit count mismatch at n=" + std::to_string(n);
      }
    }
    report(7, "circulant unit quotient equals the necklace group; unit counts check out",
           ok, detail);
  }

  // 8: the recorded nine-vertex matrices
  {
    auto a9 = BigMatrix::from_string(golden::a9_text());
    auto a9p = BigMatrix::from_string(golden::a9_prime_text());
    bool ok = laplacian(build_gamma(2, 9)) == a9 && conjugate_by_shift_basis(a9) == a9p;
    std::string fa9 = read_file(std::string(GOLDEN_DIR) + "/a9.txt");
    std::string fa9p = read_file(std::string(GOLDEN_DIR) + "/a9_prime.txt");
    ok = ok && !fa9.empty() && BigMatrix::from_string(fa9) == a9;
    ok = ok && !fa9p.empty() && BigMatrix::from_string(fa9p) == a9p;
    auto diag = smith_normal_form(a9).diagonal;
    ok = ok && diag[7] == 21 && diag[8] == 0;
    report(8, "nine-vertex Laplacian, its shift-basis form, and elementary divisors", ok);
  }

  // 9: property suites with independent oracles
  {
    bool ok = true;
    std::string detail;

    // counting formula vs enumeration
    for (auto [p, n] : {std::pair{2u, 11u}, {3u, 7u}, {5u, 5u}, {7u, 3u}})
      if (enumerate_necklaces(p, n).size() != count_aperiodic(p, n)) {
        ok = false;
        detail = "necklace count";
      }

    // bijectivity and full-degree images for both families, n <= 10
    for (auto kind : {MapKind::reutenauer, MapKind::golomb})
      for (uint32_t n = 2; n <= 10 && ok; ++n) {
        auto fam = build_family(kind, 2, n);
        for (const auto& fwd : fam.forward) {
          std::set<uint32_t> hit(fwd.begin(), fwd.end());
          if (hit.size() != fam.polys.size()) {
            ok = false;
            detail = "bijectivity n=" + std::to_string(n);
          }
        }
        for (const auto& f : fam.polys)
          if (f.degree() != static_cast<int>(n) || !is_irreducible(f)) {
            ok = false;
            detail = "image degree n=" + std::to_string(n);
          }
      }

    // orbit transport: all parameters induce the same orbit-image partition
    for (auto kind : {MapKind::reutenauer, MapKind::golomb})
      for (uint32_t n = 4; n <= 8 && ok; ++n) {
        auto fam = build_family(kind, 2, n);
        auto orbits = orbit_partition(fam.necklace_generators());
        for (const auto& orbit : orbits) {
          std::set<uint32_t> base;
          for (uint32_t v : orbit) base.insert(fam.forward[0][v]);
          for (size_t k = 1; k < fam.params.size() && ok; ++k) {
            std::set<uint32_t> other;
            for (uint32_t v : orbit) other.insert(fam.forward[k][v]);
            if (other != base) {
              ok = false;
              detail = "transport n=" + std::to_string(n);
            }
          }
        }
      }

    // Smith form properties on seeded random matrices
    std::mt19937 rng(20240816);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 30 && ok; ++trial) {
      size_t dim = 2 + trial % 4;
      BigMatrix m(dim, dim);
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) m.at(i, j) = entry(rng);
      auto s = smith_normal_form(m, true);
      auto d = *s.left * m * *s.right;
      for (size_t i = 0; i < dim && ok; ++i)
        for (size_t j = 0; j < dim; ++j)
          if (d.at(i, j) != (i == j ? s.diagonal[i] : BigInt(0))) {
            ok = false;
            detail = "diagonalization";
          }
      BigInt dl = det(*s.left), dr = det(*s.right);
      if (dl * dl != 1 || dr * dr != 1) {
        ok = false;
        detail = "unimodularity";
      }
      for (size_t k = 0; k + 1 < dim && ok; ++k)
        if (s.diagonal[k + 1] != 0 &&
            (s.diagonal[k] == 0 || s.diagonal[k + 1] % s.diagonal[k] != 0)) {
          ok = false;
          detail = "divisibility chain";
        }
    }

    // determinantal-divisor spot checks on seeded random 3 x 3 matrices
    auto gcd_big = [](BigInt a, BigInt b) {
      if (a < 0) a = -a;
      if (b < 0) b = -b;
      while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
      }
      return a;
    };
    for (int trial = 0; trial < 10 && ok; ++trial) {
      BigMatrix m(3, 3);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.at(i, j) = entry(rng);
      BigInt d1 = 0, d2 = 0;
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
          d1 = gcd_big(d1, m.at(i, j));
          // 2 x 2 minor skipping row i and column j
          size_t r0 = i == 0 ? 1 : 0, r1 = i == 2 ? 1 : 2;
          size_t c0 = j == 0 ? 1 : 0, c1 = j == 2 ? 1 : 2;
          d2 = gcd_big(d2, m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0));
        }
      BigInt d3 = det(m);
      if (d3 < 0) d3 = -d3;
      auto diag = smith_normal_form(m).diagonal;
      bool match = diag[0] == d1;
      match = match && (d1 == 0 ? diag[1] == 0 : diag[1] == d2 / d1);
      match = match && (d2 == 0 ? diag[2] == 0 : diag[2] == d3 / d2);
      if (!match) {
        ok = false;
        detail = "determinantal divisors";
      }
    }

    // type reconstruction from order statistics, 200 seeded random types
    std::uniform_int_distribution<int> pick(0, 5);
    const uint64_t pool[] = {2, 3, 4, 5, 8, 9};
    for (int trial = 0; trial < 200 && ok; ++trial) {
      std::vector<uint64_t> orders;
      for (int i = 0; i <= trial % 3; ++i) orders.push_back(pool[pick(rng)]);
      auto t = AbelianType::from_cyclic_orders(orders);
      if (type_from_order_statistics(order_statistics(t)) != t) {
        ok = false;
        detail = "order statistics roundtrip";
      }
    }

    report(9, "property suites: counts, bijectivity, transport, Smith form, type recovery",
           ok, detail);
  }

  // 10: recorded orbit walks and main orbits
  {
    bool ok = true;
    std::string detail;
    for (const auto& example : golden::orbit_examples()) {
      auto rep = orbit_report(build_family(MapKind::reutenauer, 2, example.n));
      if (rep.orbits.size() != example.orbits.size()) {
        ok = false;
        detail = "orbit count n=" + std::to_string(example.n);
        break;
      }
      for (size_t i = 0; i < rep.orbits.size() && ok; ++i) {
        std::set<std::string> got;
        for (uint32_t v : rep.orbits[i]) got.insert(rep.universe[v].to_string());
        std::set<std::string> want(example.orbits[i].begin(), example.orbits[i].end());
        if (got != want) {
          ok = false;
          detail = "orbit members n=" + std::to_string(example.n);
        }
        const auto& edge = rep.averaging[i];
        int want_edge = example.averaging[i];
        bool edge_ok = want_edge < 0
                           ? edge.kind == AveragingEdge::Kind::periodic
                           : edge.kind == AveragingEdge::Kind::orbit &&
                                 edge.target == static_cast<uint32_t>(want_edge);
        if (!edge_ok) {
          ok = false;
          detail = "averaging edge n=" + std::to_string(example.n);
        }
      }
    }
    for (uint32_t n = 2; n <= 15 && ok; ++n) {
      auto rep = orbit_report(build_family(MapKind::reutenauer, 2, n));
      if (!rep.main_orbit.has_value()) {
        ok = false;
        detail = "no main orbit at n=" + std::to_string(n);
      }
    }
    report(10, "recorded averaging walks at n = 4, 5, 6 and main orbits up to n = 15", ok,
           detail);
  }

  return failures == 0 ? 0 : 1;
}

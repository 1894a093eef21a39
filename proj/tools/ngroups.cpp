// ngroups: necklace automorphism groups, de Bruijn sandpiles, circulant
// quotients. Subcommands compute; `verify` cross-checks the constructions
// against each other; `table --golden` checks against the recorded reference data.

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ng/abgroup.hpp"
#include "ng/bijection.hpp"
#include "ng/circulant.hpp"
#include "ng/debruijn.hpp"
#include "ng/gfpoly.hpp"
#include "ng/golden.hpp"
#include "ng/necklace.hpp"
#include "ng/orbitlab.hpp"
#include "ng/zlinalg.hpp"

using nlohmann::json;
using namespace ng;

namespace {

struct GlobalOpts {
  std::string format = "tsv";
  bool golden = false;
  std::string golden_file;
  bool timing = false;
  uint64_t seed = 0;  // reserved for randomized checks; accepted everywhere
  uint64_t max_group_order = 10'000'000;
  uint32_t max_field_bits = 24;

  uint64_t field_cap() const { return uint64_t{1} << max_field_bits; }
};

std::string join_sizes(const std::vector<uint64_t>& sizes) {
  std::string out;
  for (uint64_t s : sizes) {
    if (!out.empty()) out += '+';
    out += std::to_string(s);
  }
  return out;
}

json type_json(const AbelianType& t) {
  json j;
  j["order"] = t.order().str();
  j["type"] = t.to_string();
  j["invariant_factors"] = t.invariant_factors();
  json primary = json::object();
  for (const auto& [q, exps] : t.primary_decomposition())
    primary[std::to_string(q)] = exps;
  j["primary"] = primary;
  return j;
}

void print_type_tsv(const AbelianType& t) {
  std::cout << "type\t" << t.to_string() << "\n";
  std::cout << "order\t" << t.order() << "\n";
  std::string inv;
  for (uint64_t d : t.invariant_factors()) {
    if (!inv.empty()) inv += ' ';
    inv += std::to_string(d);
  }
  std::cout << "invariant_factors\t" << inv << "\n";
  std::string prim;
  for (const auto& [q, exps] : t.primary_decomposition())
    for (uint32_t e : exps) {
      if (!prim.empty()) prim += ' ';
      prim += std::to_string(q) + "^" + std::to_string(e);
    }
  std::cout << "primary\t" << prim << "\n";
}

MapKind parse_kind(const std::string& s) {
  return s == "golomb" ? MapKind::golomb : MapKind::reutenauer;
}

// ---------------------------------------------------------------- basic dumps

int cmd_necklaces(const GlobalOpts& g, uint32_t p, uint32_t n, bool count_only) {
  if (count_only) {
    std::cout << count_aperiodic(p, n) << "\n";
    return 0;
  }
  auto all = enumerate_necklaces(p, n);
  if (g.format == "json") {
    json out = json::array();
    for (const auto& v : all) out.push_back(v.to_string());
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& v : all) std::cout << v.to_string() << "\n";
  }
  return 0;
}

int cmd_polys(const GlobalOpts& g, uint32_t p, uint32_t n, const std::string& filter,
              bool count_only) {
  std::vector<PolyModP> polys = enumerate_irreducible(p, n);
  std::vector<PolyModP> kept;
  for (const auto& f : polys) {
    if (filter == "normal" && !is_normal(f)) continue;
    if (filter == "primitive" && !is_primitive(f)) continue;
    kept.push_back(f);
  }
  if (count_only) {
    std::cout << kept.size() << "\n";
    return 0;
  }
  if (g.format == "json") {
    json out = json::array();
    for (const auto& f : kept) out.push_back(f.to_string());
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& f : kept) std::cout << f.to_string() << "\n";
  }
  return 0;
}

int cmd_map(const GlobalOpts& g, const std::string& kind_name, uint32_t p, uint32_t n,
            uint32_t index, const std::string& necklace_text, bool inverse,
            bool list_params) {
  BijectionFamily fam = build_family(parse_kind(kind_name), p, n, g.field_cap());
  if (list_params) {
    for (const auto& par : fam.params) std::cout << par.poly.to_string() << "\n";
    return 0;
  }
  if (index >= fam.params.size())
    throw std::invalid_argument("parameter index out of range (have " +
                                std::to_string(fam.params.size()) + ")");
  json rows = json::array();
  auto emit = [&](const Necklace& v, const PolyModP& f) {
    if (g.format == "json") {
      rows.push_back({{"necklace", v.to_string()}, {"polynomial", f.to_string()}});
    } else if (inverse) {
      std::cout << f.to_string() << "\t" << v.to_string() << "\n";
    } else {
      std::cout << v.to_string() << "\t" << f.to_string() << "\n";
    }
  };
  if (!necklace_text.empty()) {
    Necklace v = Necklace::from_string(p, necklace_text);
    emit(v, fam.polys[fam.forward[index][fam.necklace_index(v)]]);
  } else if (inverse) {
    for (size_t i = 0; i < fam.polys.size(); ++i)
      emit(fam.necklaces[fam.inverse[index][i]], fam.polys[i]);
  } else {
    for (size_t i = 0; i < fam.necklaces.size(); ++i)
      emit(fam.necklaces[i], fam.polys[fam.forward[index][i]]);
  }
  if (g.format == "json") std::cout << rows.dump() << "\n";
  return 0;
}

int cmd_group(const GlobalOpts& g, const std::string& kind_name, uint32_t p, uint32_t n,
              const std::string& side) {
  BijectionFamily fam = build_family(parse_kind(kind_name), p, n, g.field_cap());
  auto gens = side == "poly" ? fam.poly_generators() : fam.necklace_generators();
  GeneratedGroup group = generate_group(gens, g.max_group_order);
  if (g.format == "json")
    std::cout << type_json(group.type).dump() << "\n";
  else
    print_type_tsv(group.type);
  return 0;
}

int cmd_sandpile(const GlobalOpts& g, uint32_t p, uint32_t n, const std::string& method,
                 bool closed_form) {
  AbelianType t;
  if (closed_form) {
    if (p != 2) throw std::invalid_argument("closed forms are for p = 2 only");
    t = n % 2 ? closed_form_odd(n) : closed_form_doubling(n);
  } else {
    t = sandpile_group(build_gamma(p, n),
                       method == "full" ? SandpileMethod::full : SandpileMethod::minor);
  }
  if (g.format == "json")
    std::cout << type_json(t).dump() << "\n";
  else
    print_type_tsv(t);
  return 0;
}

int cmd_circulant(const GlobalOpts& g, uint32_t p, uint32_t n, bool compare_reutenauer,
                  bool brute_count) {
  BigInt order = unit_group_order(p, n);
  AbelianType quot = quotient_group_type(p, n);
  json j;
  j["unit_group_order"] = order.str();
  j["quotient"] = type_json(quot);
  if (brute_count) j["unit_count_bruteforce"] = count_units_bruteforce(p, n);
  int rc = 0;
  if (compare_reutenauer) {
    BijectionFamily fam = build_family(MapKind::reutenauer, p, n, g.field_cap());
    GeneratedGroup group = generate_group(fam.necklace_generators(), g.max_group_order);
    j["reutenauer"] = group.type.to_string();
    j["match"] = is_isomorphic(group.type, quot);
    if (!is_isomorphic(group.type, quot)) rc = 1;
  }
  if (g.format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "unit_group_order\t" << order << "\n";
    if (brute_count)
      std::cout << "unit_count_bruteforce\t" << j["unit_count_bruteforce"].get<uint64_t>()
                << "\n";
    std::cout << "quotient\t" << quot.to_string() << "\n";
    if (compare_reutenauer)
      std::cout << "reutenauer\t" << j["reutenauer"].get<std::string>() << "\n"
                << "match\t" << (rc == 0 ? "yes" : "no") << "\n";
  }
  return rc;
}

// -------------------------------------------------------------------- orbits

json orbit_report_json(const OrbitReport& rep) {
  json j;
  j["p"] = rep.p;
  j["n"] = rep.n;
  j["group"] = rep.group_type.to_string();
  j["group_order"] = rep.group_order;
  json orbits = json::array();
  for (const auto& o : rep.orbits) {
    json members = json::array();
    for (uint32_t v : o) members.push_back(rep.universe[v].to_string());
    orbits.push_back(members);
  }
  j["orbits"] = orbits;
  json avg = json::array();
  for (const auto& e : rep.averaging) {
    if (e.kind == AveragingEdge::Kind::orbit)
      avg.push_back(e.target);
    else
      avg.push_back(e.kind == AveragingEdge::Kind::periodic ? "periodic" : "mixed");
  }
  j["averaging"] = avg;
  if (rep.main_orbit) {
    j["main_orbit"] = *rep.main_orbit;
    j["main_orbit_candidates"] = rep.main_orbit_candidates;
    j["averaging_reach"] = rep.averaging_reach;
  }
  if (rep.flip_orbits) {
    json fo = json::array();
    for (const auto& o : *rep.flip_orbits) {
      json members = json::array();
      for (uint32_t v : o) members.push_back(rep.universe[v].to_string());
      fo.push_back(members);
    }
    j["flip_orbits"] = fo;
    j["flip_violations"] = rep.flip_violations;
  }
  return j;
}

void orbit_report_tsv(const OrbitReport& rep, bool averaging) {
  std::cout << "group\t" << rep.group_type.to_string() << "\n";
  std::cout << "group_order\t" << rep.group_order << "\n";
  for (size_t i = 0; i < rep.orbits.size(); ++i) {
    std::cout << "orbit\t" << i << "\t" << rep.orbits[i].size();
    for (uint32_t v : rep.orbits[i]) std::cout << "\t" << rep.universe[v].to_string();
    std::cout << "\n";
  }
  if (averaging) {
    for (size_t i = 0; i < rep.averaging.size(); ++i) {
      const auto& e = rep.averaging[i];
      std::cout << "averaging\t" << i << "\t";
      if (e.kind == AveragingEdge::Kind::orbit)
        std::cout << e.target;
      else
        std::cout << (e.kind == AveragingEdge::Kind::periodic ? "periodic" : "mixed");
      std::cout << "\n";
    }
  }
  if (rep.main_orbit) {
    std::cout << "main_orbit\t" << *rep.main_orbit << "\t" << rep.main_orbit_candidates
              << "\n";
    std::cout << "averaging_reach";
    for (uint32_t i : rep.averaging_reach) std::cout << "\t" << i;
    std::cout << "\n";
  }
  if (rep.flip_orbits) {
    for (size_t i = 0; i < rep.flip_orbits->size(); ++i) {
      std::cout << "flip_orbit\t" << i << "\t" << (*rep.flip_orbits)[i].size();
      for (uint32_t v : (*rep.flip_orbits)[i])
        std::cout << "\t" << rep.universe[v].to_string();
      std::cout << "\n";
    }
    for (const auto& v : rep.flip_violations) std::cout << "flip_violation\t" << v << "\n";
  }
}

int cmd_orbits(const GlobalOpts& g, const std::string& group_name, uint32_t p, uint32_t n,
               bool averaging, bool flip_extended) {
  BijectionFamily fam = build_family(parse_kind(group_name), p, n, g.field_cap());
  OrbitReport rep = flip_extended ? flip_extended_orbits(fam, g.max_group_order)
                                  : orbit_report(fam, g.max_group_order);
  if (g.format == "json")
    std::cout << orbit_report_json(rep).dump() << "\n";
  else
    orbit_report_tsv(rep, averaging);
  return 0;
}

// --------------------------------------------------------------------- table

struct TableRowOut {
  uint32_t n = 0;
  bool skipped = false;
  uint64_t necklaces = 0;
  std::string order;  // decimal
  std::string group;
  std::vector<uint64_t> orbit_sizes;  // empty for sandpile rows
};

TableRowOut table_row(const GlobalOpts& g, const std::string& which, uint32_t n) {
  TableRowOut row;
  row.n = n;
  try {
    if (which == "sandpile") {
      AbelianType t = sandpile_group(build_gamma(2, n), SandpileMethod::minor);
      row.order = t.order().str();
      row.group = t.to_string();
    } else {
      BijectionFamily fam = build_family(parse_kind(which), 2, n, g.field_cap());
      OrbitReport rep = orbit_report(fam, g.max_group_order);
      row.necklaces = rep.universe.size();
      row.order = std::to_string(rep.group_order);
      row.group = rep.group_type.to_string();
      row.orbit_sizes = rep.orbit_sizes();
    }
  } catch (const resource_limit_error&) {
    row.skipped = true;
  }
  return row;
}

void print_table(const GlobalOpts& g, const std::string& which,
                 const std::vector<TableRowOut>& rows) {
  if (g.format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json j;
      j["n"] = r.n;
      if (r.skipped) {
        j["status"] = "skip";
      } else if (which == "sandpile") {
        j["order"] = r.order;
        j["group"] = r.group;
      } else {
        j["necklaces"] = r.necklaces;
        j["order"] = r.order;
        j["group"] = r.group;
        j["orbits"] = r.orbit_sizes;
      }
      out.push_back(j);
    }
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& r : rows) {
    if (r.skipped) {
      std::cout << r.n << "\tskip\n";
    } else if (which == "sandpile") {
      std::cout << r.n << "\t" << r.order << "\t" << r.group << "\n";
    } else {
      std::cout << r.n << "\t" << r.necklaces << "\t" << r.order << "\t" << r.group << "\t"
                << join_sizes(r.orbit_sizes) << "\n";
    }
  }
}

// Reference rows for --golden; sandpile rows reuse the necklace table, whose
// recorded group column equals the sandpile series.
std::vector<golden::TableRow> reference_rows(const std::string& which) {
  if (which == "golomb") return golden::golomb_table();
  return golden::reutenauer_table();
}

std::vector<golden::TableRow> rows_from_file(const std::string& path,
                                             const std::string& which) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::vector<golden::TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    golden::TableRow r{};
    std::string field;
    std::getline(ls, field, '\t');
    r.n = static_cast<uint32_t>(std::stoul(field));
    if (which != "sandpile") {
      std::getline(ls, field, '\t');
      r.necklace_count = std::stoull(field);
    }
    std::getline(ls, field, '\t');
    r.group_order = std::stoull(field);
    std::getline(ls, r.group, '\t');
    if (which != "sandpile" && std::getline(ls, field, '\t')) {
      std::istringstream ss(field);
      std::string part;
      while (std::getline(ss, part, '+')) r.orbit_sizes.push_back(std::stoull(part));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

int compare_to_reference(const std::string& which, const std::vector<TableRowOut>& rows,
                         const std::vector<golden::TableRow>& reference) {
  int rc = 0;
  for (const auto& r : rows) {
    if (r.skipped) continue;
    const golden::TableRow* want = nullptr;
    for (const auto& w : reference)
      if (w.n == r.n) want = &w;
    if (!want) continue;
    bool ok = r.group == want->group && r.order == std::to_string(want->group_order);
    if (which != "sandpile")
      ok = ok && r.necklaces == want->necklace_count && r.orbit_sizes == want->orbit_sizes;
    if (!ok) {
      std::cerr << "mismatch at n=" << r.n << ": computed " << r.necklaces << " "
                << r.order << " " << r.group << " " << join_sizes(r.orbit_sizes)
                << ", expected " << want->necklace_count << " " << want->group_order << " "
                << want->group << " " << join_sizes(want->orbit_sizes) << "\n";
      rc = 1;
    }
  }
  return rc;
}

int cmd_table(const GlobalOpts& g, const std::string& which, uint32_t from, uint32_t to) {
  std::vector<TableRowOut> rows;
  for (uint32_t n = from; n <= to; ++n) rows.push_back(table_row(g, which, n));
  print_table(g, which, rows);
  if (!g.golden_file.empty())
    return compare_to_reference(which, rows, rows_from_file(g.golden_file, which));
  if (g.golden) return compare_to_reference(which, rows, reference_rows(which));
  return 0;
}

// -------------------------------------------------------------------- verify

struct CheckResult {
  std::string check;
  std::string params;
  std::string status;  // pass | fail | skip
  std::string left, right;
  double elapsed = 0;
};

CheckResult run_check(const std::string& check, const std::string& params,
                      const std::function<std::pair<AbelianType, AbelianType>()>& sides) {
  CheckResult r{check, params, "pass", "", "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [left, right] = sides();
    r.left = left.to_string();
    r.right = right.to_string();
    if (!is_isomorphic(left, right)) r.status = "fail";
  } catch (const resource_limit_error& e) {
    r.status = "skip";
    r.left = e.what();
  } catch (const std::exception& e) {
    r.status = "fail";
    r.left = e.what();
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_pool(
    std::vector<std::function<CheckResult()>>& tasks) {
  std::vector<CheckResult> results(tasks.size());
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = tasks[i]();
    });
  for (auto& t : pool) t.join();
  return results;
}

AbelianType reutenauer_type(const GlobalOpts& g, uint32_t p, uint32_t n) {
  BijectionFamily fam = build_family(MapKind::reutenauer, p, n, g.field_cap());
  return generate_group(fam.necklace_generators(), g.max_group_order).type;
}

int cmd_verify(const GlobalOpts& g, const std::string& check, std::optional<uint32_t> from,
               std::optional<uint32_t> to, std::optional<uint32_t> p_opt) {
  std::vector<std::function<CheckResult()>> tasks;
  auto add = [&](const std::string& name, const std::string& params,
                 std::function<std::pair<AbelianType, AbelianType>()> sides) {
    tasks.push_back([name, params, sides] { return run_check(name, params, sides); });
  };

  bool all = check == "all";
  if (all || check == "chan") {
    uint32_t lo = from.value_or(2), hi = to.value_or(16);
    for (uint32_t n = lo; n <= hi; ++n)
      add("chan", "p=2 n=" + std::to_string(n), [&g, n] {
        return std::pair{reutenauer_type(g, 2, n),
                         sandpile_group(build_gamma(2, n), SandpileMethod::minor)};
      });
  }
  if (all || check == "chp") {
    std::vector<std::pair<uint32_t, uint32_t>> cases;
    if (p_opt) {
      for (uint32_t n = from.value_or(2); n <= to.value_or(3); ++n)
        cases.emplace_back(*p_opt, n);
    } else {
      cases = {{3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}};
    }
    for (auto [p, n] : cases)
      add("chp", "p=" + std::to_string(p) + " n=" + std::to_string(n), [&g, p = p, n = n] {
        AbelianType rhs = direct_sum(
            sandpile_group(build_gamma(p, n), SandpileMethod::minor),
            AbelianType::from_cyclic_orders(std::vector<uint64_t>{p - 1}));
        return std::pair{reutenauer_type(g, p, n), rhs};
      });
  }
  if (all || check == "circulant") {
    uint32_t lo = from.value_or(2), hi = to.value_or(12);
    for (uint32_t n = lo; n <= hi; ++n)
      add("circulant", "p=2 n=" + std::to_string(n), [&g, n] {
        return std::pair{quotient_group_type(2, n), reutenauer_type(g, 2, n)};
      });
    for (uint32_t n = lo; n <= std::max(hi, 16u); ++n) {
      tasks.push_back([n] {
        CheckResult r{"circulant-units", "p=2 n=" + std::to_string(n), "pass", "", "", 0};
        auto t0 = std::chrono::steady_clock::now();
        try {
          uint64_t brute = count_units_bruteforce(2, n);
          BigInt closed = unit_group_order(2, n);
          r.left = std::to_string(brute);
          r.right = closed.str();
          if (BigInt(brute) != closed) r.status = "fail";
        } catch (const resource_limit_error& e) {
          r.status = "skip";
          r.left = e.what();
        }
        r.elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
      });
    }
  }
  if (all || check == "lemma-odd") {
    uint32_t lo = from.value_or(1) | 1, hi = to.value_or(35);
    for (uint32_t n = lo; n <= hi; n += 2)
      add("lemma-odd", "n=" + std::to_string(n), [n] {
        return std::pair{closed_form_odd(n),
                         sandpile_group(build_gamma(2, n), SandpileMethod::minor)};
      });
  }
  if (all || check == "lemma-doubling") {
    uint32_t lo = from.value_or(2), hi = to.value_or(64);
    for (uint32_t n = lo + (lo % 2); n <= hi; n += 2) {
      uint32_t m = n;
      while (m % 2 == 0) m /= 2;
      if (m > 35 && !from) continue;  // default range keeps the odd part small
      add("lemma-doubling", "n=" + std::to_string(n), [n] {
        return std::pair{closed_form_doubling(n),
                         sandpile_group(build_gamma(2, n), SandpileMethod::minor)};
      });
    }
  }
  if (tasks.empty()) throw std::invalid_argument("unknown check: " + check);

  std::vector<CheckResult> results = run_pool(tasks);
  int rc = 0;
  json jout = json::array();
  for (const auto& r : results) {
    if (r.status == "fail") rc = 1;
    if (g.format == "json") {
      json j{{"check", r.check},
             {"params", r.params},
             {"status", r.status},
             {"left", r.left},
             {"right", r.right}};
      if (g.timing) j["elapsed"] = r.elapsed;
      jout.push_back(j);
    } else {
      std::cout << r.check << "\t" << r.params << "\t" << r.status << "\t" << r.left
                << "\t" << r.right;
      if (g.timing) std::cout << "\t" << r.elapsed;
      std::cout << "\n";
    }
  }
  if (g.format == "json") std::cout << jout.dump() << "\n";
  return rc;
}

// ---------------------------------------------------------------------- dump

int cmd_dump(const GlobalOpts& g, const std::string& what, uint32_t p, uint32_t n,
             bool golomb, uint32_t index, bool shift_basis) {
  if (what == "necklaces") return cmd_necklaces(g, p, n, false);
  if (what == "irreducibles") return cmd_polys(g, p, n, "all", false);
  if (what == "map")
    return cmd_map(g, golomb ? "golomb" : "reutenauer", p, n, index, "", false, false);
  if (what == "matrix") {
    BigMatrix m = laplacian(build_gamma(p, n));
    if (shift_basis) m = conjugate_by_shift_basis(m);
    std::cout << m.to_string() << "\n";
    return 0;
  }
  if (what == "orbits") {
    BijectionFamily fam =
        build_family(golomb ? MapKind::golomb : MapKind::reutenauer, p, n, g.field_cap());
    OrbitReport rep = orbit_report(fam, g.max_group_order);
    for (const auto& o : rep.orbits) {
      std::string line;
      for (uint32_t v : o) {
        if (!line.empty()) line += ' ';
        line += rep.universe[v].to_string();
      }
      std::cout << line << "\n";
    }
    return 0;
  }
  throw std::invalid_argument("unknown dump target: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"necklace automorphism groups, de Bruijn sandpiles, circulant quotients"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_flag("--golden", g.golden, "compare table output against the recorded reference data");
  app.add_option("--golden-file", g.golden_file, "compare table output against a TSV file");
  app.add_flag("--timing", g.timing, "append elapsed seconds to verify rows");
  app.add_option("--seed", g.seed, "seed for randomized checks (reserved)");
  app.add_option("--max-group-order", g.max_group_order, "closure size cap")
      ->capture_default_str();
  app.add_option("--max-field-bits", g.max_field_bits, "field enumeration cap, log2")
      ->capture_default_str();

  uint32_t p = 2, n = 4, index = 0, from = 2, to = 0;
  std::string kind = "reutenauer", filter = "all", side = "necklace", method = "minor";
  std::string necklace_text, what, check = "all";
  bool count_only = false, inverse = false, list_params = false, averaging = false;
  bool flip_extended = false, closed_form = false, compare_reutenauer = false;
  bool brute_count = false, golomb = false, shift_basis = false;

  auto* necklaces = app.add_subcommand("necklaces", "aperiodic necklaces of length n");
  necklaces->add_option("-n", n, "length")->required();
  necklaces->add_option("-p", p, "alphabet size (prime)");
  necklaces->add_flag("--count-only", count_only, "print the count only");

  auto* polys = app.add_subcommand("polys", "monic irreducible polynomials of degree n");
  polys->add_option("-n", n, "degree")->required();
  polys->add_option("-p", p, "characteristic");
  polys->add_option("--filter", filter, "all | normal | primitive")
      ->check(CLI::IsMember({"all", "normal", "primitive"}));
  polys->add_flag("--count-only", count_only, "print the count only");

  auto* map = app.add_subcommand("map", "necklace-to-polynomial bijections");
  map->add_option("-n", n, "length")->required();
  map->add_option("-p", p, "characteristic");
  map->add_option("--kind", kind, "reutenauer | golomb")
      ->check(CLI::IsMember({"reutenauer", "golomb"}));
  map->add_option("--index", index, "parameter index");
  map->add_option("--necklace", necklace_text, "evaluate at one necklace");
  map->add_flag("--inverse", inverse, "print polynomial -> necklace");
  map->add_flag("--list-params", list_params, "print the parameter polynomials");

  auto* group = app.add_subcommand("group", "structure of the generated group");
  group->add_option("-n", n, "length")->required();
  group->add_option("-p", p, "characteristic");
  group->add_option("--kind", kind, "reutenauer | golomb")
      ->check(CLI::IsMember({"reutenauer", "golomb"}));
  group->add_option("--side", side, "necklace | poly")
      ->check(CLI::IsMember({"necklace", "poly"}));

  auto* orbits = app.add_subcommand("orbits", "orbit analysis of the group action");
  orbits->add_option("-n", n, "length")->required();
  orbits->add_option("-p", p, "characteristic");
  orbits->add_option("--group", kind, "reutenauer | golomb")
      ->check(CLI::IsMember({"reutenauer", "golomb"}));
  orbits->add_flag("--averaging", averaging, "include averaging edges");
  orbits->add_flag("--flip-extended", flip_extended, "extend the group by 0/1 flip");

  auto* sandpile = app.add_subcommand("sandpile", "sandpile group of the de Bruijn graph");
  sandpile->add_option("-n", n, "vertex count")->required();
  sandpile->add_option("-p", p, "edge fan-out");
  sandpile->add_option("--method", method, "minor | full")
      ->check(CLI::IsMember({"minor", "full"}));
  sandpile->add_flag("--closed-form", closed_form, "use the closed forms (p = 2)");

  auto* circulant = app.add_subcommand("circulant", "circulant unit group and quotient");
  circulant->add_option("-n", n, "size")->required();
  circulant->add_option("-p", p, "characteristic");
  circulant->add_flag("--compare-reutenauer", compare_reutenauer,
                      "exit 1 if the quotient differs from the necklace group");
  circulant->add_flag("--brute-count", brute_count, "also count units exhaustively");

  auto* table = app.add_subcommand("table", "reproduce a reference table");
  table->add_option("which", what, "reutenauer | golomb | sandpile")
      ->required()
      ->check(CLI::IsMember({"reutenauer", "golomb", "sandpile"}));
  table->add_option("--from", from, "first n");
  table->add_option("--to", to, "last n (default: table extent)");

  auto* verify = app.add_subcommand("verify", "cross-check the constructions");
  verify->add_option("check", check, "chan | chp | circulant | lemma-odd | lemma-doubling | all")
      ->check(CLI::IsMember({"chan", "chp", "circulant", "lemma-odd", "lemma-doubling", "all"}));
  std::optional<uint32_t> vfrom, vto, vp;
  verify->add_option("--from", vfrom, "first n");
  verify->add_option("--to", vto, "last n");
  verify->add_option("-p", vp, "characteristic (chp)");

  auto* dump = app.add_subcommand("dump", "bulk export in text form");
  dump->add_option("what", what, "necklaces | irreducibles | map | matrix | orbits")
      ->required()
      ->check(CLI::IsMember({"necklaces", "irreducibles", "map", "matrix", "orbits"}));
  dump->add_option("-n", n, "length")->required();
  dump->add_option("-p", p, "characteristic");
  dump->add_flag("--golomb", golomb, "use the Golomb family");
  dump->add_option("--index", index, "parameter index");
  dump->add_flag("--shift-basis", shift_basis, "conjugate the matrix into the shift basis");

  for (auto* sub : {necklaces, polys, map, group, orbits, sandpile, circulant, table,
                    verify, dump})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(necklaces)) return cmd_necklaces(g, p, n, count_only);
    if (app.got_subcommand(polys)) return cmd_polys(g, p, n, filter, count_only);
    if (app.got_subcommand(map))
      return cmd_map(g, kind, p, n, index, necklace_text, inverse, list_params);
    if (app.got_subcommand(group)) return cmd_group(g, kind, p, n, side);
    if (app.got_subcommand(orbits))
      return cmd_orbits(g, kind, p, n, averaging, flip_extended);
    if (app.got_subcommand(sandpile)) return cmd_sandpile(g, p, n, method, closed_form);
    if (app.got_subcommand(circulant))
      return cmd_circulant(g, p, n, compare_reutenauer, brute_count);
    if (app.got_subcommand(table)) {
      if (to == 0) to = what == "golomb" ? 12 : 15;
      return cmd_table(g, what, from, to);
    }
    if (app.got_subcommand(verify)) return cmd_verify(g, check, vfrom, vto, vp);
    if (app.got_subcommand(dump))
      return cmd_dump(g, what, p, n, golomb, index, shift_basis);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

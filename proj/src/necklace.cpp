#include "ng/necklace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ng/common.hpp"
#include "ng/numth.hpp"

namespace ng {

namespace {

void check_alphabet(uint32_t p) {
  if (p < 2) throw std::invalid_argument("necklace alphabet needs p >= 2");
}

// Index of the lexicographically smallest rotation (leftmost on ties).
size_t min_rotation(std::span<const uint32_t> d) {
  size_t n = d.size();
  size_t best = 0;
  for (size_t s = 1; s < n; ++s) {
    for (size_t i = 0; i < n; ++i) {
      uint32_t a = d[(best + i) % n];
      uint32_t b = d[(s + i) % n];
      if (a != b) {
        if (b < a) best = s;
        break;
      }
    }
  }
  return best;
}

bool is_aperiodic(std::span<const uint32_t> d) {
  size_t n = d.size();
  for (uint64_t q : numth::divisors(n)) {
    if (q == n) continue;
    bool periodic = true;
    for (size_t i = 0; i < n && periodic; ++i)
      periodic = d[i] == d[i % q];
    if (periodic) return false;
  }
  return true;
}

}  // namespace

std::optional<Necklace> Necklace::canonicalize(uint32_t p, std::span<const uint32_t> digits) {
  check_alphabet(p);
  if (digits.empty()) throw std::invalid_argument("empty digit sequence");
  for (uint32_t d : digits)
    if (d >= p) throw std::invalid_argument("digit out of range");
  if (!is_aperiodic(digits)) return std::nullopt;
  size_t s = min_rotation(digits);
  std::vector<uint32_t> out(digits.size());
  for (size_t i = 0; i < digits.size(); ++i) out[i] = digits[(s + i) % digits.size()];
  return Necklace(p, std::move(out));
}

Necklace Necklace::from_string(uint32_t p, std::string_view text) {
  check_alphabet(p);
  std::vector<uint32_t> digits;
  if (text.find(',') != std::string_view::npos) {
    std::string cur;
    for (char ch : std::string(text) + ",") {
      if (ch == ',') {
        if (cur.empty()) throw std::invalid_argument("malformed necklace text");
        digits.push_back(static_cast<uint32_t>(std::stoul(cur)));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur.push_back(ch);
      } else {
        throw std::invalid_argument("malformed necklace text");
      }
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("malformed necklace text");
      digits.push_back(static_cast<uint32_t>(ch - '0'));
    }
  }
  auto v = canonicalize(p, digits);
  if (!v) throw std::invalid_argument("periodic digit sequence is not a necklace");
  return *v;
}

std::string Necklace::to_string() const {
  std::ostringstream os;
  if (p_ <= 10) {
    for (uint32_t d : d_) os << d;
  } else {
    for (size_t i = 0; i < d_.size(); ++i) {
      if (i) os << ',';
      os << d_[i];
    }
  }
  return os.str();
}

bool Necklace::operator<(const Necklace& o) const {
  if (d_.size() != o.d_.size()) return d_.size() < o.d_.size();
  return d_ < o.d_;
}

uint64_t count_aperiodic(uint32_t p, uint32_t n) {
  check_alphabet(p);
  if (n == 0) throw std::invalid_argument("count_aperiodic: n must be >= 1");
  // (1/n) * sum over d | n of mu(d) p^(n/d); guard against 64-bit overflow.
  if (static_cast<double>(n) * std::log2(static_cast<double>(p)) > 62.0)
    throw std::overflow_error("count_aperiodic: p^n exceeds 2^62");
  int64_t acc = 0;
  for (uint64_t d : numth::divisors(n)) {
    int mu = numth::mobius(d);
    if (mu == 0) continue;
    acc += mu * static_cast<int64_t>(numth::checked_pow(p, n / static_cast<uint32_t>(d)));
  }
  if (acc < 0 || acc % n != 0) throw invariant_error("necklace count not divisible by n");
  return static_cast<uint64_t>(acc) / n;
}

namespace {

// Fredricksen-Kessler-Maiorana recursion; visits Lyndon words of length
// dividing n in lexicographic order. Keeping only length exactly n yields
// the aperiodic necklaces, already sorted.
void fkm_rec(uint32_t p, uint32_t n, std::vector<uint32_t>& a, uint32_t t, uint32_t q,
             std::vector<std::vector<uint32_t>>& words) {
  if (t > n) {
    if (q == n) words.emplace_back(a.begin() + 1, a.end());
    return;
  }
  a[t] = a[t - q];
  fkm_rec(p, n, a, t + 1, q, words);
  for (uint32_t v = a[t - q] + 1; v < p; ++v) {
    a[t] = v;
    fkm_rec(p, n, a, t + 1, t, words);
  }
}

}  // namespace

std::vector<Necklace> enumerate_necklaces(uint32_t p, uint32_t n) {
  check_alphabet(p);
  if (n == 0) throw std::invalid_argument("enumerate_necklaces: n must be >= 1");
  uint64_t total = UINT64_MAX;
  try {
    total = numth::checked_pow(p, n);
  } catch (const std::overflow_error&) {
  }
  std::vector<Necklace> out;
  if (total <= (uint64_t{1} << 20)) {
    // Exhaustive filter: walk digit vectors in lexicographic order and keep
    // the ones that are their own canonical form.
    std::vector<uint32_t> d(n, 0);
    while (true) {
      auto v = Necklace::canonicalize(p, d);
      if (v && std::equal(d.begin(), d.end(), v->digits().begin())) out.push_back(*v);
      uint32_t i = n;
      while (i > 0 && d[i - 1] == p - 1) d[--i] = 0;
      if (i == 0) break;
      ++d[i - 1];
    }
  } else {
    std::vector<std::vector<uint32_t>> words;
    std::vector<uint32_t> a(n + 1, 0);
    fkm_rec(p, n, a, 1, 1, words);
    out.reserve(words.size());
    for (auto& w : words) {
      auto v = Necklace::canonicalize(p, w);
      if (!v) throw invariant_error("Lyndon word canonicalized as periodic");
      out.push_back(*v);
    }
  }
  if (out.size() != count_aperiodic(p, n))
    throw invariant_error("necklace enumeration disagrees with the Moebius count");
  return out;
}

std::optional<Necklace> averaging(const Necklace& v) {
  auto d = v.digits();
  std::vector<uint32_t> img(d.size());
  for (size_t i = 0; i < d.size(); ++i) img[i] = (d[i] + d[(i + 1) % d.size()]) % v.p();
  return Necklace::canonicalize(v.p(), img);
}

Necklace flip(const Necklace& v) {
  if (v.p() != 2) throw std::invalid_argument("flip is defined only for p = 2");
  std::vector<uint32_t> img(v.digits().begin(), v.digits().end());
  for (auto& d : img) d ^= 1;
  auto w = Necklace::canonicalize(2, img);
  if (!w) throw invariant_error("flip of an aperiodic necklace is aperiodic");
  return *w;
}

}  // namespace ng

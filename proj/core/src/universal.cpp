#include "divm/universal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace divm {
namespace {

// Exhaustive verification is attempted only while the estimated work
// C(m,kappa) * min(|family|, coupon bound) stays under this many trace
// extractions. Everything the solvers reach at desk scale fits.
constexpr double kVerifyBudget = 6e9;

constexpr std::uint64_t kSeedSalt = 0x9e3779b97f4a7c15ull;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double binomial(int m, int kappa) {
  double r = 1.0;
  for (int i = 1; i <= kappa; ++i) r *= static_cast<double>(m - kappa + i) / i;
  return r;
}

// Target randomized family size; stays within the published bound.
std::size_t randomized_target(int m, int kappa) {
  double per = std::max(8.0, std::ceil(2.5 * kappa * std::log(static_cast<double>(m) + 1.0)));
  return static_cast<std::size_t>(std::ldexp(per, kappa));
}

std::size_t coupon_bound(int kappa) {
  // Expected draws to see all 2^kappa traces of one subset, with slack.
  double t = std::ldexp(1.0, kappa);
  return static_cast<std::size_t>(t * (0.7 * kappa + 4.0)) + 8;
}

bool verification_affordable(int m, int kappa, std::size_t family_size) {
  double per_subset = static_cast<double>(std::min(family_size, coupon_bound(kappa)));
  return binomial(m, kappa) * per_subset <= kVerifyBudget;
}

UniversalFamily power_set_family(int m, int kappa) {
  UniversalFamily f;
  f.ground_size = m;
  f.kappa = kappa;
  f.words_per_member = std::max(1, (m + 63) / 64);
  std::size_t count = std::size_t{1} << m;
  f.bits.assign(count * static_cast<std::size_t>(f.words_per_member), 0);
  for (std::size_t i = 0; i < count; ++i) f.bits[i * f.words_per_member] = i;
  f.verified = true;
  return f;
}

UniversalFamily draw_family(int m, int kappa, std::size_t count, std::uint64_t seed) {
  UniversalFamily f;
  f.ground_size = m;
  f.kappa = kappa;
  f.words_per_member = std::max(1, (m + 63) / 64);
  f.bits.assign(count * static_cast<std::size_t>(f.words_per_member), 0);
  std::mt19937_64 rng(seed);
  const int full_words = m / 64;
  const int tail_bits = m % 64;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t* member = f.bits.data() + i * f.words_per_member;
    for (int w = 0; w < full_words; ++w) member[w] = rng();
    if (tail_bits) member[full_words] = rng() & ((std::uint64_t{1} << tail_bits) - 1);
  }
  return f;
}

#if defined(__BMI2__)
inline std::uint64_t extract_trace(std::uint64_t word, std::uint64_t mask) {
  return __builtin_ia32_pext_di(word, mask);
}
#else
inline std::uint64_t extract_trace(std::uint64_t word, std::uint64_t mask) {
  std::uint64_t out = 0, bit = 1;
  while (mask) {
    std::uint64_t low = mask & (~mask + 1);
    if (word & low) out |= bit;
    bit <<= 1;
    mask ^= low;
  }
  return out;
}
#endif

}  // namespace

long long universal_size_bound(int m, int kappa) {
  double c = std::ldexp(8.0 * (kappa + 1.0) * (kappa + 1.0), kappa);
  double lg = std::log2(std::max(m, 2));
  double by_construction = c * lg;
  double by_power = m >= 62 ? 4.6e18 : std::ldexp(1.0, m);
  return static_cast<long long>(std::min({by_construction, by_power, 4.6e18}));
}

bool verify_universal(const UniversalFamily& family) {
  const int m = family.ground_size;
  const int kappa = family.kappa;
  if (kappa == 0) return family.size() >= 1;
  if (kappa > m) return false;
  const std::size_t traces_needed = std::size_t{1} << kappa;
  std::vector<int> subset(static_cast<std::size_t>(kappa));
  for (int i = 0; i < kappa; ++i) subset[static_cast<size_t>(i)] = i;
  std::vector<char> seen(traces_needed);
  const bool single_word = family.words_per_member == 1;
  for (;;) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t distinct = 0;
    if (single_word) {
      std::uint64_t mask = 0;
      for (int i : subset) mask |= std::uint64_t{1} << i;
      for (std::size_t idx = 0; idx < family.size(); ++idx) {
        std::uint64_t trace = extract_trace(family.bits[idx], mask);
        if (!seen[trace]) {
          seen[trace] = 1;
          if (++distinct == traces_needed) break;
        }
      }
    } else {
      for (std::size_t idx = 0; idx < family.size(); ++idx) {
        std::uint64_t trace = 0;
        for (int b = 0; b < kappa; ++b)
          if (family.member_bit(idx, subset[static_cast<size_t>(b)])) trace |= std::uint64_t{1} << b;
        if (!seen[trace]) {
          seen[trace] = 1;
          if (++distinct == traces_needed) break;
        }
      }
    }
    if (distinct != traces_needed) return false;
    // next kappa-combination in lexicographic order
    int i = kappa - 1;
    while (i >= 0 && subset[static_cast<size_t>(i)] == m - kappa + i) --i;
    if (i < 0) return true;
    ++subset[static_cast<size_t>(i)];
    for (int j = i + 1; j < kappa; ++j)
      subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
  }
}

UniversalFamily construct_universal(int m, int kappa) {
  if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  if (m < 0) throw std::invalid_argument("ground size must be nonnegative");
  if (kappa > m)
    throw std::invalid_argument("kappa exceeds ground size (" + std::to_string(kappa) + " > " +
                                std::to_string(m) + ")");
  if (kappa == 0) {
    UniversalFamily f;
    f.ground_size = m;
    f.kappa = 0;
    f.words_per_member = std::max(1, (m + 63) / 64);
    f.bits.assign(static_cast<std::size_t>(f.words_per_member), 0);  // single empty member
    f.verified = true;
    return f;
  }
  std::size_t target = randomized_target(m, kappa);
  if (m <= 26 && (std::size_t{1} << m) <= target) return power_set_family(m, kappa);

  std::uint64_t base_seed =
      splitmix64(kSeedSalt ^ (static_cast<std::uint64_t>(m) * 0x100000001b3ull + kappa));
  if (!verification_affordable(m, kappa, target)) {
    // Beyond the desk-scale verification envelope: oversample instead.
    // Miss probability is below (m+1)^{-2 kappa} per the union bound.
    UniversalFamily f = draw_family(m, kappa, target * 2, base_seed);
    f.verified = false;
    return f;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    UniversalFamily f = draw_family(m, kappa, target, splitmix64(base_seed + attempt));
    if (verify_universal(f)) {
      f.verified = true;
      return f;
    }
  }
  throw std::logic_error("universal family construction failed to verify after 64 draws");
}

const UniversalFamily& cached_universal(int m, int kappa) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, UniversalFamily> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(m, kappa);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, construct_universal(m, kappa)).first;
  return it->second;
}

void save_universal(const UniversalFamily& family, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << family.ground_size << " " << family.kappa << " " << family.size() << "\n";
  const int nibbles = std::max(1, (family.ground_size + 3) / 4);
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::string hex(static_cast<std::size_t>(nibbles), '0');
    for (int nb = 0; nb < nibbles; ++nb) {
      int word = nb / 16, shift = (nb % 16) * 4;
      unsigned digit = (family.member(i)[word] >> shift) & 0xf;
      hex[static_cast<std::size_t>(nibbles - 1 - nb)] = "0123456789abcdef"[digit];
    }
    out << hex << "\n";
  }
}

std::optional<UniversalFamily> load_universal(const std::string& path, int m, int kappa) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  int fm = -1, fk = -1;
  std::size_t count = 0;
  if (!(in >> fm >> fk >> count)) return std::nullopt;
  if (fm != m || fk != kappa) return std::nullopt;
  UniversalFamily f;
  f.ground_size = m;
  f.kappa = kappa;
  f.words_per_member = std::max(1, (m + 63) / 64);
  f.bits.assign(count * static_cast<std::size_t>(f.words_per_member), 0);
  std::string hex;
  for (std::size_t i = 0; i < count; ++i) {
    if (!(in >> hex)) return std::nullopt;
    std::uint64_t* member = f.bits.data() + i * f.words_per_member;
    int nb = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nb) {
      char c = *it;
      unsigned digit;
      if (c >= '0' && c <= '9') digit = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') digit = static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') digit = static_cast<unsigned>(c - 'A' + 10);
      else return std::nullopt;
      if (nb / 16 >= f.words_per_member) {
        if (digit != 0) return std::nullopt;
        continue;
      }
      member[nb / 16] |= static_cast<std::uint64_t>(digit) << ((nb % 16) * 4);
    }
    if (m % 64 != 0 && (member[f.words_per_member - 1] >> (m % 64)) != 0) return std::nullopt;
  }
  if (verification_affordable(m, kappa, f.size())) {
    if (!verify_universal(f)) return std::nullopt;
    f.verified = true;
  }
  return f;
}

}  // namespace divm

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace divm {

/// Family of subsets of {0..m-1} whose traces on every kappa-subset S
/// realize all 2^kappa subsets of S. Members are bitsets stored as
/// little-endian 64-bit word blocks.
struct UniversalFamily {
  int ground_size = 0;  // m
  int kappa = 0;
  int words_per_member = 0;
  std::vector<std::uint64_t> bits;
  /// True when coverage was established exhaustively (or the family is the
  /// full power set). Construction beyond the verification budget yields
  /// an oversampled family with verified == false.
  bool verified = false;

  std::size_t size() const {
    return words_per_member == 0 ? 0 : bits.size() / static_cast<std::size_t>(words_per_member);
  }
  const std::uint64_t* member(std::size_t index) const {
    return bits.data() + index * static_cast<std::size_t>(words_per_member);
  }
  bool member_bit(std::size_t index, int i) const {
    return (member(index)[i >> 6] >> (i & 63)) & 1u;
  }
};

/// Published size bound: construct_universal(m, kappa) returns at most
/// min(2^m, C(kappa) * log2(max(m, 2))) members with
/// C(kappa) = 8 * 2^kappa * (kappa+1)^2.
long long universal_size_bound(int m, int kappa);

/// Builds an (m, kappa)-universal family. Small ground sets get the full
/// power set; otherwise a seeded random family is drawn and exhaustively
/// verified (redrawn on failure), which is deterministic end to end. When
/// exhaustive verification would exceed the desk-scale budget the family
/// is drawn at doubled size and left unverified. Throws
/// std::invalid_argument unless 0 <= kappa <= m.
UniversalFamily construct_universal(int m, int kappa);

/// Exhaustive coverage check over all kappa-subsets of the ground set.
bool verify_universal(const UniversalFamily& family);

/// Process-wide memoized construction (thread-safe).
const UniversalFamily& cached_universal(int m, int kappa);

/// On-disk cache, one file per (m, kappa): header line "m kappa count",
/// then one hex-encoded member per line.
void save_universal(const UniversalFamily& family, const std::string& path);
/// Loads and re-verifies (within budget); nullopt on mismatch, parse
/// failure or failed verification.
std::optional<UniversalFamily> load_universal(const std::string& path, int m, int kappa);

}  // namespace divm

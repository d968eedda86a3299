#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "crucialis/word.hpp"

namespace crucialis {

enum class Family {
  Zimin,         // Z_n, k = 2
  ZiminK,        // Z_n^k
  DoublingCube,  // 3*2^(n-1) - 1, k = 3
  DoublingK,     // k(k-1)^(n-1) - 1
  Wn,            // 9n - 10, k = 3
  WnK,           // k^2(n-1) - 1
  Dn,            // 4n - 7, k = 2
  En,            // 9n - 13, k = 3
  DnK,           // k^2(n-1) - k - 1
  GreedyOptimalSmall,
};

inline constexpr Family kAllFamilies[] = {
    Family::Zimin, Family::ZiminK, Family::DoublingCube, Family::DoublingK, Family::Wn,
    Family::WnK,   Family::Dn,     Family::En,           Family::DnK,       Family::GreedyOptimalSmall};

/// Command-line name: zimin, zimink, doubling, doublingk, wn, wnk, dn, en, dnk, smallopt.
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// The exponent a family is tied to, if any (e.g. En is always k = 3).
std::optional<int> fixed_exponent(Family f);
bool in_domain(Family f, int n, int k);

/// Closed-form length, saturating at UINT64_MAX. Throws DomainError outside the domain.
std::uint64_t family_length(Family f, int n, int k);

struct ConstructionLimits {
  std::uint64_t max_length = 1'000'000;
};

/// Builds the family member for (n, k). Fixed-exponent families require k to
/// match. Throws DomainError outside the domain, CapacityError above the cap.
Word construct(Family f, int n, int k, const ConstructionLimits& limits = {});

Word construct_zimin(int n, int k, const ConstructionLimits& limits = {});
Word construct_doubling_cube(int n, const ConstructionLimits& limits = {});
Word construct_doubling_k(int n, int k, const ConstructionLimits& limits = {});
Word construct_W(int n, int k = 3);
Word construct_D(int n, int k);
Word construct_E(int n);

/// The blocks Omega_1 ... Omega_{k-1}, Omega'_k whose concatenation is the word.
std::vector<Word> construct_W_blocks(int n, int k);
std::vector<Word> construct_D_blocks(int n, int k);
std::vector<Word> construct_E_blocks(int n);

/// Stored optimal crucial abelian-cube-free words of length 2, 5, 11, 20.
Word optimal_small_word(int n);

/// Length produced by the greedy scheme: sum_{j<=(n-1)/2} 2*3^j + sum_{1<=j<=n/2} 3^j.
std::uint64_t greedy_length(int n);

}  // namespace crucialis

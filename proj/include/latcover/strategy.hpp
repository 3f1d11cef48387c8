#pragma once

// Constructive covers of lattice simplices by dilations of modulus >= n - 1.
// Every constructed cover is certified before it is returned.

#include "latcover/coverage.hpp"

#include <optional>
#include <string>

namespace latcover {

enum class CaseKind {
  AllNonNegative,
  Dim3Special,
  CaseA,
  CaseB,
  CaseC,
  SupplementarySearch,
  Unsupported,
};

struct CaseTag {
  CaseKind kind = CaseKind::Unsupported;
  Integer k;  // AllNonNegative
  // Dim3Special, CaseB, CaseC: relabeling[new index] = original index.
  std::vector<std::size_t> relabeling;
  // Dim3Special, CaseB: the index set S, in relabeled indices.
  std::vector<std::size_t> s;
  std::size_t rounds = 0;  // SupplementarySearch, Unsupported from search
  std::string reason;      // Unsupported
};

std::string to_string(const CaseTag& tag);

struct StrategyReport {
  CaseTag case_tag;
  Cover cover;
  Certificate certificate;
  ACoefficients a_table;
  // Dilations added by search_supplementary, in order (seeds included).
  std::size_t added = 0;
};

struct SearchBudget {
  std::size_t max_rounds = 64;
  // Class points tried per vertex slot during local improvement.
  std::size_t max_candidates_per_round = 96;
  // Residue classes whose hull contains the witness, examined per round.
  std::size_t residue_class_cap = 12;
  // Uniform samples drawn to score candidates (per refill).
  std::uint64_t score_samples = 200'000;
  std::uint64_t seed = 1;
};

/// dim(P) = 3 and l(P) >= 2, else PreconditionError.
StrategyReport cover_dim3(const LatticeSimplex& p);

/// dim(P) = 4, l(P) >= 3 and no edge of length 5, else PreconditionError.
StrategyReport cover_dim4(const LatticeSimplex& p);

/// Looks for k-dilations inside P that contain the current certificate
/// witness and adds them until the cover is certified or the budget runs out
/// (Unsupported, carrying the last witness). `seeds` are tried first, each
/// one added when it contains the current witness; that does not count as a
/// search round.
StrategyReport search_supplementary(const LatticeSimplex& p, const Integer& k, const Cover& base,
                                    const SearchBudget& budget = {},
                                    const std::vector<Dilation>& seeds = {});

/// Dispatch on dimension: dim 3 -> cover_dim3; dim 4 -> cover_dim4, or the
/// apex 3-dilations plus search_supplementary when an edge has length 5.
/// Other dimensions throw PreconditionError.
StrategyReport cover_simplex(const LatticeSimplex& p, const SearchBudget& budget = {});

/// Smallest modulus across the cover; used for the >= n - 1 contract.
Integer min_modulus(const Cover& cover);

/// Randomized realization of an edge-length profile as a lattice simplex in
/// Z^dim. Deterministic for a fixed seed. Returns nullopt when a trial budget
/// is exhausted or the profile fails the necessary condition
/// gcd(l_ij, l_ik) | l_jk for every triangle.
std::optional<LatticeSimplex> realize_edge_profile(const EdgeLengthMatrix& lengths, std::size_t dim,
                                                   std::size_t trials, std::uint64_t seed);

/// The necessary triangle condition above.
bool profile_gcd_consistent(const EdgeLengthMatrix& lengths);

}  // namespace latcover

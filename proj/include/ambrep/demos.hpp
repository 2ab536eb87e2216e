#pragma once

#include <string>
#include <vector>

#include "ambrep/crisp.hpp"

namespace ambrep::demos {

struct SegmentsReport {
  std::size_t n = 0;
  std::size_t size = 0;
  /// Names of [0, 2/6], [4/6, 1] and their meet (scaled to the grid).
  std::string meet_left, meet_right, meet;
  /// R relates [a,b] to 1 when 1/2 ∉ [a,b]; R' when [a,b] ⊂ (1/3, 2/3).
  CrispRep r, r_prime;
  Verdict r_arrow, r_prime_arrow;

  std::string text() const;
};

/// Throws BadGrid unless n is a positive multiple of 6.
SegmentsReport demo_segments(std::size_t n = 6);

struct GalleryEntry {
  std::string name;
  std::vector<std::string> dual_elements;  ///< "name = {members}"
  std::vector<std::string> dual_covers;    ///< "a < b"
  bool iso_to_opposite = false;
  std::string iso_reason;
  /// Outcome of validating P(x, y) = [y ≪ x] on L × L^op.
  bool compat_valid = false;
  std::string compat_clause;
  std::string witness_x, witness_y;
};

struct GalleryReport {
  std::vector<GalleryEntry> entries;
  std::string text() const;
};

/// Chains C2..C5, D4, M3, B8.
GalleryReport demo_dual_gallery();

}  // namespace ambrep::demos

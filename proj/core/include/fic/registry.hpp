#pragma once

#include "fic/chow.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fic {

// The named deformation classes the engine knows about.
struct Registry {
  std::vector<FanoData> threefolds;

  const FanoData& by_name(std::string_view name) const;
  bool has(std::string_view name) const;

  // The built-in table: P3, Q, Y1..Y5, X3..X12.
  static Registry builtin();
  static Registry from_json_text(std::string_view text);
  static Registry load_file(const std::string& path);
};

// FNV-1a over the canonical row serialization; stable across runs.
std::string registry_hash(const Registry& reg);

}  // namespace fic

#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "parafam/diagram.hpp"

namespace parafam {

/// A non-archimedean place: residue field size q = p^k and the local index
/// of the group there.
struct Place {
  std::string id;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::shared_ptr<const LocalIndex> local_index;

  /// Validates q as a prime power and derives p. Throws DomainError naming
  /// the place otherwise.
  static Place make(std::string id, std::uint64_t q, std::shared_ptr<const LocalIndex> index);

  const LocalIndex& diagram() const { return *local_index; }
};

}  // namespace parafam

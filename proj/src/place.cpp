#include "parafam/place.hpp"

#include "parafam/error.hpp"
#include "parafam/reductive.hpp"

namespace parafam {

Place Place::make(std::string id, std::uint64_t q, std::shared_ptr<const LocalIndex> index) {
  auto p = prime_power_base(q);
  if (!p) throw DomainError("invalid residue size " + std::to_string(q) + " at place " + id);
  if (!index) throw DomainError("place " + id + " has no local index");
  return Place{std::move(id), q, *p, std::move(index)};
}

}  // namespace parafam

#include "parafam/group_spec.hpp"

#include <charconv>

#include "parafam/error.hpp"

namespace parafam {

GroupSpec GroupSpec::split(char family, int rank) {
  GroupSpec spec{Form::split, family, rank, std::nullopt};
  spec.validate();
  return spec;
}

GroupSpec GroupSpec::twisted(TwistedIndex index) {
  GroupSpec spec{Form::twisted, 'A', index == TwistedIndex::c_bc1 ? 2 : 3, index};
  spec.validate();
  return spec;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  constexpr std::string_view split_prefix = "split:";
  constexpr std::string_view twisted_prefix = "twisted:";
  if (text.starts_with(split_prefix)) {
    auto body = text.substr(split_prefix.size());
    if (body.size() < 2) throw DomainError("unsupported type: " + std::string(text));
    int rank = 0;
    auto [ptr, ec] = std::from_chars(body.data() + 1, body.data() + body.size(), rank);
    if (ec != std::errc{} || ptr != body.data() + body.size())
      throw DomainError("unsupported type: " + std::string(text));
    return split(body[0], rank);
  }
  if (text.starts_with(twisted_prefix)) {
    auto body = text.substr(twisted_prefix.size());
    if (body == "C-BC1") return twisted(TwistedIndex::c_bc1);
    if (body == "C-B2") return twisted(TwistedIndex::c_b2);
  }
  throw DomainError("unsupported type: " + std::string(text));
}

void GroupSpec::validate() const {
  auto fail = [this] {
    throw DomainError("unsupported type: " + std::string(1, family) + std::to_string(rank));
  };
  if (form == Form::twisted) {
    if (!twisted_index) throw DomainError("unsupported type: twisted form without a local index");
    int expected = *twisted_index == TwistedIndex::c_bc1 ? 2 : 3;
    if (family != 'A' || rank != expected) fail();
    return;
  }
  if (twisted_index) throw DomainError("unsupported type: split form with a twisted index");
  switch (family) {
    case 'A': if (rank < 1) fail(); break;
    case 'B': if (rank < 3) fail(); break;
    case 'C': if (rank < 2) fail(); break;
    case 'D': if (rank < 4) fail(); break;
    case 'E': if (rank < 6 || rank > 8) fail(); break;
    case 'F': if (rank != 4) fail(); break;
    case 'G': if (rank != 2) fail(); break;
    default: fail();
  }
}

std::string GroupSpec::name() const {
  if (form == Form::twisted) return "twisted:" + to_string(*twisted_index);
  return "split:" + std::string(1, family) + std::to_string(rank);
}

std::string to_string(TwistedIndex index) {
  return index == TwistedIndex::c_bc1 ? "C-BC1" : "C-B2";
}

}  // namespace parafam

#pragma once
#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chv {

using VarId = std::uint32_t;

// Global registry of indeterminate names. Ids are assigned in creation order,
// which fixes the variable ordering used by the graded-lex term order; all
// canonical forms therefore depend only on the order in which names first
// appear in a run.
class Interner {
 public:
  static Interner& instance();

  VarId id_of(std::string_view name);           // interns if absent
  bool contains(std::string_view name) const;   // lookup without interning
  const std::string& name_of(VarId id) const;
  std::size_t size() const;

  // Testing only: forgets all names so fixtures get a reproducible ordering.
  void reset();

 private:
  Interner() = default;
  mutable std::shared_mutex mu_;
  std::deque<std::string> names_;  // stable addresses back the map keys
  std::unordered_map<std::string_view, VarId> ids_;
};

inline VarId var(std::string_view name) { return Interner::instance().id_of(name); }

}  // namespace chv

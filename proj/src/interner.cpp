#include "chv/interner.hpp"

#include <mutex>
#include <stdexcept>

namespace chv {

Interner& Interner::instance() {
  static Interner it;
  return it;
}

VarId Interner::id_of(std::string_view name) {
  {
    std::shared_lock lk(mu_);
    auto hit = ids_.find(name);
    if (hit != ids_.end()) return hit->second;
  }
  std::unique_lock lk(mu_);
  auto hit = ids_.find(name);
  if (hit != ids_.end()) return hit->second;
  names_.emplace_back(name);
  VarId id = static_cast<VarId>(names_.size() - 1);
  ids_.emplace(std::string_view(names_.back()), id);
  return id;
}

bool Interner::contains(std::string_view name) const {
  std::shared_lock lk(mu_);
  return ids_.count(name) > 0;
}

const std::string& Interner::name_of(VarId id) const {
  std::shared_lock lk(mu_);
  if (id >= names_.size()) throw std::out_of_range("unknown indeterminate id");
  return names_[id];
}

std::size_t Interner::size() const {
  std::shared_lock lk(mu_);
  return names_.size();
}

void Interner::reset() {
  std::unique_lock lk(mu_);
  ids_.clear();
  names_.clear();
}

}  // namespace chv

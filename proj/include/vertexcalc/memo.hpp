#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace vertexcalc::detail {

/// Thread-safe memo table. Values for a key are always identical, so a lost
/// race on insertion is harmless: the first stored value wins.
template <class Key, class Value, class Less = std::less<Key>>
class Memo {
 public:
  std::optional<Value> find(const Key& k) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(k);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& k, Value v) {
    std::unique_lock lock(mu_);
    return table_.try_emplace(k, std::move(v)).first->second;
  }

  template <class Fn>
  Value get_or_compute(const Key& k, Fn&& compute) {
    if (auto hit = find(k)) return *hit;
    return insert(k, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value, Less> table_;
};

}  // namespace vertexcalc::detail

#include "maxsym/diffalg/symbol.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace maxsym::diffalg {

namespace {

struct SymbolInfo {
  std::string name;
  bool constant = false;
};

class Registry {
 public:
  Registry() {
    // Must match the rank constants in sym::.
    for (const auto* n : {"q", "r", "s", "u", "v"}) add(n, false);
    add("W", true);
    for (const auto* n : {"h", "I", "J", "E", "rho", "B", "w", "y"}) add(n, false);
  }

  Symbol add(std::string_view name, bool constant) {
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) {
      if (infos_[it->second].constant != constant)
        throw std::invalid_argument("symbol '" + std::string(name) +
                                    "' re-registered with a different constant flag");
      return Symbol(it->second);
    }
    if (infos_.size() >= std::numeric_limits<std::uint16_t>::max())
      throw std::length_error("symbol registry full");
    if (name.empty()) throw std::invalid_argument("empty symbol name");
    auto rank = static_cast<std::uint16_t>(infos_.size());
    infos_.push_back({std::string(name), constant});
    index_.emplace(std::string(name), rank);
    return Symbol(rank);
  }

  std::optional<Symbol> find(std::string_view name) const {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) return Symbol(it->second);
    return std::nullopt;
  }

  const SymbolInfo& info(Symbol s) const {
    std::shared_lock lock(mutex_);
    if (s.rank() >= infos_.size()) throw std::out_of_range("unregistered symbol rank");
    return infos_[s.rank()];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<SymbolInfo> infos_;  // deque keeps references stable
  std::unordered_map<std::string, std::uint16_t> index_;
};

Registry& registry() {
  static Registry instance;
  return instance;
}

}  // namespace

const std::string& Symbol::name() const { return registry().info(*this).name; }
bool Symbol::is_constant() const { return registry().info(*this).constant; }

Symbol register_symbol(std::string_view name, bool constant) {
  return registry().add(name, constant);
}

std::optional<Symbol> find_symbol(std::string_view name) { return registry().find(name); }

Symbol symbol(std::string_view name) {
  if (auto s = find_symbol(name)) return *s;
  throw std::invalid_argument("unknown symbol '" + std::string(name) + "'");
}

}  // namespace maxsym::diffalg
